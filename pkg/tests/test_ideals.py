import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from binedge.errors import InvalidInput
from binedge.graph import Graph, labeled_connected_graphs
from binedge.groebner import NormalForm, buchberger, reduce
from binedge.ideals import (
    IdealSpec,
    bei_path_binomials,
    closed_form_gb_bei,
    generators,
    membership_bei,
    path_binomial_pbei,
    s_set_bei,
    s_set_pbei,
    u_pi,
    witness_sigma,
)
from binedge.monomials import Binomial, LexOrder, Monomial, all_orders, binom, mono

GRAPHS4 = [G for n in range(2, 5) for G in labeled_connected_graphs(n)]


class TestGenerators:
    def test_paw(self, paw):
        bei = generators(IdealSpec(paw, "bei"))
        pbei = generators(IdealSpec(paw, "pbei"))
        assert len(bei) == len(pbei) == 4
        assert binom(4, "x2*y4 - x4*y2") in bei
        assert binom(4, "x2*x4 - y2*y4") in pbei

    def test_edgeless(self):
        assert generators(IdealSpec(Graph(3), "bei")) == []

    def test_bad_kind(self, paw):
        with pytest.raises(InvalidInput):
            IdealSpec(paw, "toric")


class TestUPi:
    def test_edge(self):
        assert u_pi((1, 2, 3, 4), (1, 2)) == Monomial.one(4)

    def test_interior_before_start(self):
        assert u_pi((2, 1, 4, 3), (1, 2, 4)) == mono(4, "y2")
        assert u_pi((1, 2, 3, 4), (3, 2, 4)) == mono(4, "y2")

    def test_interior_after_end(self):
        assert u_pi((1, 3, 2), (1, 2, 3)) == mono(3, "x2")

    def test_interior_between(self):
        with pytest.raises(InvalidInput):
            u_pi((1, 2, 3, 4), (1, 2, 4))


class TestClosedForm:
    def test_k2(self):
        f = binom(2, "x1*y2 - x2*y1")
        assert closed_form_gb_bei(Graph.complete(2), (1, 2)) == [f]
        # leading term follows the order, so the sign flips with sigma
        assert closed_form_gb_bei(Graph.complete(2), (2, 1)) == [-f]

    def test_path_graph(self):
        P = Graph.path(3)
        gb = closed_form_gb_bei(P, (1, 2, 3))
        assert gb == buchberger(generators(IdealSpec(P, "bei")), LexOrder.identity(3))
        # (1,2,3) has its interior between the endpoints, so no y2 multiple
        assert binom(3, "x1*y3 - x3*y1").scale(mono(3, "y2")) not in gb
        gb = closed_form_gb_bei(P, (2, 1, 3))
        assert binom(3, "x1*y3 - x3*y1").scale(mono(3, "y2")) in gb

    @pytest.mark.parametrize("G", GRAPHS4, ids=str)
    def test_matches_buchberger(self, G):
        gens = generators(IdealSpec(G, "bei"))
        for sigma in itertools.permutations(range(1, G.n + 1)):
            assert closed_form_gb_bei(G, sigma) == buchberger(gens, LexOrder(sigma))


class TestSSets:
    def test_bei_counts(self, paw):
        assert len(s_set_bei(paw)) == 16
        assert set(s_set_bei(Graph.complete(2))) == {binom(2, "x1*y2 - x2*y1"), binom(2, "x2*y1 - x1*y2")}

    def test_pbei_counts(self, paw):
        assert len(s_set_pbei(paw)) == 92
        assert set(s_set_pbei(Graph.complete(2))) == {binom(2, "x1*x2 - y1*y2"), binom(2, "y1*y2 - x1*x2")}
        assert len(s_set_pbei(Graph.complete(3))) == 42

    def test_duplicate_paths_collapse(self, paw):
        t = {1: "x", 3: "y"}
        assert path_binomial_pbei((2, 1, 3, 2, 4), t, 4) == path_binomial_pbei((2, 3, 1, 2, 4), t, 4)

    @pytest.mark.parametrize("G", GRAPHS4, ids=str)
    def test_closed_under_negation(self, G):
        for S in (s_set_bei(G), s_set_pbei(G)):
            assert {-f for f in S} == set(S)

    @pytest.mark.parametrize("G", GRAPHS4, ids=str)
    @pytest.mark.parametrize("kind", ["bei", "pbei"])
    def test_members_of_ideal(self, G, kind):
        S = s_set_bei(G) if kind == "bei" else s_set_pbei(G)
        gens = generators(IdealSpec(G, kind))
        for o in all_orders(G.n)[:: max(1, len(all_orders(G.n)) // 6)]:
            gb = buchberger(gens, o)
            assert all(reduce(f, gb, o) is None for f in S)

    @pytest.mark.parametrize("G", GRAPHS4, ids=str)
    def test_step1_witness(self, G):
        for f, w, t in bei_path_binomials(G):
            sigma = witness_sigma(G.n, w, t)
            gb = closed_form_gb_bei(G, sigma)
            assert f in gb or -f in gb


class TestPathBinomialPbei:
    def test_edge(self):
        assert path_binomial_pbei((1, 2), {}, 3) == binom(3, "x1*x2 - y1*y2")

    def test_even(self):
        assert path_binomial_pbei((1, 2, 3), {2: "x"}, 3) == binom(3, "x1*x2*y3 - x2*x3*y1")

    def test_even_closed_is_zero(self):
        assert path_binomial_pbei((1,), {}, 3) is None
        assert path_binomial_pbei((1, 2, 1), {2: "x"}, 3) is None

    def test_odd_closed(self):
        assert path_binomial_pbei((1, 2, 3, 1), {2: "y", 3: "y"}, 3) == binom(3, "x1^2*y2*y3 - y1^2*y2*y3")

    def test_assignment_must_match_interior(self):
        with pytest.raises(InvalidInput):
            path_binomial_pbei((1, 2, 3), {}, 3)
        with pytest.raises(InvalidInput):
            path_binomial_pbei((1, 2, 3), {2: "z"}, 3)


class TestMembershipBei:
    def test_examples(self, paw):
        assert membership_bei(paw, binom(4, "x1*y3*x4 - x3*y1*x4"))
        assert not membership_bei(paw, binom(4, "x1*y4 - x4*y1"))
        assert all(membership_bei(paw, g) for g in generators(IdealSpec(paw, "bei")))

    def test_rejects_inhomogeneous(self, paw):
        with pytest.raises(InvalidInput):
            membership_bei(paw, binom(4, "x1*y2 - x1*x2"))


def random_homogeneous_bei(rng, n, degree):
    """Random pair of monomials sharing letter and vertex degrees."""
    while True:
        verts = [rng.randint(1, n) for _ in range(degree)]
        letters = [rng.choice("xy") for _ in range(degree)]
        perm = letters[:]
        rng.shuffle(perm)
        a = Monomial.from_vars(n, [v for v, c in zip(verts, letters) if c == "x"], [v for v, c in zip(verts, letters) if c == "y"])
        b = Monomial.from_vars(n, [v for v, c in zip(verts, perm) if c == "x"], [v for v, c in zip(verts, perm) if c == "y"])
        if a != b:
            return Binomial(a, b)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(GRAPHS4 + [Graph.from_edges(4, [(1, 2), (3, 4)])]), st.integers(2, 6), st.integers(0, 2**32))
def test_membership_bei_matches_normal_form(G, degree, seed):
    rng = random.Random(seed)
    nf = NormalForm(buchberger(generators(IdealSpec(G, "bei")), LexOrder.identity(G.n)), LexOrder.identity(G.n))
    f = random_homogeneous_bei(rng, G.n, degree)
    assert membership_bei(G, f) == nf.contains(f)
