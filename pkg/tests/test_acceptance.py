"""Acceptance criteria, one marked group per criterion.

Run ``pytest tests/test_acceptance.py`` and read the "acceptance criteria"
section at the end of the output.
"""
import itertools
import json
import random
import time

import pytest

from binedge.cli import main
from binedge.complete import lambda_basis, normal_form_kn
from binedge.graph import Graph, Walk, enumerate_minimal_paths, labeled_connected_graphs
from binedge.graver import check
from binedge.groebner import NormalForm, buchberger, reduce
from binedge.ideals import IdealSpec, closed_form_gb_bei, generators, membership_bei
from binedge.monomials import Binomial, LexOrder, Monomial, all_orders

PAW_EDGES = "1-2,1-3,2-3,2-4"
SMALL = [G for n in range(1, 5) for G in labeled_connected_graphs(n)]

PAW_WEAK = [(1,), (2,), (3,), (4,), (1, 2), (1, 3), (2, 3), (2, 4), (1, 2, 4), (3, 2, 4)]
PAW_MINIMAL = PAW_WEAK[:8] + [
    (1, 2, 3), (1, 2, 4), (1, 3, 2), (2, 1, 3), (3, 2, 4),
    (1, 2, 3, 1), (1, 3, 2, 4), (2, 1, 3, 2), (3, 1, 2, 3), (3, 1, 2, 4),
    (2, 1, 3, 2, 4), (2, 3, 1, 2, 4),
    (4, 2, 1, 3, 2, 4),
]


def with_inverses(paths):
    return {tuple(p) for p in paths} | {tuple(reversed(p)) for p in paths}


def cli_json(capsys, *argv):
    code = main([*argv, "--format", "json"])
    out = capsys.readouterr().out
    assert code == 0
    return json.loads(out)


@pytest.fixture(scope="module")
def bei_reports():
    start = time.perf_counter()
    reports = [check(IdealSpec(G, "bei")) for G in SMALL]
    return reports, time.perf_counter() - start


@pytest.fixture(scope="module")
def pbei_reports():
    return [check(IdealSpec(G, "pbei")) for G in SMALL]


@pytest.mark.criterion(1, "paw graph BEI S-set has 16 elements")
def test_c1_paw_bei(capsys):
    start = time.perf_counter()
    d = cli_json(capsys, "sset", "--edges", PAW_EDGES, "--kind", "bei")
    elapsed = time.perf_counter() - start
    assert d["count"] == 16
    assert {tuple(p) for p in d["paths"]} == with_inverses(PAW_WEAK)
    assert elapsed < 1.0


@pytest.mark.criterion(2, "paw graph PBEI S-set has 92 elements")
def test_c2_paw_pbei(capsys):
    start = time.perf_counter()
    d = cli_json(capsys, "sset", "--edges", PAW_EDGES, "--kind", "pbei")
    elapsed = time.perf_counter() - start
    assert d["count"] == 92
    assert {tuple(p) for p in d["paths"]} == with_inverses(PAW_MINIMAL)
    assert len(PAW_MINIMAL) == 21
    assert elapsed < 5.0


@pytest.mark.criterion(3, "S = Graver = lex UGB for BEI on connected graphs, n <= 4")
def test_c3_bei_theorem(bei_reports):
    reports, elapsed = bei_reports
    assert len(reports) == 44
    failures = [(str(r.graph), r.witnesses) for r in reports if not r.passed]
    assert failures == []
    assert all(r.degree_bound == r.graph.n + 1 for r in reports)
    assert elapsed < 120


@pytest.mark.criterion(4, "closed-form BEI basis equals Buchberger")
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_c4_closed_form_exhaustive(n):
    for G in labeled_connected_graphs(n):
        gens = generators(IdealSpec(G, "bei"))
        for sigma in itertools.permutations(range(1, n + 1)):
            assert closed_form_gb_bei(G, sigma) == buchberger(gens, LexOrder(sigma)), (G, sigma)


FIVE_VERTEX = [
    Graph.complete(5),
    Graph.cycle(5),
    Graph.path(5),
    Graph.from_edges(5, [(1, 2), (1, 3), (2, 3), (2, 4), (4, 5)]),
    Graph.from_edges(5, [(1, 2), (1, 3), (1, 4), (1, 5)]),
    Graph.from_edges(5, [(1, 2), (2, 3), (3, 4), (4, 1), (2, 5), (4, 5)]),
]


@pytest.mark.criterion(4, "closed-form BEI basis equals Buchberger")
@pytest.mark.parametrize("G", FIVE_VERTEX, ids=str)
def test_c4_closed_form_n5(G):
    rng = random.Random(str(G))
    gens = generators(IdealSpec(G, "bei"))
    for _ in range(20):
        sigma = tuple(rng.sample(range(1, 6), 5))
        assert closed_form_gb_bei(G, sigma) == buchberger(gens, LexOrder(sigma)), sigma


@pytest.mark.criterion(5, "Lambda basis equals Buchberger for I_{K_n}")
@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_c5_lambda(n):
    gens = generators(IdealSpec(Graph.complete(n), "pbei"))
    if n <= 4:
        orders = all_orders(n, with_L=True)
        assert len(orders) == len(list(itertools.permutations(range(n)))) * 2**n
    else:
        rng = random.Random(5)
        orders = [
            LexOrder(tuple(rng.sample(range(1, 6), 5)), frozenset(v for v in range(1, 6) if rng.random() < 0.5))
            for _ in range(50)
        ]
    for o in orders:
        assert lambda_basis(n, o) == buchberger(gens, o), str(o)


def monomials_up_to(n, degree):
    for d in range(degree + 1):
        for combo in itertools.combinations_with_replacement(range(2 * n), d):
            e = [0] * (2 * n)
            for k in combo:
                e[k] += 1
            yield Monomial(tuple(e[:n]), tuple(e[n:]))


@pytest.mark.criterion(6, "closed-form K_n normal forms match generic reduction")
@pytest.mark.parametrize("n", [2, 3, 4])
def test_c6_normal_forms(n):
    o = LexOrder.identity(n)
    gb = buchberger(generators(IdealSpec(Graph.complete(n), "pbei")), o)
    count = 0
    for m in monomials_up_to(n, 6):
        assert normal_form_kn(m) == reduce(m, gb, o), m
        count += 1
    assert count == sum(1 for _ in itertools.combinations_with_replacement(range(2 * n + 1), 6))


MEMBERSHIP_CORPUS = [
    Graph.from_edges(4, [(1, 2), (1, 3), (2, 3), (2, 4)]),
    Graph.complete(2),
    Graph.complete(3),
    Graph.complete(4),
    Graph.path(4),
    Graph.cycle(4),
    Graph.from_edges(4, [(1, 2), (1, 3), (1, 4)]),
    Graph.from_edges(4, [(1, 2), (3, 4)]),
    Graph.cycle(5),
    Graph.from_edges(5, [(1, 2), (1, 3), (2, 3), (2, 4), (4, 5)]),
]


def random_multihomogeneous(rng, n):
    """Two distinct monomials with the same x-degree and vertex degrees."""
    while True:
        degree = rng.randint(1, 6)
        verts = [rng.randint(1, n) for _ in range(degree)]
        letters = [rng.choice("xy") for _ in range(degree)]
        other = letters[:]
        rng.shuffle(other)
        terms = []
        for ls in (letters, other):
            xs = [v for v, c in zip(verts, ls) if c == "x"]
            ys = [v for v, c in zip(verts, ls) if c == "y"]
            terms.append(Monomial.from_vars(n, xs, ys))
        if terms[0] != terms[1]:
            return Binomial(*terms)


@pytest.mark.criterion(7, "component membership lemma matches normal form")
@pytest.mark.parametrize("G", MEMBERSHIP_CORPUS, ids=str)
def test_c7_membership(G):
    rng = random.Random(str(G))
    o = LexOrder.identity(G.n)
    nf = NormalForm(buchberger(generators(IdealSpec(G, "bei")), o), o)
    members = 0
    for _ in range(1000):
        f = random_multihomogeneous(rng, G.n)
        expected = nf.contains(f)
        assert membership_bei(G, f) == expected, f
        members += expected
    assert members > 0


@pytest.mark.criterion(8, "S = Graver = lex UGB for PBEI on connected graphs, n <= 4")
def test_c8_pbei_conjecture(pbei_reports):
    assert len(pbei_reports) == 44
    failures = [(str(r.graph), r.witnesses) for r in pbei_reports if not r.passed]
    assert failures == []
    for r in pbei_reports:
        assert r.length_bound == 2 * r.graph.n
        assert r.sufficiency_new == []


@pytest.mark.criterion(8, "S = Graver = lex UGB for PBEI on connected graphs, n <= 4")
def test_c8_failure_is_loud(capsys):
    # an artificially low bound must surface as a violation, never a silent pass
    code = main(["check", "--edges", PAW_EDGES, "--kind", "pbei", "--bound", "3", "--no-sufficiency"])
    captured = capsys.readouterr()
    assert code == 1
    assert "VIOLATED" in captured.err
    assert "s_minus_graver:" in captured.out


@pytest.mark.criterion(9, "property suite")
def test_c9_buchberger_binomial_closure():
    seen = 0

    def trace(s):
        nonlocal seen
        seen += 1
        assert s is None or (isinstance(s, Binomial) and s.lead != s.trail)

    for G in SMALL:
        for kind in ("bei", "pbei"):
            gens = generators(IdealSpec(G, kind))
            for o in all_orders(G.n, with_L=kind == "pbei"):
                buchberger(gens, o, trace=trace)
    assert seen > 0


@pytest.mark.criterion(9, "property suite")
def test_c9_reduce_idempotent():
    rng = random.Random(9)
    for G in SMALL[1:]:
        for kind in ("bei", "pbei"):
            o = rng.choice(all_orders(G.n, with_L=True))
            gb = buchberger(generators(IdealSpec(G, kind)), o)
            for _ in range(50):
                m = Monomial(tuple(rng.randint(0, 3) for _ in range(G.n)), tuple(rng.randint(0, 3) for _ in range(G.n)))
                r = reduce(m, gb, o)
                assert reduce(r, gb, o) == r


@pytest.mark.criterion(9, "property suite")
def test_c9_negation_closure(bei_reports, pbei_reports):
    for r in bei_reports[0] + pbei_reports:
        for S in (r.s_set, r.graver):
            assert {-f for f in S} == set(S), str(r.graph)


@pytest.mark.criterion(9, "property suite")
def test_c9_ugb_within_graver(bei_reports, pbei_reports):
    for r in bei_reports[0] + pbei_reports:
        assert r.verdicts["ugb_subset_graver"], str(r.graph)


@pytest.mark.criterion(9, "property suite")
def test_c9_minimal_walks_are_closed_under_inversion():
    for G in SMALL:
        walks = set(enumerate_minimal_paths(G, 2 * G.n))
        assert {Walk(w).inverse for w in walks} == walks
