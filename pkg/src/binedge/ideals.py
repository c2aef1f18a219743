"""Generators, closed-form Groebner bases and path-indexed binomial sets.

``bei`` is the binomial edge ideal J_G generated by ``x_i y_j - x_j y_i`` and
``pbei`` the parity binomial edge ideal I_G generated by ``x_i x_j - y_i y_j``,
one generator per edge ``{i, j}``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import InvalidInput
from .graph import (
    Graph,
    Walk,
    connected_components,
    enumerate_minimal_paths,
    enumerate_weakly_admissible_paths,
    induced_subgraph,
)
from .monomials import Binomial, LexOrder, Monomial, canonical, mdeg_bei, restrict

KINDS = ("bei", "pbei")


@dataclass(frozen=True)
class IdealSpec:
    graph: Graph
    kind: str

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InvalidInput(f"ideal kind must be one of {KINDS}, got {self.kind!r}")

    @property
    def n(self) -> int:
        return self.graph.n


def _var(n: int, letter: str, v: int) -> Monomial:
    return Monomial.from_vars(n, xs=[v]) if letter == "x" else Monomial.from_vars(n, ys=[v])


def _prod(n: int, factors: Iterable[tuple[str, int]]) -> Monomial:
    xs, ys = [], []
    for letter, v in factors:
        (xs if letter == "x" else ys).append(v)
    return Monomial.from_vars(n, xs, ys)


def bei_binomial(n: int, i: int, j: int) -> Binomial:
    """``x_i y_j - x_j y_i``."""
    return Binomial(_prod(n, [("x", i), ("y", j)]), _prod(n, [("x", j), ("y", i)]))


def pbei_binomial(n: int, i: int, j: int) -> Binomial:
    """``x_i x_j - y_i y_j`` (``x_i^2 - y_i^2`` when ``i == j``)."""
    return Binomial(_prod(n, [("x", i), ("x", j)]), _prod(n, [("y", i), ("y", j)]))


def generators(spec: IdealSpec) -> list[Binomial]:
    make = bei_binomial if spec.kind == "bei" else pbei_binomial
    return [make(spec.n, i, j) for i, j in spec.graph.sorted_edges()]


def _assignments(vertices: Sequence[int]) -> Iterable[dict[int, str]]:
    for letters in itertools.product("xy", repeat=len(vertices)):
        yield dict(zip(vertices, letters))


def _interior_monomial(n: int, t: Mapping[int, str]) -> Monomial:
    return _prod(n, ((letter, v) for v, letter in t.items()))


def u_pi(sigma: Sequence[int], walk: Sequence[int], n: int | None = None) -> Monomial:
    """The interior monomial: ``y_k`` for interior vertices ranked above the
    start, ``x_k`` for those ranked below the end."""
    order = LexOrder(tuple(sigma))
    n = order.n if n is None else n
    w = Walk(walk)
    lo, hi = order.position(w.start), order.position(w.end)
    if not lo < hi:
        raise InvalidInput(f"{w!r}: start must precede end under sigma")
    factors = []
    for k in w[1:-1]:
        p = order.position(k)
        if p < lo:
            factors.append(("y", k))
        elif p > hi:
            factors.append(("x", k))
        else:
            raise InvalidInput(f"interior vertex {k} of {w!r} lies between the endpoints under sigma")
    return _prod(n, factors)


def sigma_admissible_paths(G: Graph, sigma: Sequence[int]) -> list[Walk]:
    order = LexOrder(tuple(sigma))
    out = []
    for w in enumerate_weakly_admissible_paths(G):
        if w.length == 0:
            continue
        lo, hi = order.position(w.start), order.position(w.end)
        if lo < hi and all(not lo < order.position(k) < hi for k in w[1:-1]):
            out.append(w)
    return out


def closed_form_gb_bei(G: Graph, sigma: Sequence[int]) -> list[Binomial]:
    """``u_pi (x_i y_j - x_j y_i)`` over sigma-admissible ``(i, j)``-paths."""
    out = []
    for w in sigma_admissible_paths(G, sigma):
        out.append(bei_binomial(G.n, w.start, w.end).scale(u_pi(sigma, w, G.n)))
    return canonical(out)


def s_set_bei(G: Graph) -> list[Binomial]:
    """Union over weakly admissible paths of all interior letter choices."""
    return canonical(b for b, _, _ in bei_path_binomials(G))


def bei_path_binomials(G: Graph) -> Iterable[tuple[Binomial, Walk, dict[int, str]]]:
    """Every ``(binomial, path, assignment)`` triple behind the BEI S-set."""
    for w in enumerate_weakly_admissible_paths(G):
        if w.length == 0:
            continue
        base = bei_binomial(G.n, w.start, w.end)
        for t in _assignments(w[1:-1]):
            yield base.scale(_interior_monomial(G.n, t)), w, t


def witness_sigma(n: int, walk: Sequence[int], t: Mapping[int, str]) -> tuple[int, ...]:
    """A permutation under which ``t * (x_i y_j - x_j y_i)`` is a Groebner element.

    y-assigned interior vertices come first, then ``i``, then ``j``, then the
    x-assigned interior vertices, then everything else.
    """
    w = Walk(walk)
    ys = sorted(v for v, letter in t.items() if letter == "y")
    xs = sorted(v for v, letter in t.items() if letter == "x")
    head = ys + [w.start, w.end] + xs
    rest = [v for v in range(1, n + 1) if v not in set(head)]
    return tuple(head + rest)


def path_binomial_pbei(walk: Sequence[int], t: Mapping[int, str], n: int) -> Binomial | None:
    """The binomial of a walk and an interior letter assignment.

    Odd walks give ``(x_i x_j - y_i y_j) * prod t_k``, even walks
    ``(x_i y_j - y_i x_j) * prod t_k``; ``None`` for even closed walks.
    """
    w = Walk(walk)
    if set(t) != set(w.interior):
        raise InvalidInput(f"assignment must cover exactly the interior {sorted(w.interior)} of {w!r}")
    if any(letter not in ("x", "y") for letter in t.values()):
        raise InvalidInput("interior letters must be 'x' or 'y'")
    i, j = w.start, w.end
    if w.parity == 1:
        base = pbei_binomial(n, i, j)
    elif i == j:
        return None
    else:
        base = bei_binomial(n, i, j)
    return base.scale(_interior_monomial(n, t))


def pbei_path_binomials(G: Graph, length_bound: int | None = None):
    """Every nonzero ``(binomial, walk, assignment)`` behind the PBEI S-set.

    Odd walks contribute both signs; even walks contribute one, and the
    inverse walk supplies its negation.
    """
    for w in enumerate_minimal_paths(G, length_bound):
        interior = sorted(w.interior)
        for t in _assignments(interior):
            b = path_binomial_pbei(w, t, G.n)
            if b is None:
                continue
            yield b, w, t
            if w.parity == 1:
                yield -b, w, t


def s_set_pbei(G: Graph, length_bound: int | None = None) -> list[Binomial]:
    return canonical(b for b, _, _ in pbei_path_binomials(G, length_bound))


def membership_bei(G: Graph, f: Binomial) -> bool:
    """Component test for multi-homogeneous binomials.

    ``f`` is in J_G iff for every connected component C of the subgraph
    induced on the support of the lead, the restrictions of both terms to C
    share the multidegree.
    """
    if mdeg_bei(f.lead) != mdeg_bei(f.trail):
        raise InvalidInput(f"{f} is not multi-homogeneous")
    H = induced_subgraph(G, f.lead.support)
    return all(
        mdeg_bei(restrict(f.lead, C)) == mdeg_bei(restrict(f.trail, C))
        for C in connected_components(H)
    )
