"""Bounded brute-force Graver bases, lex-family universal Groebner bases and
the containment report tying them to the path-indexed S-sets.

No complete Graver algorithm is known for these ideals, so everything here
is exact only up to an explicit degree bound, and the universal Groebner
basis is the union over lex orders only (a lower bound for the true one).

Both ideals are homogeneous for their multidegree and contain no monomials,
so an ideal binomial pairs two monomials of one multidegree fiber with equal
normal forms. Fibers are enumerated directly; membership is decided against
one reduced basis computed under sigma = id, L = {}.
"""

from __future__ import annotations

import itertools
import json
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import InvalidInput
from .graph import Graph, graph_to_dict
from .groebner import NormalForm, buchberger
from .ideals import IdealSpec, generators, s_set_bei, s_set_pbei
from .monomials import Binomial, LexOrder, Monomial, all_orders, canonical

log = logging.getLogger(__name__)


def default_length_bound(n: int) -> int:
    return 2 * n


def default_degree_bound(spec: IdealSpec, length_bound: int | None = None) -> int:
    """``n + 1`` for BEI, ``min(n + 3, 2 * length_bound + 2)`` for PBEI.

    S-set elements have degree at most ``n + 1`` (two endpoint factors and
    at most ``n - 1`` interior ones). PBEI has no proven Graver degree bound,
    so it gets two extra degrees of margin; the fiber sweep grows roughly
    2.5x per degree, which rules out the looser length-based cap alone.
    """
    bound = spec.n + 1
    if spec.kind == "pbei":
        lb = default_length_bound(spec.n) if length_bound is None else length_bound
        bound = min(spec.n + 3, 2 * lb + 2)
    return max(bound, 2)


class MembershipOracle:
    """Normal-form membership for one ideal, with monomial enumeration by fiber."""

    def __init__(self, spec: IdealSpec):
        self.spec = spec
        self.order = LexOrder.identity(spec.n)
        self.basis = buchberger(generators(spec), self.order)
        self.nf = NormalForm(self.basis, self.order)
        self.packer = self.nf.packer

    def contains(self, f: Binomial) -> bool:
        return self.nf.contains(f)

    def fiber_classes(self, vertex_degree: Sequence[int]) -> list[list[int]]:
        """Packed monomials of one vertex degree, grouped by letter grade and normal form."""
        n = self.spec.n
        pack = self.packer.pack
        groups: dict[tuple[int, int], list[int]] = {}
        ranges = [range(a + 1) for a in vertex_degree]
        for xs in itertools.product(*ranges):
            ys = tuple(a - d for a, d in zip(vertex_degree, xs))
            p = pack(Monomial(tuple(xs), ys))
            xdeg = sum(xs)
            letter = xdeg if self.spec.kind == "bei" else xdeg % 2
            groups.setdefault((letter, self.nf.packed(p)), []).append(p)
        return [g for g in groups.values() if len(g) > 1]

    def divisors(self, m: Monomial) -> list[Monomial]:
        ranges = [range(e + 1) for e in m.exponents]
        n = m.n
        return [Monomial(e[:n], e[n:]) for e in itertools.product(*ranges)]


def _vertex_degrees(n: int, d: int) -> Iterable[tuple[int, ...]]:
    """All weak compositions of ``d`` into ``n`` parts."""
    for cuts in itertools.combinations(range(d + n - 1), n - 1):
        prev = -1
        parts = []
        for c in cuts + (d + n - 1,):
            parts.append(c - prev - 1)
            prev = c
        yield tuple(parts)


def enumerate_ideal_binomials(spec: IdealSpec, degree_bound: int, oracle: MembershipOracle | None = None) -> list[Binomial]:
    """Every ideal binomial ``lead - trail`` of degree at most ``degree_bound``."""
    oracle = oracle or MembershipOracle(spec)
    unpack = oracle.packer.unpack
    out = []
    for d in range(1, degree_bound + 1):
        for a in _vertex_degrees(spec.n, d):
            for cls in oracle.fiber_classes(a):
                for u, v in itertools.permutations(cls, 2):
                    out.append(Binomial(unpack(u), unpack(v)))
    return canonical(out)


def is_primitive(f: Binomial, spec: IdealSpec, oracle: MembershipOracle | None = None) -> bool:
    """No other nonzero ideal binomial divides ``f`` termwise.

    Checked directly: every divisor pair ``(u', v')`` of ``(lead, trail)``
    other than ``f`` itself, with ``u' != v'``, is tested for membership.
    """
    oracle = oracle or MembershipOracle(spec)
    if not oracle.contains(f):
        raise InvalidInput(f"{f} is not in the ideal")
    lead_divs = oracle.divisors(f.lead)
    trail_divs = oracle.divisors(f.trail)
    nf = oracle.nf
    trail_nf: dict[Monomial, list[Monomial]] = {}
    for v in trail_divs:
        trail_nf.setdefault(nf(v), []).append(v)
    for u in lead_divs:
        for v in trail_nf.get(nf(u), ()):
            if u != v and (u, v) != (f.lead, f.trail):
                return False
    return True


def graver_layers(spec: IdealSpec, degree_bound: int, oracle: MembershipOracle | None = None) -> dict[int, list[Binomial]]:
    """Primitive binomials grouped by degree, for degrees ``1..degree_bound``.

    Termwise division within one fiber forces equal degrees, so a candidate
    is non-primitive exactly when some primitive of smaller degree divides
    it. Degrees are therefore processed in increasing order and each
    candidate is tested only against the primitives already found.
    """
    oracle = oracle or MembershipOracle(spec)
    divides = oracle.packer.divides
    unpack = oracle.packer.unpack
    found: list[tuple[int, int]] = []
    layers: dict[int, list[Binomial]] = {}
    for d in range(1, degree_bound + 1):
        new: list[tuple[int, int]] = []
        for a in _vertex_degrees(spec.n, d):
            # only primitives whose vertex degree fits under this fiber can divide
            below = [
                (pu, pv) for pu, pv in found
                if divides(pu, _fiber_cap(oracle, a))
            ]
            for cls in oracle.fiber_classes(a):
                for u, v in itertools.permutations(cls, 2):
                    if not any(divides(pu, u) and divides(pv, v) for pu, pv in below):
                        new.append((u, v))
        found.extend(new)
        layers[d] = canonical(Binomial(unpack(u), unpack(v)) for u, v in new)
    return layers


def _fiber_cap(oracle: MembershipOracle, a: Sequence[int]) -> int:
    """Packed monomial with x- and y-exponent ``a_v`` at every vertex ``v``."""
    a = tuple(a)
    return oracle.packer.pack(Monomial(a, a))


def graver_basis(spec: IdealSpec, degree_bound: int | None = None, oracle: MembershipOracle | None = None) -> list[Binomial]:
    """Primitive ideal binomials up to ``degree_bound`` (complete only up to it)."""
    if degree_bound is None:
        degree_bound = default_degree_bound(spec)
    layers = graver_layers(spec, degree_bound, oracle)
    return canonical(b for layer in layers.values() for b in layer)


def _gb_batch(args: tuple[IdealSpec, list[LexOrder]]) -> list[Binomial]:
    spec, orders = args
    gens = generators(spec)
    out: set[Binomial] = set()
    for o in orders:
        out.update(buchberger(gens, o))
    return list(out)


def default_order_grid(spec: IdealSpec) -> list[LexOrder]:
    """All sigma; all L for PBEI, only L = {} for BEI."""
    return all_orders(spec.n, with_L=spec.kind == "pbei")


def ugb_lex_family(spec: IdealSpec, orders: Iterable[LexOrder] | None = None, jobs: int = 1) -> list[Binomial]:
    """Union of reduced Groebner bases over a grid of (sigma, L) orders.

    A lower bound for the universal Groebner basis, which ranges over all
    monomial orders. ``jobs > 1`` spreads orders over processes; the result
    is the same set, canonically sorted, for every ``jobs``.
    """
    orders = list(default_order_grid(spec) if orders is None else orders)
    if jobs <= 1 or len(orders) < 2:
        return canonical(_gb_batch((spec, orders)))
    chunks = [orders[k::jobs] for k in range(jobs)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        parts = pool.map(_gb_batch, [(spec, c) for c in chunks if c])
        return canonical(b for part in parts for b in part)


# -- report ---------------------------------------------------------------


def _render(bs: Iterable[Binomial]) -> list[str]:
    return [str(b) for b in bs]


@dataclass
class BasisReport:
    graph: Graph
    kind: str
    degree_bound: int
    length_bound: int | None
    s_set: list[Binomial]
    graver: list[Binomial]
    ugb: list[Binomial]
    orders_used: int
    sufficiency_bound: int | None = None
    sufficiency_new: list[Binomial] = field(default_factory=list)

    @property
    def verdicts(self) -> dict[str, bool]:
        S, Gr, U = set(self.s_set), set(self.graver), set(self.ugb)
        return {
            "s_equals_graver": S == Gr,
            "ugb_subset_s": U <= S,
            "s_subset_ugb": S <= U,
            "ugb_subset_graver": U <= Gr,
            "all_equal": S == Gr == U,
        }

    @property
    def witnesses(self) -> dict[str, list[Binomial]]:
        S, Gr, U = set(self.s_set), set(self.graver), set(self.ugb)
        return {
            "s_minus_graver": canonical(S - Gr),
            "graver_minus_s": canonical(Gr - S),
            "ugb_minus_s": canonical(U - S),
            "s_minus_ugb": canonical(S - U),
            "ugb_minus_graver": canonical(U - Gr),
        }

    @property
    def passed(self) -> bool:
        return self.verdicts["all_equal"]

    def to_dict(self) -> dict:
        ws = self.witnesses
        return {
            "graph": graph_to_dict(self.graph),
            "kind": self.kind,
            "degree_bound": self.degree_bound,
            "length_bound": self.length_bound,
            "orders_used": self.orders_used,
            "ugb_scope": "lex-family lower bound",
            "counts": {"s_set": len(self.s_set), "graver": len(self.graver), "ugb": len(self.ugb)},
            "verdicts": self.verdicts,
            "witnesses": {k: [b.to_dict() for b in v] for k, v in ws.items()},
            "sufficiency": {
                "bound": self.sufficiency_bound,
                "new_primitives": [b.to_dict() for b in self.sufficiency_new],
            },
            "sets": {
                "s_set": [b.to_dict() for b in self.s_set],
                "graver": [b.to_dict() for b in self.graver],
                "ugb": [b.to_dict() for b in self.ugb],
            },
        }

    @classmethod
    def from_dict(cls, d: dict) -> "BasisReport":
        def bs(items):
            return [Binomial.from_dict(b) for b in items]

        suff = d.get("sufficiency", {})
        return cls(
            graph=Graph.from_edges(d["graph"]["n"], d["graph"]["edges"]),
            kind=d["kind"],
            degree_bound=d["degree_bound"],
            length_bound=d["length_bound"],
            s_set=bs(d["sets"]["s_set"]),
            graver=bs(d["sets"]["graver"]),
            ugb=bs(d["sets"]["ugb"]),
            orders_used=d["orders_used"],
            sufficiency_bound=suff.get("bound"),
            sufficiency_new=bs(suff.get("new_primitives", [])),
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_json(cls, text: str) -> "BasisReport":
        return cls.from_dict(json.loads(text))

    def to_text(self) -> str:
        v = self.verdicts
        lines = [
            f"graph: {self.graph}",
            f"ideal: {self.kind}  degree_bound: {self.degree_bound}  length_bound: {self.length_bound}",
            f"|S| = {len(self.s_set)}  |Graver| = {len(self.graver)}  |UGB (lex-family lower bound, {self.orders_used} orders)| = {len(self.ugb)}",
        ]
        lines += [f"  {k}: {'yes' if ok else 'NO'}" for k, ok in v.items()]
        for k, ws in self.witnesses.items():
            if ws:
                lines.append(f"  {k}:")
                lines += [f"    {b}" for b in ws]
        if self.sufficiency_bound is not None:
            lines.append(
                f"degree sufficiency at {self.sufficiency_bound}: "
                f"{len(self.sufficiency_new)} new primitive(s)"
            )
            lines += [f"    {b}" for b in self.sufficiency_new]
        return "\n".join(lines)

    def __eq__(self, other) -> bool:
        return isinstance(other, BasisReport) and self.to_dict() == other.to_dict()


def check(
    spec: IdealSpec,
    degree_bound: int | None = None,
    length_bound: int | None = None,
    orders: Iterable[LexOrder] | None = None,
    jobs: int = 1,
    sufficiency: bool = True,
) -> BasisReport:
    """Compute S-set, bounded Graver basis and lex-family UGB and compare them."""
    G = spec.graph
    if not G.is_connected():
        log.warning("graph %s is disconnected; the S-set results assume connectivity", G)
    if spec.kind == "pbei":
        length_bound = default_length_bound(spec.n) if length_bound is None else length_bound
        S = s_set_pbei(G, length_bound)
    else:
        length_bound = None
        S = s_set_bei(G)
    if degree_bound is None:
        degree_bound = default_degree_bound(spec, length_bound)
    top = degree_bound + 1 if sufficiency else degree_bound
    layers = graver_layers(spec, top)
    graver = canonical(b for d, layer in layers.items() if d <= degree_bound for b in layer)
    orders = list(default_order_grid(spec) if orders is None else orders)
    ugb = ugb_lex_family(spec, orders, jobs=jobs)
    return BasisReport(
        graph=G,
        kind=spec.kind,
        degree_bound=degree_bound,
        length_bound=length_bound,
        s_set=S,
        graver=graver,
        ugb=ugb,
        orders_used=len(orders),
        sufficiency_bound=top if sufficiency else None,
        sufficiency_new=layers.get(top, []) if sufficiency else [],
    )
