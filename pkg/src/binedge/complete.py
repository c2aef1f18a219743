"""Closed forms for the parity binomial edge ideal of the complete graph K_n.

Throughout, ``order`` is a (sigma, L) lex order and vertex ``v`` is
*flipped* when its position ``sigma^{-1}(v)`` lies in ``L``. Flipped
vertices get sign ``c_v = -1`` and representative letter ``r_v = x_v``,
the others ``c_v = +1`` and ``r_v = y_v``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import NamedTuple

from .errors import InvalidInput
from .ideals import bei_binomial, pbei_binomial
from .monomials import Binomial, LexOrder, Monomial, canonical, mdeg_pbei


@dataclass(frozen=True)
class SignedOrderContext:
    order: LexOrder

    def c(self, v: int) -> int:
        return -1 if self.order.flipped(v) else 1

    def r(self, v: int) -> str:
        return "x" if self.order.flipped(v) else "y"

    def signed(self, v: int, f: Binomial) -> Binomial:
        return f if self.c(v) == 1 else -f


def _letters(n: int, factors) -> Monomial:
    xs = [v for letter, v in factors if letter == "x"]
    ys = [v for letter, v in factors if letter == "y"]
    return Monomial.from_vars(n, xs, ys)


def _families(n: int, order: LexOrder):
    """Yield ``(family, vertices, binomial)`` for all three B-families."""
    ctx = SignedOrderContext(order)
    gt = order.vertex_greater
    V = range(1, n + 1)
    for i, j in itertools.permutations(V, 2):
        if gt(i, j):
            yield "edge", (i, j), ctx.signed(i, pbei_binomial(n, i, j))
    for i, k, j in itertools.permutations(V, 3):
        if gt(i, j) and gt(k, j):
            f = ctx.signed(i, bei_binomial(n, i, j)).scale(_letters(n, [(ctx.r(k), k)]))
            yield "path", (i, k, j), f
    for i, k, l in itertools.permutations(V, 3):
        if k < l and gt(k, i) and gt(l, i):
            r = _letters(n, [(ctx.r(k), k), (ctx.r(l), l)])
            yield "cycle", (i, k, l, i), ctx.signed(i, pbei_binomial(n, i, i)).scale(r)


def _in_gamma(order: LexOrder, family: str, verts: tuple[int, ...]) -> bool:
    if family != "path":
        return False
    i, k, j = verts
    if not (order.vertex_greater(i, k) and order.vertex_greater(k, j)):
        return False
    return order.flipped(i) != order.flipped(k)


def gamma_set(n: int, order: LexOrder) -> list[Binomial]:
    return canonical(f for fam, vs, f in _families(n, order) if _in_gamma(order, fam, vs))


def lambda_basis(n: int, order: LexOrder) -> list[Binomial]:
    """The B-families with the Gamma exclusion removed, canonical order."""
    if n < 2:
        raise InvalidInput("lambda_basis needs n >= 2")
    if order.n != n:
        raise InvalidInput(f"order is on {order.n} vertices, expected {n}")
    return canonical(f for fam, vs, f in _families(n, order) if not _in_gamma(order, fam, vs))


def normal_form_kn(m: Monomial) -> Monomial:
    """Normal form of ``m`` modulo I_{K_n} under sigma = id, L = {}.

    With more than two vertices in the support every x moves to y except
    possibly one ``x_k`` on the largest support vertex ``k``, according to
    the parity of the total x-degree. With at most two vertices ``i, j``
    the common x-power ``q = min(d_i, d_j)`` is traded for y's.
    """
    n = m.n
    supp = sorted(m.support)
    if len(supp) > 2:
        k = supp[-1]
        gamma = sum(m.x[:k])
        y = [m.x[v] + m.y[v] for v in range(n)]
        x = [0] * n
        if gamma % 2:
            x[k - 1] = 1
            y[k - 1] -= 1
        return Monomial(tuple(x), tuple(y))
    if len(supp) < 2:
        return m
    i, j = supp[0] - 1, supp[1] - 1
    q = min(m.x[i], m.x[j])
    x, y = list(m.x), list(m.y)
    for v in (i, j):
        x[v] -= q
        y[v] += q
    return Monomial(tuple(x), tuple(y))


def _shift_q(f: Binomial) -> int | None:
    """The ``q`` with trail = lead shifted by ``q`` x->y on both support vertices."""
    u, v = f.lead, f.trail
    supp = sorted(u.support | v.support)
    if len(supp) != 2:
        return None
    i, j = supp[0] - 1, supp[1] - 1
    q = u.x[i] - v.x[i]
    if u.x[j] - v.x[j] != q or v.y[i] - u.y[i] != q or v.y[j] - u.y[j] != q:
        return None
    return q


def membership_pbei_kn(f: Binomial) -> bool:
    """Membership in I_{K_n} without a Groebner basis.

    More than two support vertices: exactly multi-homogeneity in
    Z_2^2 x N^n. At most two: ``f`` must be a ``q``-shift; exponent
    nonnegativity bounds ``q`` to ``[-min(e_i, e_j), min(d_i, d_j)]``.
    """
    if len(f.lead.support) > 2:
        return mdeg_pbei(f.lead) == mdeg_pbei(f.trail)
    return _shift_q(f) is not None


class CoprimeClass(NamedTuple):
    family: str  # "xx-yy" or "xy-yx"
    sign: int
    i: int
    j: int
    p: int
    q: int


def classify_coprime_two_vertex(f: Binomial) -> CoprimeClass:
    """Place a coprime two-vertex multi-homogeneous binomial in its family.

    The families are ``sign * (x_i^p x_j^q - y_i^p y_j^q)`` and
    ``sign * (x_i^p y_j^q - y_i^p x_j^q)`` with ``i < j`` and ``p = q mod 2``.
    """
    u, v = f.lead, f.trail
    if mdeg_pbei(u) != mdeg_pbei(v):
        raise InvalidInput(f"{f} is not multi-homogeneous")
    if len(u.support) != 2:
        raise InvalidInput(f"{f}: lead must involve exactly two vertices")
    if not u.gcd(v).is_one():
        raise InvalidInput(f"{f}: terms share a factor")
    i, j = sorted(u.support)
    a, b = i - 1, j - 1

    def pure(m: Monomial, v_idx: int) -> str | None:
        if m.x[v_idx] and not m.y[v_idx]:
            return "x"
        if m.y[v_idx] and not m.x[v_idx]:
            return "y"
        return None

    li, lj = pure(u, a), pure(u, b)
    if li is None or lj is None:
        raise InvalidInput(f"{f} is outside every coprime family")
    p = u.x[a] + u.y[a]
    q = u.x[b] + u.y[b]
    if p % 2 != q % 2:
        raise InvalidInput(f"{f}: exponents {p}, {q} differ in parity")
    family = "xx-yy" if li == lj else "xy-yx"
    sign = 1 if li == "x" else -1
    n = u.n
    if family == "xx-yy":
        ref = Binomial(_letters(n, [("x", i)] * p + [("x", j)] * q), _letters(n, [("y", i)] * p + [("y", j)] * q))
    else:
        ref = Binomial(_letters(n, [("x", i)] * p + [("y", j)] * q), _letters(n, [("y", i)] * p + [("x", j)] * q))
    if (ref if sign == 1 else -ref) != f:
        raise InvalidInput(f"{f} is outside every coprime family")
    return CoprimeClass(family, sign, i, j, p, q)
