"""Reduction, S-polynomials and Buchberger completion for binomial ideals.

Every polynomial handled here is either zero or a difference of two monic
monomials, so reduction works term by term: each term is rewritten by
``lead -> trail`` until no initial monomial divides it.

Internally a monomial is packed into one int, with the variables laid out
from most to least significant in the order's priority sequence. Each
exponent occupies a field of ``_BITS`` bits whose top bit is a guard, so
integer comparison is the lex order, ``+``/``-`` multiply and divide, and
divisibility is a single subtraction.
"""

from __future__ import annotations

import heapq
from typing import Callable, Iterable

from .errors import InvalidInput
from .monomials import Binomial, LexOrder, Monomial

_BITS = 16
_FIELD = (1 << (_BITS - 1)) - 1  # largest storable exponent


class Packer:
    """Packs monomials of one ring in the layout dictated by ``order``."""

    def __init__(self, order: LexOrder):
        self.order = order
        self.n = order.n
        nvars = 2 * self.n
        self.shifts = [0] * nvars  # indexed by flat exponent index
        for q, k in enumerate(order.flat_priority):
            self.shifts[k] = (nvars - 1 - q) * _BITS
        self.guard = sum(1 << (s + _BITS - 1) for s in self.shifts)
        self.low = sum(1 << s for s in self.shifts)
        self.values = self.guard - self.low  # every field's value bits set

    def pack(self, m: Monomial) -> int:
        if m.n != self.n:
            raise InvalidInput(f"monomial lives in n={m.n}, order in n={self.n}")
        p = 0
        for e, s in zip(m.exponents, self.shifts):
            if e > _FIELD:
                raise InvalidInput(f"exponent {e} exceeds {_FIELD}")
            p |= e << s
        return p

    def unpack(self, p: int) -> Monomial:
        e = [(p >> s) & _FIELD for s in self.shifts]
        return Monomial(tuple(e[: self.n]), tuple(e[self.n :]))

    def divides(self, a: int, b: int) -> bool:
        g = self.guard
        return ((b | g) - a) & g == g

    def lcm(self, a: int, b: int) -> int:
        g = self.guard
        ge = (((a | g) - b) & g) >> (_BITS - 1)  # low bit per field where a >= b
        take_a = (ge << (_BITS - 1)) - ge
        return (a & take_a) | (b & ~take_a & self.values)

    def support(self, a: int) -> int:
        """Guard-bit mask of the nonzero fields."""
        g = self.guard
        return ((a | g) - self.low) & g


class _Rewriter:
    """Term rewriting modulo a growing list of packed (lead, trail) pairs."""

    def __init__(self, packer: Packer):
        self.packer = packer
        self.rules: list[tuple[int, int]] = []

    def nf(self, m: int) -> int:
        divides = self.packer.divides
        rules = self.rules
        while True:
            for lead, trail in rules:
                if divides(lead, m):
                    m = m - lead + trail
                    break
            else:
                return m


def _as_packed(f: Binomial, packer: Packer) -> tuple[int, int]:
    a, b = packer.pack(f.lead), packer.pack(f.trail)
    return (a, b) if a > b else (b, a)


def spolynomial(f: Binomial, g: Binomial, order: LexOrder) -> Binomial | None:
    """``lcm/in(f) * f - lcm/in(g) * g``, or ``None`` when it vanishes.

    ``f`` and ``g`` are first normalized so their leads are initial terms.
    """
    f, g = order.normalize(f), order.normalize(g)
    lcm = f.lead.lcm(g.lead)
    first = (lcm / g.lead) * g.trail  # lcm/in(g) * (-trail(g)) enters with a + sign
    second = (lcm / f.lead) * f.trail
    return None if first == second else Binomial(first, second)


def reduce(f: Binomial | Monomial | None, B: Iterable[Binomial], order: LexOrder):
    """Normal form of ``f`` modulo ``B`` by term rewriting.

    Binomials keep their sign: the result is ``nf(lead) - nf(trail)``, or
    ``None`` when the two terms meet. A monomial input returns a monomial.
    """
    if f is None:
        return None
    packer = Packer(order)
    rw = _Rewriter(packer)
    rw.rules = [_as_packed(b, packer) for b in B]
    if isinstance(f, Monomial):
        return packer.unpack(rw.nf(packer.pack(f)))
    a, b = rw.nf(packer.pack(f.lead)), rw.nf(packer.pack(f.trail))
    if a == b:
        return None
    return Binomial(packer.unpack(a), packer.unpack(b))


def buchberger(
    gens: Iterable[Binomial],
    order: LexOrder,
    trace: Callable[[Binomial | None], None] | None = None,
) -> list[Binomial]:
    """Reduced Groebner basis of the ideal generated by ``gens``.

    Pairs are processed by the normal strategy (smallest lcm first, ties by
    index) and the only criterion is the coprime-leads criterion. The result
    is normalized and sorted by (lead, trail) exponent vectors.

    ``trace``, when given, receives every S-polynomial and every reduced
    remainder as it is formed.
    """
    packer = Packer(order)
    rw = _Rewriter(packer)
    basis = rw.rules
    supports: list[int] = []
    pairs: list[tuple[int, int, int]] = []

    def emit(a: int, b: int) -> None:
        if trace is not None:
            trace(None if a == b else Binomial(packer.unpack(a), packer.unpack(b)))

    def add(a: int, b: int) -> None:
        lead, trail = (a, b) if a > b else (b, a)
        k = len(basis)
        sup = packer.support(lead)
        for i, (l2, _) in enumerate(basis):
            if sup & supports[i]:
                heapq.heappush(pairs, (packer.lcm(lead, l2), i, k))
        basis.append((lead, trail))
        supports.append(sup)

    for g in gens:
        a, b = packer.pack(g.lead), packer.pack(g.trail)
        a, b = rw.nf(a), rw.nf(b)
        emit(a, b)
        if a != b:
            add(a, b)

    while pairs:
        lcm, i, j = heapq.heappop(pairs)
        (li, ti), (lj, tj) = basis[i], basis[j]
        a = lcm - lj + tj
        b = lcm - li + ti
        emit(a, b)
        if a == b:
            continue
        a, b = rw.nf(a), rw.nf(b)
        emit(a, b)
        if a != b:
            add(a, b)

    return _reduced(basis, packer)


def _reduced(basis: list[tuple[int, int]], packer: Packer) -> list[Binomial]:
    divides = packer.divides
    leads = sorted({lead for lead, _ in basis})
    minimal = [
        l for l in leads if not any(o != l and divides(o, l) for o in leads)
    ]
    wanted = set(minimal)
    keep = {lead: trail for lead, trail in basis if lead in wanted}
    rw = _Rewriter(packer)
    rw.rules = sorted(keep.items())
    out = []
    for lead in minimal:
        trail = rw.nf(keep[lead])
        out.append(Binomial(packer.unpack(lead), packer.unpack(trail)))
    return sorted(out, key=Binomial.sort_key)


class NormalForm:
    """Memoized term normal forms modulo a fixed reduced Groebner basis."""

    def __init__(self, basis: Iterable[Binomial], order: LexOrder):
        self.order = order
        self.packer = Packer(order)
        self._rw = _Rewriter(self.packer)
        self._rw.rules = [_as_packed(b, self.packer) for b in basis]
        self._cache: dict[int, int] = {}

    def packed(self, m: int) -> int:
        r = self._cache.get(m)
        if r is None:
            r = self._cache[m] = self._rw.nf(m)
        return r

    def __call__(self, m: Monomial) -> Monomial:
        return self.packer.unpack(self.packed(self.packer.pack(m)))

    def contains(self, f: Binomial) -> bool:
        p = self.packer
        return self.packed(p.pack(f.lead)) == self.packed(p.pack(f.trail))


def is_reduced_basis(basis: list[Binomial], order: LexOrder) -> bool:
    """No initial monomial divides any term of another basis element."""
    normed = [order.normalize(b) for b in basis]
    for k, b in enumerate(normed):
        for m, other in enumerate(normed):
            if k != m and (b.lead.divides(other.lead) or b.lead.divides(other.trail)):
                return False
        if b.lead.divides(b.trail):
            return False
    return True
