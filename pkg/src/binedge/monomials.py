"""Monomials and monic-difference binomials in ``F[x_1..x_n, y_1..y_n]``.

The zero polynomial is never a :class:`Binomial`; functions that may produce
it return ``None`` instead.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

from .errors import InvalidInput


@dataclass(frozen=True, order=True)
class Monomial:
    x: tuple[int, ...]
    y: tuple[int, ...]

    def __post_init__(self):
        if len(self.x) != len(self.y):
            raise InvalidInput("x and y exponent vectors differ in length")
        if any(e < 0 for e in self.x) or any(e < 0 for e in self.y):
            raise InvalidInput("exponents must be nonnegative")

    @classmethod
    def one(cls, n: int) -> "Monomial":
        return cls((0,) * n, (0,) * n)

    @classmethod
    def from_vars(cls, n: int, xs: Iterable[int] = (), ys: Iterable[int] = ()) -> "Monomial":
        """Product of the listed variables, e.g. ``from_vars(3, xs=[1, 1], ys=[2])`` is x1^2*y2."""
        x = [0] * n
        y = [0] * n
        for v in xs:
            x[v - 1] += 1
        for v in ys:
            y[v - 1] += 1
        return cls(tuple(x), tuple(y))

    @property
    def n(self) -> int:
        return len(self.x)

    @property
    def degree(self) -> int:
        return sum(self.x) + sum(self.y)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(i + 1 for i in range(self.n) if self.x[i] or self.y[i])

    @property
    def exponents(self) -> tuple[int, ...]:
        return self.x + self.y

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(
            tuple(a + b for a, b in zip(self.x, other.x)),
            tuple(a + b for a, b in zip(self.y, other.y)),
        )

    def divides(self, other: "Monomial") -> bool:
        return all(a <= b for a, b in zip(self.x, other.x)) and all(
            a <= b for a, b in zip(self.y, other.y)
        )

    def __truediv__(self, other: "Monomial") -> "Monomial":
        if not other.divides(self):
            raise InvalidInput(f"{other} does not divide {self}")
        return Monomial(
            tuple(a - b for a, b in zip(self.x, other.x)),
            tuple(a - b for a, b in zip(self.y, other.y)),
        )

    def lcm(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(map(max, self.x, other.x)), tuple(map(max, self.y, other.y)))

    def gcd(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(map(min, self.x, other.x)), tuple(map(min, self.y, other.y)))

    def is_one(self) -> bool:
        return not any(self.x) and not any(self.y)

    def __str__(self) -> str:
        return render_monomial(self)


def restrict(m: Monomial, W: Iterable[int]) -> Monomial:
    """Keep the exponents of vertices in ``W``, zero the rest."""
    W = set(W)
    return Monomial(
        tuple(e if i + 1 in W else 0 for i, e in enumerate(m.x)),
        tuple(e if i + 1 in W else 0 for i, e in enumerate(m.y)),
    )


@dataclass(frozen=True, order=True)
class Binomial:
    """The polynomial ``lead - trail``; ``lead`` need not be the initial term."""

    lead: Monomial
    trail: Monomial

    def __post_init__(self):
        if self.lead == self.trail:
            raise InvalidInput("lead equals trail: that is the zero polynomial")
        if self.lead.n != self.trail.n:
            raise InvalidInput("terms live in rings of different size")

    @property
    def n(self) -> int:
        return self.lead.n

    @property
    def degree(self) -> int:
        return max(self.lead.degree, self.trail.degree)

    def __neg__(self) -> "Binomial":
        return Binomial(self.trail, self.lead)

    def scale(self, m: Monomial) -> "Binomial":
        return Binomial(m * self.lead, m * self.trail)

    def sort_key(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return self.lead.exponents, self.trail.exponents

    def __str__(self) -> str:
        return render_binomial(self)

    def to_dict(self) -> dict:
        return {
            "lead": {"x": list(self.lead.x), "y": list(self.lead.y)},
            "trail": {"x": list(self.trail.x), "y": list(self.trail.y)},
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Binomial":
        return cls(
            Monomial(tuple(d["lead"]["x"]), tuple(d["lead"]["y"])),
            Monomial(tuple(d["trail"]["x"]), tuple(d["trail"]["y"])),
        )


def binomial_or_zero(lead: Monomial, trail: Monomial) -> Binomial | None:
    return None if lead == trail else Binomial(lead, trail)


def canonical(binomials: Iterable[Binomial]) -> list[Binomial]:
    """Deduplicate and sort by (lead, trail) exponent vectors."""
    return sorted(set(binomials), key=Binomial.sort_key)


# -- orders ----------------------------------------------------------------


@dataclass(frozen=True)
class LexOrder:
    """Lex order induced by a permutation ``sigma`` and a set ``L`` of positions.

    ``sigma`` is the image list ``(sigma(1), ..., sigma(n))``. Position ``p``
    contributes ``t = x`` (and ``t' = y``) when ``p`` is not in ``L`` and the
    swapped letters when it is; the variables are ranked
    ``t_sigma(1) > ... > t_sigma(n) > t'_sigma(1) > ... > t'_sigma(n)``.
    """

    sigma: tuple[int, ...]
    L: frozenset[int] = frozenset()

    def __post_init__(self):
        sigma = tuple(int(v) for v in self.sigma)
        if sorted(sigma) != list(range(1, len(sigma) + 1)):
            raise InvalidInput(f"{sigma} is not a permutation of [1, {len(sigma)}]")
        L = frozenset(int(p) for p in self.L)
        if any(not 1 <= p <= len(sigma) for p in L):
            raise InvalidInput(f"L={sorted(L)} must be positions in [1, {len(sigma)}]")
        object.__setattr__(self, "sigma", sigma)
        object.__setattr__(self, "L", L)

    @classmethod
    def identity(cls, n: int, L: Iterable[int] = ()) -> "LexOrder":
        return cls(tuple(range(1, n + 1)), frozenset(L))

    @property
    def n(self) -> int:
        return len(self.sigma)

    @cached_property
    def _pos(self) -> dict[int, int]:
        return {v: p for p, v in enumerate(self.sigma, start=1)}

    def position(self, v: int) -> int:
        """``sigma^{-1}(v)``, 1-based."""
        return self._pos[v]

    def flipped(self, v: int) -> bool:
        """Whether vertex ``v`` sits at a position in ``L`` (its y outranks its x)."""
        return self._pos[v] in self.L

    def vertex_greater(self, i: int, j: int) -> bool:
        return self._pos[i] < self._pos[j]

    @cached_property
    def priority(self) -> tuple[tuple[str, int], ...]:
        """Variables from most to least significant, as ``(letter, vertex)``."""
        high, low = [], []
        for p, v in enumerate(self.sigma, start=1):
            if p in self.L:
                high.append(("y", v))
                low.append(("x", v))
            else:
                high.append(("x", v))
                low.append(("y", v))
        return tuple(high + low)

    @cached_property
    def flat_priority(self) -> tuple[int, ...]:
        """Indices into ``Monomial.exponents`` in priority order."""
        n = self.n
        return tuple(v - 1 if letter == "x" else n + v - 1 for letter, v in self.priority)

    def key(self, m: Monomial) -> tuple[int, ...]:
        e = m.exponents
        return tuple(e[k] for k in self.flat_priority)

    def compare(self, a: Monomial, b: Monomial) -> int:
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def initial(self, f: Binomial) -> Monomial:
        return f.lead if self.key(f.lead) > self.key(f.trail) else f.trail

    def normalize(self, f: Binomial) -> Binomial:
        return f if self.key(f.lead) > self.key(f.trail) else -f

    def __str__(self) -> str:
        return f"sigma={','.join(map(str, self.sigma))} L={{{','.join(map(str, sorted(self.L)))}}}"


def compare(order: LexOrder, a: Monomial, b: Monomial) -> int:
    """-1, 0 or 1 as ``a`` is smaller than, equal to or larger than ``b``."""
    return order.compare(a, b)


def initial_monomial(order: LexOrder, f: Binomial) -> Monomial:
    return order.initial(f)


def normalize(order: LexOrder, f: Binomial) -> Binomial:
    return order.normalize(f)


def all_orders(n: int, with_L: bool = True) -> list[LexOrder]:
    """Every (sigma, L) pair, or every sigma with ``L`` empty."""
    Ls: list[frozenset[int]] = [frozenset()]
    if with_L:
        Ls = [frozenset(c) for r in range(n + 1) for c in itertools.combinations(range(1, n + 1), r)]
    return [LexOrder(s, L) for s in itertools.permutations(range(1, n + 1)) for L in Ls]


# -- gradings --------------------------------------------------------------


class MultidegreeBEI(NamedTuple):
    letter: tuple[int, int]
    vertex: tuple[int, ...]


class MultidegreePBEI(NamedTuple):
    letter: tuple[int, int]
    vertex: tuple[int, ...]


def _vertex_degree(m: Monomial) -> tuple[int, ...]:
    return tuple(a + b for a, b in zip(m.x, m.y))


def mdeg_bei(m: Monomial) -> MultidegreeBEI:
    return MultidegreeBEI((sum(m.x), sum(m.y)), _vertex_degree(m))


def mdeg_pbei(m: Monomial) -> MultidegreePBEI:
    return MultidegreePBEI((sum(m.x) % 2, sum(m.y) % 2), _vertex_degree(m))


def is_multihomogeneous(f: Binomial, kind: str) -> bool:
    mdeg = mdeg_bei if kind == "bei" else mdeg_pbei
    return mdeg(f.lead) == mdeg(f.trail)


# -- rendering and parsing -------------------------------------------------


def render_monomial(m: Monomial) -> str:
    factors = []
    for letter, exps in (("x", m.x), ("y", m.y)):
        for i, e in enumerate(exps, start=1):
            if e == 1:
                factors.append(f"{letter}{i}")
            elif e > 1:
                factors.append(f"{letter}{i}^{e}")
    return "*".join(factors) if factors else "1"


def render_binomial(f: Binomial) -> str:
    return f"{render_monomial(f.lead)} - {render_monomial(f.trail)}"


_FACTOR = re.compile(r"^([xy])(\d+)(?:\^(\d+))?$")


def _parse_factors(text: str) -> list[tuple[str, int, int]]:
    text = text.strip()
    if text == "1":
        return []
    out = []
    for tok in text.split("*"):
        mt = _FACTOR.match(tok.strip())
        if not mt:
            raise InvalidInput(f"cannot parse factor {tok.strip()!r} in {text!r}")
        letter, idx, exp = mt.group(1), int(mt.group(2)), int(mt.group(3) or 1)
        if idx < 1:
            raise InvalidInput(f"variable index must be >= 1 in {tok!r}")
        out.append((letter, idx, exp))
    return out


def parse_monomial(text: str, n: int | None = None) -> Monomial:
    factors = _parse_factors(text)
    top = max((i for _, i, _ in factors), default=0)
    n = top if n is None else n
    if top > n:
        raise InvalidInput(f"variable index {top} exceeds n={n}")
    x = [0] * n
    y = [0] * n
    for letter, i, e in factors:
        (x if letter == "x" else y)[i - 1] += e
    return Monomial(tuple(x), tuple(y))


def parse_binomial(text: str, n: int | None = None) -> Binomial:
    parts = text.split(" - ") if " - " in text else text.split("-")
    if len(parts) != 2:
        raise InvalidInput(f"expected '<lead> - <trail>', got {text!r}")
    if n is None:
        n = max((i for p in parts for _, i, _ in _parse_factors(p)), default=0)
    return Binomial(parse_monomial(parts[0], n), parse_monomial(parts[1], n))


def parse_polynomial(text: str, n: int | None = None) -> Monomial | Binomial:
    """A monomial, or a binomial written ``lead - trail``."""
    if "-" in text:
        return parse_binomial(text, n)
    return parse_monomial(text, n)


def mono(n: int, spec: str) -> Monomial:
    """Shorthand used throughout the tests: ``mono(3, "x1*y2^2")``."""
    return parse_monomial(spec, n)


def binom(n: int, spec: str) -> Binomial:
    return parse_binomial(spec, n)
