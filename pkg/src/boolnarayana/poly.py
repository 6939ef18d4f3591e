"""Dense integer polynomials, Sturm chains and exact real-root isolation.

Coefficients are stored constant term first.  Everything here is exact:
remainders are computed over the rationals and immediately scaled back to
primitive integer polynomials (a positive rescaling, so signs survive).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from .errors import ConsistencyError, DomainError, InconclusiveError

__all__ = [
    "BISECTION_BUDGET",
    "IntPolynomial",
    "RatInterval",
    "check_interlacing",
    "is_real_rooted",
    "isolate_roots",
    "root_bound",
    "sign_variations",
    "sturm_chain",
    "sturm_real_root_count",
]

Rational = Union[int, Fraction]

#: Bisection depth allowed per root before giving up as inconclusive.
BISECTION_BUDGET = 256


class IntPolynomial:
    """Immutable univariate polynomial with integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    @classmethod
    def x(cls) -> "IntPolynomial":
        return cls([0, 1])

    @classmethod
    def from_roots(cls, roots: Iterable[int]) -> "IntPolynomial":
        p = cls([1])
        for r in roots:
            p = p * cls([-r, 1])
        return p

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPolynomial([other])
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self):
        return self.format("x")

    def format(self, var: str = "x") -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if i == 0 else var if i == 1 else f"{var}^{i}"
            mag = abs(c)
            body = str(mag) if not mono else (mono if mag == 1 else f"{mag}*{mono}")
            terms.append(("-" if c < 0 else "+", body))
        sign, body = terms[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def _coerce(self, other) -> "IntPolynomial":
        if isinstance(other, IntPolynomial):
            return other
        if isinstance(other, int):
            return IntPolynomial([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = IntPolynomial([1])
        for _ in range(e):
            out = out * self
        return out

    def exact_div(self, d: int) -> "IntPolynomial":
        """Divide every coefficient by the integer ``d``; any remainder is an error."""
        out = []
        for c in self.coeffs:
            q, r = divmod(c, d)
            if r:
                raise ConsistencyError(f"coefficient {c} not divisible by {d}")
            out.append(q)
        return IntPolynomial(out)

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(i * c for i, c in enumerate(self.coeffs) if i)

    def content(self) -> int:
        return math.gcd(*self.coeffs) if self.coeffs else 0

    def primitive(self) -> "IntPolynomial":
        """Divide out the (positive) content; sign of the leading term is kept."""
        g = self.content()
        return self if g in (0, 1) else IntPolynomial(c // g for c in self.coeffs)

    def __call__(self, x):
        """Horner evaluation; works for ints, Fractions and any ring element."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def sign_at(self, x: Rational) -> int:
        v = self(x)
        return (v > 0) - (v < 0)

    def pseudo_remainder(self, other: "IntPolynomial") -> "IntPolynomial":
        """Positive multiple of the remainder of self / other, made primitive."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = [Fraction(c) for c in self.coeffs]
        d = other.degree
        lead = other.leading
        while len(r) - 1 >= d and any(r):
            if r[-1] == 0:
                r.pop()
                continue
            f = r[-1] / lead
            shift = len(r) - 1 - d
            for i, c in enumerate(other.coeffs):
                r[shift + i] -= f * c
            r.pop()
        while r and r[-1] == 0:
            r.pop()
        if not r:
            return IntPolynomial()
        den = math.lcm(*(x.denominator for x in r))
        return IntPolynomial(x.numerator * (den // x.denominator) for x in r).primitive()

    def gcd(self, other: "IntPolynomial") -> "IntPolynomial":
        """Primitive gcd with positive leading coefficient."""
        a, b = self.primitive(), other.primitive()
        while not b.is_zero():
            a, b = b, a.pseudo_remainder(b)
        if a.is_zero():
            return a
        a = a.primitive()
        return -a if a.leading < 0 else a

    def quotient(self, other: "IntPolynomial") -> "IntPolynomial":
        """Exact quotient over the integers; raise unless ``other`` divides ``self``."""
        r = [Fraction(c) for c in self.coeffs]
        d = other.degree
        q = [Fraction(0)] * max(0, len(r) - d)
        for shift in range(len(r) - 1 - d, -1, -1):
            f = r[shift + d] / other.leading
            q[shift] = f
            for i, c in enumerate(other.coeffs):
                r[shift + i] -= f * c
        if any(r) or any(x.denominator != 1 for x in q):
            raise ConsistencyError(f"{other} does not divide {self} over the integers")
        return IntPolynomial(int(x) for x in q)

    def squarefree_part(self) -> "IntPolynomial":
        g = self.gcd(self.derivative())
        return self.primitive() if g.degree <= 0 else self.quotient(g).primitive()


# -- Sturm chains ----------------------------------------------------------------

def sturm_chain(p: IntPolynomial) -> list[IntPolynomial]:
    """p, p', then negated remainders, each scaled by a positive constant."""
    if p.is_zero():
        raise DomainError("Sturm chain of the zero polynomial")
    chain = [p, p.derivative()]
    while not chain[-1].is_zero():
        chain.append(-chain[-2].pseudo_remainder(chain[-1]))
    return chain[:-1]


def sign_variations(signs: Iterable[int]) -> int:
    nz = [s for s in signs if s]
    return sum(1 for a, b in zip(nz, nz[1:]) if a != b)


def _var_at(chain: Sequence[IntPolynomial], x: Optional[Rational], side: int = 0) -> int:
    """Sign variations at x, or at -inf/+inf when x is None and side is -1/+1."""
    if x is None:
        return sign_variations(
            (1 if q.leading > 0 else -1) * (side if q.degree % 2 else 1) for q in chain
        )
    return sign_variations(q.sign_at(x) for q in chain)


@dataclass(frozen=True)
class RatInterval:
    """Exact rational interval.

    As an isolating interval: ``lo == hi`` means the root is exactly ``lo``;
    otherwise the root lies strictly between ``lo`` and ``hi``.
    """

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"empty interval ({self.lo}, {self.hi})")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, x: Rational) -> bool:
        if self.is_exact:
            return x == self.lo
        return self.lo < x < self.hi

    def to_json(self) -> dict:
        return {"lo": str(self.lo), "hi": str(self.hi)}


class _Counter:
    """Distinct real roots of p in half-open intervals (a, b] via a Sturm chain."""

    def __init__(self, p: IntPolynomial):
        self.p = p.squarefree_part()
        self.chain = sturm_chain(self.p)

    def var(self, x: Optional[Rational], side: int = 0) -> int:
        return _var_at(self.chain, x, side)

    def half_open(self, a: Optional[Rational], b: Optional[Rational]) -> int:
        return self.var(a, -1) - self.var(b, +1)

    def open(self, a: Rational, b: Rational) -> int:
        return self.half_open(a, b) - (1 if self.p(b) == 0 else 0)


def sturm_real_root_count(p: IntPolynomial, interval: Optional[RatInterval] = None) -> int:
    """Number of distinct real roots, on the whole line or in ``interval``.

    The interval is read as closed [lo, hi].
    """
    if p.is_zero():
        raise DomainError("the zero polynomial has no finite root count")
    c = _Counter(p)
    if interval is None:
        return c.half_open(None, None)
    n = c.half_open(interval.lo, interval.hi)
    if c.p(interval.lo) == 0:
        n += 1
    return n


def root_bound(p: IntPolynomial) -> Fraction:
    """Cauchy bound: every real root has absolute value < the returned value."""
    lead = abs(p.leading)
    return 1 + Fraction(max((abs(c) for c in p.coeffs[:-1]), default=0), lead)


def isolate_roots(
    p: IntPolynomial,
    precision: Rational = Fraction(1, 2**20),
    budget: int = BISECTION_BUDGET,
) -> list[RatInterval]:
    """Sorted disjoint isolating intervals of width <= precision, one per real root.

    Raises ``ValueError`` if p has a repeated real root (the witness interval
    is named in the message) and :class:`InconclusiveError` if bisection
    depth exceeds ``budget``.
    """
    if p.is_zero():
        raise DomainError("cannot isolate roots of the zero polynomial")
    precision = Fraction(precision)
    if precision <= 0:
        raise DomainError("precision must be positive")
    g = p.gcd(p.derivative())
    if g.degree > 0 and sturm_real_root_count(g) > 0:
        witness = isolate_roots(g.squarefree_part(), precision, budget)[0]
        raise ValueError(
            f"polynomial has a repeated real root in [{witness.lo}, {witness.hi}]"
        )
    c = _Counter(p)
    B = root_bound(c.p)
    return _isolate(c, -B, B, c.open(-B, B), precision, budget, 0)


def _isolate(c: _Counter, a: Fraction, b: Fraction, n: int, precision: Fraction,
             budget: int, depth: int) -> list[RatInterval]:
    if n == 0:
        return []
    if n == 1 and b - a <= precision:
        return [RatInterval(a, b)]
    if depth >= budget:
        raise InconclusiveError(f"bisection budget {budget} exhausted on ({a}, {b})")
    m = (a + b) / 2
    left = c.open(a, m)
    if c.p(m) == 0:
        mid = [RatInterval(m, m)]
        right = n - left - 1
    else:
        mid = []
        right = n - left
    return (_isolate(c, a, m, left, precision, budget, depth + 1) + mid
            + _isolate(c, m, b, right, precision, budget, depth + 1))


def _has_root(c: _Counter, iv: RatInterval) -> bool:
    if iv.is_exact:
        return c.p(iv.lo) == 0
    return c.open(iv.lo, iv.hi) == 1


def is_real_rooted(p: IntPolynomial) -> bool:
    """All roots real and simple."""
    return p.degree >= 0 and p.squarefree_part().degree == p.degree and \
        sturm_real_root_count(p) == p.degree


def check_interlacing(p: IntPolynomial, q: IntPolynomial,
                      budget: int = BISECTION_BUDGET) -> bool:
    """Weak interlacing: roots v_1 < ... < v_n of p and w_1 < ... < w_{n-1} of q
    satisfy v_1 <= w_1 <= v_2 <= ... <= w_{n-1} <= v_n.

    Equalities are common roots (such as 0 for consecutive Boolean-Narayana
    polynomials); all other roots are separated strictly.  The roots of both
    polynomials are isolated together, as roots of the squarefree part of
    p*q, until each isolating interval holds one root; membership of that
    root in p and in q is then decided exactly.  Exceeding ``budget``
    bisection levels raises :class:`InconclusiveError`.
    """
    if p.degree != q.degree + 1:
        raise DomainError(f"need deg p = deg q + 1, got {p.degree} and {q.degree}")
    if not (is_real_rooted(p) and is_real_rooted(q)):
        return False
    h = _Counter(p * q)
    B = root_bound(h.p)
    ivs = _isolate(h, -B, B, h.open(-B, B), 2 * B, budget, 0)
    cp, cq = _Counter(p), _Counter(q)
    v_rank, w_rank = [], []
    for rank, iv in enumerate(ivs):
        if _has_root(cp, iv):
            v_rank.append(rank)
        if _has_root(cq, iv):
            w_rank.append(rank)
    if len(v_rank) != p.degree or len(w_rank) != q.degree:
        raise ConsistencyError("root bookkeeping disagrees with Sturm counts")
    return all(v_rank[i] <= w_rank[i] <= v_rank[i + 1] for i in range(len(w_rank)))
