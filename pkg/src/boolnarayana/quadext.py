"""Exact arithmetic in real quadratic fields Q(sqrt(d)).

:class:`QuadExt` holds a + b*sqrt(d) with rational a, b and a fixed
non-square d > 0.  Values from the same field support +, -, *, / and exact
comparison; plain ints and Fractions mix in as field elements.  Values
from different fields can be ordered with :func:`compare`.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

__all__ = ["QuadExt", "compare", "enclosure", "is_rational_square", "sqrt_exact"]

Rational = Union[int, Fraction]


def _rational_sqrt(x: Fraction) -> Fraction | None:
    if x < 0:
        return None
    rn, rd = math.isqrt(x.numerator), math.isqrt(x.denominator)
    if rn * rn == x.numerator and rd * rd == x.denominator:
        return Fraction(rn, rd)
    return None


def is_rational_square(x: Rational) -> bool:
    return _rational_sqrt(Fraction(x)) is not None


def _squarefree_radicand(d: Fraction) -> tuple[int, Fraction]:
    """Write d = m * f^2 with m a squarefree-ish positive integer and f rational.

    Only the denominator is cleared and small square factors removed; the
    representation need not be minimal, just canonical enough to share
    fields between values built from equal d.
    """
    m = d.numerator * d.denominator
    f = Fraction(1, d.denominator)
    p = 2
    while p * p <= m and p < 1000:
        while m % (p * p) == 0:
            m //= p * p
            f *= p
        p += 1
    return m, f


class QuadExt:
    """a + b*sqrt(d), with d > 0 not a rational square."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a: Rational, b: Rational, d: Rational):
        d = Fraction(d)
        if d <= 0:
            raise ValueError(f"radicand must be positive, got {d}")
        if is_rational_square(d):
            raise ValueError(f"{d} is a rational square; use a plain Fraction")
        m, f = _squarefree_radicand(d)
        object.__setattr__(self, "a", Fraction(a))
        object.__setattr__(self, "b", Fraction(b) * f)
        object.__setattr__(self, "d", m)

    def __setattr__(self, name, value):
        raise AttributeError("QuadExt is immutable")

    @classmethod
    def _raw(cls, a: Fraction, b: Fraction, d: int) -> "QuadExt":
        obj = object.__new__(cls)
        object.__setattr__(obj, "a", a)
        object.__setattr__(obj, "b", b)
        object.__setattr__(obj, "d", d)
        return obj

    def __repr__(self):
        return f"QuadExt({self.a}, {self.b}, {self.d})"

    def __str__(self):
        return f"{self.a} + {self.b}*sqrt({self.d})"

    def _lift(self, other) -> "QuadExt":
        if isinstance(other, QuadExt):
            if other.d != self.d:
                raise ValueError(f"mixing sqrt({self.d}) and sqrt({other.d})")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadExt._raw(Fraction(other), Fraction(0), self.d)
        return NotImplemented

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def conjugate(self) -> "QuadExt":
        return QuadExt._raw(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        return self.a * self.a - self.b * self.b * self.d

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return QuadExt._raw(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt._raw(-self.a, -self.b, self.d)

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return QuadExt._raw(self.a - o.a, self.b - o.b, self.d)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return QuadExt._raw(self.a * o.a + self.b * o.b * self.d,
                            self.a * o.b + self.b * o.a, self.d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in quadratic field")
        return self * QuadExt._raw(o.a / n, -o.b / n, self.d)

    def __rtruediv__(self, other):
        return self._lift(other) / self

    def __pow__(self, e: int):
        if e < 0:
            return 1 / (self ** -e)
        out = QuadExt._raw(Fraction(1), Fraction(0), self.d)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def sign(self) -> int:
        """Exact sign of a + b*sqrt(d)."""
        sa = (self.a > 0) - (self.a < 0)
        sb = (self.b > 0) - (self.b < 0)
        if sa == sb or sb == 0:
            return sa
        if sa == 0:
            return sb
        # opposite signs: compare a^2 with b^2 d
        diff = self.a * self.a - self.b * self.b * self.d
        return sa if diff > 0 else sb if diff < 0 else 0

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        if isinstance(other, QuadExt):
            return compare(self, other) == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.a, self.b, self.d)) if self.b else hash(self.a)

    def __lt__(self, other):
        return compare(self, other) < 0

    def __le__(self, other):
        return compare(self, other) <= 0

    def __gt__(self, other):
        return compare(self, other) > 0

    def __ge__(self, other):
        return compare(self, other) >= 0

    def __float__(self):
        return float(self.a) + float(self.b) * math.sqrt(self.d)


Number = Union[int, Fraction, QuadExt]


def sqrt_exact(d: Rational) -> Fraction | QuadExt:
    """sqrt(d) as a Fraction when d is a rational square, else as a QuadExt."""
    d = Fraction(d)
    r = _rational_sqrt(d)
    if r is not None:
        return r
    return QuadExt(0, 1, d)


def enclosure(x: Number, bits: int) -> tuple[Fraction, Fraction]:
    """Rational lo <= x <= hi with hi - lo shrinking like 2^-bits."""
    if not isinstance(x, QuadExt):
        x = Fraction(x)
        return x, x
    scale = 1 << bits
    r = math.isqrt(x.d * scale * scale)
    lo_s, hi_s = Fraction(r, scale), Fraction(r + 1, scale)
    if x.b >= 0:
        return x.a + x.b * lo_s, x.a + x.b * hi_s
    return x.a + x.b * hi_s, x.a + x.b * lo_s


def compare(x: Number, y: Number, max_bits: int = 4096) -> int:
    """Exact three-way comparison, also across different quadratic fields."""
    if isinstance(x, QuadExt) and isinstance(y, QuadExt) and x.d != y.d:
        if is_rational_square(Fraction(x.d, y.d)):
            f = _rational_sqrt(Fraction(x.d, y.d))
            y = QuadExt._raw(y.a, y.b / f, x.d)
        else:
            # 1, sqrt(dx), sqrt(dy) are linearly independent over Q
            if x.b == 0 and y.b == 0 and x.a == y.a:
                return 0
            bits = 32
            while bits <= max_bits:
                xl, xh = enclosure(x, bits)
                yl, yh = enclosure(y, bits)
                if xh < yl:
                    return -1
                if yh < xl:
                    return 1
                bits *= 2
            raise ArithmeticError("comparison did not separate")  # pragma: no cover
    if isinstance(x, QuadExt):
        return (x - y).sign()
    if isinstance(y, QuadExt):
        return -(y - x).sign()
    fx, fy = Fraction(x), Fraction(y)
    return (fx > fy) - (fx < fy)
