"""Boolean-Narayana and Narayana polynomials and the checks built on them.

BoNa_n(u) = sum_k BoNa(n, k) u^k is produced by its three-term recurrence
and compared against the explicit numbers.  The link to the Narayana
polynomials runs through the roots r1, r2 of t^2 + (1+u) t + 2u and the
ratio q(u) = r1/r2, evaluated exactly in Q(sqrt(u^2 - 6u + 1)).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional, Sequence, Union

from .errors import ConsistencyError, DomainError
from .numbers import binomial
from .poly import IntPolynomial, check_interlacing, is_real_rooted
from .quadext import QuadExt, compare, sqrt_exact

__all__ = [
    "bona_from_narayana",
    "bona_poly",
    "check_bona_from_narayana",
    "check_q_monotone",
    "delta",
    "liu_wang_c",
    "liu_wang_hypotheses_check",
    "narayana_poly",
    "narayana_poly_recurrence_check",
    "narayana_recurrence_failure",
    "q_of_u",
    "quad_r1_r2",
]

Rational = Union[int, Fraction]

U = IntPolynomial.x()
# u^2 - 6u + 1, the discriminant of 1 + (1+u) y + 2u y^2 in y
DELTA = IntPolynomial([1, -6, 1])


@lru_cache(maxsize=None)
def bona_poly(n: int) -> IntPolynomial:
    """BoNa_n(u) from BoNa_1 = u, BoNa_2 = u + u^2 and

        (n+1) BoNa_n = (2n-1)(1+u) BoNa_{n-1} - (n-2)(u^2-6u+1) BoNa_{n-2}.

    The division by n + 1 is checked to be exact.
    """
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    if n == 1:
        return U
    if n == 2:
        return IntPolynomial([0, 1, 1])
    rhs = (2 * n - 1) * IntPolynomial([1, 1]) * bona_poly(n - 1) \
        - (n - 2) * DELTA * bona_poly(n - 2)
    return rhs.exact_div(n + 1)


def narayana_poly(n: int, normalized: bool = False) -> IntPolynomial:
    """sum_{j=1}^n C(n,j) C(n,j-1) q^j.

    These coefficients are n * N(n, j).  With ``normalized`` the factor n is
    removed, giving sum_j N(n, j) q^j.
    """
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    p = IntPolynomial([0] + [binomial(n, j) * binomial(n, j - 1) for j in range(1, n + 1)])
    return p.exact_div(n) if normalized else p


def _narayana_rec_holds(n: int, normalized: bool) -> bool:
    x1 = IntPolynomial([1, 1])
    xm1_sq = IntPolynomial([1, -2, 1])
    lhs = (n + 1) * narayana_poly(n, normalized)
    rhs = (2 * n - 1) * x1 * narayana_poly(n - 1, normalized) \
        - (n - 2) * xm1_sq * narayana_poly(n - 2, normalized)
    return lhs == rhs


def narayana_recurrence_failure(n_max: int, normalized: bool = True) -> Optional[int]:
    """First n in 3..n_max where

        (n+1) N_n(x) = (2n-1)(1+x) N_{n-1}(x) - (n-2)(x-1)^2 N_{n-2}(x)

    fails, or None.  The identity holds for the Narayana polynomials
    sum_j N(n, j) x^j (``normalized=True``); the scaled family with
    coefficients C(n,j) C(n,j-1) already fails at n = 3.
    """
    for n in range(3, n_max + 1):
        if not _narayana_rec_holds(n, normalized):
            return n
    return None


def narayana_poly_recurrence_check(n_max: int) -> bool:
    return narayana_recurrence_failure(n_max) is None


def delta(u: Rational) -> Fraction:
    u = Fraction(u)
    return u * u - 6 * u + 1


def quad_r1_r2(u: Rational) -> tuple[QuadExt | Fraction, QuadExt | Fraction]:
    """The roots r1, r2 of t^2 + (1+u) t + 2u for u < 0.

    With s = sqrt(u^2 - 6u + 1) > 0 the branch is
    r1 = (s - (1+u))/2 and r2 = -((1+u) + s)/2, so r1/r2 = (1+u-s)/(1+u+s).
    """
    u = Fraction(u)
    if u >= 0:
        raise DomainError(f"r1, r2 are taken for u < 0 only, got {u}")
    s = sqrt_exact(delta(u))
    r1 = (s - (1 + u)) / 2
    r2 = -((1 + u) + s) / 2
    return r1, r2


def q_of_u(u: Rational) -> QuadExt | Fraction:
    r1, r2 = quad_r1_r2(u)
    return r1 / r2


def bona_from_narayana(n: int, u: Rational) -> Fraction:
    """Evaluate BoNa_n(u) through the Narayana polynomial at q(u).

    Extracting [y^(n-1)] from ((1 - r1 y)(1 - r2 y))^n gives

        BoNa_n(u) = u/(n q) * (-1)^(n-1) * r2^(n-1) * N_n(q),   q = r1/r2,

    with N_n the scaled polynomial of :func:`narayana_poly`.  The result must
    land back in Q; a surviving sqrt component raises ConsistencyError.
    """
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    u = Fraction(u)
    r1, r2 = quad_r1_r2(u)
    q = r1 / r2
    val = u * (-1) ** (n - 1) * r2 ** (n - 1) * narayana_poly(n)(q) / (n * q)
    if isinstance(val, QuadExt):
        if val.b != 0:
            raise ConsistencyError(f"irrational part {val.b}*sqrt({val.d}) survived")
        return val.a
    return Fraction(val)


def check_bona_from_narayana(n: int, u: Rational) -> bool:
    return bona_from_narayana(n, u) == bona_poly(n)(Fraction(u))


def check_q_monotone(samples: Sequence[Rational]) -> bool:
    """q is negative at every sample and strictly increasing along them."""
    us = [Fraction(x) for x in samples]
    if any(b <= a for a, b in zip(us, us[1:])):
        raise DomainError("samples must be strictly increasing")
    if any(x >= 0 for x in us):
        raise DomainError("samples must be negative")
    qs = [q_of_u(x) for x in us]
    if any(compare(q, 0) >= 0 for q in qs):
        return False
    return all(compare(a, b) < 0 for a, b in zip(qs, qs[1:]))


def liu_wang_c(n: int, u: Rational) -> Fraction:
    """c_n(u) = -(n-2)/(n+1) * (u^2 - 6u + 1), the coefficient of BoNa_{n-2}."""
    return -Fraction(n - 2, n + 1) * delta(u)


DEFAULT_U_GRID = (Fraction(0), Fraction(-1, 10), Fraction(-1, 3), Fraction(-1, 2),
                  Fraction(-1), Fraction(-2), Fraction(-3), Fraction(-5),
                  Fraction(-10), Fraction(-1000))


def liu_wang_hypotheses_check(n_max: int, grid: Iterable[Rational] = DEFAULT_U_GRID) -> bool:
    """Check the hypotheses of the interlacing criterion for 3 <= n <= n_max.

    b_n is identically zero, so what remains is c_n(u) < 0 for u <= 0,
    nonnegative coefficients with positive ones in degrees 1..n, and
    deg BoNa_n = deg BoNa_{n-1} + 1.
    """
    if n_max < 3:
        raise DomainError("n_max must be at least 3")
    grid = [Fraction(x) for x in grid]
    if any(x > 0 for x in grid):
        raise DomainError("grid points must be <= 0")
    for n in range(3, n_max + 1):
        p, prev = bona_poly(n), bona_poly(n - 1)
        if p.degree != prev.degree + 1 or p.degree != n:
            return False
        if p[0] != 0 or any(p[i] <= 0 for i in range(1, n + 1)):
            return False
        if any(liu_wang_c(n, x) >= 0 for x in grid):
            return False
    return True


def bona_interlaces(n: int) -> bool:
    """BoNa_n and BoNa_{n-1} weakly interlace and share only the root 0."""
    p, q = bona_poly(n), bona_poly(n - 1)
    return check_interlacing(p, q) and p.gcd(q) == U


def bona_real_rooted(n: int) -> bool:
    return is_real_rooted(bona_poly(n))
