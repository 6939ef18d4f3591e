"""Boolean-Narayana, Boolean-Catalan, Narayana and Catalan numbers.

All values are Python ints, so arithmetic is exact at any size.  BoNa(n, k)
counts 0-1 trees on n vertices with k - 1 right edges and is computed here
in three independent ways:

* :func:`bona_explicit` -- the closed-form sum;
* :func:`bona_convolution_table` -- the root-decomposition recurrence;
* :func:`series_T` -- fixed-point expansion of T = z(1 + uT + T + 2uT^2).

:func:`bona_binomial_form` rewrites the closed form as a binomial transform
in n, which is what makes the columns log-concave.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .errors import ConsistencyError, DomainError

__all__ = [
    "BivariateSeries",
    "Triangle",
    "binomial",
    "bona",
    "bona_binomial_form",
    "bona_convolution_table",
    "bona_explicit",
    "bona_row",
    "boolean_catalan",
    "boolean_catalan_series",
    "catalan",
    "exact_div",
    "explicit_table",
    "is_log_concave",
    "is_unimodal",
    "narayana",
    "series_T",
    "series_table",
    "vertical_log_concave",
]


def binomial(n: int, k: int) -> int:
    """Binomial coefficient, zero outside 0 <= k <= n."""
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise ConsistencyError(f"{num} is not divisible by {den}")
    return q


def _check_nk(n: int, k: int) -> None:
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    if not 1 <= k <= n:
        raise DomainError(f"k must satisfy 1 <= k <= n={n}, got {k}")


def bona_explicit(n: int, k: int) -> int:
    """BoNa(n, k) by the closed-form sum.

    For k > (n + 1)/2 the symmetric index n - k + 1 is used, so any
    1 <= k <= n is accepted.
    """
    _check_nk(n, k)
    if 2 * k > n + 1:
        k = n - k + 1
    total = sum(
        2**j * binomial(k - 1, j) * binomial(n - k + 1, j + 1) for j in range(k)
    )
    return exact_div(binomial(n, k - 1) * total, n)


bona = bona_explicit


def bona_row(n: int) -> list[int]:
    return [bona_explicit(n, k) for k in range(1, n + 1)]


def bona_binomial_form(n: int, k: int) -> int:
    """BoNa(n, k) as sum_m c_m * C(n-1, m), a binomial transform in n - 1.

    The weights c_m = a_{m-k+1} (for k-1 <= m <= 2k-2) depend only on k:
    a_j = 2^j / (k-1) * C(k-1, j) * C(k+j-1, k-2).  Requires k >= 2 because
    of the 1/(k-1) factor; the rearrangement is valid for every k <= n.
    """
    if k < 2:
        raise DomainError("binomial form needs k >= 2; use bona_explicit for k = 1")
    _check_nk(n, k)
    total = Fraction(0)
    for j in range(k):
        a_j = Fraction(2**j * binomial(k - 1, j) * binomial(k + j - 1, k - 2), k - 1)
        total += a_j * binomial(n - 1, k - 1 + j)
    if total.denominator != 1:
        raise ConsistencyError(f"binomial form gave non-integer {total} at ({n}, {k})")
    return total.numerator


def binomial_form_weights(k: int) -> list[Fraction]:
    """The sequence c_0, ..., c_{2k-2} whose binomial transform is column k."""
    if k < 2:
        raise DomainError("weights are defined for k >= 2")
    c = [Fraction(0)] * (2 * k - 1)
    for j in range(k):
        c[k - 1 + j] = Fraction(
            2**j * binomial(k - 1, j) * binomial(k + j - 1, k - 2), k - 1
        )
    return c


@dataclass(frozen=True)
class Triangle:
    """Rows of BoNa(n, k); ``rows[n-1][k-1]`` holds BoNa(n, k)."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        for i, row in enumerate(self.rows, start=1):
            if len(row) != i:
                raise ValueError(f"row {i} has length {len(row)}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "Triangle":
        return cls(tuple(tuple(int(v) for v in r) for r in rows))

    @property
    def n_max(self) -> int:
        return len(self.rows)

    def row(self, n: int) -> tuple[int, ...]:
        return self.rows[n - 1]

    def value(self, n: int, k: int) -> int:
        if not 1 <= k <= n:
            return 0
        return self.rows[n - 1][k - 1]

    def row_sums(self) -> list[int]:
        return [sum(r) for r in self.rows]

    def is_symmetric(self) -> bool:
        return all(r == r[::-1] for r in self.rows)


def explicit_table(n_max: int) -> Triangle:
    return Triangle.from_rows([bona_row(n) for n in range(1, n_max + 1)])


def bona_convolution_table(n_max: int) -> Triangle:
    """Build rows 1..n_max from BoNa(1,1) = 1 by decomposing at the root.

    A root with only a left child contributes BoNa(n-1, k); only a right
    child, BoNa(n-1, k-1); two children (labelled 0 or 1) with a left
    subtree of i - 1 vertices contributes 2 * sum_j BoNa(i-1, j) BoNa(n-i, k-j),
    the extra right edge to the right child accounting for the shift.
    """
    if n_max < 1:
        raise DomainError("n_max must be positive")
    # t[n][k] with 1-based n and k; out-of-range entries read as 0
    t: list[list[int]] = [[0], [0, 1]]

    def get(n: int, k: int) -> int:
        if n < 1 or k < 1 or k > n:
            return 0
        return t[n][k]

    for n in range(2, n_max + 1):
        row = [0] * (n + 1)
        for k in range(1, n + 1):
            v = get(n - 1, k) + get(n - 1, k - 1)
            conv = 0
            for i in range(2, n):
                for j in range(1, i):
                    conv += get(i - 1, j) * get(n - i, k - j)
            row[k] = v + 2 * conv
        t.append(row)
    return Triangle.from_rows([t[n][1:] for n in range(1, n_max + 1)])


@dataclass(frozen=True)
class BivariateSeries:
    """Truncated series sum c[n][k] z^n u^k for 0 <= n <= order."""

    coeffs: tuple[tuple[int, ...], ...]
    order: int

    def coeff(self, n: int, k: int) -> int:
        if n < 0 or n > self.order or k < 0:
            return 0
        row = self.coeffs[n]
        return row[k] if k < len(row) else 0


def _upoly_mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def series_T(order: int) -> BivariateSeries:
    """Solve T = z(1 + uT + T + 2uT^2) up to z^order.

    Fixed-point iteration T <- z * phi(T): since the right side multiplies
    by z, pass m settles the coefficient of z^m, which depends only on the
    already-settled lower coefficients.  The coefficient of z^n u^(k-1) is
    BoNa(n, k).
    """
    if order < 1:
        raise DomainError("order must be positive")
    # T[m] is the polynomial in u multiplying z^m
    T: list[list[int]] = [[0]]
    for m in range(1, order + 1):
        prev = T[m - 1]
        coef = [0] * (m + 1)
        if m == 1:
            coef[0] = 1
        for k, v in enumerate(prev):
            coef[k] += v
            coef[k + 1] += v
        # [z^(m-1)] T^2
        sq = [0]
        for i in range(1, m - 1):
            sq = _padd(sq, _upoly_mul(T[i], T[m - 1 - i]))
        for k, v in enumerate(sq):
            coef[k + 1] += 2 * v
        T.append(coef)
    return BivariateSeries(tuple(tuple(r) for r in T), order)


def _padd(a: Sequence[int], b: Sequence[int]) -> list[int]:
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]


def series_table(n_max: int) -> Triangle:
    s = series_T(n_max)
    return Triangle.from_rows(
        [[s.coeff(n, k - 1) for k in range(1, n + 1)] for n in range(1, n_max + 1)]
    )


def _sqrt_series(p: Sequence[int], terms: int) -> list[Fraction]:
    """First ``terms`` coefficients of sqrt(p) with p[0] = 1 and constant term 1."""
    if p[0] != 1:
        raise DomainError("series square root needs constant term 1")
    pc = list(p) + [0] * max(0, terms - len(p))
    s = [Fraction(1)]
    for m in range(1, terms):
        acc = sum((s[i] * s[m - i] for i in range(1, m)), Fraction(0))
        s.append((pc[m] - acc) / 2)
    return s


def boolean_catalan_series(n_max: int) -> list[int]:
    """B(1..n_max) from the coefficients of (1 - 2z - sqrt(1 - 4z - 4z^2)) / (4z)."""
    s = _sqrt_series([1, -4, -4], n_max + 2)
    out = []
    for n in range(1, n_max + 1):
        # numerator coefficient of z^(n+1) is -s[n+1] for n >= 1
        v = -s[n + 1] / 4
        if v.denominator != 1:
            raise ConsistencyError(f"B({n}) came out non-integral: {v}")
        out.append(v.numerator)
    return out


def boolean_catalan(n: int, method: str = "sum") -> int:
    """Number of 0-1 trees on n vertices.

    ``method="sum"`` adds a row of the explicit triangle; ``method="series"``
    expands the closed-form generating function over the rationals.
    """
    if n < 1:
        raise DomainError("n must be positive")
    if method == "sum":
        return sum(bona_row(n))
    if method == "series":
        return boolean_catalan_series(n)[-1]
    raise ValueError(f"unknown method {method!r}")


def narayana(n: int, k: int) -> int:
    """Binary plane trees on n vertices with k - 1 right edges: C(n,k)C(n,k-1)/n."""
    _check_nk(n, k)
    return exact_div(binomial(n, k) * binomial(n, k - 1), n)


def catalan(n: int) -> int:
    if n < 0:
        raise DomainError("n must be nonnegative")
    return exact_div(binomial(2 * n, n), n + 1)


def is_log_concave(seq: Sequence[int]) -> bool:
    return all(seq[i] ** 2 >= seq[i - 1] * seq[i + 1] for i in range(1, len(seq) - 1))


def is_unimodal(seq: Sequence[int]) -> bool:
    i = 0
    while i + 1 < len(seq) and seq[i] <= seq[i + 1]:
        i += 1
    while i + 1 < len(seq) and seq[i] >= seq[i + 1]:
        i += 1
    return i == len(seq) - 1 if seq else True


def vertical_log_concave(
    k: int, n_hi: int, value: Callable[[int, int], int] = bona_explicit
) -> bool:
    """BoNa(n,k)^2 >= BoNa(n-1,k) BoNa(n+1,k) for k+2 <= n <= n_hi."""
    return all(
        value(n, k) ** 2 >= value(n - 1, k) * value(n + 1, k)
        for n in range(k + 2, n_hi + 1)
    )
