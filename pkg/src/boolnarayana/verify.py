"""Named verification checks grouped into suites, as run by ``bona verify``.

Each check takes an optional size cap and returns ``(passed, detail)``.
Default caps are the exhaustive bounds the library is meant to certify;
``max_n`` lowers (never raises) them.
"""

from __future__ import annotations

import logging
import time
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Callable, Optional

from . import numbers as nb
from . import permutations as pm
from . import polynomials as pl
from . import trees as tr
from .errors import InconclusiveError
from .poly import isolate_roots, sturm_real_root_count

log = logging.getLogger(__name__)

SUITES = ("numbers", "trees", "polynomials", "permutations")

LISTED_ROWS = ((1,), (1, 1), (1, 4, 1), (1, 9, 9, 1), (1, 16, 38, 16, 1))
BRIDGE_POINTS = (Fraction(-1, 3), Fraction(-1, 2), Fraction(-1), Fraction(-2), Fraction(-5))
Q_SAMPLES = (Fraction(-4), Fraction(-3), Fraction(-2), Fraction(-1),
             Fraction(-1, 2), Fraction(-1, 4))
SYMMETRIC_PATTERN_SETS = ("231,312", "132,312")


@dataclass
class CheckResult:
    name: str
    suite: str
    passed: bool
    detail: str
    seconds: float


@dataclass(frozen=True)
class Check:
    name: str
    suite: str
    default_n: int
    run: Callable[[int, bool], tuple[bool, str]]


def _cap(default: int, max_n: Optional[int]) -> int:
    return default if max_n is None else min(default, max_n)


# -- numbers -------------------------------------------------------------------

def _triangle_reproduction(n: int, parallel: bool) -> tuple[bool, str]:
    expected = nb.Triangle.from_rows(LISTED_ROWS)
    methods = {
        "explicit": nb.explicit_table(5),
        "convolution": nb.bona_convolution_table(5),
        "series": nb.series_table(5),
        "enumerate": nb.Triangle.from_rows([tr.right_edge_histogram(m) for m in range(1, 6)]),
    }
    bad = [k for k, t in methods.items() if t != expected]
    return not bad, "rows 1..5 match via all four methods" if not bad else f"mismatch: {bad}"


def _four_way(n: int, parallel: bool) -> tuple[bool, str]:
    e = nb.explicit_table(n)
    if nb.bona_convolution_table(n) != e:
        return False, "convolution disagrees"
    if nb.series_table(n) != e:
        return False, "series disagrees"
    m = min(n, 12)
    for k in range(1, m + 1):
        if tr.right_edge_histogram(k, parallel=parallel) != list(e.row(k)):
            return False, f"enumeration disagrees at n={k}"
    return True, f"explicit = convolution = series for n <= {n}; enumeration for n <= {m}"


def _bona_n2(n: int, parallel: bool) -> tuple[bool, str]:
    ok = all(nb.bona_explicit(m, 2) == (m - 1) ** 2 for m in range(2, n + 1))
    return ok, f"BoNa(n,2) = (n-1)^2 for 2 <= n <= {n}"


def _symmetry(n: int, parallel: bool) -> tuple[bool, str]:
    # the convolution table never uses the symmetry reduction
    t = nb.bona_convolution_table(n)
    return t.is_symmetric(), f"rows palindromic for n <= {n}"


def _row_sums(n: int, parallel: bool) -> tuple[bool, str]:
    sums = nb.explicit_table(n).row_sums()
    ok = sums == nb.boolean_catalan_series(n)
    return ok, f"row sums equal series B(n) for n <= {n}"


def _log_concavity(n: int, parallel: bool) -> tuple[bool, str]:
    for m in range(1, n + 1):
        row = nb.bona_row(m)
        if not (nb.is_log_concave(row) and nb.is_unimodal(row)):
            return False, f"row {m} not log-concave/unimodal"
    top = n - 1
    for k in range(2, top):
        if not nb.vertical_log_concave(k, top):
            return False, f"column {k} not log-concave up to n={top}"
    for m in range(2, n + 1):
        for k in range(2, (m + 1) // 2 + 1):
            if nb.bona_binomial_form(m, k) != nb.bona_explicit(m, k):
                return False, f"binomial form disagrees at ({m},{k})"
    return True, f"horizontal n <= {n}, vertical n <= {top}, binomial form agrees"


# -- trees -----------------------------------------------------------------------

def _involution(n: int, parallel: bool) -> tuple[bool, str]:
    for m in range(1, n + 1):
        for t in tr.enumerate_trees(m):
            f = tr.involution_f(t)
            if tr.involution_f(f) != t or f.right_edges != t.left_edges \
                    or f.left_edges != t.right_edges or f.two_child != t.two_child:
                return False, f"failure at {tr.to_string(t)}"
    return True, f"f is an involution swapping edge sides for n <= {n}"


def _injection(n: int, parallel: bool) -> tuple[bool, str]:
    checked = 0
    for m in range(2, n + 1):
        by_k: dict[int, list] = {}
        for t in tr.enumerate_trees(m):
            k = t.right_edges + 1
            if 2 * k <= m - 1:
                by_k.setdefault(k, []).append(t)
        for k, src in by_k.items():
            images = set()
            for t in src:
                z = tr.injection_z(t)
                if z.right_edges != t.right_edges + 1 or z.size != m \
                        or z.two_child != t.two_child:
                    return False, f"bad image of {tr.to_string(t)}"
                if tr.injection_z_inverse(z) != t:
                    return False, f"round trip fails at {tr.to_string(t)}"
                images.add(z)
            if len(images) != len(src):
                return False, f"not injective on BoNa({m},{k})"
            checked += len(src)
    return True, f"{checked} trees, n <= {n}: injective, +1 right edge, inverse round-trips"


def _excess_steps(n: int, parallel: bool) -> tuple[bool, str]:
    for m in range(1, n + 1):
        for t in tr.enumerate_trees(m):
            d = tr.excess_profile(t)
            if any(abs(b - a) > 1 for a, b in zip([0] + d, d)):
                return False, f"jump in excess at {tr.to_string(t)}"
    return True, f"prefix-forest excess moves by at most 1, n <= {n}"


# -- polynomials -------------------------------------------------------------------

def _real_roots(n: int, parallel: bool) -> tuple[bool, str]:
    for m in range(1, n + 1):
        p = pl.bona_poly(m)
        if sturm_real_root_count(p) != m or not pl.bona_real_rooted(m):
            return False, f"BoNa_{m} is not real-rooted with simple roots"
        ivs = isolate_roots(p, Fraction(1, 2**10))
        zeros = [iv for iv in ivs if iv.is_exact and iv.lo == 0]
        others = [iv for iv in ivs if iv not in zeros]
        if len(zeros) != 1 or any(iv.hi > 0 for iv in others):
            return False, f"root layout of BoNa_{m} is wrong"
    return True, f"n distinct real roots, one at 0, rest negative, n <= {n}"


def _interlacing(n: int, parallel: bool) -> tuple[bool, str]:
    for m in range(3, n + 1):
        try:
            if not pl.bona_interlaces(m):
                return False, f"BoNa_{m} vs BoNa_{m - 1} do not interlace"
        except InconclusiveError as e:
            return False, f"inconclusive at n={m}: {e}"
    return True, f"weak interlacing for 3 <= n <= {n}"


def _recurrences(n: int, parallel: bool) -> tuple[bool, str]:
    for m in range(1, n + 1):
        if list(pl.bona_poly(m).coeffs[1:]) != nb.bona_row(m):
            return False, f"recurrence disagrees with explicit numbers at n={m}"
    nmax = min(n, 20)
    bad = pl.narayana_recurrence_failure(nmax)
    if bad is not None:
        return False, f"Narayana recurrence fails at n={bad}"
    return True, f"BoNa recurrence exact for n <= {n}; Narayana recurrence for n <= {nmax}"


def _bridge(n: int, parallel: bool) -> tuple[bool, str]:
    for m in range(1, n + 1):
        for u in BRIDGE_POINTS:
            if not pl.check_bona_from_narayana(m, u):
                return False, f"bridge fails at n={m}, u={u}"
    if pl.q_of_u(-1) != -1:
        return False, "q(-1) != -1"
    if not pl.check_q_monotone(Q_SAMPLES):
        return False, "q not increasing and negative on samples"
    return True, f"bridge exact for n <= {n}; q(-1) = -1; q monotone"


def _liu_wang(n: int, parallel: bool) -> tuple[bool, str]:
    ok = pl.liu_wang_hypotheses_check(max(n, 3))
    return ok, f"c_n(u) < 0 on grid, positive coefficients, degree ladder, n <= {n}"


# -- permutations --------------------------------------------------------------------

def _preimage_tables(n: int, parallel: bool) -> tuple[bool, str]:
    for pats in SYMMETRIC_PATTERN_SETS:
        for m in range(1, n + 1):
            t = pm.preimage_descent_table(m, pats, parallel=parallel)
            if list(t.counts) != nb.bona_row(m):
                return False, f"{{{pats}}} differs from BoNa row {m}"
    return True, f"both pattern sets give BoNa rows for n <= {n}"


def _catalan_preimages(n: int, parallel: bool) -> tuple[bool, str]:
    ok = all(pm.count_sorted_preimages(m) == nb.catalan(m) for m in range(1, n + 1))
    return ok, f"|s^-1(Av_n(21))| = C_n for n <= {n}"


def _descent_palindromes(n: int, parallel: bool) -> tuple[bool, str]:
    for pats in SYMMETRIC_PATTERN_SETS:
        for m in range(1, n + 1):
            if not pm.check_descent_symmetry(m, pats, parallel=parallel):
                return False, f"{{{pats}}} table not palindromic at n={m}"
    return True, f"descent tables palindromic for n <= {n}"


CHECKS: tuple[Check, ...] = (
    Check("triangle_reproduction", "numbers", 5, _triangle_reproduction),
    Check("four_way_agreement", "numbers", 30, _four_way),
    Check("bona_n2_square", "numbers", 30, _bona_n2),
    Check("symmetry", "numbers", 30, _symmetry),
    Check("row_sums", "numbers", 30, _row_sums),
    Check("log_concavity", "numbers", 30, _log_concavity),
    Check("involution_f", "trees", 8, _involution),
    Check("injection_z", "trees", 10, _injection),
    Check("excess_steps", "trees", 10, _excess_steps),
    Check("real_rootedness", "polynomials", 20, _real_roots),
    Check("interlacing", "polynomials", 20, _interlacing),
    Check("recurrences", "polynomials", 30, _recurrences),
    Check("algebraic_bridge", "polynomials", 12, _bridge),
    Check("liu_wang_hypotheses", "polynomials", 20, _liu_wang),
    Check("preimage_tables", "permutations", 9, _preimage_tables),
    Check("catalan_preimages", "permutations", 9, _catalan_preimages),
    Check("descent_palindromes", "permutations", 9, _descent_palindromes),
)


def run_suite(suite: str = "all", max_n: Optional[int] = None,
              parallel: bool = False,
              on_result: Optional[Callable[[CheckResult], None]] = None) -> list[CheckResult]:
    if suite != "all" and suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    out = []
    for chk in CHECKS:
        if suite != "all" and chk.suite != suite:
            continue
        n = chk.default_n if chk.name == "triangle_reproduction" else _cap(chk.default_n, max_n)
        log.info("running %s (n <= %d)", chk.name, n)
        t0 = time.perf_counter()
        try:
            ok, detail = chk.run(n, parallel)
        except Exception as e:  # a crashing check is a failed check
            ok, detail = False, f"{type(e).__name__}: {e}"
        res = CheckResult(chk.name, chk.suite, bool(ok), detail,
                          round(time.perf_counter() - t0, 3))
        out.append(res)
        if on_result is not None:
            on_result(res)
    return out


def summary(results: list[CheckResult], suite: str, max_n: Optional[int]) -> dict:
    return {
        "suite": suite,
        "max_n": max_n,
        "passed": all(r.passed for r in results),
        "checks": [asdict(r) for r in results],
    }
