"""One test per acceptance criterion, each at its full exhaustive cap.

Every test reports under its criterion number in the "acceptance criteria"
section of the pytest summary.
"""

from fractions import Fraction

import pytest

from boolnarayana import numbers as nb
from boolnarayana import permutations as pm
from boolnarayana import polynomials as pl
from boolnarayana import trees as tr
from boolnarayana.poly import isolate_roots, sturm_real_root_count

criterion = pytest.mark.criterion

LISTED_ROWS = [[1], [1, 1], [1, 4, 1], [1, 9, 9, 1], [1, 16, 38, 16, 1]]
PATTERN_SETS = ("231,312", "132,312")


@criterion(1, "triangle rows 1..5 via all four methods")
def test_c01_triangle_reproduction():
    expected = nb.Triangle.from_rows(LISTED_ROWS)
    assert nb.explicit_table(5) == expected
    assert nb.bona_convolution_table(5) == expected
    assert nb.series_table(5) == expected
    assert [tr.right_edge_histogram(n) for n in range(1, 6)] == LISTED_ROWS


@criterion(2, "explicit = convolution = series (n<=30), enumeration (n<=12)")
def test_c02_four_way_agreement():
    explicit = nb.explicit_table(30)
    assert nb.bona_convolution_table(30) == explicit
    assert nb.series_table(30) == explicit
    for n in range(1, 13):
        assert tr.right_edge_histogram(n, parallel=n >= 11) == list(explicit.row(n))


@criterion(3, "BoNa(n,2) = (n-1)^2 for 2 <= n <= 30")
def test_c03_second_column():
    assert all(nb.bona_explicit(n, 2) == (n - 1) ** 2 for n in range(2, 31))


@criterion(4, "descent tables of s^-1(Av(Q)) equal BoNa rows, n <= 9")
def test_c04_preimage_tables():
    for pats in PATTERN_SETS:
        for n in range(1, 10):
            table = pm.preimage_descent_table(n, pats, parallel=n == 9)
            assert list(table.counts) == nb.bona_row(n), (pats, n)


@criterion(5, "|s^-1(Av_n(21))| = C_n for n <= 9")
def test_c05_catalan_preimages():
    assert [pm.count_sorted_preimages(n) for n in range(1, 10)] == \
        [nb.catalan(n) for n in range(1, 10)]


@criterion(6, "row symmetry (n<=30) and palindromic descent tables (n<=9)")
def test_c06_symmetry():
    tri = nb.bona_convolution_table(30)
    for n in range(1, 31):
        assert all(tri.value(n, k) == tri.value(n, n - k + 1) for k in range(1, n + 1))
    for pats in PATTERN_SETS:
        for n in range(1, 10):
            assert pm.check_descent_symmetry(n, pats, parallel=n == 9), (pats, n)


@criterion(7, "z injective, +1 right edge, z^-1 o z = id for n <= 10")
def test_c07_injection():
    for n in range(2, 11):
        by_k = {}
        for t in tr.enumerate_trees(n):
            k = t.right_edges + 1
            if 2 * k <= n - 1:
                by_k.setdefault(k, []).append(t)
        for k, src in by_k.items():
            images = set()
            for t in src:
                z = tr.injection_z(t)
                assert z.size == n and z.right_edges == t.right_edges + 1
                assert tr.injection_z_inverse(z) == t
                images.add(z)
            assert len(images) == len(src) == nb.bona_explicit(n, k)


@criterion(8, "BoNa_n has n simple real roots, one at 0, rest negative, n <= 20")
def test_c08_real_rootedness():
    for n in range(1, 21):
        p = pl.bona_poly(n)
        assert sturm_real_root_count(p) == n
        assert p.squarefree_part().degree == n
        ivs = isolate_roots(p)
        zero = [iv for iv in ivs if iv.is_exact and iv.lo == 0]
        assert len(zero) == 1
        assert all(iv.hi <= 0 for iv in ivs)
        assert sum(1 for iv in ivs if iv.lo <= 0 <= iv.hi) == 1


@criterion(9, "BoNa_n and BoNa_{n-1} weakly interlace, 3 <= n <= 20")
def test_c09_interlacing():
    # InconclusiveError would propagate and fail the test
    assert all(pl.bona_interlaces(n) for n in range(3, 21))


@criterion(10, "BoNa recurrence exact for n <= 30, Narayana recurrence n <= 20")
def test_c10_recurrences():
    for n in range(1, 31):
        assert list(pl.bona_poly(n).coeffs[1:]) == nb.bona_row(n)
    assert pl.narayana_recurrence_failure(20) is None


@criterion(11, "bridge to Narayana polynomials, q(-1) = -1, q monotone")
def test_c11_algebraic_bridge():
    points = [Fraction(-1, 3), Fraction(-1, 2), -1, -2, -5]
    for n in range(1, 13):
        for u in points:
            assert pl.check_bona_from_narayana(n, u), (n, u)
    assert pl.q_of_u(-1) == -1
    assert pl.check_q_monotone([-4, -3, -2, -1, Fraction(-1, 2), Fraction(-1, 4)])


@criterion(12, "horizontal/vertical log-concavity and the binomial-transform form")
def test_c12_log_concavity():
    for n in range(1, 31):
        row = nb.bona_row(n)
        assert all(row[i] ** 2 >= row[i - 1] * row[i + 1] for i in range(1, n - 1))
    for k in range(2, 29):
        col = [nb.bona_explicit(n, k) for n in range(k, 30)]
        assert all(col[i] ** 2 >= col[i - 1] * col[i + 1] for i in range(1, len(col) - 1))
    for n in range(2, 31):
        for k in range(2, n + 1):
            assert nb.bona_binomial_form(n, k) == nb.bona_explicit(n, k), (n, k)
