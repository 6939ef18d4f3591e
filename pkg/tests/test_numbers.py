import pytest
from hypothesis import given, strategies as st

from boolnarayana.errors import DomainError
from boolnarayana.numbers import (
    Triangle,
    binomial,
    binomial_form_weights,
    bona_binomial_form,
    bona_convolution_table,
    bona_explicit,
    bona_row,
    boolean_catalan,
    boolean_catalan_series,
    catalan,
    explicit_table,
    is_log_concave,
    is_unimodal,
    narayana,
    series_T,
    series_table,
    vertical_log_concave,
)


def binary_plane_trees(n):
    """Unlabelled binary plane trees as nested tuples (left, right); None is empty."""
    if n == 0:
        yield None
        return
    for ls in range(n):
        for l in binary_plane_trees(ls):
            for r in binary_plane_trees(n - 1 - ls):
                yield (l, r)


def right_edges(t):
    if t is None:
        return 0
    l, r = t
    return right_edges(l) + right_edges(r) + (r is not None)


@pytest.mark.parametrize("n,k,expected", [(4, 2, 6), (7, 0, 1), (10, 5, 252),
                                          (3, 4, 0), (3, -1, 0)])
def test_binomial(n, k, expected):
    assert binomial(n, k) == expected


@pytest.mark.parametrize("n,k,expected", [(4, 2, 9), (5, 3, 38), (1, 1, 1), (5, 5, 1)])
def test_bona_explicit_values(n, k, expected):
    assert bona_explicit(n, k) == expected


def test_bona_n_2_is_square():
    assert all(bona_explicit(n, 2) == (n - 1) ** 2 for n in range(2, 21))


@pytest.mark.parametrize("n,k", [(0, 1), (3, 0), (3, 4)])
def test_bona_explicit_rejects(n, k):
    with pytest.raises(DomainError):
        bona_explicit(n, k)


def test_convolution_rows():
    t = bona_convolution_table(5)
    assert t.row(3) == (1, 4, 1)
    assert t.row(5) == (1, 16, 38, 16, 1)


def test_convolution_matches_explicit():
    assert bona_convolution_table(30) == explicit_table(30)


def test_series_coefficients():
    s = series_T(20)
    assert s.coeff(1, 0) == 1
    assert s.coeff(4, 1) == 9
    assert s.coeff(0, 0) == 0
    for n in range(1, 21):
        assert s.coeff(n, n) == 0
        assert [s.coeff(n, k - 1) for k in range(1, n + 1)] == bona_row(n)


def test_series_table_matches_explicit():
    assert series_table(30) == explicit_table(30)


def test_binomial_form_values():
    assert bona_binomial_form(5, 3) == 38
    for n in range(2, 21):
        assert bona_binomial_form(n, 2) == (n - 1) ** 2


def test_binomial_form_agrees_on_domain():
    for n in range(2, 31):
        for k in range(2, (n + 1) // 2 + 1):
            assert bona_binomial_form(n, k) == bona_explicit(n, k)


def test_binomial_form_agrees_beyond_half():
    # the rearrangement never used k <= (n+1)/2
    for n in range(2, 16):
        for k in range(2, n + 1):
            assert bona_binomial_form(n, k) == bona_explicit(n, k)


def test_binomial_form_rejects_k1():
    with pytest.raises(DomainError):
        bona_binomial_form(5, 1)


def test_binomial_form_weights_are_log_concave_without_internal_zeros():
    for k in range(2, 12):
        c = binomial_form_weights(k)
        nz = [i for i, x in enumerate(c) if x]
        assert nz == list(range(nz[0], nz[-1] + 1))
        assert all(c[i] ** 2 >= c[i - 1] * c[i + 1] for i in range(1, len(c) - 1))


@pytest.mark.parametrize("n,expected", [(1, 1), (3, 6), (5, 72)])
def test_boolean_catalan(n, expected):
    assert boolean_catalan(n) == expected
    assert boolean_catalan(n, method="series") == expected


def test_boolean_catalan_methods_agree():
    series = boolean_catalan_series(30)
    assert series == [boolean_catalan(n) for n in range(1, 31)]


def test_narayana_against_tree_bruteforce():
    for n in range(1, 8):
        hist = [0] * n
        for t in binary_plane_trees(n):
            hist[right_edges(t)] += 1
        assert hist == [narayana(n, k) for k in range(1, n + 1)]
    assert [narayana(3, k) for k in (1, 2, 3)] == [1, 3, 1]


def test_narayana_row_sums_are_catalan():
    for n in range(1, 16):
        assert sum(narayana(n, k) for k in range(1, n + 1)) == catalan(n)
        assert narayana(n, 1) == 1


@pytest.mark.parametrize("n,expected", [(0, 1), (3, 5), (10, 16796)])
def test_catalan(n, expected):
    assert catalan(n) == expected


def test_symmetry_and_row_sums():
    t = bona_convolution_table(30)
    assert t.is_symmetric()
    assert t.row_sums() == boolean_catalan_series(30)


def test_horizontal_and_vertical_log_concavity():
    for n in range(1, 31):
        row = bona_row(n)
        assert is_log_concave(row)
        assert is_unimodal(row)
    for k in range(2, 28):
        assert vertical_log_concave(k, 29)


def test_sequence_predicates():
    assert is_unimodal([1, 2, 2, 5, 3, 1])
    assert not is_unimodal([1, 3, 2, 3])
    assert is_unimodal([])
    assert is_log_concave([1, 2, 3])
    assert not is_log_concave([1, 1, 2])


def test_triangle_validates_shape():
    with pytest.raises(ValueError):
        Triangle.from_rows([[1], [1]])
    t = Triangle.from_rows([[1], [1, 1]])
    assert t.value(2, 3) == 0 and t.value(2, 2) == 1


@given(st.integers(1, 60), st.data())
def test_explicit_symmetric_and_positive(n, data):
    k = data.draw(st.integers(1, n))
    v = bona_explicit(n, k)
    assert v > 0
    assert v == bona_explicit(n, n - k + 1)
    assert v >= narayana(n, k)
