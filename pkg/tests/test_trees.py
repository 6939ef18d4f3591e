from collections import Counter

import pytest
from hypothesis import given, strategies as st

from boolnarayana.errors import DomainError, SizeCapError
from boolnarayana.numbers import bona_row, boolean_catalan
from boolnarayana.trees import (
    ENUMERATION_CAP,
    LEAF,
    Node,
    enumerate_trees,
    excess_profile,
    from_string,
    injection_z,
    injection_z_inverse,
    involution_f,
    prefix_forest,
    right_edge_histogram,
    stats,
    to_string,
    total_order,
)


def shapes_by_paths(n):
    """All prefix-closed sets of L/R paths of size n: tree shapes, found by growth."""
    level = {frozenset([""])}
    for _ in range(n - 1):
        nxt = set()
        for s in level:
            for p in s:
                for c in (p + "L", p + "R"):
                    if c not in s:
                        nxt.add(s | {c})
        level = nxt
    return level


def path_oracle_histogram(n):
    hist = Counter()
    for s in shapes_by_paths(n):
        right = sum(1 for p in s if p.endswith("R"))
        two = sum(1 for p in s if p + "L" in s and p + "R" in s)
        hist[right] += 2**two
    return [hist[r] for r in range(n)]


def paths_of(t, prefix=""):
    out = {prefix}
    for side, c in t.children():
        out |= paths_of(c, prefix + side)
    return out


def random_tree(draw_size, rng):
    """Uniform-ish random 0-1 tree grown from the root, for property tests."""
    def grow(n):
        if n == 1:
            return LEAF
        shape = rng.randrange(3)
        if shape == 0:
            return Node(grow(n - 1), None)
        if shape == 1:
            return Node(None, grow(n - 1))
        if n == 2:
            return Node(grow(1), None)
        ls = rng.randrange(1, n - 1)
        return Node(grow(ls), grow(n - 1 - ls), rng.randrange(2))
    return grow(draw_size)


trees_strategy = st.builds(
    lambda n, seed: random_tree(n, __import__("random").Random(seed)),
    st.integers(1, 14), st.integers(0, 2**32),
)


@pytest.mark.parametrize("n,count", [(1, 1), (3, 6), (5, 72)])
def test_enumeration_counts(n, count):
    assert sum(1 for _ in enumerate_trees(n)) == count


def test_enumeration_against_path_oracle():
    for n in range(1, 8):
        trees = list(enumerate_trees(n))
        assert len(set(trees)) == len(trees)
        assert len({frozenset(paths_of(t)) for t in trees}) == len(shapes_by_paths(n))
        assert right_edge_histogram(n) == path_oracle_histogram(n)


def test_enumeration_yields_valid_trees():
    for t in enumerate_trees(6):
        t.check()
        assert t.size == 6


def test_enumeration_is_deterministic():
    assert [to_string(t) for t in enumerate_trees(6)] == \
        [to_string(t) for t in enumerate_trees(6)]


def test_six_trees_on_three_vertices():
    got = sorted(to_string(t) for t in enumerate_trees(3))
    assert got == sorted(["( _ ( _ •))", "( _ (• _ ))", "(• 0 •)", "(• 1 •)",
                          "(( _ •) _ )", "((• _ ) _ )"])


def test_enumeration_cap():
    with pytest.raises(SizeCapError):
        enumerate_trees(ENUMERATION_CAP + 1)
    with pytest.raises(DomainError):
        enumerate_trees(0)


def test_histogram_matches_numbers_up_to_10():
    for n in range(1, 11):
        assert right_edge_histogram(n) == bona_row(n)
        assert sum(right_edge_histogram(n)) == boolean_catalan(n)


def test_parallel_histogram_matches_serial():
    assert right_edge_histogram(9, parallel=True) == right_edge_histogram(9)


def test_stats_examples():
    assert stats(LEAF) == stats(from_string("•"))
    s = stats(LEAF)
    assert (s.n, s.right_edges, s.left_edges) == (1, 0, 0)
    s = stats(Node(None, LEAF))
    assert (s.n, s.right_edges, s.left_edges) == (2, 1, 0)
    freq = Counter(stats(t).right_edges for t in enumerate_trees(4))
    assert dict(freq) == {0: 1, 1: 9, 2: 9, 3: 1}


@given(trees_strategy)
def test_stats_invariants(t):
    s = stats(t)
    assert s.left_edges + s.right_edges == s.n - 1
    assert s.two_child_count <= min(s.left_edges, s.right_edges)
    assert (s.n, s.right_edges, s.left_edges, s.two_child_count) == \
        (t.size, t.right_edges, t.left_edges, t.two_child)


@given(trees_strategy)
def test_string_round_trip(t):
    assert from_string(to_string(t)) == t


@pytest.mark.parametrize("bad", ["", "(•)", "(• 2 •)", "(• _ •)", "•x", "((• _ )"])
def test_from_string_rejects(bad):
    with pytest.raises(ValueError):
        from_string(bad)


def test_check_rejects_bad_labels():
    with pytest.raises(ValueError):
        Node(LEAF, LEAF).check()
    with pytest.raises(ValueError):
        Node(LEAF, None, 1).check()


def test_nodes_are_immutable():
    with pytest.raises(AttributeError):
        LEAF.label = 1


def test_involution_examples():
    assert involution_f(LEAF) == LEAF
    assert involution_f(Node(LEAF, None)) == Node(None, LEAF)
    t = from_string("((• _ ) 1 ( _ •))")
    assert involution_f(t) == from_string("(( _ •) 1 (• _ ))")


def test_involution_exhaustive():
    for n in range(1, 9):
        for t in enumerate_trees(n):
            f = involution_f(t)
            assert involution_f(f) == t
            assert f.right_edges == t.left_edges and f.left_edges == t.right_edges
            assert f.size == t.size and f.two_child == t.two_child


def test_total_order_examples():
    assert total_order(LEAF) == [""]
    assert total_order(from_string("(• 0 •)")) == ["L", "R", ""]
    assert total_order(from_string("((• _ ) _ )")) == ["LL", "L", ""]


def test_total_order_levels_left_to_right():
    t = from_string("((• _ ) 0 ( _ •))")
    assert total_order(t) == ["LL", "RR", "L", "R", ""]


@given(trees_strategy)
def test_total_order_is_deepest_first_permutation(t):
    order = total_order(t)
    assert len(order) == t.size == len(set(order))
    depths = [len(p) for p in order]
    assert depths == sorted(depths, reverse=True)
    assert order[-1] == ""
    # children always come before their parent
    pos = {p: i for i, p in enumerate(order)}
    assert all(pos[p[:-1]] > pos[p] for p in order if p)


def test_prefix_forest_examples():
    t = from_string("(• 0 •)")
    f1 = prefix_forest(t, 1)
    assert f1.components == (LEAF,) and f1.left_edges + f1.right_edges == 0
    f2 = prefix_forest(t, 2)
    assert f2.roots == ("L", "R") and f2.components == (LEAF, LEAF)
    f3 = prefix_forest(t, 3)
    assert f3.roots == ("",) and f3.components == (t,)
    with pytest.raises(DomainError):
        prefix_forest(t, 0)
    with pytest.raises(DomainError):
        prefix_forest(t, 4)


@given(trees_strategy, st.data())
def test_prefix_forest_edge_counts(t, data):
    i = data.draw(st.integers(1, t.size))
    forest = prefix_forest(t, i)
    assert sum(c.size for c in forest.components) == i
    assert forest.left_edges - forest.right_edges == excess_profile(t)[i - 1]


@given(trees_strategy)
def test_excess_changes_by_at_most_one(t):
    d = excess_profile(t)
    assert all(abs(b - a) <= 1 for a, b in zip([0] + d, d))
    assert d[-1] == t.left_edges - t.right_edges


def test_injection_examples():
    t = from_string("((• _ ) _ )")
    z = injection_z(t)
    assert z.right_edges == 1 and z == from_string("(( _ •) _ )")
    with pytest.raises(DomainError):
        injection_z(from_string("( _ •)"))


def test_injection_n9_k4():
    src = [t for t in enumerate_trees(9) if t.right_edges == 3]
    images = {injection_z(t) for t in src}
    assert len(images) == len(src) == 4256
    assert all(u.right_edges == 4 for u in images)


def test_injection_n5_k1():
    src = [t for t in enumerate_trees(5) if t.right_edges == 0]
    images = {injection_z(t) for t in src}
    assert len(src) == len(images) == 1
    assert all(u.right_edges == 1 for u in images)
    assert len([t for t in enumerate_trees(5) if t.right_edges == 1]) == 16


def test_injection_exhaustive_up_to_8():
    for n in range(2, 9):
        for k in range(1, (n - 1) // 2 + 1):
            src = [t for t in enumerate_trees(n) if t.right_edges == k - 1]
            images = [injection_z(t) for t in src]
            assert len(set(images)) == len(src)
            for t, u in zip(src, images):
                assert u.right_edges == t.right_edges + 1
                assert u.two_child == t.two_child
                assert sorted(lbls(u)) == sorted(lbls(t))
                assert injection_z_inverse(u) == t


def lbls(t):
    out = [t.label] if t.label is not None else []
    for _, c in t.children():
        out += lbls(c)
    return out


def test_inverse_no_preimage():
    assert injection_z_inverse(LEAF) is None
    assert injection_z_inverse(Node(LEAF, None)) is None
