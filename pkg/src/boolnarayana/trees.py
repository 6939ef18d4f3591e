"""0-1 trees: enumeration, edge statistics, the involution f and the injection z.

A 0-1 tree is a binary plane tree whose two-child vertices carry a label
0 or 1.  Trees are immutable :class:`Node` values; subtrees are shared
freely between trees, so a vertex is identified by its *path* from the
root (a string over ``"L"``/``"R"``) rather than by object identity.

Canonical string form::

    •          leaf
    (L _ )     left child only
    ( _ R)     right child only
    (L b R)    two children, b in {0, 1}

For example ``"(• 1 (• _ ))"`` is a root labelled 1 whose right child has a
single left child.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Optional

from .errors import DomainError, SizeCapError

__all__ = [
    "ENUMERATION_CAP",
    "LEAF",
    "Node",
    "PrefixForest",
    "TreeStats",
    "enumerate_trees",
    "excess_profile",
    "from_string",
    "injection_z",
    "injection_z_inverse",
    "involution_f",
    "node_at",
    "prefix_forest",
    "right_edge_histogram",
    "stats",
    "to_string",
    "total_order",
]

#: Largest n accepted by :func:`enumerate_trees`.  B(14) is about 2.5e7 trees
#: (minutes); B(16) about 4.5e8 (hours, but still a valid stream).
ENUMERATION_CAP = 16


class Node:
    """Vertex of a plane binary tree together with the subtree below it.

    ``label`` is 0 or 1 on two-child vertices and ``None`` elsewhere for a
    well-formed 0-1 tree; :meth:`check` enforces that.  Size and edge counts
    are cached at construction.
    """

    __slots__ = ("left", "right", "label", "size", "right_edges", "left_edges",
                 "two_child", "_hash")

    def __init__(self, left: Optional["Node"] = None, right: Optional["Node"] = None,
                 label: Optional[int] = None):
        self.left = left
        self.right = right
        self.label = label
        size = 1
        r = l = two = 0
        if left is not None:
            size += left.size
            l += left.left_edges + 1
            r += left.right_edges
            two += left.two_child
        if right is not None:
            size += right.size
            l += right.left_edges
            r += right.right_edges + 1
            two += right.two_child
        if left is not None and right is not None:
            two += 1
        self.size = size
        self.right_edges = r
        self.left_edges = l
        self.two_child = two
        self._hash = hash((left, right, label))

    def __setattr__(self, name, value):
        if hasattr(self, "_hash"):
            raise AttributeError("Node is immutable")
        object.__setattr__(self, name, value)

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Node):
            return NotImplemented
        return (self._hash == other._hash and self.size == other.size
                and self.label == other.label
                and self.left == other.left and self.right == other.right)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Node.parse({to_string(self)!r})"

    def __str__(self):
        return to_string(self)

    @property
    def n_children(self) -> int:
        return (self.left is not None) + (self.right is not None)

    def children(self) -> Iterator[tuple[str, "Node"]]:
        if self.left is not None:
            yield "L", self.left
        if self.right is not None:
            yield "R", self.right

    def check(self) -> "Node":
        """Raise ValueError unless every vertex obeys the labelling rule."""
        stack = [self]
        while stack:
            v = stack.pop()
            both = v.left is not None and v.right is not None
            if both and v.label not in (0, 1):
                raise ValueError("two-child vertex must be labelled 0 or 1")
            if not both and v.label is not None:
                raise ValueError("only two-child vertices carry labels")
            stack.extend(c for _, c in v.children())
        return self

    @staticmethod
    def parse(s: str) -> "Node":
        return from_string(s)


LEAF = Node()


@dataclass(frozen=True)
class TreeStats:
    n: int
    right_edges: int
    left_edges: int
    two_child_count: int


def stats(t: Node) -> TreeStats:
    """Count vertices, right/left edges and two-child vertices by traversal."""
    n = r = l = two = 0
    stack = [t]
    while stack:
        v = stack.pop()
        n += 1
        if v.left is not None:
            l += 1
            stack.append(v.left)
        if v.right is not None:
            r += 1
            stack.append(v.right)
        if v.left is not None and v.right is not None:
            two += 1
    return TreeStats(n, r, l, two)


# -- serialization ---------------------------------------------------------

def to_string(t: Node) -> str:
    if t.left is None and t.right is None:
        return "•"
    left = to_string(t.left) if t.left is not None else ""
    right = to_string(t.right) if t.right is not None else ""
    if t.left is not None and t.right is not None:
        return f"({left} {t.label} {right})"
    if t.left is not None:
        return f"({left} _ )"
    return f"( _ {right})"


def _tokens(s: str) -> list[str]:
    out = []
    for ch in s:
        if ch.isspace():
            continue
        if ch not in "()•_01":
            raise ValueError(f"unexpected character {ch!r} in tree string")
        out.append(ch)
    return out


def from_string(s: str) -> Node:
    """Parse the canonical string form; inverse of :func:`to_string`."""
    toks = _tokens(s)
    pos = 0

    def take() -> str:
        nonlocal pos
        if pos >= len(toks):
            raise ValueError("truncated tree string")
        pos += 1
        return toks[pos - 1]

    def parse() -> Node:
        nonlocal pos
        tok = take()
        if tok == "•":
            return LEAF
        if tok != "(":
            raise ValueError(f"expected '(' or '•', got {tok!r}")
        if pos < len(toks) and toks[pos] == "_":
            pos += 1
            node = Node(None, parse())
        else:
            left = parse()
            mid = take()
            if mid == "_":
                node = Node(left, None)
            elif mid in "01":
                node = Node(left, parse(), int(mid))
            else:
                raise ValueError(f"expected label or '_', got {mid!r}")
        if take() != ")":
            raise ValueError("missing ')'")
        return node

    t = parse()
    if pos != len(toks):
        raise ValueError("trailing characters after tree")
    return t


# -- enumeration -----------------------------------------------------------

@lru_cache(maxsize=None)
def _all_small(n: int) -> tuple[Node, ...]:
    return tuple(_generate(n))


_CACHE_LIMIT = 9


def _trees(n: int) -> Iterable[Node]:
    if n <= _CACHE_LIMIT:
        return _all_small(n)
    return _generate(n)


def _generate(n: int) -> Iterator[Node]:
    # order: left subtree size 0..n-1, then left shape, right shape, label
    if n == 1:
        yield LEAF
        return
    for ls in range(n):
        rs = n - 1 - ls
        if ls == 0:
            for r in _trees(rs):
                yield Node(None, r)
        elif rs == 0:
            for l in _trees(ls):
                yield Node(l, None)
        else:
            rights = _all_small(rs) if rs <= _CACHE_LIMIT else None
            for l in _trees(ls):
                for r in (rights if rights is not None else _generate(rs)):
                    yield Node(l, r, 0)
                    yield Node(l, r, 1)


def enumerate_trees(n: int) -> Iterator[Node]:
    """Yield every 0-1 tree on n vertices exactly once, in a fixed order."""
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    if n > ENUMERATION_CAP:
        raise SizeCapError(f"n={n} exceeds the enumeration cap {ENUMERATION_CAP}")
    return iter(_trees(n)) if n <= _CACHE_LIMIT else _generate(n)


def _histogram_for_left_size(args: tuple[int, int]) -> list[int]:
    n, ls = args
    hist = [0] * n
    rs = n - 1 - ls
    if ls == 0:
        for r in _trees(rs):
            hist[r.right_edges + 1] += 1
    elif rs == 0:
        for l in _trees(ls):
            hist[l.right_edges] += 1
    else:
        rights = Counter(r.right_edges for r in _trees(rs))
        for l in _trees(ls):
            for re_, cnt in rights.items():
                hist[l.right_edges + re_ + 1] += 2 * cnt
    return hist


def right_edge_histogram(n: int, parallel: bool = False) -> list[int]:
    """Entry k-1 is the number of trees in enumerate_trees(n) with k-1 right edges.

    Every tree is visited; with ``parallel`` the work is split by the size of
    the root's left subtree and the partial histograms summed.
    """
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    if n > ENUMERATION_CAP:
        raise SizeCapError(f"n={n} exceeds the enumeration cap {ENUMERATION_CAP}")
    if not parallel or n < 8:
        hist = [0] * n
        for t in enumerate_trees(n):
            hist[t.right_edges] += 1
        return hist
    from concurrent.futures import ProcessPoolExecutor

    hist = [0] * n
    with ProcessPoolExecutor() as ex:
        for part in ex.map(_histogram_for_left_size, [(n, ls) for ls in range(n)]):
            hist = [a + b for a, b in zip(hist, part)]
    return hist


# -- involution f ------------------------------------------------------------

def involution_f(t: Node) -> Node:
    """Flip the side of every only child; leaves, two-child vertices and labels stay."""
    left = involution_f(t.left) if t.left is not None else None
    right = involution_f(t.right) if t.right is not None else None
    if left is not None and right is not None:
        return Node(left, right, t.label)
    if left is not None:
        return Node(None, left, t.label)
    if right is not None:
        return Node(right, None, t.label)
    return t


# -- total order and prefix forests -----------------------------------------

def _levels(t: Node) -> list[list[tuple[str, Node]]]:
    levels = [[("", t)]]
    while True:
        nxt = [(p + side, c) for p, v in levels[-1] for side, c in v.children()]
        if not nxt:
            return levels
        levels.append(nxt)


def total_order(t: Node) -> list[str]:
    """Vertex paths, deepest level first and left to right, ending at the root.

    Breadth-first order with left before right equals the left-to-right order
    of each level in the plane drawing.
    """
    return [p for level in reversed(_levels(t)) for p, _ in level]


def node_at(t: Node, path: str) -> Node:
    for step in path:
        t = t.left if step == "L" else t.right
        if t is None:
            raise KeyError(path)
    return t


@dataclass(frozen=True)
class PrefixForest:
    """Subgraph induced by the first ``member_count`` vertices of the total order.

    ``roots`` are the paths of the component roots and ``components`` the
    component trees, both ordered by the root's position in the total order.
    """

    roots: tuple[str, ...]
    components: tuple[Node, ...]
    member_count: int

    @property
    def left_edges(self) -> int:
        return sum(c.left_edges for c in self.components)

    @property
    def right_edges(self) -> int:
        return sum(c.right_edges for c in self.components)


def _induced(t: Node, path: str, members: set[str]) -> Node:
    v = node_at(t, path)
    left = _induced(t, path + "L", members) if v.left is not None and path + "L" in members else None
    right = _induced(t, path + "R", members) if v.right is not None and path + "R" in members else None
    # labels stay on their vertex even if a child was cut off
    return Node(left, right, v.label)


def prefix_forest(t: Node, i: int) -> PrefixForest:
    order = total_order(t)
    if not 1 <= i <= len(order):
        raise DomainError(f"i must be in 1..{len(order)}, got {i}")
    members = set(order[:i])
    roots = tuple(p for p in order[:i] if p == "" or p[:-1] not in members)
    return PrefixForest(roots, tuple(_induced(t, p, members) for p in roots), i)


def excess_profile(t: Node) -> list[int]:
    """d(i) = left edges - right edges of the prefix forest T_i, for i = 1..n.

    Every child precedes its parent in the total order, so adding vertex v
    adds exactly the edges from v to its children.
    """
    out = []
    d = 0
    for p in total_order(t):
        v = node_at(t, p)
        d += (v.left is not None) - (v.right is not None)
        out.append(d)
    return out


def _replace(t: Node, path: str, new: Node) -> Node:
    if not path:
        return new
    if path[0] == "L":
        return Node(_replace(t.left, path[1:], new), t.right, t.label)
    return Node(t.left, _replace(t.right, path[1:], new), t.label)


def _flip_prefix(t: Node, target: int) -> Optional[Node]:
    profile = excess_profile(t)
    try:
        i = profile.index(target) + 1
    except ValueError:
        return None
    forest = prefix_forest(t, i)
    out = t
    for root, comp in zip(forest.roots, forest.components):
        # components of a prefix forest are whole subtrees, so the paths of
        # other roots are unaffected by replacing this one
        out = _replace(out, root, involution_f(comp))
    return out


def injection_z(t: Node) -> Node:
    """Map a tree with k-1 right edges to one with k right edges, injectively.

    Finds the shortest prefix forest whose left edges outnumber its right
    edges by one and applies the involution to it.  Requires k <= (n-1)/2.
    """
    k = t.right_edges + 1
    if 2 * k > t.size - 1:
        raise DomainError(
            f"injection needs k <= (n-1)/2; got n={t.size}, k={k}"
        )
    out = _flip_prefix(t, 1)
    if out is None:
        raise AssertionError("no prefix forest with left excess 1")  # pragma: no cover
    return out


def injection_z_inverse(u: Node) -> Optional[Node]:
    """Preimage of ``u`` under :func:`injection_z`, or None if there is none."""
    return _flip_prefix(u, -1)
