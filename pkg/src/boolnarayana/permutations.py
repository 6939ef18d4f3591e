"""West stack sorting, pattern containment and descent tables.

Permutations are tuples of distinct ints.  A pattern set Q is given as
one-line strings such as ``"231"``; the preimage class s^{-1}(Av_n(Q)) is
found by brute force over all n! permutations in lexicographic order.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterable, Sequence

from .errors import DomainError, SizeCapError

__all__ = [
    "PERMUTATION_CAP",
    "DescentTable",
    "avoids_all",
    "check_descent_symmetry",
    "contains_pattern",
    "count_sorted_preimages",
    "descents",
    "parse_pattern",
    "parse_patterns",
    "preimage_descent_table",
    "stack_sort",
]

#: Largest n for exhaustive scans.  10! = 3,628,800 permutations.
PERMUTATION_CAP = 11

Perm = tuple[int, ...]


def parse_pattern(s: str) -> Perm:
    """``"231"`` -> (2, 3, 1).  Multi-digit entries may be separated by spaces."""
    s = s.strip()
    parts = s.split() if " " in s else list(s)
    try:
        p = tuple(int(x) for x in parts)
    except ValueError:
        raise ValueError(f"not a permutation in one-line notation: {s!r}") from None
    if sorted(p) != list(range(1, len(p) + 1)):
        raise ValueError(f"pattern {s!r} is not a permutation of 1..{len(p)}")
    return p


def parse_patterns(text: str | Iterable[str]) -> tuple[Perm, ...]:
    if isinstance(text, str):
        text = [x for x in text.split(",") if x.strip()]
    return tuple(parse_pattern(x) for x in text)


def _check_distinct(p: Sequence[int]) -> None:
    if len(set(p)) != len(p):
        raise ValueError(f"entries are not distinct: {tuple(p)}")


def stack_sort(p: Sequence[int]) -> Perm:
    """s(LnR) = s(L) s(R) n, with n the maximum entry."""
    _check_distinct(p)
    return _s(tuple(p))


def _s(p: Perm) -> Perm:
    if len(p) <= 1:
        return p
    i = p.index(max(p))
    return _s(p[:i]) + _s(p[i + 1:]) + (p[i],)


def _order_type(seq: Sequence[int]) -> Perm:
    ranks = sorted(seq)
    return tuple(ranks.index(x) + 1 for x in seq)


def contains_pattern(p: Sequence[int], q: Sequence[int]) -> bool:
    """True iff some subsequence of ``p`` is order-isomorphic to ``q``.

    Backtracking over index choices; a partial choice is abandoned as soon as
    its relative order disagrees with the corresponding prefix of ``q``.
    """
    _check_distinct(q)
    m = len(q)
    if m == 0:
        return True
    if m > len(p):
        return False
    qt = _order_type(q)
    n = len(p)
    chosen: list[int] = []

    def extend(start: int) -> bool:
        r = len(chosen)
        if r == m:
            return True
        for i in range(start, n - (m - r) + 1):
            x = p[i]
            if all((x < y) == (qt[r] < qt[s]) for s, y in enumerate(chosen)):
                chosen.append(x)
                if extend(i + 1):
                    return True
                chosen.pop()
        return False

    return extend(0)


def _contains_bruteforce(p: Sequence[int], q: Sequence[int]) -> bool:
    qt = _order_type(q)
    return any(_order_type(c) == qt for c in combinations(p, len(q)))


def avoids_all(p: Sequence[int], patterns: Iterable[Sequence[int]]) -> bool:
    return not any(contains_pattern(p, q) for q in patterns)


def descents(p: Sequence[int]) -> int:
    return sum(1 for a, b in zip(p, p[1:]) if a > b)


@dataclass(frozen=True)
class DescentTable:
    """``counts[k-1]`` is A(n, k): preimages with exactly k - 1 descents."""

    n: int
    patterns: tuple[Perm, ...]
    counts: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.counts)

    def value(self, k: int) -> int:
        return self.counts[k - 1] if 1 <= k <= self.n else 0

    def is_palindromic(self) -> bool:
        return self.counts == self.counts[::-1]


def _check_cap(n: int) -> None:
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    if n > PERMUTATION_CAP:
        raise SizeCapError(f"n={n} exceeds the exhaustive cap {PERMUTATION_CAP}")


def _table_for_first(args: tuple[int, int, tuple[Perm, ...]]) -> list[int]:
    n, first, patterns = args
    rest = [x for x in range(1, n + 1) if x != first]
    counts = [0] * n
    seen: dict[Perm, bool] = {}
    for tail in permutations(rest):
        p = (first,) + tail
        s = _s(p)
        ok = seen.get(s)
        if ok is None:
            ok = seen[s] = avoids_all(s, patterns)
        if ok:
            counts[descents(p)] += 1
    return counts


def preimage_descent_table(
    n: int, patterns: Iterable[Sequence[int]] | str, parallel: bool = False
) -> DescentTable:
    """Histogram by descents of the permutations p with s(p) avoiding every pattern.

    Permutations are scanned in lexicographic order, partitioned by first
    entry; partial counts are merged by addition, so ``parallel`` only
    changes wall time.
    """
    _check_cap(n)
    pats = parse_patterns(patterns) if isinstance(patterns, str) else tuple(
        tuple(q) for q in patterns)
    jobs = [(n, first, pats) for first in range(1, n + 1)]
    if parallel and n >= 8:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor() as ex:
            parts = list(ex.map(_table_for_first, jobs))
    else:
        parts = [_table_for_first(j) for j in jobs]
    counts = [sum(col) for col in zip(*parts)]
    return DescentTable(n, pats, tuple(counts))


def check_descent_symmetry(n: int, patterns: Iterable[Sequence[int]] | str,
                           parallel: bool = False) -> bool:
    """A(n, k) = A(n, n-k+1): as many preimages with k-1 ascents as with k-1 descents."""
    return preimage_descent_table(n, patterns, parallel).is_palindromic()


def count_sorted_preimages(n: int) -> int:
    """Number of length-n permutations that stack sort to the identity."""
    _check_cap(n)
    ident = tuple(range(1, n + 1))
    return sum(1 for p in permutations(ident) if _s(p) == ident)
