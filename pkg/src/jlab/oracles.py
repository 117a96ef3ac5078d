"""Independent reference computations used to cross-check the fast paths.

Nothing here shares code with the solver, the Pascal table, or the bitset
graph builder; keep it that way.
"""

from __future__ import annotations

import itertools
import math
from functools import lru_cache
from typing import Sequence

__all__ = [
    "pascal_binomial",
    "colex_subsets",
    "brute_force_alpha",
    "enumerate_alpha",
    "johnson_edges_by_predicate",
    "pairwise_edge_count",
]


def pascal_binomial(a: int, b: int) -> int:
    """C(a, b) from an explicitly built Pascal triangle row (zero convention)."""
    if b < 0 or a < b:
        return 0
    row = [1]
    for _ in range(a):
        row = [x + y for x, y in zip([0] + row, row + [0])]
    return row[b]


def colex_subsets(n: int, r: int) -> list[tuple[int, ...]]:
    """All r-subsets of [n] sorted colexicographically (compare reversed tuples)."""
    return sorted(itertools.combinations(range(1, n + 1), r), key=lambda t: t[::-1])


def _adjacency_sets(m: int, edges) -> list[set[int]]:
    adj = [set() for _ in range(m)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def brute_force_alpha(m: int, edges) -> int:
    """alpha by the plain recurrence alpha(P) = max(alpha(P - v), 1 + alpha(P - N[v])).

    Memoized on frozensets; no bounding, no reductions.  Fine up to ~30 vertices.
    """
    adj = _adjacency_sets(m, edges)

    @lru_cache(maxsize=None)
    def alpha(P: frozenset) -> int:
        if not P:
            return 0
        v = min(P)
        without = alpha(P - {v})
        with_v = 1 + alpha(P - {v} - adj[v])
        return max(without, with_v)

    return alpha(frozenset(range(m)))


def enumerate_alpha(m: int, edges, at_least: int | None = None) -> int:
    """alpha by depth-first enumeration of independent sets in increasing order.

    Every independent set is visited unless it cannot exceed the best size so
    far even by taking every remaining candidate.  If ``at_least`` is given,
    stop as soon as a set of that size is seen.
    """
    adj = _adjacency_sets(m, edges)
    best = 0

    def extend(size: int, cands: list[int]) -> None:
        nonlocal best
        if size > best:
            best = size
            if at_least is not None and best >= at_least:
                raise StopIteration
        for k, v in enumerate(cands):
            if size + len(cands) - k <= best:
                return
            nxt = [w for w in cands[k + 1:] if w not in adj[v]]
            extend(size + 1, nxt)

    try:
        extend(0, list(range(m)))
    except StopIteration:
        pass
    return best


def johnson_edges_by_predicate(n: int, r: int, s: int) -> tuple[list[tuple[int, ...]], list[tuple[int, int]]]:
    """G(n, r, s) with colex vertex order, built from Python sets."""
    verts = colex_subsets(n, r)
    sets = [set(v) for v in verts]
    edges = [(a, b) for a, b in itertools.combinations(range(len(verts)), 2)
             if len(sets[a] & sets[b]) == s]
    return verts, edges


def pairwise_edge_count(subsets: Sequence[Sequence[int]], s: int) -> int:
    sets = [frozenset(u) for u in subsets]
    return sum(1 for a, b in itertools.combinations(sets, 2) if len(a & b) == s)


def comb_mp(a: int, b: int) -> int:
    return math.comb(a, b) if 0 <= b <= a else 0
