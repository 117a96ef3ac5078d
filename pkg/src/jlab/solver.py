"""Exact maximum independent set by branch and bound on bitsets.

Branching picks a maximum-degree vertex of the residual graph (lowest index
on ties).  The bound is a greedy partition of the residual into cliques,
each of which holds at most one vertex of an independent set.  Degree-0 and
degree-1 vertices are taken without branching; both reductions are safe for
maximum independent set.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .graph import DenseGraph, star_indices

__all__ = [
    "Budget",
    "MisResult",
    "is_independent",
    "greedy_independent_set",
    "max_independent_set",
    "alpha_at_least",
    "clique_cover_bound",
]


@dataclass(frozen=True)
class Budget:
    max_nodes: int | None = None
    max_seconds: float | None = None


UNLIMITED = Budget()


@dataclass(frozen=True)
class MisResult:
    alpha: int
    witness: tuple[int, ...]
    optimal: bool
    upper_bound: int
    nodes_explored: int
    time: float
    optimal_sets_sample: tuple[tuple[int, ...], ...] = ()

    @property
    def lower_bound(self) -> int:
        return self.alpha


class _Exhausted(Exception):
    pass


class _Found(Exception):
    pass


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def _to_mask(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def is_independent(g: DenseGraph, vertices) -> bool:
    vs = list(vertices)
    mask = _to_mask(vs)
    rows = g.rows
    return all(not (rows[v] & mask) for v in vs)


def clique_cover_bound(rows, P: int, limit: int | None = None) -> int:
    """Size of a greedy clique partition of the vertex set ``P``.

    Stops counting once the count exceeds ``limit``.
    """
    k = 0
    while P:
        low = P & -P
        P ^= low
        cand = P & rows[low.bit_length() - 1]
        while cand:
            w = cand & -cand
            P ^= w
            cand &= rows[w.bit_length() - 1]
        k += 1
        if limit is not None and k > limit:
            return k
    return k


def greedy_independent_set(g: DenseGraph, seed_set=()) -> list[int]:
    """Extend ``seed_set`` by repeatedly taking a minimum-degree candidate."""
    rows = g.rows
    chosen = list(seed_set)
    P = (1 << g.vertex_count) - 1
    for v in chosen:
        P &= ~(rows[v] | (1 << v))
    while P:
        best_v, best_d = -1, None
        for v in _bits(P):
            d = (rows[v] & P).bit_count()
            if best_d is None or d < best_d:
                best_v, best_d = v, d
                if d == 0:
                    break
        chosen.append(best_v)
        P &= ~(rows[best_v] | (1 << best_v))
    return sorted(chosen)


def _initial_set(g: DenseGraph) -> list[int]:
    seed = ()
    if g.params is not None and g.provenance.kind in ("full", "sampled"):
        # the star is independent in G(n, r, s) and in every edge-subgraph of it
        star = star_indices(g.params)
        if not is_independent(g, star):
            raise AssertionError(f"star of {g.params} is not independent")
        seed = star
    return greedy_independent_set(g, seed)


class _Search:
    def __init__(self, rows, budget: Budget, threshold: int, stop_at: int | None,
                 collect: int = 0):
        self.rows = rows
        self.threshold = threshold  # prune unless a branch can beat this
        self.stop_at = stop_at
        self.best_size = -1
        self.best_set = 0
        self.nodes = 0
        self.collect = collect
        self.sample: list[int] = []
        self.max_nodes = budget.max_nodes
        self.deadline = (time.monotonic() + budget.max_seconds
                         if budget.max_seconds is not None else None)

    def _record(self, size: int, chosen: int) -> None:
        if size > self.best_size:
            self.best_size, self.best_set = size, chosen
            self.sample = [chosen] if self.collect else []
        elif self.collect and size == self.best_size and len(self.sample) < self.collect:
            self.sample.append(chosen)
        if size > self.threshold:
            self.threshold = size
        if self.stop_at is not None and size >= self.stop_at:
            raise _Found

    def expand(self, P: int, size: int, chosen: int) -> None:
        rows = self.rows
        slack = 1 if self.collect else 0
        while True:
            self.nodes += 1
            if self.max_nodes is not None and self.nodes > self.max_nodes:
                raise _Exhausted
            if self.deadline is not None and (self.nodes & 1023) == 0 \
                    and time.monotonic() > self.deadline:
                raise _Exhausted

            # reductions
            while P:
                isolated = 0
                pendant = -1
                best_v, best_d = -1, -1
                for v in _bits(P):
                    d = (rows[v] & P).bit_count()
                    if d == 0:
                        isolated |= 1 << v
                    elif d == 1 and pendant < 0:
                        pendant = v
                    if d > best_d:
                        best_v, best_d = v, d
                if isolated:
                    P &= ~isolated
                    chosen |= isolated
                    size += isolated.bit_count()
                    continue
                if pendant >= 0 and not self.collect:
                    bit = 1 << pendant
                    P &= ~(rows[pendant] | bit)
                    chosen |= bit
                    size += 1
                    continue
                break

            if not P:
                self._record(size, chosen)
                return
            room = self.threshold - size - slack
            if clique_cover_bound(rows, P, room) <= room:
                return

            bit = 1 << best_v
            self.expand(P & ~(rows[best_v] | bit), size + 1, chosen | bit)
            P &= ~bit


def _run(g: DenseGraph, budget: Budget, stop_at: int | None, collect: int = 0):
    init = _initial_set(g)
    search = _Search(g.rows, budget, len(init), stop_at, collect)
    search.best_size, search.best_set = len(init), _to_mask(init)
    if collect:
        search.threshold = len(init)
    status = "complete"
    if stop_at is not None and len(init) >= stop_at:
        return search, "found"
    if stop_at is not None:
        search.threshold = max(search.threshold, stop_at - 1)
    try:
        search.expand((1 << g.vertex_count) - 1, 0, 0)
    except _Found:
        status = "found"
    except _Exhausted:
        status = "exhausted"
    return search, status


def max_independent_set(g: DenseGraph, budget: Budget = UNLIMITED, collect: int = 0) -> MisResult:
    """Exact independence number with a witness.

    On budget exhaustion the result has ``optimal=False``; ``alpha`` is then
    the best lower bound found and ``upper_bound`` a clique-cover bound.
    ``collect > 0`` additionally gathers up to that many optimal sets.
    """
    t0 = time.perf_counter()
    search, status = _run(g, budget, None, collect)
    elapsed = time.perf_counter() - t0
    witness = tuple(_bits(search.best_set))
    if status == "complete":
        ub = search.best_size
    else:
        ub = clique_cover_bound(g.rows, (1 << g.vertex_count) - 1)
    sample = tuple(tuple(_bits(s)) for s in search.sample)
    return MisResult(search.best_size, witness, status == "complete", ub,
                     search.nodes, elapsed, sample)


def alpha_at_least(g: DenseGraph, k: int, budget: Budget = UNLIMITED) -> bool | None:
    """Whether ``g`` has an independent set of size ``k``.

    Returns ``None`` when the budget runs out before a decision.
    """
    if k <= 0:
        return True
    if k > g.vertex_count:
        return False
    search, status = _run(g, budget, k)
    if status == "found":
        return True
    if status == "exhausted":
        return None
    return search.best_size >= k


def decide_with_stats(g: DenseGraph, k: int, budget: Budget = UNLIMITED) -> tuple[bool | None, int]:
    """:func:`alpha_at_least` plus the number of search nodes used."""
    if k <= 0:
        return True, 0
    if k > g.vertex_count:
        return False, 0
    search, status = _run(g, budget, k)
    if status == "found":
        return True, search.nodes
    if status == "exhausted":
        return None, search.nodes
    return search.best_size >= k, search.nodes
