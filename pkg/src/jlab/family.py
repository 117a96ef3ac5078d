"""Per-family quantities for G(n, r, 1) and the Ess / B_j constructions.

For a family ``A`` of r-subsets the best star is the pair ``(i, j)`` whose
star ``S_{i,j}`` meets ``A`` most often; ``X`` is the part of ``A`` outside
that star and ``I(X)`` the set of non-center elements that ``X`` covers.
The constructions run in relabeled coordinates where the best center is
``{n-1, n}``; the permutation is recorded so results map back.
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .combinatorics import KSubset, binomial, intersection_size, rank, unrank

__all__ = [
    "FamilyStats",
    "BjFamily",
    "analyze_family",
    "build_ess",
    "build_bj",
    "check_bj_invariants",
    "lemma_case",
    "random_admissible_family",
    "UnsupportedParameters",
]


class UnsupportedParameters(ValueError):
    pass


@dataclass(frozen=True)
class FamilyStats:
    n: int
    r: int
    family_size: int
    best_center: tuple[int, int]
    d_value: int
    X: tuple[KSubset, ...]
    I_of_X: tuple[int, ...]
    relabel: tuple[int, ...] = field(repr=False)  # relabel[e - 1] = new label of e

    @property
    def x(self) -> int:
        return len(self.X)

    @property
    def i_of_X(self) -> int:
        return len(self.I_of_X)

    def to_relabeled(self, u: KSubset) -> KSubset:
        return KSubset.of((self.relabel[e - 1] for e in u.elements), self.n)

    def from_relabeled(self, u: KSubset) -> KSubset:
        inv = {new: old for old, new in enumerate(self.relabel, start=1)}
        return KSubset.of((inv[e] for e in u.elements), self.n)

    def to_json(self) -> dict:
        return {
            "size": self.family_size,
            "center": list(self.best_center),
            "d": self.d_value,
            "x": self.x,
            "iX": self.i_of_X,
            "IX": list(self.I_of_X),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json())


def _relabeling(n: int, center: tuple[int, int]) -> tuple[int, ...]:
    i, j = center
    others = [e for e in range(1, n + 1) if e not in center]
    perm = [0] * n
    for new, old in enumerate(others, start=1):
        perm[old - 1] = new
    perm[i - 1], perm[j - 1] = n - 1, n
    return tuple(perm)


def analyze_family(n: int, r: int, A: Sequence[KSubset]) -> FamilyStats:
    """Compute d(A), the best center, X(A) and I(X).

    Every one of the C(n, 2) centers is scored; ties go to the
    lexicographically smallest pair.  An empty family gets center (1, 2).
    """
    if n < 2:
        raise ValueError("need n >= 2 for a two-element star center")
    seen = set()
    for u in A:
        if u.ground_n != n or u.r != r:
            raise ValueError(f"{u} is not an {r}-subset of [{n}]")
        if u in seen:
            raise ValueError(f"duplicate member {u}")
        seen.add(u)

    counts: dict[tuple[int, int], int] = {}
    for u in A:
        for pair in combinations(u.elements, 2):
            counts[pair] = counts.get(pair, 0) + 1
    center, d = (1, 2), -1
    for pair in combinations(range(1, n + 1), 2):
        c = counts.get(pair, 0)
        if c > d:
            center, d = pair, c

    i, j = center
    X = tuple(u for u in A if not (i in u and j in u))
    covered = sorted({e for u in X for e in u.elements} - {i, j})
    return FamilyStats(n, r, len(A), center, d, X, tuple(covered), _relabeling(n, center))


def _representative(stats: FamilyStats, label: int) -> KSubset:
    # lowest colex rank member of X containing `label` (original labels)
    return min((u for u in stats.X if label in u), key=rank)


def build_ess(stats: FamilyStats, A: Sequence[KSubset]) -> list[KSubset]:
    """Ess(A): the star part of A plus one member of X per element of I(X)."""
    outside = set(stats.X)
    ess = [u for u in A if u not in outside]
    reps = []
    for label in stats.I_of_X:
        v = _representative(stats, label)
        if v not in reps:
            reps.append(v)
    return ess + reps


@dataclass(frozen=True)
class BjFamily:
    n: int
    r: int
    labels: tuple[int, ...]          # l_1 < ... < l_i, relabeled
    u_choices: tuple[KSubset, ...]   # u_j, relabeled
    B_sets: tuple[tuple[KSubset, ...], ...]  # relabeled; center is {n-1, n}

    def lower_bound(self, j: int) -> int:
        """C(n - r - j - 1, r - 3) for 1-based ``j``."""
        return binomial(self.n - self.r - j - 1, self.r - 3)


def build_bj(n: int, r: int, stats: FamilyStats) -> BjFamily:
    """B_1, ..., B_{i(X)} taken maximal: every vertex meeting both conditions.

    Members of ``B_j`` contain ``{l_j, n-1, n}`` and avoid
    ``{l_1, ..., l_{j-1}} | (u_j - {l_j})``.
    """
    if r < 4:
        raise UnsupportedParameters(f"B_j needs r >= 4 (r - 3 free slots), got r={r}")
    if stats.i_of_X < 1:
        raise UnsupportedParameters("B_j needs i(X) >= 1")
    ci, cj = stats.best_center
    if any(ci in u or cj in u for u in stats.X):
        raise UnsupportedParameters(
            "every member of X must avoid the best center; the construction only "
            "covers families whose vertices contain both center elements or neither"
        )

    labels = tuple(stats.relabel[e - 1] for e in stats.I_of_X)
    u_choices = tuple(stats.to_relabeled(_representative(stats, e)) for e in stats.I_of_X)
    B_sets = []
    for j, (l_j, u_j) in enumerate(zip(labels, u_choices)):
        banned = set(labels[:j]) | set(u_j.elements)
        free = [e for e in range(1, n - 1) if e not in banned]
        B_j = [KSubset.of((l_j, n - 1, n) + c, n) for c in combinations(free, r - 3)]
        B_sets.append(tuple(sorted(B_j, key=rank)))
    return BjFamily(n, r, labels, u_choices, tuple(B_sets))


def check_bj_invariants(bj: BjFamily) -> dict[str, bool]:
    """Evaluate the five construction properties directly on the sets."""
    n = bj.n
    containment = avoidance = cardinality = cross_edge = True
    for j, (l_j, u_j, B_j) in enumerate(zip(bj.labels, bj.u_choices, bj.B_sets)):
        must = {l_j, n - 1, n}
        avoid = set(bj.labels[:j]) | (set(u_j.elements) - {l_j})
        for v in B_j:
            vs = set(v.elements)
            containment &= must <= vs
            avoidance &= not (vs & avoid)
            cross_edge &= intersection_size(v, u_j) == 1
        cardinality &= len(B_j) >= bj.lower_bound(j + 1)
    members = [v for B in bj.B_sets for v in B]
    disjoint = len(members) == len(set(members))
    return {
        "containment": containment,
        "avoidance": avoidance,
        "disjointness": disjoint,
        "cardinality": cardinality,
        "cross_edge": cross_edge,
    }


def bj_lower_bound_sum(n: int, r: int, i: int) -> int:
    return sum(binomial(n - j - 1 - r, r - 3) for j in range(1, i + 1))


def lemma_case(stats: FamilyStats) -> str:
    """``"bipartite"`` if sum_j C(n-j-1-r, r-3) >= 3x, else ``"turan"``."""
    return "bipartite" if bj_lower_bound_sum(stats.n, stats.r, stats.i_of_X) >= 3 * stats.x else "turan"


def star_threshold(n: int, r: int, t0: float) -> int:
    """C(ceil(t0 n) - 2, r - 2): d(A) must exceed this."""
    return binomial(math.ceil(t0 * n) - 2, r - 2)


def random_admissible_family(n: int, r: int, rng: random.Random, t0: float = 0.75,
                             x: int | None = None, max_tries: int = 100) -> list[KSubset]:
    """A random family meeting the premises of the G(n, r, 1) stability lemma.

    ``|A| = C(n-2, r-2) + 1``, ``d(A) > C(ceil(t0 n) - 2, r - 2)``, and every
    member either contains both center elements or avoids both.  The center
    is a uniform pair; ``x`` (if not given) is uniform over the admissible
    range; X is a uniform x-subset of the r-subsets avoiding the center; the
    star part is a uniform subset of the star.  Draws whose best star is not
    the planted one are rejected.
    """
    size = binomial(n - 2, r - 2) + 1
    x_max = min(size - star_threshold(n, r, t0) - 1, binomial(n - 2, r))
    if x_max < 1:
        raise UnsupportedParameters(f"no admissible x for n={n}, r={r}, t0={t0}")
    for _ in range(max_tries):
        a, b = sorted(rng.sample(range(1, n + 1), 2))
        others = [e for e in range(1, n + 1) if e not in (a, b)]
        xx = x if x is not None else rng.randint(1, x_max)
        X = [KSubset.of((others[e - 1] for e in unrank(k, n - 2, r)), n)
             for k in rng.sample(range(binomial(n - 2, r)), xx)]
        star = [KSubset.of((a, b) + tuple(others[e - 1] for e in unrank(k, n - 2, r - 2)), n)
                for k in rng.sample(range(binomial(n - 2, r - 2)), size - xx)]
        A = star + X
        stats = analyze_family(n, r, A)
        if stats.best_center == (a, b):
            return A
    raise RuntimeError(f"no admissible family with the planted center after {max_tries} tries")
