"""Exact integer combinatorics on r-subsets of [n].

Binomials follow the zero convention: ``binomial(a, b) == 0`` whenever
``a < b`` or ``b < 0``.  Subsets are ranked in colexicographic order.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

__all__ = [
    "PascalTable",
    "binomial",
    "binomial_poly",
    "KSubset",
    "rank",
    "unrank",
    "intersection_size",
    "all_subsets",
    "read_family",
    "write_family",
    "FamilyFileError",
]

MASK_FAST_PATH_MAX_N = 128


class PascalTable:
    """Memoized Pascal triangle for rows ``0..a_max``.

    Rows are built lazily under a lock; concurrent readers only ever see
    fully built rows.  Arguments beyond ``a_max`` fall back to ``math.comb``.
    """

    def __init__(self, a_max: int = 512):
        self.a_max = a_max
        self._rows: list[list[int]] = [[1]]
        self._lock = threading.Lock()

    def _grow(self, a: int) -> None:
        with self._lock:
            rows = self._rows
            while len(rows) <= a:
                prev = rows[-1]
                row = [1] * (len(prev) + 1)
                for k in range(1, len(prev)):
                    row[k] = prev[k - 1] + prev[k]
                rows.append(row)

    def __call__(self, a: int, b: int) -> int:
        if b < 0 or a < b:
            return 0
        if a > self.a_max:
            return math.comb(a, b)
        if a >= len(self._rows):
            self._grow(a)
        return self._rows[a][b]


_TABLE = PascalTable()


def binomial(a: int, b: int) -> int:
    """Exact ``C(a, b)``, zero when ``a < b`` or ``b < 0``."""
    return _TABLE(a, b)


def binomial_poly(a: int, b: int) -> int:
    """``a (a-1) ... (a-b+1) / b!``: the polynomial extension, valid for negative ``a``.

    Unlike :func:`binomial` this is nonzero for ``a < 0``; Chu-Vandermonde
    holds for it over all integer ``a``.
    """
    if b < 0:
        return 0
    num = 1
    for k in range(b):
        num *= a - k
    return num // math.factorial(b)


@dataclass(frozen=True, order=True)
class KSubset:
    """A sorted r-subset of ``{1, ..., ground_n}``."""

    elements: tuple[int, ...]
    ground_n: int

    def __post_init__(self):
        els = tuple(int(e) for e in self.elements)
        object.__setattr__(self, "elements", els)
        if self.ground_n < 1:
            raise ValueError(f"ground_n must be >= 1, got {self.ground_n}")
        prev = 0
        for e in els:
            if e <= prev or e > self.ground_n:
                raise ValueError(
                    f"elements must be strictly increasing in [1, {self.ground_n}]: {els}"
                )
            prev = e

    @classmethod
    def of(cls, elements: Iterable[int], n: int) -> "KSubset":
        return cls(tuple(sorted(elements)), n)

    @property
    def r(self) -> int:
        return len(self.elements)

    @property
    def mask(self) -> int:
        # bit (e - 1) set for each element e
        m = 0
        for e in self.elements:
            m |= 1 << (e - 1)
        return m

    def __contains__(self, item: int) -> bool:
        return item in self.elements

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.elements)) + "}"


def rank(subset: KSubset | Sequence[int]) -> int:
    """Colex rank: sum of C(e_k - 1, k) over the sorted elements (k from 1)."""
    els = subset.elements if isinstance(subset, KSubset) else tuple(sorted(subset))
    return sum(binomial(e - 1, k) for k, e in enumerate(els, start=1))


def unrank(index: int, n: int, r: int) -> KSubset:
    """Inverse of :func:`rank` over r-subsets of [n]."""
    total = binomial(n, r)
    if not 0 <= index < total:
        raise IndexError(f"rank {index} out of range [0, {total}) for n={n}, r={r}")
    out = [0] * r
    hi = n
    for k in range(r, 0, -1):
        # largest e in [k, hi] with C(e - 1, k) <= index; bisect long ranges
        lo, top = k, hi
        while top - lo > 32:
            mid = (lo + top + 1) // 2
            if binomial(mid - 1, k) <= index:
                lo = mid
            else:
                top = mid - 1
        while binomial(top - 1, k) > index:
            top -= 1
        out[k - 1] = top
        index -= binomial(top - 1, k)
        hi = top - 1
    return KSubset(tuple(out), n)


def all_subsets(n: int, r: int) -> list[KSubset]:
    """Every r-subset of [n], in colex (= rank) order."""
    return [unrank(k, n, r) for k in range(binomial(n, r))]


def _merge_count(a: Sequence[int], b: Sequence[int]) -> int:
    i = j = c = 0
    while i < len(a) and j < len(b):
        if a[i] == b[j]:
            c += 1
            i += 1
            j += 1
        elif a[i] < b[j]:
            i += 1
        else:
            j += 1
    return c


def intersection_size(u: KSubset, v: KSubset) -> int:
    if u.ground_n != v.ground_n:
        raise ValueError(
            f"subsets live on different ground sets ({u.ground_n} vs {v.ground_n})"
        )
    if u.ground_n <= MASK_FAST_PATH_MAX_N:
        return (u.mask & v.mask).bit_count()
    return _merge_count(u.elements, v.elements)


# ----------------------------------------------------------------------------
# family files
# ----------------------------------------------------------------------------


class FamilyFileError(ValueError):
    pass


def read_family(path_or_lines) -> tuple[int, int, list[KSubset]]:
    """Parse a family file: ``n=<int> r=<int>`` header, one subset per line.

    Accepts a path or an iterable of lines.  ``#`` lines are comments.
    """
    if isinstance(path_or_lines, (str, bytes)) or hasattr(path_or_lines, "__fspath__"):
        with open(path_or_lines, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    else:
        lines = list(path_or_lines)

    n = r = None
    family: list[KSubset] = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if n is None:
            fields = dict(tok.split("=", 1) for tok in line.split() if "=" in tok)
            if "n" not in fields or "r" not in fields:
                raise FamilyFileError(f"line {lineno}: expected header 'n=<int> r=<int>'")
            n, r = int(fields["n"]), int(fields["r"])
            continue
        try:
            els = [int(t) for t in line.split()]
        except ValueError:
            raise FamilyFileError(f"line {lineno}: non-integer token in {line!r}") from None
        if len(els) != r:
            raise FamilyFileError(f"line {lineno}: expected {r} elements, got {len(els)}")
        try:
            family.append(KSubset.of(els, n))
        except ValueError as exc:
            raise FamilyFileError(f"line {lineno}: {exc}") from None
    if n is None:
        raise FamilyFileError("missing 'n=<int> r=<int>' header")
    return n, r, family


def write_family(path, n: int, r: int, family: Iterable[KSubset], comment: str | None = None):
    with open(path, "w", encoding="utf-8") as fh:
        if comment:
            for line in comment.splitlines():
                fh.write(f"# {line}\n")
        fh.write(f"n={n} r={r}\n")
        for u in family:
            fh.write(" ".join(map(str, u.elements)) + "\n")
