"""Explicit (dense, bitset) realizations of G(n, r, s) and G_p(n, r, s).

Vertex ``k`` of a Johnson graph is ``unrank(k, n, r)``.  Adjacency rows are
Python ints used as bitsets: bit ``v`` of ``rows[u]`` is set iff ``uv`` is an
edge.
"""

from __future__ import annotations

import hashlib
import math
import random
from fractions import Fraction
from itertools import combinations
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from . import rng
from .combinatorics import KSubset, all_subsets, binomial, rank, unrank

__all__ = [
    "JohnsonParams",
    "Provenance",
    "DenseGraph",
    "CapacityError",
    "DEFAULT_VERTEX_BUDGET",
    "build_full",
    "sample_subgraph",
    "edge_count_within",
    "edge_count_implicit",
    "star_indices",
    "johnson_degree",
    "export_edge_list",
    "import_edge_list",
    "edge_ratio",
    "random_vertex_set",
    "ceil_ratio_size",
]

DEFAULT_VERTEX_BUDGET = 20000


class CapacityError(RuntimeError):
    pass


@dataclass(frozen=True)
class JohnsonParams:
    n: int
    r: int
    s: int

    def __post_init__(self):
        if self.n < 1 or not 1 <= self.r <= self.n or not 0 <= self.s < self.r:
            raise ValueError(f"need n >= 1, 1 <= r <= n, 0 <= s < r; got {self}")

    @property
    def vertex_count(self) -> int:
        return binomial(self.n, self.r)


@dataclass(frozen=True)
class Provenance:
    kind: str  # "full" | "sampled" | "custom"
    p: float | None = None
    seed: int | None = None


FULL = Provenance("full")
CUSTOM = Provenance("custom")


def johnson_degree(params: JohnsonParams) -> int:
    n, r, s = params.n, params.r, params.s
    return binomial(r, s) * binomial(n - r, r - s)


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def _row_from_bool(row: np.ndarray) -> int:
    return int.from_bytes(np.packbits(row, bitorder="little").tobytes(), "little")


def _bool_from_row(bits: int, size: int) -> np.ndarray:
    nbytes = (size + 7) // 8
    raw = np.frombuffer(bits.to_bytes(nbytes, "little"), dtype=np.uint8)
    return np.unpackbits(raw, bitorder="little")[:size].astype(bool)


@dataclass(frozen=True, eq=False)
class DenseGraph:
    vertex_count: int
    rows: tuple[int, ...]
    params: JohnsonParams | None = None
    provenance: Provenance = CUSTOM
    _edge_count: list = field(default_factory=list, repr=False)

    @classmethod
    def from_edges(cls, m: int, edges: Iterable[tuple[int, int]], **kw) -> "DenseGraph":
        rows = [0] * m
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(m, tuple(rows), **kw)

    @property
    def edge_count(self) -> int:
        if not self._edge_count:
            self._edge_count.append(sum(r.bit_count() for r in self.rows) // 2)
        return self._edge_count[0]

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.rows[v]))

    def edges(self) -> Iterable[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v``, sorted."""
        for u, row in enumerate(self.rows):
            for v in _bits(row >> (u + 1)):
                yield u, u + 1 + v

    def matrix(self) -> np.ndarray:
        return np.array([_bool_from_row(r, self.vertex_count) for r in self.rows]).reshape(
            self.vertex_count, self.vertex_count
        )

    def vertex(self, k: int) -> KSubset:
        if self.params is None:
            raise ValueError("graph has no Johnson parameters")
        return unrank(k, self.params.n, self.params.r)

    def adjacency_hash(self) -> str:
        h = hashlib.sha256()
        nbytes = (self.vertex_count + 7) // 8
        h.update(self.vertex_count.to_bytes(8, "little"))
        for row in self.rows:
            h.update(row.to_bytes(nbytes, "little"))
        return h.hexdigest()


def _subset_words(subsets: Sequence[KSubset], n: int) -> np.ndarray:
    words = (n + 63) // 64
    out = np.zeros((len(subsets), words), dtype=np.uint64)
    for k, u in enumerate(subsets):
        for e in u.elements:
            out[k, (e - 1) // 64] |= np.uint64(1) << np.uint64((e - 1) % 64)
    return out


def _inter_sizes(words: np.ndarray, k: int) -> np.ndarray:
    return np.bitwise_count(words & words[k]).sum(axis=1, dtype=np.int64)


def build_full(params: JohnsonParams, vertex_budget: int = DEFAULT_VERTEX_BUDGET) -> DenseGraph:
    """Exact G(n, r, s): ``u ~ v`` iff ``|u & v| == s``."""
    m = params.vertex_count
    if m > vertex_budget:
        raise CapacityError(
            f"C({params.n},{params.r}) = {m} vertices exceeds the dense budget {vertex_budget}"
        )
    words = _subset_words(all_subsets(params.n, params.r), params.n)
    rows = []
    for k in range(m):
        adj = _inter_sizes(words, k) == params.s
        adj[k] = False  # only matters when s == r, which params forbid
        rows.append(_row_from_bool(adj))
    return DenseGraph(m, tuple(rows), params, FULL)


def sample_subgraph(g: DenseGraph, p: float, seed: int) -> DenseGraph:
    """Keep each edge of ``g`` iff its counter-based uniform draw is ``< p``.

    Draws are keyed on ``(seed, edge)`` only, so two calls with the same seed
    and ``p1 < p2`` yield nested edge sets (shared-draw coupling).
    """
    if g.provenance.kind != "full":
        raise ValueError("sample_subgraph expects a full graph, got provenance "
                         f"{g.provenance.kind!r}")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0, 1], got {p}")
    m = g.vertex_count
    rows = []
    for u, full_row in enumerate(g.rows):
        if p >= 1.0 or p <= 0.0 or not full_row:
            rows.append(full_row if p >= 1.0 else 0)
            continue
        nbrs = np.fromiter(_bits(full_row), dtype=np.int64)
        keep = rng.uniform_array(seed, rng.edge_counters(u, nbrs)) < p
        row = np.zeros(m, dtype=bool)
        row[nbrs[keep]] = True
        rows.append(_row_from_bool(row))
    return DenseGraph(m, tuple(rows), g.params, Provenance("sampled", float(p), int(seed)))


def edge_count_within(g: DenseGraph, vertices: Iterable[int]) -> int:
    """Number of edges of ``g`` with both ends in ``vertices``."""
    vs = sorted(set(vertices))
    mask = 0
    for v in vs:
        mask |= 1 << v
    return sum((g.rows[v] & mask).bit_count() for v in vs) // 2


def edge_count_implicit(subsets: Sequence[KSubset], s: int) -> int:
    """Edges of G(n, r, s) inside ``subsets`` via the intersection predicate.

    Works for any n; no dense graph is built.
    """
    if len(subsets) < 2:
        return 0
    words = _subset_words(subsets, subsets[0].ground_n)
    total = 0
    for k in range(len(subsets) - 1):
        sizes = np.bitwise_count(words[k + 1:] & words[k]).sum(axis=1, dtype=np.int64)
        total += int(np.count_nonzero(sizes == s))
    return total


def edge_ratio(n: int, r: int, subsets: Sequence[KSubset], s: int = 1) -> float:
    """``e(L) * n / l**2`` for the vertex set ``L = subsets``."""
    l = len(subsets)
    return edge_count_implicit(subsets, s) * n / (l * l)


def star_indices(params: JohnsonParams, center: Sequence[int] | None = None) -> list[int]:
    """Ranks of all vertices containing ``center`` (default ``{1, ..., s+1}``)."""
    n, r, s = params.n, params.r, params.s
    center = tuple(sorted(center)) if center is not None else tuple(range(1, s + 2))
    rest = [e for e in range(1, n + 1) if e not in center]
    return sorted(rank(tuple(sorted(center + c))) for c in combinations(rest, r - len(center)))


# ----------------------------------------------------------------------------
# edge-list export / import
# ----------------------------------------------------------------------------


def export_edge_list(g: DenseGraph, path) -> None:
    """Write ``# n r s p seed`` + a value line, then one ``u v`` per edge."""
    if g.params is None:
        n = r = s = "-"
    else:
        n, r, s = g.params.n, g.params.r, g.params.s
    prov = g.provenance
    if prov.kind == "sampled":
        p, seed = repr(prov.p), str(prov.seed)
    elif prov.kind == "full":
        p, seed = "1.0", "full"
    else:
        p, seed = "-", "-"
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("# n r s p seed\n")
        fh.write(f"{n} {r} {s} {p} {seed}\n")
        fh.write(f"# vertices {g.vertex_count}\n")
        for u, v in g.edges():
            fh.write(f"{u} {v}\n")


def import_edge_list(path) -> DenseGraph:
    with open(path, encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    header = None
    m = None
    edges = []
    for line in lines:
        if line.startswith("# vertices"):
            m = int(line.split()[2])
            continue
        if not line.strip() or line.startswith("#"):
            continue
        if header is None:
            header = line.split()
            continue
        u, v = line.split()
        edges.append((int(u), int(v)))
    if header is None or len(header) != 5:
        raise ValueError(f"{path}: missing 'n r s p seed' header line")
    n, r, s, p, seed = header
    params = None if n == "-" else JohnsonParams(int(n), int(r), int(s))
    if m is None:
        m = params.vertex_count if params else 1 + max(max(e) for e in edges)
    if seed == "full":
        prov = FULL
    elif seed == "-":
        prov = CUSTOM
    else:
        prov = Provenance("sampled", float(p), int(seed))
    return DenseGraph.from_edges(m, edges, params=params, provenance=prov)


def random_vertex_set(n: int, r: int, size: int, seed: int) -> list[KSubset]:
    """``size`` distinct r-subsets of [n], uniform without replacement."""
    total = binomial(n, r)
    picks = random.Random(seed).sample(range(total), size)
    return [unrank(k, n, r) for k in sorted(picks)]


def ceil_ratio_size(n: int, r: int, factor=Fraction(6, 5)) -> int:
    """``ceil(factor * C(n, r - 2))`` in exact arithmetic."""
    return math.ceil(Fraction(factor) * binomial(n, r - 2))
