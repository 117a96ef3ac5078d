"""Counter-based pseudorandom stream ``jlab-splitmix64-v1``.

Every draw is a pure function of ``(seed, counter)``:

    h = mix64(seed XOR mix64(counter + GAMMA))
    u = (h >> 11) * 2**-53          # uniform in [0, 1)

where ``mix64`` is the SplitMix64 finalizer (Steele, Lea & Flood 2014) on
64-bit words and ``GAMMA = 0x9E3779B97F4A7C15``.  Edge draws use the counter
``(lo_rank << 32) | hi_rank``.  Do not change any constant here without
bumping ``STREAM_VERSION``: golden outputs depend on it.
"""

from __future__ import annotations

import numpy as np

STREAM_VERSION = "jlab-splitmix64-v1"

MASK64 = (1 << 64) - 1
GAMMA = 0x9E3779B97F4A7C15
_M1 = 0xBF58476D1CE4E5B9
_M2 = 0x94D049BB133111EB
_INV_2_53 = 1.0 / (1 << 53)


def mix64(z: int) -> int:
    z &= MASK64
    z = ((z ^ (z >> 30)) * _M1) & MASK64
    z = ((z ^ (z >> 27)) * _M2) & MASK64
    return z ^ (z >> 31)


def hash64(seed: int, counter: int) -> int:
    return mix64((seed & MASK64) ^ mix64(counter + GAMMA))


def uniform(seed: int, counter: int) -> float:
    return (hash64(seed, counter) >> 11) * _INV_2_53


def edge_counter(u: int, v: int) -> int:
    lo, hi = (u, v) if u < v else (v, u)
    return (lo << 32) | hi


def derive_seed(master_seed: int, index: int) -> int:
    """Per-item seed for item ``index`` of a batch keyed on ``master_seed``."""
    return hash64(master_seed, index)


# vectorized variants -- must agree bit-for-bit with the scalar ones above


def _mix64_np(z: np.ndarray) -> np.ndarray:
    z = z ^ (z >> np.uint64(30))
    z = z * np.uint64(_M1)
    z = z ^ (z >> np.uint64(27))
    z = z * np.uint64(_M2)
    return z ^ (z >> np.uint64(31))


def uniform_array(seed: int, counters: np.ndarray) -> np.ndarray:
    c = np.asarray(counters, dtype=np.uint64)
    with np.errstate(over="ignore"):
        inner = _mix64_np(c + np.uint64(GAMMA))
        h = _mix64_np(np.uint64(seed & MASK64) ^ inner)
    return (h >> np.uint64(11)).astype(np.float64) * _INV_2_53


def edge_counters(u: int | np.ndarray, v: np.ndarray) -> np.ndarray:
    u = np.asarray(u, dtype=np.uint64)
    v = np.asarray(v, dtype=np.uint64)
    lo = np.minimum(u, v)
    hi = np.maximum(u, v)
    return (lo << np.uint64(32)) | hi
