"""Monte Carlo estimates of P(alpha(G_p(n, r, s)) = C(n-s-1, r-s-1)).

Trial ``t`` of a batch uses seed ``derive_seed(master_seed, t)`` and the
edge draws of :func:`jlab.graph.sample_subgraph`.  Because draws depend on
the seed and edge only, a sweep over ``p`` reuses the same draws for every
``p`` (shared-draw coupling): trial by trial, larger ``p`` means a superset of
edges and therefore a smaller or equal alpha.  Results never depend on the
number of workers.
"""

from __future__ import annotations

import csv
import io
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

from scipy.stats import binomtest

from . import __version__
from .combinatorics import binomial
from .graph import DEFAULT_VERTEX_BUDGET, CapacityError, JohnsonParams, build_full, sample_subgraph
from .rng import STREAM_VERSION, derive_seed
from .bounds import p0_threshold
from .solver import Budget, alpha_at_least, decide_with_stats, max_independent_set

__all__ = [
    "TrialResult",
    "TrialBatch",
    "Sweep",
    "CouplingViolation",
    "run_batch",
    "sweep",
    "wilson_interval",
    "worker_count",
    "CSV_COLUMNS",
]

CSV_COLUMNS = ["n", "r", "s", "p", "trials", "successes", "unknowns", "rate",
               "ci_lo", "ci_hi", "master_seed"]

DEFAULT_BUDGET = Budget(max_nodes=5_000_000, max_seconds=120.0)


class CouplingViolation(AssertionError):
    pass


@dataclass(frozen=True)
class TrialResult:
    index: int
    seed: int
    alpha_matches_star: bool | None  # None: solver budget ran out
    alpha: int | None
    solver_nodes: int


def wilson_interval(successes: int, trials: int, level: float = 0.95) -> tuple[float, float]:
    if trials == 0:
        return 0.0, 1.0
    ci = binomtest(successes, trials).proportion_ci(confidence_level=level, method="wilson")
    return float(ci.low), float(ci.high)


@dataclass(frozen=True)
class TrialBatch:
    params: JohnsonParams
    p: float
    trials: int
    master_seed: int
    target: int
    results: tuple[TrialResult, ...] = field(repr=False)

    @property
    def successes(self) -> int:
        return sum(1 for t in self.results if t.alpha_matches_star is True)

    @property
    def unknowns(self) -> int:
        return sum(1 for t in self.results if t.alpha_matches_star is None)

    @property
    def success_rate(self) -> float:
        return self.successes / self.trials if self.trials else 0.0

    @property
    def unknown_rate(self) -> float:
        return self.unknowns / self.trials if self.trials else 0.0

    @property
    def wilson(self) -> tuple[float, float]:
        return wilson_interval(self.successes, self.trials)

    def csv_row(self) -> list[str]:
        lo, hi = self.wilson
        n, r, s = self.params.n, self.params.r, self.params.s
        return [str(n), str(r), str(s), f"{self.p:g}", str(self.trials), str(self.successes),
                str(self.unknowns), f"{self.success_rate:.6f}", f"{lo:.6f}", f"{hi:.6f}",
                str(self.master_seed)]

    def to_json(self, detail: bool = False) -> dict:
        lo, hi = self.wilson
        out = {
            "n": self.params.n, "r": self.params.r, "s": self.params.s, "p": self.p,
            "trials": self.trials, "target": self.target, "master_seed": self.master_seed,
            "successes": self.successes, "unknowns": self.unknowns,
            "rate": self.success_rate, "unknown_rate": self.unknown_rate,
            "ci_lo": lo, "ci_hi": hi,
        }
        if detail:
            out["per_trial"] = [
                {"index": t.index, "seed": t.seed, "alpha_matches_star": t.alpha_matches_star,
                 "alpha": t.alpha, "solver_nodes": t.solver_nodes}
                for t in self.results
            ]
        return out


def worker_count(requested: int | None = None) -> int:
    cap = os.environ.get("JLAB_THREADS")
    n = requested or os.cpu_count() or 1
    if cap:
        n = min(n, max(1, int(cap)))
    return max(1, n)


# ----------------------------------------------------------------------------
# worker side
# ----------------------------------------------------------------------------

_GRAPH = None


def _init_worker(params: JohnsonParams, vertex_budget: int) -> None:
    global _GRAPH
    _GRAPH = build_full(params, vertex_budget)


def _trial(args) -> list[TrialResult]:
    index, master_seed, ps, target, budget, record_alpha = args
    seed = derive_seed(master_seed, index)
    out = []
    for p in ps:
        h = sample_subgraph(_GRAPH, p, seed)
        exceeds, nodes = decide_with_stats(h, target + 1, budget)
        alpha = None
        if record_alpha:
            res = max_independent_set(h, budget)
            nodes += res.nodes_explored
            if res.optimal:
                alpha = res.alpha
                if exceeds is not None and exceeds != (alpha > target):
                    raise AssertionError(f"decision and full solve disagree on trial {index}")
        matches = None if exceeds is None else not exceeds
        out.append(TrialResult(index, seed, matches, alpha, nodes))
    return out


def _run_trials(params, ps, trials, master_seed, budget, record_alpha, workers, vertex_budget):
    target = binomial(params.n - params.s - 1, params.r - params.s - 1)
    jobs = [(t, master_seed, tuple(ps), target, budget, record_alpha) for t in range(trials)]
    workers = worker_count(workers)
    if workers == 1 or trials < 2 * workers:
        _init_worker(params, vertex_budget)
        per_trial = [_trial(j) for j in jobs]
    else:
        chunk = max(1, trials // (4 * workers))
        with ProcessPoolExecutor(workers, initializer=_init_worker,
                                 initargs=(params, vertex_budget)) as ex:
            per_trial = list(ex.map(_trial, jobs, chunksize=chunk))
    return target, per_trial


def _check_budget(params: JohnsonParams, vertex_budget: int) -> None:
    if params.vertex_count > vertex_budget:
        raise CapacityError(
            f"C({params.n},{params.r}) = {params.vertex_count} vertices exceeds the dense "
            f"budget {vertex_budget}"
        )


def _full_exceeds(params: JohnsonParams, target: int, budget: Budget, vertex_budget: int):
    return alpha_at_least(build_full(params, vertex_budget), target + 1, budget)


def run_batch(params: JohnsonParams, p: float, trials: int, master_seed: int,
              budget: Budget = DEFAULT_BUDGET, record_alpha: bool = False,
              workers: int | None = None,
              vertex_budget: int = DEFAULT_VERTEX_BUDGET) -> TrialBatch:
    """Decide ``alpha(G_p) > target`` on ``trials`` independent samples."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0, 1], got {p}")
    _check_budget(params, vertex_budget)
    target, per_trial = _run_trials(params, [p], trials, master_seed, budget,
                                    record_alpha, workers, vertex_budget)
    results = tuple(t[0] for t in per_trial)
    # alpha(G_p) >= alpha(G): if the full graph beats the star, every sample does
    if _full_exceeds(params, target, budget, vertex_budget) is True:
        if any(t.alpha_matches_star for t in results):
            raise AssertionError("a sampled subgraph has smaller alpha than the full graph")
    return TrialBatch(params, float(p), trials, master_seed, target, results)


@dataclass(frozen=True)
class Sweep:
    params: JohnsonParams
    p_grid: tuple[float, ...]
    trials: int
    master_seed: int
    batches: tuple[TrialBatch, ...]
    p0: float | None = None

    def csv(self, header: dict | None = None) -> str:
        buf = io.StringIO()
        meta = {"version": __version__, "stream": STREAM_VERSION, "command": "mc sweep",
                "n": self.params.n, "r": self.params.r, "s": self.params.s,
                "p_grid": list(self.p_grid), "trials": self.trials,
                "master_seed": self.master_seed, "p0": self.p0}
        if header:
            meta.update(header)
        buf.write(f"# jlab {__version__}\n")
        buf.write(f"# config {json.dumps(meta, sort_keys=True)}\n")
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for b in self.batches:
            w.writerow(b.csv_row())
        return buf.getvalue()

    def monotone_rates(self, slack: float = 0.0) -> bool:
        rates = [b.success_rate for b in self.batches]
        return all(b >= a - slack for a, b in zip(rates, rates[1:]))


def _check_coupling(ps: Sequence[float], per_trial: list[list[TrialResult]]) -> None:
    for trial in per_trial:
        prev_alpha = None
        prev_match = None
        for p, res in zip(ps, trial):
            if res.alpha is not None and prev_alpha is not None and res.alpha > prev_alpha:
                raise CouplingViolation(
                    f"trial {res.index}: alpha rose from {prev_alpha} to {res.alpha} at p={p}")
            if prev_match is True and res.alpha_matches_star is False:
                raise CouplingViolation(
                    f"trial {res.index}: alpha exceeded the star bound again at p={p}")
            if res.alpha is not None:
                prev_alpha = res.alpha
            if res.alpha_matches_star is not None:
                prev_match = res.alpha_matches_star


def sweep(params: JohnsonParams, p_grid: Sequence[float], trials: int, master_seed: int,
          budget: Budget = DEFAULT_BUDGET, record_alpha: bool = False,
          workers: int | None = None, vertex_budget: int = DEFAULT_VERTEX_BUDGET) -> Sweep:
    """One batch per ``p`` with shared per-trial draws; coupling is asserted exactly.

    With ``record_alpha`` each trial's alpha must be non-increasing in ``p``;
    the star-match decision must switch at most once, from no to yes.
    """
    ps = sorted(float(p) for p in p_grid)
    if any(not 0.0 <= p <= 1.0 for p in ps):
        raise ValueError(f"every p must lie in [0, 1]: {ps}")
    _check_budget(params, vertex_budget)
    target, per_trial = _run_trials(params, ps, trials, master_seed, budget,
                                    record_alpha, workers, vertex_budget)
    _check_coupling(ps, per_trial)
    batches = tuple(
        TrialBatch(params, p, trials, master_seed, target, tuple(t[k] for t in per_trial))
        for k, p in enumerate(ps)
    )
    p0 = None
    if params.s == 0 and params.n >= 2 * params.r + 1:
        p0 = p0_threshold(params.n, params.r)
    return Sweep(params, tuple(ps), trials, master_seed, batches, p0)
