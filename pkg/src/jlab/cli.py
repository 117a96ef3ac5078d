"""Command-line entry point: ``jlab <command> ...``.

Exit codes: 0 success, 1 precondition/config error (message on stderr),
2 solver budget exhausted.  Randomized commands default to ``--seed 2024``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from fractions import Fraction

from . import __version__
from .bounds import (
    ConfigError,
    Constants,
    PreconditionError,
    bipartite_union_bound,
    chernoff_tail,
    frankl_furedi_alpha,
    geometric_grid,
    lemma_tech_best_c,
    lemma_tech_margin,
    p0_threshold,
    turan_chain,
    union_crossing,
)
from .combinatorics import FamilyFileError, read_family, write_family
from .family import UnsupportedParameters, analyze_family, build_bj, build_ess, check_bj_invariants
from .graph import (
    CapacityError,
    JohnsonParams,
    build_full,
    export_edge_list,
    import_edge_list,
    sample_subgraph,
)
from .montecarlo import CSV_COLUMNS, DEFAULT_BUDGET, run_batch, sweep
from .rng import STREAM_VERSION
from .solver import Budget, max_independent_set
from .verify import run_all

DEFAULT_SEED = 2024
BOUND_NAMES = ("p0", "tech", "tech-c", "chernoff", "union", "union-scan", "turan", "ff")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def _common(p: argparse.ArgumentParser, *names: str) -> None:
    specs = {
        "n": dict(type=int), "r": dict(type=int), "s": dict(type=int, default=1),
        "p": dict(type=float), "trials": dict(type=int, default=100),
        "seed": dict(type=int, default=DEFAULT_SEED),
        "budget-nodes": dict(type=int), "budget-secs": dict(type=float),
        "constants": dict(), "format": dict(choices=("csv", "json"), default="json"),
        "out": dict(),
    }
    for name in names:
        p.add_argument(f"--{name}", **specs[name])


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="jlab", description="Johnson-graph independence laboratory")
    ap.add_argument("--version", action="version", version=f"jlab {__version__}")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("graph", help="build or export G(n,r,s) / G_p(n,r,s)")
    g.add_argument("action", choices=("build", "export"))
    _common(g, "n", "r", "s", "p", "seed", "format", "out")
    g.add_argument("--in", dest="infile", help="re-import an exported edge list")

    a = sub.add_parser("alpha", help="exact independence number")
    _common(a, "n", "r", "s", "p", "seed", "budget-nodes", "budget-secs", "format", "out")

    f = sub.add_parser("family", help="analyze a family file")
    f.add_argument("action", choices=("analyze", "ess", "bj"))
    f.add_argument("--in", dest="infile", required=True)
    _common(f, "format", "out")

    b = sub.add_parser("bounds", help="evaluate a bound")
    b.add_argument("name", choices=BOUND_NAMES)
    _common(b, "n", "r", "s", "constants", "format", "out")
    b.add_argument("--i", type=int)
    b.add_argument("--mu", type=float)
    b.add_argument("--delta", type=float)
    b.add_argument("--t0", type=float)
    b.add_argument("--n-min", type=int, default=8)
    b.add_argument("--n-max", type=int, default=2000)
    b.add_argument("--threshold", type=float, default=1e-3)

    m = sub.add_parser("mc", help="Monte Carlo over G_p(n,r,s)")
    m.add_argument("action", choices=("run", "sweep"))
    _common(m, "n", "r", "s", "p", "trials", "seed", "budget-nodes", "budget-secs",
            "format", "out")
    m.add_argument("--p-grid", default="0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9,1.0")
    m.add_argument("--record-alpha", action="store_true")
    m.add_argument("--detail", action="store_true", help="per-trial records in JSON")
    m.add_argument("--workers", type=int)

    v = sub.add_parser("verify", help="acceptance suite and invariants")
    v.add_argument("scope", choices=("all", "acceptance"))
    return ap


# ----------------------------------------------------------------------------
# output helpers
# ----------------------------------------------------------------------------


def _meta(args) -> dict:
    cfg = {k: v for k, v in vars(args).items() if v is not None}
    return {"jlab": __version__, "stream": STREAM_VERSION, "config": cfg,
            "seed": getattr(args, "seed", None)}


def _jsonable(obj):
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, float) and not math.isfinite(obj):
        return str(obj)
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


def _emit(args, text: str) -> None:
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_json(args, result) -> None:
    _emit(args, json.dumps(_jsonable({"meta": _meta(args), "result": result}), indent=2) + "\n")


def _emit_csv(args, columns, rows) -> None:
    buf = io.StringIO()
    meta = _meta(args)
    buf.write(f"# jlab {__version__}\n")
    buf.write(f"# config {json.dumps(_jsonable(meta['config']), sort_keys=True)}\n")
    buf.write(f"# seed {meta['seed']}\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    w.writerows(rows)
    _emit(args, buf.getvalue())


def _require(args, *names):
    missing = [f"--{n}" for n in names if getattr(args, n.replace("-", "_"), None) is None]
    if missing:
        raise PreconditionError(f"missing required option(s): {' '.join(missing)}")


def _graph(args):
    _require(args, "n", "r")
    g = build_full(JohnsonParams(args.n, args.r, args.s))
    if args.p is not None:
        g = sample_subgraph(g, args.p, args.seed)
    return g


def _budget(args) -> Budget:
    return Budget(args.budget_nodes, args.budget_secs)


def _constants(args) -> Constants:
    return Constants.load(args.constants) if args.constants else Constants()


# ----------------------------------------------------------------------------
# commands
# ----------------------------------------------------------------------------


def cmd_graph(args) -> int:
    if args.infile:
        g = import_edge_list(args.infile)
    else:
        g = _graph(args)
    if args.action == "export":
        if not args.out:
            raise PreconditionError("graph export needs --out")
        export_edge_list(g, args.out)
        print(f"wrote {g.edge_count} edges to {args.out} (hash {g.adjacency_hash()})")
        return 0
    info = {"vertices": g.vertex_count, "edges": g.edge_count,
            "provenance": g.provenance.kind, "p": g.provenance.p, "graph_seed": g.provenance.seed,
            "hash": g.adjacency_hash()}
    if args.format == "csv":
        _emit_csv(args, list(info), [list(info.values())])
    else:
        _emit_json(args, info)
    return 0


def cmd_alpha(args) -> int:
    g = _graph(args)
    res = max_independent_set(g, _budget(args))
    witness = [str(g.vertex(v)) for v in res.witness]
    if args.format == "json" and args.out:
        _emit_json(args, {"alpha": res.alpha, "optimal": res.optimal,
                          "upper_bound": res.upper_bound, "witness": witness,
                          "witness_ranks": list(res.witness), "nodes": res.nodes_explored})
    else:
        head = f"# jlab {__version__} config {json.dumps(_jsonable(_meta(args)['config']), sort_keys=True)}\n"
        status = "" if res.optimal else f" upper_bound={res.upper_bound} (budget exhausted)"
        _emit(args, head + f"alpha={res.alpha} witness={' '.join(witness)}{status}\n")
    return 0 if res.optimal else 2


def cmd_family(args) -> int:
    n, r, A = read_family(args.infile)
    stats = analyze_family(n, r, A)
    if args.action == "analyze":
        _emit_json(args, stats.to_json())
    elif args.action == "ess":
        ess = build_ess(stats, A)
        if args.out:
            write_family(args.out, n, r, ess, comment=f"Ess(A) of {args.infile}")
        else:
            sys.stdout.write(f"n={n} r={r}\n")
            for u in ess:
                sys.stdout.write(" ".join(map(str, u.elements)) + "\n")
    else:
        bj = build_bj(n, r, stats)
        _emit_json(args, {
            "stats": stats.to_json(),
            "relabel": list(stats.relabel),
            "labels": list(bj.labels),
            "u": [list(u.elements) for u in bj.u_choices],
            "B_sizes": [len(B) for B in bj.B_sets],
            "B_lower_bounds": [bj.lower_bound(j + 1) for j in range(len(bj.B_sets))],
            "B": [[list(v.elements) for v in B] for B in bj.B_sets],
            "invariants": check_bj_invariants(bj),
        })
    return 0


def _report_rows(reports):
    cols = ["name", "lhs", "rhs", "margin", "satisfied", "domain"]
    return cols, [[rep.name, rep.lhs, rep.rhs, rep.margin, rep.satisfied, rep.domain]
                  for rep in reports]


def cmd_bounds(args) -> int:
    name = args.name
    if name == "p0":
        _require(args, "n", "r")
        base = _constants(args).log_base
        value = p0_threshold(args.n, args.r, base)
        if args.format == "csv":
            _emit_csv(args, ["n", "r", "p0"], [[args.n, args.r, repr(value)]])
        else:
            _emit_json(args, {"p0": value, "log_base": base})
        return 0
    if name == "ff":
        _require(args, "n", "r")
        _emit_json(args, {"alpha": frankl_furedi_alpha(args.n, args.r, args.s),
                          "in_regime": args.r >= 2 * args.s + 1})
        return 0
    if name == "chernoff":
        _require(args, "mu", "delta")
        v = chernoff_tail(args.mu, args.delta)
        _emit_json(args, {"log_bound": v.log, "bound": float(v)})
        return 0
    if name == "tech":
        _require(args, "n", "r", "i")
        reports = [lemma_tech_margin(args.n, args.r, args.i, _constants(args).c)]
    elif name == "tech-c":
        _require(args, "r")
        c = lemma_tech_best_c(args.r, range(max(args.n_min, 2 * args.r - 4), args.n_max + 1))
        _emit_json(args, {"best_c": c, "best_c_float": float(c)})
        return 0
    elif name == "union":
        _require(args, "n", "r")
        ub = bipartite_union_bound(args.n, args.r, _constants(args).union_constant)
        if args.format == "csv":
            _emit_csv(args, ["i", "log_term", "log_term_relaxed"],
                      [[i + 1, a, b] for i, (a, b) in
                       enumerate(zip(ub.log_terms, ub.log_terms_relaxed))])
            return 0
        reports = [ub.report()]
    elif name == "union-scan":
        _require(args, "r")
        grid = geometric_grid(args.n_min, args.n_max)
        n_star, rows = union_crossing(args.r, grid, args.threshold,
                                      _constants(args).union_constant)
        if args.format == "csv":
            _emit_csv(args, ["n", "log10_total"], rows)
        else:
            _emit_json(args, {"n_star": n_star, "threshold": args.threshold, "grid": rows})
        return 0
    else:  # turan
        _require(args, "n", "r")
        reports = turan_chain(args.n, args.r, args.t0, _constants(args))
    if args.format == "csv":
        _emit_csv(args, *_report_rows(reports))
    else:
        _emit_json(args, [rep.to_json() for rep in reports])
    return 0


def cmd_mc(args) -> int:
    _require(args, "n", "r")
    params = JohnsonParams(args.n, args.r, args.s)
    if args.action == "run":
        _require(args, "p")
        batch = run_batch(params, args.p, args.trials, args.seed, _budget_or_default(args),
                          record_alpha=args.record_alpha, workers=args.workers)
        batches = [batch]
    else:
        grid = [float(x) for x in args.p_grid.split(",") if x.strip()]
        sw = sweep(params, grid, args.trials, args.seed, _budget_or_default(args),
                   record_alpha=args.record_alpha, workers=args.workers)
        if args.format == "csv":
            _emit(args, sw.csv({"command": "mc sweep"}))
            return 2 if any(b.unknowns for b in sw.batches) else 0
        batches = list(sw.batches)
    if args.format == "csv":
        _emit_csv(args, CSV_COLUMNS, [b.csv_row() for b in batches])
    else:
        _emit_json(args, [b.to_json(detail=args.detail) for b in batches])
    return 2 if any(b.unknowns for b in batches) else 0


def _budget_or_default(args) -> Budget:
    if args.budget_nodes is None and args.budget_secs is None:
        return DEFAULT_BUDGET
    return _budget(args)


def cmd_verify(args) -> int:
    checks = run_all(include_invariants=args.scope == "all")
    failed = [c for c in checks if not c.passed]
    print(f"{len(checks) - len(failed)}/{len(checks)} passed")
    return 0 if not failed else 1


COMMANDS = {"graph": cmd_graph, "alpha": cmd_alpha, "family": cmd_family,
            "bounds": cmd_bounds, "mc": cmd_mc, "verify": cmd_verify}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return 1
    except (PreconditionError, ConfigError, CapacityError, FamilyFileError,
            UnsupportedParameters, ValueError, OSError) as exc:
        print(f"jlab: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
