"""Command-line interface.

Exit codes: 0 success, 1 usage error, 2 data error (unreadable or malformed
input, infeasible generation parameters).
"""

import argparse
import os
import sys

from . import edgelist, sweep as sweep_mod
from .classify import classify_links
from .generate import GenerationError, GeneratorSpec, generate
from .graph import GraphError
from .kalman import controllability_report
from .matching import driver_set, maximum_matching
from .metrics import assortativity, heterogeneity
from .rewire import RewireLimits, rewire_random, rewire_regular

USAGE_ERROR = 1
DATA_ERROR = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(USAGE_ERROR)


def _common_flags(parser):
    parser.add_argument("--seed", type=int, default=0, help="base random seed")
    parser.add_argument("--output", default=None, help="output path (default stdout)")
    parser.add_argument("--quiet", action="store_true", help="suppress diagnostics")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="netctrl", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("generate", help="generate a model network as an edge list")
    p.add_argument("--model", required=True, choices=["ER", "SF"])
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--k", required=True, type=float, help="target average degree 2L/N")
    p.add_argument("--gamma", type=float, default=None, help="SF power-law exponent")
    _common_flags(p)

    p = sub.add_parser("analyze", help="print structural measures of an edge list")
    p.add_argument("input")
    p.add_argument("--csv", action="store_true", help="one CSV row instead of key=value")
    _common_flags(p)

    p = sub.add_parser("classify", help="label each link critical/redundant/ordinary")
    p.add_argument("input")
    _common_flags(p)

    p = sub.add_parser("rewire", help="rewire a network and report the trace")
    p.add_argument("input")
    p.add_argument("--method", required=True, choices=["regular", "random"])
    p.add_argument("--max-iters", type=int, default=None)
    p.add_argument("--report", default=None, help="write per-iteration CSV here")
    _common_flags(p)

    p = sub.add_parser("verify", help="finite-field controllability rank check")
    p.add_argument("input")
    p.add_argument("--trials", type=int, default=3)
    _common_flags(p)

    p = sub.add_parser("sweep", help="run an experiment grid, CSV per record")
    p.add_argument("--models", default="ER", help="comma list from {ER,SF}")
    p.add_argument("--n-list", default="2000", help="comma list of node counts")
    p.add_argument("--k-list", default="2,3,4,5,6,7,8,9,10")
    p.add_argument("--gamma-list", default="", help="comma list (SF only)")
    p.add_argument("--methods", default="original", help="comma list from {original,random,regular}")
    p.add_argument("--replicates", type=int, default=1)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--replay", default=None, metavar="MODEL,N,K,GAMMA,METHOD,REP",
                   help="reproduce a single record (gamma empty for ER)")
    _common_flags(p)

    p = sub.add_parser("figure", help="run a named figure recipe (fig1..fig4)")
    p.add_argument("name")
    p.add_argument("--replicates", type=int, default=10)
    p.add_argument("--jobs", type=int, default=1)
    _common_flags(p)

    return parser


def _open_output(args):
    if args.output:
        return open(args.output, "w", encoding="utf-8", newline="")
    return None


def _write_text(args, text: str) -> None:
    out = _open_output(args)
    if out is None:
        sys.stdout.write(text)
    else:
        with out:
            out.write(text)


def _cmd_generate(args) -> int:
    spec = GeneratorSpec(model=args.model, n=args.n, k_avg=args.k,
                         gamma=args.gamma, seed=args.seed)
    g = generate(spec)
    _write_text(args, edgelist.dumps(g))
    return 0


def _metric_lines(g) -> list[tuple[str, object]]:
    m = maximum_matching(g)
    d = driver_set(g, m)
    return [
        ("N", g.n),
        ("L", g.edge_count),
        ("k_avg", g.average_degree()),
        ("n_driver", d.n_driver),
        ("n_d", d.n_driver / g.n),
        ("r_in_in", assortativity(g, "in", "in")),
        ("r_in_out", assortativity(g, "in", "out")),
        ("r_out_in", assortativity(g, "out", "in")),
        ("r_out_out", assortativity(g, "out", "out")),
        ("H", heterogeneity(g)),
    ]


def _fmt_value(v) -> str:
    if v is None:
        return ""
    if isinstance(v, float):
        return f"{v:.6g}"
    return str(v)


def _cmd_analyze(args) -> int:
    g = edgelist.read_edge_list(args.input)
    pairs = _metric_lines(g)
    if args.csv:
        text = ",".join(k for k, _ in pairs) + "\n"
        text += ",".join(_fmt_value(v) for _, v in pairs) + "\n"
    else:
        text = "".join(f"{k}={_fmt_value(v)}\n" for k, v in pairs)
    _write_text(args, text)
    return 0


def _cmd_classify(args) -> int:
    g = edgelist.read_edge_list(args.input)
    result = classify_links(g)
    lines = [f"{u}\t{v}\t{result.labels[(u, v)].value}" for u, v in g.sorted_edges()]
    _write_text(args, "".join(line + "\n" for line in lines))
    return 0


def _cmd_rewire(args) -> int:
    g = edgelist.read_edge_list(args.input)
    limits = RewireLimits(max_iterations=args.max_iters, seed=args.seed)
    fn = rewire_regular if args.method == "regular" else rewire_random
    rewired, report = fn(g, limits)
    _write_text(args, edgelist.dumps(rewired))
    if args.report:
        with open(args.report, "w", encoding="utf-8", newline="") as fh:
            fh.write("iteration,deleted_u,deleted_v,added_u,added_v,n_driver\n")
            for i in range(report.iterations):
                du, dv = report.deleted[i]
                au, av = report.added[i]
                nd = report.n_driver_trajectory[i]
                fh.write(f"{i},{du},{dv},{au},{av},{nd}\n")
    if not args.quiet:
        print(
            f"iterations={report.iterations} "
            f"termination={report.termination_reason}",
            file=sys.stderr,
        )
    return 0


def _cmd_verify(args) -> int:
    g = edgelist.read_edge_list(args.input)
    ok, m, rank = controllability_report(g, trials=args.trials, seed=args.seed)
    _write_text(args, f"controllable={'true' if ok else 'false'} m={m} rank={rank}\n")
    return 0


def _split(text: str, cast):
    return tuple(cast(x) for x in text.split(",") if x != "")


def _cmd_sweep(args) -> int:
    if args.replay:
        parts = args.replay.split(",")
        if len(parts) != 6:
            print("--replay expects MODEL,N,K,GAMMA,METHOD,REP", file=sys.stderr)
            return USAGE_ERROR
        model, n, k, gamma, method, rep = parts
        record = sweep_mod.run_cell(
            args.seed,
            model,
            int(n),
            float(k),
            float(gamma) if gamma else None,
            method,
            int(rep),
        )
        _write_text(args, sweep_mod.csv_header() + "\n" + record.csv_row() + "\n")
        return 0
    config = sweep_mod.SweepConfig(
        models=_split(args.models, str),
        n_list=_split(args.n_list, int),
        k_list=_split(args.k_list, float),
        gamma_list=_split(args.gamma_list, float),
        methods=_split(args.methods, str),
        replicates=args.replicates,
        base_seed=args.seed,
    )
    try:
        config.validate()
    except ValueError as exc:
        print(f"netctrl sweep: {exc}", file=sys.stderr)
        return USAGE_ERROR
    return _run_sweep_to_output(args, config)


def _run_sweep_to_output(args, config) -> int:
    errstream = open(os.devnull, "w") if args.quiet else sys.stderr
    out = _open_output(args)
    target = out if out is not None else sys.stdout
    try:
        target.write(sweep_mod.csv_header() + "\n")
        for record in sweep_mod.run_sweep(config, jobs=args.jobs, errstream=errstream):
            target.write(record.csv_row() + "\n")
    finally:
        if out is not None:
            out.close()
        if args.quiet:
            errstream.close()
    return 0


def _cmd_figure(args) -> int:
    try:
        config = sweep_mod.figure_recipe(
            args.name, replicates=args.replicates, base_seed=args.seed
        )
    except ValueError as exc:
        print(f"netctrl figure: {exc}", file=sys.stderr)
        return USAGE_ERROR
    return _run_sweep_to_output(args, config)


_COMMANDS = {
    "generate": _cmd_generate,
    "analyze": _cmd_analyze,
    "classify": _cmd_classify,
    "rewire": _cmd_rewire,
    "verify": _cmd_verify,
    "sweep": _cmd_sweep,
    "figure": _cmd_figure,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE_ERROR
    try:
        return _COMMANDS[args.command](args)
    except (edgelist.EdgeListParseError, GraphError, GenerationError) as exc:
        print(f"netctrl {args.command}: {exc}", file=sys.stderr)
        return DATA_ERROR
    except OSError as exc:
        print(f"netctrl {args.command}: {exc}", file=sys.stderr)
        return DATA_ERROR


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
