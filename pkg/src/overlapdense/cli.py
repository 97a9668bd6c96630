"""Command-line entry point: ``overlapdense <subcommand> ...``.

Exit codes: 0 success, 2 parse or contract error, 3 oracle budget exceeded,
4 certification refused.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
import time
from fractions import Fraction
from typing import Sequence

from .densest import densest_subgraph, greedy_peel
from .distinct import densest_distinct_constant_k, densest_distinct_no_crossing
from .errors import BudgetExceeded, CertificationRefused, ContractError
from .generators import KINDS, generate_graph
from .graph import Graph, format_edge_list, parse_edge_list_report, vertex_set
from .hardness import (
    build_hardness_instance,
    extract_partition_from_solution,
    verify_partition_to_solution,
)
from .maxflow import count_flows
from .oracle import OracleBudget, oracle_densest, oracle_densest_distinct, oracle_topk
from .report_io import (
    densest_to_dict,
    densest_to_text,
    rational_to_json,
    report_to_json,
    report_to_text,
)
from .solvers import MODES, solve

log = logging.getLogger("overlapdense")


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a decimal or p/q rational: {text!r}") from None


def _read_graph(args) -> Graph:
    if args.input:
        with open(args.input, encoding="utf-8") as fh:
            g, dups = parse_edge_list_report(fh)
    else:
        g, dups = parse_edge_list_report(sys.stdin)
    if dups:
        log.warning("collapsed %d duplicate edge(s)", dups)
    return g


def _parse_sets(g: Graph, text: str) -> list[tuple[int, ...]]:
    """``"a,b,c;d,e"`` -> vertex-id sets."""
    return [
        vertex_set((g.vertex_id(x.strip()) for x in chunk.split(",") if x.strip()), g)
        for chunk in text.split(";")
        if chunk.strip()
    ]


def _emit(args, text: str) -> None:
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_report(args, report, g: Graph) -> None:
    _emit(args, report_to_json(report, g) if args.format == "json" else report_to_text(report, g))


def _emit_densest(args, result, g: Graph) -> None:
    if args.format == "json":
        _emit(args, json.dumps(densest_to_dict(result, g), indent=2) + "\n")
    else:
        _emit(args, densest_to_text(result, g))


def cmd_solve(args) -> None:
    g = _read_graph(args)
    report = solve(g, args.k, args.lam, args.mode, constant_k_max=args.constant_k_max)
    _emit_report(args, report, g)


def cmd_oracle(args) -> None:
    g = _read_graph(args)
    _emit_report(args, oracle_topk(g, args.k, args.lam, OracleBudget(args.max_vertices)), g)


def cmd_densest(args) -> None:
    g = _read_graph(args)
    method = {"flow": densest_subgraph, "peel": greedy_peel, "oracle": oracle_densest}[args.method]
    _emit_densest(args, method(g), g)


def cmd_dds(args) -> None:
    g = _read_graph(args)
    w = _parse_sets(g, args.collection)
    solver = {
        "constant_k": densest_distinct_constant_k,
        "no_crossing": densest_distinct_no_crossing,
        "oracle": oracle_densest_distinct,
    }[args.solver]
    _emit_densest(args, solver(g, w), g)


def cmd_reduce(args) -> None:
    g = _read_graph(args)
    if args.action == "build":
        inst = build_hardness_instance(g)
        payload = {
            "n": g.n,
            "k": inst.k,
            "lambda": rational_to_json(inst.lam),
            "threshold": rational_to_json(inst.threshold),
        }
        if args.format == "json":
            _emit(args, json.dumps(payload, indent=2) + "\n")
        else:
            _emit(args, f"k = 3, lambda = {inst.lam}, threshold = {inst.threshold}\n")
    elif args.action == "verify":
        if not args.partition:
            raise ContractError("reduce verify needs --partition")
        _emit_report(args, verify_partition_to_solution(g, _parse_sets(g, args.partition)), g)
    else:
        if not args.collection:
            raise ContractError("reduce extract needs --collection")
        p = extract_partition_from_solution(g, _parse_sets(g, args.collection))
        parts = [g.label_set(s) for s in p.parts]
        if args.format == "json":
            _emit(args, json.dumps({"partition": parts}, indent=2) + "\n")
        else:
            _emit(args, "".join(" ".join(part) + "\n" for part in parts))


def _sizes(text: str | None) -> list[int] | None:
    return None if text is None else [int(x) for x in text.split(",") if x.strip()]


def cmd_gen(args) -> None:
    g = generate_graph(
        args.kind, n=args.n, m=args.m, sizes=_sizes(args.sizes),
        p_in=args.p_in, p_out=args.p_out, seed=args.seed,
    )
    isolated = sum(1 for v in range(g.n) if not g.adjacency[v])
    if args.format == "json":
        _emit(args, json.dumps({"n": g.n, "edges": g.edges()}) + "\n")
    else:
        if isolated:
            log.warning("%d isolated vertex(es) cannot be written as edge-list lines", isolated)
        _emit(args, format_edge_list(g))


def cmd_bench(args) -> None:
    rows = []
    for n in _sizes(args.sizes) or []:
        m = min(int(args.avg_degree * n / 2), n * (n - 1) // 2)
        g = generate_graph("gnm", n=n, m=m, seed=args.seed)
        t0 = time.perf_counter()
        with count_flows() as stats:
            report = solve(g, args.k, args.lam, args.mode)
        for t in report.trace:
            rows.append([n, m, args.k, report.dispatched, t.phase, f"{t.seconds:.6f}", t.flow_calls])
        rows.append([n, m, args.k, report.dispatched, "total", f"{time.perf_counter() - t0:.6f}", stats.calls])
    header = ["n", "m", "k", "solver", "phase", "seconds", "flow_calls"]
    if args.format == "json":
        _emit(args, json.dumps([dict(zip(header, r)) for r in rows], indent=2) + "\n")
    else:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        _emit(args, buf.getvalue())


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", help="edge-list file (default: stdin)")
    common.add_argument("--output", help="write result here instead of stdout")
    # default resolved per subcommand in main(); parent actions are shared
    common.add_argument("--format", choices=("json", "text"), default=None)
    problem = argparse.ArgumentParser(add_help=False)
    problem.add_argument("--k", type=int, required=True)
    problem.add_argument("--lambda", dest="lam", type=parse_rational, required=True,
                         help="positive rational, decimal or p/q")

    parser = argparse.ArgumentParser(prog="overlapdense", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", parents=[common, problem], help="approximate top-k overlapping densest subgraphs")
    p.add_argument("--mode", choices=MODES, default="auto")
    p.add_argument("--constant-k-max", type=int, default=4)
    p.add_argument("--seed", type=int, default=0, help="accepted for interface uniformity; solvers are deterministic")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("oracle", parents=[common, problem], help="exact top-k by enumeration (tiny graphs)")
    p.add_argument("--mode", choices=MODES, default="oracle", help="ignored; kept to mirror solve")
    p.add_argument("--max-vertices", type=int, default=None)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("densest", parents=[common], help="single densest subgraph")
    p.add_argument("--method", choices=("flow", "peel", "oracle"), default="flow")
    p.set_defaults(func=cmd_densest)

    p = sub.add_parser("dds", parents=[common], help="densest subgraph distinct from a collection")
    p.add_argument("--collection", required=True, help='sets of labels, e.g. "a,b,c;c,d"')
    p.add_argument("--solver", choices=("constant_k", "no_crossing", "oracle"), default="constant_k")
    p.set_defaults(func=cmd_dds)

    p = sub.add_parser("reduce", parents=[common], help="3-clique-partition hardness instances")
    p.add_argument("action", choices=("build", "verify", "extract"))
    p.add_argument("--partition", help='three label sets, e.g. "a,b;c,d;e,f"')
    p.add_argument("--collection", help="three label sets forming a top-3 solution")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("gen", parents=[common], help="generate a graph as an edge list")
    p.add_argument("--kind", choices=KINDS, required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--sizes", help="comma-separated block/clique sizes")
    p.add_argument("--p-in", type=float, default=0.8)
    p.add_argument("--p-out", type=float, default=0.05)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_gen, default_format="text")

    p = sub.add_parser("bench", parents=[common], help="per-phase timings and max-flow call counts")
    p.add_argument("--sizes", default="20,40,80", help="comma-separated vertex counts")
    p.add_argument("--avg-degree", type=float, default=8.0)
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--lambda", dest="lam", type=parse_rational, default=Fraction(1))
    p.add_argument("--mode", choices=MODES, default="auto")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_bench, default_format="text")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format is None:
        args.format = getattr(args, "default_format", "json")
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        args.func(args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except CertificationRefused as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 4
    except ContractError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
