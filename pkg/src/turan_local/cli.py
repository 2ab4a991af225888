"""Command-line front end: ``turan-local {weights,bound,classify,verify,compare}``.

Exit codes: 0 success, 1 verification failure, 2 input error, 3 size limit.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import statistics
import sys
from fractions import Fraction
from typing import Any, Sequence, TextIO

from . import __version__
from .bounds import BoundReport, bound_report, fraction_str
from .clique import clique_number, edge_clique_weights, vertex_clique_weights
from .errors import ContractError, DomainError, Graph6Error, MalformedGraphError, SizeLimitError
from .extremal import classify_extremal
from .graph import Graph
from .graph6 import read_graph6_lines, write_graph6
from .inputs import GENERATORS, parse_argument, parse_text, random_graph
from .verify import THEOREMS, verify_theorems

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_SIZE = 0, 1, 2, 3


def _approx(q: Fraction) -> str:
    s = fraction_str(q)
    return s if q.denominator == 1 else f"{s} (≈ {float(q):.6g})"


def _load_graphs(args: argparse.Namespace) -> list[Graph]:
    sources = [x for x in (args.graph, args.input) if x is not None]
    if len(sources) != 1:
        raise MalformedGraphError("give exactly one input: a GRAPH argument or --input PATH")
    if args.input is not None:
        if args.input == "-":
            text = sys.stdin.read()
        else:
            with open(args.input, encoding="ascii") as fh:
                text = fh.read()
        return parse_text(text)
    if args.graph == "-":
        return parse_text(sys.stdin.read())
    return [parse_argument(args.graph)]


def _emit(args: argparse.Namespace, records: list[dict[str, Any]], table: list[str]) -> None:
    out: TextIO = open(args.out, "w", encoding="utf-8") if args.out else sys.stdout
    try:
        if args.format == "json":
            payload: Any = records[0] if len(records) == 1 else records
            out.write(json.dumps(payload, indent=2) + "\n")
        else:
            out.write("\n".join(table) + "\n")
    finally:
        if out is not sys.stdout:
            out.close()


def cmd_weights(args: argparse.Namespace) -> int:
    records, table = [], []
    for G in _load_graphs(args):
        c = vertex_clique_weights(G)
        k = edge_clique_weights(G)
        omega = clique_number(G)
        records.append(
            {
                "graph6": write_graph6(G),
                "n": G.n,
                "omega": omega,
                "c": list(c),
                "k": [{"u": u, "v": v, "k": kv} for (u, v), kv in sorted(k.items())],
            }
        )
        table.append(f"graph {write_graph6(G)}  n={G.n}  omega={omega}")
        table.append("  c(v): " + ",".join(map(str, c)))
        table.extend(f"  k({u},{v}) = {kv}" for (u, v), kv in sorted(k.items()))
    _emit(args, records, table)
    return EXIT_OK


def _bound_lines(G: Graph, rep: BoundReport) -> list[str]:
    slack = rep.vertex_local_floor - rep.m
    status = "TIGHT" if rep.tight_vertex_floor else f"slack {slack}"
    lines = [
        f"graph {write_graph6(G)}  n={rep.n}  m={rep.m}  omega={rep.omega}",
        f"  vertex-localized: exact {_approx(rep.vertex_local_exact)}, bound {rep.vertex_local_floor}, {status}",
        f"  vertex-localized without floor: {'tight' if rep.vertex_local_nofloor_tight else 'not tight'}",
    ]
    if rep.classical_floor is not None:
        lines.append(
            f"  classical (r={rep.omega}): floor {rep.classical_floor}"
            f"{' tight' if rep.tight_classical_floor else ''}, exact {_approx(rep.classical_nofloor)}"
        )
    lines.append(
        f"  edge-localized: sum {_approx(rep.edge_local_sum)} <= {_approx(rep.edge_local_bound)}"
        f"{' tight' if rep.tight_edge else ''}"
    )
    return lines


def cmd_bound(args: argparse.Namespace) -> int:
    records, table = [], []
    for G in _load_graphs(args):
        rep = bound_report(G)
        rec = rep.to_dict()
        rec["graph6"] = write_graph6(G)
        records.append(rec)
        table.extend(_bound_lines(G, rep))
    _emit(args, records, table)
    return EXIT_OK


def cmd_classify(args: argparse.Namespace) -> int:
    records, table = [], []
    for G in _load_graphs(args):
        cls = classify_extremal(G)
        rec = cls.to_dict()
        rec["graph6"] = write_graph6(G)
        records.append(rec)
        line = f"graph {write_graph6(G)}  {cls.tag.value}"
        if cls.params is not None:
            sizes = "/".join(str(len(c)) for c in cls.partition)
            line += f" r={cls.params.r} classes {sizes} " + " ".join(
                "{" + ",".join(map(str, c)) + "}" for c in cls.partition
            )
        table.append(line)
    _emit(args, records, table)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    theorems = THEOREMS if "all" in args.theorem else tuple(args.theorem)
    external = None
    fh = None
    if args.graph6:
        fh = sys.stdin if args.graph6 == "-" else open(args.graph6, encoding="ascii")
        external = read_graph6_lines(fh)
    n_max = args.n_max if args.n_max is not None else (None if external is not None else 8)
    try:
        report = verify_theorems(n_max, theorems, external_graphs=external, workers=args.workers)
    finally:
        if fh is not None and fh is not sys.stdin:
            fh.close()
    for rec in report.per_n_records():
        print(
            f"n={rec['n']}: checked {rec['checked']}, violations {len(rec['violations'])}, "
            f"extremal classes {len(rec['extremal'])}, {'PASS' if rec['passed'] else 'FAIL'}",
            file=sys.stderr,
        )
    for tid, n in report.set_mismatches():
        print(f"equality set mismatch for {tid} at n={n}", file=sys.stderr)
    print(f"{'PASSED' if report.passed else 'FAILED'}: {sum(report.graphs_checked.values())} graphs", file=sys.stderr)
    if args.format == "json" or args.out:
        text = report.to_json(indent=2) + "\n"
        if args.out:
            with open(args.out, "w", encoding="utf-8") as out:
                out.write(text)
        else:
            sys.stdout.write(text)
    return EXIT_OK if report.passed else EXIT_FAIL


COMPARE_FIELDS = ("index", "graph6", "m", "omega", "vertex_local_floor", "classical_floor",
                  "vertex_gap", "classical_gap", "edge_local_slack")


def compare_rows(n: int, p: float, count: int, seed: int) -> list[dict[str, Any]]:
    """Bound comparison rows for ``count`` seeded G(n, p) samples."""
    import random

    if count < 0:
        raise DomainError(f"count must be non-negative, got {count}")
    rng = random.Random(seed)
    rows = []
    for i in range(count):
        G = random_graph(n, p, rng)
        rep = bound_report(G)
        cf = rep.classical_floor if rep.classical_floor is not None else 0
        rows.append(
            {
                "index": i,
                "graph6": write_graph6(G),
                "m": rep.m,
                "omega": rep.omega,
                "vertex_local_floor": rep.vertex_local_floor,
                "classical_floor": cf,
                "vertex_gap": rep.vertex_local_floor - rep.m,
                "classical_gap": cf - rep.vertex_local_floor,
                "edge_local_slack": fraction_str(rep.edge_local_bound - rep.edge_local_sum),
            }
        )
    return rows


def cmd_compare(args: argparse.Namespace) -> int:
    rows = compare_rows(args.n, args.p, args.count, args.seed)
    out: TextIO = open(args.out, "w", encoding="utf-8", newline="") if args.out else sys.stdout
    try:
        writer = csv.DictWriter(out, fieldnames=COMPARE_FIELDS, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
    finally:
        if out is not sys.stdout:
            out.close()
    for key in ("vertex_gap", "classical_gap"):
        vals = [r[key] for r in rows]
        if len(vals) >= 2:
            q = statistics.quantiles(vals, n=4, method="inclusive")
            print(f"{key}: min {min(vals)} q1 {q[0]} median {q[1]} q3 {q[2]} max {max(vals)}", file=sys.stderr)
        elif vals:
            print(f"{key}: {vals[0]}", file=sys.stderr)
    return EXIT_OK


def _default_workers() -> int:
    raw = os.environ.get("TURAN_LOCAL_WORKERS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="turan-local", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "json"), default="table")
    common.add_argument("--out", metavar="PATH", help="write output here instead of stdout")

    graph_in = argparse.ArgumentParser(add_help=False)
    graph_in.add_argument("graph", nargs="?", help=f"graph6 string, '-' for stdin, or generator: {GENERATORS}")
    graph_in.add_argument("-i", "--input", metavar="PATH", help="edge-list or graph6 file ('-' for stdin)")

    for name, func, help_ in (
        ("weights", cmd_weights, "vertex weights c(v), edge weights k(e) and omega"),
        ("bound", cmd_bound, "all bounds for a graph"),
        ("classify", cmd_classify, "extremal classification"),
    ):
        p = sub.add_parser(name, parents=[common, graph_in], help=help_)
        p.set_defaults(func=func)

    p = sub.add_parser("verify", parents=[common], help="exhaustive theorem certification")
    p.add_argument("--n-max", type=int, default=None, help="largest order to enumerate (<= 8; default 8 without --graph6)")
    p.add_argument("--theorem", action="append", choices=(*THEOREMS, "all"), default=None)
    p.add_argument("--graph6", metavar="PATH", help="extra graph6 file, e.g. all graphs on 9 vertices")
    p.add_argument("--workers", type=int, default=_default_workers())
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("compare", parents=[common], help="localized vs classical gaps on random graphs (CSV)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_compare)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "theorem", "unset") is None:
        args.theorem = ["all"]
    try:
        return args.func(args)
    except SizeLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except (MalformedGraphError, Graph6Error, DomainError, ContractError, OSError, UnicodeDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
