"""Command-line front end.

Exit codes: 0 success, 1 negative decision (sc-test / 2ec-test false,
toposort on a cyclic graph, failing audit or verify), 2 usage or parse error.
"""
from __future__ import annotations

import argparse
import os
import sys
from typing import Optional, Sequence

from . import audit, bridges, dfs, order
from .graphrep import AdjGraph, GraphParseError, dump_binary, dump_edgelist, load_binary, load_edgelist
from .oracle import KINDS, GenSpec, generate
from .verify import run_verify


def _read_graph(args) -> AdjGraph:
    if args.format == "binary":
        if args.input in (None, "-"):
            return load_binary(sys.stdin.buffer.read())
        with open(args.input, "rb") as fh:
            return load_binary(fh.read())
    if args.input in (None, "-"):
        return load_edgelist(sys.stdin)
    with open(args.input, encoding="ascii") as fh:
        return load_edgelist(fh)


def _emit(lines) -> None:
    out = sys.stdout
    for line in lines:
        out.write(f"{line}\n")


def _decision(value: bool) -> int:
    print("true" if value else "false")
    return 0 if value else 1


def _parse_sizes(spec: str, factor: int) -> list[tuple[int, int]]:
    # "10:16" -> powers of two 2^10 .. 2^16; "1000,2000" -> explicit n values
    if ":" in spec:
        lo, hi = (int(x) for x in spec.split(":"))
        return audit.default_ladder(lo, hi, factor)
    return [(int(x), factor * int(x)) for x in spec.split(",") if x]


def cmd_dfs(args) -> int:
    g = _read_graph(args)
    if args.events:
        _emit(dfs.iter_dfs(g))
        return 0
    forest = dfs.dfs_run(g)
    _emit(f"{u} {v}" for u, v in forest.tree_edges())
    return 0


def cmd_rpo(args) -> int:
    g = _read_graph(args)
    _emit(order.rpo_stream(dfs.dfs_run(g)))
    return 0


def cmd_toposort(args) -> int:
    g = _read_graph(args)
    try:
        stream = order.toposort(g)
    except order.CyclicError as exc:
        u, w = exc.witness
        print(f"cyclic: back edge {u} {w}", file=sys.stderr)
        return 1
    _emit(stream)
    return 0


def cmd_scc(args) -> int:
    g = _read_graph(args)
    _emit(f"{cid}: " + " ".join(map(str, members)) for cid, members in order.scc(g))
    return 0


def cmd_sc_test(args) -> int:
    return _decision(order.sc_test(_read_graph(args)))


def cmd_bridges(args) -> int:
    g = _read_graph(args)
    _emit(f"{min(e)} {max(e)}" for e in bridges.find_bridges(g).bridges)
    return 0


def cmd_2ec_test(args) -> int:
    return _decision(bridges.two_ec_test(_read_graph(args)))


def cmd_audit(args) -> int:
    algo = args.algo.replace("-", "_")
    if algo == "2ec_test":
        algo = "two_ec_test"
    if args.sizes:
        rows = audit.scaling_report(algo, _parse_sizes(args.sizes, args.m_factor), args.seed,
                                    repeats=args.repeats)
        print(audit.TSV_HEADER)
        _emit(r.tsv() for r in rows)
        return 0 if all(r.ok for r in rows) else 1
    digest, ledger = audit.run_audited(algo, _read_graph(args))
    sys.stdout.write(ledger.report())
    print(f"output_sha256\t{digest}")
    return 0


def cmd_gen(args) -> int:
    spec = GenSpec(args.kind, args.n, args.m, args.seed, args.self_loops)
    g = generate(spec)
    if args.format == "binary":
        sys.stdout.buffer.write(dump_binary(g))
    else:
        sys.stdout.write(dump_edgelist(g))
    return 0


def cmd_verify(args) -> int:
    results = run_verify(args.seed, args.trials)
    ok = True
    for algo, (passed, total) in results.items():
        status = "OK" if passed == total else "FAIL"
        ok &= passed == total
        print(f"{algo}: {passed}/{total} {status}")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="spacegraph",
                                description="Space-efficient DFS, orders, SCCs and bridges.")
    sub = p.add_subparsers(dest="command", required=True)

    def graph_cmd(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--input", "-i", help="graph file (default: stdin)")
        sp.add_argument("--format", choices=("edgelist", "binary"), default="edgelist")
        sp.set_defaults(func=func)
        return sp

    sp = graph_cmd("dfs", cmd_dfs, "tree edges (or the full event stream with --events)")
    sp.add_argument("--events", action="store_true", help="dump one DFS event per line")
    graph_cmd("rpo", cmd_rpo, "vertices in reverse postorder")
    graph_cmd("toposort", cmd_toposort, "topological order of a DAG")
    graph_cmd("scc", cmd_scc, "strongly connected components")
    graph_cmd("sc-test", cmd_sc_test, "is the digraph strongly connected")
    graph_cmd("bridges", cmd_bridges, "bridges as 'u v' lines with u < v")
    graph_cmd("2ec-test", cmd_2ec_test, "is the graph 2-edge connected")

    sp = graph_cmd("audit", cmd_audit, "working-space ledger or scaling report")
    sp.add_argument("--algo", required=True,
                    help=f"one of {', '.join(audit.ALGORITHMS)}")
    sp.add_argument("--sizes", help="ladder: 'lo:hi' for n = 2^lo..2^hi, or comma-separated n")
    sp.add_argument("--m-factor", type=int, default=4, help="m = factor * n on the ladder")
    sp.add_argument("--seed", type=int, default=42)
    sp.add_argument("--repeats", type=int, default=1, help="timing runs per size (minimum kept)")

    sp = sub.add_parser("gen", help="emit a generated graph")
    sp.add_argument("--kind", choices=KINDS, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--m", "--k", type=int, default=0, dest="m",
                    help="edge count (gnm, dag) or extra edges (tree-plus-k)")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--self-loops", action=argparse.BooleanOptionalAction, default=None)
    sp.add_argument("--format", choices=("edgelist", "binary"), default="edgelist")
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("verify", help="check every algorithm against the oracles")
    sp.add_argument("--seed", type=int, default=42)
    sp.add_argument("--trials", type=int, default=200)
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except BrokenPipeError:
        # downstream closed early (e.g. `| head`); not our failure
        devnull = os.open(os.devnull, os.O_WRONLY)
        os.dup2(devnull, sys.stdout.fileno())
        return 0
    except (GraphParseError, dfs.UsageError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
