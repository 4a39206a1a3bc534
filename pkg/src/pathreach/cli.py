"""Command-line front end.

Subcommands: validate, reach, min-switches, decompose, pathnum-lb, gen,
oracle, bench.  Results go to stdout, diagnostics to stderr.  Exit codes:
0 affirmative/success, 1 negative answer (unreachable, invalid), 2 usage
or input error.  File arguments accept '-' for stdin.
"""

from __future__ import annotations

import argparse
import random
import sys
import time
from enum import IntEnum
from typing import Sequence

from .dagcover import CyclicGraphError, minimal_path_decomposition
from .decomposition import (
    DecompositionFormatError,
    WalkDecomposition,
    format_decomposition,
    parse_decomposition,
    path_number_lower_bound,
    validate_path_decomposition,
    validate_walk_decomposition,
)
from .graph import Digraph, GraphFormatError, format_graph, parse_graph
from .reach import decide_reachability
from .testkit import (
    InstanceSeed,
    gen_decomposed_instance,
    gen_random_dag,
    oracle_min_switches,
    oracle_reachable,
    switch_chain,
)


class ExitStatus(IntEnum):
    OK = 0        # affirmative answer / success
    NEGATIVE = 1  # negative answer: unreachable, validation failed
    USAGE = 2     # usage or input error


class _InputError(Exception):
    """Input-level failure reported as a one-line diagnostic, exit code 2."""


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise _InputError(f"cannot read {path}: {exc.strerror}") from None


def _load_graph(path: str) -> Digraph:
    try:
        return parse_graph(_read_text(path))
    except GraphFormatError as exc:
        raise _InputError(f"{path}: {exc}") from None


def _load_decomposition(path: str) -> WalkDecomposition:
    try:
        return parse_decomposition(_read_text(path))
    except DecompositionFormatError as exc:
        raise _InputError(f"{path}: {exc}") from None


def _checked_universe(args) -> tuple[WalkDecomposition, int | None]:
    """Load the decomposition and, when a graph is given, validate coverage
    against it first and use its vertex count as the universe."""
    w = _load_decomposition(args.decomp)
    if args.graph is None:
        return w, None
    g = _load_graph(args.graph)
    report = validate_walk_decomposition(g, w)
    if not report.ok:
        raise _InputError(
            f"decomposition does not cover the graph "
            f"({len(report.violations)} violations, run validate for details)")
    return w, g.n


def _cmd_validate(args) -> int:
    g = _load_graph(args.graph)
    w = _load_decomposition(args.decomp)
    if args.paths:
        report = validate_path_decomposition(g, w)
    else:
        report = validate_walk_decomposition(g, w)
    if report.ok:
        print("ok")
        return ExitStatus.OK
    for violation in report.violations:
        print(f"{violation.kind.value} {violation.detail}")
    return ExitStatus.NEGATIVE


def _cmd_reach(args) -> int:
    w, n = _checked_universe(args)
    try:
        res = decide_reachability(w, args.src, args.dst, n=n)
    except ValueError as exc:
        raise _InputError(str(exc)) from None
    if res.reachable:
        print(f"REACHABLE switches={res.min_switches} "
              f"iterations={res.iterations} peak_words={res.peak_words}")
        return ExitStatus.OK
    print(f"UNREACHABLE iterations={res.iterations} peak_words={res.peak_words}")
    return ExitStatus.NEGATIVE


def _cmd_min_switches(args) -> int:
    w, n = _checked_universe(args)
    try:
        res = decide_reachability(w, args.src, args.dst, n=n)
    except ValueError as exc:
        raise _InputError(str(exc)) from None
    if res.reachable:
        print(res.min_switches)
        return ExitStatus.OK
    print("UNREACHABLE")
    return ExitStatus.NEGATIVE


def _cmd_decompose(args) -> int:
    g = _load_graph(args.graph)
    try:
        cover = minimal_path_decomposition(g)
    except CyclicGraphError:
        raise _InputError("graph is not acyclic") from None
    sys.stdout.write(format_decomposition(cover))
    return ExitStatus.OK


def _cmd_pathnum_lb(args) -> int:
    g = _load_graph(args.graph)
    print(path_number_lower_bound(g))
    return ExitStatus.OK


def _cmd_gen(args) -> int:
    if args.kind == "walks":
        try:
            spec = InstanceSeed(n=args.n, k=args.k, max_len=args.max_len, seed=args.seed)
        except ValueError as exc:
            raise _InputError(str(exc)) from None
        sys.stdout.write(format_decomposition(gen_decomposed_instance(spec)))
    else:
        try:
            g = gen_random_dag(args.n, args.p, args.seed)
        except ValueError as exc:
            raise _InputError(str(exc)) from None
        sys.stdout.write(format_graph(g))
    return ExitStatus.OK


def _cmd_oracle(args) -> int:
    if args.decomp is not None:
        w, n = _checked_universe(args)
        try:
            count = oracle_min_switches(w, args.src, args.dst, n=n)
        except ValueError as exc:
            raise _InputError(str(exc)) from None
        if count is not None:
            print(f"REACHABLE switches={count}")
            return ExitStatus.OK
        print("UNREACHABLE")
        return ExitStatus.NEGATIVE
    g = _load_graph(args.graph)
    try:
        hit = oracle_reachable(g, args.src, args.dst)
    except ValueError as exc:
        raise _InputError(str(exc)) from None
    if hit:
        print("REACHABLE")
        return ExitStatus.OK
    print("UNREACHABLE")
    return ExitStatus.NEGATIVE


def _bench_instance(args) -> tuple[WalkDecomposition, int]:
    if args.decomp is not None:
        w = _load_decomposition(args.decomp)
        return w, w.implied_vertex_count
    if args.chain is not None:
        n, k = args.chain
        try:
            return switch_chain(n, k), n
        except ValueError as exc:
            raise _InputError(str(exc)) from None
    n, k, max_len, seed = args.gen
    try:
        spec = InstanceSeed(n=n, k=k, max_len=max_len, seed=seed)
    except ValueError as exc:
        raise _InputError(str(exc)) from None
    return gen_decomposed_instance(spec), n


def _cmd_bench(args) -> int:
    w, n = _bench_instance(args)
    total_len = sum(len(walk) for walk in w)
    rng = random.Random(args.seed)
    if args.query:
        pairs = args.query
    else:
        if n < 1:
            raise _InputError("instance has no vertices to query")
        pairs = [(rng.randrange(n), rng.randrange(n)) for _ in range(args.pairs)]
    print("n,k,total_len,query,reachable,switches,iterations,peak_words,nanos")
    for s, t in pairs:
        try:
            start = time.perf_counter_ns()
            res = decide_reachability(w, s, t, n=n)
            elapsed = time.perf_counter_ns() - start
        except ValueError as exc:
            raise _InputError(str(exc)) from None
        switches = "" if res.min_switches is None else res.min_switches
        print(f"{n},{w.k},{total_len},{s}->{t},{int(res.reachable)},"
              f"{switches},{res.iterations},{res.peak_words},{elapsed}")
    return ExitStatus.OK


def _pair(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError("expected two comma-separated integers")
    return int(parts[0]), int(parts[1])


def _quad(text: str) -> tuple[int, int, int, int]:
    parts = text.split(",")
    if len(parts) != 4:
        raise argparse.ArgumentTypeError("expected four comma-separated integers")
    return tuple(int(p) for p in parts)  # type: ignore[return-value]


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pathreach",
        description="Reachability over walk decompositions and minimal DAG path covers.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a decomposition against a graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--decomp", required=True)
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--paths", action="store_true",
                      help="require edge-disjoint simple paths covering every edge")
    mode.add_argument("--walks", action="store_true",
                      help="require only that the union of steps equals the edge set")
    p.set_defaults(func=_cmd_validate)

    for name, func in (("reach", _cmd_reach), ("min-switches", _cmd_min_switches)):
        p = sub.add_parser(name, help="decide reachability over a decomposition")
        p.add_argument("--decomp", required=True)
        p.add_argument("--graph", help="optional graph to validate coverage against")
        p.add_argument("--from", dest="src", type=int, required=True)
        p.add_argument("--to", dest="dst", type=int, required=True)
        p.set_defaults(func=func)

    p = sub.add_parser("decompose", help="minimal path decomposition of a DAG")
    p.add_argument("--graph", required=True)
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("pathnum-lb", help="degree-imbalance lower bound on the path number")
    p.add_argument("--graph", required=True)
    p.set_defaults(func=_cmd_pathnum_lb)

    p = sub.add_parser("gen", help="generate a reproducible instance")
    gen_sub = p.add_subparsers(dest="kind", required=True)
    pw = gen_sub.add_parser("walks", help="random walk decomposition")
    pw.add_argument("--n", type=int, required=True)
    pw.add_argument("--k", type=int, required=True)
    pw.add_argument("--max-len", type=int, required=True)
    pw.add_argument("--seed", type=int, required=True)
    pd = gen_sub.add_parser("dag", help="random DAG")
    pd.add_argument("--n", type=int, required=True)
    pd.add_argument("--p", type=float, required=True)
    pd.add_argument("--seed", type=int, required=True)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("oracle", help="brute-force reference answers")
    p.add_argument("--decomp", help="decomposition for the switch-count oracle")
    p.add_argument("--graph", help="graph for the plain reachability oracle")
    p.add_argument("--from", dest="src", type=int, required=True)
    p.add_argument("--to", dest="dst", type=int, required=True)
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("bench", help="time queries, emit CSV")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--decomp")
    src.add_argument("--chain", type=_pair, metavar="N,K",
                     help="worst-case chain instance")
    src.add_argument("--gen", type=_quad, metavar="N,K,MAXLEN,SEED",
                     help="generated instance")
    p.add_argument("--pairs", type=int, default=10, help="random query count")
    p.add_argument("--query", type=_pair, action="append", metavar="S,T",
                   help="explicit query; repeatable, overrides --pairs")
    p.add_argument("--seed", type=int, default=0, help="seed for random queries")
    p.set_defaults(func=_cmd_bench)

    return parser


def run(argv: Sequence[str] | None = None) -> int:
    """Dispatch one command line; returns the exit code without exiting."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return ExitStatus.OK if exc.code in (0, None) else ExitStatus.USAGE
    if args.command == "oracle" and args.decomp is None and args.graph is None:
        print("error: oracle needs --decomp or --graph", file=sys.stderr)
        return ExitStatus.USAGE
    try:
        return args.func(args)
    except _InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return ExitStatus.USAGE
    except BrokenPipeError:
        return ExitStatus.OK


def main() -> None:
    sys.exit(run())
