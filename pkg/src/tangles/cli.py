"""Command-line surface.

Subcommands: solve, check, gen, render, bench, verify-conjecture.

Exit codes form a stable contract:
  0  success / positive verdict (feasible, consistent, non-separable, ...)
  1  negative verdict (infeasible, inconsistent, separable, counterexamples)
  2  unusable input: parse errors, bad flags
  3  budget exceeded before a verdict (timeout or memory)
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .bench import ALGORITHMS, load_instances, records_to_csv, run_benchmark, states_for_memory
from .core import Permutation, SwapList, is_consistent
from .feasibility import verify_even_conjecture
from .fileio import FormatError, parse_list, parse_tangle, serialize_list, serialize_tangle
from .instances import (
    RandomRejectionError,
    ThreePartitionInstance,
    hardness_gadget,
    loop_list,
    pseudoline_list,
    random_list,
)
from .reports import FEASIBLE, INFEASIBLE
from .render import RenderSpec, render
from .solver_general import is_feasible

EX_OK = 0
EX_NEGATIVE = 1
EX_PARSE = 2
EX_BUDGET = 3


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _write_text(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _cmd_solve(args: argparse.Namespace) -> int:
    lst = parse_list(_read_text(args.input))
    solver = ALGORITHMS[args.algo]
    max_states = (
        states_for_memory(args.mem_limit, lst.n) if args.mem_limit is not None else None
    )
    try:
        report = solver(lst, time_limit=args.time_limit, max_states=max_states)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_PARSE
    height = "" if report.height is None else f" height={report.height}"
    print(
        f"verdict={report.verdict}{height} states={report.states_explored} "
        f"elapsed_ms={report.elapsed_seconds * 1000.0:.3f}"
    )
    if report.verdict == FEASIBLE and args.output is not None:
        _write_text(args.output, serialize_tangle(report.tangle))
    if report.verdict == FEASIBLE:
        return EX_OK
    if report.verdict == INFEASIBLE:
        return EX_NEGATIVE
    return EX_BUDGET


def _cmd_check(args: argparse.Namespace) -> int:
    lst = parse_list(_read_text(args.input))
    if args.mode == "consistency":
        positive = is_consistent(Permutation.identity(lst.n), lst)
        print("consistent" if positive else "inconsistent")
    elif args.mode == "feasibility":
        positive = is_feasible(lst)
        print("feasible" if positive else "infeasible")
    else:
        positive = lst.is_non_separable()
        print("non-separable" if positive else "separable")
    return EX_OK if positive else EX_NEGATIVE


def _parse_values(raw: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in raw.replace(",", " ").split())
    except ValueError:
        raise FormatError(f"--values expects integers, got {raw!r}") from None


def _cmd_gen(args: argparse.Namespace) -> int:
    if args.family == "loops":
        if args.n is None:
            raise FormatError("--n is required for family 'loops'")
        lst = loop_list(args.n)
    elif args.family == "pseudoline":
        if args.n is None:
            raise FormatError("--n is required for family 'pseudoline'")
        lst = pseudoline_list(args.n)
    elif args.family == "random":
        if args.n is None or args.total is None:
            raise FormatError("--n and --total are required for family 'random'")
        lst = random_list(args.n, args.total, args.seed)
    else:
        if not args.values:
            raise FormatError("--values is required for family 'hardness'")
        inst = ThreePartitionInstance(_parse_values(args.values))
        gadget = hardness_gadget(inst)
        lst = gadget.swaps
        print(f"height_bound={gadget.height_bound}", file=sys.stderr)
    _write_text(args.output, serialize_list(lst))
    return EX_OK


def _cmd_render(args: argparse.Namespace) -> int:
    tangle = parse_tangle(_read_text(args.input))
    spec = RenderSpec(
        column_width=args.column_width,
        row_height=args.row_height,
        labels=not args.no_labels,
        format=args.format,
    )
    _write_text(args.output, render(tangle, spec))
    return EX_OK


def _cmd_bench(args: argparse.Namespace) -> int:
    algos = [tok.strip() for tok in args.algos.split(",") if tok.strip()]
    for algo in algos:
        if algo not in ALGORITHMS:
            raise FormatError(f"unknown algorithm {algo!r}")
    instances = load_instances(args.input)
    if not instances:
        raise FormatError(f"no instances found in {args.input}")
    records = run_benchmark(
        instances,
        algos,
        time_limit=args.time_limit,
        mem_limit_mb=args.mem_limit,
        repeats=args.repeats,
        workers=args.workers,
    )
    _write_text(args.output, records_to_csv(records))
    return EX_OK


def _cmd_verify_conjecture(args: argparse.Namespace) -> int:
    report = verify_even_conjecture(
        args.n, args.entry_bound, workers=args.workers
    )
    payload = {
        "n": report.n,
        "entry_bound": report.entry_bound,
        "lists_enumerated": report.lists_enumerated,
        "non_separable": report.non_separable,
        "feasible": report.feasible,
        "counterexamples": [
            {"n": lst.n, "swaps": [list(e) for e in lst.entries]}
            for lst in report.counterexamples
        ],
        "elapsed_seconds": round(report.elapsed_seconds, 3),
    }
    _write_text(args.output, json.dumps(payload, indent=2) + "\n")
    return EX_OK if report.holds else EX_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tangles",
        description="Solvers, checkers, generators and benchmarks for "
        "minimum-height wire tangles.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="compute a minimum-height tangle")
    solve.add_argument("--input", required=True, help="swap list file ('-' for stdin)")
    solve.add_argument("--output", help="write the tangle document here when feasible")
    solve.add_argument(
        "--algo", default="general", choices=sorted(ALGORITHMS), help="solver to run"
    )
    solve.add_argument("--time-limit", type=float, help="wall-clock budget in seconds")
    solve.add_argument("--mem-limit", type=float, help="approximate budget in MB")
    solve.set_defaults(func=_cmd_solve)

    check = sub.add_parser("check", help="evaluate a structural predicate")
    check.add_argument("--input", required=True)
    check.add_argument(
        "--mode",
        required=True,
        choices=("consistency", "feasibility", "non-separability"),
    )
    check.set_defaults(func=_cmd_check)

    gen = sub.add_parser("gen", help="emit an instance-family list file")
    gen.add_argument(
        "--family",
        required=True,
        choices=("loops", "pseudoline", "random", "hardness"),
    )
    gen.add_argument("--n", type=int, help="wire count")
    gen.add_argument("--total", type=int, help="number of swaps (random family)")
    gen.add_argument("--seed", type=int, default=0, help="RNG seed (random family)")
    gen.add_argument(
        "--values",
        help="comma-separated 3-partition values (hardness family)",
    )
    gen.add_argument("--output", help="output path (default stdout)")
    gen.set_defaults(func=_cmd_gen)

    render_cmd = sub.add_parser("render", help="draw a tangle as ascii or svg")
    render_cmd.add_argument("--input", required=True, help="tangle file")
    render_cmd.add_argument("--output", help="output path (default stdout)")
    render_cmd.add_argument("--format", default="ascii", choices=("ascii", "svg"))
    render_cmd.add_argument("--column-width", type=int, default=1)
    render_cmd.add_argument("--row-height", type=int, default=1)
    render_cmd.add_argument("--no-labels", action="store_true")
    render_cmd.set_defaults(func=_cmd_render)

    bench = sub.add_parser("bench", help="run the timing harness over a directory")
    bench.add_argument("--input", required=True, help="directory of list files")
    bench.add_argument("--output", help="CSV path (default stdout)")
    bench.add_argument(
        "--algos", default="general,baseline", help="comma-separated algorithm names"
    )
    bench.add_argument("--time-limit", type=float, help="per-run budget in seconds")
    bench.add_argument("--mem-limit", type=float, help="per-run approximate MB budget")
    bench.add_argument("--repeats", type=int, default=1)
    bench.add_argument("--workers", type=int, default=1)
    bench.set_defaults(func=_cmd_bench)

    verify = sub.add_parser(
        "verify-conjecture",
        help="exhaustively test the even-list feasibility conjecture",
    )
    verify.add_argument("--n", type=int, required=True)
    verify.add_argument("--entry-bound", type=int, default=2)
    verify.add_argument("--workers", type=int, default=1)
    verify.add_argument("--output", help="JSON report path (default stdout)")
    verify.set_defaults(func=_cmd_verify_conjecture)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (FormatError, RandomRejectionError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_PARSE
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_PARSE


if __name__ == "__main__":
    sys.exit(main())
