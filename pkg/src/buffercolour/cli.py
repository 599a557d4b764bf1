"""Command-line front end: ``buffercolour {colour,simulate,enumerate,tables,verify}``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import _kernels
from .checks import run_suite
from .colourer import BranchCapExceeded, buffered_colouring, exact_outcome_distribution
from .graph import GraphError, check_order, random_order
from .rng import COLOUR_STREAM, ORDER_STREAM, SplitMix64, derive_seed
from .sim import (
    DEFAULT_REPS,
    GraphSpec,
    TrialConfig,
    crown_table,
    kneser_table,
    resolve_order,
    run_trials,
    table_to_csv,
    table_to_json,
)

EXIT_CHECK_FAILED = 1
EXIT_SPEC_ERROR = 2
EXIT_BRANCH_CAP = 3
EXIT_IO_ERROR = 4


class SpecError(Exception):
    pass


def _parse_order(text: str) -> str | tuple[int, ...]:
    if text in ("linear", "alternate", "random"):
        return text
    try:
        return tuple(int(x) - 1 for x in text.split(","))
    except ValueError:
        raise SpecError(
            f"order {text!r} must be linear, alternate, random or a comma-separated 1-based list"
        ) from None


def _load(graph_text: str, order_text: str, seed: int):
    try:
        spec = GraphSpec.parse(graph_text)
        graph = spec.build()
        policy = _parse_order(order_text)
        order = resolve_order(policy, graph, spec)
        if order is None:
            order = random_order(graph, derive_seed(seed, 0, ORDER_STREAM))
        return spec, graph, check_order(order, graph.n)
    except (GraphError, OSError) as exc:
        raise SpecError(str(exc)) from exc


def _colour_name(c: int, letters: bool) -> str:
    if not letters:
        return str(c)
    name = ""
    while c > 0:
        c, r = divmod(c - 1, 26)
        name = chr(ord("A") + r) + name
    return name


def cmd_colour(args) -> int:
    spec, graph, order = _load(args.graph, args.order, args.seed)
    rand = SplitMix64(derive_seed(args.seed, 0, COLOUR_STREAM))
    colouring = buffered_colouring(graph, order, args.b, rand)
    one_based = spec.kind != "file"
    shift = 1 if one_based else 0
    print(f"graph: {spec}  b={args.b}  seed={args.seed}  backend={_kernels.BACKEND}")
    print("order: " + ",".join(str(v + shift) for v in order))
    for v in range(graph.n):
        label = f" {graph.labels[v]}" if graph.labels else ""
        print(f"{v + shift}{label}: {_colour_name(colouring.colours[v], args.letters)}")
    print(f"colours: {colouring.count}")
    return 0


def cmd_enumerate(args) -> int:
    spec, graph, order = _load(args.graph, args.order, args.seed)
    try:
        dist = exact_outcome_distribution(graph, order, args.b, branch_cap=args.branch_cap)
    except BranchCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BRANCH_CAP
    print(f"{dist}, mean {dist.mean()}")
    print(f"branches: {dist.branches}  graph: {spec}  b={args.b}")
    return 0


def cmd_simulate(args) -> int:
    try:
        spec = GraphSpec.parse(args.graph)
        cfg = TrialConfig(spec, _parse_order(args.order), args.b, args.reps, args.seed)
        report = run_trials(cfg, workers=args.workers)
    except (GraphError, OSError, ValueError) as exc:
        raise SpecError(str(exc)) from exc
    if args.format == "json":
        print(json.dumps(report.__dict__ | {"empirical_pmf": {str(k): v for k, v in report.empirical_pmf.items()}}))
    else:
        print(f"graph: {report.graph}  b={report.b}  reps={report.repetitions}  seed={report.master_seed}")
        print(f"mean: {report.mean:.4f}  stderr: {report.std_error:.4f}  min: {report.min}  max: {report.max}")
        print("pmf: " + " ".join(f"{k}:{c}" for k, c in report.empirical_pmf.items()))
    return 0


def cmd_tables(args) -> int:
    if args.which == "crown":
        rows = crown_table(reps=args.reps, seed=args.seed, workers=args.workers)
    else:
        rows = kneser_table(reps=args.reps, seed=args.seed, workers=args.workers)
    text = table_to_csv(rows) if args.format == "csv" else table_to_json(rows)
    if args.out:
        try:
            Path(args.out).write_text(text, encoding="utf-8")
        except OSError as exc:
            print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
            return EXIT_IO_ERROR
    else:
        sys.stdout.write(text)
    return 0


def cmd_verify(args) -> int:
    results = run_suite(args.suite)
    for check in results:
        print(check.line())
    failed = [c for c in results if not c.passed]
    print(f"{len(results) - len(failed)}/{len(results)} checks passed")
    return EXIT_CHECK_FAILED if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="buffercolour",
        description="Online graph colouring with a lookahead buffer.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_args(p, with_b=True):
        p.add_argument("--graph", required=True, help="crown:N | kneser:N,K | file:PATH")
        p.add_argument("--order", default="random", help="linear | alternate | random | 1-based list")
        p.add_argument("--seed", type=int, default=0)
        if with_b:
            p.add_argument("--b", type=int, default=1, help="buffer size")

    p = sub.add_parser("colour", help="colour one arrival sequence")
    graph_args(p)
    p.add_argument("--letters", action="store_true", help="print colours as A, B, C, ...")
    p.set_defaults(func=cmd_colour)

    p = sub.add_parser("enumerate", help="exact colour-count law over all random branches")
    graph_args(p)
    p.add_argument("--branch-cap", type=int, default=10**7)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("simulate", help="Monte Carlo run of one configuration")
    graph_args(p)
    p.add_argument("--reps", type=int, default=DEFAULT_REPS)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("tables", help="reproduce the crown or Kneser mean-colour table")
    p.add_argument("--which", choices=("crown", "kneser"), required=True)
    p.add_argument("--reps", type=int, default=DEFAULT_REPS)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", help="write to this path instead of stdout")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("verify", help="run the exact regression checks")
    p.add_argument("--suite", choices=("crown", "props", "petersen", "all"), default="all")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "b", 1) < 1:
        print("error: --b must be >= 1", file=sys.stderr)
        return EXIT_SPEC_ERROR
    try:
        return args.func(args)
    except SpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SPEC_ERROR


if __name__ == "__main__":
    sys.exit(main())
