"""Command-line interface.

Subcommands: ``suite list``, ``suite manifest``, ``suite regen-instances``,
``run``, ``summarize``, ``plot``.  Exit codes: 0 success, 1 usage error,
2 data error.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import harness, report, suite

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse's default exits with code 2
        raise _UsageError(message)


def _int_set(text: str) -> tuple[int, ...]:
    """Parse '1,3,5' or '1-10' (or a mix) into a sorted tuple of ints."""
    values: set[int] = set()
    for chunk in text.split(","):
        chunk = chunk.strip()
        if "-" in chunk.lstrip("-")[0:]:  # allow plain negatives to fail below
            lo_str, _, hi_str = chunk.partition("-")
            if lo_str and hi_str:
                values.update(range(int(lo_str), int(hi_str) + 1))
                continue
        values.add(int(chunk))
    return tuple(sorted(values))


def _build_parser() -> _Parser:
    parser = _Parser(prog="biobj", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_suite = sub.add_parser("suite", help="inspect the problem suite")
    suite_sub = p_suite.add_subparsers(dest="suite_command", required=True)
    for name in ("list", "manifest"):
        p = suite_sub.add_parser(name)
        _add_filters(p)
        p.add_argument("--out", help="write to file instead of stdout")
    suite_sub.add_parser(
        "regen-instances",
        help="recompute the instance-id table with the validity loop",
    )

    p_run = sub.add_parser("run", help="run optimizers over suite problems")
    _add_filters(p_run)
    p_run.add_argument(
        "--optimizer",
        action="append",
        choices=harness.OPTIMIZERS,
        help="may be given multiple times (default: random-search)",
    )
    p_run.add_argument("--budget-mult", type=int, default=harness.DEFAULT_BUDGET_MULTIPLIER)
    p_run.add_argument("--seeds", type=_int_set, default=harness.DEFAULT_SEEDS)
    p_run.add_argument("--sigma", type=float, default=harness.DEFAULT_SIGMA)
    p_run.add_argument("--out", required=True, help="results directory")

    p_sum = sub.add_parser("summarize", help="summary table from a results dir")
    p_sum.add_argument("results_dir")
    p_sum.add_argument("--out", help="write to file instead of stdout")

    p_plot = sub.add_parser("plot", help="Pareto-front SVG from a record file")
    p_plot.add_argument("record")
    p_plot.add_argument("--out", required=True, help="output SVG path")
    return parser


def _add_filters(p: argparse.ArgumentParser) -> None:
    p.add_argument("--functions", type=_int_set, help="pair indices, e.g. 1,5-10")
    p.add_argument("--dims", type=_int_set, help="dimensions, e.g. 2,3,5")
    p.add_argument("--instances", type=_int_set, help="instance ids, e.g. 1-10")
    p.add_argument(
        "--non-standard-dims",
        action="store_true",
        help="allow dimensions outside the standard six (testing only)",
    )


def _emit(lines, out_path):
    text = "\n".join(lines) + "\n"
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_suite(args) -> int:
    if args.suite_command == "regen-instances":
        from .suite import N_INSTANCES, compute_instance_pair

        print("INSTANCE_PAIRS = {")
        for k in range(1, N_INSTANCES + 1):
            print(f"    {k}: {compute_instance_pair(k)},")
        print("}")
        return EXIT_OK
    if args.non_standard_dims:
        ids = [
            suite.ProblemId(k, d, i)
            for d in (args.dims or suite.SUITE_DIMS)
            for k in (args.functions or range(1, suite.N_PAIRS + 1))
            for i in (args.instances or range(1, suite.N_INSTANCES + 1))
        ]
    else:
        ids = suite.enumerate_suite(args.functions, args.dims, args.instances)
    if args.suite_command == "list":
        lines = [
            f"{pid} {suite.pair_name(pid.pair_index)} [{suite.group_of(pid.pair_index)}]"
            for pid in ids
        ]
    else:
        lines = suite.manifest_lines(ids)
    _emit(lines, args.out)
    return EXIT_OK


def _cmd_run(args) -> int:
    config = harness.ExperimentConfig(
        out_dir=args.out,
        functions=args.functions,
        dims=args.dims,
        instances=args.instances,
        optimizers=tuple(args.optimizer or ("random-search",)),
        seeds=tuple(args.seeds),
        budget_multiplier=args.budget_mult,
        sigma=args.sigma,
    )
    try:
        harness.run_experiment(config)
    except OSError as exc:
        print(f"error: cannot write results: {exc}", file=sys.stderr)
        return EXIT_DATA
    return EXIT_OK


def _cmd_summarize(args) -> int:
    try:
        lines = report.summarize(args.results_dir)
    except report.EmptyResultsError as exc:
        print(exc, file=sys.stderr)
        _emit([report.SUMMARY_HEADER], args.out)
        return EXIT_DATA
    except (NotADirectoryError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    _emit(lines, args.out)
    return EXIT_OK


def _cmd_plot(args) -> int:
    if not os.path.isfile(args.record):
        print(f"error: no such record file: {args.record}", file=sys.stderr)
        return EXIT_DATA
    try:
        record = harness.read_record(args.record)
        report.plot_front(record, args.out)
    except (harness.RecordError, report.EmptyArchiveError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    return EXIT_OK


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        if args.command == "suite":
            return _cmd_suite(args)
        if args.command == "run":
            return _cmd_run(args)
        if args.command == "summarize":
            return _cmd_summarize(args)
        return _cmd_plot(args)
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
