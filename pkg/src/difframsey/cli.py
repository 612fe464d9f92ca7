"""Command-line front end: ``difframsey {search,issai,verify,report}``.

Exit status is 0 on success, 1 when a coloring fails verification and 2 for
usage, parse or budget errors.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from .core import CliqueTargets, ColoringError
from .formats import (
    FormatError,
    dumps_results,
    loads_results,
    parse_coloring_file,
)
from .issai import issai_search
from .report import ReportError, render_report
from .search import (
    LOWER_BOUND,
    CheckpointError,
    SearchBudgetError,
    SearchOptions,
    SearchOutcome,
    checkpoint_read,
    search,
)
from .verify import verify_coloring

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def _targets(text: str) -> CliqueTargets:
    try:
        return CliqueTargets.parse(text)
    except ColoringError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="difframsey",
        description="Difference Ramsey numbers and Issai numbers by level-by-level search.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="log level sizes")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("search", help="compute D(k1,...,kr)")
    p.add_argument("--targets", type=_targets, help="clique sizes, e.g. 3,5")
    p.add_argument("--beam", type=_positive, help="cap on level size (gives a lower bound)")
    p.add_argument("--checkpoint", type=Path, help="write each level to this file")
    p.add_argument("--resume", type=Path, help="continue from a checkpoint file")
    p.add_argument("--jobs", type=_positive, default=1, help="worker processes per level")
    p.add_argument("--max-level", type=_positive, default=SearchOptions.max_level_size,
                   help="uncapped level-size budget (default %(default)s)")
    p.add_argument("--all-maximal", action="store_true", help="print every maximal coloring")
    p.add_argument("--out", type=Path, help="write a results file")

    p = sub.add_parser("issai", help="compute S(k1,...,kr)")
    p.add_argument("--targets", type=_targets, required=True)
    p.add_argument("--beam", type=_positive)
    p.add_argument("--all-maximal", action="store_true")
    p.add_argument("--out", type=Path)

    p = sub.add_parser("verify", help="check a coloring file")
    p.add_argument("file", type=Path)
    p.add_argument("--targets", type=_targets, required=True)

    p = sub.add_parser("report", help="write a Markdown or LaTeX summary")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--results", type=Path, help="results file from search/issai --out")
    src.add_argument("--coloring", type=Path, help="coloring file (needs --targets)")
    p.add_argument("--targets", type=_targets)
    p.add_argument("--format", choices=("markdown", "latex"), default="markdown")
    p.add_argument("--out", type=Path)
    return parser


def _print_colorings(outcome: SearchOutcome, out) -> None:
    for coloring in outcome.maximal_colorings:
        classes = " | ".join(
            f"{c}: " + " ".join(map(str, members))
            for c, members in enumerate(coloring.classes, start=1)
        )
        print(f"  {coloring.to_string()}  [{classes}]", file=out)


def cmd_search(args, out) -> int:
    resume = None
    if args.resume is not None:
        resume = checkpoint_read(args.resume)
        if args.targets is not None and args.targets != resume.targets:
            raise UsageError(
                f"--targets {args.targets.label()} does not match checkpoint "
                f"targets {resume.targets.label()}"
            )
    targets = args.targets if args.targets is not None else (resume.targets if resume else None)
    if targets is None:
        raise UsageError("search needs --targets or --resume")
    options = SearchOptions(
        beam_cap=args.beam,
        checkpoint_path=args.checkpoint,
        parallelism=args.jobs,
        max_level_size=args.max_level,
    )
    outcome = search(targets, options, resume=resume)
    line = outcome.summary()
    if outcome.exact:
        line += f", maximal graphs: {outcome.orbit_count}"
    print(line, file=out)
    if args.all_maximal:
        _print_colorings(outcome, out)
    if args.out is not None:
        args.out.write_text(dumps_results(outcome))
    return EXIT_OK


def cmd_issai(args, out) -> int:
    outcome = issai_search(args.targets, SearchOptions(beam_cap=args.beam))
    print(outcome.summary().replace(" (exact)", ""), file=out)
    if args.all_maximal:
        _print_colorings(outcome, out)
    if args.out is not None:
        args.out.write_text(dumps_results(outcome))
    return EXIT_OK


def cmd_verify(args, out) -> int:
    cf = parse_coloring_file(args.file.read_text())
    if cf.r != args.targets.r:
        raise UsageError(f"file has r={cf.r} colors but {args.targets.r} targets were given")
    result = verify_coloring(cf.coloring, args.targets)
    for line in result.lines():
        print(line, file=out)
    return EXIT_OK if result.passed else EXIT_FAILED


def cmd_report(args, out) -> int:
    if args.results is not None:
        if args.targets is not None:
            raise UsageError("--targets is read from the results file")
        outcome = loads_results(args.results.read_text())
    else:
        if args.targets is None:
            raise UsageError("--coloring needs --targets")
        cf = parse_coloring_file(args.coloring.read_text())
        if cf.r != args.targets.r:
            raise UsageError(f"file has r={cf.r} colors but {args.targets.r} targets were given")
        check = verify_coloring(cf.coloring, args.targets)
        if not check.passed:
            for line in check.lines():
                print(line, file=out)
            return EXIT_FAILED
        # A verified coloring of n vertices (or integers) certifies value n + 1.
        kind = "ramsey" if cf.kind == "difference" else "issai"
        outcome = SearchOutcome(args.targets, LOWER_BOUND, cf.n + 1, (cf.coloring,), None, kind)
    text = render_report(outcome, args.format)
    if args.out is not None:
        args.out.write_text(text)
    else:
        out.write(text)
    return EXIT_OK


COMMANDS = {
    "search": cmd_search,
    "issai": cmd_issai,
    "verify": cmd_verify,
    "report": cmd_report,
}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return COMMANDS[args.command](args, out)
    except (UsageError, FormatError, CheckpointError, ColoringError, ReportError) as exc:
        print(f"difframsey {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SearchBudgetError as exc:
        print(f"difframsey {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"difframsey {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main_entry() -> None:
    sys.exit(main())
