"""Command-line front end.

Exit codes: 0 all requested steps pass, 1 some step fails, 2 usage error,
3 internal or I/O error.
"""

from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import dataclass
from pathlib import Path

from .pipeline import STEP_IDS, run_steps, serialize_report
from .quadrature import QuadConfig

log = logging.getLogger("baselftc")

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


@dataclass
class CliOptions:
    steps: list[str]
    abs_tol: float = 1e-8
    max_evals: int = 1_000_000
    format: str = "plain"
    output_path: Path | None = None
    verbose: bool = False


def _positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not value > 0 or value == float("inf"):
        raise argparse.ArgumentTypeError(f"must be a positive finite number: {text!r}")
    return value


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1: {text!r}")
    return value


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="baselftc",
        description="Numerically verify, step by step, that sum 1/n^2 = pi^2/6.",
        epilog="steps: " + ", ".join(STEP_IDS),
    )
    which = p.add_mutually_exclusive_group()
    which.add_argument("--step", action="append", choices=STEP_IDS, metavar="ID",
                       help="run only this step (repeatable)")
    which.add_argument("--all", action="store_true", help="run every step (default)")
    p.add_argument("--tol", type=_positive_float, default=1e-8, help="absolute tolerance (default 1e-8)")
    p.add_argument("--max-evals", type=_positive_int, default=1_000_000,
                   help="integrand evaluations allowed per integral (default 1e6)")
    p.add_argument("--format", choices=("json", "markdown", "plain"), default="plain")
    p.add_argument("--out", type=Path, default=None, help="write the report here instead of stdout")
    p.add_argument("--verbose", action="store_true")
    return p


def parse_args(argv: list[str] | None = None) -> CliOptions:
    """Parse ``argv``; exits with status 2 and a message on bad input."""
    ns = build_parser().parse_args(argv)
    return CliOptions(
        steps=list(ns.step) if ns.step else list(STEP_IDS),
        abs_tol=ns.tol,
        max_evals=ns.max_evals,
        format=ns.format,
        output_path=ns.out,
        verbose=ns.verbose,
    )


def main(options: CliOptions) -> int:
    logging.basicConfig(level=logging.INFO if options.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s", stream=sys.stderr)
    try:
        cfg = QuadConfig(abs_tol=options.abs_tol, max_evals=options.max_evals)
        log.info("running %s with %s", ", ".join(options.steps), cfg)
        report = run_steps(options.steps, cfg)
        payload = serialize_report(report, options.format)
    except Exception as exc:  # noqa: BLE001
        print(f"baselftc: internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL

    for s in report.steps:
        log.info("%s %s (%d evals) %s", "PASS" if s.passed else "FAIL", s.step_id, s.n_evals, s.notes)

    if options.output_path is None:
        sys.stdout.buffer.write(payload)
        sys.stdout.flush()
    else:
        try:
            options.output_path.write_bytes(payload)
        except OSError as exc:
            print(f"baselftc: cannot write {options.output_path}: {exc}", file=sys.stderr)
            return EXIT_INTERNAL
    return EXIT_OK if report.all_pass else EXIT_FAIL


def entry(argv: list[str] | None = None) -> int:
    try:
        options = parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    return main(options)


if __name__ == "__main__":
    sys.exit(entry())
