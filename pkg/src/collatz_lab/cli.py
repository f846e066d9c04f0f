"""Command-line harness.

Commands: trace, verify, tree, stats, oeis-check.  Results go to stdout or
--output in the requested --format; progress and timing go to stderr only,
so identical runs write identical bytes regardless of worker count.  The
COLLATZ_LAB_WORKERS environment variable overrides any --workers flag.

Exit status: 0 on success, 1 when a verification found violations, 2 on
usage, configuration or domain errors.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass

from collatz_lab import emit as emit_mod
from collatz_lab import oeis, reverse_tree, sequences, verify
from collatz_lab.errors import BFileParseError, ConfigurationError, DomainError

_VALID_FORMATS = {
    "trace": ("text", "json", "csv"),
    "verify": ("text", "json", "csv"),
    "tree": ("text", "json", "dot"),
    "stats": ("text", "json", "csv"),
    "oeis-check": ("text", "json", "csv"),
}


@dataclass(frozen=True)
class RunConfig:
    command: str
    fmt: str
    output: str | None
    kind: str | None = None
    start: int | None = None
    budget: int = verify.DEFAULT_BUDGET
    target: int | None = None
    param_a: int | None = None
    param_b: int | None = None
    theorem: str | None = None
    lo: int | None = None
    hi: int | None = None
    workers: int = 1
    cap: int = verify.DEFAULT_VIOLATION_CAP
    candidates: int | None = None
    depth: int | None = None
    bfile: str | None = None
    generator: str | None = None
    count: int | None = None


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="collatz-lab",
        description="Exact sequence engines, reverse-tree enumeration and "
        "range checks for the Collatz map family.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_io(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", default="text", choices=emit_mod.FORMATS)
        p.add_argument("--output", default=None, help="write to this path instead of stdout")

    p_trace = sub.add_parser("trace", help="iterate one map from a start value")
    p_trace.add_argument("--kind", required=True, choices=sequences.TRACE_KINDS)
    p_trace.add_argument("--start", required=True, type=int)
    p_trace.add_argument("--budget", type=int, default=verify.DEFAULT_BUDGET)
    p_trace.add_argument("--target", type=int, default=None,
                         help="stop value; defaults per kind")
    p_trace.add_argument("--param-a", type=int, default=None,
                         help="odd multiplier for kinds G and H")
    p_trace.add_argument("--param-b", type=int, default=None,
                         help="odd offset for kinds G and H")
    add_io(p_trace)

    p_verify = sub.add_parser("verify", help="run a range checker")
    p_verify.add_argument("--theorem", required=True, choices=sorted(verify.CHECKERS))
    p_verify.add_argument("--lo", required=True, type=int)
    p_verify.add_argument("--hi", required=True, type=int)
    p_verify.add_argument("--budget", type=int, default=verify.DEFAULT_BUDGET)
    p_verify.add_argument("--workers", type=int, default=1)
    p_verify.add_argument("--max-violations", type=int,
                          default=verify.DEFAULT_VIOLATION_CAP,
                          help="cap on listed counterexamples")
    add_io(p_verify)

    p_tree = sub.add_parser("tree", help="build the reverse candidate tree")
    p_tree.add_argument("--candidates", type=int, default=100,
                        help="how many candidates to enumerate")
    p_tree.add_argument("--depth", type=int, default=16,
                        help="breadth-first depth bound")
    add_io(p_tree)

    p_stats = sub.add_parser("stats", help="orbit-length table over a range")
    p_stats.add_argument("--lo", required=True, type=int)
    p_stats.add_argument("--hi", required=True, type=int)
    p_stats.add_argument("--budget", type=int, default=verify.DEFAULT_BUDGET)
    p_stats.add_argument("--workers", type=int, default=1)
    add_io(p_stats)

    p_oeis = sub.add_parser("oeis-check", help="compare a generator to a b-file")
    p_oeis.add_argument("--bfile", required=True, help="path to the b-file")
    p_oeis.add_argument("--generator", required=True, choices=sorted(oeis.GENERATORS))
    p_oeis.add_argument("--count", type=int, default=10_000)
    add_io(p_oeis)

    return parser


def parse_cli(argv: list[str]) -> RunConfig:
    """Parse and validate arguments; argparse exits with status 2 on misuse."""
    parser = _build_parser()
    ns = parser.parse_args(argv)

    if ns.format not in _VALID_FORMATS[ns.command]:
        parser.error(f"format {ns.format!r} is not valid for {ns.command}")

    workers = getattr(ns, "workers", 1)
    env_workers = os.environ.get("COLLATZ_LAB_WORKERS")
    if env_workers is not None:
        try:
            workers = int(env_workers)
        except ValueError:
            parser.error(f"COLLATZ_LAB_WORKERS must be an integer, got {env_workers!r}")
        if workers < 1:
            parser.error("COLLATZ_LAB_WORKERS must be >= 1")

    return RunConfig(
        command=ns.command,
        fmt=ns.format,
        output=ns.output,
        kind=getattr(ns, "kind", None),
        start=getattr(ns, "start", None),
        budget=getattr(ns, "budget", verify.DEFAULT_BUDGET),
        target=getattr(ns, "target", None),
        param_a=getattr(ns, "param_a", None),
        param_b=getattr(ns, "param_b", None),
        theorem=getattr(ns, "theorem", None),
        lo=getattr(ns, "lo", None),
        hi=getattr(ns, "hi", None),
        workers=workers,
        cap=getattr(ns, "max_violations", verify.DEFAULT_VIOLATION_CAP),
        candidates=getattr(ns, "candidates", None),
        depth=getattr(ns, "depth", None),
        bfile=getattr(ns, "bfile", None),
        generator=getattr(ns, "generator", None),
        count=getattr(ns, "count", None),
    )


def _compute(config: RunConfig):
    """Produce (result, exit_code) for a validated config."""
    if config.command == "trace":
        params = None
        if config.kind in ("G", "H"):
            if config.param_a is None or config.param_b is None:
                raise ConfigurationError(
                    f"kind {config.kind} requires --param-a and --param-b"
                )
            params = sequences.GParams(config.param_a, config.param_b)
        result = sequences.trace(
            config.kind, config.start, config.budget, config.target, params
        )
        return result, 0

    if config.command == "verify":
        report = verify.run_check(
            config.theorem,
            config.lo,
            config.hi,
            budget=config.budget,
            workers=config.workers,
            cap=config.cap,
        )
        failed = report.violation_count > 0 and not report.observational
        return report, 1 if failed else 0

    if config.command == "tree":
        return reverse_tree.build_tree(config.candidates, config.depth), 0

    if config.command == "stats":
        table = sequences.stopping_stats(
            config.lo, config.hi, config.budget, workers=config.workers
        )
        return table, 0

    if config.command == "oeis-check":
        try:
            with open(config.bfile, encoding="utf-8") as handle:
                content = handle.read()
        except OSError as exc:
            raise ConfigurationError(f"cannot read {config.bfile}: {exc}") from exc
        report = oeis.check_oeis(content, config.generator, config.count)
        return report, 1 if report.violation_count > 0 else 0

    raise ConfigurationError(f"unknown command {config.command!r}")


def run(config: RunConfig) -> int:
    """Execute a parsed configuration and write its result to the sink."""
    try:
        result, status = _compute(config)
    except (DomainError, ConfigurationError, BFileParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    if isinstance(result, verify.TheoremReport):
        print(
            f"{result.theorem_id}: checked {result.checked}, "
            f"violations {result.violation_count}, "
            f"budget-exhausted {len(result.budget_exhausted)} "
            f"[{result.elapsed:.3f}s]",
            file=sys.stderr,
        )

    try:
        if config.output is None:
            emit_mod.emit(result, config.fmt, sys.stdout)
        else:
            with open(config.output, "w", encoding="utf-8", newline="") as sink:
                emit_mod.emit(result, config.fmt, sink)
    except ConfigurationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: cannot write output: {exc}", file=sys.stderr)
        return 2
    return status


def main(argv: list[str] | None = None) -> int:
    try:
        config = parse_cli(sys.argv[1:] if argv is None else argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 0 if code is None else 2
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
