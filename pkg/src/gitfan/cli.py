"""Command line entry point: ``gitfan {fan,verify,plot} ...``.

Exit codes: 0 success, 2 invalid input, 3 verification failure, 4 I/O error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from typing import Optional, Sequence

from .actions import ActionSpec, completion_witnesses, git_fan, witnesses
from .arrangement import class_histogram
from .document import FanDocument
from .errors import GitFanError, InvalidSpec, UnsupportedPlot
from .oracle import VerificationReport, random_configs, verify_fan
from .plot import slice_fan

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_VERIFY = 3
EXIT_IO = 4


def _spec(args) -> ActionSpec:
    group = args.group_pos or args.group
    if group is None:
        raise InvalidSpec("a group is required (so or sl)")
    if args.group_pos and args.group and args.group_pos.lower() != args.group.lower():
        raise InvalidSpec("conflicting groups given")
    if args.n is None:
        raise InvalidSpec("--n is required")
    if group.lower() == "so":
        if args.m2 not in (None, 0):
            raise InvalidSpec("SO(V): V* is identified with V, so m2 must be 0")
        m = args.m if args.m is not None else args.m1
        if m is None:
            raise InvalidSpec("--m is required for so")
        return ActionSpec.so(args.n, m)
    if group.lower() == "sl":
        if args.m is not None and args.m1 is None:
            m1 = args.m
        else:
            m1 = args.m1 or 0
        return ActionSpec.sl(args.n, m1, args.m2 or 0)
    raise InvalidSpec(f"unknown group {group!r}")


def write_atomic(path: str, text: str) -> None:
    """Write via a temporary file in the target directory and rename."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(prefix=".gitfan-", dir=directory)
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _emit(args, text: str) -> None:
    if args.out:
        write_atomic(args.out, text)
    else:
        sys.stdout.write(text)


def cmd_fan(args) -> int:
    spec = _spec(args)
    fan = git_fan(spec, threads=args.threads)
    if args.format == "json":
        _emit(args, FanDocument(spec, fan).dumps())
    else:
        _emit(args, class_histogram(fan).line() + "\n")
    return EXIT_OK


def _report_dict(report: VerificationReport) -> dict:
    def vec(v):
        return [str(x) for x in v]

    return {
        "spec": {"group": report.spec.group, "n": report.spec.n,
                 "m1": report.spec.m1, "m2": report.spec.m2},
        "witnesses": report.witness_count,
        "random_witnesses": report.random_count,
        "seed": report.seed,
        "orbit_cones": len(report.orbit_cones),
        "passed": report.passed,
        "faces": [
            {"dim": r.face.dim, "rays": [vec(x) for x in r.face.rays],
             "point": vec(r.point), "status": r.status,
             "git_cone_rays": None if r.tau is None else [vec(x) for x in r.tau.rays],
             "detail": r.detail}
            for r in report.results
        ],
    }


def _report_text(report: VerificationReport) -> str:
    lines = []
    for r in report.results:
        rays = " ".join("(" + ",".join(map(str, x)) + ")" for x in r.face.rays)
        tau = "-" if r.tau is None else " ".join("(" + ",".join(map(str, x)) + ")" for x in r.tau.rays)
        line = f"{r.status:12s} dim {r.face.dim}  face {rays}  git-cone {tau}"
        if r.detail:
            line += f"  [{r.detail}]"
        lines.append(line)
    ok = sum(1 for r in report.results if r.passed)
    lines.append(f"verified: {ok}/{len(report.results)} faces pass "
                 f"({report.witness_count} witnesses, {report.random_count} random, "
                 f"{len(report.orbit_cones)} distinct orbit cones)")
    return "\n".join(lines) + "\n"


def cmd_verify(args) -> int:
    spec = _spec(args)
    fan = git_fan(spec, threads=args.threads)
    chosen = []
    if args.witnesses in ("theorem", "complete"):
        chosen = witnesses(spec)
    if args.witnesses == "complete":
        chosen = chosen + completion_witnesses(spec)
    count = args.random_witnesses
    extra = random_configs(spec, count, args.seed) if count else []
    report = verify_fan(spec, fan, chosen, extra, args.seed if count else None)
    if args.format == "json":
        _emit(args, json.dumps(_report_dict(report), indent=2) + "\n")
    else:
        _emit(args, _report_text(report))
    return EXIT_OK if report.passed else EXIT_VERIFY


def cmd_plot(args) -> int:
    spec = _spec(args)
    plot = slice_fan(git_fan(spec, threads=args.threads))
    svg = plot.svg()
    if args.out:
        write_atomic(args.out, svg)
        c = plot.counts
        print(f"regions: {c['regions']}, edges: {c['edges']}, vertices: {c['vertices']}")
    else:
        sys.stdout.write(svg)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("group_pos", nargs="?", metavar="GROUP", help="so or sl")
    common.add_argument("--group", type=str.lower, choices=("so", "sl"))
    common.add_argument("--n", type=int, help="dimension of V")
    common.add_argument("--m", type=int, help="number of vectors (SO, or SL without covectors)")
    common.add_argument("--m1", type=int, help="number of vectors")
    common.add_argument("--m2", type=int, help="number of covectors")
    common.add_argument("--out", help="output file (default: standard output)")
    common.add_argument("--threads", type=int, default=1, help="worker threads for chamber enumeration")

    parser = argparse.ArgumentParser(prog="gitfan", description="GIT-fans of diagonal SO(V) and SL(V) actions.")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("fan", parents=[common], help="compute the fan")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_fan)

    p = sub.add_parser("verify", parents=[common], help="check the fan against orbit cones")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--witnesses", choices=("theorem", "complete", "none"), default="complete",
                   help="theorem: wall witnesses plus one generic; complete: also both sides of "
                        "every wall and coordinate faces (default); none: random only")
    p.add_argument("--random-witnesses", type=int, default=0, metavar="N",
                   help="number of extra seeded random configurations")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("plot", parents=[common], help="SVG slice of a fan with 3-dimensional support")
    p.set_defaults(func=cmd_plot)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code else EXIT_OK
    if args.threads < 1:
        print("error: --threads must be at least 1", file=sys.stderr)
        return EXIT_INVALID
    if getattr(args, "random_witnesses", 0) < 0:
        print("error: --random-witnesses must be nonnegative", file=sys.stderr)
        return EXIT_INVALID
    try:
        return args.func(args)
    except (InvalidSpec, UnsupportedPlot) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except GitFanError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
