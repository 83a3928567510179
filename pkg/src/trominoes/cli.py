"""Command-line interface: ``trominoes <subcommand> ...``.

Exit status is 0 on success (or a tileable verdict), 1 when the answer is
negative (untileable, no tiling found, a failed check) and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .analytics import bound_report, f_harness, gf_series, named_gfs
from .board import BoardError, DeficientBoard, Rect, Tiling, validate_tiling
from .characterize import BadShape, UnsupportedShape, bad_pairs_for, bad_pairs_Nx4_general, decide
from .construct import Untileable, construct_tiling, decompose
from .counting import (
    WidthCapExceeded,
    count_domino,
    count_tromino,
    count_tromino_plus_one_domino,
    enumerate_tilings,
)
from .render import render
from .solver import DEFAULT_CAP, CapExceeded, solve_exact

OK, NEGATIVE, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def parse_missing(text: str | None) -> list[tuple[int, int]]:
    """``"r1,c1,r2,c2"`` -> ``[(r1, c1), (r2, c2)]``."""
    if not text:
        return []
    try:
        nums = [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise UsageError(f"--missing expects integers, got {text!r}") from None
    if len(nums) % 2:
        raise UsageError("--missing needs an even number of integers (row,col pairs)")
    return list(zip(nums[::2], nums[1::2]))


def _read_json(source: str) -> dict:
    text = sys.stdin.read() if source == "-" else Path(source).read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise UsageError(f"invalid JSON input: {e}") from None


def load_board(args) -> DeficientBoard:
    inline = args.rows is not None or args.cols is not None or args.missing
    if args.input and inline:
        raise UsageError("give either --input or --rows/--cols/--missing, not both")
    if args.input:
        doc = _read_json(args.input)
        return DeficientBoard.from_dict(doc.get("board", doc))
    if args.rows is None or args.cols is None:
        raise UsageError("a board needs --rows and --cols (or --input)")
    return DeficientBoard.of(args.rows, args.cols, parse_missing(args.missing))


def _emit(doc) -> None:
    print(json.dumps(doc, indent=2, default=str))


def _board_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--rows", type=int, help="number of rows m")
    p.add_argument("--cols", type=int, help="number of columns n")
    p.add_argument("--missing", help="missing cells as a flat list r,c[,r,c]")
    p.add_argument("--input", help="board JSON file, or - for stdin")


def _positive(text: str) -> int:
    v = int(text)
    if v <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


# --- subcommands ----------------------------------------------------------


def cmd_decide(args) -> int:
    b = load_board(args)
    v = decide(b)
    _emit(v.to_dict())
    return OK if v.tileable else NEGATIVE


def _output_tiling(t: Tiling, fmt: str, extra: dict | None = None) -> None:
    if fmt == "json":
        doc = t.to_dict()
        if extra:
            doc.update(extra)
        _emit(doc)
    else:
        sys.stdout.write(render(t, fmt))


def cmd_tile(args) -> int:
    b = load_board(args)
    try:
        t = construct_tiling(b)
    except Untileable as e:
        _emit(e.verdict.to_dict())
        return NEGATIVE
    extra = {"steps": [s.to_dict() for s in decompose(b)]} if args.steps else None
    _output_tiling(t, args.format, extra)
    return OK


def cmd_count(args) -> int:
    b = load_board(args)
    if args.mix == "tromino":
        value = count_tromino(b)
    elif b.missing:
        raise UsageError(f"--mix {args.mix} counts a full rectangle; drop --missing")
    elif args.mix == "domino":
        value = count_domino(b.rect)
    else:
        value = count_tromino_plus_one_domino(b.rect)
    print(value)
    return OK


def cmd_enumerate(args) -> int:
    b = load_board(args)
    ts = enumerate_tilings(b, limit=args.limit, dominoes=args.dominoes, cap=args.cap)
    _emit([t.to_dict() for t in ts])
    return OK


def cmd_gf(args) -> int:
    gfs = named_gfs()
    if args.name == "F-harness":
        report = f_harness(args.terms - 1)
        _emit(report.to_dict())
        return OK
    series = gf_series(gfs[args.name], args.terms - 1)
    print(" ".join(str(x) for x in series))
    return OK


def cmd_bound(args) -> int:
    rep = bound_report(args.m, args.n)
    _emit(rep)
    return OK if rep["holds"] else NEGATIVE


def cmd_bad_pairs(args) -> int:
    if args.all_pairs:
        m, n = args.m, args.n
        if n != 4:
            raise UsageError("--all-pairs is defined for m x 4 boards only")
        name, pairs = "NX4_GENERAL", bad_pairs_Nx4_general(m)
    else:
        name, pairs = bad_pairs_for(args.m, args.n)
    _emit({"rows": args.m, "cols": args.n, "table": name, "pairs": sorted([list(map(list, p.sorted)) for p in pairs])})
    return OK


def cmd_oracle(args) -> int:
    b = load_board(args)
    t = solve_exact(b, dominoes=args.dominoes, cap=args.cap)
    if t is None:
        _emit({"tileable": False})
        return NEGATIVE
    _output_tiling(t, args.format)
    return OK


def cmd_verify(args) -> int:
    from .verify import run_all

    rep = run_all(quick=args.quick)
    _emit(rep.to_dict())
    return OK if rep.ok else NEGATIVE


def cmd_render(args) -> int:
    doc = _read_json(args.input)
    t = Tiling.from_dict(doc)
    report = validate_tiling(t)
    if not report:
        print(f"invalid tiling: {report.error} at {tuple(report.cell)}", file=sys.stderr)
        return NEGATIVE
    sys.stdout.write(render(t, args.format))
    return OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="trominoes", description="Right-tromino tilings of deficient rectangles.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decide", help="decide tileability without searching")
    _board_args(p)
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("tile", help="construct an explicit tiling")
    _board_args(p)
    p.add_argument("--format", choices=("json", "ascii", "svg"), default="json")
    p.add_argument("--steps", action="store_true", help="include the decomposition in JSON output")
    p.set_defaults(func=cmd_tile)

    p = sub.add_parser("count", help="exact number of tilings")
    _board_args(p)
    p.add_argument("--mix", choices=("tromino", "tromino+1domino", "domino"), default="tromino")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("enumerate", help="list every tiling of a small board")
    _board_args(p)
    p.add_argument("--limit", type=_positive)
    p.add_argument("--dominoes", type=int, choices=(0, 1), default=0)
    p.add_argument("--cap", type=_positive, default=48, help="largest board area to search")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("gf", help="expand a generating function")
    p.add_argument("--name", choices=sorted(named_gfs()) + ["F-harness"], required=True)
    p.add_argument("--terms", type=_positive, default=7)
    p.set_defaults(func=cmd_gf)

    p = sub.add_parser("bound", help="upper bound on one-domino tilings against the exact count")
    p.add_argument("m", type=_positive)
    p.add_argument("n", type=_positive)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("bad-pairs", help="the bad domino positions of an m x n rectangle")
    p.add_argument("m", type=_positive)
    p.add_argument("n", type=_positive)
    p.add_argument("--all-pairs", action="store_true", help="every bad cell pair of an m x 4 board")
    p.set_defaults(func=cmd_bad_pairs)

    p = sub.add_parser("oracle", help="exhaustive exact-cover search")
    p.add_argument("action", choices=("solve",))
    _board_args(p)
    p.add_argument("--cap", type=_positive, default=DEFAULT_CAP, help="largest board area to search")
    p.add_argument("--dominoes", type=int, choices=(0, 1), default=0)
    p.add_argument("--format", choices=("json", "ascii", "svg"), default="json")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", help="run every cross-check and print a JSON report")
    p.add_argument("--quick", action="store_true", help="smaller scopes")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", help="draw a tiling JSON document")
    p.add_argument("--input", required=True, help="tiling JSON file, or - for stdin")
    p.add_argument("--format", choices=("ascii", "svg"), default="ascii")
    p.set_defaults(func=cmd_render)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, BoardError, BadShape, UnsupportedShape, WidthCapExceeded, CapExceeded, ValueError) as e:
        print(f"trominoes: error: {e}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
