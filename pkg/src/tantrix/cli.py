"""Command-line entry points.

Subcommands: solve, validate, render, export, oracle. Exit codes follow
the classic sysexits split: 0 success/solved, 2 budget exhausted,
3 infeasible, 64 usage error, 65 unreadable input data, 1 for a
validation verdict of "not a solution".
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .driver import DriveConfig, solve_tantrix
from .hexboard import Board, BoardKind, IllegalSize, make_board
from .lpio import FORMATS, export_program
from .model import ModelOptions, build_model
from .oracle import InstanceTooLarge, enumerate_all, golden_lines
from .render import RenderOptions, render_ascii, render_svg
from .solver import SolverConfig
from .tiles import (
    Color,
    FactViolation,
    ParseError,
    TileSet,
    default_tileset,
    load_tileset,
)
from .validate import Arrangement, report

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_EXHAUSTED = 2
EXIT_INFEASIBLE = 3
EXIT_USAGE = 64
EXIT_DATA = 65

TILESET_ENV = "TANTRIX_TILESET"


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _load_tiles(path: str | None) -> TileSet:
    path = path or os.environ.get(TILESET_ENV)
    if path is None:
        return default_tileset()
    return load_tileset(Path(path).read_text())


def _parse_board(text: str) -> Board:
    try:
        kind_text, size_text = text.split(":")
        return make_board(BoardKind.parse(kind_text), int(size_text))
    except (ValueError, IllegalSize) as exc:
        raise _UsageError(f"bad board {text!r}: {exc}") from exc


def _parse_cuts(text: str) -> frozenset[int]:
    if text in ("", "none"):
        return frozenset()
    try:
        cuts = frozenset(int(t) for t in text.split(","))
    except ValueError as exc:
        raise _UsageError(f"bad cut list {text!r}") from exc
    if not cuts <= {3, 4, 5}:
        raise _UsageError("cut lengths must be among 3,4,5")
    return cuts


def solution_to_json(arrangement: Arrangement, designated: Color) -> str:
    doc = {
        "n": arrangement.n,
        "board": {
            "kind": arrangement.board.kind.value,
            "size": arrangement.board.size,
        },
        "designated_color": designated.value,
        "placements": [
            {"place": j, "tile": i, "orientation": k}
            for j, (i, k) in sorted(arrangement.placements.items())
        ],
    }
    return json.dumps(doc, indent=2) + "\n"


def solution_from_json(text: str, tileset: TileSet) -> Arrangement:
    try:
        doc = json.loads(text)
        board = make_board(BoardKind.parse(doc["board"]["kind"]),
                           int(doc["board"]["size"]))
        placements = {
            int(p["place"]): (int(p["tile"]), int(p["orientation"]))
            for p in doc["placements"]
        }
        n = int(doc["n"])
    except (KeyError, TypeError, ValueError, IllegalSize) as exc:
        raise ParseError(f"bad solution file: {exc}") from exc
    for j, (i, k) in placements.items():
        if not (1 <= i <= 10 and 1 <= k <= 6 and 1 <= j <= board.size):
            raise ParseError(f"bad placement {j}: ({i},{k})")
    return Arrangement(n, board, placements)


def _build_common(sub: argparse.ArgumentParser, board_required=True):
    sub.add_argument("-n", "--challenge", type=int, required=True)
    sub.add_argument("--board", required=board_required,
                     help="board kind and size, e.g. A:19 or B:12")
    sub.add_argument("--tileset", help=f"tileset file (default ${TILESET_ENV} "
                     "or the packaged set)")


def _add_model_flags(sub: argparse.ArgumentParser):
    sub.add_argument("--c6", choices=["none", "a", "b", "c"], default="b")
    sub.add_argument("--cuts", default="3,4,5",
                     help="comma list from 3,4,5 or 'none'")
    sub.add_argument("--objective", choices=["virtual", "weighted"],
                     default="weighted")


def make_parser() -> _Parser:
    parser = _Parser(prog="tantrix", description="Tantrix Discovery solver: "
                     "compiles the puzzle to a 0-1 integer program")
    subs = parser.add_subparsers(dest="command", required=True)

    sp = subs.add_parser("solve", help="run the full solve loop")
    _build_common(sp)
    _add_model_flags(sp)
    sp.add_argument("-o", "--output", help="write solution JSON here")
    sp.add_argument("--render", help="also write an SVG next to the solution")
    sp.add_argument("--export", nargs=2, metavar=("FMT", "PATH"),
                    help="write the model in lp or mps form")
    sp.add_argument("--no-solve", action="store_true",
                    help="stop after building/exporting the model")
    sp.add_argument("--max-iter", type=int, default=120)
    sp.add_argument("--node-budget", type=int, default=10_000_000)
    sp.add_argument("--time-budget", type=float)
    sp.add_argument("--quiet", action="store_true",
                    help="suppress progress records")

    vp = subs.add_parser("validate", help="check a solution file")
    vp.add_argument("solution")
    vp.add_argument("--tileset")

    rp = subs.add_parser("render", help="draw a solution file")
    rp.add_argument("solution")
    rp.add_argument("-o", "--output", required=True)
    rp.add_argument("--format", choices=["svg", "ascii"], default="svg")
    rp.add_argument("--numbers", action="store_true")
    rp.add_argument("--hex-size", type=float, default=24.0)
    rp.add_argument("--tileset")

    ep = subs.add_parser("export", help="build a model and write lp/mps text")
    _build_common(ep)
    _add_model_flags(ep)
    ep.add_argument("--format", choices=list(FORMATS), default="lp")
    ep.add_argument("-o", "--output", required=True)

    op = subs.add_parser("oracle", help="exhaustively enumerate tiny instances")
    _build_common(op)
    op.add_argument("-o", "--output", help="golden file (default stdout)")
    return parser


def _cmd_solve(args) -> int:
    tileset = _load_tiles(args.tileset)
    board = _parse_board(args.board)
    n = args.challenge
    if n < 3:
        raise _UsageError("challenge numbers start at 3")
    if board.size <= n:
        raise _UsageError(
            f"board must be larger than the challenge ({board.size} <= {n})")

    if args.export:
        fmt, path = args.export
        if fmt not in FORMATS:
            raise _UsageError(f"unknown export format {fmt!r}")
        options = ModelOptions(
            c6=None if args.c6 == "none" else args.c6,
            cuts=_parse_cuts(args.cuts),
            objective=args.objective,
        )
        program = build_model(n, board, tileset, options)
        Path(path).write_text(export_program(program, fmt))
    if args.no_solve:
        return EXIT_OK

    config = DriveConfig(
        c6=None if args.c6 == "none" else args.c6,
        cuts=_parse_cuts(args.cuts),
        objective=args.objective,
        max_iterations=args.max_iter,
        solver=SolverConfig(node_budget=args.node_budget,
                            time_budget=args.time_budget),
    )
    result = solve_tantrix(n, board, tileset, config)
    if not args.quiet:
        for record in result.progress:
            print(json.dumps(record))
    if result.status == "solved":
        designated = tileset.designated_color(n)
        text = solution_to_json(result.arrangement, designated)
        if args.output:
            Path(args.output).write_text(text)
        else:
            sys.stdout.write(text)
        if args.render:
            Path(args.render).write_text(
                render_svg(result.arrangement, tileset))
        return EXIT_OK
    print(f"status: {result.status}", file=sys.stderr)
    return EXIT_EXHAUSTED if result.status == "exhausted" else EXIT_INFEASIBLE


def _cmd_validate(args) -> int:
    tileset = _load_tiles(args.tileset)
    arrangement = solution_from_json(Path(args.solution).read_text(), tileset)
    rep = report(arrangement, tileset)
    print(json.dumps(rep.to_json_dict(arrangement.board), indent=2))
    return EXIT_OK if rep.is_tantrix_solution else EXIT_INVALID


def _cmd_render(args) -> int:
    tileset = _load_tiles(args.tileset)
    arrangement = solution_from_json(Path(args.solution).read_text(), tileset)
    options = RenderOptions(format=args.format, hex_size=args.hex_size,
                            show_numbers=args.numbers)
    if args.format == "svg":
        text = render_svg(arrangement, tileset, options)
    else:
        text = render_ascii(arrangement, tileset, options)
    Path(args.output).write_text(text)
    return EXIT_OK


def _cmd_export(args) -> int:
    tileset = _load_tiles(args.tileset)
    board = _parse_board(args.board)
    if args.challenge < 3:
        raise _UsageError("challenge numbers start at 3")
    options = ModelOptions(
        c6=None if args.c6 == "none" else args.c6,
        cuts=_parse_cuts(args.cuts),
        objective=args.objective,
    )
    program = build_model(args.challenge, board, tileset, options)
    Path(args.output).write_text(export_program(program, args.format))
    return EXIT_OK


def _cmd_oracle(args) -> int:
    tileset = _load_tiles(args.tileset)
    board = _parse_board(args.board)
    try:
        solutions = enumerate_all(args.challenge, board, tileset)
    except InstanceTooLarge as exc:
        raise _UsageError(str(exc)) from exc
    text = golden_lines(solutions)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


_COMMANDS = {
    "solve": _cmd_solve,
    "validate": _cmd_validate,
    "render": _cmd_render,
    "export": _cmd_export,
    "oracle": _cmd_oracle,
}


def main(argv=None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return _COMMANDS[args.command](args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ParseError, FactViolation, json.JSONDecodeError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except FileNotFoundError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
