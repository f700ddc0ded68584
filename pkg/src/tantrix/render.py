"""Arrangement rendering: SVG for documentation, ASCII for terminals.

Pointy-top hexes; the y axis points down in screen space, so angles are
negated relative to the lattice convention. One polygon per placed tile,
one path for the board outline, nothing else, which keeps glyph counting
in tests trivial.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .hexboard import Board, EDGE1_DIR, opposite
from .tiles import Color, TileSet
from .validate import Arrangement

STRAND_STROKE = {Color.RED: "#c43", Color.BLUE: "#37b", Color.YELLOW: "#eb3"}
TILE_FILL = "#222"


@dataclass(frozen=True)
class RenderOptions:
    format: str = "svg"              # "svg" or "ascii"
    hex_size: float = 24.0
    show_numbers: bool = False
    highlight_designated: bool = True

    def __post_init__(self):
        if self.hex_size <= 0:
            raise ValueError("hex size must be positive")
        if self.format not in ("svg", "ascii"):
            raise ValueError(f"unknown format {self.format!r}")


def _center(coord, size: float) -> tuple[float, float]:
    x = size * math.sqrt(3) * (coord.q + coord.r / 2)
    y = size * 1.5 * coord.r
    return x, y


def _edge_angle(edge: int) -> float:
    """Screen angle (radians, y down) of the outward normal of an edge."""
    d = (EDGE1_DIR + edge - 1) % 6
    return -math.radians(60 * d)


def _edge_midpoint(cx, cy, edge, size):
    a = _edge_angle(edge)
    r = size * math.sqrt(3) / 2
    return cx + r * math.cos(a), cy + r * math.sin(a)


def _hex_corner(cx, cy, edge, side, size):
    a = _edge_angle(edge) + (math.pi / 6 if side else -math.pi / 6)
    return cx + size * math.cos(a), cy + size * math.sin(a)


def _fmt(v: float) -> str:
    return f"{v:.2f}"


def _strand_path(cx, cy, e1, e2, size) -> str:
    x1, y1 = _edge_midpoint(cx, cy, e1, size)
    x2, y2 = _edge_midpoint(cx, cy, e2, size)
    gap = min((e1 - e2) % 6, (e2 - e1) % 6)
    if gap == 3:
        return (f"M {_fmt(x1)} {_fmt(y1)} L {_fmt(x2)} {_fmt(y2)}")
    pull = 0.72 if gap == 1 else 0.4
    mx = cx + ((x1 - cx) + (x2 - cx)) * pull
    my = cy + ((y1 - cy) + (y2 - cy)) * pull
    return (f"M {_fmt(x1)} {_fmt(y1)} Q {_fmt(mx)} {_fmt(my)} "
            f"{_fmt(x2)} {_fmt(y2)}")


def _board_outline(board: Board, size: float) -> str:
    """One path tracing every board-exterior edge."""
    segments = {}
    for j, edge in board.boundary_edges():
        cx, cy = _center(board.coord(j), size)
        a = _hex_corner(cx, cy, edge, False, size)
        b = _hex_corner(cx, cy, edge, True, size)
        key_a = (round(a[0], 1), round(a[1], 1))
        key_b = (round(b[0], 1), round(b[1], 1))
        segments[key_a] = (key_b, a, b)
    if not segments:
        return ""
    parts = []
    while segments:
        start = min(segments)
        cur = start
        _, a, _ = segments[cur]
        parts.append(f"M {_fmt(a[0])} {_fmt(a[1])}")
        while cur in segments:
            nxt, _, b = segments.pop(cur)
            parts.append(f"L {_fmt(b[0])} {_fmt(b[1])}")
            cur = nxt
        parts.append("Z")
    return " ".join(parts)


def render_svg(
    arrangement: Arrangement, tileset: TileSet, options: RenderOptions = RenderOptions()
) -> str:
    board = arrangement.board
    size = options.hex_size
    designated = tileset.designated_color(arrangement.n) \
        if arrangement.n >= 3 else None

    centers = [_center(c, size) for c in board.places]
    xs = [c[0] for c in centers]
    ys = [c[1] for c in centers]
    margin = 2 * size
    x0, y0 = min(xs) - margin, min(ys) - margin
    w, h = max(xs) - min(xs) + 2 * margin, max(ys) - min(ys) + 2 * margin

    out = []
    out.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="{_fmt(x0)} {_fmt(y0)} {_fmt(w)} {_fmt(h)}">'
    )
    out.append(f'<path class="board" d="{_board_outline(board, size)}" '
               f'fill="none" stroke="#999" stroke-width="1.5"/>')
    for j in sorted(arrangement.placements):
        i, k = arrangement.placements[j]
        cx, cy = _center(board.coord(j), size)
        corners = " ".join(
            f"{_fmt(x)},{_fmt(y)}"
            for edge in range(1, 7)
            for x, y in (_hex_corner(cx, cy, edge, False, size),)
        )
        out.append(f'<polygon class="tile" points="{corners}" '
                   f'fill="{TILE_FILL}" stroke="#000" stroke-width="1"/>')
        tile = tileset.tile(i)
        for strand in sorted(tile.strands, key=lambda s: s.color.value):
            e1 = (strand.edges[0] - k) % 6 + 1
            e2 = (strand.edges[1] - k) % 6 + 1
            wide = options.highlight_designated and strand.color is designated
            out.append(
                f'<path d="{_strand_path(cx, cy, e1, e2, size)}" fill="none" '
                f'stroke="{STRAND_STROKE[strand.color]}" '
                f'stroke-width="{4.5 if wide else 2.5}" '
                f'stroke-linecap="round"/>'
            )
        if options.show_numbers:
            out.append(f'<text x="{_fmt(cx)}" y="{_fmt(cy)}" fill="#fff" '
                       f'font-size="{_fmt(size * 0.45)}" text-anchor="middle">'
                       f"{i}</text>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_ascii(arrangement: Arrangement, tileset: TileSet,
                 options: RenderOptions = RenderOptions(format="ascii")) -> str:
    """Tiles as `<number><orientation letter>`, empty board places as dots,
    on a doubled-coordinate grid."""
    board = arrangement.board
    cells: dict[tuple[int, int], str] = {}
    for j in range(1, board.size + 1):
        c = board.coord(j)
        if j in arrangement.placements:
            i, k = arrangement.placements[j]
            text = f"{i}{'abcdef'[k - 1]}"
        else:
            text = "."
        cells[(c.r, 2 * c.q + c.r)] = text
    rmin = min(r for r, _ in cells)
    rmax = max(r for r, _ in cells)
    cmin = min(c for _, c in cells)
    cmax = max(c for _, c in cells)
    lines = []
    for r in range(rmin, rmax + 1):
        line = [" "] * (2 * (cmax - cmin) + 4)
        for (rr, col), text in cells.items():
            if rr == r:
                x = 2 * (col - cmin)
                line[x:x + len(text)] = list(text)
        lines.append("".join(line).rstrip())
    return "\n".join(lines) + "\n"
