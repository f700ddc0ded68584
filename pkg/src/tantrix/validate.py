"""Rule-level checking of arrangements, independent of any solver output.

Everything here works on an Arrangement (board + placements) and the tile
geometry alone. The report is the arbiter of what counts as a cleared
challenge: one loop of the designated color through every placed tile,
matching touching colors, no enclosed empty region, one connected block.
Roundness is evaluated and reported but does not gate validity, since the
official record rule concerns human play only.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .hexboard import AxialCoord, Board, DIRECTIONS, direction_edge, edge_direction, opposite
from .tiles import Color, TileSet, challenge_tile


class MultipleTilesOnPlace(ValueError):
    """Raw assignment puts two tiles on one place."""


@dataclass(frozen=True)
class Arrangement:
    n: int
    board: Board
    placements: dict[int, tuple[int, int]]  # place -> (tile, orientation)

    def color_at(self, tileset: TileSet, j: int, edge: int) -> Color | None:
        placed = self.placements.get(j)
        if placed is None:
            return None
        i, k = placed
        return tileset.tile(i).oriented_color_at(k, edge)


def decode(
    assignment: Mapping[tuple[int, int, int], int],
    board: Board,
    tileset: TileSet,
    n: int,
) -> Arrangement:
    """Arrangement from x-values keyed (tile, place, orientation)."""
    placements: dict[int, tuple[int, int]] = {}
    for (i, j, k), value in sorted(assignment.items()):
        if value:
            if j in placements:
                raise MultipleTilesOnPlace(f"place {j} assigned twice")
            placements[j] = (i, k)
    return Arrangement(n, board, placements)


def trace_designated(
    arrangement: Arrangement, tileset: TileSet, color: Color
) -> tuple[list[list[int]], int]:
    """Partition the strands of `color` into closed loops and open paths.

    Returns (loops, open_end_count) where each loop is the cyclic list of
    places it passes through and open ends are strand endpoints facing an
    empty place or the board exterior. Endpoints facing a placed tile whose
    touching strand has a different color end their path without counting
    as open (that situation is a color-matching failure instead).
    """
    board = arrangement.board
    strand_edges: dict[int, tuple[int, int]] = {}
    for j, (i, k) in arrangement.placements.items():
        strand_edges[j] = tileset.tile(i).oriented_strand_edges(color, k)

    def step(j: int, edge: int):
        """Cross edge `edge` of place j; return (j2, entry_edge) or None."""
        j2 = board.adjacent(j, edge)
        if j2 == 0 or j2 not in arrangement.placements:
            return None
        back = opposite(edge)
        if arrangement.color_at(tileset, j2, back) is not color:
            return None
        return j2, back

    loops: list[list[int]] = []
    open_ends = 0
    visited: set[int] = set()
    for start in sorted(strand_edges):
        if start in visited:
            continue
        e1, e2 = strand_edges[start]
        # walk forward out of e2
        path = [start]
        visited.add(start)
        j, out_edge = start, e2
        closed = False
        while True:
            nxt = step(j, out_edge)
            if nxt is None:
                break
            j2, entry = nxt
            if j2 == start and entry in strand_edges[start]:
                closed = True
                break
            a, b = strand_edges[j2]
            path.append(j2)
            visited.add(j2)
            j, out_edge = j2, (b if entry == a else a)
        if closed:
            loops.append(path)
            continue
        # open path: count the forward end, then walk backward out of e1
        fwd_blocked_by_tile = board.adjacent(j, out_edge) in arrangement.placements \
            and board.adjacent(j, out_edge) != 0
        if not fwd_blocked_by_tile:
            open_ends += 1
        j, out_edge = start, e1
        while True:
            nxt = step(j, out_edge)
            if nxt is None:
                break
            j2, entry = nxt
            a, b = strand_edges[j2]
            path.insert(0, j2)
            visited.add(j2)
            j, out_edge = j2, (b if entry == a else a)
        if not (board.adjacent(j, out_edge) in arrangement.placements
                and board.adjacent(j, out_edge) != 0):
            open_ends += 1
    return loops, open_ends


def color_matching_ok(arrangement: Arrangement, tileset: TileSet) -> bool:
    """True iff every edge shared by two placed tiles shows one color."""
    for j, edge, j2, edge2 in arrangement.board.edges():
        c1 = arrangement.color_at(tileset, j, edge)
        c2 = arrangement.color_at(tileset, j2, edge2)
        if c1 is not None and c2 is not None and c1 is not c2:
            return False
    return True


def find_holes(arrangement: Arrangement) -> list[set[AxialCoord]]:
    """Empty lattice regions not connected to the unbounded outside.

    Works on the infinite lattice, so enclosed cells beyond the board edge
    count too. Each hole is returned as a set of axial coordinates.
    """
    occupied = {arrangement.board.coord(j) for j in arrangement.placements}
    if not occupied:
        return []
    qs = [c.q for c in occupied]
    rs = [c.r for c in occupied]
    qlo, qhi = min(qs) - 1, max(qs) + 1
    rlo, rhi = min(rs) - 1, max(rs) + 1

    def inside(c: AxialCoord) -> bool:
        return qlo <= c.q <= qhi and rlo <= c.r <= rhi

    outside: set[AxialCoord] = set()
    stack = [
        AxialCoord(q, r)
        for q in range(qlo, qhi + 1)
        for r in range(rlo, rhi + 1)
        if (q in (qlo, qhi) or r in (rlo, rhi)) and AxialCoord(q, r) not in occupied
    ]
    outside.update(stack)
    while stack:
        c = stack.pop()
        for d in range(6):
            nb = c.neighbor(d)
            if inside(nb) and nb not in occupied and nb not in outside:
                outside.add(nb)
                stack.append(nb)

    enclosed = {
        AxialCoord(q, r)
        for q in range(qlo, qhi + 1)
        for r in range(rlo, rhi + 1)
        if AxialCoord(q, r) not in occupied and AxialCoord(q, r) not in outside
    }
    holes: list[set[AxialCoord]] = []
    seen: set[AxialCoord] = set()
    for cell in sorted(enclosed):
        if cell in seen:
            continue
        comp = {cell}
        stack = [cell]
        seen.add(cell)
        while stack:
            c = stack.pop()
            for d in range(6):
                nb = c.neighbor(d)
                if nb in enclosed and nb not in seen:
                    seen.add(nb)
                    comp.add(nb)
                    stack.append(nb)
        holes.append(comp)
    return holes


def check_connected(arrangement: Arrangement) -> bool:
    """True iff placed tiles form one edge-connected block."""
    places = set(arrangement.placements)
    if len(places) <= 1:
        return True
    board = arrangement.board
    start = min(places)
    seen = {start}
    stack = [start]
    while stack:
        j = stack.pop()
        for edge in range(1, 7):
            j2 = board.adjacent(j, edge)
            if j2 in places and j2 not in seen:
                seen.add(j2)
                stack.append(j2)
    return seen == places


# Row keys of the three lattice axes for an axial coordinate: constant-r rows
# run west-east, constant-q rows run along the northwest-southeast axis,
# constant-(q+r) rows along the northeast-southwest axis.
_AXIS_KEYS = (
    lambda c: c.r,
    lambda c: c.q,
    lambda c: c.q + c.r,
)


def roundness_official(arrangement: Arrangement, row_basis: str = "occupied") -> bool:
    """The official record shape rule, in exact rational arithmetic.

    Take the axis whose fullest row holds x tiles. Along each of the other
    two axes, strictly more than 75% of the rows must hold strictly more
    than 30% of x tiles. `row_basis` selects what counts as "the rows" of
    an axis: rows that contain a tile ("occupied", default) or every row in
    the occupied span ("span").
    """
    if row_basis not in ("occupied", "span"):
        raise ValueError("row_basis must be 'occupied' or 'span'")
    coords = [arrangement.board.coord(j) for j in arrangement.placements]
    if not coords:
        return False
    counts = []
    for key in _AXIS_KEYS:
        rows: dict[int, int] = {}
        for c in coords:
            rows[key(c)] = rows.get(key(c), 0) + 1
        counts.append(rows)
    x = max(max(rows.values()) for rows in counts)
    for a, rows_a in enumerate(counts):
        if max(rows_a.values()) != x:
            continue
        ok = True
        for d, rows_d in enumerate(counts):
            if d == a:
                continue
            if row_basis == "occupied":
                total = len(rows_d)
            else:
                total = max(rows_d) - min(rows_d) + 1
            qualifying = sum(1 for cnt in rows_d.values() if 10 * cnt > 3 * x)
            if not 4 * qualifying > 3 * total:
                ok = False
                break
        if ok:
            return True
    return False


@dataclass(frozen=True)
class ValidationReport:
    n: int
    designated: Color
    color_matching_ok: bool
    designated_loops: list[list[int]]
    open_designated_ends: int
    holes: list[set[AxialCoord]]
    connected: bool
    roundness_ok: bool
    is_tantrix_solution: bool = field(init=False)

    def __post_init__(self):
        loop_tiles = sum(len(loop) for loop in self.designated_loops)
        object.__setattr__(
            self,
            "is_tantrix_solution",
            self.n >= 3
            and self.color_matching_ok
            and len(self.designated_loops) == 1
            and loop_tiles == self.n
            and self.open_designated_ends == 0
            and not self.holes
            and self.connected,
        )

    def to_json_dict(self, board: Board | None = None) -> dict:
        hole_cells = []
        for hole in self.holes:
            cells = []
            for c in sorted(hole):
                cell = {"q": c.q, "r": c.r}
                if board is not None:
                    place = board.place_at(c)
                    cell["place"] = place if place else None
                cells.append(cell)
            hole_cells.append(cells)
        return {
            "n": self.n,
            "designated_color": self.designated.value,
            "color_matching_ok": self.color_matching_ok,
            "designated_loops": [list(loop) for loop in self.designated_loops],
            "open_designated_ends": self.open_designated_ends,
            "holes": hole_cells,
            "connected": self.connected,
            "roundness_ok": self.roundness_ok,
            "is_tantrix_solution": self.is_tantrix_solution,
        }


def report(arrangement: Arrangement, tileset: TileSet) -> ValidationReport:
    designated = tileset.designated_color(arrangement.n)
    loops, open_ends = trace_designated(arrangement, tileset, designated)
    return ValidationReport(
        n=arrangement.n,
        designated=designated,
        color_matching_ok=color_matching_ok(arrangement, tileset),
        designated_loops=loops,
        open_designated_ends=open_ends,
        holes=find_holes(arrangement),
        connected=check_connected(arrangement),
        roundness_ok=roundness_official(arrangement),
    )
