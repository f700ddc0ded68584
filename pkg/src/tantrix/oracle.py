"""Exhaustive ground truth for tiny instances.

A plain depth-first placement search, place by place in spiral order,
pruned only by rules that every completion must already violate. It knows
nothing about the integer-program machinery, which is exactly why model
and solver are tested against it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .hexboard import Board, opposite
from .tiles import Color, TileSet, tile_multiplicity
from .validate import Arrangement, report

MAX_ORACLE_N = 7
MAX_ORACLE_BOARD = 12


class InstanceTooLarge(ValueError):
    """Instance outside the exhaustive-search comfort zone."""


@dataclass(frozen=True, order=True)
class CanonicalSolution:
    """Arrangement encoding minimized over the board's usable symmetries."""

    n: int
    encoding: tuple[tuple[int, int, int], ...]  # sorted (place, tile, orientation)

    def line(self) -> str:
        return " ".join(f"{p}:{i}:{k}" for p, i, k in self.encoding)


# ---------------------------------------------------------------------------
# lattice symmetries

def _rot_ccw(c):
    q, r = c
    return (q + r, -q)


def _reflect(c):
    q, r = c
    return (r, q)


def lattice_symmetries():
    """The 12 point symmetries as coordinate maps, rotations first."""
    maps = []
    f = lambda c: c
    for _ in range(6):
        maps.append(f)
        f = (lambda g: (lambda c: _rot_ccw(g(c))))(f)
    f = _reflect
    for _ in range(6):
        maps.append(f)
        f = (lambda g: (lambda c: _rot_ccw(g(c))))(f)
    return maps


def _orientation_after_rotation(k: int, turns: int) -> int:
    # rotating an arrangement CCW by `turns` lowers each tile's orientation
    return (k - 1 - turns) % 6 + 1


def _symmetry_actions(board: Board, tileset: TileSet):
    """Board automorphisms as (place map, placement map) pairs.

    A symmetry is usable only if it maps the place set onto itself and
    every (tile, orientation) image exists in the tileset; reflections
    drop out unless the tile art happens to be mirror-closed, since tiles
    cannot physically be flipped.
    """
    coords = [tuple(c) for c in board.places]
    coord_index = {c: j + 1 for j, c in enumerate(coords)}
    actions = []
    for idx, f in enumerate(lattice_symmetries()):
        mapped = [f(c) for c in coords]
        if set(mapped) != set(coords):
            continue
        place_map = {j + 1: coord_index[mapped[j]] for j in range(len(coords))}
        if idx < 6:
            pose_map = {
                (i, k): (i, _orientation_after_rotation(k, idx))
                for i in range(1, 11)
                for k in range(1, 7)
            }
        else:
            pose_map = _mirror_pose_map(tileset, idx - 6)
            if pose_map is None:
                continue
        actions.append((place_map, pose_map))
    return actions


def _mirror_pose_map(tileset: TileSet, turns: int):
    """(tile, orientation) image under reflect-then-rotate, if one exists."""
    # Under _reflect, the edge facing direction d moves to the edge facing
    # the mirrored direction 5-d; with the frozen edge-1/west convention the
    # edge numbers transform as e0 -> 5 - e0 in 0-based terms. The trailing
    # rotation then shifts edges by +turns.
    def mirrored_edge(e: int) -> int:
        return (5 - (e - 1)) % 6 + 1

    pose_map = {}
    for i in range(1, 11):
        for k in range(1, 7):
            want = {}
            for edge in range(1, 7):
                target = (mirrored_edge(edge) - 1 + turns) % 6 + 1
                want[target] = tileset.tile(i).oriented_color_at(k, edge)
            found = None
            for i2 in range(1, 11):
                for k2 in range(1, 7):
                    if all(
                        tileset.tile(i2).oriented_color_at(k2, e) is c
                        for e, c in want.items()
                    ):
                        found = (i2, k2)
                        break
                if found:
                    break
            if found is None:
                return None
            pose_map[(i, k)] = found
    return pose_map


def canonicalize(arrangement: Arrangement, tileset: TileSet) -> CanonicalSolution:
    actions = _symmetry_actions(arrangement.board, tileset)
    best = None
    for place_map, pose_map in actions:
        enc = tuple(
            sorted(
                (place_map[j], *pose_map[(i, k)])
                for j, (i, k) in arrangement.placements.items()
            )
        )
        if best is None or enc < best:
            best = enc
    return CanonicalSolution(arrangement.n, best)


# ---------------------------------------------------------------------------
# search

class _Search:
    def __init__(self, board: Board, tileset: TileSet, n: int,
                 allowed_places=None, require_valid=True, node_cap=None):
        self.board = board
        self.tileset = tileset
        self.n = n
        self.designated = tileset.designated_color(n)
        self.allowed = set(allowed_places) if allowed_places is not None \
            else set(range(1, board.size + 1))
        self.require_valid = require_valid
        self.node_cap = node_cap
        self.nodes = 0
        self.capped = False

        self.colors_at = {
            (i, k): tuple(tileset.tile(i).oriented_color_at(k, e) for e in range(1, 7))
            for i in range(1, 11)
            for k in range(1, 7)
        }
        self.des_edges = {
            (i, k): tileset.tile(i).oriented_strand_edges(self.designated, k)
            for i in range(1, 11)
            for k in range(1, 7)
        }
        # neighbors already decided when a place comes up in spiral order
        self.decided_nbrs = {
            j: [(e, board.adjacent(j, e)) for e in range(1, 7)
                if board.adjacent(j, e) < j]
            for j in range(1, board.size + 1)
        }

    def run(self, collect, find_first=False):
        self.avail = [0] + [tile_multiplicity(self.n, i) for i in range(1, 11)]
        self.placements: dict[int, tuple[int, int]] = {}
        self._collect = collect
        self._find_first = find_first
        self._stopped = False
        self._place(1)

    # -- helpers

    def _fits(self, j: int, i: int, k: int) -> bool:
        colors = self.colors_at[(i, k)]
        for edge, j2 in self.decided_nbrs[j]:
            mine = colors[edge - 1]
            if j2 == 0 or j2 not in self.placements:
                if mine is self.designated:
                    return False
                continue
            i2, k2 = self.placements[j2]
            theirs = self.colors_at[(i2, k2)][opposite(edge) - 1]
            if theirs is not mine:
                return False
        return True

    def _empty_ok(self, j: int) -> bool:
        for edge, j2 in self.decided_nbrs[j]:
            if j2 != 0 and j2 in self.placements:
                i2, k2 = self.placements[j2]
                if self.colors_at[(i2, k2)][opposite(edge) - 1] is self.designated:
                    return False
        return True

    def _closes_short_loop(self, j: int) -> bool:
        """Did placing at j close a designated loop of fewer than n tiles?"""
        e_start, e_out = self.des_edges[self.placements[j]]
        cur, out_edge, length = j, e_out, 1
        while True:
            j2 = self.board.adjacent(cur, out_edge)
            if j2 == 0 or j2 not in self.placements:
                return False
            entry = opposite(out_edge)
            a, b = self.des_edges[self.placements[j2]]
            if entry not in (a, b):
                return False
            if j2 == j:
                return length < self.n
            length += 1
            cur, out_edge = j2, (b if entry == a else a)

    # -- recursion

    def _place(self, j: int):
        if self._stopped:
            return
        if self.node_cap is not None and self.nodes >= self.node_cap:
            self.capped = True
            self._stopped = True
            return
        self.nodes += 1

        placed = len(self.placements)
        if placed == self.n:
            for j2 in range(j, self.board.size + 1):
                if not self._empty_ok(j2):
                    return
            self._leaf()
            return
        if j > self.board.size:
            return
        remaining = sum(1 for p in range(j, self.board.size + 1) if p in self.allowed)
        if placed + remaining < self.n:
            return

        if j in self.allowed:
            for i in range(1, 11):
                if self.avail[i] == 0:
                    continue
                self.avail[i] -= 1
                for k in range(1, 7):
                    if not self._fits(j, i, k):
                        continue
                    self.placements[j] = (i, k)
                    if not (self.require_valid and self._closes_short_loop(j)):
                        self._place(j + 1)
                    del self.placements[j]
                    if self._stopped:
                        self.avail[i] += 1
                        return
                self.avail[i] += 1
        if self._empty_ok(j):
            self._place(j + 1)

    def _leaf(self):
        arr = Arrangement(self.n, self.board, dict(self.placements))
        if self.require_valid and not report(arr, self.tileset).is_tantrix_solution:
            return
        self._collect(arr)
        if self._find_first:
            self._stopped = True


def enumerate_all(n: int, board: Board, tileset: TileSet) -> set[CanonicalSolution]:
    """Every Tantrix solution of the instance, up to board symmetry."""
    if n > MAX_ORACLE_N or board.size > MAX_ORACLE_BOARD:
        raise InstanceTooLarge(
            f"exhaustive enumeration is limited to n <= {MAX_ORACLE_N} "
            f"on boards of size <= {MAX_ORACLE_BOARD}"
        )
    out: set[CanonicalSolution] = set()
    search = _Search(board, tileset, n, require_valid=True)
    search.run(lambda arr: out.add(canonicalize(arr, tileset)))
    return out


def enumerate_closed_arrangements(
    n: int, board: Board, tileset: TileSet, allowed_places=None
) -> list[Arrangement]:
    """All arrangements whose touching colors match and whose designated
    strands all sit in closed loops (subloops and holes permitted)."""
    out: list[Arrangement] = []
    search = _Search(board, tileset, n, allowed_places=allowed_places,
                     require_valid=False)
    search.run(out.append)
    return out


def find_one(n: int, board: Board, tileset: TileSet, node_cap: int | None = None):
    """First valid solution in search order, or None; desk-scale helper."""
    found: list[Arrangement] = []
    search = _Search(board, tileset, n, require_valid=True, node_cap=node_cap)
    search.run(found.append, find_first=True)
    return (found[0] if found else None), search.nodes, search.capped


def golden_lines(solutions: set[CanonicalSolution]) -> str:
    """Stable text form for golden files: one canonical solution per line."""
    return "".join(sol.line() + "\n" for sol in sorted(solutions))
