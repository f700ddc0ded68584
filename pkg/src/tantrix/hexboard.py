"""Hexagonal-lattice geometry: spiral-numbered boards, adjacency, rings.

Places live on the axial-coordinate lattice (pointy-top). A board is the
prefix of a fixed counter-clockwise spiral numbering; place 1 sits at the
origin and rings are appended outward, so place indices never decrease in
ring distance.

Conventions (frozen; recalibrating either one breaks the normative
neighbor lookups asserted in the test suite):
  * the spiral enters each ring travelling east and winds counter-clockwise,
  * edge 1 of every place faces west, edges 2..6 continue counter-clockwise.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import NamedTuple

# Axial step vectors in counter-clockwise order, starting east.
DIRECTIONS: tuple[tuple[int, int], ...] = (
    (1, 0), (1, -1), (0, -1), (-1, 0), (-1, 1), (0, 1),
)

SPIRAL_START_DIR = 0  # east
EDGE1_DIR = 3         # west


class IllegalSize(ValueError):
    """Requested board size is not in the kind's size sequence."""


class BoardKind(Enum):
    TYPE_A = "A"
    TYPE_B = "B"

    @classmethod
    def parse(cls, text: str) -> "BoardKind":
        t = text.strip().upper()
        if t in ("A", "TYPEA", "TYPE_A"):
            return cls.TYPE_A
        if t in ("B", "TYPEB", "TYPE_B"):
            return cls.TYPE_B
        raise ValueError(f"unknown board kind: {text!r}")


class AxialCoord(NamedTuple):
    q: int
    r: int

    def neighbor(self, direction: int) -> "AxialCoord":
        dq, dr = DIRECTIONS[direction % 6]
        return AxialCoord(self.q + dq, self.r + dr)

    def ring(self) -> int:
        return (abs(self.q) + abs(self.r) + abs(self.q + self.r)) // 2


def opposite(edge: int) -> int:
    """The neighbor's edge touching our edge `edge` (1..6)."""
    return ((edge + 2) % 6) + 1


def edge_direction(edge: int) -> int:
    """Direction index (0..5) that edge 1..6 faces."""
    return (EDGE1_DIR + edge - 1) % 6


def direction_edge(direction: int) -> int:
    """Edge number 1..6 facing the given direction index."""
    return (direction - EDGE1_DIR) % 6 + 1


def spiral_coords(count: int) -> list[AxialCoord]:
    """First `count` places of the spiral numbering, origin first."""
    coords = [AxialCoord(0, 0)]
    radius = 1
    while len(coords) < count:
        cur = AxialCoord(0, 0)
        for _ in range(radius):
            cur = cur.neighbor(SPIRAL_START_DIR)
        for side in range(6):
            d = (SPIRAL_START_DIR + 2 + side) % 6
            for _ in range(radius):
                if len(coords) < count:
                    coords.append(cur)
                cur = cur.neighbor(d)
        radius += 1
    return coords


def type_a_sizes(limit: int) -> list[int]:
    """Centered-hexagon sizes 3r(r+1)+1 up to `limit`."""
    out, r = [], 0
    while 3 * r * (r + 1) + 1 <= limit:
        out.append(3 * r * (r + 1) + 1)
        r += 1
    return out


def type_b_sizes(limit: int) -> list[int]:
    """Sizes 3r^2 up to `limit`."""
    out, r = [], 1
    while 3 * r * r <= limit:
        out.append(3 * r * r)
        r += 1
    return out


@dataclass(frozen=True)
class Board:
    """Immutable spiral-prefix board with a dense 1-based adjacency table."""

    kind: BoardKind
    size: int
    places: tuple[AxialCoord, ...]
    _adjacency: tuple[tuple[int, ...], ...] = field(repr=False)
    _rings: tuple[int, ...] = field(repr=False)
    _index: dict[AxialCoord, int] = field(repr=False, hash=False, compare=False)

    def adjacent(self, j: int, edge: int) -> int:
        """Place adjacent to place j across its edge (1..6); 0 if off-board."""
        return self._adjacency[j - 1][edge - 1]

    def ring(self, j: int) -> int:
        """Ring distance of place j from place 1 (the spiral origin)."""
        return self._rings[j - 1]

    def coord(self, j: int) -> AxialCoord:
        return self.places[j - 1]

    def place_at(self, coord: AxialCoord) -> int:
        """Place index at an axial coordinate, or 0 if off-board."""
        return self._index.get(coord, 0)

    def edges(self):
        """All interior shared edges, once each: (j, edge, j2, edge2), j < j2."""
        for j in range(1, self.size + 1):
            for edge in range(1, 7):
                j2 = self.adjacent(j, edge)
                if j2 > j:
                    yield j, edge, j2, opposite(edge)

    def boundary_edges(self):
        """All (j, edge) whose neighbor place lies off-board."""
        for j in range(1, self.size + 1):
            for edge in range(1, 7):
                if self.adjacent(j, edge) == 0:
                    yield j, edge


def make_board(kind: BoardKind, size: int) -> Board:
    if kind is BoardKind.TYPE_A:
        legal = size in type_a_sizes(size)
    else:
        legal = size in type_b_sizes(size)
    if not legal:
        raise IllegalSize(f"size {size} is not a type {kind.value} board size")

    places = tuple(spiral_coords(size))
    index = {c: j + 1 for j, c in enumerate(places)}
    adjacency = tuple(
        tuple(index.get(c.neighbor(edge_direction(edge)), 0) for edge in range(1, 7))
        for c in places
    )
    rings = tuple(c.ring() for c in places)
    return Board(kind, size, places, adjacency, rings, index)
