"""The ten-tile Discovery set: strands, orientations, colors, multiplicities.

A tile pairs the six edges of a hexagon into three strands, one red, one
blue, one yellow. Strand shape is named by arc angle: edges three apart
make a straight line (0 degrees), two apart a gentle arc (60), adjacent
edges a tight arc (120).

Tileset file format, one tile per line, `#` starts a comment:

    tile <num> <back_color> <color>:<e1>-<e2> <color>:<e1>-<e2> <color>:<e1>-<e2>

with colors R/B/Y and edges 1..6, e.g. ``tile 2 Y R:2-3 B:1-4 Y:5-6``.
Strand edges are the tile's base pose (orientation 1); orientation k is the
base pose rotated 60 degrees clockwise k-1 times.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from enum import Enum
from importlib import resources
from typing import Iterable, NamedTuple


class ParseError(ValueError):
    """Tileset text does not parse or breaks a per-tile invariant."""


class FactViolation(ValueError):
    """Tileset contradicts a normative fact about the Discovery set."""

    def __init__(self, fact: str, message: str):
        super().__init__(f"{fact}: {message}")
        self.fact = fact


class Color(Enum):
    RED = "R"
    BLUE = "B"
    YELLOW = "Y"

    @classmethod
    def parse(cls, text: str) -> "Color":
        t = text.strip().upper()
        for c in cls:
            if t in (c.value, c.name):
                return c
        raise ParseError(f"unknown color: {text!r}")


COLORS = (Color.RED, Color.BLUE, Color.YELLOW)

# Arc angle by cyclic edge gap.
ANGLE_BY_GAP = {1: 120, 2: 60, 3: 0}


def edge_gap(e1: int, e2: int) -> int:
    d = (e1 - e2) % 6
    return min(d, 6 - d)


class Strand(NamedTuple):
    edges: tuple[int, int]  # sorted, 1..6
    color: Color

    @property
    def angle(self) -> int:
        return ANGLE_BY_GAP[edge_gap(*self.edges)]


def oriented_edge(base_edge: int, k: int) -> int:
    """Edge at which a base-pose edge sits after rotating to orientation k."""
    return (base_edge - k) % 6 + 1


def base_edge(edge: int, k: int) -> int:
    """Base-pose edge that shows at `edge` under orientation k."""
    return (edge + k - 2) % 6 + 1


@dataclass(frozen=True)
class TileSpec:
    number: int
    strands: tuple[Strand, Strand, Strand]
    back_color: Color

    def __post_init__(self):
        edges = sorted(e for s in self.strands for e in s.edges)
        if edges != [1, 2, 3, 4, 5, 6]:
            raise ParseError(f"tile {self.number}: strands must pair up edges 1..6 exactly")
        if {s.color for s in self.strands} != set(COLORS):
            raise ParseError(f"tile {self.number}: need one strand of each color")

    def strand_of(self, color: Color) -> Strand:
        for s in self.strands:
            if s.color is color:
                return s
        raise KeyError(color)

    def color_at(self, edge: int) -> Color:
        for s in self.strands:
            if edge in s.edges:
                return s.color
        raise ValueError(f"edge {edge} out of range")

    def oriented_color_at(self, k: int, edge: int) -> Color:
        return self.color_at(base_edge(edge, k))

    def oriented_strand_edges(self, color: Color, k: int) -> tuple[int, int]:
        e1, e2 = self.strand_of(color).edges
        a, b = oriented_edge(e1, k), oriented_edge(e2, k)
        return (a, b) if a < b else (b, a)

    def pattern_key(self) -> tuple:
        """Top-surface fingerprint, independent of back color."""
        return tuple(sorted((s.color.value, s.edges) for s in self.strands))


@dataclass(frozen=True)
class TileSet:
    tiles: tuple[TileSpec, ...]

    def tile(self, i: int) -> TileSpec:
        return self.tiles[i - 1]

    def back_color(self, i: int) -> Color:
        return self.tiles[i - 1].back_color

    def designated_color(self, n: int) -> Color:
        return self.back_color(challenge_tile(n))


def challenge_tile(n: int) -> int:
    """Tile number carrying a challenge number's lowest digit (0 maps to 10)."""
    if n < 3:
        raise ValueError("challenge numbers start at 3")
    digit = n % 10
    return 10 if digit == 0 else digit


def designated_color(n: int, tileset: TileSet) -> Color:
    return tileset.designated_color(n)


def tile_multiplicity(n: int, i: int) -> int:
    """How many copies of tile i a challenge of size n uses."""
    if n < 3:
        raise ValueError("challenge numbers start at 3")
    return max(0, math.ceil((n + 1 - i) / 10))


def color_code(color: Color, designated: Color) -> int:
    """3 for the designated color; the other two colors map to 1 and 2
    in the fixed order red < blue < yellow."""
    if color is designated:
        return 3
    others = [c for c in COLORS if c is not designated]
    return others.index(color) + 1


def oriented_color(tile: TileSpec, k: int, edge: int, designated: Color) -> int:
    """Color code shown at a place edge by `tile` in orientation k."""
    return color_code(tile.oriented_color_at(k, edge), designated)


# Base-pose red strand edges of the ten Discovery tiles. The pattern-cut
# generator, the fact checks below, and the shipped tileset are all
# calibrated against this layout; a tileset that disagrees would silently
# change which placements the short-loop cuts forbid, so the loader rejects it.
RED_BASE_EDGES = {
    1: (1, 3), 2: (2, 3), 3: (4, 5), 4: (2, 6), 5: (1, 4),
    6: (3, 5), 7: (1, 3), 8: (2, 4), 9: (1, 4), 10: (2, 4),
}

RED_TIGHT = (2, 3)            # red arc 120 degrees
RED_STRAIGHT = (5, 9)         # red line 0 degrees
RED_GENTLE = (1, 4, 6, 7, 8, 10)  # red arc 60 degrees
RED_BACKS = (4, 5)            # numbers written in red on the back


def check_facts(tileset: TileSet) -> None:
    """Raise FactViolation unless the normative Discovery facts hold."""
    for i in RED_TIGHT:
        if tileset.tile(i).strand_of(Color.RED).angle != 120:
            raise FactViolation("F1", f"tile {i} must have a 120-degree red strand")
    for i in RED_STRAIGHT:
        if tileset.tile(i).strand_of(Color.RED).angle != 0:
            raise FactViolation("F2", f"tile {i} must have a straight red strand")
    for i in RED_GENTLE:
        if tileset.tile(i).strand_of(Color.RED).angle != 60:
            raise FactViolation("F3", f"tile {i} must have a 60-degree red strand")
    for i in RED_BACKS:
        if tileset.back_color(i) is not Color.RED:
            raise FactViolation("F4", f"tile {i} must carry a red back number")
    for i, edges in RED_BASE_EDGES.items():
        if tileset.tile(i).strand_of(Color.RED).edges != edges:
            raise FactViolation(
                "RED_GEOMETRY",
                f"tile {i} red strand must join edges {edges[0]}-{edges[1]} in base pose",
            )


_TILE_RE = re.compile(
    r"^tile\s+(\d+)\s+([A-Za-z])((?:\s+[A-Za-z]:\d-\d){3})\s*$"
)
_STRAND_RE = re.compile(r"([A-Za-z]):(\d)-(\d)")


def load_tileset(text: str) -> TileSet:
    """Parse tileset text, validate invariants and the Discovery facts."""
    specs: dict[int, TileSpec] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _TILE_RE.match(line)
        if not m:
            raise ParseError(f"line {lineno}: cannot parse {line!r}")
        number = int(m.group(1))
        if not 1 <= number <= 10:
            raise ParseError(f"line {lineno}: tile number must be 1..10")
        if number in specs:
            raise ParseError(f"line {lineno}: duplicate tile {number}")
        back = Color.parse(m.group(2))
        strands = []
        for cs, e1, e2 in _STRAND_RE.findall(m.group(3)):
            e1, e2 = int(e1), int(e2)
            if not (1 <= e1 <= 6 and 1 <= e2 <= 6) or e1 == e2:
                raise ParseError(f"line {lineno}: bad strand edges {e1}-{e2}")
            strands.append(Strand((min(e1, e2), max(e1, e2)), Color.parse(cs)))
        specs[number] = TileSpec(number, tuple(strands), back)

    if sorted(specs) != list(range(1, 11)):
        raise ParseError(f"expected tiles 1..10, got {sorted(specs)}")
    patterns = [specs[i].pattern_key() for i in range(1, 11)]
    if len(set(patterns)) != 10:
        dupes = [i for i in range(1, 11) if patterns.count(patterns[i - 1]) > 1]
        raise ParseError(f"tile tops must all differ; tiles {dupes} coincide")

    tileset = TileSet(tuple(specs[i] for i in range(1, 11)))
    check_facts(tileset)
    return tileset


def default_tileset() -> TileSet:
    """The tileset shipped with the package."""
    text = resources.files("tantrix.data").joinpath("discovery.tiles").read_text()
    return load_tileset(text)


def dump_tileset(tileset: TileSet) -> str:
    """Inverse of load_tileset for the shipped grammar."""
    lines = ["# Discovery tiles: base pose strand edges, one tile per line."]
    for t in tileset.tiles:
        strands = " ".join(
            f"{s.color.value}:{s.edges[0]}-{s.edges[1]}"
            for s in sorted(t.strands, key=lambda s: COLORS.index(s.color))
        )
        lines.append(f"tile {t.number} {t.back_color.value} {strands}")
    return "\n".join(lines) + "\n"


def iter_placements(tileset: TileSet) -> Iterable[tuple[int, int]]:
    """All (tile number, orientation) pairs."""
    for i in range(1, 11):
        for k in range(1, 7):
            yield i, k
