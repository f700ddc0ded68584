import pytest
from hypothesis import given, strategies as st

from tantrix.tiles import (
    Color,
    FactViolation,
    ParseError,
    challenge_tile,
    color_code,
    default_tileset,
    dump_tileset,
    load_tileset,
    oriented_color,
    tile_multiplicity,
)


def test_default_tileset_loads_and_passes_facts(tileset):
    assert len(tileset.tiles) == 10


def test_tile2_strand_angles(tileset):
    angles = {s.color: s.angle for s in tileset.tile(2).strands}
    assert angles[Color.RED] == 120
    assert angles[Color.BLUE] == 0
    assert angles[Color.YELLOW] == 120


def test_red_angle_classes(tileset):
    by_angle = {0: set(), 60: set(), 120: set()}
    for i in range(1, 11):
        by_angle[tileset.tile(i).strand_of(Color.RED).angle].add(i)
    assert by_angle[120] == {2, 3}
    assert by_angle[0] == {5, 9}
    assert by_angle[60] == {1, 4, 6, 7, 8, 10}


def test_back_colors(tileset):
    assert tileset.back_color(4) is Color.RED
    assert tileset.back_color(5) is Color.RED


def test_designated_color_examples(tileset):
    assert tileset.designated_color(5) is Color.RED
    assert tileset.designated_color(14) is Color.RED
    assert tileset.designated_color(15) is tileset.back_color(5)
    assert challenge_tile(15) == 5
    assert challenge_tile(20) == 10
    with pytest.raises(ValueError):
        challenge_tile(2)


def test_tile_multiplicity_examples():
    assert tile_multiplicity(15, 3) == 2
    assert tile_multiplicity(15, 8) == 1
    assert all(tile_multiplicity(10, i) == 1 for i in range(1, 11))
    assert tile_multiplicity(3, 7) == 0
    assert sum(tile_multiplicity(27, i) for i in range(1, 11)) == 27


def test_shared_edge_rejected(tileset):
    text = dump_tileset(tileset).replace("R:1-3 B:2-4", "R:1-3 B:3-4")
    with pytest.raises(ParseError):
        load_tileset(text)


def test_fact_f2_violation(tileset):
    # give tiles 5 and 9 gentle (60-degree) red strands
    text = dump_tileset(tileset)
    text = text.replace("tile 5 R R:1-4 B:5-6 Y:2-3",
                        "tile 5 R R:1-3 B:2-6 Y:4-5")
    text = text.replace("tile 9 B R:1-4 B:3-5 Y:2-6",
                        "tile 9 B R:1-5 B:3-6 Y:2-4")
    with pytest.raises(FactViolation) as err:
        load_tileset(text)
    assert err.value.fact == "F2"


def test_fact_f4_violation(tileset):
    text = dump_tileset(tileset).replace("tile 4 R", "tile 4 B")
    with pytest.raises(FactViolation) as err:
        load_tileset(text)
    assert err.value.fact == "F4"


def test_red_geometry_violation(tileset):
    # tile 1 red strand still 60 degrees but on the wrong edges
    text = dump_tileset(tileset).replace("tile 1 B R:1-3 B:2-4 Y:5-6",
                                         "tile 1 B R:2-4 B:3-6 Y:1-5")
    with pytest.raises(FactViolation) as err:
        load_tileset(text)
    assert err.value.fact == "RED_GEOMETRY"


def test_duplicate_tops_rejected(tileset):
    # make tile 7's top identical to tile 1's
    text = dump_tileset(tileset).replace("tile 7 B R:1-3 B:5-6 Y:2-4",
                                         "tile 7 B R:1-3 B:2-4 Y:5-6")
    with pytest.raises(ParseError):
        load_tileset(text)


def test_dump_load_round_trip(tileset):
    assert load_tileset(dump_tileset(tileset)) == tileset


def test_color_code_multiset(tileset):
    for designated in Color:
        for i in range(1, 11):
            for k in range(1, 7):
                codes = sorted(
                    oriented_color(tileset.tile(i), k, e, designated)
                    for e in range(1, 7)
                )
                assert codes == [1, 1, 2, 2, 3, 3]


@given(st.integers(1, 10), st.integers(1, 6), st.integers(1, 6))
def test_rotation_equivariance(i, k, edge):
    tileset = default_tileset()
    tile = tileset.tile(i)
    rotated_k = k % 6 + 1
    rotated_edge = (edge - 2) % 6 + 1  # one extra clockwise step
    assert tile.oriented_color_at(k, edge) is \
        tile.oriented_color_at(rotated_k, rotated_edge)


@given(st.integers(1, 10), st.integers(1, 6), st.integers(1, 6))
def test_six_rotations_are_identity(i, k, edge):
    tileset = default_tileset()
    tile = tileset.tile(i)
    assert tile.oriented_color_at(k, edge) is \
        tile.oriented_color_at((k + 6 - 1) % 6 + 1, edge)


def test_tile2_designated_red_edges(tileset):
    # two edges carry the designated code and they are adjacent (tight arc)
    for k in range(1, 7):
        edges = [e for e in range(1, 7)
                 if oriented_color(tileset.tile(2), k, e, Color.RED) == 3]
        assert len(edges) == 2
        gap = (edges[0] - edges[1]) % 6
        assert min(gap, 6 - gap) == 1


def test_color_code_mapping():
    assert color_code(Color.RED, Color.RED) == 3
    assert color_code(Color.BLUE, Color.RED) == 1
    assert color_code(Color.YELLOW, Color.RED) == 2
    assert color_code(Color.RED, Color.BLUE) == 1
    assert color_code(Color.YELLOW, Color.BLUE) == 2
