import pytest

from tantrix.hexboard import AxialCoord
from tantrix.tiles import Color
from tantrix.validate import (
    Arrangement,
    MultipleTilesOnPlace,
    check_connected,
    decode,
    find_holes,
    report,
    roundness_official,
    trace_designated,
)


def test_decode_empty(tileset, board_a7):
    arr = decode({}, board_a7, tileset, 5)
    assert arr.placements == {}


def test_decode_rejects_double_placement(tileset, board_a7):
    with pytest.raises(MultipleTilesOnPlace):
        decode({(1, 1, 1): 1, (2, 1, 2): 1}, board_a7, tileset, 5)


def test_pentagon_is_a_solution(tileset, pentagon):
    rep = report(pentagon, tileset)
    assert rep.is_tantrix_solution
    assert rep.designated is Color.RED
    assert len(rep.designated_loops) == 1
    assert sorted(rep.designated_loops[0]) == [1, 2, 3, 4, 5]
    assert rep.open_designated_ends == 0
    assert rep.holes == []
    assert rep.connected


def test_known_big_solutions(tileset, n10_a19, n15_a19):
    for arr in (n10_a19, n15_a19):
        rep = report(arr, tileset)
        assert rep.is_tantrix_solution
        assert len(rep.designated_loops[0]) == arr.n


def test_single_tile_trace(tileset, board_a7):
    arr = Arrangement(5, board_a7, {1: (5, 1)})
    loops, open_ends = trace_designated(arr, tileset, Color.RED)
    assert loops == []
    assert open_ends == 2


def test_open_designated_line_rejected(tileset, board_a7):
    # tiles 5 at center and 9 east of it: their straight red strands join
    # into one open line across the shared edge
    arr = Arrangement(5, board_a7, {1: (5, 2), 2: (9, 3)})
    loops, open_ends = trace_designated(arr, tileset, Color.RED)
    rep = report(arr, tileset)
    assert loops == []
    assert open_ends > 0
    assert not rep.is_tantrix_solution


def test_ring_of_six_has_center_hole(tileset, board_a7):
    arr = Arrangement(6, board_a7, {j: (1, 1) for j in range(2, 8)})
    holes = find_holes(arr)
    assert holes == [{AxialCoord(0, 0)}]
    rep = report(arr, tileset)
    assert not rep.is_tantrix_solution
    assert len(rep.holes) == 1


def test_small_arrangements_cannot_have_holes(tileset, board_a19):
    import itertools
    for places in itertools.combinations(range(1, 8), 5):
        arr = Arrangement(5, board_a19, {j: (1, 1) for j in places})
        assert find_holes(arr) == []


def test_b12_single_loop_has_two_cell_hole(tileset, n10_b12_hole):
    rep = report(n10_b12_hole, tileset)
    assert rep.color_matching_ok
    assert rep.open_designated_ends == 0
    assert len(rep.designated_loops) == 1
    assert len(rep.holes) == 1
    assert rep.holes[0] == {AxialCoord(0, 0), AxialCoord(1, -1)}
    assert not rep.is_tantrix_solution


def test_connectivity(tileset, board_a19):
    assert check_connected(Arrangement(3, board_a19, {1: (1, 1)}))
    split = Arrangement(3, board_a19, {2: (1, 1), 5: (2, 1)})
    assert not check_connected(split)
    rep = report(split, tileset)
    assert not rep.connected


def test_roundness_full_hexagon(tileset, board_a19):
    arr = Arrangement(19, board_a19, {j: (1, 1) for j in range(1, 20)})
    assert roundness_official(arr)


def test_roundness_straight_line(tileset):
    from tantrix.hexboard import BoardKind, make_board
    board = make_board(BoardKind.TYPE_A, 61)
    # any four collinear cells along one axis
    row = [j for j in range(1, 62) if board.coord(j).r == 0][:4]
    assert len(row) == 4
    arr = Arrangement(4, board, {j: (1, 1) for j in row})
    assert not roundness_official(arr)


def test_roundness_single_tile(tileset, board_a7):
    arr = Arrangement(3, board_a7, {1: (1, 1)})
    assert roundness_official(arr)


def test_roundness_row_basis_flag(tileset, board_a19):
    # two far-apart tiles on one row: every occupied cross row qualifies,
    # but the span reading sees the empty rows in between
    places = [j for j in range(1, 20) if board_a19.coord(j).r == 0]
    far = {min(places, key=lambda j: board_a19.coord(j).q): (1, 1),
           max(places, key=lambda j: board_a19.coord(j).q): (2, 1)}
    arr = Arrangement(3, board_a19, far)
    assert roundness_official(arr, row_basis="occupied")
    assert not roundness_official(arr, row_basis="span")
    with pytest.raises(ValueError):
        roundness_official(arr, row_basis="bogus")


def test_loop_partition_identity(tileset, n15_a19):
    rep = report(n15_a19, tileset)
    assert sum(len(loop) for loop in rep.designated_loops) == 15


def test_report_json_shape(tileset, pentagon):
    doc = report(pentagon, tileset).to_json_dict(pentagon.board)
    assert doc["is_tantrix_solution"] is True
    assert doc["designated_color"] == "R"
    assert doc["designated_loops"] == [[1, 2, 3, 4, 5]]
    assert doc["holes"] == []
