from collections import Counter

import pytest

from tantrix.hexboard import (
    AxialCoord,
    BoardKind,
    IllegalSize,
    make_board,
    opposite,
    spiral_coords,
    type_a_sizes,
    type_b_sizes,
)


def test_published_neighbor_values(board_a19):
    assert board_a19.adjacent(4, 6) == 12
    assert board_a19.adjacent(8, 5) == 0


def test_size_sequences():
    assert type_a_sizes(75) == [1, 7, 19, 37, 61]
    assert type_b_sizes(75) == [3, 12, 27, 48, 75]


def test_make_board_accepts_exactly_the_legal_sizes():
    legal_a = {1, 7, 19, 37, 61}
    legal_b = {3, 12, 27, 48, 75}
    for size in range(1, 76):
        for kind, legal in ((BoardKind.TYPE_A, legal_a), (BoardKind.TYPE_B, legal_b)):
            if size in legal:
                assert make_board(kind, size).size == size
            else:
                with pytest.raises(IllegalSize):
                    make_board(kind, size)


def test_adjacency_symmetry_all_boards():
    for kind, sizes in ((BoardKind.TYPE_A, type_a_sizes(75)),
                        (BoardKind.TYPE_B, type_b_sizes(75))):
        for m in sizes:
            board = make_board(kind, m)
            for j in range(1, m + 1):
                for edge in range(1, 7):
                    j2 = board.adjacent(j, edge)
                    if j2:
                        assert board.adjacent(j2, opposite(edge)) == j


def test_neighbors_distinct_and_zero_only_off_board(board_a19):
    from tantrix.hexboard import edge_direction

    for j in range(1, 20):
        nbrs = [board_a19.adjacent(j, e) for e in range(1, 7)]
        onboard = [x for x in nbrs if x]
        assert len(set(onboard)) == len(onboard)
        coord = board_a19.coord(j)
        for e in range(1, 7):
            cell = coord.neighbor(edge_direction(e))
            assert (board_a19.adjacent(j, e) == 0) == (board_a19.place_at(cell) == 0)


def test_ring_values(board_a19):
    assert board_a19.ring(1) == 0
    assert board_a19.ring(8) == 2
    assert Counter(board_a19.ring(j) for j in range(1, 20)) == {0: 1, 1: 6, 2: 12}


def test_ring_one_has_six_places(board_a19):
    assert sum(1 for j in range(1, 20) if board_a19.ring(j) == 1) == 6


def test_spiral_rings_nondecreasing():
    for kind, size in ((BoardKind.TYPE_A, 61), (BoardKind.TYPE_B, 75)):
        board = make_board(kind, size)
        rings = [board.ring(j) for j in range(1, size + 1)]
        assert rings == sorted(rings)


def test_spiral_prefix_property():
    big = spiral_coords(75)
    for count in (3, 12, 27, 48):
        assert spiral_coords(count) == big[:count]


def test_ring_distance():
    assert AxialCoord(0, 0).ring() == 0
    assert AxialCoord(3, -1).ring() == 3
    assert AxialCoord(-2, 4).ring() == 4


def test_opposite_is_involution():
    for e in range(1, 7):
        assert opposite(opposite(e)) == e
        assert opposite(e) != e
