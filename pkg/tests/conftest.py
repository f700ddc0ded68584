import pytest

from tantrix.hexboard import BoardKind, make_board
from tantrix.tiles import default_tileset
from tantrix.validate import Arrangement


@pytest.fixture(scope="session")
def tileset():
    return default_tileset()


@pytest.fixture(scope="session")
def board_a7():
    return make_board(BoardKind.TYPE_A, 7)


@pytest.fixture(scope="session")
def board_a19():
    return make_board(BoardKind.TYPE_A, 19)


@pytest.fixture(scope="session")
def board_b3():
    return make_board(BoardKind.TYPE_B, 3)


@pytest.fixture(scope="session")
def board_b12():
    return make_board(BoardKind.TYPE_B, 12)


# A challenge-5 solution: the designated red strands of tiles 1..5 close a
# pentagon around the A/7 center (checked valid in the validator tests).
PENTAGON_PLACEMENTS = {
    1: (5, 1), 2: (2, 3), 3: (1, 1), 4: (4, 5), 5: (3, 1),
}

# A valid challenge-10 solution on A/19 whose empties all have at most
# four occupied neighbors.
N10_A19_PLACEMENTS = {
    1: (8, 3), 2: (4, 1), 3: (6, 1), 4: (10, 6), 6: (9, 3),
    7: (5, 3), 10: (2, 2), 11: (7, 6), 16: (3, 1), 17: (1, 3),
}

# Same for challenge 15.
N15_A19_PLACEMENTS = {
    1: (1, 1), 2: (1, 4), 3: (6, 3), 4: (4, 3), 5: (7, 4),
    6: (5, 1), 7: (3, 5), 8: (2, 2), 12: (3, 3), 13: (4, 4),
    15: (2, 6), 16: (8, 5), 17: (5, 4), 18: (10, 4), 19: (9, 3),
}

# The only single-loop shape a challenge-10 arrangement can take on B/12;
# it necessarily rings places 1 and 3 (a two-cell hole), matching the
# hole count the elementary formulation is known to produce there.
N10_B12_HOLE_PLACEMENTS = {
    2: (1, 6), 4: (4, 1), 5: (6, 1), 6: (7, 4), 7: (8, 4),
    8: (2, 3), 9: (5, 5), 10: (10, 2), 11: (9, 1), 12: (3, 2),
}


@pytest.fixture()
def pentagon(board_a7):
    return Arrangement(5, board_a7, dict(PENTAGON_PLACEMENTS))


@pytest.fixture()
def n10_a19(board_a19):
    return Arrangement(10, board_a19, dict(N10_A19_PLACEMENTS))


@pytest.fixture()
def n15_a19(board_a19):
    return Arrangement(15, board_a19, dict(N15_A19_PLACEMENTS))


@pytest.fixture()
def n10_b12_hole(board_b12):
    return Arrangement(10, board_b12, dict(N10_B12_HOLE_PLACEMENTS))
