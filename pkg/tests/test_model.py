import itertools

import pytest

from tantrix.hexboard import BoardKind, make_board
from tantrix.model import (
    BoardTooSmall,
    DuplicateConstraintFamily,
    ModelOptions,
    add_c6,
    add_nogood,
    add_pattern_cuts,
    add_subloop_cut,
    build_model,
    encode_arrangement,
    p_,
    set_objective,
    u_,
    x_,
    y_,
)
from tantrix.solver import verify_assignment
from tantrix.validate import Arrangement


@pytest.fixture(scope="module")
def b12_model(tileset):
    return build_model(10, make_board(BoardKind.TYPE_B, 12), tileset)


@pytest.fixture(scope="module")
def a19_model(tileset, ):
    return build_model(15, make_board(BoardKind.TYPE_A, 19), tileset)


def test_x_variable_count(b12_model):
    assert sum(1 for v in b12_model.vars if v.kind == "x") == 10 * 12 * 6


def test_y_bounds_and_binaries(b12_model):
    for var, lo, hi in zip(b12_model.vars, b12_model.lower, b12_model.upper):
        if var.kind == "y":
            assert (lo, hi) == (0, 3)
        else:
            assert (lo, hi) == (0, 1)


def test_c3_rows_for_n15(a19_model):
    for i in range(1, 11):
        row = next(c for c in a19_model.constraints if c.tag == f"C3[i={i}]")
        assert row.rhs == (2 if i <= 5 else 1)
        assert row.sense == "="


def test_u_linking_combinations(b12_model):
    # evaluate the four linking rows on synthetic occupancies of one pair
    board = b12_model.context.board
    j, _, j2, _ = next(board.edges())
    rows = [c for c in b12_model.constraints
            if c.tag.startswith("ULINK") and f"[j={j},j2={j2}]" in c.tag
            and not c.tag.startswith("ULINKP")]
    assert len(rows) == 4
    feasible = set()
    for occ_j, occ_j2, u in itertools.product((0, 1), repeat=3):
        values = {v: 0 for v in b12_model.vars}
        values[x_(1, j, 1)] = occ_j
        values[x_(1, j2, 1)] = occ_j2
        values[u_(j, j2)] = u
        if all(r.evaluate(values) for r in rows):
            feasible.add((occ_j, occ_j2, u))
    assert feasible == {(0, 0, 0), (1, 1, 0), (1, 0, 1), (0, 1, 1)}


def test_c7_reproduces_published_row(tileset):
    board = make_board(BoardKind.TYPE_A, 19)
    program = build_model(15, board, tileset, ModelOptions(cuts=frozenset({3})))
    row = next(c for c in program.constraints if c.tag == "C7[j=1,e=1,s=ccw]")
    j2 = board.adjacent(1, 1)
    assert {(v.idx) for _, v in row.terms} == {
        (2, 1, 2), (3, 1, 4), (2, j2, 6), (3, j2, 2)
    }
    assert row.rhs == 1 and row.sense == "<="


def test_c8_rows_use_only_gentle_designated_tiles(tileset):
    board = make_board(BoardKind.TYPE_A, 19)
    program = build_model(15, board, tileset, ModelOptions(cuts=frozenset({4})))
    rows = [c for c in program.constraints if c.tag.startswith("C8")]
    assert rows
    for row in rows:
        assert {v.idx[0] for _, v in row.terms} <= {1, 4, 6, 7, 8, 10}
        assert row.rhs == 1


def test_c9_rows_rhs_two(tileset):
    board = make_board(BoardKind.TYPE_A, 19)
    program = build_model(15, board, tileset, ModelOptions(cuts=frozenset({5})))
    rows = [c for c in program.constraints if c.tag.startswith("C9")]
    assert rows
    for row in rows:
        assert row.rhs == 2 and row.sense == "<="
        assert len(row.terms) == 16


def test_weighted_objective_coefficients(tileset):
    board = make_board(BoardKind.TYPE_A, 19)
    program = build_model(10, board, tileset,
                          ModelOptions(objective="weighted"))
    assert program.objective_sense == "max"
    for var in program.vars:
        if var.kind == "x":
            _, j, _ = var.idx
            assert program.objective_coefficient(var) == -board.ring(j)
    assert program.objective_coefficient(x_(1, 8, 1)) == -2
    assert program.objective_coefficient(x_(1, 1, 1)) == 0


def test_virtual_objective_single_term(b12_model):
    program = set_objective(b12_model, "virtual")
    assert program.objective_sense == "min"
    assert program.objective == ((1, x_(1, 1, 1)),)


def test_c6_duplicate_family_rejected(b12_model):
    program = add_c6(b12_model, "a")
    with pytest.raises(DuplicateConstraintFamily):
        add_c6(program, "b")


def _ring_arrangement(board, count):
    """`count` tiles on the ring-1 places around the empty center."""
    return Arrangement(count, board,
                       {j: (1, 1) for j in range(2, 2 + count)})


def test_c6_rows_on_surrounded_center(tileset, board_a7):
    base = build_model(6, board_a7, tileset)
    values6 = dict(zip(base.vars, encode_arrangement(
        base, _ring_arrangement(board_a7, 6).placements)))
    values3 = dict(zip(base.vars, encode_arrangement(
        base, _ring_arrangement(board_a7, 3).placements)))
    row_a = next(c for c in add_c6(base, "a").constraints if c.tag == "C6a[j=1]")
    row_c = next(c for c in add_c6(base, "c").constraints if c.tag == "C6c[j=1]")
    assert not row_a.evaluate(values6)   # six occupied neighbors exceed five
    assert row_c.evaluate(values3)       # exactly at the bound of three
    lhs = sum(co * values3[v] for co, v in row_c.terms)
    assert lhs == row_c.rhs


def test_c6_implication_chain_exhaustive():
    # lhs = occupied neighbors, rhs = s*occ + 6 - s: c implies b implies a
    for occ in (0, 1):
        for count in range(7):
            sat = {s: count <= s * occ + 6 - s for s in (1, 2, 3)}
            assert not sat[3] or sat[2]
            assert not sat[2] or sat[1]


def test_nogood_and_subloop_cut_shapes(b12_model):
    cut = add_subloop_cut(b12_model, [(1, 1, 1), (2, 2, 2), (3, 3, 3)])
    row = next(c for c in cut.constraints if c.tag.startswith("SUBLOOP"))
    assert len(row.terms) == 3 and row.rhs == 2
    again = add_subloop_cut(cut, [(1, 1, 1), (2, 2, 2), (3, 3, 3)])
    assert again is cut or len(again.constraints) == len(cut.constraints)

    ng = add_nogood(b12_model, [(i, i, 1) for i in range(1, 6)])
    row = next(c for c in ng.constraints if c.tag.startswith("NOGOOD"))
    assert len(row.terms) == 5 and row.rhs == 4

    with pytest.raises(ValueError):
        add_nogood(b12_model, [])


def test_board_too_small(tileset, board_b3):
    with pytest.raises(BoardTooSmall):
        build_model(5, board_b3, tileset)
    with pytest.raises(ValueError):
        build_model(2, board_b3, tileset)


def test_boundary_rows_forbid_designated(tileset, board_b3):
    program = build_model(3, board_b3, tileset)
    rows = [c for c in program.constraints if c.tag.startswith("C4B")]
    assert rows
    designated = program.context.designated
    for row in rows:
        assert row.sense == "=" and row.rhs == 0
        for coef, var in row.terms:
            i, j, k = var.idx
            tile = tileset.tile(i)
            from tantrix.tiles import oriented_color
            # every term really shows the designated color at that edge
            tag_l = int(row.tag.split("l=")[1].rstrip("]"))
            assert oriented_color(tile, k, tag_l, designated) == 3


def test_encode_arrangement_satisfies_model(tileset, pentagon):
    program = build_model(5, pentagon.board, tileset)
    values = encode_arrangement(program, pentagon.placements)
    assert verify_assignment(program, dict(zip(program.vars, values))) == []


def test_propagation_cliques_do_not_change_feasible_set(tileset, board_b3):
    """The redundant clique/degree/twin rows must leave the x-feasible set
    exactly as the documented families define it."""
    from tantrix.oracle import _Search

    base = build_model(3, board_b3, tileset,
                       ModelOptions(propagation_cliques=False))
    full = build_model(3, board_b3, tileset,
                       ModelOptions(propagation_cliques=True))
    import itertools as it
    tiles = [1, 2, 3]
    count = checked = 0
    for places in it.permutations(range(1, 4), 3):
        for ks in it.product(range(1, 7), repeat=3):
            placements = {places[t]: (tiles[t], ks[t]) for t in range(3)}
            va = dict(zip(base.vars, encode_arrangement(base, placements)))
            vb = dict(zip(full.vars, encode_arrangement(full, placements)))
            ok_a = not verify_assignment(base, va)
            ok_b = not verify_assignment(full, vb)
            assert ok_a == ok_b
            checked += 1
            count += ok_a
    assert checked == 1296
