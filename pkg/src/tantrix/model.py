"""Compile a challenge into a solver-agnostic 0-1 integer linear program.

Variables:
  x[i,j,k]  binary   tile i sits on place j in orientation k
  y[j,l]    0..3     color code shown at edge l of place j (0 = empty)
  u[j,j2]   binary   exactly one of the adjacent places j < j2 is occupied

Constraint families carry provenance tags ("C3[i=2]", "C7[j=1,e=1,s=ccw]",
...) so cuts deduplicate and exports stay diffable. Pattern cuts are
generated from tile geometry for whatever the designated color is, never
from hard-coded tables.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Iterable, Mapping

from .hexboard import Board, DIRECTIONS, direction_edge, opposite
from .tiles import (
    Color,
    TileSet,
    color_code,
    oriented_color,
    tile_multiplicity,
)


class BoardTooSmall(ValueError):
    """Board has fewer places than the challenge number."""


class OptionConflict(ValueError):
    """Reserved for mutually exclusive build options."""


class DuplicateConstraintFamily(ValueError):
    """A one-shot constraint family was added twice."""


@dataclass(frozen=True, order=True)
class VarRef:
    kind: str            # "x", "y" or "u"
    idx: tuple[int, ...]

    @property
    def name(self) -> str:
        return "_".join((self.kind, *map(str, self.idx)))

    @staticmethod
    def parse(name: str) -> "VarRef":
        parts = name.split("_")
        return VarRef(parts[0], tuple(int(p) for p in parts[1:]))


def x_(i: int, j: int, k: int) -> VarRef:
    return VarRef("x", (i, j, k))


def y_(j: int, l: int) -> VarRef:
    return VarRef("y", (j, l))


def u_(j: int, j2: int) -> VarRef:
    return VarRef("u", (min(j, j2), max(j, j2)))


def p_(j: int) -> VarRef:
    """Occupancy indicator of place j (defined equal to the x-sum there).

    Auxiliary column: it never changes the feasible x-set, but branching
    on occupancy first settles the solution shape before tile identities,
    which is where the search effort belongs."""
    return VarRef("p", (j,))


@dataclass(frozen=True)
class LinearConstraint:
    terms: tuple[tuple[int, VarRef], ...]
    sense: str           # "<=", "=" or ">="
    rhs: int
    tag: str

    def __post_init__(self):
        if not self.tag:
            raise ValueError("constraint tag must be nonempty")
        if self.sense not in ("<=", "=", ">="):
            raise ValueError(f"bad sense {self.sense!r}")
        seen = set()
        for _, var in self.terms:
            if var in seen:
                raise ValueError(f"duplicate variable {var.name} in {self.tag}")
            seen.add(var)

    def evaluate(self, values: Mapping[VarRef, int]) -> bool:
        lhs = sum(c * values[v] for c, v in self.terms)
        if self.sense == "<=":
            return lhs <= self.rhs
        if self.sense == ">=":
            return lhs >= self.rhs
        return lhs == self.rhs


@dataclass(frozen=True)
class ModelContext:
    n: int
    board: Board
    tileset: TileSet
    designated: Color


@dataclass(frozen=True)
class IntegerProgram:
    vars: tuple[VarRef, ...]
    lower: tuple[int, ...]
    upper: tuple[int, ...]
    constraints: tuple[LinearConstraint, ...]
    objective_sense: str                       # "min" or "max"
    objective: tuple[tuple[int, VarRef], ...]  # nonzero terms only
    context: ModelContext | None = field(default=None, compare=False, repr=False)
    _columns: dict = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(
            self, "_columns", {v: c for c, v in enumerate(self.vars)}
        )
        for con in self.constraints:
            for _, v in con.terms:
                if v not in self._columns:
                    raise ValueError(f"{con.tag} references undeclared {v.name}")
        for _, v in self.objective:
            if v not in self._columns:
                raise ValueError(f"objective references undeclared {v.name}")

    def column(self, var: VarRef) -> int:
        return self._columns[var]

    def objective_coefficient(self, var: VarRef) -> int:
        for c, v in self.objective:
            if v == var:
                return c
        return 0

    def tags(self) -> set[str]:
        return {c.tag for c in self.constraints}

    def with_rows(self, rows: Iterable[LinearConstraint]) -> "IntegerProgram":
        """New revision with extra rows; rows whose tag already exists are
        dropped, which makes re-adding a cut idempotent."""
        have = self.tags()
        fresh = []
        for row in rows:
            if row.tag not in have:
                have.add(row.tag)
                fresh.append(row)
        if not fresh:
            return self
        return replace(self, constraints=self.constraints + tuple(fresh))

    def with_objective(self, sense: str, terms) -> "IntegerProgram":
        return replace(self, objective_sense=sense, objective=tuple(terms))


@dataclass(frozen=True)
class ModelOptions:
    c6: str | None = None                     # None, "a", "b" or "c"
    cuts: frozenset[int] = frozenset()        # subset of {3, 4, 5}
    objective: str = "virtual"                # "virtual" or "weighted"
    # Redundant x-space rows restating the color-matching logic as
    # at-most-one cliques; they never change the feasible set (asserted in
    # tests) but let bound propagation prune neighbor poses immediately.
    propagation_cliques: bool = True


def _occupancy_terms(j: int, coef: int = 1):
    return [(coef, x_(i, j, k)) for i in range(1, 11) for k in range(1, 7)]


def build_model(
    n: int,
    board: Board,
    tileset: TileSet,
    options: ModelOptions = ModelOptions(),
) -> IntegerProgram:
    if n < 3:
        raise ValueError("challenge numbers start at 3")
    if board.size < n:
        raise BoardTooSmall(f"board size {board.size} < challenge {n}")
    m = board.size
    designated = tileset.designated_color(n)

    vars: list[VarRef] = []
    lower: list[int] = []
    upper: list[int] = []
    for j in range(1, m + 1):
        vars.append(p_(j))
        lower.append(0)
        upper.append(1)
    for j in range(1, m + 1):
        for i in range(1, 11):
            for k in range(1, 7):
                vars.append(x_(i, j, k))
                lower.append(0)
                upper.append(1)
    for j in range(1, m + 1):
        for l in range(1, 7):
            vars.append(y_(j, l))
            lower.append(0)
            upper.append(3)
    pairs = [(j, l, j2, l2) for j, l, j2, l2 in board.edges()]
    for j, _, j2, _ in pairs:
        vars.append(u_(j, j2))
        lower.append(0)
        upper.append(1)

    rows: list[LinearConstraint] = []

    for j in range(1, m + 1):
        rows.append(LinearConstraint(
            tuple([(1, p_(j))] + _occupancy_terms(j, -1)),
            "=", 0, f"OCCDEF[j={j}]"))

    for j in range(1, m + 1):
        rows.append(LinearConstraint(
            tuple(_occupancy_terms(j)), "<=", 1, f"C1[j={j}]"))

    rows.append(LinearConstraint(
        tuple((1, x_(i, j, k))
              for i in range(1, 11)
              for j in range(1, m + 1)
              for k in range(1, 7)),
        "=", n, "C2"))

    for i in range(1, 11):
        rows.append(LinearConstraint(
            tuple((1, x_(i, j, k)) for j in range(1, m + 1) for k in range(1, 7)),
            "=", tile_multiplicity(n, i), f"C3[i={i}]"))

    for j in range(1, m + 1):
        for l in range(1, 7):
            terms = [(1, y_(j, l))]
            for i in range(1, 11):
                for k in range(1, 7):
                    c = oriented_color(tileset.tile(i), k, l, designated)
                    terms.append((-c, x_(i, j, k)))
            rows.append(LinearConstraint(
                tuple(terms), "=", 0, f"YDEF[j={j},l={l}]"))

    for j, l, j2, l2 in pairs:
        u = u_(j, j2)
        sx = _occupancy_terms(j)
        sx2 = _occupancy_terms(j2)
        rows.append(LinearConstraint(
            tuple([(1, u)] + sx + sx2), "<=", 2, f"ULINK1[j={j},j2={j2}]"))
        rows.append(LinearConstraint(
            tuple([(1, u)] + _occupancy_terms(j, -1) + _occupancy_terms(j2, -1)),
            "<=", 0, f"ULINK2[j={j},j2={j2}]"))
        rows.append(LinearConstraint(
            tuple([(1, u)] + _occupancy_terms(j, -1) + sx2),
            ">=", 0, f"ULINK3[j={j},j2={j2}]"))
        rows.append(LinearConstraint(
            tuple([(1, u)] + sx + _occupancy_terms(j2, -1)),
            ">=", 0, f"ULINK4[j={j},j2={j2}]"))
        rows.append(LinearConstraint(
            ((1, y_(j, l)), (-1, y_(j2, l2)), (2, u)),
            ">=", 0, f"C4C5LO[j={j},l={l}]"))
        rows.append(LinearConstraint(
            ((1, y_(j, l)), (-1, y_(j2, l2)), (-2, u)),
            "<=", 0, f"C4C5HI[j={j},l={l}]"))

    for j, l in board.boundary_edges():
        terms = [
            (1, x_(i, j, k))
            for i in range(1, 11)
            for k in range(1, 7)
            if oriented_color(tileset.tile(i), k, l, designated) == 3
        ]
        rows.append(LinearConstraint(
            tuple(terms), "=", 0, f"C4B[j={j},l={l}]"))

    if options.propagation_cliques:
        # shape-level twins of the counting and linking rows: implied by
        # OCCDEF + the x-space rows, but visible to row-local propagation
        rows.append(LinearConstraint(
            tuple((1, p_(j)) for j in range(1, m + 1)),
            "=", n, "OCCTOTAL"))
        for j, _, j2, _ in pairs:
            u = u_(j, j2)
            rows.append(LinearConstraint(
                ((1, u), (1, p_(j)), (1, p_(j2))), "<=", 2,
                f"ULINKP1[j={j},j2={j2}]"))
            rows.append(LinearConstraint(
                ((1, u), (-1, p_(j)), (-1, p_(j2))), "<=", 0,
                f"ULINKP2[j={j},j2={j2}]"))
            rows.append(LinearConstraint(
                ((1, u), (-1, p_(j)), (1, p_(j2))), ">=", 0,
                f"ULINKP3[j={j},j2={j2}]"))
            rows.append(LinearConstraint(
                ((1, u), (1, p_(j)), (-1, p_(j2))), ">=", 0,
                f"ULINKP4[j={j},j2={j2}]"))
        # every placed tile continues its designated strand through two
        # distinct edges, so it needs two occupied neighbors
        for j in range(1, m + 1):
            terms = [(1, p_(j2))
                     for l in range(1, 7)
                     if (j2 := board.adjacent(j, l))]
            terms.append((-2, p_(j)))
            rows.append(LinearConstraint(
                tuple(terms), ">=", 0, f"DEGREE[j={j}]"))

        def showing(j, l, cls):
            return [
                (1, x_(i, j, k))
                for i in range(1, 11)
                for k in range(1, 7)
                if oriented_color(tileset.tile(i), k, l, designated) == cls
            ]

        def not_showing(j, l, cls):
            return [
                (1, x_(i, j, k))
                for i in range(1, 11)
                for k in range(1, 7)
                if oriented_color(tileset.tile(i), k, l, designated) != cls
            ]

        for j, l, j2, l2 in pairs:
            for cls in (1, 2):
                rows.append(LinearConstraint(
                    tuple(showing(j, l, cls) + not_showing(j2, l2, cls)),
                    "<=", 1, f"CLIQUE[j={j},l={l},c={cls}]"))
                rows.append(LinearConstraint(
                    tuple(showing(j2, l2, cls) + not_showing(j, l, cls)),
                    "<=", 1, f"CLIQUE[j={j2},l={l2},c={cls}]"))
            des_terms = showing(j, l, 3) + [
                (-c, v) for c, v in showing(j2, l2, 3)
            ]
            rows.append(LinearConstraint(
                tuple(des_terms), "=", 0, f"CLIQUE[j={j},l={l},c=3]"))

    program = IntegerProgram(
        vars=tuple(vars),
        lower=tuple(lower),
        upper=tuple(upper),
        constraints=tuple(rows),
        objective_sense="min",
        objective=((1, x_(1, 1, 1)),),
        context=ModelContext(n, board, tileset, designated),
    )

    if options.c6 is not None:
        program = add_c6(program, options.c6)
    for L in sorted(options.cuts):
        program = add_pattern_cuts(program, L)
    program = set_objective(program, options.objective)
    return program


def add_c6(program: IntegerProgram, variant: str) -> IntegerProgram:
    """Bound the number of occupied neighbors of every empty place:
    at most 5 (a), 4 (b) or 3 (c)."""
    if variant not in ("a", "b", "c"):
        raise ValueError(f"bad C6 variant {variant!r}")
    if any(t.startswith("C6") for t in program.tags()):
        raise DuplicateConstraintFamily("a C6 family is already present")
    ctx = program.context
    s = {"a": 1, "b": 2, "c": 3}[variant]
    rows = []
    for j in range(1, ctx.board.size + 1):
        terms = []
        twin = []
        for l in range(1, 7):
            j2 = ctx.board.adjacent(j, l)
            if j2:
                terms.extend(_occupancy_terms(j2))
                twin.append((1, p_(j2)))
        terms.extend(_occupancy_terms(j, -s))
        twin.append((-s, p_(j)))
        rows.append(LinearConstraint(
            tuple(terms), "<=", 6 - s, f"C6{variant}[j={j}]"))
        rows.append(LinearConstraint(
            tuple(twin), "<=", 6 - s, f"C6{variant}P[j={j}]"))
    return program.with_rows(rows)


def _designated_pose_index(tileset: TileSet, designated: Color):
    """(tile, orientation) lists keyed by the edge pair their designated
    strand occupies."""
    by_pair: dict[tuple[int, int], list[tuple[int, int]]] = {}
    for i in range(1, 11):
        for k in range(1, 7):
            pair = tileset.tile(i).oriented_strand_edges(designated, k)
            by_pair.setdefault(pair, []).append((i, k))
    return by_pair


def _cyc(e: int) -> int:
    return (e - 1) % 6 + 1


def _pair(a: int, b: int) -> tuple[int, int]:
    a, b = _cyc(a), _cyc(b)
    return (a, b) if a < b else (b, a)


def add_pattern_cuts(program: IntegerProgram, L: int) -> IntegerProgram:
    """Static rows forbidding designated loops of 3, 4 or 5 tiles.

    Rows are generated from the tileset: a short loop forces a specific
    local pattern of designated strands, and under the color-matching and
    boundary rules the pattern is already implied by placements on two
    (L=3,4) or three (L=5) mutually adjacent places, so bounding those
    placements is exact.
    """
    if L not in (3, 4, 5):
        raise ValueError("cut length must be 3, 4 or 5")
    ctx = program.context
    board, designated = ctx.board, ctx.designated
    by_pair = _designated_pose_index(ctx.tileset, designated)
    rows: list[LinearConstraint] = []

    def support(j: int, pair: tuple[int, int]):
        return [(1, x_(i, j, k)) for i, k in by_pair.get(pair, [])]

    if L == 3:
        # two tight strands meeting across an edge, both bending toward a
        # common third place
        for j in range(1, board.size + 1):
            for e in (1, 2, 3):
                j2 = board.adjacent(j, e)
                if not j2:
                    continue
                o = opposite(e)
                for side, pj, pj2 in (
                    ("ccw", _pair(e, e + 1), _pair(o, o - 1)),
                    ("cw", _pair(e, e - 1), _pair(o, o + 1)),
                ):
                    s1, s2 = support(j, pj), support(j2, pj2)
                    if s1 and s2:
                        rows.append(LinearConstraint(
                            tuple(s1 + s2), "<=", 1,
                            f"C7[j={j},e={e},s={side}]"))
    elif L == 4:
        # two gentle strands facing each other across an edge, each aimed
        # at both common neighbors
        for j in range(1, board.size + 1):
            for e in (1, 2, 3):
                j2 = board.adjacent(j, e)
                if not j2:
                    continue
                o = opposite(e)
                s1 = support(j, _pair(e - 1, e + 1))
                s2 = support(j2, _pair(o - 1, o + 1))
                if s1 and s2:
                    rows.append(LinearConstraint(
                        tuple(s1 + s2), "<=", 1, f"C8[j={j},e={e}]"))
    else:
        # a straight strand plus two gentle strands on a place triangle
        for j in range(1, board.size + 1):
            for e in (1, 2):
                jb, jc = board.adjacent(j, e), board.adjacent(j, e + 1)
                if not jb or not jc:
                    continue
                triangle = (j, jb, jc)
                for v, (p0, p1, p2) in enumerate(
                    ((j, jb, jc), (jb, jc, j), (jc, j, jb))
                ):
                    terms = _pentagon_terms(board, support, p0, p1, p2)
                    if terms is not None:
                        rows.append(LinearConstraint(
                            tuple(terms), "<=", 2, f"C9[j={j},e={e},v={v}]"))
    return program.with_rows(rows)


def _edge_towards(board: Board, a: int, target) -> int:
    """Edge of place a facing the cell `target` (axial coord)."""
    ca = board.coord(a)
    d = (target[0] - ca.q, target[1] - ca.r)
    return direction_edge(DIRECTIONS.index(d))


def _pentagon_terms(board: Board, support, p0: int, p1: int, p2: int):
    """Terms of one 5-loop row: straight strand at p0, gentle at p1/p2.

    The loop closes through two further cells tB (common neighbor of p0,p1
    away from p2) and tC (common neighbor of p0,p2 away from p1); those may
    lie off-board, which is fine since they carry no terms.
    """
    c0, c1, c2 = (board.coord(p) for p in (p0, p1, p2))

    def common(a, b, away):
        cands = []
        for d in DIRECTIONS:
            cell = (a.q + d[0], a.r + d[1])
            if any(cell == (b.q + e[0], b.r + e[1]) for e in DIRECTIONS):
                if cell != (away.q, away.r):
                    cands.append(cell)
        assert len(cands) == 1
        return cands[0]

    tb = common(c0, c1, c2)
    tc = common(c0, c2, c1)
    pair0 = _pair(_edge_towards(board, p0, tb), _edge_towards(board, p0, tc))
    pair1 = _pair(_edge_towards(board, p1, (c2.q, c2.r)),
                  _edge_towards(board, p1, tb))
    pair2 = _pair(_edge_towards(board, p2, (c1.q, c1.r)),
                  _edge_towards(board, p2, tc))
    s0, s1, s2 = support(p0, pair0), support(p1, pair1), support(p2, pair2)
    if s0 and s1 and s2:
        return s0 + s1 + s2
    return None


def set_objective(program: IntegerProgram, kind: str) -> IntegerProgram:
    """virtual: minimize x[1,1,1]; weighted: maximize sum of -ring(j) over
    placed tiles, pulling solutions toward the board center."""
    if kind == "virtual":
        return program.with_objective("min", ((1, x_(1, 1, 1)),))
    if kind == "weighted":
        board = program.context.board
        terms = [
            (-board.ring(j), x_(i, j, k))
            for j in range(1, board.size + 1)
            for i in range(1, 11)
            for k in range(1, 7)
            if board.ring(j) != 0
        ]
        return program.with_objective("max", terms)
    raise ValueError(f"bad objective {kind!r}")


def _placement_cut(placements, tag_prefix: str) -> LinearConstraint:
    triples = sorted(placements)
    key = ",".join(f"{i}.{j}.{k}" for i, j, k in triples)
    return LinearConstraint(
        tuple((1, x_(i, j, k)) for i, j, k in triples),
        "<=", len(triples) - 1, f"{tag_prefix}[{key}]")


def add_nogood(program: IntegerProgram, placements) -> IntegerProgram:
    """Exclude one exact set of simultaneous placements (i, j, k)."""
    if not placements:
        raise ValueError("empty no-good")
    return program.with_rows([_placement_cut(placements, "NOGOOD")])


def add_subloop_cut(program: IntegerProgram, placements) -> IntegerProgram:
    """Exclude the placements forming one observed designated subloop."""
    if not placements:
        raise ValueError("empty subloop cut")
    return program.with_rows([_placement_cut(placements, "SUBLOOP")])


# ---------------------------------------------------------------------------
# assignment bridges

def x_values(program: IntegerProgram, values) -> dict[tuple[int, int, int], int]:
    """The x-part of a full assignment vector, keyed (i, j, k)."""
    out = {}
    for var, val in zip(program.vars, values):
        if var.kind == "x" and val:
            out[var.idx] = int(val)
    return out


def encode_arrangement(program: IntegerProgram, placements) -> list[int]:
    """Full assignment vector realizing {place: (tile, orientation)}:
    x from the placements, y and u forced by their definitions."""
    ctx = program.context
    values = [0] * len(program.vars)

    def setv(var, val):
        values[program.column(var)] = val

    for j, (i, k) in placements.items():
        setv(x_(i, j, k), 1)
    for j in range(1, ctx.board.size + 1):
        setv(p_(j), int(j in placements))
        placed = placements.get(j)
        for l in range(1, 7):
            if placed is None:
                setv(y_(j, l), 0)
            else:
                i, k = placed
                setv(y_(j, l), oriented_color(
                    ctx.tileset.tile(i), k, l, ctx.designated))
    for j, _, j2, _ in ctx.board.edges():
        setv(u_(j, j2), int((j in placements) != (j2 in placements)))
    return values
