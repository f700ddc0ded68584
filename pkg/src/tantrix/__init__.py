"""Tantrix Discovery as a 0-1 integer program: board geometry, tile data,
model compiler, embedded exact solver, independent validator, exhaustive
oracle, and a solve-validate-cut driver loop."""

from .hexboard import AxialCoord, Board, BoardKind, IllegalSize, make_board
from .tiles import (
    Color,
    FactViolation,
    ParseError,
    Strand,
    TileSet,
    TileSpec,
    default_tileset,
    designated_color,
    load_tileset,
    tile_multiplicity,
)
from .model import (
    BoardTooSmall,
    DuplicateConstraintFamily,
    IntegerProgram,
    LinearConstraint,
    ModelOptions,
    VarRef,
    add_c6,
    add_nogood,
    add_pattern_cuts,
    add_subloop_cut,
    build_model,
    set_objective,
)
from .solver import SolveOutcome, SolveStatus, SolverConfig, solve, verify_assignment
from .validate import Arrangement, ValidationReport, decode, report
from .oracle import CanonicalSolution, InstanceTooLarge, enumerate_all
from .driver import DriveConfig, DriveResult, guard_cut_lengths, solve_tantrix

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
