"""End-to-end solve loop: build, solve, validate, cut, re-solve.

The weighted objective is realized as a roundness sweep: a target row
caps the total ring distance of occupied places, starting at the best
conceivable value and relaxing one step at a time. Each target is solved
to first feasibility; designated subloops and holes found by the
validator turn into cuts and the target is retried. Cuts accumulate
across targets, so nothing is ever rediscovered. Relaxing the target
exhaustively down to the weakest possible value keeps the Infeasible
verdict exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .hexboard import Board
from .model import (
    IntegerProgram,
    LinearConstraint,
    ModelOptions,
    add_nogood,
    add_subloop_cut,
    build_model,
    p_,
    x_values,
)
from .solver import SolveStatus, SolverConfig, solve
from .tiles import TileSet
from .validate import Arrangement, ValidationReport, decode, report


@dataclass(frozen=True)
class DriveConfig:
    c6: str | None = "b"
    cuts: frozenset[int] = frozenset({3, 4, 5})
    objective: str = "weighted"
    max_iterations: int = 120
    solver: SolverConfig = field(default_factory=lambda: SolverConfig(
        node_budget=10_000_000))
    # "rely-on-c6": holes are expected to be rare (C6 fights them), and a
    # hole that still appears is cut away by a no-good over its bounding
    # wall, which may discard unrelated solutions containing that wall.
    # "no-good": only the exact offending assignment is excluded.
    hole_handling: str = "rely-on-c6"

    def __post_init__(self):
        if self.max_iterations < 1:
            raise ValueError("need at least one iteration")
        if self.hole_handling not in ("rely-on-c6", "no-good"):
            raise ValueError(f"bad hole handling {self.hole_handling!r}")


@dataclass(frozen=True)
class DriveResult:
    status: str                       # "solved", "exhausted" or "infeasible"
    arrangement: Arrangement | None
    report: ValidationReport | None
    iterations: int
    cuts_added: list[str]
    progress: list[dict]

    @property
    def solved(self) -> bool:
        return self.status == "solved"


def guard_cut_lengths(n: int, cuts) -> frozenset[int]:
    """Drop the cut length equal to n: a loop of exactly n tiles is the
    solution, not a subloop."""
    return frozenset(L for L in cuts if L != n)


def _ring_targets(board: Board, n: int, objective: str) -> list[int | None]:
    """Roundness targets, tightest first; None means no target row."""
    if objective != "weighted":
        return [None]
    rings = sorted(board.ring(j) for j in range(1, board.size + 1))
    best = sum(rings[:n])
    worst = sum(rings[-n:])
    return list(range(best, worst + 1))


def _target_row(board: Board, target: int) -> LinearConstraint:
    terms = [(-board.ring(j), p_(j))
             for j in range(1, board.size + 1) if board.ring(j)]
    return LinearConstraint(tuple(terms), ">=", -target,
                            f"OBJTARGET[{target}]")


def solve_tantrix(
    n: int, board: Board, tileset: TileSet, config: DriveConfig = DriveConfig()
) -> DriveResult:
    if board.size <= n:
        raise ValueError(f"board size {board.size} must exceed challenge {n}")

    base = build_model(n, board, tileset, ModelOptions(
        c6=config.c6,
        cuts=guard_cut_lengths(n, config.cuts),
        objective=config.objective,
    ))

    progress: list[dict] = []
    cuts_added: list[str] = []
    iterations = 0
    best_arr: Arrangement | None = None
    best_rep: ValidationReport | None = None
    all_infeasible = True

    for target in _ring_targets(board, n, config.objective):
        prog = base if target is None else base.with_rows(
            [_target_row(board, target)])
        while True:
            if iterations >= config.max_iterations:
                return DriveResult("exhausted", best_arr, best_rep,
                                   iterations, cuts_added, progress)
            iterations += 1
            outcome = solve(prog, config.solver)
            record = {
                "iteration": iterations,
                "target": target,
                "solver_status": outcome.status.value,
                "nodes": outcome.stats.nodes,
            }
            if outcome.status is SolveStatus.INFEASIBLE:
                progress.append(record)
                break  # next target
            if outcome.status is SolveStatus.BUDGET_EXHAUSTED:
                progress.append(record)
                return DriveResult("exhausted", best_arr, best_rep,
                                   iterations, cuts_added, progress)
            all_infeasible = False
            values = [outcome.assignment[v] for v in prog.vars]
            arr = decode(x_values(prog, values), board, tileset, n)
            rep = report(arr, tileset)
            best_arr, best_rep = arr, rep
            record.update({
                "loops": len(rep.designated_loops),
                "holes": len(rep.holes),
                "connected": rep.connected,
                "valid": rep.is_tantrix_solution,
            })
            if rep.is_tantrix_solution:
                progress.append(record)
                return DriveResult("solved", arr, rep,
                                   iterations, cuts_added, progress)

            new_rows: list[str] = []
            for loop in rep.designated_loops:
                if len(loop) < n:
                    placements = [(arr.placements[j][0], j,
                                   arr.placements[j][1]) for j in loop]
                    cut = add_subloop_cut(prog, placements)
                    new_rows.extend(cut.tags() - prog.tags())
                    prog = cut
                    base = add_subloop_cut(base, placements)
            for hole in rep.holes:
                if config.hole_handling == "rely-on-c6":
                    wall = sorted(
                        j for j in arr.placements
                        if any(board.place_at(cell.neighbor(d)) == j
                               for cell in hole for d in range(6))
                    )
                    placements = [(arr.placements[j][0], j,
                                   arr.placements[j][1]) for j in wall]
                else:
                    placements = [(i, j, k)
                                  for j, (i, k) in arr.placements.items()]
                cut = add_nogood(prog, placements)
                new_rows.extend(cut.tags() - prog.tags())
                prog = cut
                base = add_nogood(base, placements)
            if not new_rows:
                # flaw without a dedicated family (e.g. disconnected):
                # exclude this exact assignment
                placements = [(i, j, k)
                              for j, (i, k) in arr.placements.items()]
                cut = add_nogood(prog, placements)
                new_rows.extend(cut.tags() - prog.tags())
                prog = cut
                base = add_nogood(base, placements)
            cuts_added.extend(new_rows)
            record["cuts"] = new_rows
            progress.append(record)

    status = "infeasible" if all_infeasible else "exhausted"
    return DriveResult(status, best_arr, best_rep,
                       iterations, cuts_added, progress)
