"""Embedded exact solver for the generated 0-1 programs.

Depth-first branch and bound with integer bound propagation on the rows.
Everything is exact int64 arithmetic; a Feasible outcome always satisfies
every constraint (verify_assignment re-checks independently in plain
Python). Infeasible is only reported after the whole tree is explored.

By default a solve returns the first incumbent: activity bounds are too
weak to prove weighted-objective optimality at interesting sizes, and the
driver only needs feasible candidates (the objective still steers the
dive through the branching order). `prove_optimal` turns on incumbent
pruning and full exploration.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from enum import Enum
from typing import Mapping

import numpy as np

from ..model import IntegerProgram, VarRef
from . import kernel
from .kernel import BACKEND

__all__ = [
    "SolverConfig", "SolveOutcome", "SolveStatus", "SolveStats",
    "solve", "verify_assignment", "BACKEND",
]


class SolveStatus(Enum):
    FEASIBLE = "feasible"
    INFEASIBLE = "infeasible"
    BUDGET_EXHAUSTED = "budget_exhausted"


@dataclass(frozen=True)
class SolverConfig:
    time_budget: float | None = None        # seconds, enforced per slice
    node_budget: int | None = None
    branch_rule: str = "objective-guided"   # or "first-unfixed"
    seed: int = 0                           # reserved for randomized rules
    prove_optimal: bool = False
    slice_nodes: int = 100_000

    def __post_init__(self):
        if self.time_budget is not None and self.time_budget <= 0:
            raise ValueError("time budget must be positive")
        if self.node_budget is not None and self.node_budget <= 0:
            raise ValueError("node budget must be positive")
        if self.branch_rule not in ("objective-guided", "first-unfixed"):
            raise ValueError(f"unknown branch rule {self.branch_rule!r}")


@dataclass(frozen=True)
class SolveStats:
    nodes: int
    propagations: int
    wall_time: float
    completed: bool          # search tree fully explored
    objective_value: int | None


@dataclass(frozen=True)
class SolveOutcome:
    status: SolveStatus
    assignment: dict[VarRef, int] | None
    stats: SolveStats

    @property
    def feasible(self) -> bool:
        return self.status is SolveStatus.FEASIBLE


@dataclass
class _Compiled:
    row_ptr: np.ndarray
    row_col: np.ndarray
    row_coef: np.ndarray
    row_lo: np.ndarray
    row_hi: np.ndarray
    row_maxterm: np.ndarray
    col_ptr: np.ndarray
    col_row: np.ndarray
    col_coef: np.ndarray
    obj: np.ndarray          # maximize convention
    negate_objective: bool


def _compile(program: IntegerProgram) -> _Compiled:
    nv = len(program.vars)
    nr = len(program.constraints)
    nnz = sum(len(c.terms) for c in program.constraints)
    row_ptr = np.zeros(nr + 1, dtype=np.int64)
    row_col = np.zeros(nnz, dtype=np.int64)
    row_coef = np.zeros(nnz, dtype=np.int64)
    row_lo = np.zeros(nr, dtype=np.int64)
    row_hi = np.zeros(nr, dtype=np.int64)
    p = 0
    for r, con in enumerate(program.constraints):
        for coef, var in con.terms:
            row_col[p] = program.column(var)
            row_coef[p] = coef
            p += 1
        row_ptr[r + 1] = p
        if con.sense == "<=":
            row_lo[r], row_hi[r] = kernel.NEG_INF, con.rhs
        elif con.sense == ">=":
            row_lo[r], row_hi[r] = con.rhs, kernel.POS_INF
        else:
            row_lo[r] = row_hi[r] = con.rhs

    row_maxterm = np.zeros(nr, dtype=np.int64)
    ranges = np.array(program.upper, dtype=np.int64) - np.array(program.lower, dtype=np.int64)
    for r in range(nr):
        best = 0
        for p in range(row_ptr[r], row_ptr[r + 1]):
            contrib = abs(int(row_coef[p])) * int(ranges[row_col[p]])
            if contrib > best:
                best = contrib
        row_maxterm[r] = best

    counts = np.zeros(nv + 1, dtype=np.int64)
    for c in row_col:
        counts[c + 1] += 1
    col_ptr = np.cumsum(counts)
    col_row = np.zeros(nnz, dtype=np.int64)
    col_coef = np.zeros(nnz, dtype=np.int64)
    cursor = col_ptr[:-1].copy()
    for r in range(nr):
        for p in range(row_ptr[r], row_ptr[r + 1]):
            v = row_col[p]
            col_row[cursor[v]] = r
            col_coef[cursor[v]] = row_coef[p]
            cursor[v] += 1

    negate = program.objective_sense == "min"
    obj = np.zeros(nv, dtype=np.int64)
    for coef, var in program.objective:
        obj[program.column(var)] = -coef if negate else coef
    return _Compiled(row_ptr, row_col, row_coef, row_lo, row_hi, row_maxterm,
                     np.asarray(col_ptr, dtype=np.int64),
                     np.asarray(col_row, dtype=np.int64),
                     col_coef, obj, negate)


def _branch_order(program: IntegerProgram, obj: np.ndarray, rule: str) -> np.ndarray:
    decision = [c for c, v in enumerate(program.vars) if v.kind in ("p", "x", "u")]
    rest = [c for c, v in enumerate(program.vars) if v.kind not in ("p", "x", "u")]
    if rule == "objective-guided":
        decision.sort(key=lambda c: (-obj[c], c))
    return np.array(decision + rest, dtype=np.int64)


def solve(program: IntegerProgram, config: SolverConfig = SolverConfig()) -> SolveOutcome:
    t0 = time.perf_counter()
    comp = _compile(program)
    nv = len(program.vars)
    nr = len(program.constraints)

    lb = np.array(program.lower, dtype=np.int64)
    ub = np.array(program.upper, dtype=np.int64)
    order = _branch_order(program, comp.obj, config.branch_rule)
    trail_cap = 64 * nv + 1024
    trail_var = np.zeros(trail_cap, dtype=np.int64)
    trail_side = np.zeros(trail_cap, dtype=np.int64)
    trail_old = np.zeros(trail_cap, dtype=np.int64)
    dec_var = np.zeros(nv + 2, dtype=np.int64)
    dec_try = np.zeros(nv + 2, dtype=np.int64)
    dec_phase = np.zeros(nv + 2, dtype=np.int64)
    dec_mark = np.zeros(nv + 2, dtype=np.int64)
    dec_pos = np.zeros(nv + 2, dtype=np.int64)
    queue = np.zeros(nr + 1, dtype=np.int64)
    in_queue = np.zeros(nr + 1, dtype=np.int64)
    act_min = np.zeros(nr, dtype=np.int64)
    act_max = np.zeros(nr, dtype=np.int64)
    best_x = np.zeros(nv, dtype=np.int64)
    state = np.zeros(kernel.STATE_SLOTS, dtype=np.int64)

    status = None
    while True:
        slice_budget = config.slice_nodes
        if config.node_budget is not None:
            slice_budget = min(slice_budget,
                               config.node_budget - int(state[kernel.S_NODES]))
            if slice_budget <= 0:
                status = kernel.PAUSED
                break
        rc = kernel.search(
            comp.row_ptr, comp.row_col, comp.row_coef, comp.row_lo, comp.row_hi,
            comp.row_maxterm,
            comp.col_ptr, comp.col_row, comp.col_coef,
            lb, ub, order, comp.obj,
            1 if config.prove_optimal else 0,
            0 if config.prove_optimal else 1,
            act_min, act_max,
            trail_var, trail_side, trail_old,
            dec_var, dec_try, dec_phase, dec_mark, dec_pos,
            queue, in_queue,
            best_x, state, slice_budget,
        )
        if rc == kernel.TRAIL_FULL:
            trail_cap *= 2
            trail_var = np.resize(trail_var, trail_cap)
            trail_side = np.resize(trail_side, trail_cap)
            trail_old = np.resize(trail_old, trail_cap)
            continue
        if rc == kernel.PAUSED:
            if config.node_budget is not None and \
               state[kernel.S_NODES] >= config.node_budget:
                status = rc
                break
            if config.time_budget is not None and \
               time.perf_counter() - t0 > config.time_budget:
                status = rc
                break
            continue
        status = rc
        break

    completed = status == kernel.EXHAUSTED
    has_best = bool(state[kernel.S_HAS_BEST])
    objective_value = None
    assignment = None
    if has_best:
        raw = int(state[kernel.S_BEST])
        objective_value = -raw if comp.negate_objective else raw
        assignment = {v: int(best_x[c]) for c, v in enumerate(program.vars)}
        outcome_status = SolveStatus.FEASIBLE
    elif completed:
        outcome_status = SolveStatus.INFEASIBLE
    else:
        outcome_status = SolveStatus.BUDGET_EXHAUSTED

    stats = SolveStats(
        nodes=int(state[kernel.S_NODES]),
        propagations=int(state[kernel.S_PROPS]),
        wall_time=time.perf_counter() - t0,
        completed=completed,
        objective_value=objective_value,
    )
    return SolveOutcome(outcome_status, assignment, stats)


def verify_assignment(
    program: IntegerProgram, assignment: Mapping[VarRef, int]
) -> list[str]:
    """Tags of violated rows (and bound violations), in program order."""
    violated = []
    for var, lo, hi in zip(program.vars, program.lower, program.upper):
        val = assignment[var]
        if not lo <= val <= hi:
            violated.append(f"BOUND[{var.name}]")
    for con in program.constraints:
        if not con.evaluate(assignment):
            violated.append(con.tag)
    return violated
