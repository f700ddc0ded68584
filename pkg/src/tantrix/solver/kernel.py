"""Search kernel: depth-first branch and bound with integer bound
propagation, written against plain numpy arrays so the same function body
runs JIT-compiled under numba or as pure Python.

Backend selection: numba when importable, unless TANTRIX_DISABLE_NUMBA is
set to a non-empty value. Both paths execute identical arithmetic and
produce identical search trees, node counts and assignments.

Row activity bounds (min/max of each row under current variable bounds)
are maintained incrementally on every bound change and restored on
backtracking, so processing a queued row is O(1) until a tightening scan
is actually warranted.

The kernel is resumable: all search state lives in caller-owned arrays, a
call runs at most `slice_budget` branchings and then yields, so the caller
can enforce wall-clock and node budgets and grow the trail on demand.
"""

from __future__ import annotations

import os

import numpy as np

NEG_INF = -(1 << 62)
POS_INF = 1 << 62

# kernel exit statuses
PAUSED = 0
EXHAUSTED = 1
FOUND_FIRST = 2
TRAIL_FULL = 3

# state vector slots
S_ROOT_DONE = 0
S_TRAIL = 1
S_NDEC = 2
S_NODES = 3
S_PROPS = 4
S_HAS_BEST = 5
S_BEST = 6
S_QLEN = 7
STATE_SLOTS = 8


def _search(row_ptr, row_col, row_coef, row_lo, row_hi, row_maxterm,
            col_ptr, col_row, col_coef,
            lb, ub, order, obj,
            prove_optimal, first_only,
            act_min, act_max,
            trail_var, trail_side, trail_old,
            dec_var, dec_try, dec_phase, dec_mark, dec_pos,
            queue, in_queue,
            best_x, state, slice_budget):
    nv = lb.shape[0]
    nrows = row_lo.shape[0]

    def drop_queue():
        while state[S_QLEN] > 0:
            state[S_QLEN] -= 1
            in_queue[queue[state[S_QLEN]]] = 0

    def set_lb(v, new):
        """Raise lb[v], logging and updating activities; no conflict check."""
        t = state[S_TRAIL]
        trail_var[t] = v
        trail_side[t] = 0
        trail_old[t] = lb[v]
        state[S_TRAIL] = t + 1
        delta = new - lb[v]
        lb[v] = new
        for p in range(col_ptr[v], col_ptr[v + 1]):
            r = col_row[p]
            c = col_coef[p]
            if c > 0:
                act_min[r] += c * delta
            else:
                act_max[r] += c * delta
            if in_queue[r] == 0:
                in_queue[r] = 1
                queue[state[S_QLEN]] = r
                state[S_QLEN] += 1

    def set_ub(v, new):
        """Lower ub[v], logging and updating activities; no conflict check."""
        t = state[S_TRAIL]
        trail_var[t] = v
        trail_side[t] = 1
        trail_old[t] = ub[v]
        state[S_TRAIL] = t + 1
        delta = new - ub[v]
        ub[v] = new
        for p in range(col_ptr[v], col_ptr[v + 1]):
            r = col_row[p]
            c = col_coef[p]
            if c > 0:
                act_max[r] += c * delta
            else:
                act_min[r] += c * delta
            if in_queue[r] == 0:
                in_queue[r] = 1
                queue[state[S_QLEN]] = r
                state[S_QLEN] += 1

    def undo_to(mark):
        while state[S_TRAIL] > mark:
            state[S_TRAIL] -= 1
            t = state[S_TRAIL]
            v = trail_var[t]
            old = trail_old[t]
            if trail_side[t] == 0:
                delta = old - lb[v]
                lb[v] = old
                for p in range(col_ptr[v], col_ptr[v + 1]):
                    r = col_row[p]
                    c = col_coef[p]
                    if c > 0:
                        act_min[r] += c * delta
                    else:
                        act_max[r] += c * delta
            else:
                delta = old - ub[v]
                ub[v] = old
                for p in range(col_ptr[v], col_ptr[v + 1]):
                    r = col_row[p]
                    c = col_coef[p]
                    if c > 0:
                        act_max[r] += c * delta
                    else:
                        act_min[r] += c * delta

    def propagate():
        """Process queued rows to fixpoint; returns True on conflict."""
        while state[S_QLEN] > 0:
            state[S_QLEN] -= 1
            r = queue[state[S_QLEN]]
            in_queue[r] = 0
            state[S_PROPS] += 1
            lo = row_lo[r]
            hi = row_hi[r]
            if act_min[r] > hi or act_max[r] < lo:
                drop_queue()
                return True
            if row_maxterm[r] <= hi - act_min[r] and \
               row_maxterm[r] <= act_max[r] - lo:
                continue  # no single term can leave the feasible band
            for p in range(row_ptr[r], row_ptr[r + 1]):
                c = row_coef[p]
                v = row_col[p]
                if ub[v] == lb[v]:
                    continue
                if c > 0:
                    if c * (ub[v] - lb[v]) > hi - act_min[r]:
                        new_ub = lb[v] + (hi - act_min[r]) // c
                        set_ub(v, new_ub)
                        if new_ub < lb[v]:
                            drop_queue()
                            return True
                    if c * (ub[v] - lb[v]) > act_max[r] - lo:
                        new_lb = ub[v] - (act_max[r] - lo) // c
                        set_lb(v, new_lb)
                        if new_lb > ub[v]:
                            drop_queue()
                            return True
                else:
                    cc = -c
                    if cc * (ub[v] - lb[v]) > hi - act_min[r]:
                        new_lb = ub[v] - (hi - act_min[r]) // cc
                        set_lb(v, new_lb)
                        if new_lb > ub[v]:
                            drop_queue()
                            return True
                    if cc * (ub[v] - lb[v]) > act_max[r] - lo:
                        new_ub = lb[v] + (act_max[r] - lo) // cc
                        set_ub(v, new_ub)
                        if new_ub < lb[v]:
                            drop_queue()
                            return True
                if act_min[r] > hi or act_max[r] < lo:
                    drop_queue()
                    return True
        return False

    def backtrack():
        """Move to the next open branch; returns False when tree is done."""
        while state[S_NDEC] > 0:
            d = state[S_NDEC] - 1
            undo_to(dec_mark[d])
            if dec_phase[d] == 0:
                dec_phase[d] = 1
                v = dec_var[d]
                set_ub(v, dec_try[d] - 1)
                if lb[v] > ub[v]:
                    continue
                state[S_NODES] += 1
                dec_pos[d + 1] = dec_pos[d]
                if not propagate():
                    return True
            else:
                state[S_NDEC] = d
        return False

    # root: compute activities, queue everything, propagate once
    if state[S_ROOT_DONE] == 0:
        state[S_ROOT_DONE] = 1
        for r in range(nrows):
            mn = np.int64(0)
            mx = np.int64(0)
            for p in range(row_ptr[r], row_ptr[r + 1]):
                c = row_coef[p]
                v = row_col[p]
                if c > 0:
                    mn += c * lb[v]
                    mx += c * ub[v]
                else:
                    mn += c * ub[v]
                    mx += c * lb[v]
            act_min[r] = mn
            act_max[r] = mx
            in_queue[r] = 1
            queue[r] = r
        state[S_QLEN] = nrows
        if propagate():
            return EXHAUSTED

    spent = 0
    while True:
        if spent >= slice_budget:
            return PAUSED
        if state[S_TRAIL] + 8 * nv + 32 > trail_var.shape[0]:
            return TRAIL_FULL

        level = state[S_NDEC]
        pos = dec_pos[level]
        while pos < nv and lb[order[pos]] == ub[order[pos]]:
            pos += 1
        dec_pos[level] = pos

        if pos == nv:
            val = np.int64(0)
            for v in range(nv):
                if obj[v] != 0:
                    val += obj[v] * lb[v]
            if state[S_HAS_BEST] == 0 or val > state[S_BEST]:
                state[S_HAS_BEST] = 1
                state[S_BEST] = val
                for v in range(nv):
                    best_x[v] = lb[v]
            if first_only:
                return FOUND_FIRST
            if not backtrack():
                return EXHAUSTED
            continue

        if prove_optimal == 1 and state[S_HAS_BEST] == 1:
            bound = np.int64(0)
            for v in range(nv):
                if obj[v] > 0:
                    bound += obj[v] * ub[v]
                elif obj[v] < 0:
                    bound += obj[v] * lb[v]
            if bound <= state[S_BEST]:
                if not backtrack():
                    return EXHAUSTED
                continue

        v = order[pos]
        d = state[S_NDEC]
        dec_var[d] = v
        dec_try[d] = ub[v]
        dec_phase[d] = 0
        dec_mark[d] = state[S_TRAIL]
        dec_pos[d + 1] = pos
        state[S_NDEC] = d + 1
        set_lb(v, ub[v])
        state[S_NODES] += 1
        spent += 1
        if propagate():
            if not backtrack():
                return EXHAUSTED


def _make_backend():
    if os.environ.get("TANTRIX_DISABLE_NUMBA"):
        return _search, "python"
    try:
        from numba import njit
    except ImportError:
        return _search, "python"
    return njit(cache=True)(_search), "numba"


search, BACKEND = _make_backend()
