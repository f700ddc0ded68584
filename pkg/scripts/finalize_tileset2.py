"""Dev scratch: final tileset data search, restructured for speed.

Pipeline: hole-free 10-loop shapes with an A/19 C6b-compliant embedding
-> red labelings -> blue/yellow CSP on the 10-loop alone (fixes all data)
-> direct checks: pentagon solvable, B/12 hole-cycle colorable, patterns
distinct -> n=15 valid+C6b search as the final gate.
"""

import sys
import time
from collections import Counter
from itertools import combinations, permutations

sys.path.insert(0, "src")
sys.path.insert(0, "scripts")

from tantrix.hexboard import DIRECTIONS, BoardKind, direction_edge, make_board, opposite
from tantrix.tiles import TileSet, dump_tileset
from tantrix.oracle import _Search
from tantrix.validate import Arrangement, color_matching_ok, report, trace_designated

import construct_tileset as ct
from loop_shapes import enclosed_cells
from finalize_tileset import (
    A7, A19, B12, all_cycle_poses, b12_hole_cycle, csp_colorings, embeddings_on,
    labelings, pentagon_placements, placement_from_cycle, turn_angle_list,
)


def hole_free_paths():
    paths = []
    seen = set()

    def walk(pos, dir_idx, path, budget):
        if len(path) == 10:
            nxt = (pos[0] + DIRECTIONS[dir_idx][0], pos[1] + DIRECTIONS[dir_idx][1])
            if nxt != path[0]:
                return
            t = {0: 0, 1: 60, 5: 60, 2: 120, 4: 120}.get((0 - dir_idx) % 6)
            if t is None or budget.get(t, 0) != 1 or sum(budget.values()) != 1:
                return
            shape = frozenset(path)
            if shape in seen:
                return
            seen.add(shape)
            if not enclosed_cells(path):
                paths.append(list(path))
            return
        nxt = (pos[0] + DIRECTIONS[dir_idx][0], pos[1] + DIRECTIONS[dir_idx][1])
        if nxt in path:
            return
        path.append(nxt)
        for ndir in range(6):
            t = {0: 0, 1: 60, 5: 60, 2: 120, 4: 120}.get((ndir - dir_idx) % 6)
            if t is None or budget.get(t, 0) <= 0:
                continue
            budget[t] -= 1
            walk(nxt, ndir, path, budget)
            budget[t] += 1
        path.pop()

    walk((0, 0), 0, [(0, 0)], {120: 2, 60: 6, 0: 2})
    return paths


def arrangement_feasible_c15(placement, board, ts, n):
    """Colors match and all red strands closed: C1-C5-style feasibility."""
    arr = Arrangement(n, board, {board.place_at(c): placement[c] for c in placement})
    if 0 in arr.placements:
        return False
    if not color_matching_ok(arr, ts):
        return False
    _, open_ends = trace_designated(arr, ts, ts.designated_color(n))
    return open_ends == 0


def main():
    t0 = time.time()
    paths = hole_free_paths()
    shaped = []
    for p in paths:
        embs = list(embeddings_on(A19, p))
        if embs:
            shaped.append((p, embs))
    print(f"hole-free shapes: {len(paths)}, with A/19 C6b embedding: {len(shaped)}")

    hole_cycle, hole_angles = b12_hole_cycle()
    hole_labelings = list(labelings(hole_cycle, hole_angles))
    pentas = pentagon_placements()
    print(f"pentagon candidate placements: {len(pentas)}; "
          f"hole-cycle labelings: {len(hole_labelings)}")

    stats = Counter()
    for p, embs in shaped:
        emb = embs[0]
        angles = turn_angle_list(emb)
        for labels in labelings(emb, angles):
            p10 = placement_from_cycle(emb, labels)
            if p10 is None:
                stats["bad_label"] += 1
                continue
            for spec_by_tile in csp_colorings([p10], limit=60):
                stats["coloring"] += 1
                keys = [spec_by_tile[i].pattern_key() for i in range(1, 11)]
                if len(set(keys)) != 10:
                    stats["dup_pattern"] += 1
                    continue
                ts = TileSet(tuple(spec_by_tile[i] for i in range(1, 11)))
                ok5 = any(
                    report(Arrangement(5, A7, {A7.place_at(c): pp[c] for c in pp}),
                           ts).is_tantrix_solution
                    for pp in pentas
                )
                if not ok5:
                    stats["no_pentagon"] += 1
                    continue
                e1 = any(
                    (ph := placement_from_cycle(hole_cycle, hl)) is not None
                    and arrangement_feasible_c15(ph, B12, ts, 10)
                    for hl in hole_labelings
                )
                if not e1:
                    stats["no_hole_cycle"] += 1
                    continue
                stats["to_e4"] += 1
                got = []
                search = _Search(A19, ts, 15, require_valid=True,
                                 node_cap=4_000_000)

                def keep(arr):
                    for j in range(1, 20):
                        if j in arr.placements:
                            continue
                        placed = sum(
                            1 for e in range(1, 7)
                            if A19.adjacent(j, e) in arr.placements
                        )
                        if placed > 4:
                            return
                    got.append(arr)
                    search._stopped = True

                search.run(keep)
                if not got:
                    print(f"[{time.time()-t0:7.1f}s] E4 miss "
                          f"(nodes={search.nodes}, capped={search.capped}) "
                          f"stats={dict(stats)}")
                    continue
                print(f"WINNER ({time.time()-t0:.1f}s) stats={dict(stats)}")
                print(dump_tileset(ts))
                arr10 = Arrangement(10, A19,
                                    {A19.place_at(c): p10[c] for c in p10})
                print("n10 A/19 report:", report(arr10, ts).is_tantrix_solution)
                print("n10:", sorted(arr10.placements.items()))
                for pp in pentas:
                    arr5 = Arrangement(5, A7, {A7.place_at(c): pp[c] for c in pp})
                    if report(arr5, ts).is_tantrix_solution:
                        print("n5:", sorted(arr5.placements.items()))
                        break
                print("n15:", sorted(got[0].placements.items()),
                      "nodes:", search.nodes)
                return
    print(f"exhausted, stats={dict(stats)} ({time.time()-t0:.1f}s)")


if __name__ == "__main__":
    main()
