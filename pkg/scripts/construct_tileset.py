"""Dev scratch: constructive tileset completion.

Build the (10, B/12) solution first: enumerate Hamiltonian red loops whose
turn sequence matches the fixed red skeleton (two tight, six gentle, two
straight strands), assign tiles, then backtrack over the free blue/yellow
pairings so all touching colors match. Survivors are then screened against
(5, A/7) and (15, A/19) solvability.
"""

import sys
import time
from itertools import combinations, permutations

sys.path.insert(0, "src")

from tantrix.hexboard import DIRECTIONS, BoardKind, direction_edge, make_board, opposite
from tantrix.tiles import RED_BASE_EDGES, Color, Strand, TileSpec, TileSet
from tantrix.tiles import dump_tileset, edge_gap
from tantrix.oracle import find_one
from tantrix.validate import Arrangement, report

BACKS = {1: "B", 2: "Y", 3: "B", 4: "R", 5: "R", 6: "Y", 7: "B", 8: "Y", 9: "B", 10: "R"}

B12 = make_board(BoardKind.TYPE_B, 12)
A7 = make_board(BoardKind.TYPE_A, 7)
A19 = make_board(BoardKind.TYPE_A, 19)

CELLS = [tuple(c) for c in B12.places]
RING2 = list(range(7, 12))  # 0-based indices of ring-2 places 8..12

DIR_INDEX = {d: i for i, d in enumerate(DIRECTIONS)}

TIGHT, GENTLE, STRAIGHT = (2, 3), (1, 4, 6, 7, 8, 10), (5, 9)


def adjacency(cells):
    adj = {c: [] for c in cells}
    cellset = set(cells)
    for c in cells:
        for d in DIRECTIONS:
            nb = (c[0] + d[0], c[1] + d[1])
            if nb in cellset:
                adj[c].append(nb)
    return adj


def hamiltonian_cycles(cells):
    """All Hamiltonian cycles, deduped up to rotation/reversal."""
    adj = adjacency(cells)
    if any(len(v) < 2 for v in adj.values()):
        return
    start = cells[0]
    seen = set()
    path = [start]
    used = {start}

    def extend():
        cur = path[-1]
        if len(path) == len(cells):
            if start in adj[cur]:
                key = frozenset(
                    frozenset((path[i], path[(i + 1) % len(path)]))
                    for i in range(len(path))
                )
                if key not in seen:
                    seen.add(key)
                    yield list(path)
            return
        for nb in adj[cur]:
            if nb not in used:
                used.add(nb)
                path.append(nb)
                yield from extend()
                path.pop()
                used.discard(nb)

    yield from extend()


def turn_angles(cycle):
    """|turn| in degrees at each cycle position (0/60/120), or None."""
    n = len(cycle)
    out = []
    for t in range(n):
        prev_c, c, nxt = cycle[t - 1], cycle[t], cycle[(t + 1) % n]
        d_in = DIR_INDEX[(c[0] - prev_c[0], c[1] - prev_c[1])]
        d_out = DIR_INDEX[(nxt[0] - c[0], nxt[1] - c[1])]
        diff = (d_out - d_in) % 6
        if diff == 3:
            return None  # U-turn, impossible strand
        out.append({0: 0, 1: 60, 5: 60, 2: 120, 4: 120}[diff])
    return out


def strand_gap_for_angle(angle):
    return {0: 3, 60: 2, 120: 1}[angle]


def orientation_for_red(tile_no, e1, e2):
    """Orientation putting the red strand on place edges {e1,e2}, else None."""
    b1, b2 = RED_BASE_EDGES[tile_no]
    for k in range(1, 7):
        o1, o2 = (b1 - k) % 6 + 1, (b2 - k) % 6 + 1
        if {o1, o2} == {e1, e2}:
            return k
    return None


def loop_assignments(cycle, angles):
    """Yield placements {cell: (tile, orientation)} for one tile labelling."""
    n = len(cycle)
    tights = [t for t in range(n) if angles[t] == 120]
    straights = [t for t in range(n) if angles[t] == 0]
    gentles = [t for t in range(n) if angles[t] == 60]
    if len(tights) != 2 or len(straights) != 2 or len(gentles) != 6:
        return
    for tperm in permutations(TIGHT):
        for sperm in permutations(STRAIGHT):
            for gperm in permutations(GENTLE):
                placement = {}
                ok = True
                labels = {}
                for pos, tile in zip(tights, tperm):
                    labels[pos] = tile
                for pos, tile in zip(straights, sperm):
                    labels[pos] = tile
                for pos, tile in zip(gentles, gperm):
                    labels[pos] = tile
                for pos in range(n):
                    prev_c, c, nxt = cycle[pos - 1], cycle[pos], cycle[(pos + 1) % n]
                    e_in = direction_edge(DIR_INDEX[(prev_c[0] - c[0], prev_c[1] - c[1])])
                    e_out = direction_edge(DIR_INDEX[(nxt[0] - c[0], nxt[1] - c[1])])
                    k = orientation_for_red(labels[pos], e_in, e_out)
                    if k is None:
                        ok = False
                        break
                    placement[c] = (labels[pos], k)
                if ok:
                    yield placement


def free_color_options(tile_no):
    red = RED_BASE_EDGES[tile_no]
    rest = [e for e in range(1, 7) if e not in red]
    a = rest[0]
    for b in rest[1:]:
        p1 = (a, b)
        p2 = tuple(e for e in rest if e not in p1)
        for c1, c2 in ((Color.BLUE, Color.YELLOW), (Color.YELLOW, Color.BLUE)):
            yield (Strand(p1, c1), Strand(p2, c2))


OPTIONS = {t: list(free_color_options(t)) for t in range(1, 11) if t != 2}
TILE2_STRANDS = (Strand((1, 4), Color.BLUE), Strand((5, 6), Color.YELLOW))


def spec_for(tile_no, opt):
    strands = (Strand(RED_BASE_EDGES[tile_no], Color.RED),) + opt
    return TileSpec(tile_no, strands, Color.parse(BACKS[tile_no]))


def color_csp(placement):
    """Backtrack over free tiles' blue/yellow pairings so every touching
    pair of edges in `placement` matches. Yields tilesets."""
    cells = list(placement)
    cellset = set(cells)
    # shared non-red edges: (cellA, edgeA, cellB, edgeB)
    shared = []
    for c in cells:
        for d in range(6):
            nb = (c[0] + DIRECTIONS[d][0], c[1] + DIRECTIONS[d][1])
            if nb in cellset and c < nb:
                e = direction_edge(d)
                shared.append((c, e, nb, opposite(e)))

    order = [placement[c][0] for c in cells]  # tiles in cell order
    tiles_present = sorted(set(order))

    def color_at(spec_by_tile, cell, edge):
        i, k = placement[cell]
        return spec_by_tile[i].oriented_color_at(k, edge)

    def consistent(spec_by_tile, decided):
        for ca, ea, cb, eb in shared:
            ia, ib = placement[ca][0], placement[cb][0]
            if ia in decided and ib in decided:
                if color_at(spec_by_tile, ca, ea) is not color_at(spec_by_tile, cb, eb):
                    return False
        return True

    spec_by_tile = {2: TileSpec(2, (Strand((2, 3), Color.RED),) + TILE2_STRANDS,
                                Color.parse(BACKS[2]))}

    def rec(idx, decided):
        if idx == len(tiles_present):
            yield dict(spec_by_tile)
            return
        tile = tiles_present[idx]
        if tile == 2:
            if consistent(spec_by_tile, decided | {2}):
                yield from rec(idx + 1, decided | {2})
            return
        for opt in OPTIONS[tile]:
            spec_by_tile[tile] = spec_for(tile, opt)
            if consistent(spec_by_tile, decided | {tile}):
                yield from rec(idx + 1, decided | {tile})
        del spec_by_tile[tile]

    yield from rec(0, frozenset({2} if 2 in spec_by_tile else frozenset()))


def complete_tileset(spec_by_tile):
    """Fill tiles missing from the loop (none for n=10) arbitrarily."""
    for choice in _complete(spec_by_tile, [t for t in range(1, 11) if t not in spec_by_tile]):
        keys = [choice[i].pattern_key() for i in range(1, 11)]
        if len(set(keys)) == 10:
            yield TileSet(tuple(choice[i] for i in range(1, 11)))


def _complete(base, missing):
    if not missing:
        yield dict(base)
        return
    t, rest = missing[0], missing[1:]
    for opt in OPTIONS[t]:
        base[t] = spec_for(t, opt)
        yield from _complete(base, rest)
    del base[t]


def main():
    t0 = time.time()
    checked = 0
    winners = 0
    for empties in combinations(RING2, 2):
        cells = [CELLS[i] for i in range(12) if i not in empties]
        # skip boards where an empty or the pair would be enclosed
        for cycle in hamiltonian_cycles(cells):
            angles = turn_angles(cycle)
            if angles is None:
                continue
            for placement in loop_assignments(cycle, angles):
                for spec_by_tile in color_csp(placement):
                    for ts in complete_tileset(spec_by_tile):
                        checked += 1
                        # confirm the designed solution validates
                        arr = Arrangement(
                            10, B12,
                            {B12.place_at(c): placement[c] for c in placement},
                        )
                        rep = report(arr, ts)
                        if not rep.is_tantrix_solution:
                            continue
                        arr5, n5, _ = find_one(5, A7, ts, node_cap=100_000)
                        if arr5 is None:
                            continue
                        t15 = time.time()
                        arr15, n15, cap15 = find_one(15, A19, ts, node_cap=3_000_000)
                        dt = time.time() - t15
                        if arr15 is None:
                            print(f"[{time.time()-t0:7.1f}s] n15 miss (cap={cap15} "
                                  f"nodes={n15} {dt:.1f}s)")
                            continue
                        winners += 1
                        print(f"WINNER #{winners} after {checked} tilesets "
                              f"({time.time()-t0:.1f}s; n15 {n15} nodes {dt:.1f}s)")
                        print(dump_tileset(ts))
                        print("n10:", sorted(arr.placements.items()))
                        print("n5:", sorted(arr5.placements.items()))
                        print("n15:", sorted(arr15.placements.items()))
                        if winners >= 3:
                            return
    print(f"done: {checked} tilesets, {winners} winners, {time.time()-t0:.1f}s")


if __name__ == "__main__":
    main()
