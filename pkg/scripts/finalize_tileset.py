"""Dev scratch: final tileset data search.

Constraints the shipped data must satisfy simultaneously:
  E1  the unique (10, B/12) single-loop shape (which necessarily rings two
      empty cells) is colorable -> C1-C5 model stays feasible there;
  E2  some hole-free, C6b-compliant 10-loop embedding on A/19 is colorable
      -> full recipe solves n=10;
  E3  the five-tile pentagon on A/7 is colorable -> challenge 5 works;
  E4  a C6b-compliant valid 15-solution on A/19 exists (searched last).

Red strands and backs of 4/5 are fixed a priori; tile 2 is fully fixed.
"""

import sys
import time
from collections import Counter
from itertools import combinations, permutations

sys.path.insert(0, "src")
sys.path.insert(0, "scripts")

from tantrix.hexboard import DIRECTIONS, BoardKind, direction_edge, make_board, opposite
from tantrix.tiles import RED_BASE_EDGES, Color, Strand, TileSpec, TileSet, dump_tileset
from tantrix.oracle import _Search, find_one
from tantrix.validate import Arrangement, report

import construct_tileset as ct
from loop_shapes import loop_shapes

A7 = make_board(BoardKind.TYPE_A, 7)
A19 = make_board(BoardKind.TYPE_A, 19)
B12 = make_board(BoardKind.TYPE_B, 12)

DIR_INDEX = {d: i for i, d in enumerate(DIRECTIONS)}


def rot_ccw(c):
    return (c[0] + c[1], -c[0])


def all_cycle_poses(cycle):
    """Rotations+translations of a cycle (as coordinate lists)."""
    poses = []
    cur = list(cycle)
    for _ in range(6):
        cur = [rot_ccw(c) for c in cur]
        poses.append(list(cur))
    return poses


def embeddings_on(board, cycle):
    """Yield cycles embedded on the board, C6b-compliant, hole-free."""
    coords = {tuple(c) for c in board.places}
    for pose in all_cycle_poses(cycle):
        qs = [c[0] for c in pose]
        rs = [c[1] for c in pose]
        for dq in range(-8, 9):
            for dr in range(-8, 9):
                shifted = [(q + dq, r + dr) for q, r in pose]
                cellset = set(shifted)
                if not cellset <= coords:
                    continue
                # C6b on every empty board place
                ok = True
                for c in coords - cellset:
                    placed = sum(
                        1 for d in DIRECTIONS
                        if (c[0] + d[0], c[1] + d[1]) in cellset
                    )
                    if placed > 4:
                        ok = False
                        break
                if ok:
                    yield shifted


def turn_angle_list(cycle):
    return ct.turn_angles(cycle)


def csp_colorings(placements_list, base_specs=None, limit=None):
    """Backtrack over free-tile pairings consistent with several placement
    maps at once (each is {cell: (tile, orientation)} with its own board
    implicit: matching only needs cell adjacency)."""
    shared = []
    for pi, placement in enumerate(placements_list):
        cellset = set(placement)
        for c in placement:
            for d in range(6):
                nb = (c[0] + DIRECTIONS[d][0], c[1] + DIRECTIONS[d][1])
                if nb in cellset and c < nb:
                    e = direction_edge(d)
                    shared.append((pi, c, e, nb, opposite(e)))

    tiles_needed = sorted({
        placement[c][0] for placement in placements_list for c in placement
    } | {2})
    spec_by_tile = dict(base_specs or {})
    spec_by_tile[2] = TileSpec(
        2,
        (Strand((2, 3), Color.RED), Strand((1, 4), Color.BLUE),
         Strand((5, 6), Color.YELLOW)),
        Color.parse(ct.BACKS[2]),
    )
    fixed = set(spec_by_tile)

    def consistent(decided):
        for pi, ca, ea, cb, eb in shared:
            ia, ka = placements_list[pi][ca]
            ib, kb = placements_list[pi][cb]
            if ia in decided and ib in decided:
                if spec_by_tile[ia].oriented_color_at(ka, ea) is not \
                   spec_by_tile[ib].oriented_color_at(kb, eb):
                    return False
        return True

    free = [t for t in tiles_needed if t not in fixed]
    out = []

    def rec(idx, decided):
        if limit is not None and len(out) >= limit:
            return
        if idx == len(free):
            out.append(dict(spec_by_tile))
            return
        t = free[idx]
        for opt in ct.OPTIONS[t]:
            spec_by_tile[t] = ct.spec_for(t, opt)
            if consistent(decided | {t}):
                rec(idx + 1, decided | {t})
        del spec_by_tile[t]

    if consistent(fixed):
        rec(0, frozenset(fixed))
    return out


def placement_from_cycle(cycle, labels):
    """{cell: (tile, orientation)} for a labeled red loop."""
    n = len(cycle)
    placement = {}
    for pos in range(n):
        prev_c, c, nxt = cycle[pos - 1], cycle[pos], cycle[(pos + 1) % n]
        e_in = direction_edge(DIR_INDEX[(prev_c[0] - c[0], prev_c[1] - c[1])])
        e_out = direction_edge(DIR_INDEX[(nxt[0] - c[0], nxt[1] - c[1])])
        k = ct.orientation_for_red(labels[pos], e_in, e_out)
        if k is None:
            return None
        placement[c] = (labels[pos], k)
    return placement


def labelings(cycle, angles):
    n = len(cycle)
    tights = [t for t in range(n) if angles[t] == 120]
    straights = [t for t in range(n) if angles[t] == 0]
    gentles = [t for t in range(n) if angles[t] == 60]
    for tperm in permutations(ct.TIGHT):
        for sperm in permutations(ct.STRAIGHT):
            for gperm in permutations(ct.GENTLE):
                labels = {}
                for pos, tile in zip(tights, tperm):
                    labels[pos] = tile
                for pos, tile in zip(straights, sperm):
                    labels[pos] = tile
                for pos, tile in zip(gentles, gperm):
                    labels[pos] = tile
                yield labels


def pentagon_placements():
    """All five-tile pentagon placements (cells around the A/7 center)."""
    # pentagon anchored at center cell (0,0): loop t1-B-C-t2-A with
    # A=(0,0) straight, B=east, C=northeast, t2=northwest, t1=southeast.
    A, B, C, T2, T1 = (0, 0), (1, 0), (1, -1), (0, -1), (0, 1)
    cycle = [T1, B, C, T2, A]
    angles = turn_angle_list(cycle)
    out = []
    for labels in _pentagon_labelings(cycle, angles):
        p = placement_from_cycle(cycle, labels)
        if p is not None:
            out.append(p)
    return out


def _pentagon_labelings(cycle, angles):
    n = len(cycle)
    tights = [t for t in range(n) if angles[t] == 120]
    straights = [t for t in range(n) if angles[t] == 0]
    gentles = [t for t in range(n) if angles[t] == 60]
    if len(tights) != 2 or len(straights) != 1 or len(gentles) != 2:
        return
    for tperm in permutations((2, 3)):
        for gperm in permutations((1, 4)):
            labels = {straights[0]: 5}
            for pos, tile in zip(tights, tperm):
                labels[pos] = tile
            for pos, tile in zip(gentles, gperm):
                labels[pos] = tile
            yield labels


def b12_hole_cycle():
    for empties in combinations(range(12), 2):
        cells = [ct.CELLS[i] for i in range(12) if i not in empties]
        for cycle in ct.hamiltonian_cycles(cells):
            angles = turn_angle_list(cycle)
            if angles and Counter(angles)[120] == 2 and Counter(angles)[60] == 6:
                return cycle, angles
    raise RuntimeError("no B/12 loop")


def main():
    t0 = time.time()
    shapes, examples = loop_shapes(10, {120: 2, 60: 6, 0: 2})
    free_shapes = []
    seenset = set()
    # regenerate hole-free shapes with their paths
    from loop_shapes import enclosed_cells
    def collect_paths():
        paths = []
        def walk(pos, dir_idx, path, budget):
            if len(path) == 10:
                nxt = (pos[0] + DIRECTIONS[dir_idx][0], pos[1] + DIRECTIONS[dir_idx][1])
                if nxt != path[0]:
                    return
                t = {0: 0, 1: 60, 5: 60, 2: 120, 4: 120}.get((0 - dir_idx) % 6)
                if t is None or budget.get(t, 0) != 1 or sum(budget.values()) != 1:
                    return
                shape = frozenset(path)
                if shape in seenset:
                    return
                seenset.add(shape)
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

    paths = collect_paths()
    print(f"hole-free shapes: {len(paths)}")

    a19_embeds = []
    for p in paths:
        for emb in embeddings_on(A19, p):
            a19_embeds.append(emb)
    print(f"A/19 C6b-compliant embeddings: {len(a19_embeds)} ({time.time()-t0:.1f}s)")

    hole_cycle, hole_angles = b12_hole_cycle()
    pentas = pentagon_placements()
    print(f"pentagon placements: {len(pentas)}")

    tried = 0
    for emb in a19_embeds:
        angles = turn_angle_list(emb)
        for labels in labelings(emb, angles):
            p10 = placement_from_cycle(emb, labels)
            if p10 is None:
                continue
            for penta in pentas:
                tried += 1
                colorings = csp_colorings([p10, penta], limit=20)
                for spec_by_tile in colorings:
                    keys = [spec_by_tile[i].pattern_key() for i in range(1, 11)]
                    if len(set(keys)) != 10:
                        continue
                    ts = TileSet(tuple(spec_by_tile[i] for i in range(1, 11)))
                    # E1: hole-cycle colorable under this fixed data?
                    e1 = False
                    for hl in labelings(hole_cycle, hole_angles):
                        ph = placement_from_cycle(hole_cycle, hl)
                        if ph is None:
                            continue
                        if csp_colorings([ph], base_specs=spec_by_tile, limit=1):
                            e1 = True
                            break
                    if not e1:
                        continue
                    # verify E2/E3 end to end with the real validator
                    arr10 = Arrangement(10, A19, {A19.place_at(c): p10[c] for c in p10})
                    arr5 = Arrangement(5, A7, {A7.place_at(c): penta[c] for c in penta})
                    if not report(arr10, ts).is_tantrix_solution:
                        continue
                    if not report(arr5, ts).is_tantrix_solution:
                        continue
                    # E4: some valid C6b-compliant 15-solution on A/19
                    got = []
                    search = _Search(A19, ts, 15, require_valid=True, node_cap=4_000_000)
                    def keep(arr, got=got, board=A19):
                        for j in range(1, 20):
                            if j in arr.placements:
                                continue
                            placed = sum(
                                1 for e in range(1, 7)
                                if board.adjacent(j, e) in arr.placements
                            )
                            if placed > 4:
                                return
                        got.append(arr)
                    search.run(keep, find_first=False)  # stops via _stopped hack below
                    # run() has no early stop for filtered leaves; cheap enough:
                    # cap controls runtime.
                    if not got:
                        print(f"[{time.time()-t0:7.1f}s] E4 miss "
                              f"(nodes={search.nodes} capped={search.capped})")
                        continue
                    print(f"WINNER after {tried} combos ({time.time()-t0:.1f}s)")
                    print(dump_tileset(ts))
                    print("n10 on A/19:", sorted(
                        (A19.place_at(c), v) for c, v in p10.items()))
                    print("n5 pentagon:", sorted(
                        (A7.place_at(c), v) for c, v in penta.items()))
                    print("n15:", sorted(got[0].placements.items()))
                    print("n15 count found:", len(got), "nodes:", search.nodes)
                    return
    print(f"exhausted: tried {tried}")


if __name__ == "__main__":
    main()
