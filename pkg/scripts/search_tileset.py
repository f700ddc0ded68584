"""Dev scratch: complete the tileset data.

The red strands and the red-backed numbers 4 and 5 are pinned by the cut
calibration; the blue/yellow pairings are free data. This script searches
for an assignment under which the desk-scale challenges are actually
solvable (n=5 on A/7, n=10 on B/12, n=15 on A/19), then prints the
winning tileset file.
"""

import itertools
import random
import sys
import time

sys.path.insert(0, "src")

from tantrix.hexboard import BoardKind, make_board
from tantrix.tiles import RED_BASE_EDGES, Color, Strand, TileSpec, TileSet, dump_tileset
from tantrix.oracle import find_one

BACKS = {1: "B", 2: "Y", 3: "B", 4: "R", 5: "R", 6: "Y", 7: "B", 8: "Y", 9: "B", 10: "R"}

FIXED_TILE2 = TileSpec(2, (
    Strand((2, 3), Color.RED), Strand((1, 4), Color.BLUE), Strand((5, 6), Color.YELLOW),
), Color.parse(BACKS[2]))


def partitions_of(rest):
    a = rest[0]
    for b in rest[1:]:
        other = [e for e in rest if e not in (a, b)]
        yield (a, b), tuple(other)


def options_for(tile_no):
    red = RED_BASE_EDGES[tile_no]
    rest = [e for e in range(1, 7) if e not in red]
    opts = []
    for p1, p2 in partitions_of(tuple(rest)):
        for c1, c2 in ((Color.BLUE, Color.YELLOW), (Color.YELLOW, Color.BLUE)):
            opts.append(TileSpec(tile_no, (
                Strand(red, Color.RED), Strand(p1, c1), Strand(p2, c2),
            ), Color.parse(BACKS[tile_no])))
    return opts


FREE = [1, 3, 4, 5, 6, 7, 8, 9, 10]
OPTIONS = {t: options_for(t) for t in FREE}

A7 = make_board(BoardKind.TYPE_A, 7)
B12 = make_board(BoardKind.TYPE_B, 12)
A19 = make_board(BoardKind.TYPE_A, 19)


def build(choice):
    tiles = {2: FIXED_TILE2}
    for t in FREE:
        tiles[t] = OPTIONS[t][choice[t]]
    keys = [tiles[i].pattern_key() for i in range(1, 11)]
    if len(set(keys)) != 10:
        return None
    return TileSet(tuple(tiles[i] for i in range(1, 11)))


def no_triple_straight(ts):
    return all(
        sorted(s.angle for s in t.strands) != [0, 0, 0] for t in ts.tiles
    )


def main():
    rng = random.Random(20120101)
    t0 = time.time()
    tried = 0
    stage_counts = [0, 0, 0, 0]
    while time.time() - t0 < 1200:
        choice = {t: rng.randrange(len(OPTIONS[t])) for t in FREE}
        tried += 1
        ts = build(choice)
        if ts is None or not no_triple_straight(ts):
            continue
        stage_counts[0] += 1
        arr5, nodes5, cap5 = find_one(5, A7, ts, node_cap=100_000)
        if arr5 is None:
            continue
        stage_counts[1] += 1
        arr10, nodes10, cap10 = find_one(10, B12, ts, node_cap=1_000_000)
        if arr10 is None:
            continue
        stage_counts[2] += 1
        t15 = time.time()
        arr15, nodes15, cap15 = find_one(15, A19, ts, node_cap=3_000_000)
        dt15 = time.time() - t15
        if arr15 is None:
            print(f"  [n15 fail/cap={cap15} nodes={nodes15} {dt15:.1f}s] choice={choice}")
            continue
        stage_counts[3] += 1
        print(f"FOUND after {tried} tries ({time.time()-t0:.1f}s), stages={stage_counts}")
        print(f"  nodes: n5={nodes5} n10={nodes10} n15={nodes15} ({dt15:.1f}s)")
        print(f"  choice={choice}")
        print(dump_tileset(ts))
        print("  n5 placements:", sorted(arr5.placements.items()))
        print("  n10 placements:", sorted(arr10.placements.items()))
        print("  n15 placements:", sorted(arr15.placements.items()))
        return
    print(f"no hit in {tried} tries, stages={stage_counts}")


if __name__ == "__main__":
    main()
