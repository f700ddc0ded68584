"""Dev scratch: which closed strand loops exist for a given turn budget,
and how many lattice cells they enclose."""

import sys
from collections import Counter

sys.path.insert(0, "src")
from tantrix.hexboard import DIRECTIONS

TURN = {0: 0, 1: 60, 5: 60, 2: 120, 4: 120}


def enclosed_cells(cells):
    cells = set(cells)
    qs = [c[0] for c in cells]
    rs = [c[1] for c in cells]
    qlo, qhi, rlo, rhi = min(qs) - 1, max(qs) + 1, min(rs) - 1, max(rs) + 1
    outside = set()
    stack = [(q, r) for q in range(qlo, qhi + 1) for r in range(rlo, rhi + 1)
             if (q in (qlo, qhi) or r in (rlo, rhi)) and (q, r) not in cells]
    outside.update(stack)
    while stack:
        q, r = stack.pop()
        for dq, dr in DIRECTIONS:
            nb = (q + dq, r + dr)
            if qlo <= nb[0] <= qhi and rlo <= nb[1] <= rhi \
               and nb not in cells and nb not in outside:
                outside.add(nb)
                stack.append(nb)
    return [(q, r) for q in range(qlo, qhi + 1) for r in range(rlo, rhi + 1)
            if (q, r) not in cells and (q, r) not in outside]


def loop_shapes(length, budget):
    """Distinct cell sets of closed loops with the exact turn multiset."""
    seen = set()
    results = Counter()
    examples = {}

    def walk(pos, dir_idx, path, budget):
        if len(path) == length:
            nxt = (pos[0] + DIRECTIONS[dir_idx][0], pos[1] + DIRECTIONS[dir_idx][1])
            if nxt != path[0]:
                return
            t = TURN.get((0 - dir_idx) % 6)
            if t is None or budget.get(t, 0) != 1 or sum(budget.values()) != 1:
                return
            shape = frozenset(path)
            if shape in seen:
                return
            seen.add(shape)
            enc = len(enclosed_cells(path))
            results[enc] += 1
            examples.setdefault(enc, list(path))
            return
        nxt = (pos[0] + DIRECTIONS[dir_idx][0], pos[1] + DIRECTIONS[dir_idx][1])
        if nxt in path:
            return
        path.append(nxt)
        for ndir in range(6):
            t = TURN.get((ndir - dir_idx) % 6)
            if t is None or budget.get(t, 0) <= 0:
                continue
            budget[t] -= 1
            walk(nxt, ndir, path, budget)
            budget[t] += 1
        path.pop()

    walk((0, 0), 0, [(0, 0)], dict(budget))
    return results, examples


if __name__ == "__main__":
    length = int(sys.argv[1])
    budget = {0: int(sys.argv[4]), 60: int(sys.argv[3]), 120: int(sys.argv[2])}
    assert sum(budget.values()) == length
    results, examples = loop_shapes(length, budget)
    print(f"length {length}, budget tights={budget[120]} gentles={budget[60]} "
          f"straights={budget[0]}")
    print("enclosed-cell histogram over distinct shapes:", dict(sorted(results.items())))
    for enc in sorted(examples):
        print(f"  example enclosing {enc}:", examples[enc])
