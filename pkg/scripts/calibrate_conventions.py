"""Dev scratch: scan spiral/edge conventions for the pair that satisfies
the normative neighbor lookups a(4,6)=12 and a(8,5)=0 on the 19-place
type-A board. Result gets frozen into hexboard.py."""

import itertools

DIRS = ((1, 0), (1, -1), (0, -1), (-1, 0), (-1, 1), (0, 1))  # CCW from east


def spiral(count, start_dir, ccw):
    coords = [(0, 0)]
    r = 1
    while len(coords) < count:
        q, s = (DIRS[start_dir][0] * r, DIRS[start_dir][1] * r)
        for t in range(6):
            d = (start_dir + 2 + t) % 6 if ccw else (start_dir - 2 - t) % 6
            for _ in range(r):
                coords.append((q, s))
                if len(coords) == count + 1:
                    pass
                q += DIRS[d][0]
                s += DIRS[d][1]
        r += 1
    return coords[:count]


def check(start_dir, ccw, e1, edge_ccw):
    coords = spiral(19, start_dir, ccw)
    if len(set(coords)) != 19:
        return False
    index = {c: j + 1 for j, c in enumerate(coords)}

    def adj(j, l):
        d = (e1 + (l - 1)) % 6 if edge_ccw else (e1 - (l - 1)) % 6
        c = coords[j - 1]
        return index.get((c[0] + DIRS[d][0], c[1] + DIRS[d][1]), 0)

    if adj(4, 6) != 12 or adj(8, 5) != 0:
        return False
    # sanity: symmetry
    for j in range(1, 20):
        for l in range(1, 7):
            jp = adj(j, l)
            if jp and adj(jp, ((l + 2) % 6) + 1) != j:
                return False
    return True


hits = []
for s, ccw, e1, edge_ccw in itertools.product(range(6), (True, False), range(6), (True, False)):
    if check(s, ccw, e1, edge_ccw):
        hits.append((s, ccw, e1, edge_ccw))

print(f"{len(hits)} hits")
for h in hits:
    print("  start_dir=%d ccw=%s e1_dir=%d edge_ccw=%s" % h)

# show the board numbering for the first CCW-spiral, CCW-edge hit
pref = [h for h in hits if h[1] and h[3]] or hits
s, ccw, e1, edge_ccw = pref[0]
coords = spiral(19, s, ccw)
print("chosen:", pref[0])
print("ring-1 places in order:", coords[1:7])
print("ring-2 places in order:", coords[7:19])
