"""Independent brute-force oracles for the test suite.

Deliberately written against a different representation (sets of ints and
edge sets instead of bitmask rows) and without pruning, so that agreement
with the library is meaningful.
"""

from itertools import combinations, permutations


def edges_of(g):
    return {(u, v) for u in range(g.n) for v in range(u + 1, g.n) if (g.adj[u] >> v) & 1}


def g6_reference_encode(n, edges):
    """graph6 encoding straight from the format description.

    Header byte 63+n (or '~' plus three 6-bit bytes for n >= 63), then the
    upper triangle column by column, 6 bits per byte, zero padded.
    """
    if n <= 62:
        out = chr(63 + n)
    else:
        out = "~" + chr(63 + (n >> 12)) + chr(63 + ((n >> 6) & 63)) + chr(63 + (n & 63))
    bits = ""
    for col in range(1, n):
        for row in range(col):
            bits += "1" if ((row, col) in edges or (col, row) in edges) else "0"
    while len(bits) % 6:
        bits += "0"
    for i in range(0, len(bits), 6):
        out += chr(63 + int(bits[i : i + 6], 2))
    return out.encode("ascii")


def naive_adjacent(g, u, v):
    return (g.adj[u] >> v) & 1 == 1


def naive_independence_number(g):
    best = 0
    for r in range(g.n, 0, -1):
        for sub in combinations(range(g.n), r):
            if all(not naive_adjacent(g, a, b) for a, b in combinations(sub, 2)):
                return r
    return best


def naive_clique_number(g):
    for r in range(g.n, 0, -1):
        for sub in combinations(range(g.n), r):
            if all(naive_adjacent(g, a, b) for a, b in combinations(sub, 2)):
                return r
    return 0


def naive_is_simplicial(g, v):
    nbrs = [u for u in range(g.n) if naive_adjacent(g, u, v)]
    return all(naive_adjacent(g, a, b) for a, b in combinations(nbrs, 2))


def naive_has_claw(g):
    for center in range(g.n):
        nbrs = [u for u in range(g.n) if naive_adjacent(g, center, u)]
        for trio in combinations(nbrs, 3):
            if all(not naive_adjacent(g, a, b) for a, b in combinations(trio, 2)):
                return True
    return False


def naive_has_induced_cycle(g, k):
    for sub in combinations(range(g.n), k):
        subset = set(sub)
        counts = {v: sum(1 for u in subset if u != v and naive_adjacent(g, u, v)) for v in subset}
        if any(c != 2 for c in counts.values()):
            continue
        if sum(1 for a, b in combinations(sub, 2) if naive_adjacent(g, a, b)) != k:
            continue
        # 2-regular with k edges on k vertices: a single cycle iff connected
        if _set_connected(g, subset):
            return True
    return False


def _set_connected(g, vertices):
    vs = set(vertices)
    if not vs:
        return True
    seen = {min(vs)}
    frontier = [min(vs)]
    while frontier:
        v = frontier.pop()
        for u in vs:
            if u not in seen and naive_adjacent(g, u, v):
                seen.add(u)
                frontier.append(u)
    return seen == vs


def naive_components(g):
    left = set(range(g.n))
    comps = []
    while left:
        v = min(left)
        comp = {v}
        frontier = [v]
        while frontier:
            x = frontier.pop()
            for u in list(left):
                if u not in comp and naive_adjacent(g, u, x):
                    comp.add(u)
                    frontier.append(u)
        comps.append(comp)
        left -= comp
    return comps


def naive_is_cds(g, dset):
    dset = set(dset)
    for v in range(g.n):
        if v not in dset and not any(naive_adjacent(g, v, d) for d in dset):
            return False
    for comp in naive_components(g):
        part = dset & comp
        if not part or not _set_connected(g, part):
            return False
    return True


def naive_min_cds_size(g):
    for r in range(1, g.n + 1):
        for sub in combinations(range(g.n), r):
            if naive_is_cds(g, sub):
                return r
    return 0


def naive_h(g):
    """Maximum sequence length by unpruned recursion over frozensets."""
    n = g.n
    if n == 0:
        return 0
    verts = set(range(n))

    def joined(part, earlier):
        return any(naive_adjacent(g, a, b) for a in part for b in earlier)

    def grow(remaining, parts):
        best = len(parts)
        for r in range(1, len(remaining) + 1):
            for sub in combinations(sorted(remaining), r):
                if not _set_connected(g, sub):
                    continue
                if all(joined(sub, p) for p in parts):
                    best = max(best, grow(remaining - set(sub), parts + [set(sub)]))
        return best

    best = 1
    for a in range(n):
        for b in range(a + 1, n):
            if naive_adjacent(g, a, b):
                best = max(best, grow(verts - {a, b}, [{a}, {b}]))
    return best


def naive_eta(g):
    """Largest complete minor by unpruned recursion over branch-set families."""
    n = g.n
    if n == 0:
        return 0

    def joined(pa, pb):
        return any(naive_adjacent(g, a, b) for a in pa for b in pb)

    def grow(remaining, parts):
        best = len(parts)
        for r in range(1, len(remaining) + 1):
            for sub in combinations(sorted(remaining), r):
                if not _set_connected(g, sub):
                    continue
                if all(joined(set(sub), p) for p in parts):
                    best = max(best, grow(remaining - set(sub), parts + [set(sub)]))
        return best

    return grow(set(range(n)), [])
