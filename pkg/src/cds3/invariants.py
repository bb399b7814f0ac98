"""Exact structural invariants and detectors.

Everything here is exact: independence and clique numbers come from
branch-and-bound over bitmasks, forbidden-structure detectors return the
lexicographically first witness, and the connected-dominating-set oracle is
an increasing-size subset search.  No heuristics anywhere; these routines
double as the independent oracles for the constructive procedures.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Optional

from .graphs import Graph, _mask_connected, bit_list, bits


def has_independent_set(G: Graph, k: int) -> bool:
    """Decide whether G contains k pairwise nonadjacent vertices."""
    if k <= 0:
        return True
    adj = G.adj

    def rec(cand: int, need: int) -> bool:
        if need == 1:
            return cand != 0
        if cand.bit_count() < need:
            return False
        m = cand
        while m:
            b = m & -m
            m ^= b
            if rec(m & ~adj[b.bit_length() - 1], need - 1):
                return True
        return False

    return rec(G.vertex_mask, k)


def _max_independent(adj: tuple[int, ...], full: int) -> tuple[int, int]:
    """Size and witness mask of a maximum independent set (branch and bound)."""
    best_size = 0
    best_set = 0

    def rec(mask: int, cur_set: int, cur_size: int) -> None:
        nonlocal best_size, best_set
        if cur_size + mask.bit_count() <= best_size:
            return
        if mask == 0:
            best_size, best_set = cur_size, cur_set
            return
        # branch on a max-degree vertex inside mask; including it shrinks fastest
        v = -1
        vdeg = -1
        m = mask
        while m:
            b = m & -m
            m ^= b
            u = b.bit_length() - 1
            d = (adj[u] & mask).bit_count()
            if d > vdeg:
                v, vdeg = u, d
        bit = 1 << v
        rec(mask & ~adj[v] & ~bit, cur_set | bit, cur_size + 1)
        rec(mask ^ bit, cur_set, cur_size)

    rec(full, 0, 0)
    return best_size, best_set


def independence_number(G: Graph) -> int:
    return _max_independent(G.adj, G.vertex_mask)[0]


def max_independent_set(G: Graph) -> int:
    """Witness mask for independence_number (deterministic)."""
    return _max_independent(G.adj, G.vertex_mask)[1]


def clique_number(G: Graph) -> int:
    return independence_number(G.complement())


def max_clique(G: Graph) -> int:
    """Witness mask for clique_number (deterministic)."""
    return max_independent_set(G.complement())


def is_simplicial(G: Graph, v: int) -> bool:
    """True iff the neighborhood of v induces a complete graph."""
    nb = G.neighborhood(v)
    adj = G.adj
    for u in bits(nb):
        if nb & ~adj[u] & ~(1 << u):
            return False
    return True


def simplicial_vertices(G: Graph) -> int:
    """Mask of all simplicial vertices."""
    m = 0
    for v in range(G.n):
        if is_simplicial(G, v):
            m |= 1 << v
    return m


def find_claw(G: Graph) -> Optional[tuple[int, tuple[int, int, int]]]:
    """First claw as (center, sorted leaves), scanning lexicographically.

    Returns None iff G is claw-free.
    """
    adj = G.adj
    for center in range(G.n):
        nb = adj[center]
        if nb.bit_count() < 3:
            continue
        nbl = bit_list(nb)
        for i, a in enumerate(nbl[:-2]):
            rest_a = nb & ~adj[a]
            for b in nbl[i + 1:-1]:
                if (adj[a] >> b) & 1:
                    continue
                third = rest_a & ~adj[b] & ~((1 << (b + 1)) - 1)
                if third:
                    c = (third & -third).bit_length() - 1
                    return center, (a, b, c)
    return None


def find_induced_cycle(G: Graph, k: int) -> Optional[tuple[int, ...]]:
    """First chordless k-cycle in canonical form, or None.

    Canonical form: the smallest cycle vertex first, second vertex smaller
    than the last; the search visits candidates in lexicographic order, so
    the returned witness is deterministic.
    """
    if k < 4:
        raise ValueError("chordless cycle length must be at least 4")
    n, adj = G.n, G.adj
    if n < k:
        return None
    path = [0] * k

    def rec(s: int, depth: int, used: int, interior: int, above: int) -> bool:
        last = path[depth - 1]
        if depth == k - 1:
            cand = adj[last] & adj[s] & above & ~used & ~interior
            # enforce direction: closing vertex must exceed the second one
            cand &= ~((1 << (path[1] + 1)) - 1)
            if cand:
                path[depth] = (cand & -cand).bit_length() - 1
                return True
            return False
        blocked = interior | (adj[s] if depth >= 2 else 0)
        cand = adj[last] & above & ~used & ~blocked
        m = cand
        while m:
            b = m & -m
            m ^= b
            u = b.bit_length() - 1
            path[depth] = u
            nxt_interior = interior | (adj[last] if depth >= 2 else 0)
            if rec(s, depth + 1, used | b, nxt_interior, above):
                return True
        return False

    for s in range(n - k + 1):
        above = -1 << (s + 1)
        path[0] = s
        if rec(s, 1, 1 << s, 0, above):
            return tuple(path)
    return None


def is_cds(G: Graph, dmask: int) -> bool:
    """Connected-dominating-set predicate.

    True iff every vertex is in dmask or adjacent to it, and the set induces
    a connected subgraph inside every connected component of G.
    """
    if dmask & ~G.vertex_mask:
        raise ValueError("vertex set out of range")
    adj = G.adj
    cover = dmask
    for v in bits(dmask):
        cover |= adj[v]
    if cover != G.vertex_mask:
        return False
    for comp in G.components():
        if not _mask_connected(adj, dmask & comp):
            return False
    return True


def iter_cds(G: Graph) -> Iterator[int]:
    """Yield all connected dominating sets by increasing size, then lexicographic."""
    comps = G.components()
    adj = G.adj
    full = G.vertex_mask
    for size in range(1, G.n + 1):
        for combo in combinations(range(G.n), size):
            d = 0
            cover = 0
            for v in combo:
                d |= 1 << v
                cover |= adj[v]
            if (cover | d) != full:
                continue
            if all(_mask_connected(adj, d & comp) for comp in comps):
                yield d


def min_cds(G: Graph) -> int:
    """Lexicographically first minimum connected dominating set (mask).

    For a disconnected graph the per-component minima are combined, matching
    the component-wise reading of the predicate.
    """
    if G.n == 0:
        return 0
    comps = G.components()
    if len(comps) == 1:
        return next(iter_cds(G))
    out = 0
    for comp in comps:
        sub, vmap = G.induced(comp)
        best = next(iter_cds(sub))
        for v in bits(best):
            out |= 1 << vmap[v]
    return out


def min_cds_size(G: Graph) -> int:
    return min_cds(G).bit_count()


@dataclass(frozen=True)
class HypothesisReport:
    """Per-graph record of the quantities the theorem hypotheses talk about."""

    alpha: int
    connected: bool
    claw_witness: Optional[tuple[int, tuple[int, int, int]]]
    c5_witness: Optional[tuple[int, ...]]
    c7_witness: Optional[tuple[int, ...]]
    simplicial: int

    def to_json(self) -> dict:
        claw = None
        if self.claw_witness is not None:
            center, leaves = self.claw_witness
            claw = {"center": center, "leaves": list(leaves)}
        return {
            "alpha": self.alpha,
            "connected": self.connected,
            "claw": claw,
            "c5": list(self.c5_witness) if self.c5_witness else None,
            "c7": list(self.c7_witness) if self.c7_witness else None,
            "simplicial": bit_list(self.simplicial),
        }


def hypothesis_report(G: Graph) -> HypothesisReport:
    return HypothesisReport(
        alpha=independence_number(G),
        connected=G.is_connected(),
        claw_witness=find_claw(G),
        c5_witness=find_induced_cycle(G, 5) if G.n >= 5 else None,
        c7_witness=find_induced_cycle(G, 7) if G.n >= 7 else None,
        simplicial=simplicial_vertices(G),
    )
