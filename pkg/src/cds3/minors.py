"""The sequence invariant h, the Hadwiger number, and certificate checking.

h(G) is the maximum length of a sequence: two adjacent head vertices
followed by disjoint connected vertex sets, each joined by at least one
edge to every earlier member of the sequence.  It sits between the clique
number and the Hadwiger number.  Both searches here are exact and
exponential, intended for graphs up to a small cap.

Degenerate conventions (the definition starts at an adjacent pair, so these
are fixed here): h = 0 for the empty graph, h = 1 for nonempty edgeless
graphs, and a sequence never spans components, so disconnected graphs get
the maximum over their components for free.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .graphs import Graph, _mask_connected, bit_list, bits
from .invariants import max_clique

SEARCH_CAP = 16


@dataclass(frozen=True)
class HSequence:
    """Certificate for a lower bound on h: head vertices plus tail sets (masks).

    A head of two vertices must be adjacent; the empty head is reserved for
    the length-0 certificate of the empty graph.
    """

    head: tuple[int, ...]
    tail: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.head) + len(self.tail)

    def parts(self) -> list[int]:
        return [1 << v for v in self.head] + list(self.tail)

    def to_json(self) -> dict:
        return {
            "head": list(self.head),
            "tail": [bit_list(m) for m in self.tail],
            "length": self.length,
        }


@dataclass(frozen=True)
class MinorModel:
    """Branch sets witnessing a complete-graph minor: disjoint, connected, pairwise joined."""

    parts: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.parts)

    def to_json(self) -> dict:
        return {"parts": [bit_list(m) for m in self.parts], "order": self.order}


def h_sequence_violation(G: Graph, seq: HSequence) -> Optional[str]:
    """Name of the first violated certificate clause, or None if valid."""
    full = G.vertex_mask
    adj = G.adj
    if len(seq.head) > 2:
        return "head-size"
    if not seq.head:
        return None if not seq.tail else "empty-head-with-tail"
    for v in seq.head:
        if not 0 <= v < G.n:
            return "head-out-of-range"
    if len(seq.head) == 2:
        a, b = seq.head
        if a == b:
            return "head-repeated-vertex"
        if not G.has_edge(a, b):
            return "head-not-adjacent"
    elif seq.tail:
        return "single-head-with-tail"
    used = 0
    for v in seq.head:
        used |= 1 << v
    parts = [1 << v for v in seq.head]
    for tmask in seq.tail:
        if tmask == 0:
            return "part-empty"
        if tmask & ~full:
            return "part-out-of-range"
        if tmask & used:
            return "parts-not-disjoint"
        if not _mask_connected(adj, tmask):
            return "part-not-connected"
        reach = 0
        for v in bits(tmask):
            reach |= adj[v]
        for p in parts:
            if not reach & p:
                return "part-not-joined"
        parts.append(tmask)
        used |= tmask
    return None


def verify_h_sequence(G: Graph, seq: HSequence) -> bool:
    return h_sequence_violation(G, seq) is None


def verify_minor_model(G: Graph, model: MinorModel) -> bool:
    full = G.vertex_mask
    adj = G.adj
    used = 0
    reaches = []
    for pmask in model.parts:
        if pmask == 0 or pmask & ~full or pmask & used:
            return False
        if not _mask_connected(adj, pmask):
            return False
        reach = 0
        for v in bits(pmask):
            reach |= adj[v]
        reaches.append((pmask, reach))
        used |= pmask
    for i, (pi, _) in enumerate(reaches):
        for pj, rj in reaches[i + 1:]:
            if not rj & pi:
                return False
    return True


def _subsets_lex(rem: int, adj: tuple[int, ...]) -> Iterator[tuple[int, int]]:
    """Nonempty subsets of rem with their neighborhood unions.

    Yields in lexicographic order of the sorted vertex lists, so a first-found
    search result is the lexicographically smallest one.
    """
    verts = bit_list(rem)

    def rec(prefix: int, reach: int, start: int) -> Iterator[tuple[int, int]]:
        for i in range(start, len(verts)):
            v = verts[i]
            m = prefix | (1 << v)
            r = reach | adj[v]
            yield m, r
            yield from rec(m, r, i + 1)

    yield from rec(0, 0, 0)


def h_number(G: Graph, limit: int = SEARCH_CAP) -> tuple[int, HSequence]:
    """Exact h(G) with a witness certificate (lexicographically smallest maximum).

    Depth-first over ordered part choices; prunes when the remaining vertex
    count cannot beat the best length found so far.
    """
    n = G.n
    if n > limit:
        raise ValueError(f"h search capped at {limit} vertices (got {n})")
    if n == 0:
        return 0, HSequence((), ())
    adj = G.adj
    full = G.vertex_mask
    best_len = 1
    best = HSequence((0,), ())
    tail: list[int] = []

    def extend(rem: int, parts: list[int], head: tuple[int, int]) -> None:
        nonlocal best_len, best
        cur = len(parts)
        if cur > best_len:
            best_len = cur
            best = HSequence(head, tuple(tail))
        if cur + rem.bit_count() <= best_len:
            return
        for smask, reach in _subsets_lex(rem, adj):
            if cur + rem.bit_count() <= best_len:
                return
            ok = True
            for p in parts:
                if not reach & p:
                    ok = False
                    break
            if not ok or not _mask_connected(adj, smask):
                continue
            parts.append(smask)
            tail.append(smask)
            extend(rem & ~smask, parts, head)
            parts.pop()
            tail.pop()

    for v1 in range(n):
        if 2 + (n - 2) <= best_len:
            break
        row = adj[v1] & (-1 << (v1 + 1))
        for v2 in bits(row):
            head = (v1, v2)
            if best_len < 2:
                best_len = 2
                best = HSequence(head, ())
            extend(full & ~(1 << v1) & ~(1 << v2), [1 << v1, 1 << v2], head)
    return best_len, best


def _find_minor_model(adj: tuple[int, ...], full: int, k: int) -> Optional[tuple[int, ...]]:
    """First complete-minor model with k branch sets, parts ordered by minima."""
    found: Optional[tuple[int, ...]] = None

    def rec(rem: int, parts: list[int], reaches: list[int], floor: int) -> bool:
        nonlocal found
        need = k - len(parts)
        if need == 0:
            found = tuple(parts)
            return True
        avail = rem & (-1 << (floor + 1)) if floor >= 0 else rem
        if avail.bit_count() < need:
            return False
        for reach in reaches:
            if not reach & avail:
                return False
        for smask, reach in _subsets_lex(avail, adj):
            ok = True
            for p in parts:
                if not reach & p:
                    ok = False
                    break
            if not ok or not _mask_connected(adj, smask):
                continue
            parts.append(smask)
            reaches.append(reach)
            if rec(rem & ~smask, parts, reaches, (smask & -smask).bit_length() - 1):
                return True
            parts.pop()
            reaches.pop()
        return False

    if rec(full, [], [], -1):
        return found
    return None


def hadwiger_number(G: Graph, limit: int = SEARCH_CAP) -> tuple[int, MinorModel]:
    """Exact Hadwiger number with a witness model.

    Iterative deepening on the model order, starting from the clique number
    (whose vertices are a model of singleton branch sets).
    """
    n = G.n
    if n > limit:
        raise ValueError(f"minor search capped at {limit} vertices (got {n})")
    if n == 0:
        return 0, MinorModel(())
    clique = max_clique(G)
    k = clique.bit_count()
    model = MinorModel(tuple(1 << v for v in bits(clique)))
    adj = G.adj
    full = G.vertex_mask
    while k < n:
        parts = _find_minor_model(adj, full, k + 1)
        if parts is None:
            break
        k += 1
        model = MinorModel(parts)
    return k, model
