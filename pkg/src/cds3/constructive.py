"""Constructive dominating-set procedures with case traces.

theorem1_edge builds a dominating edge in connected graphs with independence
number 2 and no induced 5-cycle.  theorem2_cds builds a connected dominating
set of at most 4 vertices in connected claw-free graphs with independence
number 3 and no induced 7-cycle, tracing which branch of the case analysis
produced it.  corollary_cds extends the construction to any connected graph
with independence number at most 3 and no induced 7-cycle, and
build_h_certificate turns repeated extraction of such sets into a sequence
certificate bounding h from below.

Every operation checks its preconditions up front.  Branches of the case
analysis that are impossible under the preconditions raise
ContradictionError with the forbidden structure as witness; they double as
bug detectors for the precondition checks.  Inputs that no analysis branch
covers raise CaseGapError in strict mode and otherwise fall back to a
bounded exhaustive search (trace FALLBACK_SEARCH), which the theorem
guarantees will succeed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

from .graphs import Graph, _mask_connected, bit_list, bits, mask_of
from .invariants import (
    find_claw,
    find_induced_cycle,
    has_independent_set,
    is_cds,
    is_simplicial,
)
from .minors import HSequence

# Trace labels (stable strings; these appear verbatim in reports).
T1_GPRIME_EMPTY = "T1_GPRIME_EMPTY"
T1_V1_EMPTY = "T1_V1_EMPTY"
T1_V2_EMPTY = "T1_V2_EMPTY"
T2_VP12_EMPTY = "T2_VP12_EMPTY"
T2_ONLY_VP12 = "T2_ONLY_VP12"
T2_C1_I_C = "T2_C1_I_C"
T2_C1_II_COMPLETE = "T2_C1_II_COMPLETE"
T2_C1_II_DOMEDGE = "T2_C1_II_DOMEDGE"
T2_C1_II_V12_NONEMPTY = "T2_C1_II_V12_NONEMPTY"
T2_C1_II_V12_EMPTY_COMPLETE = "T2_C1_II_V12_EMPTY_COMPLETE"
T2_C1_II_V12_EMPTY_DOM = "T2_C1_II_V12_EMPTY_DOM"
T2_C2_V2_SIDE = "T2_C2_V2_SIDE"
T2_C2_U2_SIDE = "T2_C2_U2_SIDE"
FALLBACK_SEARCH = "FALLBACK_SEARCH"
COR_CLAW = "COR_CLAW"
COR_ALPHA_LE2 = "COR_ALPHA_LE2"
COR_COMPLETE = "COR_COMPLETE"

ALL_TRACE_LABELS = (
    T1_GPRIME_EMPTY,
    T1_V1_EMPTY,
    T1_V2_EMPTY,
    T2_VP12_EMPTY,
    T2_ONLY_VP12,
    T2_C1_I_C,
    T2_C1_II_COMPLETE,
    T2_C1_II_DOMEDGE,
    T2_C1_II_V12_NONEMPTY,
    T2_C1_II_V12_EMPTY_COMPLETE,
    T2_C1_II_V12_EMPTY_DOM,
    T2_C2_V2_SIDE,
    T2_C2_U2_SIDE,
    FALLBACK_SEARCH,
    COR_CLAW,
    COR_ALPHA_LE2,
    COR_COMPLETE,
)


class PreconditionError(ValueError):
    """An operation's hypothesis fails on the given input."""

    def __init__(self, hypothesis: str, message: str, witness=None):
        super().__init__(f"{hypothesis}: {message}")
        self.hypothesis = hypothesis
        self.witness = witness


class ContradictionError(RuntimeError):
    """A branch that is impossible under the checked preconditions was reached.

    Carries the forbidden structure; seeing this means a precondition check
    or the case analysis itself is buggy.
    """

    def __init__(self, structure: str, witness=None):
        super().__init__(f"unreachable branch: {structure} (witness {witness})")
        self.structure = structure
        self.witness = witness


class CaseGapError(RuntimeError):
    """Strict mode: no branch of the case analysis covers this input."""

    def __init__(self, reason: str, partition: "PartitionT2", detail: Optional[dict] = None):
        super().__init__(f"case analysis gap: {reason}")
        self.reason = reason
        self.partition = partition
        self.detail = detail or {}


class _ProseGap(Exception):
    """Internal: signal that the written case analysis does not apply."""

    def __init__(self, reason: str, detail: Optional[dict] = None):
        self.reason = reason
        self.detail = detail or {}


@dataclass
class CaseTrace:
    """Which branch produced a result, plus the vertices it bound."""

    label: str
    witnesses: dict[str, int] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"label": self.label, "witnesses": dict(self.witnesses)}


@dataclass(frozen=True)
class PartitionT2:
    """Neighborhood partition around a non-simplicial vertex.

    v1, v2 are the lexicographically smallest nonadjacent neighbor pair of v;
    gprime is everything outside the closed neighborhood of v, split into the
    vertices seeing only v1 (v1_only), only v2 (v2_only), both (v12), and
    neither (vp12).
    """

    v: int
    v1: int
    v2: int
    gprime: int
    v1_only: int
    v2_only: int
    v12: int
    vp12: int

    def to_json(self) -> dict:
        return {
            "v": self.v,
            "v1": self.v1,
            "v2": self.v2,
            "gprime": bit_list(self.gprime),
            "V1": bit_list(self.v1_only),
            "V2": bit_list(self.v2_only),
            "V12": bit_list(self.v12),
            "VP12": bit_list(self.vp12),
        }


def nonadjacent_neighbor_pair(G: Graph, v: int) -> Optional[tuple[int, int]]:
    """Lexicographically smallest nonadjacent pair among the neighbors of v."""
    adj = G.adj
    nbl = bit_list(G.neighborhood(v))
    for i, a in enumerate(nbl[:-1]):
        free = ~adj[a]
        for b in nbl[i + 1:]:
            if (free >> b) & 1:
                return a, b
    return None


def partition_t2(G: Graph, v: int) -> PartitionT2:
    """Partition the graph around v; requires v non-simplicial."""
    pair = nonadjacent_neighbor_pair(G, v)
    if pair is None:
        raise PreconditionError("non-simplicial", f"vertex {v} is simplicial")
    v1, v2 = pair
    adj = G.adj
    gprime = G.vertex_mask & ~G.closed_neighborhood(v)
    n1 = adj[v1] & gprime
    n2 = adj[v2] & gprime
    return PartitionT2(
        v=v,
        v1=v1,
        v2=v2,
        gprime=gprime,
        v1_only=n1 & ~n2,
        v2_only=n2 & ~n1,
        v12=n1 & n2,
        vp12=gprime & ~n1 & ~n2,
    )


# -- dominating edge (independence number 2) ---------------------------------


def _check_t1(G: Graph, v: int) -> None:
    if not 0 <= v < G.n:
        raise PreconditionError("vertex", f"vertex {v} out of range")
    if not G.is_connected():
        raise PreconditionError("connected", "graph is not connected")
    if not has_independent_set(G, 2):
        raise PreconditionError("alpha", "independence number is below 2")
    if has_independent_set(G, 3):
        raise PreconditionError("alpha", "independence number exceeds 2")
    c5 = find_induced_cycle(G, 5) if G.n >= 5 else None
    if c5 is not None:
        raise PreconditionError("c5-free", f"induced 5-cycle {c5}", witness=c5)
    if is_simplicial(G, v):
        raise PreconditionError("non-simplicial", f"vertex {v} is simplicial")


def theorem1_edge(G: Graph, v: int) -> tuple[tuple[int, int], CaseTrace]:
    """Dominating edge through v in a connected, C5-free graph with alpha = 2.

    The closed neighborhoods of the returned edge's endpoints cover every
    vertex.  The case where both private neighbor sets are nonempty would
    yield an induced 5-cycle and is unreachable under the preconditions.
    """
    _check_t1(G, v)
    part = partition_t2(G, v)
    adj = G.adj
    if part.gprime == 0:
        u = (adj[v] & -adj[v]).bit_length() - 1
        edge = (v, u)
        trace = CaseTrace(T1_GPRIME_EMPTY, {"v": v, "u": u})
    elif part.v1_only == 0:
        edge = (v, part.v2)
        trace = CaseTrace(T1_V1_EMPTY, {"v": v, "v1": part.v1, "v2": part.v2})
    elif part.v2_only == 0:
        edge = (v, part.v1)
        trace = CaseTrace(T1_V2_EMPTY, {"v": v, "v1": part.v1, "v2": part.v2})
    else:
        a = (part.v1_only & -part.v1_only).bit_length() - 1
        b = (part.v2_only & -part.v2_only).bit_length() - 1
        raise ContradictionError("induced C5", (v, part.v1, a, b, part.v2))
    covered = G.closed_neighborhood(edge[0]) | G.closed_neighborhood(edge[1])
    if covered != G.vertex_mask:
        raise ContradictionError("non-dominating edge", edge)
    return edge, trace


# -- connected dominating set of size <= 4 (independence number 3) -----------


def _check_t2(G: Graph, v: int) -> None:
    if not 0 <= v < G.n:
        raise PreconditionError("vertex", f"vertex {v} out of range")
    if not G.is_connected():
        raise PreconditionError("connected", "graph is not connected")
    claw = find_claw(G)
    if claw is not None:
        raise PreconditionError("claw-free", f"claw at {claw[0]} with leaves {claw[1]}", witness=claw)
    if not has_independent_set(G, 3):
        raise PreconditionError("alpha", "independence number is below 3")
    if has_independent_set(G, 4):
        raise PreconditionError("alpha", "independence number exceeds 3")
    c7 = find_induced_cycle(G, 7) if G.n >= 7 else None
    if c7 is not None:
        raise PreconditionError("c7-free", f"induced 7-cycle {c7}", witness=c7)
    if is_simplicial(G, v):
        raise PreconditionError("non-simplicial", f"vertex {v} is simplicial")


def _lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def _mask_complete(adj: tuple[int, ...], mask: int) -> bool:
    for u in bits(mask):
        if mask & ~adj[u] & ~(1 << u):
            return False
    return True


def _chain_step(G: Graph, v: int, target: int) -> Optional[tuple[int, int]]:
    """Smallest (a, b) with a adjacent to v and b in target adjacent to a."""
    adj = G.adj
    for a in bits(adj[v]):
        hit = adj[a] & target
        if hit:
            return a, _lowest(hit)
    return None


def _edge_into_vp(G: Graph, part: PartitionT2) -> Optional[tuple[int, int, int]]:
    """Smallest edge (a, b) from V1|V2|V12 into VP12, with the anchor v1 or v2."""
    adj = G.adj
    near = part.v1_only | part.v2_only | part.v12
    for a in bits(near):
        hit = adj[a] & part.vp12
        if hit:
            anchor = part.v1 if (adj[a] >> part.v1) & 1 else part.v2
            return a, _lowest(hit), anchor
    return None


def _side_of(part: PartitionT2, u: int) -> str:
    b = 1 << u
    if part.v1_only & b:
        return "V1"
    if part.v2_only & b:
        return "V2"
    if part.v12 & b:
        return "V12"
    if part.vp12 & b:
        return "VP12"
    return "?"


def _case1_with_c5(G: Graph, part: PartitionT2, cyc: tuple[int, ...]) -> tuple[int, CaseTrace]:
    """Case analysis for an induced 5-cycle inside the connected remainder.

    Under the preconditions the cycle must put two vertices in V1, two in V2
    and one in VP12; the other distributions force an induced 7-cycle or a
    claw and raise ContradictionError.
    """
    adj = G.adj
    v, v1, v2 = part.v, part.v1, part.v2
    sides = [_side_of(part, u) for u in cyc]
    in_v12 = [u for u, s in zip(cyc, sides) if s == "V12"]
    in_vp = [u for u, s in zip(cyc, sides) if s == "VP12"]

    def cyc_neighbors(i: int) -> tuple[int, int]:
        return cyc[(i - 1) % 5], cyc[(i + 1) % 5]

    if in_v12:
        # distribution (a): V1, V12, V2, VP12, VP12 around the cycle
        if len(in_v12) == 1:
            i = cyc.index(in_v12[0])
            u2 = cyc[i]
            p, q = cyc_neighbors(i)
            pu = {_side_of(part, p): p, _side_of(part, q): q}
            if "V1" in pu and "V2" in pu:
                u1, u3 = pu["V1"], pu["V2"]
                rest = [u for u in cyc if u not in (u1, u2, u3)]
                if all(_side_of(part, u) == "VP12" for u in rest):
                    u4 = rest[0] if (adj[u3] >> rest[0]) & 1 else rest[1]
                    u5 = rest[1] if u4 == rest[0] else rest[0]
                    raise ContradictionError("induced C7", (v, v2, u3, u4, u5, u1, v1))
        raise ContradictionError("unclassifiable 5-cycle distribution", cyc)
    if len(in_vp) == 2:
        # distribution (b): two same-side vertices, a lone one, two in VP12
        others = [u for u in cyc if u not in in_vp]
        lone = None
        for u in others:
            mates = [w for w in others if w != u]
            if _side_of(part, mates[0]) == _side_of(part, mates[1]) != _side_of(part, u):
                lone = u
        if lone is not None and _side_of(part, lone) in ("V1", "V2"):
            i = cyc.index(lone)
            p, q = cyc_neighbors(i)
            wings = {_side_of(part, p): p, _side_of(part, q): q}
            if "VP12" in wings and len(wings) == 2:
                w = wings["VP12"]
                y = q if p == w else p
                anchor = v1 if _side_of(part, lone) == "V1" else v2
                raise ContradictionError("claw", (lone, (y, w, anchor)))
        raise ContradictionError("unclassifiable 5-cycle distribution", cyc)
    if len(in_vp) != 1:
        raise ContradictionError("unclassifiable 5-cycle distribution", cyc)
    # distribution (c): V1, V1, V2, V2, VP12
    i = cyc.index(in_vp[0])
    u5 = cyc[i]
    p, q = cyc_neighbors(i)
    pu = {_side_of(part, p): p, _side_of(part, q): q}
    if set(pu) != {"V1", "V2"}:
        raise ContradictionError("unclassifiable 5-cycle distribution", cyc)
    u1, u4 = pu["V1"], pu["V2"]
    u2 = next(w for w in cyc if w not in (u1, u4, u5) and (adj[u1] >> w) & 1)
    u3 = next(w for w in cyc if w not in (u1, u2, u4, u5))
    if _side_of(part, u2) != "V1" or _side_of(part, u3) != "V2":
        raise ContradictionError("unclassifiable 5-cycle distribution", cyc)
    vp = part.vp12
    if vp & ~adj[u4] == 0:
        d = mask_of((v, v1, v2, u4))
        return d, CaseTrace(T2_C1_I_C, {"v": v, "v1": v1, "v2": v2, "u": u4})
    if vp & ~adj[u2] == 0:
        d = mask_of((v, v1, v2, u2))
        return d, CaseTrace(T2_C1_I_C, {"v": v, "v1": v1, "v2": v2, "u": u2})
    u = _lowest(vp & ~adj[u4])
    if not (adj[u2] >> u) & 1:
        raise ContradictionError("independent 4-set", (v, u2, u4, u))
    raise ContradictionError("induced C7", (v, v2, u4, u5, u, u2, v1))


def _case1_no_c5(G: Graph, part: PartitionT2) -> tuple[int, CaseTrace]:
    """Connected remainder without an induced 5-cycle."""
    adj = G.adj
    v, v1, v2 = part.v, part.v1, part.v2
    gp = part.gprime
    if _mask_complete(adj, gp):
        step = _chain_step(G, v, gp)
        if step is None:
            raise _ProseGap("no edge from the neighborhood into the remainder")
        a, b = step
        return mask_of((v, a, b)), CaseTrace(T2_C1_II_COMPLETE, {"v": v, "a": a, "b": b})
    # a non-simplicial remainder vertex adjacent to N(v) admits a dominating edge
    nv = adj[v]
    b_pick = None
    for w in bits(gp):
        if not adj[w] & nv:
            continue
        wnb = adj[w] & gp
        simplicial = True
        for x in bits(wnb):
            if wnb & ~adj[x] & ~(1 << x):
                simplicial = False
                break
        if not simplicial:
            b_pick = w
            break
    if b_pick is not None:
        a = _lowest(adj[b_pick] & nv)
        sub, vmap = G.induced(gp)
        bg = vmap.index(b_pick)
        (eb, ec), _t1 = theorem1_edge(sub, bg)
        c = vmap[ec]
        d = mask_of((v, a, b_pick, c))
        return d, CaseTrace(T2_C1_II_DOMEDGE, {"v": v, "a": a, "b": b_pick, "c": c})
    # every remainder vertex touching N(v) is simplicial in the remainder
    if part.v12:
        found = _edge_into_vp(G, part)
        if found is None:
            raise _ProseGap("no edge into the private remainder part")
        a, b, anchor = found
        d = mask_of((v, anchor, a, b))
        return d, CaseTrace(
            T2_C1_II_V12_NONEMPTY, {"v": v, "anchor": anchor, "a": a, "b": b}
        )
    w1, w2 = part.v1_only, part.v2_only
    cross_complete = True
    cross_empty = True
    for x in bits(w1):
        hit = adj[x] & w2
        if hit:
            cross_empty = False
        if hit != w2:
            cross_complete = False
    if cross_complete:
        found = _edge_into_vp(G, part)
        if found is None:
            raise _ProseGap("no edge into the private remainder part")
        a, b, anchor = found
        d = mask_of((v, anchor, a, b))
        return d, CaseTrace(
            T2_C1_II_V12_EMPTY_COMPLETE, {"v": v, "anchor": anchor, "a": a, "b": b}
        )
    if cross_empty:
        vp = part.vp12
        for u in bits(w1 | w2):
            if vp & ~adj[u] == 0:
                d = mask_of((v, v1, v2, u))
                return d, CaseTrace(
                    T2_C1_II_V12_EMPTY_DOM, {"v": v, "v1": v1, "v2": v2, "u": u}
                )
        # no side vertex dominates VP12: an induced 7-cycle exists
        u1 = _lowest(w1)
        u3 = _lowest(vp & ~adj[u1])
        u2 = _lowest(w2)
        u4 = _lowest(vp & ~adj[u2])
        raise ContradictionError("induced C7", (v, v1, u1, u4, u3, u2, v2))
    raise _ProseGap("cross edges between the side sets are neither complete nor empty")


def _case2_disconnected(G: Graph, part: PartitionT2) -> tuple[int, CaseTrace]:
    """Disconnected remainder: a disjoint union of two complete subgraphs.

    Anything other than exactly two complete components yields an independent
    4-set with v, impossible under the checked independence number.  The two
    components are tried in both role assignments (the written analysis fixes
    one orientation; its "or" parentheticals indicate the v1/v2 and
    component-role mirrors were intended).
    """
    adj = G.adj
    v, v1, v2 = part.v, part.v1, part.v2
    comps = _mask_components(adj, part.gprime)
    if len(comps) > 2:
        w = (v, _lowest(comps[0]), _lowest(comps[1]), _lowest(comps[2]))
        raise ContradictionError("independent 4-set", w)
    for i, comp in enumerate(comps):
        for x in bits(comp):
            miss = comp & ~adj[x] & ~(1 << x)
            if miss:
                w = (v, x, _lowest(miss), _lowest(comps[1 - i]))
                raise ContradictionError("independent 4-set", w)
    for near, far in ((comps[0], comps[1]), (comps[1], comps[0])):
        for u2 in bits(adj[v]):
            if not adj[u2] & far:
                continue
            for anchor in (v2, v1):
                if (adj[u2] >> anchor) & 1:
                    continue
                if near & ~adj[anchor] == 0:
                    b = _lowest(adj[u2] & far)
                    d = mask_of((v, anchor, u2, b))
                    return d, CaseTrace(
                        T2_C2_V2_SIDE, {"v": v, "anchor": anchor, "u2": u2, "b": b}
                    )
                if far & ~adj[u2] == 0:
                    hit = adj[anchor] & near
                    if hit:
                        a = _lowest(hit)
                        d = mask_of((v, anchor, u2, a))
                        return d, CaseTrace(
                            T2_C2_U2_SIDE, {"v": v, "anchor": anchor, "u2": u2, "a": a}
                        )
    raise _ProseGap("no disconnected-remainder branch applies")


def _theorem2_prose(G: Graph, part: PartitionT2) -> tuple[int, CaseTrace]:
    adj = G.adj
    v, v1, v2 = part.v, part.v1, part.v2
    if part.vp12 == 0:
        return mask_of((v, v1, v2)), CaseTrace(T2_VP12_EMPTY, {"v": v, "v1": v1, "v2": v2})
    if part.v1_only | part.v2_only | part.v12 == 0:
        step = _chain_step(G, v, part.vp12)
        if step is None:
            raise _ProseGap("no edge from the neighborhood into the remainder")
        a, b = step
        return mask_of((v, a, b)), CaseTrace(T2_ONLY_VP12, {"v": v, "a": a, "b": b})
    if _mask_connected(adj, part.gprime):
        sub, vmap = G.induced(part.gprime)
        cyc = find_induced_cycle(sub, 5) if sub.n >= 5 else None
        if cyc is not None:
            return _case1_with_c5(G, part, tuple(vmap[i] for i in cyc))
        return _case1_no_c5(G, part)
    return _case2_disconnected(G, part)


def _bounded_cds_search(G: Graph, v: int, limit: int = 4) -> Optional[int]:
    """Smallest connected dominating set containing v with at most limit vertices."""
    others = [u for u in range(G.n) if u != v]
    for size in range(0, limit):
        for combo in combinations(others, size):
            d = (1 << v) | mask_of(combo)
            if is_cds(G, d):
                return d
    return None


def theorem2_cds(G: Graph, v: int, strict: bool = False) -> tuple[int, CaseTrace]:
    """Connected dominating set of at most 4 vertices containing v.

    Requires G connected, claw-free, independence number exactly 3, no
    induced 7-cycle, and v non-simplicial.  The trace records which branch
    of the case analysis fired.  In strict mode an input not covered by the
    written analysis raises CaseGapError; otherwise a bounded exhaustive
    search provides the guaranteed fallback.
    """
    _check_t2(G, v)
    part = partition_t2(G, v)
    try:
        d, trace = _theorem2_prose(G, part)
        if not (is_cds(G, d) and (d >> v) & 1 and d.bit_count() <= 4):
            raise _ProseGap(
                f"branch {trace.label} produced an invalid set", {"D": bit_list(d)}
            )
        return d, trace
    except _ProseGap as gap:
        if strict:
            raise CaseGapError(gap.reason, part, gap.detail) from None
        d = _bounded_cds_search(G, v)
        if d is None:
            raise ContradictionError("no small connected dominating set exists", v) from None
        return d, CaseTrace(FALLBACK_SEARCH, {"v": v})


# -- corollary: any alpha <= 3, C7-free connected graph ----------------------


def corollary_cds(G: Graph) -> tuple[int, CaseTrace]:
    """Connected dominating set of at most 4 vertices.

    Requires G connected and nonempty with independence number at most 3 and
    no induced 7-cycle.  A claw's vertex set dominates outright (a fifth
    independent vertex would contradict the independence bound); otherwise
    the size-4 construction or a short neighbor chain applies.
    """
    if G.n == 0:
        raise PreconditionError("nonempty", "graph has no vertices")
    if not G.is_connected():
        raise PreconditionError("connected", "graph is not connected")
    if has_independent_set(G, 4):
        raise PreconditionError("alpha", "independence number exceeds 3")
    c7 = find_induced_cycle(G, 7) if G.n >= 7 else None
    if c7 is not None:
        raise PreconditionError("c7-free", f"induced 7-cycle {c7}", witness=c7)
    claw = find_claw(G)
    if claw is not None:
        center, leaves = claw
        d = mask_of((center, *leaves))
        trace = CaseTrace(
            COR_CLAW,
            {"center": center, "a": leaves[0], "b": leaves[1], "c": leaves[2]},
        )
        if not is_cds(G, d):
            raise ContradictionError("claw vertices fail to dominate", claw)
        return d, trace
    nonsimplicial = next((u for u in range(G.n) if not is_simplicial(G, u)), None)
    if has_independent_set(G, 3) and nonsimplicial is not None:
        return theorem2_cds(G, nonsimplicial)
    if not has_independent_set(G, 3):
        v = 0
        rest = G.vertex_mask & ~G.closed_neighborhood(v)
        if rest == 0:
            d = 1 << v
            trace = CaseTrace(COR_ALPHA_LE2, {"v": v})
        else:
            step = _chain_step(G, v, rest)
            if step is None:
                raise ContradictionError("unreachable remainder in a connected graph", v)
            a, b = step
            d = mask_of((v, a, b))
            trace = CaseTrace(COR_ALPHA_LE2, {"v": v, "a": a, "b": b})
        if not is_cds(G, d):
            raise ContradictionError("neighbor chain fails to dominate", bit_list(d))
        return d, trace
    if not is_cds(G, 1):
        raise ContradictionError("single vertex fails to dominate", 0)
    return 1, CaseTrace(COR_COMPLETE, {"v": 0})


# -- inductive certificate builder -------------------------------------------


def _mask_components(adj: tuple[int, ...], mask: int) -> list[int]:
    parts = []
    todo = mask
    while todo:
        seen = todo & -todo
        frontier = seen
        while frontier:
            reach = 0
            m = frontier
            while m:
                b = m & -m
                reach |= adj[b.bit_length() - 1]
                m ^= b
            frontier = reach & mask & ~seen
            seen |= frontier
        parts.append(seen)
        todo &= ~seen
    return parts


def build_h_certificate(G: Graph) -> HSequence:
    """Sequence certificate built by peeling small connected dominating sets.

    Works inside one connected component: repeatedly extract a connected
    dominating set of the current remainder until at most 4 vertices are
    left, then emit an adjacent pair (or single vertex) of the final
    remainder as the head and the extracted sets in reverse order as the
    tail.  Each extracted set dominates everything extracted after it, which
    is exactly the joined-to-all-earlier clause.  When a deletion disconnects
    the remainder, the construction continues in the largest remaining
    component, so the achieved length is reported, not promised.
    """
    if has_independent_set(G, 4):
        raise PreconditionError("alpha", "independence number exceeds 3")
    c7 = find_induced_cycle(G, 7) if G.n >= 7 else None
    if c7 is not None:
        raise PreconditionError("c7-free", f"induced 7-cycle {c7}", witness=c7)
    if G.n == 0:
        return HSequence((), ())
    adj = G.adj

    def largest(parts: list[int]) -> int:
        best = parts[0]
        for p in parts[1:]:
            if p.bit_count() > best.bit_count():
                best = p
        return best

    rem = largest(G.components())
    extracted: list[int] = []
    while rem.bit_count() > 4:
        sub, vmap = G.induced(rem)
        d_sub, _trace = corollary_cds(sub)
        d = mask_of(vmap[i] for i in bits(d_sub))
        extracted.append(d)
        rem &= ~d
        parts = _mask_components(adj, rem)
        if len(parts) > 1:
            rem = largest(parts)
    head: tuple[int, ...] = ()
    for u in bits(rem):
        hit = adj[u] & rem & (-1 << (u + 1))
        if hit:
            head = (u, _lowest(hit))
            break
    if not head:
        head = (_lowest(rem),)
    return HSequence(head, tuple(reversed(extracted)))
