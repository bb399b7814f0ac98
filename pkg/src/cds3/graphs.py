"""Bitmask graph core.

Graphs are undirected, simple, on dense vertices 0..n-1 with n <= 64, so
every adjacency row and every vertex set fits in one machine word.  Vertex
sets are plain ints used as bitmasks throughout the package.
"""

from __future__ import annotations

from typing import Iterable, Iterator

MAX_VERTICES = 64

_G6_SPARSE6 = ord(":")
_G6_DIGRAPH6 = ord("&")
_G6_LONG = 126
_G6_HEADER = b">>graph6<<"


def bits(mask: int) -> Iterator[int]:
    """Iterate the set bit positions of *mask* in ascending order."""
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def bit_list(mask: int) -> list[int]:
    """Set bit positions of *mask* as a sorted list."""
    return list(bits(mask))


def mask_of(vertices: Iterable[int]) -> int:
    """Bitmask with the given vertex positions set."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def _mask_connected(adj: tuple[int, ...], mask: int) -> bool:
    """True iff the vertices of *mask* induce a connected subgraph (or mask empty)."""
    if mask == 0:
        return True
    seen = mask & -mask
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
    return seen == mask


class Graph:
    """Immutable simple graph with one adjacency bitmask per vertex.

    Invariants (checked at construction): adjacency is symmetric and
    irreflexive, and all neighbor bits lie in [0, n).
    """

    __slots__ = ("n", "adj")

    n: int
    adj: tuple[int, ...]

    def __init__(self, n: int, adj: Iterable[int]):
        rows = tuple(adj)
        if not 0 <= n <= MAX_VERTICES:
            raise ValueError(f"vertex count {n} outside [0, {MAX_VERTICES}]")
        if len(rows) != n:
            raise ValueError(f"expected {n} adjacency rows, got {len(rows)}")
        full = (1 << n) - 1
        for v, row in enumerate(rows):
            if row & ~full:
                raise ValueError(f"adjacency row of {v} has bits outside [0, {n})")
            if (row >> v) & 1:
                raise ValueError(f"loop at vertex {v}")
        for u in range(n):
            ru = rows[u]
            for v in range(u + 1, n):
                if ((ru >> v) & 1) != ((rows[v] >> u) & 1):
                    raise ValueError(f"adjacency not symmetric between {u} and {v}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", rows)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @classmethod
    def _unchecked(cls, n: int, rows: Iterable[int]) -> "Graph":
        # internal fast path for rows that are symmetric by construction
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", tuple(rows))
        return g

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"

    # -- construction ------------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph from an edge list; duplicate edges collapse."""
        if not 0 <= n <= MAX_VERTICES:
            raise ValueError(f"vertex count {n} outside [0, {MAX_VERTICES}]")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows)

    @classmethod
    def from_graph6(cls, data: bytes | str) -> "Graph":
        """Decode one graph6 line (short or 4-byte length form, n <= 64)."""
        if isinstance(data, str):
            data = data.encode("ascii")
        line = data.rstrip(b"\r\n")
        if line.startswith(_G6_HEADER):
            line = line[len(_G6_HEADER):]
        if not line:
            raise ValueError("empty graph6 input")
        if line[0] == _G6_SPARSE6:
            raise ValueError("sparse6 input is not supported (expected graph6)")
        if line[0] == _G6_DIGRAPH6:
            raise ValueError("digraph6 input is not supported (expected graph6)")
        if line[0] == _G6_LONG:
            if len(line) >= 2 and line[1] == _G6_LONG:
                raise ValueError("8-byte graph6 length form exceeds the 64-vertex cap")
            if len(line) < 4:
                raise ValueError("truncated graph6 length field")
            n = 0
            for byte in line[1:4]:
                if not 63 <= byte <= 126:
                    raise ValueError(f"bad graph6 length byte {byte}")
                n = (n << 6) | (byte - 63)
            body = line[4:]
        else:
            if not 63 <= line[0] <= 126:
                raise ValueError(f"bad graph6 header byte {line[0]}")
            n = line[0] - 63
            body = line[1:]
        if n > MAX_VERTICES:
            raise ValueError(f"graph6 vertex count {n} exceeds the {MAX_VERTICES}-vertex cap")
        nbits = n * (n - 1) // 2
        nbytes = (nbits + 5) // 6
        if len(body) < nbytes:
            raise ValueError("truncated graph6 bit section")
        if len(body) > nbytes:
            raise ValueError("trailing bytes after graph6 bit section")
        rows = [0] * n
        k = 0  # index into the column-major upper triangle
        v_lo, v_hi = 0, 1
        for byte in body:
            if not 63 <= byte <= 126:
                raise ValueError(f"bad graph6 data byte {byte}")
            group = byte - 63
            for shift in range(5, -1, -1):
                bit = (group >> shift) & 1
                if k < nbits:
                    if bit:
                        rows[v_lo] |= 1 << v_hi
                        rows[v_hi] |= 1 << v_lo
                    v_lo += 1
                    if v_lo == v_hi:
                        v_lo, v_hi = 0, v_hi + 1
                    k += 1
                elif bit:
                    raise ValueError("nonzero graph6 padding bits")
        return cls(n, rows)

    def to_graph6(self) -> bytes:
        """Encode as canonical graph6 (zero padding, no trailing newline)."""
        n = self.n
        if n <= 62:
            out = [n + 63]
        else:
            out = [_G6_LONG, 63 + (n >> 12), 63 + ((n >> 6) & 63), 63 + (n & 63)]
        group = 0
        filled = 0
        adj = self.adj
        for v_hi in range(1, n):
            row = adj[v_hi]
            for v_lo in range(v_hi):
                group = (group << 1) | ((row >> v_lo) & 1)
                filled += 1
                if filled == 6:
                    out.append(group + 63)
                    group = 0
                    filled = 0
        if filled:
            out.append((group << (6 - filled)) + 63)
        return bytes(out)

    # -- basic queries -----------------------------------------------------

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return (self.adj[u] >> v) & 1 == 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            row = self.adj[u] >> (u + 1)
            for v in bits(row << (u + 1)):
                out.append((u, v))
        return out

    def neighborhood(self, v: int) -> int:
        """Open neighborhood of v as a bitmask."""
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range")
        return self.adj[v]

    def closed_neighborhood(self, v: int) -> int:
        """Closed neighborhood of v (neighbors plus v) as a bitmask."""
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range")
        return self.adj[v] | (1 << v)

    # -- derived graphs ----------------------------------------------------

    def induced(self, mask: int) -> tuple["Graph", tuple[int, ...]]:
        """Subgraph induced by the vertex mask, plus the new-index -> old-vertex map."""
        if mask & ~self.vertex_mask:
            raise ValueError("vertex set out of range")
        vmap = tuple(bits(mask))
        index = {old: new for new, old in enumerate(vmap)}
        rows = []
        for old in vmap:
            row = 0
            for w in bits(self.adj[old] & mask):
                row |= 1 << index[w]
            rows.append(row)
        return Graph._unchecked(len(vmap), rows), vmap

    def complement(self) -> "Graph":
        full = self.vertex_mask
        return Graph._unchecked(
            self.n, tuple((full & ~row) & ~(1 << v) for v, row in enumerate(self.adj))
        )

    # -- connectivity ------------------------------------------------------

    def connected_within(self, mask: int) -> bool:
        """True iff *mask* induces a connected subgraph (empty counts as connected)."""
        if mask & ~self.vertex_mask:
            raise ValueError("vertex set out of range")
        return _mask_connected(self.adj, mask)

    def is_connected(self) -> bool:
        return _mask_connected(self.adj, self.vertex_mask)

    def components(self) -> list[int]:
        """Connected components as bitmasks, ordered by smallest contained vertex."""
        adj = self.adj
        todo = self.vertex_mask
        parts = []
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
                frontier = reach & ~seen
                seen |= frontier
            parts.append(seen)
            todo &= ~seen
        return parts


# -- common builders -------------------------------------------------------


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])
