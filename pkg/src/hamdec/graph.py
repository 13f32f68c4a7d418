"""Simple graphs, uniform multigraphs, and graph6 I/O."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence

GRAPH6_HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    """Malformed graph6 input; ``offset`` is the byte position of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Edges keep the order they were given in; ``edges[i]`` is stored as a
    sorted pair and ``i`` is its stable edge index.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    adj: tuple[tuple[int, ...], ...] = field(repr=False)
    _index: dict = field(repr=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        norm = []
        index = {}
        nbrs: list[list[int]] = [[] for _ in range(n)]
        for e in edges:
            x, y = int(e[0]), int(e[1])
            if x == y:
                raise ValueError(f"loop at vertex {x}")
            if not (0 <= x < n and 0 <= y < n):
                raise ValueError(f"edge {x, y} out of range for n={n}")
            if x > y:
                x, y = y, x
            if (x, y) in index:
                raise ValueError(f"parallel edge {x, y}")
            index[(x, y)] = len(norm)
            norm.append((x, y))
            nbrs[x].append(y)
            nbrs[y].append(x)
        adj = tuple(tuple(sorted(a)) for a in nbrs)
        return cls(n, tuple(norm), adj, index)

    # -- basic queries -------------------------------------------------

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, x: int, y: int) -> bool:
        return (min(x, y), max(x, y)) in self._index

    def edge_index(self, x: int, y: int) -> int:
        """Index of edge {x, y}; KeyError if absent."""
        return self._index[(min(x, y), max(x, y))]

    def arcs(self) -> list[tuple[int, int]]:
        """All arcs (x, y), sorted."""
        return sorted((x, y) for x in range(self.n) for y in self.adj[x])

    def edge_set(self) -> frozenset:
        return frozenset(self.edges)

    def valency(self) -> Optional[int]:
        """Common degree if the graph is regular, else None."""
        if self.n == 0:
            return 0
        degs = {len(a) for a in self.adj}
        return degs.pop() if len(degs) == 1 else None

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Image of the graph under vertex map ``v -> perm[v]``."""
        return Graph.from_edges(self.n, [(perm[x], perm[y]) for x, y in self.edges])

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edge_set() == other.edge_set()

    def __hash__(self):
        return hash((self.n, self.edge_set()))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={len(self.edges)})"


@dataclass(frozen=True)
class Multigraph:
    """The multigraph mX: every edge of ``base`` repeated ``m`` times.

    Edges are ``(edge index, copy)``; arcs are ``(tail, head, copy)``.
    """

    base: Graph
    m: int

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("multiplicity must be at least 1")

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def num_edges(self) -> int:
        return self.m * self.base.num_edges

    def edges(self) -> Iterator[tuple[int, int]]:
        for e in range(self.base.num_edges):
            for i in range(self.m):
                yield (e, i)

    def arcs(self) -> list[tuple[int, int, int]]:
        return [(x, y, i) for x, y in self.base.arcs() for i in range(self.m)]

    def edge_of_arc(self, arc: tuple[int, int, int]) -> tuple[int, int]:
        x, y, i = arc
        return (self.base.edge_index(x, y), i)

    def valency(self) -> Optional[int]:
        k = self.base.valency()
        return None if k is None else k * self.m


@dataclass(frozen=True)
class GraphProfile:
    order: int
    valency: Optional[int]
    bipartite: bool
    coloring: Optional[tuple[int, ...]]
    connected: bool


def profile(g: Graph) -> GraphProfile:
    """Order, regularity, bipartiteness (with a 2-colouring) and connectivity."""
    color = [-1] * g.n
    bipartite = True
    components = 0
    for s in range(g.n):
        if color[s] >= 0:
            continue
        components += 1
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    bipartite = False
    return GraphProfile(
        order=g.n,
        valency=g.valency(),
        bipartite=bipartite,
        coloring=tuple(color) if bipartite else None,
        connected=components <= 1,
    )


def is_connected(g: Graph) -> bool:
    return profile(g).connected


# -- graph6 ----------------------------------------------------------------


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise ValueError("graph too large for graph6")


def encode_graph6(g: Graph) -> str:
    """Encode ``g`` as a graph6 string without header."""
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if (i, j) in g._index else 0)
    bits.extend([0] * (-len(bits) % 6))
    out = [_encode_n(g.n)]
    for p in range(0, len(bits), 6):
        v = 0
        for b in bits[p:p + 6]:
            v = (v << 1) | b
        out.append(chr(v + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line (an optional ``>>graph6<<`` header is skipped)."""
    s = text.rstrip("\r\n")
    base = 0
    if s.startswith(GRAPH6_HEADER):
        base = len(GRAPH6_HEADER)
        s = s[base:]
    if not s:
        raise Graph6Error("empty graph6 string", base)
    data = [ord(c) for c in s]
    for pos, c in enumerate(data):
        if not 63 <= c <= 126:
            raise Graph6Error(f"character {chr(c)!r} outside graph6 range 63..126", base + pos)

    def six(pos, count):
        if pos + count > len(data):
            raise Graph6Error("truncated length prefix", base + len(data))
        v = 0
        for c in data[pos:pos + count]:
            v = (v << 6) | (c - 63)
        return v

    if data[0] != 126:
        n, pos = data[0] - 63, 1
    elif len(data) > 1 and data[1] == 126:
        n, pos = six(2, 6), 8
        if n <= 258047:
            raise Graph6Error("non-canonical 8-byte length prefix", base)
    else:
        n, pos = six(1, 3), 4
        if n <= 62:
            raise Graph6Error("non-canonical 4-byte length prefix", base)

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[pos:]
    if len(body) < nbytes:
        raise Graph6Error(f"expected {nbytes} data bytes, found {len(body)}", base + len(data))
    if len(body) > nbytes:
        raise Graph6Error("trailing characters after graph6 data", base + pos + nbytes)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            c = body[k // 6] - 63
            if (c >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    if nbytes and nbits % 6:
        pad = (body[-1] - 63) & ((1 << (6 - nbits % 6)) - 1)
        if pad:
            raise Graph6Error("nonzero padding bits", base + pos + nbytes - 1)
    return Graph.from_edges(n, edges)


def read_graph6_lines(lines: Iterable[str]) -> list[Graph]:
    """Parse every non-blank line of a graph6 file."""
    out = []
    for line in lines:
        line = line.strip()
        if line:
            out.append(parse_graph6(line))
    return out
