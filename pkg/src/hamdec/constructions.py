"""Derived graphs: mX, the arc blow-up K(mX), line graphs, Cayley graphs."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Sequence

from .graph import Graph, Multigraph
from .perm import Permutation

Arc = tuple[int, int, int]


@dataclass(frozen=True)
class ExpandedGraph:
    """K(mX) together with its correspondence to the arcs and edges of mX.

    ``arc_of_vertex[v]`` is the arc ``(tail, head, copy)`` of mX that vertex
    ``v`` of ``graph`` stands for; ``clique_of[x]`` lists the vertices of the
    complete subgraph sitting over base vertex ``x``; ``matching_edge_of``
    maps an mX edge ``(base edge index, copy)`` to its K(mX) edge.
    """

    base: Graph
    m: int
    graph: Graph
    arc_of_vertex: tuple[Arc, ...]
    vertex_of_arc: dict
    clique_of: tuple[tuple[int, ...], ...]
    matching_edge_of: dict

    @property
    def multigraph(self) -> Multigraph:
        return Multigraph(self.base, self.m)

    def is_matching_edge(self, u: int, v: int) -> bool:
        return self.arc_of_vertex[u][0] != self.arc_of_vertex[v][0]


def multigraph(x: Graph, m: int) -> Multigraph:
    return Multigraph(x, m)


def blow_up(x: Graph, m: int) -> ExpandedGraph:
    """Build K(mX): a clique on the km arcs leaving each vertex, plus one
    edge joining the two arcs of every edge of mX."""
    if m < 1:
        raise ValueError("multiplicity must be at least 1")
    k = x.valency()
    if k is None:
        raise ValueError("blow-up needs a regular graph")
    if x.num_edges == 0:
        raise ValueError("blow-up needs a graph with at least one edge")
    arcs = [(a, b, i) for a, b in x.arcs() for i in range(m)]
    index = {arc: v for v, arc in enumerate(arcs)}
    cliques = [[] for _ in range(x.n)]
    for v, (a, _, _) in enumerate(arcs):
        cliques[a].append(v)
    edges = []
    for members in cliques:
        edges.extend(combinations(members, 2))
    matching = {}
    for e, (a, b) in enumerate(x.edges):
        for i in range(m):
            pair = (index[(a, b, i)], index[(b, a, i)])
            matching[(e, i)] = (min(pair), max(pair))
            edges.append(pair)
    g = Graph.from_edges(len(arcs), edges)
    return ExpandedGraph(
        base=x,
        m=m,
        graph=g,
        arc_of_vertex=tuple(arcs),
        vertex_of_arc=index,
        clique_of=tuple(tuple(c) for c in cliques),
        matching_edge_of=matching,
    )


def line_graph(x: Graph) -> Graph:
    """Vertices are edge indices of ``x``; adjacent when sharing an endpoint."""
    edges = set()
    for v in range(x.n):
        inc = sorted(x.edge_index(v, w) for w in x.adj[v])
        edges.update(combinations(inc, 2))
    return Graph.from_edges(x.num_edges, sorted(edges))


def group_elements(generators: Sequence[Permutation]) -> list[Permutation]:
    """Elements of the generated group, identity first, in BFS order."""
    if not generators:
        raise ValueError("need at least one generator")
    n = generators[0].degree
    ident = tuple(range(n))
    seen = {ident: 0}
    order = [ident]
    i = 0
    while i < len(order):
        a = order[i]
        for g in generators:
            b = tuple(g.images[t] for t in a)
            if b not in seen:
                seen[b] = len(order)
                order.append(b)
        i += 1
    return [Permutation(p) for p in order]


def cayley_graph(
    generators: Sequence[Permutation],
    connection: Sequence[Permutation],
    group_order: int | None = None,
) -> Graph:
    """Cay(G; S) with G generated by ``generators`` and S = ``connection``.

    Vertex ``i`` is the ``i``-th element of :func:`group_elements`; ``g`` is
    joined to ``g * s`` for each ``s`` in S.
    """
    elements = group_elements(generators)
    if group_order is not None and len(elements) != group_order:
        raise ValueError(f"generated group has order {len(elements)}, expected {group_order}")
    index = {p.images: i for i, p in enumerate(elements)}
    conn = set()
    for s in connection:
        if s.is_identity():
            raise ValueError("identity in connection set")
        if s.images not in index:
            raise ValueError(f"connection element {s} not in the group")
        conn.add(s.images)
    for s in connection:
        if s.inverse().images not in conn:
            raise ValueError(f"connection set not inverse-closed: {s}")
    edges = set()
    for i, g in enumerate(elements):
        for s in conn:
            j = index[tuple(s[t] for t in g.images)]
            edges.add((min(i, j), max(i, j)))
    return Graph.from_edges(len(elements), sorted(edges))


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def prism(n: int) -> Graph:
    """Cartesian product of the n-cycle with K2."""
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(n + i, n + (i + 1) % n) for i in range(n)]
    edges += [(i, n + i) for i in range(n)]
    return Graph.from_edges(2 * n, edges)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    return Graph.from_edges(g.n + h.n, list(g.edges) + [(a + g.n, b + g.n) for a, b in h.edges])


# -- the two explicit group presentations --------------------------------------


def sym4_presentation() -> tuple[list[Permutation], list[Permutation]]:
    """Sym(4) with connection set {(1 2), (2 3 4), (2 4 3)} (points 1..4)."""
    s = [Permutation.parse(c, 4, offset=1) for c in ("(1 2)", "(2 3 4)", "(2 4 3)")]
    return s, s


def _gl23_matrices():
    mats = []
    for a, b, c, d in product(range(3), repeat=4):
        if (a * d - b * c) % 3:
            mats.append((a, b, c, d))
    return mats


def gl23_as_permutation(mat: tuple[int, int, int, int]) -> Permutation:
    """Right action v -> vM of a 2x2 matrix over GF(3) on the 8 nonzero row vectors."""
    a, b, c, d = mat
    vecs = [v for v in product(range(3), repeat=2) if v != (0, 0)]
    pos = {v: i for i, v in enumerate(vecs)}
    return Permutation(tuple(pos[((x * a + y * c) % 3, (x * b + y * d) % 3)] for x, y in vecs))


def gl23_presentation() -> tuple[list[Permutation], list[Permutation]]:
    """GL(2,3) with connection set {A, B, B^-1}, A = [[0,1],[1,0]], B = [[1,1],[0,1]]."""
    A = gl23_as_permutation((0, 1, 1, 0))
    B = gl23_as_permutation((1, 1, 0, 1))
    gens = [gl23_as_permutation(mm) for mm in _gl23_matrices()]
    return gens, [A, B, B.inverse()]
