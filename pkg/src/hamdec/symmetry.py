"""Automorphism groups and isomorphism by individualisation-refinement.

Search nodes are ordered vertex colourings refined to equitable ones.  The
first leaf reached by always branching on the first vertex of the target
cell is the reference; every other subtree is searched for a leaf whose
labelling differs from the reference by an automorphism (or isomorphism).
"""

from __future__ import annotations

from typing import Optional, Sequence

from .constructions import ExpandedGraph
from .errors import BudgetExceeded, NotAutomorphismError
from .graph import Graph
from .perm import Permutation, PermGroup

DEFAULT_BUDGET = 2_000_000


def _refine(adj, colors: list[int]) -> tuple[list[int], int]:
    """Colour refinement to the coarsest equitable colouring finer than ``colors``.

    Returns the new colours (ranked 0..c-1, order-compatible with the input)
    and a hash of the refinement history, which is invariant under
    isomorphism of the (graph, colouring) pair.
    """
    trace = 0
    ncol = len(set(colors))
    while True:
        sigs = [(colors[v], tuple(sorted(colors[w] for w in nb))) for v, nb in enumerate(adj)]
        distinct = sorted(set(sigs))
        if len(distinct) == ncol:
            return colors, hash((trace, ncol))
        rank = {s: i for i, s in enumerate(distinct)}
        colors = [rank[s] for s in sigs]
        counts = [0] * len(distinct)
        for c in colors:
            counts[c] += 1
        trace = hash((trace, tuple(distinct), tuple(counts)))
        ncol = len(distinct)


def _individualize(colors: list[int], v: int) -> list[int]:
    out = [2 * c + 1 for c in colors]
    out[v] = 2 * colors[v]
    rank = {c: i for i, c in enumerate(sorted(set(out)))}
    return [rank[c] for c in out]


def _target_cell(colors: list[int]) -> Optional[list[int]]:
    """Smallest non-singleton cell, lowest colour breaking ties."""
    cells: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        cells.setdefault(c, []).append(v)
    best = None
    for c in sorted(cells):
        cell = cells[c]
        if len(cell) > 1 and (best is None or len(cell) < len(best)):
            best = cell
    return best


def _is_automorphism(g: Graph, images: Sequence[int]) -> bool:
    return all(g.has_edge(images[x], images[y]) for x, y in g.edges)


def _maps_onto(g: Graph, h: Graph, images: Sequence[int]) -> bool:
    return g.num_edges == h.num_edges and all(h.has_edge(images[x], images[y]) for x, y in g.edges)


class _Search:
    def __init__(self, g: Graph, budget: int, what: str):
        self.g = g
        self.adj = g.adj
        self.budget = budget
        self.nodes = 0
        self.what = what

    def tick(self):
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded(self.what, self.nodes)

    def first_path(self, colors):
        """Descend by first-vertex choices; returns per-level (colors, trace, cell) and the leaf."""
        path = []
        colors, trace = _refine(self.adj, colors)
        while True:
            self.tick()
            cell = _target_cell(colors)
            path.append((colors, trace, cell))
            if cell is None:
                return path, colors
            colors, trace = _refine(self.adj, _individualize(colors, cell[0]))


def _leaf_map(ref_leaf: list[int], leaf: list[int]) -> list[int]:
    """Vertex map sending the vertex in position i of ``ref_leaf`` to that of ``leaf``."""
    n = len(ref_leaf)
    at = [0] * n
    for v, c in enumerate(leaf):
        at[c] = v
    return [at[ref_leaf[v]] for v in range(n)]


def _search_subtree(search: _Search, target: Graph, target_search: _Search,
                    path, level: int, colors, ref_leaf, accept):
    """DFS below ``colors`` at ``level`` of the reference path; returns a map or None."""
    target_search.tick()
    ref_colors, ref_trace, ref_cell = path[level]
    if ref_cell is None:
        images = _leaf_map(ref_leaf, colors)
        return images if accept(images) else None
    cell = _target_cell(colors)
    if cell is None or len(cell) != len(ref_cell):
        return None
    for w in cell:
        child, trace = _refine(target.adj, _individualize(colors, w))
        if trace != path[level + 1][1]:
            continue
        found = _search_subtree(search, target, target_search, path, level + 1, child, ref_leaf, accept)
        if found is not None:
            return found
    return None


def automorphism_group(g: Graph, budget: int = DEFAULT_BUDGET,
                       colors: Optional[Sequence[int]] = None) -> PermGroup:
    """Full automorphism group (of the coloured graph, if ``colors`` given).

    The returned group carries ``search_order``, the product of base-orbit
    lengths found during the search; it agrees with the Schreier-Sims order.
    """
    search = _Search(g, budget, "automorphism search")
    init = list(colors) if colors is not None else [0] * g.n
    path, leaf = search.first_path(init)
    gens: list[list[int]] = []
    orbit_sizes = []

    def accept(images):
        return _is_automorphism(g, images)

    for level in range(len(path) - 2, -1, -1):
        colors_l, _, cell = path[level]
        base_point = cell[0]
        # generators found so far fix the base points above this level
        parent = {v: v for v in cell}

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        def absorb(images):
            for v in cell:
                a, b = find(v), find(images[v])
                if a != b:
                    parent[max(a, b)] = min(a, b)

        for images in gens:
            absorb(images)
        for w in cell[1:]:
            if find(w) == find(base_point):
                continue
            child, trace = _refine(g.adj, _individualize(colors_l, w))
            if trace != path[level + 1][1]:
                continue
            found = _search_subtree(search, g, search, path, level + 1, child, leaf, accept)
            if found is not None:
                gens.append(found)
                absorb(found)
        root = find(base_point)
        orbit_sizes.append(sum(1 for v in cell if find(v) == root))

    group = PermGroup(g.n, [Permutation(tuple(p)) for p in gens])
    order = 1
    for s in orbit_sizes:
        order *= s
    group.search_order = order
    group.search_nodes = search.nodes
    return group


def is_vertex_transitive(g: Graph, budget: int = DEFAULT_BUDGET) -> bool:
    if g.n <= 1:
        return True
    return automorphism_group(g, budget).is_transitive()


def arc_orbits(g: Graph, group: PermGroup) -> list[list[tuple[int, int]]]:
    arcs = g.arcs()
    index = {a: i for i, a in enumerate(arcs)}
    parent = list(range(len(arcs)))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for p in group.generators:
        im = p.images
        for i, (x, y) in enumerate(arcs):
            a, b = find(i), find(index[(im[x], im[y])])
            if a != b:
                parent[max(a, b)] = min(a, b)
    groups: dict[int, list] = {}
    for i, a in enumerate(arcs):
        groups.setdefault(find(i), []).append(a)
    return sorted(groups.values())


def is_arc_transitive(g: Graph, budget: int = DEFAULT_BUDGET) -> bool:
    if g.num_edges == 0:
        return False
    return len(arc_orbits(g, automorphism_group(g, budget))) == 1


def check_automorphisms(x: Graph, group: PermGroup) -> None:
    for p in group.generators:
        if p.degree != x.n or not _is_automorphism(x, p.images):
            raise NotAutomorphismError(p)


def verify_regular_arc_action(x: Graph, h: PermGroup) -> bool:
    """True iff ``h`` (a group of automorphisms of ``x``) is regular on the arcs of ``x``."""
    if h.degree != x.n:
        raise ValueError("group degree differs from graph order")
    check_automorphisms(x, h)
    narcs = 2 * x.num_edges
    if narcs == 0 or h.order != narcs:
        return False
    return len(arc_orbits(x, h)) == 1


def expanded_action(e: ExpandedGraph, g: Permutation, a: int) -> Permutation:
    """The automorphism (x, y)_i -> (xg, yg)_{i+a} of K(mX)."""
    if g.degree != e.base.n or not _is_automorphism(e.base, g.images):
        raise NotAutomorphismError(g)
    if not 0 <= a < e.m:
        raise ValueError(f"shift {a} not a residue mod {e.m}")
    m = e.m
    im = g.images
    return Permutation(tuple(
        e.vertex_of_arc[(im[x], im[y], (i + a) % m)] for x, y, i in e.arc_of_vertex
    ))


def is_isomorphic(g: Graph, h: Graph, budget: int = DEFAULT_BUDGET) -> Optional[Permutation]:
    """A vertex bijection carrying the edges of ``g`` onto those of ``h``, or None."""
    if g.n != h.n or g.num_edges != h.num_edges:
        return None
    if sorted(map(len, g.adj)) != sorted(map(len, h.adj)):
        return None
    if g.n == 0:
        return Permutation(())
    gs = _Search(g, budget, "isomorphism search")
    hs = _Search(h, budget, "isomorphism search")
    path, leaf = gs.first_path([0] * g.n)
    root, trace = _refine(h.adj, [0] * h.n)
    if trace != path[0][1]:
        return None

    def accept(images):
        return _maps_onto(g, h, images)

    found = _search_subtree(gs, h, hs, path, 0, root, leaf, accept)
    return None if found is None else Permutation(tuple(found))
