"""Moving Hamilton decompositions between mX and K(mX).

Lifting replaces each base vertex on a cycle by a Hamilton path through
its clique, where the path must end on the two arcs the cycle uses at that
vertex.  The clique paths come from the zig-zag decomposition of K_n,
relabelled so its endpoint pairs land on the prescribed ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .constructions import ExpandedGraph
from .graph import Multigraph
from .solve import CertificateError, HDCertificate, check_hd


@dataclass(frozen=True)
class PathDecomposition:
    n: int
    paths: tuple[tuple[int, ...], ...]
    leftover: Optional[tuple[tuple[int, int], ...]] = None


def _zigzag(n: int) -> tuple[list[list[int]], list[tuple[int, int]], Optional[int], list[tuple[int, int]]]:
    """Standard decomposition of K_n on 0..n-1.

    Returns (paths, endpoint pairs, the vertex never used as an endpoint
    (odd n) or None, leftover matching).
    """
    even = n - n % 2
    r = even // 2
    paths = []
    for j in range(r):
        seq = [j]
        for s in range(1, even):
            step = (s + 1) // 2 if s % 2 else -(s // 2)
            seq.append((j + step) % even)
        paths.append(seq)
    pairs = [(j, (j + r) % even) for j in range(r)]
    if n % 2 == 0:
        return paths, pairs, None, []
    hub = n - 1
    leftover = []
    for seq in paths:
        for i in range(even - 1):
            a, b = seq[i], seq[i + 1]
            if (b - a) % even == r:
                seq.insert(i + 1, hub)
                leftover.append((a, b))
                break
        else:
            raise AssertionError("zig-zag path without a diameter step")
    return paths, pairs, hub, leftover


def walecki_paths(n: int, pairs: Sequence[tuple[int, int]]) -> PathDecomposition:
    """Edge-disjoint Hamilton paths of K_n, path ``j`` running from
    ``pairs[j][0]`` to ``pairs[j][1]``; for odd n the remaining edges form a
    matching on the n-1 paired vertices."""
    if n < 2:
        raise ValueError("need n >= 2")
    pts = [v for p in pairs for v in p]
    if len(set(pts)) != len(pts):
        raise ValueError("endpoint pairs are not disjoint")
    if any(not 0 <= v < n for v in pts):
        raise ValueError("endpoint out of range")
    if len(pairs) != n // 2:
        raise ValueError(f"need {n // 2} endpoint pairs for n={n}, got {len(pairs)}")
    paths, base_pairs, hub, leftover = _zigzag(n)
    sigma = [0] * n
    for (a, b), (p, q) in zip(base_pairs, pairs):
        sigma[a], sigma[b] = p, q
    if hub is not None:
        (missing,) = set(range(n)) - set(pts)
        sigma[hub] = missing
    return PathDecomposition(
        n=n,
        paths=tuple(tuple(sigma[v] for v in seq) for seq in paths),
        leftover=tuple((sigma[a], sigma[b]) for a, b in leftover) if hub is not None else None,
    )


def lift_hd(e: ExpandedGraph, cert: HDCertificate) -> HDCertificate:
    """Hamilton decomposition of K(mX) from one of mX (certificate on K(mX), m=1)."""
    reason = check_hd(Multigraph(e.base, e.m), cert)
    if reason is not None:
        raise CertificateError(f"input certificate invalid: {reason}")
    x = e.base
    km = len(e.clique_of[0]) if x.n else 0
    # position of every K(mX) vertex inside its clique
    pos = {}
    for members in e.clique_of:
        for i, u in enumerate(members):
            pos[u] = i
    # endpoint pairs per base vertex, one per cycle in certificate order
    pairs_at: list[list[tuple[int, int]]] = [[] for _ in range(x.n)]
    ends = []
    for verts, copies in cert.cycles:
        n = len(verts)
        cyc_ends = []
        for i, v in enumerate(verts):
            prev, nxt = verts[i - 1], verts[(i + 1) % n]
            a_in = e.vertex_of_arc[(v, prev, copies[i - 1])]
            a_out = e.vertex_of_arc[(v, nxt, copies[i])]
            pairs_at[v].append((pos[a_in], pos[a_out]))
            cyc_ends.append((a_in, a_out))
        ends.append(cyc_ends)
    paths_at = [walecki_paths(km, pairs_at[v]).paths for v in range(x.n)]
    out = []
    for j, (verts, _) in enumerate(cert.cycles):
        seq: list[int] = []
        for v in verts:
            clique = e.clique_of[v]
            seq.extend(clique[p] for p in paths_at[v][j])
        out.append((tuple(seq), (0,) * len(seq)))
    return HDCertificate(m=1, cycles=tuple(out))


def contract_hd(e: ExpandedGraph, cycles: Sequence[Sequence[int]]) -> HDCertificate:
    """Hamilton decomposition of mX from cycles of K(mX) (vertex sequences)."""
    out = []
    tail = [arc[0] for arc in e.arc_of_vertex]
    for j, seq in enumerate(cycles):
        seq = list(seq)
        if not seq:
            raise CertificateError(f"cycle {j} is empty")
        # rotate so the sequence starts at a clique boundary
        start = next((i for i in range(len(seq)) if tail[seq[i - 1]] != tail[seq[i]]), None)
        if start is None:
            raise CertificateError(f"cycle {j} never leaves a clique")
        seq = seq[start:] + seq[:start]
        verts, copies = [], []
        for i, u in enumerate(seq):
            w = seq[(i + 1) % len(seq)]
            if tail[u] != tail[w]:
                arc = e.arc_of_vertex[u]
                if arc[1] != tail[w] or e.arc_of_vertex[w] != (arc[1], arc[0], arc[2]):
                    raise CertificateError(f"cycle {j}: step {u}->{w} is not a K(mX) edge")
                verts.append(tail[u])
                copies.append(arc[2])
            elif not e.graph.has_edge(u, w):
                raise CertificateError(f"cycle {j}: step {u}->{w} is not a K(mX) edge")
        if len(set(verts)) != len(verts):
            raise CertificateError(f"cycle {j} crosses some clique boundary more than twice")
        out.append((tuple(verts), tuple(copies)))
    cert = HDCertificate(m=e.m, cycles=tuple(out))
    reason = check_hd(Multigraph(e.base, e.m), cert)
    if reason is not None:
        raise CertificateError(f"contracted decomposition invalid: {reason}")
    return cert
