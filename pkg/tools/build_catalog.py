"""Regenerate src/hamdec/data/catalog.tsv.

Needs networkx (not a runtime dependency).  The cubic arc-transitive
graphs come from LCF codes and standard constructions; hamdec re-checks
order, cubicity and arc-transitivity whenever the catalog is loaded.
"""

from itertools import combinations
from pathlib import Path

import networkx as nx

from hamdec.constructions import line_graph, prism
from hamdec.graph import Graph, encode_graph6

LCF = {
    "F8": ([3, -3], 4),
    "F14": ([5, -5], 7),
    "F16": ([5, -5], 8),
    "F18": ([5, 7, -7, 7, -7, -5], 3),
    "F20A": ([10, 7, 4, -4, -7, 10, -4, 7, -7, 4], 2),
    "F20B": ([5, -5, 9, -9], 5),
    "F24": ([5, -9, 7, -7, 9, -5], 4),
    "F26": ([-7, 7], 13),
    "F30": ([-13, -9, 7, -7, 9, 13], 5),
    "F32": ([5, -5, 13, -13], 8),
}


def from_nx(h) -> Graph:
    h = nx.convert_node_labels_to_integers(h, ordering="sorted")
    return Graph.from_edges(h.number_of_nodes(), sorted(tuple(sorted(e)) for e in h.edges()))


def coxeter() -> Graph:
    # triples of a 7-set that are not Fano lines, adjacent when disjoint
    fano = [{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}]
    tr = [set(t) for t in combinations(range(7), 3) if set(t) not in fano]
    return Graph.from_edges(28, [(i, j) for i, j in combinations(range(28), 2) if not tr[i] & tr[j]])


def generalized_petersen(n: int, k: int) -> Graph:
    e = [(i, (i + 1) % n) for i in range(n)] + [(i, n + i) for i in range(n)]
    e += [(n + i, n + (i + k) % n) for i in range(n)]
    return Graph.from_edges(2 * n, e)


def haar_z5z5() -> Graph:
    els = [(a, b) for a in range(5) for b in range(5)]
    idx = {e: i for i, e in enumerate(els)}
    conn = [(0, 0), (1, 0), (0, 1)]
    e = [(idx[u], 25 + idx[((u[0] + s[0]) % 5, (u[1] + s[1]) % 5)]) for u in els for s in conn]
    return Graph.from_edges(50, e)


def build() -> dict[str, Graph]:
    out = {}
    for name, (code, rep) in LCF.items():
        out[name] = from_nx(nx.LCF_graph(len(code) * rep, code, rep))
    out["F10"] = from_nx(nx.petersen_graph())
    out["F28"] = coxeter()
    out["F40"] = from_nx(nx.tensor_product(nx.dodecahedral_graph(), nx.complete_graph(2)))
    out["F48"] = generalized_petersen(24, 5)
    out["F50"] = haar_z5z5()
    order = ["F8", "F10", "F14", "F16", "F18", "F20A", "F20B", "F24", "F26", "F28", "F30", "F32",
             "F40", "F48", "F50"]
    out = {k: out[k] for k in order}
    out["LF10"] = line_graph(out["F10"])
    out["LF28"] = line_graph(out["F28"])
    out["PRISM3"] = prism(3)
    return out


def main():
    path = Path(__file__).resolve().parents[1] / "src" / "hamdec" / "data" / "catalog.tsv"
    lines = [f"{name}\t{encode_graph6(g)}" for name, g in build().items()]
    path.write_text("\n".join(lines) + "\n")
    print(f"wrote {len(lines)} graphs to {path}")


if __name__ == "__main__":
    main()
