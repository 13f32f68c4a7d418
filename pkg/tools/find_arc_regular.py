"""Write generator files for arc-regular subgroups of catalog graphs.

For each requested graph, tries pairs of automorphisms until they generate
a group whose order equals the number of arcs and which is arc-transitive.
Where the intended group is known, its element-order statistics must match
as well (F8 has arc-regular subgroups other than Sym(4)).
The result is written in cycle notation (points numbered from 1) to
src/hamdec/data/arc_regular/<NAME>.txt.
"""

import sys
from collections import Counter
from itertools import combinations
from pathlib import Path

from hamdec.catalog import load_catalog
from hamdec.perm import PermGroup
from hamdec.symmetry import automorphism_group, verify_regular_arc_action


# element order -> number of elements
SIGNATURE = {
    "F8": {1: 1, 2: 9, 3: 8, 4: 6},  # Sym(4)
    "F16": {1: 1, 2: 13, 3: 8, 4: 6, 6: 8, 8: 12},  # GL(2,3)
}


def element_order(p):
    k, q = 1, p
    while not q.is_identity():
        q = q * p
        k += 1
    return k


def find(x, signature=None):
    elements = sorted(automorphism_group(x).elements(), key=lambda p: p.images)
    narcs = 2 * x.num_edges
    for a, b in combinations(elements, 2):
        if a.is_identity() or b.is_identity():
            continue
        h = PermGroup(x.n, [a, b])
        if h.order != narcs or not verify_regular_arc_action(x, h):
            continue
        if signature is None or dict(Counter(map(element_order, h.elements()))) == signature:
            return [a, b]
    return None


def main(names):
    cat = load_catalog(validate=False)
    out = Path(__file__).resolve().parents[1] / "src" / "hamdec" / "data" / "arc_regular"
    out.mkdir(parents=True, exist_ok=True)
    for name in names:
        gens = find(cat[name].graph, SIGNATURE.get(name))
        if gens is None:
            print(f"{name}: no arc-regular subgroup generated by two elements")
            continue
        lines = [f"# arc-regular subgroup of Aut({name}), order {2 * cat[name].graph.num_edges}"]
        if name in SIGNATURE:
            lines.append(f"# element orders {SIGNATURE[name]}")
        lines += [g.format(offset=1) for g in gens]
        (out / f"{name}.txt").write_text("\n".join(lines) + "\n")
        print(f"{name}: wrote {len(gens)} generators")


if __name__ == "__main__":
    main(sys.argv[1:] or ["F8", "F16"])
