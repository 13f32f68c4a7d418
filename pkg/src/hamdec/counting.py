"""The counting refutation for Hamilton decompositions of mX with km even.

When km is even every copy of every edge lies on some cycle, so the cycle
multiplicities n_i satisfy, for each base edge e,

    sum_i delta_i(e) n_i = m,        and     sum_i n_i = km/2.

If this system has no solution modulo 2 or 4, no decomposition exists.  An
unsolvable system A n = b over Z/q always has a dual witness y with
y A = 0 and y b != 0 (mod q), which makes the refutation easy to re-check.
Failing both moduli, the box 0 <= n_i <= m is searched exhaustively.
"""

from __future__ import annotations

from itertools import product
from typing import Optional, Sequence

from .graph import Graph
from .solve import (
    DEFAULT_BUDGET,
    HamiltonCycleSet,
    Refutation,
    _multiset_search,
    _regular_connected,
    enumerate_hamilton_cycles,
)

MODULI = (2, 4)


def count_system(x: Graph, m: int, hcs: HamiltonCycleSet) -> tuple[list[list[int]], list[int]]:
    """Rows: one per base edge, then the cycle-count row.  Columns: cycles."""
    k = x.valency()
    rows = hcs.incidence()
    rows.append([1] * len(hcs))
    rhs = [m] * x.num_edges + [k * m // 2]
    return rows, rhs


def _valuation(a: int, q: int) -> int:
    """Exponent of 2 in a mod q (q a power of two); q itself for zero."""
    a %= q
    if a == 0:
        return q
    v = 0
    while a % 2 == 0:
        a //= 2
        v += 1
    return v


def residue_witness(rows: Sequence[Sequence[int]], rhs: Sequence[int], q: int) -> Optional[list[int]]:
    """A vector y with y.A = 0 and y.b != 0 mod q, or None if A n = b is solvable mod q.

    q must be a power of two.  Diagonalises A by row and column operations,
    always pivoting on an entry of least 2-adic valuation, while tracking the
    row operations so the failing row can be expressed in the original rows.
    """
    if q < 2 or q & (q - 1):
        raise ValueError("modulus must be a power of two")
    R, C = len(rows), len(rows[0]) if rows else 0
    a = [[v % q for v in row] for row in rows]
    b = [v % q for v in rhs]
    # p[i] expresses current row i as a combination of the original rows
    p = [[int(i == j) for j in range(R)] for i in range(R)]
    r = 0
    pivots = []
    while r < R:
        best = None
        for i in range(r, R):
            for j in range(r, C):
                if a[i][j]:
                    v = _valuation(a[i][j], q)
                    if best is None or v < best[0]:
                        best = (v, i, j)
                        if v == 0:
                            break
            if best is not None and best[0] == 0:
                break
        if best is None:
            break
        v, i, j = best
        a[r], a[i] = a[i], a[r]
        b[r], b[i] = b[i], b[r]
        p[r], p[i] = p[i], p[r]
        for row in a:
            row[r], row[j] = row[j], row[r]
        d = 1 << v
        unit = a[r][r] // d
        inv = pow(unit, -1, q)
        a[r] = [x * inv % q for x in a[r]]
        b[r] = b[r] * inv % q
        p[r] = [x * inv % q for x in p[r]]
        for i2 in range(R):
            if i2 != r and a[i2][r]:
                f = a[i2][r] // d
                a[i2] = [(x - f * y) % q for x, y in zip(a[i2], a[r])]
                b[i2] = (b[i2] - f * b[r]) % q
                p[i2] = [(x - f * y) % q for x, y in zip(p[i2], p[r])]
        # column operations only change variables, so b is untouched
        for j2 in range(r + 1, C):
            if a[r][j2]:
                f = a[r][j2] // d
                for row in a:
                    row[j2] = (row[j2] - f * row[r]) % q
        pivots.append(d)
        r += 1
    for i in range(R):
        d = pivots[i] if i < len(pivots) else q
        if b[i] % d:
            scale = q // d
            return [x * scale % q for x in p[i]]
    return None


def check_witness(rows: Sequence[Sequence[int]], rhs: Sequence[int], q: int, y: Sequence[int]) -> bool:
    if len(y) != len(rows):
        return False
    cols = len(rows[0]) if rows else 0
    for j in range(cols):
        if sum(yi * row[j] for yi, row in zip(y, rows)) % q:
            return False
    return sum(yi * bi for yi, bi in zip(y, rhs)) % q != 0


def residues_solvable(rows: Sequence[Sequence[int]], rhs: Sequence[int], q: int, limit: int = 1 << 22) -> Optional[bool]:
    """Brute force over all residue vectors; None when q**columns exceeds ``limit``."""
    cols = len(rows[0]) if rows else 0
    if q ** cols > limit:
        return None
    for n in product(range(q), repeat=cols):
        if all((sum(a * x for a, x in zip(row, n)) - b) % q == 0 for row, b in zip(rows, rhs)):
            return True
    return False


def counting_obstruction(x: Graph, m: int, hcs: Optional[HamiltonCycleSet] = None,
                         budget: int = DEFAULT_BUDGET, exhaust: bool = True) -> Optional[Refutation]:
    """A CountingObstruction refutation for mX, or None when the system is feasible.

    With ``exhaust=False`` only the modular tests run, and None means
    "no modular obstruction".
    """
    k = _regular_connected(x)
    if m < 1:
        raise ValueError("multiplicity must be positive")
    if (k * m) % 2:
        raise ValueError("counting system needs k*m even")
    if hcs is None:
        hcs = enumerate_hamilton_cycles(x, budget)
    if not len(hcs):
        return Refutation("CountingObstruction", {"modulus": None, "cycles": 0, "reason": "no Hamilton cycle"})
    rows, rhs = count_system(x, m, hcs)
    for q in MODULI:
        y = residue_witness(rows, rhs, q)
        if y is not None:
            return Refutation("CountingObstruction", {
                "modulus": q,
                "cycles": len(hcs),
                "rows": [[a % q for a in row] for row in rows],
                "rhs": [b % q for b in rhs],
                "witness": y,
            })
    if not exhaust:
        return None
    counts, stats = _multiset_search(x, hcs, m, budget)
    if counts is not None:
        return None
    return Refutation("CountingObstruction", {
        "modulus": None,
        "cycles": len(hcs),
        "reason": "no solution in the box 0 <= n_i <= m",
        "nodes": stats["nodes"],
    })


def verify_counting_refutation(x: Graph, m: int, ref: Refutation,
                               hcs: Optional[HamiltonCycleSet] = None) -> bool:
    """Re-derive the system from ``x`` and re-check the stored evidence.

    A modular refutation is checked through its witness and, when the
    residue space is small, by trying every residue vector as well.  A box
    refutation is checked by repeating the search.
    """
    if ref.kind != "CountingObstruction":
        return False
    if hcs is None:
        hcs = enumerate_hamilton_cycles(x)
    detail = ref.detail
    if detail.get("cycles") != len(hcs):
        return False
    if not len(hcs):
        return True
    rows, rhs = count_system(x, m, hcs)
    q = detail.get("modulus")
    if q is None:
        counts, _ = _multiset_search(x, hcs, m, DEFAULT_BUDGET)
        return counts is None
    if [b % q for b in rhs] != list(detail.get("rhs", ())):
        return False
    if [[a % q for a in row] for row in rows] != [list(r) for r in detail.get("rows", ())]:
        return False
    if not check_witness(rows, rhs, q, detail.get("witness", ())):
        return False
    return residues_solvable(rows, rhs, q) is not True
