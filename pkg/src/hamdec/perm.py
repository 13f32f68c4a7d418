"""Permutations and permutation groups (Schreier-Sims)."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence


@dataclass(frozen=True)
class Permutation:
    """A bijection of ``0..n-1``; acts on the right, so ``(g * h)(x) = h(g(x))``."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError("images do not form a bijection")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        img = list(range(n))
        seen = set()
        for cyc in cycles:
            for a in cyc:
                if a in seen or not 0 <= a < n:
                    raise ValueError(f"bad point {a} in cycle {tuple(cyc)}")
                seen.add(a)
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                img[a] = b
        return cls(tuple(img))

    @classmethod
    def parse(cls, text: str, n: int, offset: int = 0) -> "Permutation":
        """Parse cycle notation such as ``"(1 2)(3 4)"``; points are shifted by ``-offset``."""
        text = text.strip()
        if text in ("", "()"):
            return cls.identity(n)
        if not re.fullmatch(r"(\(\s*\d+(?:[\s,]+\d+)*\s*\)\s*)+", text):
            raise ValueError(f"not cycle notation: {text!r}")
        cycles = [
            [int(t) - offset for t in re.split(r"[\s,]+", body.strip())]
            for body in re.findall(r"\(([^)]*)\)", text)
        ]
        return cls.from_cycles(n, cycles)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __mul__(self, other: "Permutation") -> "Permutation":
        o = other.images
        return Permutation(tuple(o[i] for i in self.images))

    def __pow__(self, k: int) -> "Permutation":
        result = Permutation.identity(self.degree)
        base = self if k >= 0 else self.inverse()
        for _ in range(abs(k)):
            result = result * base
        return result

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for s in range(len(self.images)):
            if s in seen or self.images[s] == s:
                continue
            cyc = [s]
            seen.add(s)
            x = self.images[s]
            while x != s:
                cyc.append(x)
                seen.add(x)
                x = self.images[x]
            out.append(tuple(cyc))
        return out

    def format(self, offset: int = 0) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(str(a + offset) for a in c) + ")" for c in cyc)

    def __repr__(self):
        return f"Permutation({self.format()})"


def _sift_image(t_inv: tuple[int, ...], g: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(t_inv[i] for i in g)


@dataclass
class PermGroup:
    """Group generated by ``generators`` acting on ``0..degree-1``.

    The stabiliser chain is built lazily by deterministic Schreier-Sims.
    """

    degree: int
    generators: list[Permutation]
    _base: Optional[list[int]] = field(default=None, repr=False)
    _levels: Optional[list] = field(default=None, repr=False)

    def __post_init__(self):
        for g in self.generators:
            if g.degree != self.degree:
                raise ValueError("generator degree mismatch")

    # -- orbits --------------------------------------------------------------

    def orbits(self) -> list[list[int]]:
        parent = list(range(self.degree))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for g in self.generators:
            for i, j in enumerate(g.images):
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[max(ri, rj)] = min(ri, rj)
        groups: dict[int, list[int]] = {}
        for i in range(self.degree):
            groups.setdefault(find(i), []).append(i)
        return sorted(groups.values())

    def orbit(self, x: int) -> list[int]:
        seen = {x}
        frontier = [x]
        while frontier:
            nxt = []
            for a in frontier:
                for g in self.generators:
                    b = g.images[a]
                    if b not in seen:
                        seen.add(b)
                        nxt.append(b)
            frontier = nxt
        return sorted(seen)

    def is_transitive(self) -> bool:
        return self.degree <= 1 or len(self.orbit(0)) == self.degree

    # -- Schreier-Sims -------------------------------------------------------

    def _schreier_sims(self):
        n = self.degree
        ident = tuple(range(n))
        base: list[int] = []
        # per level: strong generators (tuples) and transversal {point: coset rep}
        gens: list[list[tuple[int, ...]]] = []
        trans: list[dict[int, tuple[int, ...]]] = []

        def inv(p):
            q = [0] * n
            for i, j in enumerate(p):
                q[j] = i
            return tuple(q)

        def mul(p, q):
            return tuple(q[i] for i in p)

        def build_orbit(level):
            b = base[level]
            t = {b: ident}
            frontier = [b]
            while frontier:
                nxt = []
                for a in frontier:
                    for s in gens[level]:
                        c = s[a]
                        if c not in t:
                            t[c] = mul(t[a], s)
                            nxt.append(c)
                frontier = nxt
            trans[level] = t

        def sift(g):
            for level in range(len(base)):
                c = g[base[level]]
                rep = trans[level].get(c)
                if rep is None:
                    return g, level
                g = mul(g, inv(rep))
            return g, len(base)

        def add_level(g):
            moved = next(i for i in range(n) if g[i] != i)
            base.append(moved)
            gens.append([])
            trans.append({moved: ident})

        todo = [tuple(g.images) for g in self.generators if not g.is_identity()]
        for g in todo:
            if not base:
                add_level(g)
        if not base:
            self._base, self._levels = [], []
            return
        gens[0] = list(todo)
        build_orbit(0)

        # Standard incremental version: ensure each level's Schreier generators sift.
        level = len(base) - 1
        while level >= 0:
            restart = False
            for a, ta in list(trans[level].items()):
                for s in list(gens[level]):
                    tas = mul(ta, s)
                    rep = trans[level][tas[base[level]]]
                    sg = mul(tas, inv(rep))
                    if sg == ident:
                        continue
                    h, j = sift(sg)
                    if h == ident:
                        continue
                    if j == len(base):
                        add_level(h)
                    for lv in range(level + 1, j + 1):
                        gens[lv].append(h)
                        build_orbit(lv)
                    level = j
                    restart = True
                    break
                if restart:
                    break
            if not restart:
                level -= 1
        self._base = base
        self._levels = [(gens[i], trans[i]) for i in range(len(base))]

    def _chain(self):
        if self._levels is None:
            self._schreier_sims()
        return self._base, self._levels

    @property
    def order(self) -> int:
        _, levels = self._chain()
        out = 1
        for _, t in levels:
            out *= len(t)
        return out

    def contains(self, p: Permutation) -> bool:
        if p.degree != self.degree:
            return False
        base, levels = self._chain()
        n = self.degree
        g = p.images
        for b, (_, t) in zip(base, levels):
            rep = t.get(g[b])
            if rep is None:
                return False
            q = [0] * n
            for i, j in enumerate(rep):
                q[j] = i
            g = tuple(q[i] for i in g)
        return all(i == j for i, j in enumerate(g))

    def elements(self) -> list[Permutation]:
        """All elements, by breadth-first closure (small groups only)."""
        ident = tuple(range(self.degree))
        seen = {ident}
        order = [ident]
        frontier = [ident]
        while frontier:
            nxt = []
            for a in frontier:
                for g in self.generators:
                    b = tuple(g.images[i] for i in a)
                    if b not in seen:
                        seen.add(b)
                        order.append(b)
                        nxt.append(b)
            frontier = nxt
        return [Permutation(p) for p in order]


def read_generators(path, n: int, offset: int = 0) -> list[Permutation]:
    """Read one cycle-notation permutation per line; ``#`` starts a comment."""
    out = []
    with open(path) as fh:
        for line in fh:
            line = line.split("#", 1)[0].strip()
            if line:
                out.append(Permutation.parse(line, n, offset))
    return out
