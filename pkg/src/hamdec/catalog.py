"""Named graphs: the cubic arc-transitive census entries and a few extras.

The census graphs ship as a graph6 table (``data/catalog.tsv``).  Nothing
about the file is trusted: each entry is checked against its expected
order, valency and bipartiteness, and F-entries must be arc-transitive.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Iterator, Optional

from .constructions import complete_bipartite, complete_graph, cycle_graph, prism
from .graph import Graph, Graph6Error, parse_graph6, profile
from .perm import PermGroup, read_generators
from .symmetry import is_arc_transitive

ENV_VAR = "HAMDEC_CATALOG"

# name -> (order, valency, bipartite)
EXPECTED = {
    "F8": (8, 3, True),
    "F10": (10, 3, False),
    "F14": (14, 3, True),
    "F16": (16, 3, True),
    "F18": (18, 3, True),
    "F20A": (20, 3, False),
    "F20B": (20, 3, True),
    "F24": (24, 3, True),
    "F26": (26, 3, True),
    "F28": (28, 3, False),
    "F30": (30, 3, True),
    "F32": (32, 3, True),
    "F40": (40, 3, True),
    "F48": (48, 3, True),
    "F50": (50, 3, True),
    "LF10": (15, 4, False),
    "LF28": (42, 4, False),
    "PRISM3": (6, 3, False),
}

# small graphs that are always available without a data file
BUILTIN = {
    "K4": lambda: complete_graph(4),
    "C5": lambda: cycle_graph(5),
    "C6": lambda: cycle_graph(6),
    "C3": lambda: cycle_graph(3),
    "C4": lambda: cycle_graph(4),
    "K33": lambda: complete_bipartite(3, 3),
    "PRISM3": lambda: prism(3),
}


class CatalogError(ValueError):
    pass


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    graph: Graph
    expected: Optional[tuple[int, int, bool]] = None

    @property
    def is_census(self) -> bool:
        return self.name.startswith("F")


def default_path() -> Path:
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    return Path(str(resources.files("hamdec") / "data" / "catalog.tsv"))


def _check(entry: CatalogEntry, arc_check: bool) -> None:
    g = entry.graph
    if entry.expected is not None:
        order, valency, bip = entry.expected
        p = profile(g)
        if p.order != order:
            raise CatalogError(f"{entry.name}: order {p.order}, expected {order}")
        if p.valency != valency:
            raise CatalogError(f"{entry.name}: valency {p.valency}, expected {valency}")
        if p.bipartite != bip:
            raise CatalogError(f"{entry.name}: bipartite={p.bipartite}, expected {bip}")
        if not p.connected:
            raise CatalogError(f"{entry.name}: not connected")
    if entry.is_census:
        if g.valency() != 3:
            raise CatalogError(f"{entry.name}: census entry is not cubic")
        if arc_check and not is_arc_transitive(g):
            raise CatalogError(f"{entry.name}: not arc-transitive")


class Catalog:
    """Ordered name -> entry mapping in file order."""

    def __init__(self, entries: list[CatalogEntry], path: Optional[Path] = None):
        self._entries = {e.name: e for e in entries}
        self.path = path

    def __contains__(self, name: str) -> bool:
        return name in self._entries

    def __getitem__(self, name: str) -> CatalogEntry:
        try:
            return self._entries[name]
        except KeyError:
            raise KeyError(f"no catalog entry {name!r}") from None

    def __iter__(self) -> Iterator[CatalogEntry]:
        return iter(self._entries.values())

    def __len__(self):
        return len(self._entries)

    def names(self) -> list[str]:
        return list(self._entries)

    def get(self, name: str) -> Optional[CatalogEntry]:
        return self._entries.get(name)

    def census(self, max_order: Optional[int] = None) -> list[CatalogEntry]:
        return [e for e in self if e.is_census and (max_order is None or e.graph.n <= max_order)]


def load_catalog(path=None, validate: bool = True, arc_check: bool = True) -> Catalog:
    """Read a ``NAME<TAB>graph6`` table; blank lines and ``#`` comments are skipped."""
    path = Path(path) if path is not None else default_path()
    try:
        text = path.read_text()
    except OSError as exc:
        raise CatalogError(f"cannot read catalog {path}: {exc}") from exc
    entries = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise CatalogError(f"{path}:{lineno}: expected NAME and graph6")
        name, code = parts
        if name in seen:
            raise CatalogError(f"{path}:{lineno}: duplicate entry {name}")
        seen.add(name)
        try:
            g = parse_graph6(code)
        except Graph6Error as exc:
            raise CatalogError(f"{path}:{lineno}: {name}: {exc}") from exc
        entry = CatalogEntry(name, g, EXPECTED.get(name))
        if validate:
            _check(entry, arc_check)
        entries.append(entry)
    return Catalog(entries, path)


def resolve_graph(spec: str, catalog: Optional[Catalog] = None) -> tuple[str, Graph]:
    """A graph named in the catalog, a builtin name, or a literal graph6 string."""
    if catalog is not None and spec in catalog:
        return spec, catalog[spec].graph
    if spec in BUILTIN:
        return spec, BUILTIN[spec]()
    try:
        return spec, parse_graph6(spec)
    except Graph6Error as exc:
        raise CatalogError(f"{spec!r} is neither a known graph name nor valid graph6 ({exc})") from exc


def arc_regular_group(name: str, n: int) -> Optional[PermGroup]:
    """The shipped arc-regular subgroup for ``name``, if there is one."""
    res = resources.files("hamdec") / "data" / "arc_regular" / f"{name}.txt"
    if not res.is_file():
        return None
    return PermGroup(n, read_generators(str(res), n, offset=1))
