"""JSON persistence for certificates, refutations and run records.

Files are written with sorted keys and fixed indentation so that loading
and re-dumping a file reproduces it byte for byte.  Each file carries the
graph6 string of its graph and a sha256 of that string, so a certificate
read back against a different graph is rejected.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Union

from .graph import Graph, Graph6Error, Multigraph, encode_graph6, parse_graph6
from .solve import (
    HDCertificate,
    P1FCertificate,
    Refutation,
    Verdict,
    check_hd,
    check_p1f,
    enumerate_hamilton_cycles,
    kotzig_obstruction,
)

FORMAT = "hamdec-certificate"
VERSION = 1
KINDS = ("HD", "P1F", "REFUTATION")


class CertificateFileError(ValueError):
    pass


def graph_hash(g: Graph) -> str:
    return hashlib.sha256(encode_graph6(g).encode("ascii")).hexdigest()


@dataclass(frozen=True)
class CertificateFile:
    graph_name: Optional[str]
    graph6: str
    m: int
    kind: str
    method: str = "auto"
    counts: Optional[tuple[int, ...]] = None
    cycles: Optional[tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]] = None
    coloring: Optional[tuple[int, ...]] = None
    refutation_detail: Optional[dict] = None
    graph_sha256: str = ""

    @property
    def graph(self) -> Graph:
        return parse_graph6(self.graph6)

    def certificate(self) -> Union[HDCertificate, P1FCertificate, Refutation]:
        if self.kind == "HD":
            return HDCertificate(m=self.m, cycles=self.cycles or (), counts=self.counts)
        if self.kind == "P1F":
            return P1FCertificate(self.coloring or ())
        detail = dict(self.refutation_detail or {})
        kind = detail.pop("kind", "Exhausted")
        return Refutation(kind, detail)


def from_verdict(name: Optional[str], g: Graph, m: int, verdict: Verdict, method: str = "auto") -> CertificateFile:
    g6 = encode_graph6(g)
    base = dict(graph_name=name, graph6=g6, m=m, method=method, graph_sha256=graph_hash(g))
    cert = verdict.certificate
    if verdict.decomposable and isinstance(cert, P1FCertificate):
        return CertificateFile(kind="P1F", coloring=tuple(cert.coloring), **base)
    if verdict.decomposable:
        return CertificateFile(kind="HD", counts=cert.counts, cycles=cert.cycles, **base)
    ref = verdict.refutation
    detail = {"kind": ref.kind, **ref.detail}
    return CertificateFile(kind="REFUTATION", refutation_detail=detail, **base)


def to_json(cf: CertificateFile) -> str:
    obj = {
        "format": FORMAT,
        "version": VERSION,
        "graph_name": cf.graph_name,
        "graph6": cf.graph6,
        "graph_sha256": cf.graph_sha256 or graph_hash(cf.graph),
        "m": cf.m,
        "kind": cf.kind,
        "method": cf.method,
        "counts": list(cf.counts) if cf.counts is not None else None,
        "cycles": ([{"vertices": list(v), "copies": list(c)} for v, c in cf.cycles]
                   if cf.cycles is not None else None),
        "coloring": list(cf.coloring) if cf.coloring is not None else None,
        "refutation_detail": cf.refutation_detail,
    }
    return json.dumps(obj, sort_keys=True, indent=1) + "\n"


def _ints(seq, what: str) -> tuple[int, ...]:
    if not isinstance(seq, list) or not all(isinstance(a, int) and not isinstance(a, bool) for a in seq):
        raise CertificateFileError(f"{what} must be a list of integers")
    return tuple(seq)


def from_json(text: str) -> CertificateFile:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CertificateFileError(f"not JSON: {exc}") from exc
    if not isinstance(obj, dict) or obj.get("format") != FORMAT:
        raise CertificateFileError("not a hamdec certificate")
    if obj.get("version") != VERSION:
        raise CertificateFileError(f"unsupported version {obj.get('version')!r}")
    kind = obj.get("kind")
    if kind not in KINDS:
        raise CertificateFileError(f"unknown kind {kind!r}")
    m = obj.get("m")
    if not isinstance(m, int) or m < 1:
        raise CertificateFileError("m must be a positive integer")
    g6 = obj.get("graph6")
    if not isinstance(g6, str):
        raise CertificateFileError("graph6 missing")
    try:
        g = parse_graph6(g6)
    except Graph6Error as exc:
        raise CertificateFileError(f"bad graph6: {exc}") from exc
    digest = obj.get("graph_sha256")
    if digest != graph_hash(g):
        raise CertificateFileError("graph hash does not match the stored graph")
    counts = obj.get("counts")
    cycles = obj.get("cycles")
    coloring = obj.get("coloring")
    detail = obj.get("refutation_detail")
    if cycles is not None:
        if not isinstance(cycles, list):
            raise CertificateFileError("cycles must be a list")
        parsed = []
        for j, c in enumerate(cycles):
            if not isinstance(c, dict):
                raise CertificateFileError(f"cycle {j} must be an object")
            parsed.append((_ints(c.get("vertices"), f"cycle {j} vertices"),
                           _ints(c.get("copies"), f"cycle {j} copies")))
        cycles = tuple(parsed)
    if detail is not None and not isinstance(detail, dict):
        raise CertificateFileError("refutation_detail must be an object")
    return CertificateFile(
        graph_name=obj.get("graph_name"),
        graph6=g6,
        m=m,
        kind=kind,
        method=obj.get("method", "auto"),
        counts=_ints(counts, "counts") if counts is not None else None,
        cycles=cycles,
        coloring=_ints(coloring, "coloring") if coloring is not None else None,
        refutation_detail=detail,
        graph_sha256=digest,
    )


def save(path, cf: CertificateFile) -> None:
    Path(path).write_text(to_json(cf))


def load(path) -> CertificateFile:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise CertificateFileError(f"cannot read {path}: {exc}") from exc
    return from_json(text)


def check_file(cf: CertificateFile, graph: Optional[Graph] = None, budget: Optional[int] = None) -> Optional[str]:
    """None if the stored evidence holds for its graph (and matches ``graph``, if given).

    Refutations are re-derived: the Kotzig condition is re-tested, counting
    witnesses are re-checked, and exhaustive refutations are re-searched.
    """
    from .counting import verify_counting_refutation
    from .solve import DEFAULT_BUDGET, hd_feasibility, direct_hd_search, p1f_search

    g = cf.graph
    if graph is not None and graph != g:
        return "certificate was made for a different graph"
    if cf.kind == "HD":
        if cf.cycles is None:
            return "HD certificate without cycles"
        return check_hd(Multigraph(g, cf.m), cf.certificate())
    if cf.kind == "P1F":
        if cf.m != 2:
            return "perfect 1-factorisation certificates are for m=2"
        if cf.coloring is None:
            return "P1F certificate without colouring"
        return check_p1f(g, cf.certificate())
    ref = cf.certificate()
    budget = budget or DEFAULT_BUDGET
    if ref.kind == "CountingObstruction":
        if (g.valency() or 0) * cf.m % 2:
            return "counting refutation needs k*m even"
        return None if verify_counting_refutation(g, cf.m, ref) else "counting refutation does not re-verify"
    if ref.kind == "KotzigObstruction":
        if cf.m != 2:
            return "Kotzig refutation applies to m=2"
        return None if kotzig_obstruction(g) else "graph does not meet the Kotzig condition"
    if ref.kind == "NoHamiltonCycle":
        return None if not len(enumerate_hamilton_cycles(g, budget)) else "graph has a Hamilton cycle"
    if ref.kind == "Exhausted":
        try:
            if cf.method == "p1f":
                if cf.m != 2:
                    return "1-factorisation refutation applies to m=2"
                again = p1f_search(g, budget)
            elif cf.method == "direct":
                again = direct_hd_search(Multigraph(g, cf.m), budget)
            else:
                again = hd_feasibility(g, cf.m, budget)
        except ValueError as exc:
            return f"search cannot be repeated: {exc}"
        return None if not again.decomposable else "repeated search found a decomposition"
    return f"unknown refutation kind {ref.kind!r}"


@dataclass(frozen=True)
class RunRecord:
    command: str
    inputs: dict
    verdict: str
    certificate_path: Optional[str]
    wall_time: float
    stats: dict = field(default_factory=dict)
    tool_version: str = ""


def record_to_json(rec: RunRecord) -> str:
    obj = {
        "command": rec.command,
        "inputs": rec.inputs,
        "verdict": rec.verdict,
        "certificate_path": rec.certificate_path,
        "wall_time": rec.wall_time,
        "stats": rec.stats,
        "tool_version": rec.tool_version,
    }
    return json.dumps(obj, sort_keys=True, indent=1, default=str) + "\n"


def load_record(path, verify: bool = True) -> RunRecord:
    """Read a run record; with ``verify`` the certificate it names is re-checked."""
    obj = json.loads(Path(path).read_text())
    rec = RunRecord(**obj)
    if verify and rec.certificate_path:
        cert_path = Path(rec.certificate_path)
        if not cert_path.is_absolute():
            cert_path = Path(path).parent / cert_path
        reason = check_file(load(cert_path))
        if reason is not None:
            raise CertificateFileError(f"recorded certificate fails: {reason}")
    return rec
