"""Command-line front end.

Exit codes: 0 decomposable / pass, 10 not decomposable, 1 verification
or reproduction mismatch, 2 usage or data error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import logging
import re
import signal
import sys
import time
from pathlib import Path
from typing import Optional

from . import __version__
from .catalog import CatalogError, load_catalog, resolve_graph
from .certio import CertificateFileError, RunRecord, check_file, from_verdict, load, record_to_json, save
from .constructions import blow_up, line_graph
from .counting import counting_obstruction
from .errors import BudgetExceeded
from .graph import Multigraph, encode_graph6, profile
from .reproduce import SECTIONS, run_section
from .solve import DEFAULT_BUDGET, Verdict, direct_hd_search, hd_feasibility, p1f_search

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3
EXIT_NOT_DECOMPOSABLE = 10

log = logging.getLogger("hamdec")


class _UsageError(Exception):
    pass


@contextlib.contextmanager
def wall_clock(seconds: Optional[float]):
    """Turn SIGALRM after ``seconds`` into BudgetExceeded."""
    if not seconds:
        yield
        return

    def fire(signum, frame):
        raise BudgetExceeded(f"wall clock limit of {seconds}s", 0)

    old = signal.signal(signal.SIGALRM, fire)
    signal.setitimer(signal.ITIMER_REAL, seconds)
    try:
        yield
    finally:
        signal.setitimer(signal.ITIMER_REAL, 0)
        signal.signal(signal.SIGALRM, old)


def _catalog(args):
    return load_catalog(args.catalog, arc_check=not args.skip_arc_check)


def _graph(args):
    return resolve_graph(args.graph, _catalog(args))


def cmd_construct(args) -> int:
    name, x = _graph(args)
    if args.target == "mX":
        p = profile(x)
        k = p.valency
        out = {"graph6": encode_graph6(x), "m": args.m, "order": p.order,
               "valency": k * args.m if k is not None else None, "note": "edge multiplicity m over the base graph"}
    else:
        g = blow_up(x, args.m).graph if args.target == "KmX" else line_graph(x)
        p = profile(g)
        out = {"graph6": encode_graph6(g), "order": p.order, "valency": p.valency,
               "bipartite": p.bipartite, "connected": p.connected}
    text = json.dumps(out, sort_keys=True, indent=1) + "\n"
    if args.out:
        Path(args.out).write_text(text)
    sys.stdout.write(text)
    return EXIT_OK


def _decide(x, m: int, method: str, budget: int) -> Verdict:
    if method == "p1f":
        if m != 2 or x.valency() != 3:
            raise _UsageError("method p1f decides 2X for cubic X only (use --m 2)")
        return p1f_search(x, budget)
    if method == "direct":
        return direct_hd_search(Multigraph(x, m), budget)
    k = x.valency()
    if method == "auto" and k is not None and (k * m) % 2 == 0 and k * m >= 2:
        # a cheap modular refutation first, when the cycles can be listed
        try:
            ref = counting_obstruction(x, m, budget=min(budget, 5_000_000), exhaust=False)
        except BudgetExceeded:
            ref = None
        if ref is not None:
            return Verdict(False, refutation=ref, stats={"method": "counting"})
    return hd_feasibility(x, m, budget)


def _default_out(name: str, m: int) -> str:
    safe = re.sub(r"[^A-Za-z0-9_.-]", "_", name)[:40]
    return f"{safe}_m{m}.cert.json"


def cmd_decide(args) -> int:
    name, x = _graph(args)
    t0 = time.perf_counter()
    verdict = _decide(x, args.m, args.method, args.budget_nodes)
    wall = time.perf_counter() - t0
    out = args.out or _default_out(name, args.m)
    cf = from_verdict(name, x, args.m, verdict, args.method)
    save(out, cf)
    rec = RunRecord(
        command="decide",
        inputs={"graph": name, "m": args.m, "method": args.method, "budget_nodes": args.budget_nodes,
                "deterministic": args.deterministic},
        verdict=str(verdict),
        certificate_path=Path(out).name,
        wall_time=round(wall, 6),
        stats=dict(verdict.stats),
        tool_version=__version__,
    )
    Path(out).with_suffix(".run.json").write_text(record_to_json(rec))
    print(f"{name} m={args.m}: {verdict}")
    print(f"certificate written to {out}")
    return EXIT_OK if verdict.decomposable else EXIT_NOT_DECOMPOSABLE


def cmd_reproduce(args) -> int:
    cat = load_catalog(args.catalog, arc_check=not args.skip_arc_check)
    failures = 0
    rows = []
    print(f"== {args.section} ==")
    for row in run_section(args.section, cat, args.budget_nodes, args.max_order):
        print(row.format(), flush=True)
        rows.append(row)
        if row.ok is False:
            failures += 1
    done = sum(r.ok is not None for r in rows)
    print(f"{done - failures}/{done} rows match" + (f", {len(rows) - done} skipped" if len(rows) > done else ""))
    return EXIT_OK if failures == 0 else EXIT_MISMATCH


def cmd_verify(args) -> int:
    cf = load(args.file)
    if args.m is not None and args.m != cf.m:
        cf = type(cf)(**{**cf.__dict__, "m": args.m})
    cat = _catalog(args)
    graph = None
    if cat is not None and cf.graph_name in cat:
        graph = cat[cf.graph_name].graph
    reason = check_file(cf, graph, args.budget_nodes)
    if reason is None:
        print(f"pass: {cf.kind} for {cf.graph_name or cf.graph6} m={cf.m}")
        return EXIT_OK
    print(f"fail: {reason}")
    return EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--catalog", help="graph6 catalog table (default: $HAMDEC_CATALOG or the bundled one)")
    common.add_argument("--budget-nodes", type=int, default=DEFAULT_BUDGET, help="search node budget")
    common.add_argument("--time-limit", type=float, default=None, help="wall-clock limit in seconds")
    common.add_argument("--deterministic", action="store_true",
                        help="single-threaded canonical search (the only mode; accepted for compatibility)")
    common.add_argument("--skip-arc-check", action="store_true", help="skip arc-transitivity checks at catalog load")
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="hamdec", description="Hamilton decompositions of mX and K(mX).")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", parents=[common], help="build mX, K(mX) or L(X)")
    c.add_argument("graph", help="catalog name or graph6 string")
    c.add_argument("--m", type=int, default=1)
    c.add_argument("--target", choices=("mX", "KmX", "L"), default="KmX")
    c.add_argument("--out")
    c.set_defaults(func=cmd_construct)

    d = sub.add_parser("decide", parents=[common], help="decide Hamilton decomposability of mX")
    d.add_argument("graph", help="catalog name or graph6 string")
    d.add_argument("--m", type=int, default=1)
    d.add_argument("--method", choices=("auto", "feasibility", "direct", "p1f"), default="auto")
    d.add_argument("--out", help="certificate path (default: <graph>_m<m>.cert.json)")
    d.set_defaults(func=cmd_decide)

    r = sub.add_parser("reproduce", parents=[common], help="recompute a reference verdict table")
    r.add_argument("section", choices=SECTIONS)
    r.add_argument("--max-order", type=int, default=None, help="skip catalog graphs above this order")
    r.set_defaults(func=cmd_reproduce)

    v = sub.add_parser("verify", parents=[common], help="re-check a certificate file")
    v.add_argument("file")
    v.add_argument("--m", type=int, default=None, help="check against this m instead of the stored one")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    if getattr(args, "m", None) is not None and args.m < 1:
        print("error: --m must be positive", file=sys.stderr)
        return EXIT_USAGE
    try:
        with wall_clock(args.time_limit):
            return args.func(args)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (_UsageError, CatalogError, CertificateFileError, ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
