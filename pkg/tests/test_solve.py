from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hamdec.constructions import complete_bipartite, complete_graph, cycle_graph, prism
from hamdec.errors import BudgetExceeded
from hamdec.graph import Graph, Multigraph
from hamdec.solve import (
    HDCertificate,
    P1FCertificate,
    canonical_cycle,
    check_hd,
    check_p1f,
    direct_hd_search,
    edge_usage,
    enumerate_hamilton_cycles,
    hd_feasibility,
    is_hamilton_cycle,
    kotzig_obstruction,
    p1f_search,
    p1f_to_hd,
    realize,
    verify_hd,
    verify_p1f,
)

SMALL = {
    "K4": complete_graph(4),
    "C5": cycle_graph(5),
    "C6": cycle_graph(6),
    "K33": complete_bipartite(3, 3),
    "PRISM3": prism(3),
}


def brute_cycles(g):
    out = set()
    if g.n < 3:
        return out
    for rest in permutations(range(1, g.n)):
        seq = (0,) + rest
        if is_hamilton_cycle(g, seq):
            out.add(canonical_cycle(seq))
    return out


@st.composite
def small_graphs(draw):
    n = draw(st.integers(3, 8))
    pairs = [(i, j) for j in range(n) for i in range(j)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True, min_size=n))
    return Graph.from_edges(n, edges)


@settings(max_examples=60, deadline=None)
@given(small_graphs())
def test_enumeration_matches_brute_force(g):
    hcs = enumerate_hamilton_cycles(g)
    assert set(hcs.cycles) == brute_cycles(g)
    assert list(hcs.cycles) == sorted(hcs.cycles)
    for i, c in enumerate(hcs.cycles):
        assert c[0] == 0 and c[1] < c[-1]
        assert bin(hcs.masks[i]).count("1") == g.n


@pytest.mark.parametrize("name,count", [
    ("F8", 6), ("F10", 0), ("F14", 24), ("F16", 6), ("F28", 0), ("PRISM3", 3), ("LF10", 160),
])
def test_cycle_counts(graphs, name, count):
    assert len(enumerate_hamilton_cycles(graphs[name])) == count


def test_canonical_cycle():
    assert canonical_cycle((2, 0, 1, 3)) == (0, 1, 3, 2)
    assert canonical_cycle((3, 1, 0, 2)) == (0, 1, 3, 2)


def test_enumeration_budget(graphs):
    with pytest.raises(BudgetExceeded):
        enumerate_hamilton_cycles(graphs["LF28"], budget=1000)


@pytest.mark.parametrize("name,m,expected", [
    ("F8", 2, False), ("F14", 2, True), ("F10", 2, False), ("F10", 3, False),
    ("F8", 1, True), ("F8", 3, True), ("F16", 2, False), ("F16", 3, True),
])
def test_hd_feasibility(graphs, name, m, expected):
    x = graphs[name]
    v = hd_feasibility(x, m)
    assert v.decomposable == expected
    if expected:
        assert verify_hd(Multigraph(x, m), v.certificate)
        assert v.certificate.counts is not None
        assert sum(v.certificate.counts) == 3 * m // 2


def test_single_cycle_for_cubic(graphs):
    for name in ("F8", "F14", "F16", "F18"):
        v = hd_feasibility(graphs[name], 1)
        assert v.decomposable and len(v.certificate.cycles) == 1


def test_refutation_kinds(graphs):
    assert hd_feasibility(graphs["F10"], 2).refutation.kind == "NoHamiltonCycle"
    assert hd_feasibility(graphs["F8"], 2).refutation.kind == "Exhausted"


def test_label_route_agrees(graphs):
    for name, m in (("F8", 2), ("F8", 3), ("F14", 2), ("LF10", 1), ("K4", 2)):
        x = graphs.get(name) or SMALL[name]
        a = hd_feasibility(x, m, strategy="cycles")
        b = hd_feasibility(x, m, strategy="labels")
        assert a.decomposable == b.decomposable
        if b.decomposable:
            assert verify_hd(Multigraph(x, m), b.certificate)


@pytest.mark.parametrize("name", sorted(SMALL))
@pytest.mark.parametrize("m", [1, 2, 3])
def test_direct_agrees_small(name, m):
    x = SMALL[name]
    a = hd_feasibility(x, m)
    b = direct_hd_search(Multigraph(x, m))
    assert a.decomposable == b.decomposable
    for v in (a, b):
        if v.decomposable:
            assert check_hd(Multigraph(x, m), v.certificate) is None


def test_rejects_bad_input():
    with pytest.raises(ValueError):
        hd_feasibility(Graph.from_edges(3, [(0, 1), (1, 2)]), 1)
    with pytest.raises(ValueError):
        hd_feasibility(Graph.from_edges(4, [(0, 1), (2, 3)]), 1)
    with pytest.raises(ValueError):
        hd_feasibility(cycle_graph(4), 0)


def test_realize_and_usage(graphs):
    x = graphs["F14"]
    hcs = enumerate_hamilton_cycles(x)
    v = hd_feasibility(x, 2, hcs=hcs)
    cert = realize(x, 2, v.certificate.counts, hcs)
    assert verify_hd(Multigraph(x, 2), cert, hcs)
    usage = edge_usage(x, cert)
    assert len(usage) == 2 * x.num_edges and set(usage.values()) == {1}


def test_verify_hd_catches_errors(graphs):
    x = graphs["F14"]
    mg = Multigraph(x, 2)
    cert = hd_feasibility(x, 2).certificate
    verts, copies = cert.cycles[0]
    assert "cycles" in check_hd(mg, HDCertificate(2, cert.cycles[:2], None))
    bad = ((verts[:-1], copies[:-1]),) + cert.cycles[1:]
    assert "not a Hamilton cycle" in check_hd(mg, HDCertificate(2, bad, None))
    dup = (cert.cycles[0],) * 3
    assert "already used" in check_hd(mg, HDCertificate(2, dup, None))
    out_of_range = ((verts, tuple(c + 2 for c in copies)),) + cert.cycles[1:]
    assert "out of range" in check_hd(mg, HDCertificate(2, out_of_range, None))
    assert "m=" in check_hd(Multigraph(x, 3), cert)
    wrong_counts = HDCertificate(2, cert.cycles, tuple(reversed(cert.counts)))
    assert check_hd(mg, wrong_counts) is not None


def test_kotzig(graphs):
    assert kotzig_obstruction(graphs["F8"])
    assert not kotzig_obstruction(graphs["F10"])
    assert not kotzig_obstruction(graphs["F14"])
    assert not kotzig_obstruction(cycle_graph(8))


def test_p1f(graphs):
    v = p1f_search(graphs["F14"])
    assert v.decomposable and verify_p1f(graphs["F14"], v.certificate)
    hd = p1f_to_hd(graphs["F14"], v.certificate)
    assert verify_hd(Multigraph(graphs["F14"], 2), hd)
    assert p1f_search(graphs["F10"]).refutation.kind == "Exhausted"
    ref = p1f_search(graphs["F8"]).refutation
    assert ref.kind == "Exhausted" and ref.detail["exhaustive"] and ref.detail["kotzig_condition"]


def test_check_p1f_errors(graphs):
    x = graphs["F14"]
    good = p1f_search(x).certificate.coloring
    assert check_p1f(x, P1FCertificate((0,) * x.num_edges)) is not None
    assert check_p1f(x, P1FCertificate(good[:-1])) is not None
    # the cube as a 4-prism: rungs 2, rims alternating 0/1; colours 0,1 make two 4-cycles
    cube = prism(4)
    col = (0, 1, 0, 1, 0, 1, 0, 1, 2, 2, 2, 2)
    assert "not 8" in check_p1f(cube, P1FCertificate(tuple(col)))


def test_p1f_matches_double_cover(graphs):
    for name in ("F8", "F10", "F14", "F16", "F18", "F20A", "F20B", "F24", "F26"):
        x = graphs[name]
        assert p1f_search(x).decomposable == hd_feasibility(x, 2).decomposable, name
