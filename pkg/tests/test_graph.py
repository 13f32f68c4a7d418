import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hamdec.graph import (
    Graph,
    Graph6Error,
    Multigraph,
    encode_graph6,
    parse_graph6,
    profile,
    read_graph6_lines,
)


@st.composite
def graphs(draw, max_n=20):
    n = draw(st.integers(0, max_n))
    pairs = [(i, j) for j in range(n) for i in range(j)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


def naive_graph6(n, edges):
    """Straight transcription of the format: size prefix, then the upper
    triangle column by column, six bits per printable character."""
    es = {tuple(sorted(e)) for e in edges}
    if n < 63:
        head = [n]
    elif n < 258048:
        head = [63, n >> 12 & 63, n >> 6 & 63, n & 63]
    else:
        head = [63, 63] + [n >> s & 63 for s in (30, 24, 18, 12, 6, 0)]
    bits = "".join("1" if (i, j) in es else "0" for j in range(n) for i in range(j))
    bits += "0" * (-len(bits) % 6)
    body = [int(bits[k:k + 6], 2) for k in range(0, len(bits), 6)]
    return "".join(chr(63 + v) for v in head + body)


def test_from_edges_normalises():
    g = Graph.from_edges(3, [(2, 0), (1, 2)])
    assert g.edges == ((0, 2), (1, 2))
    assert g.has_edge(2, 1) and not g.has_edge(0, 1)
    assert g.degree(2) == 2
    assert g.edge_index(2, 0) == 0


@pytest.mark.parametrize("edges,msg", [
    ([(0, 0)], "loop"),
    ([(0, 1), (1, 0)], "parallel"),
    ([(0, 3)], "out of range"),
])
def test_from_edges_rejects(edges, msg):
    with pytest.raises(ValueError, match=msg):
        Graph.from_edges(3, edges)


def test_known_strings():
    # K4 and the 5-cycle as printed by the usual tools
    assert encode_graph6(Graph.from_edges(4, [(i, j) for j in range(4) for i in range(j)])) == "C~"
    assert encode_graph6(Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])) == "Dhc"
    assert parse_graph6("?").n == 0


@given(graphs())
def test_encoder_matches_naive(g):
    assert encode_graph6(g) == naive_graph6(g.n, g.edges)


@given(graphs())
def test_round_trip(g):
    assert parse_graph6(encode_graph6(g)) == g


def test_long_prefix():
    g = Graph.from_edges(70, [(i, i + 1) for i in range(69)])
    s = encode_graph6(g)
    assert s.startswith("~?@E")
    assert parse_graph6(s) == g
    assert parse_graph6(">>graph6<<" + s) == g


@pytest.mark.parametrize("text,offset", [
    ("C~x", 2),        # trailing data byte
    ("C", 1),          # missing data byte
    ("B~", 1),         # nonzero padding bit
    ("C\x7f", 1),      # outside printable range
    ("~???", 0),       # 4-byte prefix for n < 63
    ("~?", 2),         # truncated prefix
    ("", 0),
])
def test_parse_errors_report_offset(text, offset):
    with pytest.raises(Graph6Error) as info:
        parse_graph6(text)
    assert info.value.offset == offset


def test_header_shifts_offset():
    with pytest.raises(Graph6Error) as info:
        parse_graph6(">>graph6<<C~x")
    assert info.value.offset == 12


def test_read_lines_skips_blank():
    assert [g.n for g in read_graph6_lines(["C~\n", "\n", "Dhc\n"])] == [4, 5]


def test_profile():
    c6 = Graph.from_edges(6, [(i, (i + 1) % 6) for i in range(6)])
    p = profile(c6)
    assert (p.order, p.valency, p.bipartite, p.connected) == (6, 2, True, True)
    assert all(p.coloring[a] != p.coloring[b] for a, b in c6.edges)
    two = Graph.from_edges(4, [(0, 1), (2, 3)])
    assert not profile(two).connected
    tri = Graph.from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
    q = profile(tri)
    assert not q.bipartite and q.coloring is None and q.valency is None


@settings(max_examples=50)
@given(graphs(12), st.integers(1, 3))
def test_multigraph_counts(g, m):
    mg = Multigraph(g, m)
    assert mg.num_edges == m * g.num_edges
    assert len(mg.arcs()) == 2 * m * g.num_edges
    k = g.valency()
    assert mg.valency() == (None if k is None else k * m)


def test_multigraph_rejects_zero():
    with pytest.raises(ValueError):
        Multigraph(Graph.from_edges(2, [(0, 1)]), 0)


def test_relabel_preserves_structure():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    h = g.relabel([3, 2, 1, 0])
    assert h.edge_set() == g.edge_set()
