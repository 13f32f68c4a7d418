import pytest

from hamdec.catalog import (
    BUILTIN,
    CatalogError,
    EXPECTED,
    arc_regular_group,
    default_path,
    load_catalog,
    resolve_graph,
)
from hamdec.constructions import prism
from hamdec.graph import encode_graph6


def test_bundled_catalog(catalog):
    names = catalog.names()
    assert names[:3] == ["F8", "F10", "F14"]
    assert set(names) == set(EXPECTED)
    for entry in catalog:
        order, valency, bip = entry.expected
        assert entry.graph.n == order and entry.graph.valency() == valency
    assert [e.name for e in catalog.census(20)] == ["F8", "F10", "F14", "F16", "F18", "F20A", "F20B"]


def write(tmp_path, lines):
    p = tmp_path / "cat.tsv"
    p.write_text("\n".join(lines) + "\n")
    return p


def test_wrong_order_rejected(tmp_path, graphs):
    p = write(tmp_path, [f"F10\t{encode_graph6(graphs['F8'])}"])
    with pytest.raises(CatalogError, match="order"):
        load_catalog(p)


def test_not_arc_transitive_rejected(tmp_path):
    # the prism has the right shape for a fake order-6 census entry
    p = write(tmp_path, [f"F6\t{encode_graph6(prism(3))}"])
    with pytest.raises(CatalogError, match="arc-transitive"):
        load_catalog(p)
    assert load_catalog(p, arc_check=False).names() == ["F6"]


@pytest.mark.parametrize("lines,msg", [
    (["F8"], "expected NAME"),
    (["F8\tG~", "F8\tG~"], "graph6|duplicate"),
    (["X\tC~x"], "trailing"),
])
def test_malformed(tmp_path, lines, msg):
    with pytest.raises(CatalogError, match=msg):
        load_catalog(write(tmp_path, lines), validate=False)


def test_comments_and_env(tmp_path, monkeypatch, graphs):
    p = write(tmp_path, ["# small", "", f"F8\t{encode_graph6(graphs['F8'])}  # cube"])
    monkeypatch.setenv("HAMDEC_CATALOG", str(p))
    assert default_path() == p
    assert load_catalog().names() == ["F8"]


def test_missing_file(tmp_path):
    with pytest.raises(CatalogError):
        load_catalog(tmp_path / "nope.tsv")


def test_resolve(catalog):
    assert resolve_graph("F8", catalog)[1] == catalog["F8"].graph
    assert resolve_graph("K33")[1] == BUILTIN["K33"]()
    assert resolve_graph("C~")[1].num_edges == 6
    with pytest.raises(CatalogError):
        resolve_graph("F99", catalog)
    with pytest.raises(KeyError):
        catalog["F99"]


def test_arc_regular_files(catalog):
    assert arc_regular_group("F8", 8).order == 24
    assert arc_regular_group("F16", 16).order == 48
    assert arc_regular_group("F10", 10) is None
