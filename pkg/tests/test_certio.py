import json

import pytest

from hamdec.certio import (
    CertificateFileError,
    RunRecord,
    check_file,
    from_json,
    from_verdict,
    graph_hash,
    load,
    load_record,
    record_to_json,
    save,
    to_json,
)
from hamdec.constructions import cycle_graph
from hamdec.counting import counting_obstruction
from hamdec.solve import Refutation, Verdict, hd_feasibility, p1f_search


def cases(graphs):
    yield "F14", graphs["F14"], 2, hd_feasibility(graphs["F14"], 2), "feasibility"
    yield "F8", graphs["F8"], 2, hd_feasibility(graphs["F8"], 2), "feasibility"
    yield "F14", graphs["F14"], 2, p1f_search(graphs["F14"]), "p1f"
    yield "F8", graphs["F8"], 2, p1f_search(graphs["F8"]), "p1f"
    yield "F10", graphs["F10"], 3, hd_feasibility(graphs["F10"], 3), "feasibility"
    ref = counting_obstruction(graphs["F8"], 6)
    yield "F8", graphs["F8"], 6, Verdict(False, refutation=ref), "auto"


def test_round_trip_is_bit_exact(graphs):
    for name, g, m, verdict, method in cases(graphs):
        text = to_json(from_verdict(name, g, m, verdict, method))
        again = to_json(from_json(text))
        assert again == text
        assert check_file(from_json(text), g) is None, (name, m, method)


def test_save_load(tmp_path, graphs):
    cf = from_verdict("F14", graphs["F14"], 2, hd_feasibility(graphs["F14"], 2))
    path = tmp_path / "c.json"
    save(path, cf)
    assert load(path) == cf
    assert load(path).certificate().counts == cf.counts


def _mutate(text, fn):
    obj = json.loads(text)
    fn(obj)
    return json.dumps(obj)


def test_tampering_detected(graphs):
    g = graphs["F14"]
    text = to_json(from_verdict("F14", g, 2, hd_feasibility(g, 2)))

    def truncate(o):
        o["cycles"][0]["vertices"].pop()
        o["cycles"][0]["copies"].pop()

    assert check_file(from_json(_mutate(text, truncate))) is not None

    def wrong_m(o):
        o["m"] = 3

    assert check_file(from_json(_mutate(text, wrong_m))) is not None

    def other_graph(o):
        o["graph6"] = "Dhc"

    with pytest.raises(CertificateFileError, match="hash"):
        from_json(_mutate(text, other_graph))
    assert check_file(from_json(text), graph=graphs["F8"]) is not None


@pytest.mark.parametrize("text", [
    "not json",
    "[]",
    '{"format": "other"}',
    '{"format": "hamdec-certificate", "version": 9}',
    '{"format": "hamdec-certificate", "version": 1, "kind": "HD", "m": 0}',
])
def test_parse_failures(text):
    with pytest.raises(CertificateFileError):
        from_json(text)


def test_refutation_rechecks(graphs):
    g = graphs["F8"]
    cf = from_verdict("F8", g, 2, p1f_search(g), "p1f")
    assert cf.refutation_detail["kind"] == "Exhausted"
    assert check_file(cf) is None
    # a Kotzig refutation is re-tested, and order 14 does not meet the condition
    kotzig = Verdict(False, refutation=Refutation("KotzigObstruction", {}))
    assert check_file(from_verdict("F8", g, 2, kotzig, "p1f")) is None
    assert check_file(from_verdict("F14", graphs["F14"], 2, kotzig, "p1f")) is not None
    c5 = cycle_graph(5)
    bogus = from_verdict("C5", c5, 1, Verdict(False, refutation=p1f_search(g).refutation), "p1f")
    assert check_file(bogus) is not None


def test_run_record(tmp_path, graphs):
    g = graphs["F14"]
    save(tmp_path / "c.json", from_verdict("F14", g, 2, hd_feasibility(g, 2)))
    rec = RunRecord("decide", {"graph": "F14", "m": 2}, "Decomposable", "c.json", 0.1, {"nodes": 3}, "0.1.0")
    (tmp_path / "r.json").write_text(record_to_json(rec))
    assert load_record(tmp_path / "r.json") == rec
    text = (tmp_path / "c.json").read_text()
    (tmp_path / "c.json").write_text(text.replace('"m": 2', '"m": 3'))
    with pytest.raises(CertificateFileError):
        load_record(tmp_path / "r.json")


def test_graph_hash_stable(graphs):
    assert graph_hash(graphs["F8"]) == graph_hash(graphs["F8"].relabel(list(range(8))))
    assert graph_hash(graphs["F8"]) != graph_hash(graphs["F10"])
