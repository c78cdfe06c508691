import csv
import io
import json

import pytest

from geodesy import cli
from geodesy.bounds import certify
from geodesy.extremal import gen_cycle_multigraph
from geodesy.geodesic import count_shortest_paths, enumerate_shortest_paths
from geodesy.graph import read_graph, serialize_graph
from geodesy.search import search_max_count


def run(argv):
    buf = io.StringIO()
    code = cli.run_cli([str(a) for a in argv], buf)
    text = buf.getvalue()
    return code, (json.loads(text) if text.lstrip().startswith("{") else text)


@pytest.fixture
def path_graph(tmp_path):
    p = tmp_path / "path.el"
    p.write_text("a b\nb c\nc d\n")
    return p


@pytest.fixture
def c43(tmp_path):
    G, _, _ = gen_cycle_multigraph(3, 2)
    p = tmp_path / "c43.el"
    p.write_text(serialize_graph(G, "edge-list"))
    return p


def test_count_path(path_graph):
    code, rep = run(["count", "--graph", path_graph, "--source", "a", "--target", "d"])
    assert code == 0
    assert rep["results"] == {"n": "1", "t": 3}
    assert rep["command"] == "count" and rep["warnings"] == []


def test_unknown_vertex_and_no_path(path_graph, tmp_path):
    code, rep = run(["count", "--graph", path_graph, "--source", "a", "--target", "zz"])
    assert code == 1 and "UnknownVertexError" in rep["error"]
    p = tmp_path / "two.el"
    p.write_text("a b\nc d\n")
    code, rep = run(["count", "--graph", p, "--source", "a", "--target", "d"])
    assert code == 1 and "NoPathError" in rep["error"]


def test_missing_file_and_parse_error(tmp_path):
    code, rep = run(["girth", "--graph", tmp_path / "nope.el"])
    assert code == 1
    bad = tmp_path / "bad.el"
    bad.write_text("a b\na a\n")
    code, rep = run(["girth", "--graph", bad])
    assert code == 1 and "line 2" in rep["error"]


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as err:
        cli.run_cli(["count", "--graph", "x.el"])
    assert err.value.code == 2
    with pytest.raises(SystemExit) as err:
        cli.run_cli(["frobnicate"])
    assert err.value.code == 2


def test_gen_cycle_to_file(tmp_path):
    out = tmp_path / "c.el"
    code, rep = run(["gen", "cycle", "--delta", 4, "--t", 3, "--out", out])
    assert code == 0
    assert rep["results"]["x"] == "v0" and rep["results"]["y"] == "v3"
    G = read_graph(out)
    assert len(G) == 6 and [m for *_, m in G.edges] == [2] * 6
    assert "# x: v0" in out.read_text()


def test_gen_blowup_json_and_errors(tmp_path):
    out = tmp_path / "b.json"
    code, rep = run(["gen", "blowup", "--delta", 4, "--t", 3, "--out", out])
    assert code == 0 and rep["results"]["closed_form_count"] == "8"
    assert json.loads(out.read_text())["metadata"]["family"] == "blowup-cycle"
    code, rep = run(["gen", "blowup", "--delta", 3, "--t", 3])
    assert code == 1
    code, rep = run(["gen", "blowup", "--delta", 4, "--t", 3, "--mode", "high-girth", "--girth", 6])
    assert code == 1 and "GadgetNotFoundError" in rep["error"]


def test_certify_c43(c43):
    code, rep = run(["certify", "--graph", c43, "--source", "v0", "--target", "v2", "--claims", "theorem1,conjectured"])
    assert code == 0
    v = rep["results"]["verdicts"]
    assert v["theorem1"]["status"] == "pass" and v["conjectured"]["status"] == "pass"
    assert v["conjectured"]["tight"] and not v["theorem1"]["tight"]
    code, rep = run(["certify", "--graph", c43, "--source", "v0", "--target", "v2", "--claims", "bogus"])
    assert code == 1


def test_library_parity(c43):
    G = read_graph(c43)
    _, rep = run(["certify", "--graph", c43, "--source", "v0", "--target", "v2"])
    assert rep["results"] == certify(G, "v0", "v2").to_dict()
    _, rep = run(["enumerate", "--graph", c43, "--source", "v0", "--target", "v2"])
    assert rep["results"]["count"] == str(len(enumerate_shortest_paths(G, "v0", "v2")))
    _, rep = run(["count", "--graph", c43, "--source", "v0", "--target", "v2"])
    assert rep["results"]["n"] == str(count_shortest_paths(G, "v0", "v2"))
    _, rep = run(["search", "--delta", 3, "--t", 2])
    lib = search_max_count(3, 2).to_dict()
    assert all(rep["results"][k] == v for k, v in lib.items())


def test_sample_and_entropy_deterministic(c43):
    argv = ["sample", "--graph", c43, "--source", "v0", "--target", "v2", "--seed", 5, "--samples", 4]
    b1, b2 = io.StringIO(), io.StringIO()
    cli.run_cli([str(a) for a in argv], b1)
    cli.run_cli([str(a) for a in argv], b2)
    assert b1.getvalue() == b2.getvalue()
    rep = json.loads(b1.getvalue())["results"]
    assert rep["probabilities"] == ["1/4"] * 4
    code, rep = run(["entropy", "--graph", c43, "--source", "v0", "--target", "v2"])
    assert code == 0 and rep["results"]["n"] == "4"


def test_refine_and_girth(c43, path_graph):
    _, rep = run(["refine", "--graph", c43, "--source", "v0", "--target", "v2"])
    assert rep["results"]["holds"] and rep["results"]["n_squared"] == "16"
    _, rep = run(["girth", "--graph", c43])
    assert rep["results"]["girth"] == 2
    _, rep = run(["girth", "--graph", path_graph])
    assert rep["results"]["girth"] == "acyclic"


def test_search_budget(monkeypatch):
    code, rep = run(["search", "--delta", 4, "--t", 4, "--profile-limit", 50])
    assert code == 1 and "BudgetExceededError" in rep["error"]
    code, rep = run(["search", "--delta", 4, "--t", 2, "--layer-cap", 2, "--jobs", 2])
    assert code == 0 and rep["results"]["max_count"] == "8"


def test_walk(tmp_path):
    p = tmp_path / "w.el"
    p.write_text("x a 1/2\na y 1/2\nx b 1/2\nb y 1/2\na c 0.05\n")
    code, rep = run(["walk", "--graph", p, "--delta", 4, "--source", "x", "--target", "y"])
    assert code == 0
    assert rep["results"]["probability"] == "1/2" and rep["results"]["within_bound"]
    assert len(rep["warnings"]) == 1


def test_fill(tmp_path):
    code, rep = run(["fill", "minimal-fillings", "--complex", "grid2d(3,3)", "--boundary-of", 4])
    assert code == 0 and (rep["results"]["m"], rep["results"]["count"]) == (1, "1")
    chain = tmp_path / "c.json"
    chain.write_text("[0]")
    code, rep = run(["fill", "irreducible", "--complex", "cube-surface", "--chain", chain])
    assert code == 1 and "NotACycleError" in rep["error"]
    code, rep = run(["fill", "irreducible", "--complex", "cube-surface", "--boundary-of", "0,1"])
    assert code == 0 and rep["results"]["irreducible"] is True
    code, rep = run(["fill", "minimal-fillings", "--complex", "grid2d(2,2)"])
    assert code == 1


def test_csv_output(c43):
    code, text = run(["--format", "csv", "count", "--graph", c43, "--source", "v0", "--target", "v2"])
    rows = list(csv.DictReader(io.StringIO(text)))
    assert code == 0 and rows == [{"command": "count", "n": "4", "t": "2"}]


def test_timing_is_opt_in(c43):
    _, rep = run(["count", "--graph", c43, "--source", "v0", "--target", "v2"])
    assert "timing_s" not in rep
    _, rep = run(["--timing", "count", "--graph", c43, "--source", "v0", "--target", "v2"])
    assert rep["timing_s"] >= 0
