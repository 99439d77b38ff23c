import json

import pytest

from edgerigid import cli
from edgerigid import families as fam


@pytest.fixture
def graph_file(tmp_path):
    def write(g, name="graph.txt"):
        path = tmp_path / name
        path.write_text(g.to_edge_list())
        return str(path)

    return write


def run(argv, capsys):
    code = cli.main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_analyze_k4_json(graph_file, capsys):
    path = graph_file(fam.complete_graph(4))
    code, out, _ = run(["analyze", path, "--format", "json"], capsys)
    assert code == 0
    payload = json.loads(out)
    assert payload["report"]["edge_rigid"] is True
    assert payload["tree_count_exact"] == 16
    assert abs(payload["kirchhoff_index"] - 3.0) < 1e-9
    assert all(abs(r - 0.5) < 1e-9 for r in payload["effective_resistances"])


def test_analyze_p4_reports_witness(graph_file, capsys):
    path = graph_file(fam.path_graph(4))
    code, out, _ = run(["analyze", path, "--format", "json"], capsys)
    assert code == 0
    payload = json.loads(out)
    assert payload["report"]["edge_rigid"] is False
    witness = payload["report"]["witness"]
    assert witness["power"] == 1
    assert sorted([witness["value_a"], witness["value_b"]]) == [5, 6]


def test_analyze_malformed_exits_2(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("garbage\n")
    code, _, err = run(["analyze", str(bad)], capsys)
    assert code == 2
    assert "error:" in err


def test_decide_exit_codes(graph_file, capsys):
    rigid = graph_file(fam.petersen_graph(), "petersen.txt")
    code, out, _ = run(["decide", rigid], capsys)
    assert code == 0
    assert "edge-rigid" in out

    nonrigid = graph_file(fam.path_graph(4), "p4.txt")
    code, out, _ = run(["decide", nonrigid], capsys)
    assert code == 1
    assert "not edge-rigid" in out

    code, _, err = run(["decide", "does-not-exist.txt"], capsys)
    assert code == 2
    assert err


def test_graph6_input(tmp_path, capsys):
    path = tmp_path / "k4.g6"
    path.write_bytes(fam.complete_graph(4).to_graph6())
    code, out, _ = run(["decide", str(path)], capsys)
    assert code == 0

    # explicit override on a non-.g6 filename
    path2 = tmp_path / "k4.dat"
    path2.write_bytes(b"C~")
    code, _, _ = run(["decide", str(path2), "--input-format", "graph6"], capsys)
    assert code == 0


def test_optimize_c4(graph_file, capsys):
    path = graph_file(fam.cycle_graph(4))
    code, out, _ = run(
        ["optimize", path, "--k", "1", "--objective", "upper", "--format", "json"], capsys
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["verdict"] == "rigid-within-tol"
    assert abs(payload["baseline"] - 4.0) < 1e-9


def test_certify_k4(graph_file, capsys):
    path = graph_file(fam.complete_graph(4))
    code, out, _ = run(["certify", path, "--j", "1", "--format", "json"], capsys)
    assert code == 0
    payload = json.loads(out)
    assert payload["passes"] is True
    assert abs(payload["bound"] - 12.0) < 1e-8
    assert all(v < 1e-8 for v in payload["residuals"].values())


def test_certify_bad_level_exits_2(graph_file, capsys):
    path = graph_file(fam.complete_graph(4))
    code, _, err = run(["certify", path, "--j", "9"], capsys)
    assert code == 2
    assert err


def test_profile_p4(graph_file, capsys):
    path = graph_file(fam.path_graph(4))
    code, out, _ = run(["profile", path, "--format", "json", "--iters", "2000"], capsys)
    assert code == 0
    payload = json.loads(out)
    assert payload["refuted"]


def test_embed_csv(graph_file, tmp_path, capsys):
    path = graph_file(fam.cycle_graph(4))
    out_path = tmp_path / "emb.csv"
    code, _, _ = run(["embed", path, "--eigenspace", "2", "--output", str(out_path)], capsys)
    assert code == 0
    lines = out_path.read_text().strip().splitlines()
    assert lines[0] == "vertex,c1,c2"
    assert len(lines) == 5


def test_tau_with_weights(graph_file, tmp_path, capsys):
    path = graph_file(fam.cycle_graph(4))
    wpath = tmp_path / "w.txt"
    wpath.write_text("1.0\n1.0\n1.0\n1.0\n")
    code, out, _ = run(["tau", path, "--weights", str(wpath), "--format", "json"], capsys)
    assert code == 0
    assert abs(json.loads(out)["tree_count"] - 4.0) < 1e-8


def test_tau_unit_reports_exact(graph_file, capsys):
    path = graph_file(fam.complete_graph(4))
    code, out, _ = run(["tau", path, "--format", "json"], capsys)
    assert code == 0
    assert json.loads(out)["tree_count_exact"] == 16


def test_kf(graph_file, capsys):
    path = graph_file(fam.cycle_graph(4))
    code, out, _ = run(["kf", path, "--format", "json"], capsys)
    assert code == 0
    assert abs(json.loads(out)["kirchhoff_index"] - 5.0) < 1e-9


def test_analyze_deterministic_bytes(graph_file, tmp_path, capsys):
    path = graph_file(fam.petersen_graph())
    out1 = tmp_path / "a.json"
    out2 = tmp_path / "b.json"
    assert cli.main(["analyze", path, "--format", "json", "--seed", "0", "--output", str(out1)]) == 0
    assert cli.main(["analyze", path, "--format", "json", "--seed", "0", "--output", str(out2)]) == 0
    capsys.readouterr()
    assert out1.read_bytes() == out2.read_bytes()
