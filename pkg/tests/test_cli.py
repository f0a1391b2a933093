import json

import pytest

from deltagraph.cli import SWEEP_COLUMNS, main
from deltagraph.graphs import parse_dot


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_delta_d6_star(capsys):
    code, out, _ = run(capsys, "delta", "--group", "D:6", "--subgroup", "gen:b", "--g", "1", "--format", "json")
    d = json.loads(out)
    assert code == 0
    assert d["is_tree"] and d["is_star"] and d["n_vertices"] == 5


def test_delta_d6_empty(capsys):
    _, out, _ = run(capsys, "delta", "--group", "D:6", "--subgroup", "gen:b", "--g", "a", "--format", "json")
    assert json.loads(out)["is_empty_edgeset"]


def test_dot_round_trip(capsys):
    _, dot, _ = run(capsys, "delta", "--group", "A:4", "--subgroup", "gen:a", "--g", "bab^2", "--format", "dot")
    _, js, _ = run(capsys, "delta", "--group", "A:4", "--subgroup", "gen:a", "--g", "bab^2", "--format", "json")
    nodes, edges = parse_dot(dot)
    d = json.loads(js)
    assert (len(nodes), len(edges)) == (d["n_vertices"], d["n_edges"])
    assert "group=A:4; H=gen:a; g=bab^2" in dot


def test_sweep_is_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert main(["sweep", "--group", "D:12", "--out", str(a)]) == 0
    assert main(["sweep", "--group", "D:12", "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    lines = a.read_text().splitlines()
    assert lines[0] == ",".join(SWEEP_COLUMNS)
    orders = [int(line.split(",")[1]) for line in lines[1:]]
    assert orders == sorted(orders)


def test_info_and_subgroups(capsys):
    code, out, _ = run(capsys, "info", "--group", "Q:8", "--format", "json")
    assert code == 0 and json.loads(out)["center"] == ["1", "a^2"]
    code, out, _ = run(capsys, "subgroups", "--group", "A:4", "--format", "json")
    assert json.loads(out)["count"] == 10


@pytest.mark.parametrize("argv, code", [
    (["info", "--group", "X:3"], 3),
    (["info", "--group", "D:400"], 4),
    (["info", "--group", "D:40", "--max-order", "20"], 4),
    (["delta", "--group", "D:6", "--subgroup", "gen:b", "--g", "zz"], 5),
    (["subgroups", "--group", "D:6", "--subgroup", "nope"], 6),
    (["delta", "--group", "D:6", "--subgroup", "order:2", "--g", "1"], 6),
    (["verify", "thm-9.9"], 2),
])
def test_error_exit_codes(capsys, argv, code):
    got, _, err = run(capsys, *argv)
    assert got == code and "error" in err


def test_verify_alias(capsys):
    code, out, _ = run(capsys, "verify", "thm-2.4")
    assert code == 0 and out.startswith("PASS")


def test_verify_failing_suite_exit_code(capsys):
    code, out, _ = run(capsys, "verify", "dihedral")
    assert code == 1 and out.startswith("FAIL")


def test_export_figures(tmp_path, capsys):
    assert main(["export", "--figures", "--out", str(tmp_path)]) == 0
    assert len(list(tmp_path.glob("A4_H*_g_*.dot"))) == 12
