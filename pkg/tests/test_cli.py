import json

import pytest

from distspec import graphs as gr
from distspec.cli import main
from distspec.graph6 import write_graph6

K4 = "C~"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_spectral_radius(capsys):
    code, out, _ = run(capsys, "spectral", "radius", K4)
    assert code == 0 and out.split()[0] == "3.0" and "tol=" in out


def test_graph_commands(capsys):
    code, out, _ = run(capsys, "graph", "build", "odd_factor", "--n", "32", "--s", "3", "--b", "1")
    g6 = out.strip()
    code, out, _ = run(capsys, "graph", "info", g6)
    info = json.loads(out)
    assert code == 0 and info["n"] == 32 and info["min_degree"] == 3 and info["connectivity"] == 3
    code, out, _ = run(capsys, "graph", "parse", K4)
    assert json.loads(out)["edges"] == [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]]
    code, out, _ = run(capsys, "graph", "build", "matching", "--n", "9", "--s", "1", "--k", "3", "--blocks")
    assert code == 0 and "blocks" in out


def test_factor_check(capsys):
    _, out, _ = run(capsys, "graph", "build", "odd_factor", "--n", "32", "--s", "3", "--b", "1")
    code, out, _ = run(capsys, "factor", "check", out.strip(), "--b", "1")
    res = json.loads(out)
    assert code == 0 and res["verdict"] == "violated" and res["witness"] == [0, 1, 2]
    assert res["odd_components"] == 5
    code, out, _ = run(capsys, "factor", "check", K4, "--b", "1", "--construct")
    res = json.loads(out)
    assert res["verdict"] == "exists" and len(res["factor"]) == 2


def test_matching_commands(capsys):
    code, out, _ = run(capsys, "matching", "alpha", K4)
    assert json.loads(out)["alpha"] == 2
    star = write_graph6(gr.star(3))
    code, out, _ = run(capsys, "matching", "deficiency", star, "--witness")
    res = json.loads(out)
    assert res["deficiency"] == 2 and res["witness"] == [0]


def test_forms_commands(capsys):
    code, out, _ = run(capsys, "forms", "charpoly", "--variant", "matching", "--n", "18", "--s", "1", "--k", "2")
    res = json.loads(out)
    assert res["coefficients"][:2] == ["1", "-16"] and res["matrix"][0] == ["0", "15", "2"]
    code, out, _ = run(capsys, "forms", "root", "--variant", "case31", "--n", "32", "--b", "1", "--delta", "3")
    res = json.loads(out)
    assert res["root"] > 31 and res["tol"] == 1e-10


def test_quotient_command(capsys):
    code, out, _ = run(capsys, "spectral", "quotient", K4, "--partition", "0,1;2,3")
    res = json.loads(out)
    assert res["equitable"] and res["matrix"] == [[1.0, 2.0], [2.0, 1.0]]
    assert abs(res["radius"] - 3.0) < 1e-9


def test_verify_lemma(capsys, tmp_path):
    out_json, out_csv = tmp_path / "r.json", tmp_path / "r.csv"
    code, out, _ = run(capsys, "verify", "lemma", "2.5", "--nmax", "5", "--json", str(out_json))
    assert code == 0 and out.count("pass") == 4
    assert json.loads(out_json.read_text())["summary"]["pass"] == 4
    code, out, _ = run(capsys, "verify", "theorem", "3.2", "--n", "18", "--k", "2", "--t", "1",
                       "--csv", str(out_csv))
    assert code == 0 and out_csv.read_text().startswith("check_id,n,s")
    code, out, _ = run(capsys, "verify", "theorem", "4.1", "--delta", "3", "--b-list", "1,3")
    assert code == 0 and "odd_factor_theorem" in out


def test_verify_sweep(capsys):
    code, out, _ = run(capsys, "verify", "sweep", "--k", "2", "--t", "1", "--n", "18")
    assert code == 0 and "check_id,n,s,k" in out


def test_unknown_subcommand_exits_3():
    with pytest.raises(SystemExit) as info:
        main(["bogus"])
    assert info.value.code == 3


@pytest.mark.parametrize("argv", [
    ["spectral", "radius", "!!"],
    ["graph", "build", "matching", "--n", "17", "--s", "1", "--k", "2"],
    ["verify", "lemma", "9.9"],
    ["verify", "lemma"],
    ["verify", "lemma", "2.5", "--nmax", "9"],
    ["verify", "lemma", "2.5", "--b", "3"],
    ["factor", "check", K4, "--b", "2"],
    ["spectral", "radius", "A?"],
    ["forms", "root", "--variant", "matching", "--n", "18"],
])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 3 and "error" in err
