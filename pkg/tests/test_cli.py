import json
import subprocess
import sys

import pytest

from milnorzeta.cli import main
from milnorzeta.divring import LambdaDivisor, ZetaForm
from milnorzeta.io import config_from_json, config_to_json, poly_from_json
from milnorzeta.plumb import PlumbingGraph

from conftest import Q1, Q2, Q3, Q4

CUSP = {"vars": ["x", "y"], "terms": [{"exp": [2, 0]}, {"exp": [0, 3], "coef": "1"}]}
EXCEPTIONAL = {"vars": ["x", "y", "z"], "terms": [
    {"exp": [1, 1, 1], "coef": "3"}, {"exp": [4, 0, 0], "coef": "1"},
    {"exp": [0, 4, 0], "coef": "2/3"}, {"exp": [0, 0, 4], "coef": "-5"}]}
HESSE = {"vars": ["x", "y", "z"], "terms": [
    {"exp": [3, 0, 0]}, {"exp": [0, 3, 0]}, {"exp": [0, 0, 3]}, {"exp": [1, 1, 1], "coef": "-3"}]}


def write(tmp_path, name, data):
    p = tmp_path / name
    p.write_text(json.dumps(data))
    return str(p)


def cfg_file(tmp_path, name, cfg, m=None):
    return write(tmp_path, name, config_to_json(cfg, m))


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


# zeta

def test_zeta_cusp(tmp_path, capsys):
    code, out, _ = run(capsys, "zeta", write(tmp_path, "c.json", CUSP), "--mu", "2")
    data = json.loads(out)
    assert code == 0
    assert data["rendered"] == "(1-t^2)^-1 (1-t^3)^-1 (1-t^6)^1"
    assert data["mu"] == 2


def test_zeta_exceptional(tmp_path, capsys):
    code, out, _ = run(capsys, "zeta", write(tmp_path, "e.json", EXCEPTIONAL), "--mu", "3", "--verify")
    data = json.loads(out)
    assert code == 0 and data["rendered"] == "(1-t^4)^-3" and data["mu"] == 11
    assert data["zeta_multiplicity"] == [4, -3]


def test_zeta_reduced(tmp_path, capsys):
    _, out, _ = run(capsys, "zeta", write(tmp_path, "c.json", CUSP), "--reduced")
    data = json.loads(out)
    assert data["reduced"] is True
    assert ZetaForm.from_json(data).divisor == LambdaDivisor({1: 1, 2: -1, 3: -1, 6: 1})


def test_zeta_empty_terms(tmp_path, capsys):
    code, out, err = run(capsys, "zeta", write(tmp_path, "z.json", {"vars": ["x"], "terms": []}))
    assert code == 2 and out == "" and err


def test_zeta_cancelling_terms(tmp_path, capsys):
    data = {"vars": ["x"], "terms": [{"exp": [2], "coef": "1"}, {"exp": [2], "coef": "-1"}]}
    assert run(capsys, "zeta", write(tmp_path, "z.json", data))[0] == 2


def test_zeta_bad_file(tmp_path, capsys):
    p = tmp_path / "bad.json"
    p.write_text("{not json")
    assert run(capsys, "zeta", str(p))[0] == 2
    assert run(capsys, "zeta", str(tmp_path / "missing.json"))[0] == 2
    bad_len = {"vars": ["x", "y"], "terms": [{"exp": [2]}]}
    assert run(capsys, "zeta", write(tmp_path, "b.json", bad_len))[0] == 2
    bad_coef = {"vars": ["x"], "terms": [{"exp": [2], "coef": "0.5"}]}
    assert run(capsys, "zeta", write(tmp_path, "b2.json", bad_coef))[0] == 2


def test_zeta_degenerate(tmp_path, capsys):
    path = write(tmp_path, "h.json", HESSE)
    assert run(capsys, "zeta", path, "--verify")[0] == 3
    assert run(capsys, "zeta", path)[0] == 0


def test_zeta_advisory(tmp_path, capsys):
    data = {"vars": ["x", "y", "z"], "terms": [{"exp": [2, 0, 4]}, {"exp": [0, 2, 4]}, {"exp": [0, 0, 7]}]}
    _, out, _ = run(capsys, "zeta", write(tmp_path, "n.json", data))
    data = json.loads(out)
    assert data["rendered"] == "(1-t^7)^-1" and "advisory" in data


# isolation

def test_isolation_flags(capsys):
    code, out, _ = run(capsys, "isolation", "--degree", "4", "--nodes", "3", "--m", "3")
    data = json.loads(out)
    assert code == 0
    assert data["rendered"] == "(1-t^4)^-4 (1-t^7)^-3"
    assert data["mu"] == 36 and data["mu_star"] == [36, 9, 3]


def test_isolation_sextic(capsys):
    _, out, _ = run(capsys, "isolation", "--degree", "6", "--nodes", "10", "--m", "1")
    assert json.loads(out)["mu_star"] == [135, 25, 5]


@pytest.mark.parametrize("argv", [
    ("--degree", "4", "--nodes", "99", "--m", "1"),
    ("--degree", "2", "--nodes", "0", "--m", "1"),
    ("--degree", "4", "--nodes", "3", "--m", "0"),
    ("--degree", "4", "--nodes", "3"),
])
def test_isolation_invalid(capsys, argv):
    assert run(capsys, "isolation", *argv)[0] == 2


def test_isolation_config(tmp_path, capsys):
    code, out, _ = run(capsys, "isolation", "--config", cfg_file(tmp_path, "q2.json", Q2, 3))
    data = json.loads(out)
    assert code == 0 and data["mu"] == 36 and data["config"]["genera"] == [1, 0]


def test_isolation_bad_config(tmp_path, capsys):
    bad = {"components": [{"degree": 3, "internal_nodes": 2}], "m": 1}
    assert run(capsys, "isolation", "--config", write(tmp_path, "b.json", bad))[0] == 2
    wrong = {"components": [{"degree": 3}, {"degree": 1}], "intersections": [{"i": 0, "j": 1, "count": 2}]}
    assert run(capsys, "isolation", "--config", write(tmp_path, "w.json", wrong), "--m", "1")[0] == 2


# graph

def test_graph_dot_q1(tmp_path, capsys):
    code, out, err = run(capsys, "graph", cfg_file(tmp_path, "q1.json", Q1, 3))
    assert code == 0
    assert out.startswith("graph ") and out.count("[label=") == 10
    assert err.strip() == "r=3 g=0 b1=3 negdef=true"


def test_graph_q2_summary(tmp_path, capsys):
    _, _, err = run(capsys, "graph", cfg_file(tmp_path, "q2.json", Q2), "--m", "3")
    assert err.strip() == "r=2 g=1 b1=4 negdef=true"


def test_graph_two_conics_json(tmp_path, capsys):
    code, out, err = run(capsys, "graph", cfg_file(tmp_path, "q4.json", Q4, 3), "--format", "json")
    G = PlumbingGraph.from_json(json.loads(out))
    assert code == 0 and len(G.vertices) == 14 and "b1=3" in err


def test_graph_missing_m(tmp_path, capsys):
    assert run(capsys, "graph", cfg_file(tmp_path, "q1.json", Q1))[0] == 2


# compare

def test_compare_q1_q2(tmp_path, capsys):
    code, out, err = run(capsys, "compare", "--config-a", cfg_file(tmp_path, "a.json", Q1),
                         "--config-b", cfg_file(tmp_path, "b.json", Q2), "--m", "3")
    assert code == 0
    assert json.loads(out)["verdict"] == err.strip() == "links distinguished by b1 (3 vs 4)"


def test_compare_q3_q4(tmp_path, capsys):
    _, out, _ = run(capsys, "compare", "--config-a", cfg_file(tmp_path, "a.json", Q3, 3),
                    "--config-b", cfg_file(tmp_path, "b.json", Q4, 3))
    assert json.loads(out)["verdict"] == "graphs non-isomorphic, b1 equal"


def test_compare_reflexive(tmp_path, capsys):
    a = cfg_file(tmp_path, "a.json", Q1, 3)
    _, out, _ = run(capsys, "compare", "--config-a", a, "--config-b", a)
    assert json.loads(out)["verdict"] == "graphs isomorphic (links diffeomorphic)"


# divisor

@pytest.mark.parametrize("argv, expected", [
    (("mul", '{"4":1}', '{"6":1}'), {"12": 2}),
    (("join", '{"1":1,"2":-1}', "--m", "3"), {"1": 1, "2": -1, "3": -1, "6": 1}),
    (("unjoin", '{"1":1,"2":-1,"3":-1,"6":1}', "--m", "3"), {"1": 1, "2": -1}),
    (("canon", '{"5":0,"3":2}'), {"3": 2}),
])
def test_divisor(capsys, argv, expected):
    code, out, _ = run(capsys, "divisor", *argv)
    assert code == 0 and json.loads(out) == expected


def test_divisor_unjoin_failure(capsys):
    assert run(capsys, "divisor", "unjoin", '{"1":1}', "--m", "5")[0] == 5


@pytest.mark.parametrize("argv", [("mul", '{"4":1}'), ("join", '{"1":1}'), ("canon", "nope"),
                                  ("canon", '{"x":1}')])
def test_divisor_invalid(capsys, argv):
    assert run(capsys, "divisor", *argv)[0] == 2


# round trips and determinism

def test_file_formats_round_trip():
    f, names = poly_from_json(EXCEPTIONAL)
    assert names == ["x", "y", "z"] and f.coefficients[(0, 4, 0)] == pytest.approx(2 / 3)
    for cfg in (Q1, Q2, Q3, Q4):
        assert config_from_json(config_to_json(cfg, 3)) == (cfg, 3)


def test_output_deterministic(tmp_path, capsys):
    path = cfg_file(tmp_path, "q3.json", Q3, 3)
    first = run(capsys, "graph", path, "--format", "json")
    assert run(capsys, "graph", path, "--format", "json") == first
    a, b = cfg_file(tmp_path, "a.json", Q1, 3), cfg_file(tmp_path, "b.json", Q2, 3)
    first = run(capsys, "compare", "--config-a", a, "--config-b", b)
    assert run(capsys, "compare", "--config-a", a, "--config-b", b) == first


def test_module_entry_point(tmp_path):
    proc = subprocess.run([sys.executable, "-m", "milnorzeta", "divisor", "mul", '{"4":1}', '{"6":1}'],
                          capture_output=True, text=True, check=True)
    assert json.loads(proc.stdout) == {"12": 2}
