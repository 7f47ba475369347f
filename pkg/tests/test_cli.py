import json
import os

import pytest
from click.testing import CliRunner

from nonrep.cli import main
from nonrep.corpus import k5_genus_structure
from nonrep.graphs import complete_graph, icosahedron, parse_graph, serialize_graph
from nonrep.planar import serialize_product_structure
from nonrep.treedecomp import exact_treewidth, heuristic_td, write_td
from nonrep.treedecomp import is_chordal


@pytest.fixture()
def runner():
    return CliRunner()


@pytest.fixture()
def workdir(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    return tmp_path


def _write(path, text):
    with open(path, "w") as fh:
        fh.write(text)


def test_colour_path_stdout(runner):
    res = runner.invoke(main, ["colour", "path", "--n", "25"])
    assert res.exit_code == 0, res.output
    cert = json.loads(res.output)
    assert cert["colouring"]["palette"] <= 4
    assert cert["exit_code"] == 0


def test_colour_tw_files(runner, workdir):
    k4 = complete_graph(4)
    _write("k4.el", serialize_graph(k4))
    _write("k4.td", write_td(heuristic_td(k4), 4))
    res = runner.invoke(main, ["colour", "tw", "--graph", "k4.el", "--td", "k4.td"])
    assert res.exit_code == 0, res.output
    assert json.loads(res.output)["bound"]["claimed"] == 64


def test_colour_planar_out_file(runner, workdir):
    _write("icosa.el", serialize_graph(icosahedron()))
    res = runner.invoke(main, ["colour", "planar", "--graph", "icosa.el",
                               "--compute-structure", "--out", "cert.json"])
    assert res.exit_code == 0, res.output
    cert = json.load(open("cert.json"))
    assert cert["bound"]["claimed"] == 768 and cert["bound"]["certified"]


def test_colour_genus_files(runner, workdir):
    k5, s5 = k5_genus_structure()
    _write("k5.el", serialize_graph(k5))
    _write("s.json", serialize_product_structure(s5))
    res = runner.invoke(main, ["colour", "genus", "--graph", "k5.el",
                               "--structure", "s.json"])
    assert res.exit_code == 0, res.output


def test_verify_exit_codes(runner, workdir):
    _write("k2.el", "n 2\n0 1\n")
    _write("bad.json", json.dumps({"palette": 1, "colours": [0, 0]}))
    _write("good.json", json.dumps({"palette": 2, "colours": [0, 1]}))
    res = runner.invoke(main, ["verify", "--graph", "k2.el", "--colouring", "bad.json"])
    assert res.exit_code == 2
    res = runner.invoke(main, ["verify", "--graph", "k2.el", "--colouring", "good.json"])
    assert res.exit_code == 0


def test_verify_proper_three_colouring_of_c6(runner, workdir):
    # 0,1,2,0,1,2 around the cycle is proper but repeats on the order-6 path
    _write("c6.el", "n 6\n0 1\n1 2\n2 3\n3 4\n4 5\n0 5\n")
    _write("c.json", json.dumps({"palette": 3, "colours": [0, 1, 2, 0, 1, 2]}))
    res = runner.invoke(main, ["verify", "--graph", "c6.el", "--colouring", "c.json",
                               "--max-order", "6", "--max-walk", "6"])
    assert res.exit_code == 2
    cert = json.loads(res.output)
    assert cert["verdicts"]["proper"]["passed"]
    assert not cert["verdicts"]["repetitive_path"]["passed"]
    assert cert["verdicts"]["repetitive_path"]["counterexample"] is not None


def test_input_error_exits_one(runner, workdir):
    _write("broken.el", "zZz")
    res = runner.invoke(main, ["structure", "compute", "--graph", "broken.el"])
    assert res.exit_code == 1
    res = runner.invoke(main, ["colour", "path", "--n", "nope"])
    assert res.exit_code == 1
    res = runner.invoke(main, ["colour", "path", "--n", "5", "--no-such-flag"])
    assert res.exit_code == 1


def test_structure_roundtrip_validate(runner, workdir):
    _write("k4.el", serialize_graph(complete_graph(4)))
    res = runner.invoke(main, ["structure", "compute", "--graph", "k4.el"])
    assert res.exit_code == 0, res.output
    structure = json.loads(res.output)["structure"]
    _write("s.json", json.dumps(structure))
    res = runner.invoke(main, ["structure", "validate", "--graph", "k4.el",
                               "--structure", "s.json"])
    assert res.exit_code == 0
    structure["placement"][0] = [0, 9, 0]
    _write("s.json", json.dumps(structure))
    res = runner.invoke(main, ["structure", "validate", "--graph", "k4.el",
                               "--structure", "s.json"])
    assert res.exit_code == 2


def test_bounds_cli(runner):
    res = runner.invoke(main, ["bounds", "planar"])
    assert res.exit_code == 0 and json.loads(res.output)["bound"]["value"] == 768
    res = runner.invoke(main, ["bounds", "minor", "--k", "1", "--r", "1"])
    assert json.loads(res.output)["bound"]["value"] == 105553116266497 * 4
    res = runner.invoke(main, ["bounds", "genus"])
    assert res.exit_code == 1


def test_certificates_byte_identical(runner, workdir):
    _write("k4.el", serialize_graph(complete_graph(4)))
    _write("k4.td", write_td(heuristic_td(complete_graph(4)), 4))
    args = ["colour", "tw", "--graph", "k4.el", "--td", "k4.td"]
    a = runner.invoke(main, args)
    b = runner.invoke(main, args)
    assert a.output == b.output


def test_corpus_commands(runner, workdir):
    res = runner.invoke(main, ["corpus", "triangulation", "--n", "16", "--seed", "5"])
    assert res.exit_code == 0, res.output
    g = parse_graph(res.output)
    assert g.n == 16 and g.m == 3 * 16 - 6
    again = runner.invoke(main, ["corpus", "triangulation", "--n", "16", "--seed", "5"])
    assert res.output == again.output

    res = runner.invoke(main, ["corpus", "chordal", "--n", "12", "--seed", "3"])
    assert is_chordal(parse_graph(res.output))

    res = runner.invoke(main, ["corpus", "partial-3-tree", "--n", "14", "--seed", "3"])
    g = parse_graph(res.output)
    assert exact_treewidth(g) <= 3

    res = runner.invoke(main, ["corpus", "triangulation", "--n", "3", "--seed", "1"])
    assert res.exit_code == 1


def test_out_files_written_atomically(runner, workdir):
    res = runner.invoke(main, ["bounds", "planar", "--out", "b.json"])
    assert res.exit_code == 0
    assert json.load(open("b.json"))["bound"]["value"] == 768
    leftovers = [p for p in os.listdir(".") if p.startswith(".cert-")]
    assert leftovers == []
