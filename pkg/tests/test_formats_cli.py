import json
import subprocess
import sys

import pytest

from tightcut.canonical import decompose
from tightcut.cli import main
from tightcut.errors import GraphInputError, PreconditionError
from tightcut.formats import DecompositionReport, format_graph, parse_graph, parse_matching, to_dot
from tightcut.testkit import random_factorizable_graph


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        path = tmp_path / name
        path.write_text(text)
        return str(path)
    return _write


@pytest.fixture
def graph_file(write, cat):
    return lambda name: write(f"{name}.txt", format_graph(cat[name]))


def test_parse_round_trip(cat):
    for name in ("P4", "PAW", "PRISM", "PETERSEN"):
        assert parse_graph(format_graph(cat[name])) == cat[name]


def test_parse_skips_comments_and_blanks():
    g = parse_graph("# two edges\n3 2\n\n1 2\n# middle\n2 3\n")
    assert sorted(g.edges.values()) == [(1, 2), (2, 3)]


@pytest.mark.parametrize("text,line", [
    ("2 1\n1 3\n", 2),
    ("2 1\n1 1\n", 2),
    ("2 1\n1 x\n", 2),
    ("2 2\n1 2\n", 1),
    ("", None),
])
def test_parse_errors_report_lines(text, line):
    with pytest.raises(GraphInputError) as info:
        parse_graph(text)
    assert info.value.line == line


def test_parse_matching(cat):
    g = cat["PRISM"]
    assert len(parse_matching(g, "1-2,3-6,4-5")) == 3
    with pytest.raises(GraphInputError):
        parse_matching(g, "1:2")
    with pytest.raises(PreconditionError):
        parse_matching(g, "1-5,2-4,3-6")
    with pytest.raises(PreconditionError):
        parse_matching(g, "1-2")


@pytest.mark.parametrize("seed", range(8))
def test_report_json_round_trip(seed):
    g = random_factorizable_graph(8, 0.3, seed)
    report = DecompositionReport.from_decomposition(decompose(g))
    assert DecompositionReport.from_json(report.to_json()) == report


def test_report_contents(cat):
    p4 = DecompositionReport.from_decomposition(decompose(cat["P4"]))
    assert p4.components == ((1, 2), (3, 4))
    assert p4.order == ()
    assert p4.classes == (((1,), (2,)), ((3,), (4,)))
    paw = DecompositionReport.from_decomposition(decompose(cat["PAW"]))
    assert paw.order == ((0, 1),)


def test_dot_has_clusters_and_order_edges(cat):
    dot = to_dot(cat["PAW"], decompose(cat["PAW"]))
    assert dot.startswith("digraph") and "cluster_0" in dot and "cluster_1" in dot
    assert "lhead=cluster_1" in dot


def test_cli_decompose(graph_file, capsys):
    assert main(["decompose", graph_file("PAW"), "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["order"] == [[0, 1]]
    assert main(["decompose", graph_file("P4")]) == 0
    assert "order: (antichain)" in capsys.readouterr().out
    assert main(["decompose", graph_file("P3")]) == 2
    assert "not factorizable" in capsys.readouterr().err


def test_cli_witness(graph_file, capsys):
    assert main(["witness", graph_file("PRISM"), "--shore", "1,2,3", "--matching", "1-2,3-6,4-5"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["crossing_edges"] >= 2
    rungs = {(1, 4), (2, 5), (3, 6)}
    assert len(rungs & {tuple(p) for p in out["output_matching"]}) >= 2
    assert main(["witness", graph_file("K4"), "--shore", "1,2"]) == 0
    assert json.loads(capsys.readouterr().out)["crossing_edges"] == 2
    assert main(["witness", graph_file("K33"), "--shore", "1,2,4"]) == 2
    assert "not a brick" in capsys.readouterr().err
    assert main(["witness", graph_file("K4"), "--shore", "1"]) == 2


def test_cli_input_errors(write, capsys):
    bad = write("bad.txt", "3 1\n1 7\n")
    assert main(["decompose", bad]) == 1
    assert "line 2" in capsys.readouterr().err
    assert main(["decompose", bad + ".missing"]) == 1


def test_cli_check(graph_file, write, capsys):
    assert main(["check", graph_file("K4"), "brick"]) == 0
    assert json.loads(capsys.readouterr().out) == {"brick": True}
    assert main(["check", graph_file("K33"), "brick"]) == 0
    assert len(json.loads(capsys.readouterr().out)["failing_pair"]) == 2
    assert main(["check", graph_file("PRISM"), "tight-cuts"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert len(out["tight_cuts"]) == 6 and out["only_star_cuts"]
    path = write("rand.txt", format_graph(random_factorizable_graph(8, 0.3, 5)))
    assert main(["check", path, "verify-decomp"]) == 0
    assert "all invariants hold" in capsys.readouterr().out


def test_module_entry_point(graph_file):
    run = subprocess.run([sys.executable, "-m", "tightcut", "check", graph_file("K4"), "brick"],
                         capture_output=True, text=True)
    assert run.returncode == 0 and '"brick": true' in run.stdout
