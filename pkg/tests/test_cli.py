import json
import subprocess
import sys

import pytest
from hypothesis import given

from graphs import K3, P3, W4, multigraphs
from oddsplit.cli import main
from oddsplit.errors import LoopEdge, ParseError, VertexOutOfRange
from oddsplit.formats import parse_edge_list, parse_result, to_dot, write_edge_list
from oddsplit.multigraph import from_edge_list


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)
    return _write


def graph_file(write, G, name="g.txt"):
    return write(name, write_edge_list(G))


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_edge_list_comments_and_parallel():
    G = parse_edge_list("# header next\n3 3\n0 1\n# parallel\n0 1\n\n1 2\n")
    assert G == from_edge_list(3, [(0, 1), (0, 1), (1, 2)])


@pytest.mark.parametrize("text, exc, line", [
    ("2 1\n0 0\n", LoopEdge, 2),
    ("2 1\n0 2\n", VertexOutOfRange, 2),
    ("2 2\n0 1\n", ParseError, None),
    ("2 1\n0 1\n1 0\n", ParseError, 3),
    ("2 1\n0 x\n", ParseError, 2),
    ("2 1 4\n", ParseError, 1),
    ("# nothing\n", ParseError, None),
])
def test_parse_errors(text, exc, line):
    with pytest.raises(exc) as info:
        parse_edge_list(text)
    assert info.value.line == line


@given(multigraphs())
def test_edge_list_round_trip(G):
    text = write_edge_list(G)
    assert parse_edge_list(text) == G
    assert write_edge_list(parse_edge_list(text)) == text


def test_decompose_p3(write, capsys):
    code, out, _ = run(["decompose", "-i", graph_file(write, P3), "--mode", "two-odd"], capsys)
    assert code == 0
    assert json.loads(out) == {"mode": "two-odd", "decomposable": True, "classes": [[0], [1]], "normalization": []}


def test_decompose_k3(write, capsys):
    code, out, _ = run(["decompose", "-i", graph_file(write, K3)], capsys)
    doc = json.loads(out)
    assert code == 1 and doc["decomposable"] is False
    assert doc["certificate"] == {"y_members": [[0, 1, 2]], "z_members": []}
    assert "classes" not in doc


def test_decompose_loop_file(write, capsys):
    code, _, err = run(["decompose", "-i", write("bad.txt", "2 1\n0 0\n")], capsys)
    assert code == 2 and "LoopEdge" in err


def test_decompose_reports_isolated_original_ids(write, capsys):
    G = from_edge_list(5, [(1, 2), (2, 4), (4, 1)])  # triangle on 1,2,4
    code, out, _ = run(["decompose", "-i", graph_file(write, G)], capsys)
    doc = json.loads(out)
    assert code == 1
    assert doc["normalization"] == [0, 3]
    assert doc["certificate"]["y_members"] == [[1, 2, 4]]


@pytest.mark.parametrize("mode, cert", [
    ("even-odd", {"odd_order_component": [0]}),
    ("two-even", {"odd_degree_vertex": 0}),
])
def test_other_mode_certificates(write, capsys, tmp_path, mode, cert):
    g = graph_file(write, from_edge_list(4, [(0, 1), (1, 2), (2, 3)]))
    out_path = str(tmp_path / "r.json")
    code, _, _ = run(["decompose", "-i", g, "--mode", mode, "-o", out_path], capsys)
    assert code == 1
    assert json.load(open(out_path))["certificate"] == cert
    assert run(["verify", "-i", g, "-r", out_path], capsys)[0] == 0


def test_text_format(write, capsys):
    code, out, _ = run(["decompose", "-i", graph_file(write, P3), "--format", "text"], capsys)
    assert code == 0 and "red: 0" in out and "blue: 1" in out


@pytest.mark.parametrize("solver", ["matrix", "graph"])
@pytest.mark.parametrize("G", [P3, K3, W4, from_edge_list(6, [(0, 1), (1, 2), (2, 3), (1, 4), (4, 5), (5, 1)])])
def test_decompose_verify_round_trip(write, capsys, tmp_path, G, solver):
    g = graph_file(write, G)
    out_path = str(tmp_path / "r.json")
    code = main(["decompose", "-i", g, "-o", out_path, "--solver", solver])
    assert code in (0, 1)
    assert run(["verify", "-i", g, "-r", out_path], capsys)[0] == 0


def test_verify_invalid_coloring(write, capsys):
    g = graph_file(write, K3)
    r = write("r.json", json.dumps({"mode": "two-odd", "decomposable": True, "classes": [[0, 1, 2], []],
                                    "normalization": []}))
    code, _, err = run(["verify", "-i", g, "-r", r], capsys)
    assert code == 1 and len(err.strip().splitlines()) == 3


def test_verify_not_a_partition(write, capsys):
    g = graph_file(write, P3)
    r = write("r.json", json.dumps({"mode": "two-odd", "decomposable": True, "classes": [[0], [0, 1]]}))
    code, _, err = run(["verify", "-i", g, "-r", r], capsys)
    assert code == 1 and "NotAPartition" in err


def test_verify_forged_certificate(write, capsys):
    g = graph_file(write, P3)
    r = write("r.json", json.dumps({"mode": "two-odd", "decomposable": False,
                                    "certificate": {"y_members": [[1]], "z_members": []}}))
    assert run(["verify", "-i", g, "-r", r], capsys)[0] == 1


def test_oracle(write, capsys):
    code, out, _ = run(["oracle", "-i", graph_file(write, W4)], capsys)
    assert code == 1 and json.loads(out)["exhausted"] is True
    code, out, _ = run(["oracle", "-i", graph_file(write, P3)], capsys)
    assert code == 0 and json.loads(out)["decomposable"] is True


def test_oracle_cap(write, capsys, monkeypatch):
    G = from_edge_list(8, [(i, (i + k) % 8) for k in (1, 2, 3) for i in range(8)][:21])
    g = graph_file(write, G)
    code, _, err = run(["oracle", "-i", g], capsys)
    assert code == 2 and "TooManyEdges" in err
    assert run(["oracle", "-i", g, "--cap", "21"], capsys)[0] in (0, 1)
    monkeypatch.setenv("ODDSPLIT_CAP", "21")
    assert run(["oracle", "-i", g], capsys)[0] in (0, 1)


def test_verify_exhausted(write, capsys, tmp_path):
    g = graph_file(write, W4)
    out_path = str(tmp_path / "r.json")
    main(["oracle", "-i", g, "-o", out_path])
    assert run(["verify", "-i", g, "-r", out_path], capsys)[0] == 0
    p3 = graph_file(write, P3, "p3.txt")
    assert run(["verify", "-i", p3, "-r", out_path], capsys)[0] == 1


def test_gen(tmp_path, capsys):
    a, b = str(tmp_path / "a.txt"), str(tmp_path / "b.txt")
    flags = ["gen", "--n", "4", "--m", "3", "--forest", "--seed", "1"]
    assert main(flags + ["-o", a]) == 0 and main(flags + ["-o", b]) == 0
    assert open(a).read() == open(b).read()
    G = parse_edge_list(open(a).read())
    assert G.n == 4 and G.m == 3
    code, _, err = run(["gen", "--n", "2", "--m", "3", "--max-mult", "1"], capsys)
    assert code == 2 and "InfeasibleSpec" in err


def test_dot(write, capsys, tmp_path):
    g = graph_file(write, P3)
    out_path = str(tmp_path / "r.json")
    main(["decompose", "-i", g, "-o", out_path])
    code, out, _ = run(["dot", "-i", g, "-r", out_path], capsys)
    assert code == 0 and out.count('color="red"') == 1 and out.count('color="blue"') == 1
    code, out, _ = run(["export-dot", "-i", g], capsys)
    assert out.count("--") == 2 and "color" not in out
    code, _, err = run(["dot", "-i", g, "-r", write("junk.json", "{not json")], capsys)
    assert code == 2 and "ParseError" in err


def test_to_dot_plain():
    assert to_dot(P3) == 'graph G {\n  0;\n  1;\n  2;\n  0 -- 1 [id="e0"];\n  1 -- 2 [id="e1"];\n}\n'


def test_parse_result_rejects_bad_shapes():
    for text in ['[]', '{"mode": "x", "decomposable": true}', '{"mode": "two-odd", "decomposable": 1}',
                 '{"mode": "two-odd", "decomposable": true, "classes": [[0]]}',
                 '{"mode": "two-odd", "decomposable": false}']:
        with pytest.raises(ParseError):
            parse_result(text)


def test_module_entry_point(write):
    g = graph_file(write, P3)
    proc = subprocess.run([sys.executable, "-m", "oddsplit", "decompose", "-i", g], capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["classes"] == [[0], [1]]
