import json

import pytest

from graphburning import configuration_space, parse_graph_text, path_graph
from graphburning.cli import UsageError, load_graph, main, parse_sources


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_load_graph_builders(tmp_path):
    assert load_graph("path:5") == path_graph(5)
    assert load_graph("bipartite:2,3").vertex_count == 5
    assert load_graph("cube").vertex_count == 8
    assert load_graph("sum:3,path:2").vertex_count == 6
    inline = load_graph("n 3\n0 1\n1 2\n")
    assert inline == path_graph(3)
    path = tmp_path / "g.txt"
    path.write_text("n 4\n0 1\n1 2\n2 3\n")
    assert load_graph(str(path)) == path_graph(4)
    with pytest.raises(UsageError):
        load_graph("frobnicate:3")


def test_parse_sources():
    assert parse_sources("0,3", one_based=False) == (0, 3)
    assert parse_sources("1,4", one_based=True) == (0, 3)
    with pytest.raises(UsageError):
        parse_sources("a,b", one_based=False)


def test_burning_number_command(capsys):
    code, out, _ = run(capsys, "burning-number", "path:9")
    assert code == 0 and out.strip() == "3"
    code, out, _ = run(capsys, "--format", "json", "burning-number", "path:9")
    assert json.loads(out) == {"burning_number": 3, "schema": 1}


def test_validate_command(capsys):
    code, out, _ = run(capsys, "validate", "path:5", "0,3")
    assert code == 0 and "end_time 3" in out
    code, out, _ = run(capsys, "validate", "path:5", "0,1")
    assert code == 1 and "invalid" in out
    code, out, _ = run(capsys, "--one-based", "validate", "path:5", "1,4")
    assert code == 0


def test_complex_command_round_trip(capsys):
    code, out, _ = run(capsys, "--format", "json", "complex", "path:5")
    record = json.loads(out)
    assert record["schema"] == 1
    rebuilt = {tuple(f) for f in record["facets"]}
    assert rebuilt == set(configuration_space(path_graph(5)).facets)


def test_burnings_round_trip(capsys):
    code, out, _ = run(capsys, "--format", "json", "burnings", "path:4")
    record = json.loads(out)
    assert code == 0
    assert sorted(b["sources"] for b in record["burnings"]) == [
        [0, 2], [0, 3], [1, 3], [2, 0], [3, 0], [3, 1]]


def test_homology_command(capsys):
    code, out, _ = run(capsys, "homology", "path:5")
    assert code == 0 and out.splitlines() == ["H_0 = Z", "H_1 = Z", "H_2 = 0"]
    code, out, _ = run(capsys, "homology", "--reduced", "--coeff", "q", "path:5")
    assert out.splitlines() == ["H~_0 = 0", "H~_1 = Z", "H~_2 = 0"]


def test_minimal_subgraphs_command(capsys):
    text = "n 7\n0 1\n1 2\n1 3\n1 4\n2 5\n3 5\n4 5\n5 6\n"
    code, out, _ = run(capsys, "minimal-subgraphs", text, "0,5")
    assert code == 0 and out.strip().endswith("total 3")


def test_witness_command(capsys):
    code, out, _ = run(capsys, "--format", "json", "witness", "min-n-for-k", "3")
    record = json.loads(out)
    assert record["n"] == 5 and record["witness"] == [0, 2, 4]


def test_verify_command(capsys):
    code, out, _ = run(capsys, "verify", "cube", "p5-configuration-space")
    assert code == 0 and out.count("PASS") == 2
    code, _, err = run(capsys, "verify", "bogus-check")
    assert code == 2 and "unknown check" in err


def test_usage_errors(capsys):
    code, _, err = run(capsys, "burning-number", "cycle:2")
    assert code == 2 and "cycle" in err
    code, _, err = run(capsys, "validate", "path:3", "0,x")
    assert code == 2


def test_determinism(capsys):
    first = run(capsys, "--format", "json", "burnings", "cube")
    second = run(capsys, "--format", "json", "burnings", "cube")
    assert first == second


def test_text_format_graph_round_trip(capsys):
    from graphburning.graphs import format_graph_text
    g = load_graph("cycle:5")
    assert parse_graph_text(format_graph_text(g)) == g
