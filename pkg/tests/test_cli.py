"""Tests for the command line: config validation, exit codes and written files."""

import json

import pytest

from main import EXIT_ERROR, EXIT_OK, EXIT_REJECTED, RunConfig, RunConfigError, main, random_tree


@pytest.fixture
def edge_file(tmp_path):
    def write(name: str, text: str):
        path = tmp_path / name
        path.write_text(text)
        return path
    return write


STAR6 = "".join(f"r l{i}\n" for i in range(6))
C5 = "c0 c1\nc1 c2\nc2 c3\nc3 c4\nc4 c0\n"


def test_run_config_validation(tmp_path):
    with pytest.raises(RunConfigError):
        RunConfig("recognize")
    with pytest.raises(RunConfigError):
        RunConfig("draw", input=tmp_path / "g.txt", random=5)
    with pytest.raises(RunConfigError):
        RunConfig("draw", random=1)
    with pytest.raises(RunConfigError):
        RunConfig("enumerate", degree=6)
    with pytest.raises(RunConfigError):
        RunConfig("verify", input=tmp_path / "d.json", tolerance=0)
    assert RunConfig("enumerate").output_dir.name == "output"


def test_recognize_star_six_is_rejected(edge_file, capsys):
    code = main(["recognize", "--input", str(edge_file("star6.txt", STAR6)), "--quiet"])
    assert code == EXIT_REJECTED
    payload = json.loads(capsys.readouterr().out)
    assert payload["drawable"] is False
    assert payload["witness"] == {"vertex": "r", "degree": 6}


def test_recognize_cycle_is_accepted(edge_file, tmp_path, capsys):
    out = tmp_path / "decision.json"
    code = main(["recognize", "--input", str(edge_file("c5.txt", C5)), "--json", str(out), "--quiet"])
    assert code == EXIT_OK
    assert json.loads(out.read_text())["drawable"] is True


def test_draw_then_verify(edge_file, tmp_path):
    out = tmp_path / "out"
    code = main(["draw", "--input", str(edge_file("c5.txt", C5)), "--output", str(out), "--quiet"])
    assert code == EXIT_OK
    drawing = out / "c5.json"
    assert drawing.exists()
    assert (out / "c5.svg").read_text().count("<circle") == 5
    assert main(["verify", "--input", str(drawing), "--quiet"]) == EXIT_OK


def test_draw_rejected_tree_writes_nothing(edge_file, tmp_path):
    out = tmp_path / "out"
    assert main(["draw", "--input", str(edge_file("star6.txt", STAR6)), "--output", str(out), "--quiet"]) == EXIT_REJECTED
    assert not out.exists()


def test_draw_random_tree_is_seeded(tmp_path):
    assert random_tree(8, seed=3) == random_tree(8, seed=3)
    assert len(random_tree(8, seed=3)) == 8
    code = main(["draw", "--random", "6", "--seed", "1", "--output", str(tmp_path), "--quiet"])
    assert code in (EXIT_OK, EXIT_REJECTED)


def test_verify_with_separate_coordinates(edge_file, tmp_path, capsys):
    graph = edge_file("path.txt", "a b\nb c\n")
    good = edge_file("good.json", json.dumps({"a": [0, 0], "b": ["1/2", 0], "c": [1, 0]}))
    bad = edge_file("bad.json", json.dumps({"a": [0, 0], "b": [1, 0], "c": ["9/10", "1/20"]}))
    assert main(["verify", "--input", str(graph), "--coords", str(good), "--quiet"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["exact"] is True
    assert main(["verify", "--input", str(graph), "--coords", str(bad), "--quiet"]) == EXIT_REJECTED


def test_float_coordinates_use_relative_tolerance(edge_file, capsys):
    graph = edge_file("path.txt", "a b\nb c\n")
    coords = edge_file("float.json", json.dumps({"a": [0.0, 0.0], "b": [0.5, 0.0], "c": [1.0, 0.0]}))
    assert main(["verify", "--input", str(graph), "--coords", str(coords), "--tolerance", "1e-6", "--quiet"]) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["exact"] is False
    assert payload["tolerance"] == 1e-6


def test_classify_lists_every_arc(edge_file, tmp_path):
    out = tmp_path / "types.json"
    code = main(["classify", "--input", str(edge_file("p.txt", "a b\nb c\nb d\n")), "--json", str(out), "--quiet"])
    assert code == EXIT_OK
    rows = json.loads(out.read_text())
    assert len(rows) == 6
    assert {"stub": "b", "child": "a", "type": "A", "sup": "180", "bucket": "=180°"} in rows


def test_errors_exit_with_two(edge_file, tmp_path):
    assert main(["recognize", "--input", str(tmp_path / "missing.txt"), "--quiet"]) == EXIT_ERROR
    assert main(["recognize", "--input", str(edge_file("bad.txt", "a b c\n")), "--quiet"]) == EXIT_ERROR
    assert main(["draw", "--quiet"]) == EXIT_ERROR
    assert main(["verify", "--input", str(edge_file("nojson.json", "{")), "--quiet"]) == EXIT_ERROR


def test_enumerate_single_degree(tmp_path, capsys):
    assert main(["enumerate", "--degree", "3", "--output", str(tmp_path), "--quiet"]) == EXIT_OK
    assert capsys.readouterr().out.startswith("d = 3")
    assert (tmp_path / "angle_table_d3.json").exists()


def test_exact_coordinates_honor_relative_tolerance(edge_file, capsys):
    # the tightest pair improves by 1/2 on a drawing of diameter 1
    graph = edge_file("path.txt", "a b\nb c\n")
    coords = edge_file("exact.json", json.dumps({"a": [0, 0], "b": ["1/2", 0], "c": [1, 0]}))
    assert main(["verify", "--input", str(graph), "--coords", str(coords), "--quiet"]) == EXIT_OK
    capsys.readouterr()
    assert main(["verify", "--input", str(graph), "--coords", str(coords), "--tolerance", "0.6", "--quiet"]) == EXIT_REJECTED
    payload = json.loads(capsys.readouterr().out)
    assert payload["exact"] is True
    assert payload["tolerance"] == 0.6
