"""CLI behavior: subcommands, output formats, and every exit code path."""

import json

import pytest

from redux import verify
from redux.cli import main
from redux.verify import VerifyResult


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_info_text(capsys):
    code, out, _ = run_cli(capsys, "info", "4231")
    assert code == 0
    assert "length: 5" in out
    assert "vexillary: True" in out
    assert "freely_braided: False" in out


def test_info_json(capsys):
    code, out, _ = run_cli(capsys, "--format", "json", "info", "321")
    assert code == 0
    payload = json.loads(out)
    assert payload["schema"] == 1
    assert payload["length"] == 3
    assert payload["shape"] == [2, 1]
    assert payload["count_321"] == 1


def test_enum_words_text(capsys):
    code, out, _ = run_cli(capsys, "enum", "words", "321")
    assert code == 0
    assert out.splitlines() == ["121", "212", "count 2"]


def test_enum_classes_json(capsys):
    code, out, _ = run_cli(capsys, "--format", "json", "enum", "classes", "4231")
    assert code == 0
    payload = json.loads(out)
    assert [c["size"] for c in payload["classes"]] == [1, 4, 1]
    assert payload["classes"][0]["representative"] == "12321"


def test_enum_tilings_and_zonotopal(capsys):
    code, out, _ = run_cli(capsys, "enum", "tilings", "321")
    assert code == 0 and out.splitlines()[-1] == "count 2"
    code, out, _ = run_cli(capsys, "enum", "zonotopal", "321")
    assert code == 0 and out.splitlines()[-1] == "count 3"
    code, out, _ = run_cli(capsys, "--format", "json", "enum", "tilings", "321")
    payload = json.loads(out)
    assert len(payload["tilings"]) == 2


def test_enum_poset(capsys):
    code, out, _ = run_cli(capsys, "enum", "poset", "321")
    assert code == 0
    assert "elements 3" in out and "covers 2" in out
    code, out, _ = run_cli(capsys, "--format", "json", "enum", "poset", "321")
    assert json.loads(out)["schema"] == 1


def test_verify_pass_exit_0(capsys):
    code, out, _ = run_cli(capsys, "verify", "1lbm", "--n", "3")
    assert code == 0
    assert "1lbm: PASS" in out


def test_verify_json(capsys):
    code, out, _ = run_cli(capsys, "--format", "json", "verify", "syt", "--n", "3")
    assert code == 0
    payload = json.loads(out)
    assert payload["ok"] is True and payload["theorem"] == "syt"


def test_verify_counterexample_exit_1(capsys, monkeypatch):
    stub = lambda n: VerifyResult("stub", False, 1, "321")
    monkeypatch.setitem(verify.THEOREMS, "stub", stub)
    code, out, _ = run_cli(capsys, "verify", "stub", "--n", "3")
    assert code == 1
    assert "FAIL at 321" in out


def test_usage_errors_exit_2(capsys):
    for argv in (
        ["verify", "nope", "--n", "3"],
        ["info", "4221"],
        ["info", "abc"],
        ["render", "nope", "321"],
        ["render", "tiling:9", "321"],
    ):
        code, _, err = run_cli(capsys, *argv)
        assert code == 2, argv
        assert "error" in err


def test_argparse_usage_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["enum", "nothing", "321"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_budget_exit_3(capsys):
    code, _, err = run_cli(capsys, "enum", "words", "87654321")
    assert code == 3
    assert "budget exceeded" in err


def test_budget_flags_and_env(capsys, monkeypatch):
    code, _, _ = run_cli(capsys, "--max-length", "2", "enum", "words", "321")
    assert code == 3
    monkeypatch.setenv("REDUX_BUDGET_OVERRIDE", "1")
    code, out, _ = run_cli(capsys, "--max-length", "2", "enum", "words", "321")
    assert code == 0
    assert out.splitlines()[-1] == "count 2"


def test_render_polygon_deterministic(capsys):
    code, first, _ = run_cli(capsys, "render", "polygon", "4132")
    assert code == 0 and first.startswith("<svg")
    code, second, _ = run_cli(capsys, "render", "polygon", "4132")
    assert first == second


def test_render_tiling(capsys):
    code, out, _ = run_cli(capsys, "render", "tiling:1", "321")
    assert code == 0 and "<polygon" in out
    code, out, _ = run_cli(capsys, "--format", "json", "render", "tiling", "321")
    assert json.loads(out)["schema"] == 1


def test_render_graph_and_poset(capsys):
    code, out, _ = run_cli(capsys, "render", "graph", "4231")
    assert code == 0 and out.startswith("graph G {")
    code, out, _ = run_cli(capsys, "--format", "json", "render", "graph", "4231")
    assert len(json.loads(out)["vertices"]) == 3
    code, out, _ = run_cli(capsys, "render", "poset", "321")
    assert code == 0
    code, out, _ = run_cli(capsys, "--format", "json", "render", "poset", "321")
    assert json.loads(out)["schema"] == 1


def test_output_file(tmp_path, capsys):
    target = tmp_path / "out.svg"
    code, out, _ = run_cli(capsys, "-o", str(target), "render", "polygon", "4132")
    assert code == 0 and out == ""
    assert target.read_text().startswith("<svg")
