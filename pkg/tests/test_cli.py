import json

import pytest

import main
from src.format_output import decode_path, decode_tiling
from src.gt import shift_path, tiling_coords


def test_help(capsys):
    assert main.run([]) == 0
    assert "q-GT toolkit" in capsys.readouterr().out
    assert main.run(["help"]) == 0


def test_unknown_command(capsys):
    assert main.run(["tile"]) == 2
    assert "Unknown command" in capsys.readouterr().err


def test_dimq(capsys):
    assert main.run(["dimq", "2 0", "--q", "1/2"]) == 0
    assert capsys.readouterr().out.strip() == "7/4"
    assert main.run(["dimq", "2 0", "--q", "1/2", "--json"]) == 0
    assert json.loads(capsys.readouterr().out) == {"num": "7", "den": "4"}


def test_input_errors_exit_with_two(capsys):
    assert main.run(["dimq", "2 1 3"]) == 2
    assert "InvalidSignature" in capsys.readouterr().err
    assert main.run(["dimq", "1 0", "--q", "3/2", "--error-json"]) == 2
    assert json.loads(capsys.readouterr().out)["error"] == "InvalidQ"


def test_schur_and_interp(capsys):
    assert main.run(["schur", "1 1", "--at", "2", "3"]) == 0
    assert capsys.readouterr().out.strip() == "6"
    assert main.run(["interp", "2", "--at", "3", "--q", "1/2"]) == 0
    assert capsys.readouterr().out.strip() == "5"


def test_cotransition(capsys):
    assert main.run(["cotransition", "1 0", "--q", "1/2"]) == 0
    rows = [line.split() for line in capsys.readouterr().out.strip().splitlines()]
    assert rows == [["(0)", "2/3"], ["(1)", "1/3"]]


def test_primitive(capsys):
    assert main.run(["primitive", "1 0", "--level", "1", "--q", "1/2", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["level"] == 1
    assert data["tail"] == {"num": "0", "den": "1"}


def test_extreme(capsys):
    assert main.run(["extreme", "--nu", "0;1", "--level", "1", "--q", "1/2", "--eps", "1/1000"]) == 0
    rows = [line.split() for line in capsys.readouterr().out.strip().splitlines()]
    assert rows == [["(0)", "1/2"], ["(1)", "1/2"]]


def test_extreme_with_negative_nu(capsys):
    assert main.run(["extreme", "--nu=-1;0", "--level", "1", "--q", "1/2", "--json"]) == 0
    captured = capsys.readouterr()
    assert "⚠️" in captured.err
    data = json.loads(captured.out)
    coords = [entry[0]["coords"] for entry in data["masses"]]
    assert coords == [[-1], [0]]


def test_expand(capsys):
    assert main.run(["expand", "--H", "1 -1/2", "--level", "2", "--q", "1/2"]) == 0
    rows = [line.split() for line in capsys.readouterr().out.strip().splitlines()]
    assert rows == [["(0,0)", "0"], ["(1,0)", "1/2"], ["(1,1)", "1"]]


def test_qtoeplitz(capsys):
    assert main.run(["qtoeplitz", "--nu", "0;1", "--rows", "3", "--cols", "2", "--q", "1/2",
                     "--minors", "2", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["entries"][0][0] == {"num": "1", "den": "2"}
    assert len(data["minors"]) == 6


def test_sample_writes_svg(tmp_path, capsys):
    target = tmp_path / "tiling.svg"
    assert main.run(["sample", "--nu", "0;1", "--N", "3", "--count", "4", "--seed", "7",
                     "--q", "1/2", "--svg", str(target)]) == 0
    captured = capsys.readouterr()
    assert len(captured.out.strip().splitlines()) == 4
    assert target.exists()


def test_sample_mixture_json(capsys):
    assert main.run(["sample", "--nu", "0;0", "--nu", "0;1", "--weights", "1/4", "3/4",
                     "--N", "2", "--count", "3", "--eps", "0", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["manifest"]["count"] == 3
    assert len(data["tilings"]) == 3


def test_verify_single_suite(capsys):
    assert main.run(["verify", "--suite", "determinantal", "--seed", "3"]) == 0
    out = capsys.readouterr().out
    assert "determinantal" in out and "✅ pass" in out


def test_verify_rejects_unknown_suite():
    with pytest.raises(SystemExit):
        main.run(["verify", "--suite", "nothing"])


def test_sample_rejects_mismatched_weights(capsys):
    assert main.run(["sample", "--nu", "0;1", "--nu", "1;2", "--weights", "1", "--N", "2", "--count", "2"]) == 2
    assert "InvalidMeasure" in capsys.readouterr().err
    assert main.run(["sample", "--nu", "0;1", "--nu", "1;2", "--N", "2", "--count", "2", "--error-json"]) == 2
    payload = json.loads(capsys.readouterr().out)
    assert payload["error"] == "InvalidMeasure"
    assert payload["context"] == {"components": "2", "weights": "0"}


def test_sample_with_negative_nu_matches_the_shifted_run(capsys):
    common = ["--N", "3", "--count", "5", "--seed", "11", "--eps", "0", "--q", "1/2", "--json"]
    assert main.run(["sample", "--nu", "0;1"] + common) == 0
    reference = json.loads(capsys.readouterr().out)
    assert main.run(["sample", "--nu=-1;0"] + common) == 0
    captured = capsys.readouterr()
    assert "⚠️" in captured.err
    shifted = json.loads(captured.out)
    expected = [shift_path(decode_path(p), -1) for p in reference["paths"]]
    assert [decode_path(p) for p in shifted["paths"]] == expected
    assert [decode_tiling(t) for t in shifted["tilings"]] == [tiling_coords(p) for p in expected]
    assert shifted["manifest"]["spec"] == "-1;0"


def test_verify_reports_skipped_suites(monkeypatch, capsys):
    monkeypatch.setenv("QGT_VERIFY_BUDGET_MS", "-1")
    assert main.run(["verify", "--suite", "all", "--json"]) == 0
    captured = capsys.readouterr()
    data = json.loads(captured.out)
    assert data["summary"] == {"pass": 0, "fail": 0, "flag": 0, "skip": 16}
    assert {r["status"] for r in data["results"]} == {"skip"}
    assert "⏭" in captured.err and "16 of 16 suite(s) skipped" in captured.err
    assert "All checks passed" not in captured.err


def test_config_command(tmp_path, capsys):
    path = str(tmp_path / "qgt.json")
    assert main.run(["config", "set", "extreme_settings", "cap", "16", "--path", path]) == 0
    assert main.run(["config", "get", "extreme_settings", "cap", "--path", path]) == 0
    assert capsys.readouterr().out.strip() == "16"
    assert main.run(["config", "set", "arithmetic_settings", "default_q", "2/5", "--path", path]) == 0
    assert main.run(["config", "show", "--path", path]) == 0
    shown = json.loads(capsys.readouterr().out)
    assert shown["arithmetic_settings"]["default_q"] == "2/5"
    assert shown["extreme_settings"] == {"epsilon": "1/10000", "cap": 16}


def test_config_command_input_errors(tmp_path, capsys):
    path = str(tmp_path / "qgt.json")
    assert main.run(["config", "get", "extreme_settings", "--path", path]) == 2
    assert main.run(["config", "get", "extreme_settings", "missing", "--path", path]) == 2
    assert main.run(["config", "set", "extreme_settings", "cap", "--path", path]) == 2
    assert "ParseError" in capsys.readouterr().err
