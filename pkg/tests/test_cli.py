import json

import numpy as np
import pytest

import ahcurv as ac
from ahcurv.cli import main


def _gen(tmp_path, *extra):
    out = tmp_path / "t.json"
    code = main(["gen", "--n", "3", "--out", str(out), *extra])
    assert code == 0
    return out


def test_gen_check_invariants_pass(tmp_path, capsys):
    out = _gen(tmp_path, "--kind", "constrained", "--lambda", "1",
               "--mu", "0.3", "--nu", "-0.2", "--seed", "11")
    assert main(["check", str(out)]) == 0
    assert main(["invariants", str(out)]) == 0
    text = capsys.readouterr().out
    assert "result" in text and "tau" in text


def test_check_fails_on_invalid_tensor(tmp_path):
    bad = tmp_path / "bad.json"
    raw = np.random.default_rng(0).standard_normal((6,) * 4)
    ac.write_tensor_file(bad, ac.TensorFile(n=3, tensor=raw, kind="raw"))
    assert main(["check", str(bad)]) == 1


def test_verify_theorem_and_replay_pass(tmp_path):
    out = _gen(tmp_path, "--kind", "constrained", "--lambda", "1",
               "--mu", "0.3", "--nu", "-0.2", "--seed", "11")
    report = tmp_path / "report.json"
    assert main(["verify", "theorem", str(out), "--lambda", "1", "--mu", "0.3",
                 "--nu", "-0.2", "--seed", "5", "--json", str(report)]) == 0
    payload = json.loads(report.read_text())
    assert payload["passed"] is True and payload["case"] == "lambda_nonzero"
    assert main(["verify", "replay", str(out), "--lambda", "1", "--mu", "0.3",
                 "--nu", "-0.2", "--seed", "5"]) == 0


def test_verify_corollary_pass(tmp_path):
    out = _gen(tmp_path, "--kind", "constrained", "--seed", "3")
    assert main(["verify", "corollary", str(out), "--seed", "4"]) == 0


def test_verify_lemma_exit_codes(tmp_path):
    assert main(["verify", "lemma", "--n", "2", "--mode", "exact"]) == 0
    assert main(["verify", "lemma", "--n", "2", "--mode", "float"]) == 0
    assert main(["verify", "lemma", "--n", "2", "--mode", "exact",
                 "--families", "holomorphic"]) == 1
    assert main(["verify", "lemma", "--n", "2", "--mode", "exact",
                 "--max-levels", "1"]) == 5


def test_hypothesis_violation_exits_4(tmp_path):
    out = _gen(tmp_path, "--kind", "random-rk", "--seed", "4")
    assert main(["verify", "theorem", str(out), "--lambda", "1"]) == 4
    assert main(["verify", "replay", str(out), "--lambda", "1"]) == 4


def test_usage_and_format_errors_exit_2(tmp_path):
    assert main(["gen", "--kind", "nonsense", "--out", "x.json"]) == 2
    assert main(["nonexistent-command"]) == 2
    assert main(["check", str(tmp_path / "absent.json")]) == 2
    assert main(["gen", "--n", "3", "--kind", "constrained", "--lambda", "0",
                 "--mu", "0", "--nu", "0", "--out", str(tmp_path / "x.json")]) == 2
    assert main(["gen", "--n", "1", "--kind", "pencil",
                 "--out", str(tmp_path / "x.json")]) == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{}")
    assert main(["check", str(bad)]) == 2


def test_help_exits_zero():
    assert main(["--help"]) == 0
    assert main(["gen", "--help"]) == 0


def test_no_solution_exit_3(tmp_path, monkeypatch):
    import ahcurv.cli as cli_mod

    def raise_no_solution(*args, **kwargs):
        raise ac.NoSolution("forced for exit-code coverage")

    monkeypatch.setattr(cli_mod, "constrained_sample", raise_no_solution)
    assert main(["gen", "--n", "3", "--kind", "constrained",
                 "--out", str(tmp_path / "x.json")]) == 3


def test_gen_byte_determinism(tmp_path):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    for out in (a, b):
        assert main(["gen", "--n", "2", "--kind", "random-rk", "--seed", "9",
                     "--out", str(out)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_verify_output_determinism(tmp_path, capsys):
    out = _gen(tmp_path, "--kind", "pencil", "--a", "1.5", "--b", "-0.5")
    capsys.readouterr()
    main(["verify", "corollary", str(out), "--seed", "7"])
    first = capsys.readouterr().out
    main(["verify", "corollary", str(out), "--seed", "7"])
    second = capsys.readouterr().out
    assert first == second


def test_json_reports_written(tmp_path):
    out = _gen(tmp_path, "--kind", "pencil", "--a", "2", "--b", "1",
               "--json", str(tmp_path / "gen.json"))
    for name, argv in [
        ("check.json", ["check", str(out), "--json", str(tmp_path / "check.json")]),
        ("inv.json", ["invariants", str(out), "--json", str(tmp_path / "inv.json")]),
        ("lem.json", ["verify", "lemma", "--n", "2", "--json", str(tmp_path / "lem.json")]),
    ]:
        assert main(argv) == 0
        payload = json.loads((tmp_path / name).read_text())
        assert "command" in payload
    gen_payload = json.loads((tmp_path / "gen.json").read_text())
    assert gen_payload["a"] == 2.0 and gen_payload["b"] == 1.0
