"""CLI surface tests: formats, exit-code contract, determinism."""

import json
import subprocess
import sys
from fractions import Fraction

import pytest

from eulerferm import cli
from eulerferm.identities import IdentityReport


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_poly_text(capsys):
    code, out, _ = run_cli(capsys, "poly", "3")
    assert code == 0
    assert out.strip() == "1/4 - 3/2*x^2 + x^3"


def test_poly_json(capsys):
    code, out, _ = run_cli(capsys, "poly", "3", "--format", "json")
    assert code == 0
    assert json.loads(out) == ["1/4", "0", "-3/2", "1"]


def test_eval(capsys):
    code, out, _ = run_cli(capsys, "eval", "2", "1/2")
    assert code == 0
    assert out.strip() == "-1/4"


def test_eval_negative_rational_argument(capsys):
    code, out, _ = run_cli(capsys, "eval", "1", "-1/2")
    assert code == 0
    assert out.strip() == "-1"


def test_negative_point_lists_parse(capsys):
    code, out, _ = run_cli(capsys, "verify", "sun", "--m", "0..1",
                           "--n", "0..1", "--points", "-2/3,0")
    assert code == 0
    assert out.strip().splitlines()[-1] == "PASS 8/8"


def test_eval_malformed_rational_exits_2(capsys):
    with pytest.raises(SystemExit) as err:
        cli.main(["eval", "2", "1/0"])
    assert err.value.code == 2


def test_numbers_table(capsys):
    code, out, _ = run_cli(capsys, "numbers", "6")
    assert code == 0
    values = [int(line.split("\t")[1]) for line in out.strip().splitlines()]
    assert values == [1, 0, -1, 0, 5, 0, -61]


def test_numbers_json(capsys):
    code, out, _ = run_cli(capsys, "numbers", "4", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data[4] == {"n": 4, "euler_number": 5}


def test_verify_json_roundtrip(capsys):
    code, out, _ = run_cli(capsys, "verify", "cro2", "--n", "0..20",
                           "--format", "json")
    assert code == 0
    body, summary = out.rsplit("\n", 2)[0], out.strip().splitlines()[-1]
    reports = json.loads(body)
    assert len(reports) == 21
    assert all(r["pass"] for r in reports)
    assert all(set(r) == {"id", "params", "mode", "residual", "pass",
                          "elapsed_ms"} for r in reports)
    assert summary == "PASS 21/21"


def test_verify_text_and_md_and_csv(capsys):
    for fmt in ("text", "md", "csv"):
        code, out, _ = run_cli(capsys, "verify", "reflection", "--n", "0..3",
                               "--format", fmt)
        assert code == 0
        assert "PASS 4/4" in out


def test_verify_all_small_grid(capsys):
    code, out, _ = run_cli(capsys, "verify", "all", "--m", "0..2",
                           "--n", "0..2", "--q", "1..2", "--k", "1..2",
                           "--s", "1..2", "--points", "0,1/2",
                           "--p", "3,5", "--precision", "2")
    assert code == 0
    assert out.strip().splitlines()[-1].startswith("PASS")


def test_verify_unknown_id_exits_2(capsys):
    code, _, err = run_cli(capsys, "verify", "nosuch")
    assert code == 2
    assert "unknown checker" in err


def test_verify_malformed_range_exits_2():
    with pytest.raises(SystemExit) as err:
        cli.main(["verify", "cro2", "--n", "5..x"])
    assert err.value.code == 2


def test_verify_even_prime_exits_2():
    with pytest.raises(SystemExit) as err:
        cli.main(["verify", "witt", "--p", "2"])
    assert err.value.code == 2


def test_verify_budget_too_small_exits_2(capsys):
    code, _, err = run_cli(capsys, "verify", "witt", "--budget", "3")
    assert code == 2
    assert "budget" in err


def test_verify_failure_exits_1(capsys, monkeypatch):
    fake = [IdentityReport("wsp7", {"m": 0, "n": 0}, "symbolic",
                           Fraction(1), False, 0.1)]
    monkeypatch.setattr(cli, "run_suite", lambda ids, grid: fake)
    code, out, _ = run_cli(capsys, "verify", "wsp7")
    assert code == 1
    assert "FAIL 1/1" in out


def test_witt_pass(capsys):
    code, out, _ = run_cli(capsys, "witt", "--p", "3", "--precision", "2",
                           "--n", "1", "--a", "0", "--naive")
    assert code == 0
    assert "S_N (closed)  = 4" in out
    assert "E_n(a)        = -1/2" in out
    assert "defect v_p    = 2" in out
    assert "matches closed form" in out
    assert out.strip().endswith("PASS")


def test_witt_infinite_defect(capsys):
    code, out, _ = run_cli(capsys, "witt", "--p", "3", "--precision", "1",
                           "--n", "0", "--a", "1/2")
    assert code == 0
    assert "defect v_p    = inf" in out


def test_witt_json(capsys):
    code, out, _ = run_cli(capsys, "witt", "--p", "5", "--precision", "2",
                           "--n", "3", "--a", "1/2", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["pass"] is True and data["defect"] >= 2


def test_witt_rejects_p2(capsys):
    code, _, err = run_cli(capsys, "witt", "--p", "2", "--precision", "1",
                           "--n", "1", "--a", "0")
    assert code == 2
    assert "odd prime" in err


def test_witt_rejects_composite_p(capsys):
    code, _, err = run_cli(capsys, "witt", "--p", "9", "--precision", "1",
                           "--n", "1", "--a", "0")
    assert code == 2


def test_witt_rejects_non_integral_shift(capsys):
    code, _, err = run_cli(capsys, "witt", "--p", "3", "--precision", "2",
                           "--n", "1", "--a", "1/3")
    assert code == 2
    assert "not a 3-adic integer" in err


def test_witt_budget_exceeded_exits_2(capsys):
    code, _, err = run_cli(capsys, "witt", "--p", "3", "--precision", "2",
                           "--n", "1", "--a", "0", "--naive", "--budget", "4")
    assert code == 2


def test_witt_defect_below_precision_exits_1(capsys, monkeypatch):
    monkeypatch.setattr(cli, "witt_defect", lambda *a, **k: 0)
    code, out, _ = run_cli(capsys, "witt", "--p", "3", "--precision", "2",
                           "--n", "1", "--a", "0")
    assert code == 1
    assert out.strip().endswith("FAIL")


def test_verify_output_is_deterministic(capsys):
    def strip_elapsed(text):
        reports = json.loads(text.rsplit("\n", 2)[0])
        for r in reports:
            r.pop("elapsed_ms")
        return reports

    _, out1, _ = run_cli(capsys, "verify", "wsp7", "cro2", "--m", "0..2",
                         "--n", "0..2", "--format", "json")
    _, out2, _ = run_cli(capsys, "verify", "wsp7", "cro2", "--m", "0..2",
                         "--n", "0..2", "--format", "json")
    assert strip_elapsed(out1) == strip_elapsed(out2)


def test_module_entrypoint_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "eulerferm", "poly", "2"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "-x + x^2"
