import json

from padiczoo.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_eval_ball_step(capsys):
    code, out, _ = run(capsys, "--prime", "5", "eval", "thm34i", "p^2",
                       "--set", "3,1")
    assert code == 0
    assert "5^4" in out


def test_eval_zero(capsys):
    code, out, _ = run(capsys, "--prime", "3", "eval", "thm2_f", "0")
    assert code == 0
    assert out.strip() == "0"


def test_eval_parse_error_exit_2(capsys):
    code, _, err = run(capsys, "--prime", "3", "eval", "thm2_f", "1.5x")
    assert code == 2
    assert "error" in err


def test_usage_error_exit_2(capsys):
    assert main(["frobnicate"]) == 2
    assert main(["--prime", "9", "list"]) == 2  # not a prime


def test_insufficient_precision_exit_3(capsys):
    # an all-zero digit window is a precision-bounded zero: ball membership
    # for the sparse series cannot be decided
    code, _, err = run(capsys, "--prime", "2", "eval", "lip_fN",
                       "0 0 0 * 2^0 (mod 2^3)")
    assert code == 3
    assert "precision" in err


def test_verify_pass_and_fail(capsys):
    code, out, _ = run(capsys, "--prime", "5", "verify", "thm34i",
                       "strict-fail", "--limit", "10")
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == 1 and doc["passed"]
    assert doc["prime"] == 5 and "seed" in doc
    # an empty trace cannot certify the claim: exit 1
    code, out, _ = run(capsys, "--prime", "5", "verify", "thm34i",
                       "strict-fail", "--limit", "0")
    assert code == 1


def test_verify_unknown_claim_exit_2(capsys):
    code, _, err = run(capsys, "--prime", "5", "verify", "thm34i", "nope")
    assert code == 2


def test_table(capsys):
    code, out, _ = run(capsys, "--prime", "2", "table", "lip_fN",
                       "--alpha", "2", "--n-max", "30")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("n,coeff_norm,coeff_norm_decimal,")
    assert len(lines) == 32
    # norms rendered as p^k strings alongside decimals
    assert any(",2^-" in line for line in lines[1:])


def test_haar_command_reproducible(capsys):
    code1, out1, _ = run(capsys, "--prime", "3", "--seed", "11", "haar",
                         "--samples", "1500", "--k", "4")
    code2, out2, _ = run(capsys, "--prime", "3", "--seed", "11", "haar",
                         "--samples", "1500", "--k", "4")
    assert code1 == code2 == 0
    assert out1 == out2
    doc = json.loads(out1)
    assert doc["schema"] == 1
    assert len(doc["E_prefix"]) == 4


def test_verify_haar(capsys):
    code, out, _ = run(capsys, "--prime", "2", "verify", "haar", "Y0",
                       "--samples", "3000")
    assert code == 0
    doc = json.loads(out)
    assert doc["entry"] == "haar" and doc["passed"]


def test_list(capsys):
    code, out, _ = run(capsys, "list")
    assert code == 0
    for name in ("thm34i", "lip_fN", "thm16", "thm2_g", "haar"):
        assert name in out


def test_out_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code = main(["--prime", "3", "--format", "json", "--out", str(target),
                 "eval", "thm2_f", "4"])
    assert code == 0
    doc = json.loads(target.read_text())
    assert doc["schema"] == 1 and doc["value"].startswith("1 1")
