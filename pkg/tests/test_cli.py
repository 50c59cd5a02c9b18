import json

import pytest

from zetaform.__main__ import run
from zetaform.core.forms import ball_rivoal_form
from zetaform.core.parser import format_form
from zetaform.core.zeta_coeffs import coefficients
from zetaform.utils.common import EXIT_NOT_INTEGRABLE, EXIT_USAGE
from zetaform.utils.output import CoefficientsRecord

BEUKERS = "x1*x2*(1-x1)*(1-x2)/(1-x1*x2)^2"


def test_no_arguments_prints_logo_and_help(capsys):
    assert run([]) == 0
    out = capsys.readouterr().out
    assert "exact linear forms in zeta values" in out
    assert "Usage" in out


def test_unknown_command_is_a_usage_error(capsys):
    assert run(["frobnicate"]) == EXIT_USAGE
    assert "frobnicate" in capsys.readouterr().err


@pytest.mark.parametrize("args", [["coeffs", "--frob", "x1"], ["coeffs"], ["scan", "--n", "two", "--max-N", "3"]])
def test_bad_options_are_usage_errors(capsys, args):
    assert run(args) == EXIT_USAGE


def test_coeffs_reads_back_a_printed_form(capsys):
    form = ball_rivoal_form((1, 1, 1), (2, 2, 2), 2)
    assert run(["coeffs", format_form(form), "--json"]) == 0
    record = json.loads(capsys.readouterr().out)
    assert record == CoefficientsRecord.from_coefficients(coefficients(form)).model_dump()
    assert run(["integrable", format_form(form)]) == 0


def test_coeffs_text(capsys):
    assert run(["coeffs", "1/(1-x1*x2)"]) == 0
    assert capsys.readouterr().out == "a0 = 0\na2 = 1\n"


def test_coeffs_json(capsys):
    assert run(["coeffs", BEUKERS, "--json"]) == 0
    assert json.loads(capsys.readouterr().out) == {"n": 2, "a0": "5", "coeffs": {"2": "-3"}}


def test_coeffs_odd_basis(capsys):
    assert run(["coeffs", "1/(1-x1*x2*x3)^2", "--odd-basis"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("a0 = 0\na2 = 1\na3 = 0\n")
    assert "odd basis: -1/24*T^2" in out


def test_coeffs_with_explicit_n(capsys):
    assert run(["coeffs", "x1", "--n", "2"]) == 0
    assert capsys.readouterr().out == "a0 = 1/2\na2 = 0\n"
    assert run(["coeffs", "x1/(1-x1*x2)", "--n", "1"]) == EXIT_USAGE


def test_coeffs_not_integrable(capsys):
    assert run(["coeffs", "1/(1-x1*x2)^2"]) == EXIT_NOT_INTEGRABLE
    assert "Error" in capsys.readouterr().err


def test_coeffs_parse_error_points_at_the_column(capsys):
    assert run(["coeffs", "1/(1-x1*y)"]) == EXIT_USAGE
    err = capsys.readouterr().err
    assert "column 9" in err
    assert "^" in err


@pytest.mark.parametrize("expr, code, answer", [("1/(1-x1*x2)", 0, "true"), ("1/(1-x1*x2)^2", 2, "false")])
def test_integrable(capsys, expr, code, answer):
    assert run(["integrable", expr]) == code
    assert capsys.readouterr().out.strip() == answer


def test_tau(capsys):
    assert run(["tau", "1/(1-x1*x2*x3)^2"]) == 0
    assert capsys.readouterr().out.splitlines() == [
        "tau: (-1)/(1-x1*x2*x3)^2",
        "symmetry: minus",
        "predicted zeros: a3",
    ]


def test_tau_without_symmetry(capsys):
    assert run(["tau", "1/(1-x1*x2)"]) == 0
    out = capsys.readouterr().out
    assert "symmetry: none" in out
    assert "predicted zeros: none" in out


def test_ballrivoal_beukers(capsys):
    assert run(["ballrivoal", "--u", "2,2", "--v", "2,2", "--N", "2"]) == 0
    out = capsys.readouterr().out
    assert "3F2(2, 2, 2; 4, 4; 1)" in out
    assert out.endswith("a0 = 5\na2 = -3\n")


def test_ballrivoal_check(capsys):
    assert run(["ballrivoal", "--u", "2,2", "--v", "2,2", "--N", "2", "--check", "--K", "1000", "--digits", "15"]) == 0
    assert capsys.readouterr().out.rstrip().endswith("check:  pass (K=1000, digits=15)")


def test_ballrivoal_family_json(capsys):
    assert run(["ballrivoal", "--family", "1,1", "--n", "5", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert (payload["u"], payload["v"], payload["N"]) == ([2] * 5, [2] * 5, 5)
    assert payload["n"] == 5
    assert "check" not in payload


@pytest.mark.parametrize(
    "args",
    [
        ["--family", "1,1"],
        ["--family", "1", "--n", "5"],
        ["--family", "1,1", "--n", "5", "--N", "3"],
        ["--u", "1,1", "--v", "1,1"],
        ["--u", "1,a", "--v", "1,1", "--N", "1"],
        ["--u", "1,1", "--v", "1", "--N", "1"],
    ],
)
def test_ballrivoal_usage_errors(capsys, args):
    assert run(["ballrivoal"] + args) == EXIT_USAGE


def test_ballrivoal_divergent(capsys):
    assert run(["ballrivoal", "--u", "1,1", "--v", "1,1", "--N", "2"]) == EXIT_NOT_INTEGRABLE


def test_scan_to_stdout(capsys):
    assert run(["scan", "--n", "2", "--max-N", "4", "--well-poised"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 5
    assert {tuple(json.loads(line)["u"]) for line in lines} == {(1, 1), (1, 2), (2, 2)}


def test_scan_out_and_resume(capsys, tmp_path):
    out = tmp_path / "scan.jsonl"
    assert run(["scan", "--n", "2", "--max-N", "3", "--well-poised", "--out", str(out)]) == 0
    assert len(out.read_text(encoding="utf-8").splitlines()) == 2
    assert run(["scan", "--n", "2", "--max-N", "4", "--well-poised", "-o", str(out), "--resume"]) == 0
    assert len(out.read_text(encoding="utf-8").splitlines()) == 5
    assert capsys.readouterr().out == ""


def test_scan_resume_needs_out(capsys):
    assert run(["scan", "--n", "2", "--max-N", "3", "--resume"]) == EXIT_USAGE


def test_eulerian(capsys):
    assert run(["eulerian", "--r", "3"]) == 0
    assert capsys.readouterr().out == "E_3(x) = x^2 + 4*x + 1\n"
    assert run(["eulerian", "--table", "4"]) == 0
    assert "11" in capsys.readouterr().out
    assert run(["eulerian", "--r", "3", "--table", "4"]) == EXIT_USAGE


def test_periods(capsys):
    assert run(["periods", "--verify-n", "4", "--volumes"]) == 0
    out = capsys.readouterr().out
    assert "ok" in out and "FAIL" not in out
    assert run(["periods", "--print-Q", "3"]) == 0
    assert "-1/6" in capsys.readouterr().out
    assert run(["periods", "--print-P", "2"]) == 0
    assert run(["periods"]) == EXIT_USAGE


def test_check(capsys):
    assert run(["check", "1/(1-x1*x2)", "--K", "1000", "--digits", "15"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("a0 = 0\na2 = 1\n")
    assert out.rstrip().endswith("check:  pass (K=1000, digits=15)")


def test_check_json(capsys):
    assert run(["check", BEUKERS, "--K", "1000", "--digits", "15", "--json"]) == 0
    record = json.loads(capsys.readouterr().out)
    assert record["passed"] is True
    assert (record["K"], record["digits"]) == (1000, 15)


def test_check_refuses_divergent_forms(capsys):
    assert run(["check", "1/(1-x1*x2)^2", "--K", "100"]) == EXIT_NOT_INTEGRABLE
    assert run(["check", "1/(1-x1*x2)", "--K", "0"]) == EXIT_USAGE


def test_config_file_sets_check_defaults(capsys, tmp_path):
    path = tmp_path / "zetaform.yaml"
    path.write_text("numeric:\n  default_K: 500\n  default_digits: 12\n", encoding="utf-8")
    assert run(["--config", str(path), "check", "1/(1-x1*x2)"]) == 0
    assert "(K=500, digits=12)" in capsys.readouterr().out


def test_verbose_flag(capsys):
    assert run(["-v", "integrable", "1/(1-x1*x2)"]) == 0
    assert capsys.readouterr().out.strip() == "true"
    assert run(["integrable", "1/(1-x1*x2)"]) == 0


def test_schema(capsys):
    assert run(["schema", "scan"]) == 0
    schema = json.loads(capsys.readouterr().out)
    assert "predicted_zeros" in schema["properties"]
    assert run(["schema", "bogus"]) == EXIT_USAGE
