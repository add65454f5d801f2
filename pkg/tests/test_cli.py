import json
import subprocess
import sys

import pytest

from polyrel.cli import main, parse_complex_literal


def run_cli(*argv):
    import contextlib
    import io

    out = io.StringIO()
    err = io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


def test_parse_complex_literals():
    assert parse_complex_literal("0+1i") == complex(0, 1)
    assert parse_complex_literal("2i") == complex(0, 2)
    assert parse_complex_literal("-1.5-0.25i") == complex(-1.5, -0.25)
    assert parse_complex_literal("3") == complex(3, 0)
    assert parse_complex_literal("1.5e-2+2e1i") == complex(0.015, 20.0)
    with pytest.raises(ValueError):
        parse_complex_literal("nope")


def test_list_and_show():
    code, out, _ = run_cli("list")
    assert code == 0
    assert "xi7_explicit" in out
    code, out, _ = run_cli("show", "five_term", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["weight"] == 2
    assert len(data["sum"]) == 5


def test_eval_cl_catalan():
    code, out, _ = run_cli("eval-cl", "--m", "2", "--z", "0+1i", "--precision", "50")
    assert code == 0
    assert out.strip().startswith("0.91596559417721901505")


def test_eval_li_branch_error_is_usage():
    code, _, err = run_cli("eval-li", "--m", "2", "--z", "1.5")
    assert code == 2
    assert "branch" in err.lower() or "error" in err.lower()


def test_verify_five_term_exit_zero():
    code, out, _ = run_cli(
        "verify", "--equation", "five_term", "--mode", "both", "--seed", "7",
        "--points", "4", "--trials", "3", "--functionals", "3",
    )
    assert code == 0
    assert "PASS" in out


def test_verify_building_block_is_usage_error():
    code, _, err = run_cli("verify", "--equation", "f17", "--seed", "1")
    assert code == 2
    assert "building block" in err


def test_verify_unknown_equation_usage_error():
    code, _, err = run_cli("verify", "--equation", "zzz", "--seed", "1")
    assert code == 2


def test_check_xi7_term_count_prints_274():
    code, out, _ = run_cli("check", "--name", "xi7-term-count")
    assert code == 0
    assert out.splitlines()[0].strip() == "274"


def test_check_unknown_name():
    code, _, err = run_cli("check", "--name", "bogus")
    assert code == 2


def test_check_proof_algebra():
    code, out, _ = run_cli("check", "--name", "proof-algebra-n2", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["all_passed"] is True


def test_json_reports_byte_identical_for_same_seed():
    args = [
        "verify", "--equation", "three_term", "--mode", "both", "--seed", "11",
        "--points", "3", "--trials", "3", "--functionals", "2", "--json",
    ]
    code1, out1, _ = run_cli(*args)
    code2, out2, _ = run_cli(*args)
    assert code1 == code2 == 0

    def strip_timings(text):
        data = json.loads(text)
        for c in data["checks"]:
            c.pop("seconds", None)
        return json.dumps(data, sort_keys=True)

    assert strip_timings(out1) == strip_timings(out2)


def test_report_subset():
    code, out, _ = run_cli("report", "--only", "4", "--seed", "3")
    assert code == 0
    assert "q-equations" in out


def test_report_subset_parallel_matches_serial():
    code1, out1, _ = run_cli("report", "--only", "4", "--seed", "3", "--jobs", "2", "--json")
    code2, out2, _ = run_cli("report", "--only", "4", "--seed", "3", "--jobs", "1", "--json")
    assert code1 == code2 == 0

    def strip(text):
        data = json.loads(text)
        for c in data["checks"]:
            c.pop("seconds", None)
        return data

    assert strip(out1) == strip(out2)


def test_verify_fourlog_numeric_only():
    code, _, err = run_cli(
        "verify", "--equation", "fourlog_n2", "--mode", "both", "--seed", "1"
    )
    assert code == 2
    assert "numeric-only" in err
    code, out, _ = run_cli(
        "verify", "--equation", "fourlog_n2", "--mode", "numeric",
        "--points", "2", "--precision", "40", "--seed", "1",
    )
    assert code == 0
    assert "PASS" in out


def test_export_roundtrip(tmp_path):
    code, out, _ = run_cli("export", "--out", str(tmp_path))
    assert code == 0
    from polyrel.catalog import equation_from_json, get_equation

    data = json.loads((tmp_path / "goncharov22.json").read_text())
    eq = equation_from_json(data)
    assert eq.sum == get_equation("goncharov22").sum


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "polyrel.cli", "--version"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "polyrel" in proc.stdout
