"""Command line surface: subcommands, exit codes, JSON round trips."""

import json
import subprocess
import sys

import pytest

from curvadd.cli import main

HYPERBOLA_F7 = "p = 7\nk = 1\nf = x*y - 1\n"
QUAD_F3 = "p = 3\nk = 1\nf = y^2 + 2*x*y + 2*y + x\n"
CUBIC_F5 = "p = 5\nk = 1\nf = y^2 - x^3 - 3*x - 1\nassert_smooth = true\n"


def write_curve(tmp_path, text, name="c.curve"):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def test_analyze_text_output(tmp_path, capsys):
    path = write_curve(tmp_path, HYPERBOLA_F7)
    assert main(["analyze", "--curve", path]) == 0
    out = capsys.readouterr().out
    assert "x*y + 6 = 0 over F_7" in out
    assert "affine m = 6" in out
    assert "exists_nonzero = False" in out
    assert "inequality1: forced_zero = True" in out
    assert "hasse-weil: N = 8 vs window [8, 8]" in out
    assert "paper_flags: none" in out


def test_analyze_json_stdout_and_file(tmp_path, capsys):
    path = write_curve(tmp_path, HYPERBOLA_F7)
    assert main(["analyze", "--curve", path, "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["field"] == {"p": 7, "k": 1, "modulus": [0, 1]}
    assert doc["curve"]["degree"] == 2
    assert doc["points"]["affine_count"] == 6
    assert doc["points"]["infinity_count"] == 2
    assert doc["decision"]["exists_nonzero"] is False
    assert doc["decision"]["witness_map_coeffs"] is None
    assert doc["bounds"]["inequality1"]["forced_zero"] is True
    assert doc["paper_flags"] == []

    out_file = tmp_path / "report.json"
    assert main(["analyze", "--curve", path, "--json", str(out_file)]) == 0
    capsys.readouterr()
    on_disk = out_file.read_text()
    assert json.loads(on_disk) == doc
    # canonical form: re-serialization is byte identical
    canon = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    assert on_disk == canon


def test_analyze_json_flag_fields(tmp_path, capsys):
    path = write_curve(tmp_path, QUAD_F3)
    assert main(["analyze", "--curve", path, "--json", "-"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["points"]["affine_count"] == 5
    assert doc["points"]["singular_found"] == [[1, 1]]
    assert doc["hw"]["window_check"] == "violates-window"
    assert doc["curve"]["assertions"] == {
        "assert_smooth": False,
        "assert_abs_irreducible": False,
    }
    assert len(doc["paper_flags"]) == 8
    assert doc["paper_flags"] == sorted(doc["paper_flags"])
    assert doc["decision"]["exists_nonzero"] is False
    assert doc["bounds"]["by_count"]["forced_zero"] is True
    assert doc["bounds"]["by_count"]["lower_bound"] == "5/2"


def test_analyze_witness_serialization(tmp_path, capsys):
    # vacuous curve: no points, so a witness must exist and be encoded
    path = write_curve(tmp_path, "p = 3\nk = 1\nf = x^2 + 1\n")
    assert main(["analyze", "--curve", path, "--json", "-"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["decision"]["exists_nonzero"] is True
    assert doc["decision"]["witness_map_coeffs"] is not None
    assert any(c != 0 for c in doc["decision"]["witness_map_coeffs"])
    assert doc["decision"]["witness_kernel_basis"] is not None


def test_analyze_missing_file(capsys):
    rc = main(["analyze", "--curve", "/nonexistent/nope.curve"])
    assert rc == 2
    assert "error" in capsys.readouterr().err


def test_analyze_parse_error_exit_1(tmp_path, capsys):
    path = write_curve(tmp_path, "p = 5\nk = 1\nf = y^^2\n")
    assert main(["analyze", "--curve", path]) == 1
    assert "error" in capsys.readouterr().err


def test_analyze_inconsistent_exit_3(tmp_path, capsys):
    path = write_curve(tmp_path, "p = 5\nk = 1\nf = y\n")
    assert main(["analyze", "--curve", path]) == 3
    assert "INCONSISTENT" in capsys.readouterr().err


def test_analyze_cap_exit_2(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("CURVADD_CAP", "3")
    path = write_curve(tmp_path, HYPERBOLA_F7)
    assert main(["analyze", "--curve", path]) == 2
    assert "cap" in capsys.readouterr().err.lower()


def test_bound_subcommand(capsys):
    assert main(["bound", "--p", "7", "--k", "1", "--d", "2"]) == 0
    out = capsys.readouterr().out
    assert "forced_zero = True" in out
    assert "A_squared = 4" in out
    assert main(["bound", "--p", "5", "--k", "1", "--class", "conic"]) == 0
    out = capsys.readouterr().out
    assert "forced_zero = False" in out
    assert "claimed by the statement-level case split: True" in out
    assert main(["bound", "--p", "11", "--k", "2", "--class", "elliptic"]) == 0
    assert "forced_zero = True" in capsys.readouterr().out


def test_bound_validation(capsys):
    assert main(["bound", "--p", "4", "--k", "1", "--d", "2"]) == 2
    # neither or both of --d / --class
    assert main(["bound", "--p", "7", "--k", "1"]) == 2
    assert main(["bound", "--p", "7", "--k", "1", "--d", "2",
                 "--class", "conic"]) == 2
    err = capsys.readouterr().err
    assert "exactly one of --d or --class" in err


def test_search_subcommand(tmp_path, capsys):
    path = write_curve(tmp_path, HYPERBOLA_F7)
    assert main(["search", "--curve", path]) == 0
    out = capsys.readouterr().out
    assert "exists_nonzero = False" in out
    assert "hyperplane-search" in out and "exhaustive-oracle" in out
    assert main(["search", "--curve", path, "--mode", "hyperplane"]) == 0
    out = capsys.readouterr().out
    assert "exhaustive-oracle" not in out


def test_search_witness_printed(tmp_path, capsys):
    path = write_curve(tmp_path, "p = 3\nk = 1\nf = x^2 + 1\n")
    assert main(["search", "--curve", path]) == 0
    out = capsys.readouterr().out
    assert "exists_nonzero = True" in out
    assert "witness" in out


def test_valuation_demo(capsys):
    assert main(["valuation", "--demo"]) == 0
    out = capsys.readouterr().out
    assert "machine-checked" in out
    assert "v(t) = -1" in out
    assert "h(x) * h(1/x) = 0" in out


def test_valuation_check_axioms(capsys):
    assert main(["valuation", "--check-axioms", "25", "--seed", "9"]) == 0
    out = capsys.readouterr().out
    assert "25 samples per domain, seed 9" in out
    assert "all passed" in out
    assert out.count(": ok") == 6


def test_valuation_ext2(capsys):
    rc = main(["valuation", "--ext2", "1,0,1", "0,1,1", "--samples", "10"])
    assert rc == 0
    out = capsys.readouterr().out
    assert "h(P(s)) * h(Q(1/s)) = 0" in out
    assert "10" in out
    rc = main(["valuation", "--ext2", "1,0,1", "0,1,1", "--samples", "10",
               "--char", "3"])
    assert rc == 0
    assert "F_3(t)" in capsys.readouterr().out


def test_valuation_ext2_bad_char(capsys):
    rc = main(["valuation", "--ext2", "1,0,1", "0,1,1", "--char", "4"])
    assert rc == 2
    capsys.readouterr()


def test_valuation_padic(capsys):
    assert main(["valuation", "--padic", "5/8", "2"]) == 0
    assert "-3" in capsys.readouterr().out
    assert main(["valuation", "--padic", "5/8", "6"]) == 2
    capsys.readouterr()


def test_verify_paper(capsys):
    assert main(["verify-paper"]) == 0
    out = capsys.readouterr().out
    assert out.count("MISMATCH") == 5
    assert out.count("MATCH") > out.count("MISMATCH")
    findings = [ln for ln in out.splitlines() if ln.startswith("  - ")]
    assert len(findings) == 13
    assert "13 finding(s); exit 0" in out
    assert "claimed by paper, not certified by its inequality" in out
    # the hyperbola row block covers several fields
    assert "F_3^2" in out


def test_entry_point_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "curvadd", "bound", "--p", "7", "--k", "3",
         "--class", "elliptic"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert "forced_zero = True" in proc.stdout


def test_no_subcommand_usage(capsys):
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2
    capsys.readouterr()
