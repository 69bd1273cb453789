import pytest

from hexsieve.cli import main


def test_primes_guard_limits(run_cli):
    code, out, _ = run_cli("primes", "--limit", "1")
    assert code == 0 and out == ""
    code, out, _ = run_cli("primes", "--limit", "2")
    assert code == 0 and out.strip() == "2"
    for lim in ("3", "4"):
        code, out, _ = run_cli("primes", "--limit", lim)
        assert code == 0 and out.strip() == "2, 3"


def test_primes_output_formats(run_cli):
    code, out, _ = run_cli("primes", "--limit", "30")
    assert code == 0
    assert out.strip() == "2, 3, 5, 7, 11, 13, 17, 19, 23, 29"
    code, out, _ = run_cli("primes", "--limit", "30", "--format", "csv")
    assert out.strip() == "2,3,5,7,11,13,17,19,23,29"


def test_primes_usage_errors(run_cli):
    with pytest.raises(SystemExit) as exc:
        main(["primes", "--limit", "abc"])
    assert exc.value.code == 2
    code, _, err = run_cli("primes", "--limit", "0")
    assert code == 2 and "must be >=" in err
    code, _, err = run_cli("primes", "--limit", str(2**32 + 1))
    assert code == 2 and "exceeds" in err


def test_trace_to_stdout_and_file(run_cli, tmp_path):
    code, out, _ = run_cli("trace", "--limit", "49")
    assert code == 0
    assert out.splitlines() == [
        "value,first_stage,multiplicity", "25,1,1", "35,1,2", "49,2,1"]
    target = tmp_path / "trace.csv"
    code, out, _ = run_cli("trace", "--limit", "49", "--out", str(target))
    assert code == 0 and out == ""
    assert target.read_text().splitlines()[1] == "25,1,1"
    code, _, err = run_cli("trace", "--limit", "4")
    assert code == 2


def test_trace_multiplicity_flags_single_appearance_values(run_cli):
    _, out, _ = run_cli("trace", "--limit", "508")
    rows = [line.split(",") for line in out.splitlines()[1:]]
    singles = {int(v) for v, _, m in rows if m == "1"}
    assert {25, 125} <= singles
    assert 35 not in singles


def test_element_verb(run_cli):
    code, out, _ = run_cli("element", "--row", "2", "--col", "3")
    assert code == 0
    assert out.strip() == "row=2 col=3 value=77 defining=True leading=False"
    code, _, err = run_cli("element", "--row", "0", "--col", "3")
    assert code == 2


def test_classify_verb(run_cli):
    code, out, _ = run_cli("classify", "--value", "35")
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "value=35 occurrences=2"
    assert lines[1] == "row=1 col=2 defining=False leading=False"
    assert lines[2] == "row=2 col=1 defining=False leading=False"
    code, out, _ = run_cli("classify", "--value", "23")
    assert out.strip() == "value=23 occurrences=0"
    code, out, _ = run_cli("classify", "--value", "25", "--max-row", "5")
    assert "row=1 col=1" in out


def test_count_verbs(run_cli):
    assert run_cli("count", "--pi", "5000")[1].strip() == "669"
    assert run_cli("count", "--pi-mt", "625")[1].strip() == "7"
    assert run_cli("count", "--pi", "4.9")[1].strip() == "2"
    code, _, _ = run_cli("count", "--pi", "-1")
    assert code == 2


def test_bounds_verb(run_cli):
    code, out, _ = run_cli("bounds", "--x", "289")
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "x,pi,pi_mt,lower,upper,r1,r2"
    assert lines[1].startswith("289,61,5,")
    code, _, err = run_cli("bounds", "--x", "288")
    assert code == 2 and "289" in err
    code, out, _ = run_cli("bounds", "--x", "300", "--constants", "chebyshev-generic")
    assert code == 0


def test_det_verb(run_cli):
    assert run_cli("det", "--row", "1", "--col", "1", "--size", "1")[1].strip() == "25"
    assert run_cli("det", "--row", "1", "--col", "1", "--size", "3")[1].strip() == "0"
    assert run_cli("det", "--row", "5", "--col", "9", "--size", "8")[1].strip() == "0"


def test_runs_verb(run_cli):
    code, out, _ = run_cli("runs", "--limit-col", "15")
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "start_col,m,det_zero,diag_ok"
    assert lines[1] == "2,6,true,true"
    assert lines[-1] == "12,4,,"
    code, _, _ = run_cli("runs", "--limit-col", "1")
    assert code == 2


def test_bench_verb(run_cli):
    code, out, _ = run_cli("bench", "--limits", "1000,10000")
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "n,crossings,wall_ms,wall_ms_baseline,ratio_nlnlnn"
    assert len(lines) == 3
    cells = lines[1].split(",")
    assert cells[0] == "1000" and cells[3] != ""
    code, out, _ = run_cli("bench", "--limits", "1000", "--baseline", "none")
    assert out.splitlines()[1].split(",")[3] == ""


def test_bench_usage(run_cli):
    code, _, err = run_cli("bench", "--limits", "5000,100")
    assert code == 2 and "ascending" in err
    code, _, err = run_cli("bench", "--limits", "x,y")
    assert code == 2


def test_verify_suites_pass(run_cli):
    code, out, _ = run_cli("verify", "--suite", "core", "--limit", "60")
    assert code == 0
    assert "FAIL" not in out
    assert "checks passed" in out
    code, out, _ = run_cli("verify", "--suite", "matrix", "--limit", "40")
    assert code == 0
    code, out, _ = run_cli("verify", "--suite", "sieve", "--limit", "600")
    assert code == 0
    code, out, _ = run_cli("verify", "--suite", "counting", "--limit", "200")
    assert code == 0


def test_verify_cap_exit(run_cli):
    code, _, err = run_cli("verify", "--suite", "core", "--limit", "100000")
    assert code == 2 and "capped" in err
    code, _, err = run_cli("verify", "--suite", "all", "--limit", "50")
    assert code == 2


def test_verify_failure_exit_code(run_cli, monkeypatch):
    import hexsieve.verify as verify_mod
    monkeypatch.setitem(verify_mod._SUITES, "core",
                        lambda limit: [("demo-check", False, "forced failure")])
    code, out, _ = run_cli("verify", "--suite", "core", "--limit", "10")
    assert code == 1
    assert "FAIL demo-check" in out
