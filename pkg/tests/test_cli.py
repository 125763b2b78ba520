import json
import subprocess
import sys

import pytest

from zetamono import bundled_zeros_path
from zetamono.cli import main, parse_range


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_eval_zeta_two(capsys):
    code, out, _ = run(capsys, "eval", "zeta", "2", "0")
    assert code == 0 and "1.6449340668" in out
    err = float(out.split("err_bound = ")[1].split()[0])
    assert err <= 1e-12


def test_eval_eta_one(capsys):
    code, out, _ = run(capsys, "eval", "eta", "1", "0")
    assert code == 0 and "0.6931471805" in out


def test_eval_pole(capsys):
    code, _, err = run(capsys, "eval", "zeta", "1", "0")
    assert code == 2 and "PoleError" in err


def test_eval_logderiv_highlights_real_part(capsys):
    code, out, _ = run(capsys, "eval", "logderiv-zeta", "-3", "10")
    assert code == 0 and ">>> Re = -0.4889" in out


def test_eval_logderiv_at_zero(capsys):
    code, _, err = run(capsys, "eval", "logderiv-zeta", "0.5", "14.134725141734693")
    assert code == 2 and "ZeroOfFunctionError" in err


@pytest.mark.parametrize("name", ["gamma", "digamma", "xi", "logderiv-eta", "logderiv-xi"])
def test_eval_other_functions(capsys, name):
    assert run(capsys, "eval", name, "0.3", "2")[0] == 0


def test_scan_left_region(capsys, tmp_path):
    out_csv = tmp_path / "scan.csv"
    code, out, _ = run(capsys, "scan", "zeta", "--sigma", "-15:0:0.1", "--t", "8:100:0.25", "--expect", "-1", "--out", str(out_csv))
    assert code == 0 and "0 violations" in out
    raw = out_csv.read_bytes()
    assert b"\r" not in raw
    lines = raw.decode().splitlines()
    assert lines[0] == "sigma,t,re_logderiv,sign,flagged"
    assert lines[1].startswith("-15.0,8.0,")
    assert len(lines) == 1 + 151 * 369


def test_scan_right_of_half_exit_3(capsys, tmp_path):
    code, out, _ = run(capsys, "scan", "zeta", "--sigma", "0.51:5:0.05", "--t", "8:50:0.25", "--expect", "-1")
    assert code == 3 and "worst margin" in out and "sigma=" in out


def test_scan_xi_right(capsys):
    code, _, _ = run(capsys, "scan", "xi", "--sigma", "1:10:0.1", "--t", "0:50:0.25", "--expect", "+1")
    assert code == 0


def test_scan_csv_is_byte_stable(capsys, tmp_path):
    paths = [tmp_path / "a.csv", tmp_path / "b.csv"]
    for p in paths:
        run(capsys, "scan", "eta", "--sigma", "-2:0:0.25", "--t", "8:12:0.5", "--expect", "-1", "--out", str(p))
    assert paths[0].read_bytes() == paths[1].read_bytes()


def test_verify_digamma_floor_claim(capsys, tmp_path):
    js = tmp_path / "r.json"
    code, _, _ = run(capsys, "verify", "lemma_3_2_v", "--json", str(js))
    doc = json.loads(js.read_text())
    assert code == 0 and doc["schema"] == 1
    (rec,) = doc["records"]
    assert set(rec) == {"claim_id", "passed", "worst_margin", "witness", "runtime_ms"}
    assert rec["worst_margin"] > 0 and set(rec["witness"]) == {"sigma", "t"}


def test_verify_hadamard_needs_zeros(capsys):
    code, _, err = run(capsys, "verify", "hadamard_consistency")
    assert code == 2 and "zeros" in err


def test_verify_missing_zeros_file(capsys, tmp_path):
    code, _, _ = run(capsys, "verify", "hadamard_consistency", "--zeros", str(tmp_path / "none.txt"))
    assert code == 2


def test_verify_unknown_claim(capsys):
    assert run(capsys, "verify", "bogus_id")[0] == 2


def test_verify_json_deterministic(capsys, tmp_path):
    paths = [tmp_path / "a.json", tmp_path / "b.json"]
    for p in paths:
        run(capsys, "verify", "known_values", "lemma_3_1", "hadamard_consistency", "--zeros", str(bundled_zeros_path()), "--json", str(p), "--deterministic")
    assert paths[0].read_bytes() == paths[1].read_bytes()


def test_verify_all(capsys, tmp_path):
    # Exits 4 while threshold_eta and xi_gap_floor fail (see their tests).
    js = tmp_path / "all.json"
    code, out, _ = run(capsys, "verify", "all", "--zeros", str(bundled_zeros_path()), "--json", str(js))
    records = json.loads(js.read_text())["records"]
    assert len(records) >= 12
    failed = [r["claim_id"] for r in records if not r["passed"]]
    assert code == 0, f"failed claims: {failed}"


def test_threshold_zeta(capsys):
    code, out, _ = run(capsys, "threshold", "zeta", "--bracket", "6:7", "--tol", "0.001")
    t_star = float(out.split("t* = ")[1].split()[0])
    assert code == 0 and 6.2797 <= t_star <= 6.2997
    assert "witness sigma" in out and "6.2897" in out


def test_threshold_eta(capsys):
    code, out, err = run(capsys, "threshold", "eta", "--bracket", "6:7", "--tol", "0.001")
    assert code == 0, err
    assert abs(float(out.split("t* = ")[1].split()[0]) - 6.2897) <= 0.05


def test_threshold_bracket_error(capsys):
    code, _, err = run(capsys, "threshold", "zeta", "--bracket", "20:30")
    assert code == 5 and "BracketError" in err


def test_parse_range():
    assert parse_range("-15:0:0.1") == (-15.0, 0.0, 0.1)
    assert parse_range("6:7", need_step=False) == (6.0, 7.0)
    for bad in ("1:0:0.1", "0:1", "a:b:c", "0:1:-1"):
        with pytest.raises(Exception):
            parse_range(bad)


def test_bad_range_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["scan", "zeta", "--sigma", "1:0:0.1", "--t", "8:9:1", "--expect", "-1"])
    assert exc.value.code == 2


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "zetamono", "eval", "zeta", "0", "0"], capture_output=True, text=True)
    assert r.returncode == 0 and "-0.5" in r.stdout
