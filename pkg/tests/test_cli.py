from __future__ import annotations

import csv
import io
import json
import os
import subprocess
import sys

import pytest

from cangeo import cli

RUN = [sys.executable, "-m", "cangeo"]


def run_cli(*argv, env_extra=None):
    env = dict(os.environ)
    env.pop("CANGEO_SEED", None)
    if env_extra:
        env.update(env_extra)
    return subprocess.run(RUN + list(argv), capture_output=True, env=env)


def run_main(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


# --- classify -------------------------------------------------------------

def test_classify_degree1_pair(capsys):
    code, out, _ = run_main(capsys, "classify", "4", "9")
    assert code == 0
    assert "degree1" in out
    assert "mu                42" in out
    assert "mu2               39" in out


def test_classify_json_fields(capsys):
    code, out, _ = run_main(capsys, "classify", "3", "6", "--format", "json")
    assert code == 0
    rec = json.loads(out)
    assert rec["deformation"] == "degree1"
    assert rec["p_g"] == 4 and rec["chi"] == 5 and rec["c1sq"] == 6
    assert rec["slope"] == "1/9"
    assert rec["rule"] == "listed degree-1 pair"


def test_classify_no_cover_has_null_invariants(capsys):
    code, out, _ = run_main(capsys, "classify", "2", "2", "--format", "json")
    assert code == 0
    rec = json.loads(out)
    assert rec["very_ample"] == "no"
    assert rec["deformation"] == "not_applicable"
    assert rec["p_g"] is None and rec["mu"] is None


def test_classify_open_case_with_oracle(capsys):
    code, out, _ = run_main(capsys, "classify", "5", "12", "--oracle",
                            "--format", "json")
    assert code == 0
    rec = json.loads(out)
    assert rec["alpha_surjective"] == "unknown"
    assert rec["alpha_rank"] == rec["alpha_dim_target"]
    assert rec["oracle_flag"] is None


def test_classify_oracle_agreement(capsys):
    code, out, _ = run_main(capsys, "classify", "3", "5", "--oracle",
                            "--format", "json")
    assert code == 0
    assert json.loads(out)["oracle_flag"] == "MATCH"


def test_classify_rejects_bad_pair():
    proc = run_cli("classify", "1", "5")
    assert proc.returncode == 2
    proc = run_cli("classify", "3", "0")
    assert proc.returncode == 2


# --- table ----------------------------------------------------------------

def test_table_csv_shape_and_dialect():
    proc = run_cli("table", "--d", "3..5", "--s", "5..14", "--format", "csv")
    assert proc.returncode == 0
    raw = proc.stdout.decode()
    assert "\r\n" in raw
    rows = list(csv.DictReader(io.StringIO(raw)))
    assert len(rows) == 30
    by_pair = {(r["d"], r["s"]): r for r in rows}
    assert by_pair[("4", "9")]["mu"] == "42"
    assert by_pair[("4", "9")]["slope"] == "1/5"
    assert by_pair[("3", "7")]["deformation"] == "not_applicable"
    assert by_pair[("3", "7")]["p_g"] == ""


def test_table_sorted_by_pair():
    proc = run_cli("table", "--d", "4..5", "--s", "2..3", "--format", "json")
    recs = json.loads(proc.stdout)
    assert [(r["d"], r["s"]) for r in recs] == [(4, 2), (4, 3), (5, 2), (5, 3)]


def test_table_single_degree2_row(capsys):
    code, out, _ = run_main(capsys, "table", "--d", "2..2", "--s", "1..1",
                            "--format", "json")
    assert code == 0
    recs = json.loads(out)
    assert len(recs) == 1 and recs[0]["deformation"] == "degree2_always"


# --- oracle ---------------------------------------------------------------

def test_oracle_h0_reference(capsys):
    code, out, _ = run_main(capsys, "oracle", "h0", "--k", "16", "--r", "4",
                            "--s", "14", "--format", "json")
    assert code == 0
    rec = json.loads(out)
    assert rec["measured"] == 13 and rec["expected"] == 13
    assert rec["flag"] == "MATCH"


def test_oracle_alpha_reference(capsys):
    code, out, _ = run_main(capsys, "oracle", "alpha", "--d", "3", "--s", "5",
                            "--format", "json")
    assert code == 0
    rec = json.loads(out)
    assert rec["rank"] == 3 and rec["coker"] == 2
    assert rec["flag"] == "MATCH"


def test_oracle_h1_without_prediction(capsys):
    code, out, _ = run_main(capsys, "oracle", "h1", "--k", "11", "--r", "4",
                            "--s", "5", "--format", "json")
    assert code == 0
    rec = json.loads(out)
    assert rec["expected"] is None and rec["flag"] is None


def test_oracle_special_system_reports_defect(capsys):
    code, out, _ = run_main(capsys, "oracle", "h0", "--k", "2", "--r", "2",
                            "--s", "2", "--format", "json")
    assert code == 0
    rec = json.loads(out)
    assert rec["measured"] == 1 and rec["virtual"] == 0 and rec["defect"] == 1
    assert rec["flag"] is None


def test_oracle_mismatch_exits_3(capsys, monkeypatch):
    # force a wrong prediction to exercise the failure path end to end
    monkeypatch.setitem(cli.CURATED_H0, (2, 2, 2), 0)
    code, out, _ = run_main(capsys, "oracle", "h0", "--k", "2", "--r", "2",
                            "--s", "2", "--format", "json")
    assert code == 3
    assert json.loads(out)["flag"] == "MISMATCH"


def test_oracle_missing_params_exit_2():
    assert run_cli("oracle", "h0", "--s", "5").returncode == 2
    assert run_cli("oracle", "alpha", "--s", "5").returncode == 2


# --- xi and geography -----------------------------------------------------

def test_xi_m4_points():
    proc = run_cli("xi", "--m", "4", "--dmax", "10", "--format", "json")
    assert proc.returncode == 0
    recs = json.loads(proc.stdout)
    assert [(r["x_prime"], r["y"]) for r in recs] == [
        (9, 20), (15, 38), (23, 62), (33, 92)]
    assert recs[0]["scroll_witness"] == {"r": 6, "l": 0, "a": 1, "b": 1, "c": 1}
    assert all(r["certified"] for r in recs)


def test_xi_empty_line_emits_empty_array():
    proc = run_cli("xi", "--m", "17", "--dmax", "100", "--format", "json")
    assert proc.returncode == 0
    assert json.loads(proc.stdout) == []


def test_xi_unwitnessed_goes_to_stderr_only():
    proc = run_cli("xi", "--m", "7", "--dmax", "10", "--format", "json")
    assert proc.returncode == 0
    assert json.loads(proc.stdout) == []
    err = proc.stderr.decode()
    assert "d=6" in err and "no admissible scroll" in err


def test_xi_uncertified_window_labeled():
    proc = run_cli("xi", "--m", "20", "--dmax", "60", "--format", "json")
    assert proc.returncode == 0
    assert "certified" in proc.stderr.decode()
    for rec in json.loads(proc.stdout):
        assert rec["certified"] is False


def test_geography_intervals_and_points():
    proc = run_cli("geography", "--d", "2..6", "--format", "json")
    recs = json.loads(proc.stdout)
    lines = {r["d"]: (r["x_min"], r["x_max"]) for r in recs if r["kind"] == "line"}
    assert lines == {2: (6, 6), 3: (5, 10), 4: (6, 15), 5: (8, 21), 6: (13, 28)}
    points = [r for r in recs if r["kind"] == "point"]
    assert {"d": 3, "s": 6, "chi": 5, "c1sq": 6} \
        == {k: next(p[k] for p in points if p["d"] == 3 and p["s"] == 6)
            for k in ("d", "s", "chi", "c1sq")}
    tags = {p["deformation"] for p in points}
    assert "degree1" in tags and "degree2_always" in tags


# --- run configuration ----------------------------------------------------

def test_seed_priority_flag_beats_env():
    env = {"CANGEO_SEED": "42"}
    with_env = run_cli("oracle", "h0", "--k", "6", "--r", "1", "--s", "3",
                       "--format", "json", env_extra=env)
    assert json.loads(with_env.stdout)["seed"] == 42
    with_flag = run_cli("oracle", "h0", "--k", "6", "--r", "1", "--s", "3",
                        "--seed", "0x10", "--format", "json", env_extra=env)
    assert json.loads(with_flag.stdout)["seed"] == 16


def test_global_flags_accepted_before_subcommand(capsys):
    code, out, _ = run_main(capsys, "--format", "json", "--seed", "5",
                            "oracle", "h0", "--k", "6", "--r", "1", "--s", "3")
    assert code == 0
    assert json.loads(out)["seed"] == 5


def test_bad_env_seed_exits_2():
    proc = run_cli("classify", "3", "5", env_extra={"CANGEO_SEED": "pony"})
    assert proc.returncode == 2


def test_prime_validation():
    # not prime
    assert run_cli("oracle", "h0", "--k", "4", "--r", "1", "--s", "2",
                   "--prime", "2147483646").returncode == 2
    # prime but at or below the 10^6 floor
    assert run_cli("oracle", "h0", "--k", "4", "--r", "1", "--s", "2",
                   "--prime", "999983").returncode == 2
    ok = run_cli("oracle", "h0", "--k", "4", "--r", "1", "--s", "2",
                 "--prime", "1000003")
    assert ok.returncode == 0


def test_trials_validation():
    assert run_cli("oracle", "h0", "--k", "4", "--r", "1", "--s", "2",
                   "--trials", "0").returncode == 2


def test_output_is_deterministic():
    a = run_cli("table", "--d", "3..5", "--s", "1..14", "--format", "csv")
    b = run_cli("table", "--d", "3..5", "--s", "1..14", "--format", "csv")
    assert a.stdout == b.stdout
    a = run_cli("oracle", "h0", "--k", "12", "--r", "3", "--s", "14",
                "--format", "json")
    b = run_cli("oracle", "h0", "--k", "12", "--r", "3", "--s", "14",
                "--format", "json")
    assert a.stdout == b.stdout


def test_json_round_trips(capsys):
    for argv in (["classify", "4", "8"], ["xi", "--m", "4", "--dmax", "10"],
                 ["geography", "--d", "2..4"]):
        code, out, _ = run_main(capsys, *argv, "--format", "json")
        assert code == 0
        assert json.dumps(json.loads(out), indent=2, sort_keys=True) + "\n" == out


def test_table_format_aligns_columns(capsys):
    code, out, _ = run_main(capsys, "table", "--d", "3..3", "--s", "5..6")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("d")
    assert len(lines) == 3
