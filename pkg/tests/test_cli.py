import json
import os
import subprocess
import sys
from pathlib import Path

from kfiblike import cli

REPO_ROOT = Path(__file__).resolve().parents[1]
SRC_DIR = REPO_ROOT / "src"


def run_cli(capsys, argv):
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_subprocess(argv):
    env = dict(os.environ)
    env["PYTHONPATH"] = str(SRC_DIR) + os.pathsep + env.get("PYTHONPATH", "")
    return subprocess.run(
        [sys.executable, "-m", "kfiblike", *argv],
        capture_output=True,
        env=env,
        cwd=REPO_ROOT,
    )


def test_gen_modified_plain(capsys):
    code, out, _ = run_cli(capsys, ["gen", "modified", "--k", "2", "--count", "4"])
    assert code == 0
    assert out == "2,2,6,14\n"


def test_gen_bfile_format(capsys):
    code, out, _ = run_cli(
        capsys, ["gen", "modified", "--k", "1", "--count", "2", "--format", "bfile"]
    )
    assert code == 0
    assert out == "0 2\n1 2\n"


def test_gen_kfib(capsys):
    code, out, _ = run_cli(capsys, ["gen", "kfib", "--k", "1", "--count", "5"])
    assert code == 0
    assert out == "0,1,1,2,3\n"


def test_gen_fast_identical_output(capsys):
    _, slow, _ = run_cli(capsys, ["gen", "modified", "--k", "3", "--count", "20"])
    _, fast, _ = run_cli(
        capsys, ["gen", "modified", "--k", "3", "--count", "20", "--fast"]
    )
    assert slow == fast


def test_gen_rejects_bad_k():
    proc = run_subprocess(["gen", "modified", "--k", "0", "--count", "3"])
    assert proc.returncode == 2
    assert b"--k must be >= 1" in proc.stderr


def test_usage_error_exit_code():
    proc = run_subprocess(["gen", "nosuchfamily", "--k", "1", "--count", "1"])
    assert proc.returncode == 2


def test_transform_tables(capsys):
    code, out, _ = run_cli(capsys, ["transform", "falling", "--k", "4", "--count", "6"])
    assert code == 0
    assert out == "2,10,58,386,2834,22042\n"
    code, out, _ = run_cli(capsys, ["transform", "binomial", "--k", "5", "--count", "6"])
    assert out == "2,4,18,106,652,4034\n"


def test_transform_methods_agree(capsys):
    _, direct, _ = run_cli(
        capsys,
        ["transform", "rising", "--k", "3", "--count", "8", "--method", "direct"],
    )
    _, rec, _ = run_cli(
        capsys,
        ["transform", "rising", "--k", "3", "--count", "8", "--method", "recurrence"],
    )
    assert direct == rec


def test_transform_verify(capsys):
    code, out, err = run_cli(
        capsys, ["transform", "kbinomial", "--k", "2", "--count", "3", "--verify"]
    )
    assert code == 0
    assert out == "2,8,48\n"
    assert "agree on 3 terms" in err


def test_csv_and_jsonl_round_trip(capsys):
    _, out, _ = run_cli(
        capsys,
        ["transform", "binomial", "--k", "2", "--count", "4", "--format", "csv"],
    )
    lines = out.strip().split("\n")
    assert lines[0] == "n,value"
    assert [int(line.split(",")[1]) for line in lines[1:]] == [2, 4, 12, 40]
    _, out, _ = run_cli(
        capsys,
        ["transform", "binomial", "--k", "2", "--count", "4", "--format", "json-lines"],
    )
    recs = [json.loads(line) for line in out.strip().split("\n")]
    assert [int(r["value"]) for r in recs] == [2, 4, 12, 40]
    assert [r["index"] for r in recs] == [0, 1, 2, 3]


def test_bfile_round_trip(capsys):
    _, out, _ = run_cli(
        capsys, ["gen", "modified", "--k", "2", "--count", "8", "--format", "bfile"]
    )
    parsed = []
    for line in out.splitlines():
        n_text, v_text = line.split(" ")
        parsed.append((int(n_text), int(v_text)))
    assert parsed == list(enumerate([2, 2, 6, 14, 34, 82, 198, 478]))


def test_gf_symbolic_rendering(capsys):
    code, out, _ = run_cli(capsys, ["gf", "rising", "--symbolic"])
    assert code == 0
    assert out == "(2 - (2k^2-2k+2)x) / (1 - (k^2+2)x + x^2)\n"


def test_gf_numeric_with_expansion(capsys):
    code, out, _ = run_cli(capsys, ["gf", "binomial", "--k", "2", "--count", "6"])
    assert code == 0
    assert out == "(2 - 4x) / (1 - 4x + 2x^2)\n2,4,12,40,136,464\n"


def test_gf_requires_k_or_symbolic():
    proc = run_subprocess(["gf", "binomial"])
    assert proc.returncode == 2


def test_binet_exact(capsys):
    code, out, _ = run_cli(capsys, ["binet", "binomial", "--k", "2", "--n", "5", "--exact"])
    assert code == 0
    assert out == "464\n"


def test_binet_float(capsys):
    code, out, _ = run_cli(capsys, ["binet", "rising", "--k", "2", "--n", "5"])
    assert code == 0
    assert abs(float(out) - 6726) / 6726 <= 1e-9


def test_audit_exit_zero_and_formats(capsys):
    code, out, _ = run_cli(
        capsys, ["audit", "--k-max", "3", "--n-max", "16", "--format", "jsonl"]
    )
    assert code == 0
    recs = [json.loads(line) for line in out.strip().split("\n")]
    assert len(recs) == 26
    verdicts = {r["id"]: r["verdict"] for r in recs}
    assert verdicts["C01"] == "PASS"
    assert verdicts["C24"] == "INFO-DISCREPANCY"


def test_audit_text_uses_env_width_and_color(capsys, monkeypatch):
    monkeypatch.setenv("KFIBLIKE_WIDTH", "40")
    monkeypatch.setenv("KFIBLIKE_COLOR", "1")
    code, out, _ = run_cli(capsys, ["audit", "--k-max", "2", "--n-max", "8"])
    assert code == 0
    assert "=" * 40 in out
    assert "\x1b[32m" in out


def test_audit_byte_identical_runs():
    args = ["audit", "--k-max", "4", "--n-max", "24"]
    first = run_subprocess(args)
    second = run_subprocess(args)
    assert first.returncode == second.returncode == 0
    assert first.stdout == second.stdout


def test_bench_small(capsys):
    code, out, _ = run_cli(capsys, ["bench", "--k", "2", "--n", "200", "--n", "400"])
    assert code == 0
    for name in ("iterative", "matrix-power", "direct-sum"):
        assert name in out
    assert "values agree across all strategies that ran" in out


def test_bench_direct_cap(capsys):
    code, out, _ = run_cli(
        capsys, ["bench", "--k", "2", "--n", "300", "--direct-cap", "100"]
    )
    assert code == 0
    assert "skipped (n > direct cap 100)" in out


def test_bench_reports_mismatch_as_failure(capsys, monkeypatch):
    from kfiblike import cli as cli_mod

    monkeypatch.setattr(cli_mod, "term_fast", lambda rec, n: -1)
    code, out, _ = run_cli(capsys, ["bench", "--k", "2", "--n", "50"])
    assert code == 1
    assert "VALUE MISMATCH" in out


def test_large_value_prints_full_decimal(capsys):
    # values beyond CPython's default int-to-str guard must still print
    code, out, _ = run_cli(capsys, ["binet", "rising", "--k", "10", "--n", "2200", "--exact"])
    assert code == 0
    value = out.strip()
    assert len(value) > 4300
    assert value.isdigit()
