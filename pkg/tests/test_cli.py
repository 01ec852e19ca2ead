"""End-to-end tests of the command-line interface."""

import json
import math

import pytest

from hardyconst.cli import main

HEADER = "n,kind,constant,thm_lower,thm_upper,lambda_min,m_used,iterations,tol"


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_compute_single_continuous(capsys):
    code, out, err = run_cli(capsys, "compute", "--kind", "continuous", "--n", "1")
    assert code == 0 and err == ""
    lines = out.strip().splitlines()
    assert lines[0] == HEADER
    fields = lines[1].split(",")
    assert fields[0] == "1" and fields[1] == "continuous"
    assert float(fields[2]) == pytest.approx(2.0, abs=1e-12)


def test_compute_single_discrete_trivial(capsys):
    code, out, _ = run_cli(capsys, "compute", "--kind", "discrete", "--n", "1")
    assert code == 0
    fields = out.strip().splitlines()[1].split(",")
    assert float(fields[2]) == pytest.approx(1.0, abs=1e-12)


def test_compute_discrete_two_dimensional(capsys):
    code, out, _ = run_cli(capsys, "compute", "--kind", "discrete", "--n", "2")
    assert code == 0
    constant = float(out.strip().splitlines()[1].split(",")[2])
    assert constant == pytest.approx((3 + math.sqrt(5)) / 4, abs=1e-9)
    assert f"{constant:.9f}".startswith("1.309016994")


def test_bounds_blank_below_discrete_threshold(capsys):
    _, out, _ = run_cli(capsys, "compute", "--kind", "discrete", "--start", "1", "--stop", "3")
    rows = [line.split(",") for line in out.strip().splitlines()[1:]]
    assert rows[0][3] == rows[0][4] == ""  # n = 1
    assert rows[1][3] == rows[1][4] == ""  # n = 2
    assert rows[2][3] != "" and rows[2][4] != ""  # n = 3 has both bounds


def test_compute_both_kinds_sorted(capsys):
    _, out, _ = run_cli(capsys, "compute", "--start", "3", "--stop", "4")
    keys = [tuple(line.split(",")[:2]) for line in out.strip().splitlines()[1:]]
    assert keys == [
        ("3", "continuous"),
        ("3", "discrete"),
        ("4", "continuous"),
        ("4", "discrete"),
    ]


def test_geometric_grid(capsys):
    _, out, _ = run_cli(
        capsys,
        "compute", "--kind", "discrete", "--start", "1", "--stop", "8",
        "--grid", "geometric", "--ratio", "2",
    )
    ns = [line.split(",")[0] for line in out.strip().splitlines()[1:]]
    assert ns == ["1", "2", "4", "8"]


def test_json_mirrors_csv_columns(capsys):
    _, out, _ = run_cli(capsys, "compute", "--kind", "discrete", "--n", "2", "--format", "json")
    payload = json.loads(out)
    assert isinstance(payload, list) and len(payload) == 1
    row = payload[0]
    assert list(row.keys()) == HEADER.split(",")
    assert row["thm_lower"] is None and row["thm_upper"] is None
    assert row["constant"] == pytest.approx((3 + math.sqrt(5)) / 4, abs=1e-9)


def test_threaded_output_is_identical(capsys):
    args = ["compute", "--start", "2", "--stop", "9", "--kind", "both"]
    _, single, _ = run_cli(capsys, *args)
    _, threaded, _ = run_cli(capsys, *args, "--threads", "4")
    assert single == threaded


def test_output_is_byte_stable(capsys):
    args = ["compute", "--start", "5", "--stop", "7", "--kind", "continuous"]
    _, first, _ = run_cli(capsys, *args)
    _, second, _ = run_cli(capsys, *args)
    assert first == second


def test_out_writes_file(tmp_path, capsys):
    target = tmp_path / "table.csv"
    code, out, _ = run_cli(capsys, "compute", "--n", "4", "--out", str(target))
    assert code == 0 and out == ""
    content = target.read_text(encoding="utf-8")
    assert content.startswith(HEADER)
    assert len(content.strip().splitlines()) == 3


# ---------------------------------------------------------------------------
# exact


@pytest.mark.parametrize(
    "args,expected",
    [
        (("--what", "detD", "--m", "2"), "9/4"),
        (("--what", "u", "--k", "1"), "26/9"),
        (("--what", "y", "--k", "2"), "10/9"),
        (("--what", "q1", "--m", "0"), "0/1"),
        (("--what", "detG", "--m", "3"), "6/1"),
        (("--what", "delta", "--m", "2"), "389/4"),
    ],
)
def test_exact_single_values(capsys, args, expected):
    code, out, _ = run_cli(capsys, "exact", *args)
    assert code == 0
    rational, approx = out.strip().split("\t")
    assert rational == expected
    num, den = map(int, expected.split("/"))
    assert float(approx) == pytest.approx(num / den, rel=1e-15)


def test_exact_table(capsys):
    code, out, _ = run_cli(capsys, "exact", "--what", "y", "--upto", "3")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "index,exact,approx"
    assert lines[1].startswith("1,2/1,")
    assert lines[2].startswith("2,10/9,")
    assert lines[3].startswith("3,178/225,")


def test_exact_usage_errors(capsys):
    assert run_cli(capsys, "exact", "--what", "detD")[0] == 2
    assert run_cli(capsys, "exact", "--what", "detD", "--m", "1", "--upto", "5")[0] == 2
    assert run_cli(capsys, "exact", "--what", "detD", "--m", "0")[0] == 2
    assert run_cli(capsys, "exact", "--what", "nope", "--m", "1")[0] == 2


# ---------------------------------------------------------------------------
# verify


def test_verify_single_check(capsys):
    code, out, _ = run_cli(capsys, "verify", "--quick", "--only", "seed-values")
    assert code == 0
    assert "PASS seed-values" in out
    assert out.strip().splitlines()[-1] == "1/1 checks passed"


def test_verify_corruption_negative_control(capsys):
    code, out, _ = run_cli(
        capsys,
        "verify", "--quick",
        "--corrupt", "determinant-closed-form",
        "--only", "determinant-closed-form",
    )
    assert code == 1
    assert "FAIL determinant-closed-form" in out


def test_verify_structural_corruption(capsys):
    code, out, _ = run_cli(
        capsys,
        "verify", "--quick",
        "--corrupt", "matrix-structural-identities",
        "--only", "matrix-structural-identities",
    )
    assert code == 1
    assert "FAIL matrix-structural-identities" in out


def test_verify_list_checks(capsys):
    code, out, _ = run_cli(capsys, "verify", "--list-checks")
    assert code == 0
    names = out.strip().splitlines()
    assert "determinant-closed-form" in names
    assert "eigen-shift-identity" in names
    assert len(names) >= 20


def test_verify_max_m_controls_exact_scale(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--quick", "--max-m", "300", "--only", "determinant-closed-form"
    )
    assert code == 0
    assert "m <= 300" in out


def test_verify_rejects_unknown_corruption(capsys):
    assert run_cli(capsys, "verify", "--corrupt", "seed-values")[0] == 2


# ---------------------------------------------------------------------------
# asymptotics


def test_asymptotics_table(capsys):
    code, out, _ = run_cli(capsys, "asymptotics", "--start", "10", "--stop", "1000")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].split(",")[:3] == ["n", "gap_c", "gap_d"]
    rows = [line.split(",") for line in lines[1:]]
    assert [r[0] for r in rows] == ["10", "100", "1000"]
    gaps_c = [float(r[1]) for r in rows]
    assert all(b < a for a, b in zip(gaps_c, gaps_c[1:]))  # 4 - c_n decreasing
    assert all(len(r) == 9 for r in rows)
    assert all(math.isfinite(float(v)) for r in rows for v in r)


# ---------------------------------------------------------------------------
# usage errors


def test_usage_requires_n_or_range(capsys):
    assert run_cli(capsys, "compute")[0] == 2
    assert run_cli(capsys, "compute", "--n", "3", "--start", "1", "--stop", "5")[0] == 2


def test_usage_validates_numbers(capsys):
    assert run_cli(capsys, "compute", "--n", "0")[0] == 2
    assert run_cli(capsys, "compute", "--start", "5", "--stop", "2")[0] == 2
    assert run_cli(capsys, "compute", "--n", "2", "--tol", "0")[0] == 2
    assert run_cli(capsys, "compute", "--n", "2", "--tol", "-1")[0] == 2
    assert (
        run_cli(
            capsys,
            "compute", "--start", "1", "--stop", "9", "--grid", "geometric", "--ratio", "1.0",
        )[0]
        == 2
    )
    assert run_cli(capsys, "asymptotics", "--ratio", "0.5")[0] == 2


def test_no_command_is_usage_error(capsys):
    assert run_cli(capsys)[0] == 2
