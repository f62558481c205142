import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from degenpoly import cli, harness
from degenpoly.algebra import parse_poly

GOLDEN = Path(__file__).parent / "golden"


def run(*argv):
    out = io.StringIO()
    code = cli.main(list(argv), out=out)
    return code, out.getvalue()


def records(text):
    return [json.loads(line) for line in text.splitlines()]


def test_table_symbolic():
    code, out = run("table", "--family", "s1", "--nmax", "2")
    assert code == 0
    rec = {(r["n"], r["k"]): r["value"] for r in records(out)}
    assert rec[2, 1] == "λ - 1"
    assert parse_poly(rec[2, 1]).to_lambda().coeffs == (-1, 1)


def test_table_evaluated():
    code, out = run("table", "--family", "s2", "--nmax", "2", "--lambda", "0")
    assert code == 0
    assert {(r["n"], r["k"]): r["value"] for r in records(out)}[2, 1] == "1"
    _, out = run("table", "--family", "s1", "--nmax", "3", "--lambda", "1")
    for r in records(out):
        assert r["value"] == ("1" if r["n"] == r["k"] else "0")


def test_csv_and_json_carry_same_values():
    _, js = run("table", "--family", "j2", "--nmax", "4")
    _, cs = run("table", "--family", "j2", "--nmax", "4", "--format", "csv")
    lines = cs.splitlines()
    assert lines[0] == "family,n,k,value"
    assert [line.split(",")[-1] for line in lines[1:]] == [r["value"] for r in records(js)]


@pytest.mark.parametrize(
    "argv, n, expected",
    [
        (("poly", "--family", "euler2", "--order", "1", "--nmax", "2"), 2, "x^2 - λ*x - 1"),
        (("poly", "--family", "changhee2", "--order", "1", "--nmax", "2"), 2, "x^2 - x - 1"),
        (("poly", "--family", "harmonic-poly", "--order", "1", "--nmax", "0"), 0, "0"),
        (("poly", "--family", "bell", "--nmax", "1"), 1, "x"),
        (("poly", "--family", "euler", "--order", "1", "--nmax", "1"), 1, "x - 1/2"),
        (("poly", "--family", "harmonic-poly", "--order", "1", "--nmax", "2", "--route", "explicit"), 2, "-x - λ + 2"),
    ],
)
def test_poly(argv, n, expected):
    code, out = run(*argv)
    assert code == 0
    assert records(out)[n]["value"] == expected


def test_poly_evaluated():
    _, out = run("poly", "--family", "euler2", "--order", "1", "--nmax", "2", "--x", "2", "--lambda", "1/2")
    assert records(out)[2]["value"] == "2"


@pytest.mark.parametrize(
    "argv",
    [
        ("poly", "--family", "euler2", "--order", "0"),
        ("poly", "--family", "bell", "--order", "2"),
        ("poly", "--family", "euler2", "--route", "ogf"),
        ("poly", "--family", "nope"),
        ("table", "--family", "s1", "--nmax", "-1"),
        ("table", "--family", "s1", "--lambda", "0.5"),
        ("series", "--name", "nope", "--order", "2"),
        ("verify", "--ids", "no-such-id"),
        (),
    ],
)
def test_usage_errors_exit_2(argv):
    assert run(*argv)[0] == 2


@pytest.mark.parametrize(
    "argv, expected",
    [
        (("series", "--name", "sech", "--order", "2"), ["1", "0", "-1/2"]),
        (("series", "--name", "log", "--order", "2"), ["0", "1", "1/2*λ - 1/2"]),
        (("series", "--name", "exp", "--order", "1", "--x", "1", "--lambda", "0"), ["1", "1"]),
        (("series", "--name", "harmonic-ogf", "--order", "2"), ["0", "1", "-1/2*λ + 3/2"]),
        (("series", "--name", "genharmonic-ogf", "--order", "1", "--r", "1"), ["1", "-λ + 2"]),
        (("series", "--name", "harmonic-ogf", "--order", "2", "--r", "1"), ["0", "1", "-x - λ + 2"]),
    ],
)
def test_series(argv, expected):
    code, out = run(*argv)
    assert code == 0
    assert [r["value"] for r in records(out)] == expected


def test_verify_passes():
    code, out = run("verify", "--nmax", "8", "--rmax", "3")
    assert code == 0
    recs = records(out)
    assert [r["id"] for r in recs] == list(harness.CHECKS)
    assert all(r["status"] == "pass" for r in recs)


def test_verify_filter_trivial():
    code, out = run("verify", "--ids", "orthogonality", "--nmax", "0")
    assert code == 0
    assert records(out)[0]["status"] == "pass"


def test_verify_csv():
    code, out = run("verify", "--ids", "orthogonality,inversion", "--nmax", "3", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "id,status,cases,ranges,counterexample"
    assert len(lines) == 3


def test_verify_failure_exits_1(monkeypatch):
    def broken(nmax, rmax, seed):
        s1 = harness.stirling1_deg(4)
        return harness.check_orthogonality(4, s1=s1.with_entry(3, 1, s1[3, 1] + 1))

    monkeypatch.setitem(harness.CHECKS, "orthogonality", broken)
    code, out = run("verify", "--ids", "orthogonality")
    assert code == 1
    assert records(out)[0]["status"] == "fail"


def test_golden_table_is_byte_stable():
    argv = [sys.executable, "-m", "degenpoly", "table", "--family", "s1", "--nmax", "4"]
    first = subprocess.run(argv, capture_output=True, check=True).stdout
    second = subprocess.run(argv, capture_output=True, check=True).stdout
    assert first == second
    assert first == (GOLDEN / "table_s1_nmax4.jsonl").read_bytes()
