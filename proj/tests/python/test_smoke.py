"""Smoke tests for the python module: known values, identity verdicts,
and schema validation of the CLI's JSON output."""

import json
import os
import subprocess
from fractions import Fraction

import pytest

import umbral


def test_combinatorics():
    assert umbral.binomial(5, 2) == 10
    assert umbral.binomial(3, 5) == 0
    assert umbral.multinomial([1, 1, 1]) == 6
    assert umbral.falling_factorial(4, 2) == 12
    assert umbral.factorial(20) == 2432902008176640000
    assert umbral.stirling2(4, 2) == 7


def test_polynomials():
    b = umbral.bernoulli_polynomial("2", 1)
    assert b.coefficients() == ["-1", "1"]
    assert str(b) == "x - 1"
    assert umbral.to_fractions(b) == [Fraction(-1), Fraction(1)]

    e = umbral.euler_polynomial("1", 2)
    assert umbral.to_fractions(e) == [Fraction(0), Fraction(-1), Fraction(1)]

    h = umbral.frobenius_euler_polynomial("1", 1, "-1")
    assert h == umbral.euler_polynomial("1", 1)
    assert h.evaluate("1/2").numerator == 0

    with pytest.raises(umbral.UmbralError):
        umbral.frobenius_euler_polynomial("1", 1, "1")


def test_rational():
    r = umbral.Rational("-22/4")
    assert str(r) == "-11/2"
    assert r.numerator == -11
    assert r.denominator == 2
    assert umbral.to_fraction(r) == Fraction(-11, 2)


def test_power_sums():
    assert str(umbral.power_sum("plain", 1, 2, 2)) == "12"
    assert str(umbral.power_sum("alt", 1, 2, 3)) == "4"
    assert str(umbral.power_sum("lambda", 0, 1, 2, lambda_="2")) == "3/4"
    series = umbral.power_sum_table("plain", 8, 3, 3)
    enum = umbral.power_sum_table("plain", 8, 3, 3, algorithm="enum")
    assert series == enum


def test_verify():
    ok = umbral.verify("Thm3", 3, 2)
    assert ok["status"] == "equal"

    printed = umbral.verify("Thm4.printed", 2, 1)
    assert printed["status"] == "mismatch"
    assert printed["lhs"] == ["-1", "1"]
    assert printed["rhs"] == ["1", "1"]

    lemma = umbral.verify("Lemma1.E", 5, 2, alpha="2")
    assert lemma["status"] == "equal"

    with pytest.raises(umbral.UmbralError):
        umbral.verify("Thm5", 2, 2)  # even m


def test_run_sweep():
    reports = umbral.run_sweep(["Thm3", "Thm6"], n_max=2, m_max=2, lambdas=["2", "-1"])
    assert len(reports) == 4 + 8
    statuses = {r["status"] for r in reports}
    assert "mismatch" not in statuses
    skipped = [r for r in reports if r["status"] == "skipped"]
    assert all(r["identity"] == "Thm6" and r["lambda"] == "-1" and r["m"] == 2 for r in skipped)


@pytest.mark.skipif("UMBRAL_CLI" not in os.environ, reason="CLI path not wired in")
def test_cli_json_against_schema():
    jsonschema = pytest.importorskip("jsonschema")
    with open(os.environ["UMBRAL_SCHEMA"], encoding="utf-8") as fh:
        schema = json.load(fh)
    cli = os.environ["UMBRAL_CLI"]
    for args in (
        ["poly", "bernoulli", "--order", "2", "--n", "3", "--format", "json"],
        ["sums", "lambda", "--n", "2", "--m", "2", "--k", "0..4", "--lambda", "1/2", "--format", "json"],
        ["verify", "all", "--n-max", "2", "--m-max", "2", "--format", "json"],
    ):
        out = subprocess.run([cli, *args], capture_output=True, text=True, check=True)
        jsonschema.validate(json.loads(out.stdout), schema)
