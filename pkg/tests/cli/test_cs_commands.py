# SPDX-License-Identifier: MIT
"""Integration tests for `icmbound cs`."""

import json

import pytest
from click.testing import CliRunner

from icmbound.cli import cli


@pytest.mark.integration
def test_cs_text_report_for_m6():
    result = CliRunner().invoke(cli, ["cs", "--m", "6"])

    assert result.exit_code == 0, result.stderr
    assert "Delta_phi = 49" in result.stdout
    assert "bound_main        = 1" in result.stdout
    assert "Case1Maximal" in result.stdout
    assert "n/a (needs Delta_E > 3075)" in result.stdout


@pytest.mark.integration
def test_cs_json_envelope_for_m0():
    result = CliRunner().invoke(cli, ["cs", "--m", "0", "--json"])

    assert result.exit_code == 0, result.stderr
    parsed = json.loads(result.stdout)
    assert parsed["ok"] is True
    assert parsed["command"] == "cs"
    report = parsed["result"]
    assert report["m"] == 0
    assert report["delta_phi"] == "-23"
    assert report["abs_delta_E"] == "23"
    assert report["r2"] == 1
    assert report["bound_main"] == "1"
    assert report["bound_simple"] is None
    assert report["prime_cases"] == [
        {
            "p": "23",
            "case_id": "Case3OddOrd",
            "label": "C3odd",
            "ord": 1,
            "S": 0,
            "orbital": "1",
            "A_factor": "1",
        }
    ]


@pytest.mark.integration
def test_cs_json_simple_bound_for_m11():
    result = CliRunner().invoke(cli, ["cs", "--m", "11", "--json"])

    assert result.exit_code == 0, result.stderr
    report = json.loads(result.stdout)["result"]
    assert report["classnum_bound"] == "1240"
    assert report["bound_main"] == "1240"
    assert report["bound_simple"] == "44726882/243"
    assert report["bound_simple_decimal"] == "184061"


@pytest.mark.integration
def test_cs_requires_m():
    result = CliRunner().invoke(cli, ["cs"])

    assert result.exit_code == 2


@pytest.mark.integration
def test_cs_classification_failure_renders_error_envelope(mocker):
    from icmbound.exceptions import ClassificationError

    mocker.patch("icmbound.bounds.cs_bound", side_effect=ClassificationError("p=3 divides Delta_phi", m=6, p=3))

    result = CliRunner().invoke(cli, ["cs", "--m", "6", "--json"])

    assert result.exit_code == 1
    parsed = json.loads(result.stdout)
    assert parsed["ok"] is False
    assert parsed["error"]["type"] == "classification"
    assert parsed["m"] == 6
    assert parsed["p"] == 3
    assert "error (classification)" in result.stderr
