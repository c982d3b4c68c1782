# SPDX-License-Identifier: MIT
"""Contract tests for the JSON envelope renderer and the sweep file writers."""

import json
import pathlib
from fractions import Fraction

import pydantic
import pytest

from icmbound.bounds import cs_bound
from icmbound.cli._io import write_rows
from icmbound.cli._output import error_envelope, render, success_envelope
from icmbound.cli._runtime import CLIError
from icmbound.types import SWEEP_COLUMNS, SweepRow


class _Counts(pydantic.BaseModel):
    checked: int
    failed: int


@pytest.mark.unit
def test_success_envelope_shape():
    envelope = success_envelope("cs", {"m": 6})

    parsed = json.loads(render(envelope, pretty=False))
    assert parsed == {"v": 1, "ok": True, "command": "cs", "result": {"m": 6}}


@pytest.mark.unit
def test_paths_fractions_and_pydantic_models_render():
    result = {"out": pathlib.Path("/tmp/cs.csv"), "ratio": Fraction(7, 3), "counts": _Counts(checked=3, failed=0)}

    parsed = json.loads(render(success_envelope("sweep", result), pretty=False))
    assert parsed["result"]["out"] == "/tmp/cs.csv"
    assert parsed["result"]["ratio"] == "7/3"
    assert parsed["result"]["counts"] == {"checked": 3, "failed": 0}


@pytest.mark.unit
def test_big_integers_in_reports_render_as_strings():
    parsed = json.loads(render(success_envelope("cs", cs_bound(0)), pretty=False))

    assert parsed["result"]["abs_delta_E"] == "23"
    assert parsed["result"]["r2"] == 1


@pytest.mark.unit
def test_unrenderable_type_raises_instead_of_str_fallback():
    with pytest.raises(TypeError, match="Unrenderable"):
        render(success_envelope("cs", {"bad": object()}), pretty=False)


@pytest.mark.unit
def test_error_envelope_carries_extra():
    envelope = error_envelope("verify", "check_failed", "suite yun failed", extra={"suites": []})

    parsed = json.loads(render(envelope, pretty=False))
    assert parsed["ok"] is False
    assert parsed["error"] == {"type": "check_failed", "message": "suite yun failed"}
    assert parsed["suites"] == []


@pytest.mark.unit
def test_pretty_render_is_multiline_but_same_structure():
    envelope = success_envelope("cs", {"a": 1})

    compact = render(envelope, pretty=False)
    pretty = render(envelope, pretty=True)
    assert "\n" not in compact
    assert "\n" in pretty
    assert json.loads(compact) == json.loads(pretty)


# ---------- sweep writers ----------


@pytest.mark.unit
def test_csv_has_header_crlf_and_empty_optional_cells(tmp_path):
    out = tmp_path / "nested" / "cs.csv"

    write_rows(out, [SweepRow.from_report(cs_bound(6))], "csv")

    raw = out.read_bytes()
    assert raw == (",".join(SWEEP_COLUMNS) + "\r\n" + "6,49,-189,49,0,1,1,1,,7:C1max\r\n").encode()


@pytest.mark.unit
def test_jsonl_is_one_compact_row_per_line(tmp_path):
    out = tmp_path / "cs.jsonl"

    write_rows(out, [SweepRow.from_report(cs_bound(m)) for m in (6, 11)], "jsonl")

    lines = out.read_text().splitlines()
    assert len(lines) == 2
    assert json.loads(lines[1])["bound_simple"] == "44726882/243"
    assert json.loads(lines[0])["bound_simple"] is None


@pytest.mark.unit
def test_write_failure_names_the_path(tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("x")

    with pytest.raises(CLIError) as info:
        write_rows(blocker / "cs.csv", [], "csv")

    assert info.value.error_type == "io"
    assert str(blocker / "cs.csv") in str(info.value)
