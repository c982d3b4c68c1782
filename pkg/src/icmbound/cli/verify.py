# SPDX-License-Identifier: MIT
"""`icmbound verify`: run the property suites and report the first counterexample."""

from __future__ import annotations

import dataclasses
from typing import TYPE_CHECKING

import click

from ._output import EXIT_CHECK_FAILED, emit, emit_text, error_envelope, success_envelope
from ._runtime import parse_range, resolve_threads, run_async

if TYPE_CHECKING:
    from ..verify import SuiteResult, VerifyParams

# Mirrors icmbound.verify.SUITE_NAMES; kept literal so the CLI loads without sympy.
SUITE_NAMES = ("coherence", "yun", "audit", "discriminant", "coprime", "all")


def _suite_dict(result: SuiteResult) -> dict[str, object]:
    return {**result.model_dump(mode="json"), "passed": result.passed}


def _params(
    mrange: str | None,
    pmax: int | None,
    smax: int | None,
    dmax: int | None,
    fmax: int | None,
    discmax: int | None,
) -> VerifyParams:
    from ..verify import VerifyParams

    overrides: dict[str, object] = {}
    m_range = parse_range(mrange, "--mrange")
    if m_range is not None:
        overrides.update(m_range=m_range, discriminant_m_range=m_range, coprime_m_range=m_range)
    for field, value in (("p_max", pmax), ("s_max", smax), ("d_max", dmax), ("f_max", fmax), ("disc_max", discmax)):
        if value is not None:
            overrides[field] = value
    return dataclasses.replace(VerifyParams(), **overrides)  # type: ignore[arg-type]


@click.command("verify")
@click.argument("suite", type=click.Choice(SUITE_NAMES), default="all")
@click.option("--mrange", default=None, help="Inclusive m range A:B for every m-indexed suite.")
@click.option("--pmax", type=int, default=None, help="Largest prime in the coherence grid.")
@click.option("--smax", type=int, default=None, help="Largest Serre exponent in the coherence grid.")
@click.option("--dmax", type=int, default=None, help="Largest |d| in the yun grid.")
@click.option("--fmax", type=int, default=None, help="Largest conductor in the yun and audit grids.")
@click.option("--discmax", type=int, default=None, help="Largest |disc(O_E)| in the audit grid.")
@click.option("--threads", type=int, default=None, help="Worker threads (default ICMBOUND_THREADS).")
@click.option("--json", "json_output", is_flag=True, help="Emit the JSON envelope instead of text.")
@run_async("verify")
async def verify_command(
    suite: str,
    mrange: str | None,
    pmax: int | None,
    smax: int | None,
    dmax: int | None,
    fmax: int | None,
    discmax: int | None,
    threads: int | None,
    json_output: bool,
) -> int:
    """Run SUITE (default: all) over its grid.

    \b
    Suites:
      coherence     orbital formulas agree with the Bass factor and case table
      yun           orbital product equals the weighted overorder sum (d < 0)
      audit         both quadratic bounds dominate the exact ICM size (d < 0)
      discriminant  |Delta_E| divides |Delta_phi| with a square quotient
      coprime       gcd(Delta_phi, 6) = 1 and the sign law over a wide m range

    Exit code 5 when any suite finds a counterexample.
    """
    from ..verify import run_suites

    params = _params(mrange, pmax, smax, dmax, fmax, discmax)
    results = await run_suites(suite, params, threads=resolve_threads(threads))
    failed = [r for r in results if not r.passed]
    suites = [_suite_dict(r) for r in results]

    if json_output:
        if failed:
            first = failed[0]
            message = f"suite {first.name} failed: {first.failure['reason']}"  # type: ignore[index]
            emit(error_envelope("verify", "check_failed", message, extra={"suites": suites}))
        else:
            emit(success_envelope("verify", {"suites": suites, "passed": True}))
    else:
        lines = []
        for r in results:
            status = "pass" if r.passed else "FAIL"
            lines.append(f"{r.name:<13} {status}  ({r.checked} checked)")
            if r.failure is not None:
                lines.append(f"  first counterexample: {r.failure['input']}")
                lines.append(f"  reason: {r.failure['reason']}")
        emit_text(lines)
    return EXIT_CHECK_FAILED if failed else 0
