# SPDX-License-Identifier: MIT
"""`icmbound cs`: the full bound report for one Cappell-Shaneson order."""

from __future__ import annotations

from typing import TYPE_CHECKING

import click

from ._output import emit, emit_text, success_envelope
from ._runtime import run_async

if TYPE_CHECKING:
    from ..types import CSReport


def format_cs_report(report: CSReport) -> list[str]:
    from ..types import decimal_str

    lines = [
        f"Cappell-Shaneson order m={report.m}",
        f"  Delta_phi = {report.delta_phi}",
        f"  C_phi     = {report.c_phi}",
        f"  |Delta_E| = {report.abs_delta_E} (sign {'+' if report.delta_E_sign > 0 else '-'}, r2={report.r2})",
        "  primes:",
    ]
    for case in report.prime_cases:
        lines.append(
            f"    p={case.p:<8} {case.case_id.value:<15} ord={case.ord} S={case.S} "
            f"orbital={case.orbital} A-factor={case.A_factor}"
        )
    if not report.prime_cases:
        lines.append("    (none)")
    lines += [
        f"  A                 = {report.A}",
        f"  floor(M)          = {report.floor_M}",
        f"  classnum_bound    = {report.classnum_bound}",
        f"  bound_main        = {report.bound_main}",
        f"  bound_closed_form = {report.bound_closed_form} (~{decimal_str(report.bound_closed_form)})",
    ]
    if report.bound_simple is not None:
        lines.append(f"  bound_simple      = {report.bound_simple} (~{decimal_str(report.bound_simple)})")
    else:
        lines.append("  bound_simple      = n/a (needs Delta_E > 3075)")
    return lines


@click.command("cs")
@click.option("--m", "m", type=int, required=True, help="Trace parameter of x^3 - m x^2 + (m-1) x - 1.")
@click.option("--json", "json_output", is_flag=True, help="Emit the JSON envelope instead of text.")
@run_async("cs")
async def cs_command(m: int, json_output: bool) -> int:
    """Bound the ideal class monoid of the Cappell-Shaneson order for trace m.

    Reports the per-prime case split, |Delta_E|, the class-number bound and
    the product, closed and (when Delta_E > 3075) simple forms of the bound.
    """
    from ..bounds import cs_bound

    report = cs_bound(m)
    if json_output:
        emit(success_envelope("cs", report))
    else:
        emit_text(format_cs_report(report))
    return 0
