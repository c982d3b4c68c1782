# SPDX-License-Identifier: MIT
"""`icmbound quad`: both global bounds for a quadratic order ``Z + f O_E``."""

from __future__ import annotations

from typing import TYPE_CHECKING

import click

from ._output import EXIT_USAGE, emit, emit_text, success_envelope
from ._runtime import CLIError, run_async

if TYPE_CHECKING:
    from ..types import QuadReport


def format_quad_report(report: QuadReport) -> list[str]:
    h = report.class_number_input
    lines = [
        f"Quadratic order of conductor f={report.f} in Q(sqrt({report.d}))",
        f"  fundamental discriminant = {report.fund_disc}",
        f"  #Cl(O_E) = {h.value} ({h.kind}, {h.source})",
        "  conductor places:",
    ]
    for lf in report.local_factors:
        lines.append(f"    p={lf.p:<6} S={lf.S} {lf.splitting.value:<8} factor={lf.factor}")
    if not report.local_factors:
        lines.append("    (none, maximal order)")
    lines.append(f"  Bass product bound     = {report.bound_bass}")
    if report.bound_chl is not None:
        lines.append(
            f"  conductor-count bound  = {report.bound_chl} "
            f"(#Cl(R)={report.cl_R} x {report.conductor_factor_count} overorders)"
        )
    if report.icm_exact is not None:
        lines.append(f"  exact ICM size (oracle) = {report.icm_exact}")
    return lines


@click.command("quad")
@click.option("--d", "d", type=int, required=True, help="Squarefree d of Q(sqrt(d)), d not 0 or 1.")
@click.option("--f", "f", type=int, default=1, show_default=True, help="Conductor of the order.")
@click.option("--h", "h", type=int, default=None, help="Exact #Cl(O_E); defaults to the oracle (d<0) or a bound.")
@click.option("--cl-r", "cl_r", type=int, default=None, help="Exact #Cl(R); required when d > 0.")
@click.option("--json", "json_output", is_flag=True, help="Emit the JSON envelope instead of text.")
@run_async("quad")
async def quad_command(d: int, f: int, h: int | None, cl_r: int | None, json_output: bool) -> int:
    """Bound the ideal class monoid of the quadratic order of conductor f.

    Reports the Bass product bound and the conductor-count bound. For d < 0
    every class number comes from the reduced-form oracle and the exact
    monoid size is reported too; for d > 0 pass --cl-r (and ideally --h).
    """
    from ..bounds import quad_bound

    if d > 0 and cl_r is None:
        raise CLIError(
            "usage",
            f"the conductor-count bound for real quadratic d={d} needs the exact #Cl(R): pass --cl-r",
            exit_code=EXIT_USAGE,
        )
    report = quad_bound(d, f, class_number=h, cl_R=cl_r)
    if json_output:
        emit(success_envelope("quad", report))
    else:
        emit_text(format_quad_report(report))
    return 0
