# SPDX-License-Identifier: MIT
"""Small standalone commands: `classnum-bound`, `oracle-hform`, `local-bound` and `capabilities`."""

from __future__ import annotations

from typing import TextIO

import click

from ._output import emit, emit_text, success_envelope
from ._runtime import run_async


@click.command("classnum-bound")
@click.option("--degree", type=int, required=True, help="Degree n of the number field.")
@click.option("--r2", type=int, required=True, help="Number of complex places.")
@click.option("--disc", type=int, required=True, help="Field discriminant (sign is ignored).")
@click.option("--json", "json_output", is_flag=True, help="Emit the JSON envelope instead of text.")
@run_async("classnum-bound")
async def classnum_bound_command(degree: int, r2: int, disc: int, json_output: bool) -> int:
    """Upper bound on the class number from the Minkowski bound.

    Counts ideals of norm at most floor(M) by the sum of eta^(n-1).
    """
    from ..classnum import FieldShape, class_number_upper_bound
    from ..types import ClassNumberReport

    result = class_number_upper_bound(FieldShape(degree=degree, r2=r2, abs_disc=abs(disc)))
    report = ClassNumberReport(
        degree=degree,
        r2=r2,
        abs_disc=result.shape.abs_disc,
        floor_M=result.floor_M,
        bound=result.bound,
    )
    if json_output:
        emit(success_envelope("classnum-bound", report))
    else:
        emit_text(
            [
                f"degree={degree} r2={r2} |disc|={report.abs_disc}",
                f"  floor(M)       = {report.floor_M}",
                f"  classnum_bound = {report.bound}",
            ]
        )
    return 0


@click.command("oracle-hform")
@click.option("--disc", type=int, required=True, help="Negative discriminant D, D = 0 or 1 mod 4.")
@click.option("--json", "json_output", is_flag=True, help="Emit the JSON envelope instead of text.")
@run_async("oracle-hform")
async def oracle_hform_command(disc: int, json_output: bool) -> int:
    """List the reduced primitive forms of discriminant D and their count."""
    from ..oracle import reduced_forms
    from ..types import HFormReport, ReducedForm

    forms = reduced_forms(disc)
    report = HFormReport(
        disc=disc,
        forms=[ReducedForm(a=q.a, b=q.b, c=q.c) for q in forms],
        class_number=len(forms),
    )
    if json_output:
        emit(success_envelope("oracle-hform", report))
    else:
        lines = [f"D={disc}: h={report.class_number}"]
        lines += [f"  ({q.a}, {q.b}, {q.c})" for q in forms]
        emit_text(lines)
    return 0


@click.command("local-bound")
@click.option("--h", "h", type=int, required=True, help="#Cl(O_E), or any upper bound for it.")
@click.option(
    "--places",
    type=click.File("r", encoding="utf-8"),
    required=True,
    help="JSON array of places ('-' for stdin); each has kind quadratic, bass or cubic.",
)
@click.option("--json", "json_output", is_flag=True, help="Emit the JSON envelope instead of text.")
@run_async("local-bound")
async def local_bound_command(h: int, places: TextIO, json_output: bool) -> int:
    """Bound the ideal class monoid from a class number and raw local data.

    \b
    Place objects:
      {"kind": "quadratic", "p": 3, "S": 2, "splitting": "Inert"}
      {"kind": "bass", "q_R": 3, "S": 1, "res_deg": 2, "is_domain": true}
      {"kind": "cubic", "q": 5, "shape": "ThreeFactors", "delta": 0, "rho": 2,
       "components": [{"degree": 1, "residue_degree": 1, "serre": 0}, ...]}
    """
    from ..bounds import local_data_bound
    from ..types import PLACES_ADAPTER

    parsed = PLACES_ADAPTER.validate_json(places.read())
    report = local_data_bound(h, [place.to_local() for place in parsed])
    if json_output:
        emit(success_envelope("local-bound", report))
    else:
        lines = [f"#Cl(O_E) <= {report.class_number}"]
        lines += [f"  {v.kind:<9} q={v.q:<8} local factor = {v.value}" for v in report.places]
        lines.append(f"  bound = {report.bound}")
        emit_text(lines)
    return 0


@click.command("capabilities")
@run_async("capabilities")
async def capabilities() -> int:
    """Machine-readable environment report: version, settings, suites, commands.

    Always JSON; safe as a first call to discover what this install does.
    """
    from importlib.metadata import PackageNotFoundError, version

    from ..config import get_settings
    from ..verify import SUITE_NAMES
    from . import cli

    try:
        pkg_version = version("icmbound")
    except PackageNotFoundError:
        pkg_version = "unknown"

    result: dict[str, object] = {
        "version": pkg_version,
        "settings": get_settings().model_dump(),
        "suites": list(SUITE_NAMES),
        "commands": sorted(cli.commands),
    }
    emit(success_envelope("capabilities", result))
    return 0
