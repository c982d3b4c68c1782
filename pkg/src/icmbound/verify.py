# SPDX-License-Identifier: MIT
"""Property suites that cross-check every formula against an independent route.

Each suite is a flat list of independent inputs and a check returning the
reason an input fails (or ``None``). Inputs run on worker threads through
``grid.map_ordered``; the reported counterexample is the first failing input
in grid order, whatever the thread count.
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from math import gcd
from typing import Any

from pydantic import BaseModel
from sympy import primerange

from .arith import divisors, factorize, is_perfect_square, is_squarefree
from .bounds import cs_bound, cs_delta_phi_reconstruction
from .classnum import FieldShape, class_number_upper_bound
from .exceptions import IcmBoundError, InvalidInputError
from .grid import map_ordered
from .local import (
    QuadLocalData,
    Splitting,
    bass_local_factor,
    cs_classify_prime,
    cs_invariants,
    cs_local_data,
    cs_orbital,
    orbital_cubic,
    orbital_quadratic,
    quad_bass_data,
    quad_fundamental_discriminant,
)
from .oracle import bound_audit, form_class_number, icm_exact, yun_check

logger = logging.getLogger("icmbound")

Item = dict[str, Any]
Check = Callable[[Item], str | None]


class SuiteResult(BaseModel):
    name: str
    checked: int
    failure: dict[str, Any] | None = None

    @property
    def passed(self) -> bool:
        return self.failure is None


@dataclass(frozen=True, slots=True)
class VerifyParams:
    """Grid extents. ``m_range`` bounds are inclusive."""

    m_range: tuple[int, int] = (-200, 200)
    p_max: int = 50
    s_max: int = 6
    d_max: int = 13
    f_max: int = 30
    disc_max: int = 200
    discriminant_m_range: tuple[int, int] = (-500, 500)
    coprime_m_range: tuple[int, int] = (-10_000, 10_000)

    def __post_init__(self) -> None:
        for lo, hi in (self.m_range, self.discriminant_m_range, self.coprime_m_range):
            if lo > hi:
                raise InvalidInputError(f"empty m range {lo}:{hi}")
        if min(self.p_max, self.d_max, self.f_max, self.disc_max) < 1 or self.s_max < 0:
            raise InvalidInputError("grid extents must be positive")


# ---------- checks ----------


def _check_coherence(item: Item) -> str | None:
    if item["kind"] == "quadratic":
        data = QuadLocalData(p=item["p"], S=item["S"], splitting=Splitting(item["splitting"]))
        orbital = orbital_quadratic(data)
        bass = bass_local_factor(quad_bass_data(data))
        if orbital != bass:
            return f"orbital_quadratic={orbital} but bass_local_factor={bass}"
        if (orbital == 1) != (data.S == 0):
            return f"orbital value {orbital} with S={data.S}"
        return None

    m = item["m"]
    for p in factorize(cs_invariants(m)[0]).primes:
        case = cs_classify_prime(m, p)
        expected = cs_orbital(case)
        got = orbital_cubic(cs_local_data(case))
        if got != expected:
            return f"p={p} ({case.case_id.value}): orbital_cubic={got} but cs_orbital={expected}"
        if (expected == 1) != (case.S == 0):
            return f"p={p} ({case.case_id.value}): orbital value {expected} with S={case.S}"
    return None


def _check_yun(item: Item) -> str | None:
    d, f = item["d"], item["f"]
    check = yun_check(d, f)
    if not check.holds:
        return f"orbital product {check.lhs} != weighted overorder sum {check.rhs}"
    if f == 1 and icm_exact(d, 1) != form_class_number(quad_fundamental_discriminant(d)):
        return "ICM of the maximal order differs from its class number"
    return None


def _check_audit(item: Item) -> str | None:
    d, f = item["d"], item["f"]
    record = bound_audit(d, f)
    fund = quad_fundamental_discriminant(d)
    if f == 1:
        bound = class_number_upper_bound(FieldShape(degree=2, r2=1, abs_disc=-fund)).bound
        h = form_class_number(fund)
        if h > bound:
            return f"class number {h} exceeds Minkowski sum bound {bound}"
    for g in divisors(f):
        if icm_exact(d, g) > record.icm_exact:
            return f"ICM of overorder conductor {g} exceeds ICM {record.icm_exact}"
    return None


def _sign_law(m: int, delta_phi: int) -> str | None:
    if (delta_phi > 0) != (m >= 6 or m <= -1):
        return f"Delta_phi={delta_phi} has the wrong sign"
    return None


def _check_coprime(item: Item) -> str | None:
    m = item["m"]
    delta_phi, _ = cs_invariants(m)
    if gcd(delta_phi, 6) != 1:
        return f"gcd(Delta_phi={delta_phi}, 6) != 1"
    return _sign_law(m, delta_phi)


def _check_discriminant(item: Item) -> str | None:
    m = item["m"]
    report = cs_bound(m)
    abs_phi = abs(report.delta_phi)
    if gcd(report.delta_phi, 6) != 1:
        return f"gcd(Delta_phi={report.delta_phi}, 6) != 1"
    if abs_phi % report.abs_delta_E:
        return f"|Delta_E|={report.abs_delta_E} does not divide |Delta_phi|={abs_phi}"
    if not is_perfect_square(abs_phi // report.abs_delta_E).is_square:
        return f"|Delta_phi|/|Delta_E| = {abs_phi // report.abs_delta_E} is not a square"
    if abs_phi < report.abs_delta_E:
        return "|Delta_phi| < |Delta_E|"
    rebuilt = cs_delta_phi_reconstruction(m)
    if rebuilt != abs_phi:
        return f"case data rebuilds |Delta_phi| as {rebuilt}, expected {abs_phi}"
    if report.bound_main > report.bound_closed_form:
        return f"bound_main={report.bound_main} exceeds closed form {report.bound_closed_form}"
    if report.bound_simple is not None and report.bound_main > report.bound_simple:
        return f"bound_main={report.bound_main} exceeds simple bound {report.bound_simple}"
    return _sign_law(m, report.delta_phi)


# ---------- grids ----------


def _m_items(m_range: tuple[int, int]) -> list[Item]:
    return [{"m": m} for m in range(m_range[0], m_range[1] + 1)]


def _coherence_items(params: VerifyParams) -> list[Item]:
    quadratic = [
        {"kind": "quadratic", "p": int(p), "S": s, "splitting": splitting.value}
        for p in primerange(2, params.p_max + 1)
        for s in range(params.s_max + 1)
        for splitting in Splitting
    ]
    cubic = [{"kind": "cubic", **item} for item in _m_items(params.m_range)]
    return quadratic + cubic


def imaginary_ds(abs_d_max: int) -> list[int]:
    """Squarefree ``d < 0`` with ``|d| <= abs_d_max``, descending from -1."""
    return [d for d in range(-1, -abs_d_max - 1, -1) if is_squarefree(d)]


def _yun_items(params: VerifyParams) -> list[Item]:
    return [{"d": d, "f": f} for d in imaginary_ds(params.d_max) for f in range(1, params.f_max + 1)]


def _audit_items(params: VerifyParams) -> list[Item]:
    ds = [d for d in imaginary_ds(params.disc_max) if -quad_fundamental_discriminant(d) <= params.disc_max]
    return [{"d": d, "f": f} for d in ds for f in range(1, params.f_max + 1)]


SUITES: dict[str, tuple[Callable[[VerifyParams], list[Item]], Check]] = {
    "coherence": (_coherence_items, _check_coherence),
    "yun": (_yun_items, _check_yun),
    "audit": (_audit_items, _check_audit),
    "discriminant": (lambda params: _m_items(params.discriminant_m_range), _check_discriminant),
    "coprime": (lambda params: _m_items(params.coprime_m_range), _check_coprime),
}
SUITE_NAMES: tuple[str, ...] = (*SUITES, "all")


def _guarded(check: Check) -> Callable[[Item], str | None]:
    def run(item: Item) -> str | None:
        try:
            return check(item)
        except (IcmBoundError, ArithmeticError) as exc:
            return f"{type(exc).__name__}: {exc}"

    return run


def _first_failure(items: Sequence[Item], reasons: Sequence[str | None]) -> dict[str, Any] | None:
    for item, reason in zip(items, reasons, strict=True):
        if reason is not None:
            return {"input": item, "reason": reason}
    return None


async def run_suite(name: str, params: VerifyParams | None = None, *, threads: int = 1) -> SuiteResult:
    if name not in SUITES:
        raise InvalidInputError(f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}")
    params = params or VerifyParams()
    build, check = SUITES[name]
    items = build(params)
    logger.info("suite %s: %d checks on %d thread(s)", name, len(items), threads)
    reasons = await map_ordered(_guarded(check), items, threads=threads)
    result = SuiteResult(name=name, checked=len(items), failure=_first_failure(items, reasons))
    logger.info("suite %s: %s", name, "pass" if result.passed else "FAIL")
    return result


async def run_suites(name: str, params: VerifyParams | None = None, *, threads: int = 1) -> list[SuiteResult]:
    """One suite, or every suite in order for ``"all"``."""
    names = list(SUITES) if name == "all" else [name]
    return [await run_suite(n, params, threads=threads) for n in names]
