# SPDX-License-Identifier: MIT
"""Global upper bounds for the ideal class monoid.

The shape is always ``#Cl(O_E) * prod(local factor)``: a class-number input
(exact when known, Minkowski otherwise) times one closed-form factor per place
where the order is not maximal.
"""

from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction
from math import prod

from .arith import factorize, is_perfect_square, pi_enclosure, sqrt_upper
from .classnum import FieldShape, class_number_upper_bound
from .config import get_settings
from .exceptions import ClassificationError, InvalidInputError
from .local import (
    BassLocalData,
    CSCase,
    CSCaseId,
    CubicLocalData,
    QuadLocalData,
    bass_local_factor,
    cs_classify_prime,
    cs_invariants,
    cs_orbital,
    orbital_cubic,
    orbital_quadratic,
    quad_bass_data,
    quad_fundamental_discriminant,
    quad_local_data,
)
from .oracle import form_class_number, icm_exact
from .types import (
    ClassNumberInput,
    CSPrimeReport,
    CSReport,
    LocalDataReport,
    LocalValue,
    QuadLocalFactor,
    QuadReport,
)

__all__ = [
    "SIMPLE_BOUND_THRESHOLD",
    "cs_A",
    "cs_bound",
    "cs_delta_E",
    "cs_delta_phi_reconstruction",
    "cs_prime_reports",
    "local_data_bound",
    "local_value",
    "quad_bound",
    "quad_chl_bound",
    "quad_fundamental_discriminant",
]

SIMPLE_BOUND_THRESHOLD = 3075
"""``Delta_E`` above which the one-term bound ``2/3^5 sqrt(Delta_phi) Delta_E^(3/2)`` holds."""


# ---------- Cappell-Shaneson ----------


def _a_factor(case: CSCase) -> int:
    """Contribution of one prime to ``A(Delta_phi, C_phi)``, from the product formula."""
    p, o = case.p, case.ord_delta
    match case.case_id:
        case CSCaseId.CASE1_MAXIMAL:
            return 1
        case CSCaseId.CASE1:
            return p + 1
        case CSCaseId.CASE2:
            return p
        case CSCaseId.CASE3_ODD_ORD:
            return (p ** ((o + 1) // 2) - 1) // (p - 1)
        case CSCaseId.CASE3_EVEN_INERT:
            return (p ** (o // 2 + 1) + p ** (o // 2) - 2) // (p - 1)
        case CSCaseId.CASE4:
            return p ** (o // 2)


def cs_prime_reports(m: int) -> list[CSPrimeReport]:
    """Classify every prime of ``Delta_phi(m)``, ascending.

    Raises:
        ClassificationError: If a prime's A-factor differs from its orbital value.
    """
    delta_phi, _ = cs_invariants(m)
    reports = []
    for p in factorize(delta_phi).primes:
        case = cs_classify_prime(m, p)
        orbital = cs_orbital(case)
        a_factor = _a_factor(case)
        if a_factor != orbital:
            raise ClassificationError(
                f"A-factor {a_factor} differs from orbital value {orbital}",
                m=m,
                p=p,
                details={"case": case.case_id.value, "ord": case.ord_delta},
            )
        reports.append(
            CSPrimeReport(
                p=p,
                case_id=case.case_id,
                label=case.case_id.label,
                ord=case.ord_delta,
                S=case.S,
                orbital=orbital,
                A_factor=a_factor,
            )
        )
    return reports


def cs_A(m: int) -> tuple[int, list[CSPrimeReport]]:
    reports = cs_prime_reports(m)
    return prod(r.A_factor for r in reports), reports


def _abs_delta_E(reports: list[CSPrimeReport]) -> int:
    exponent = {
        CSCaseId.CASE1_MAXIMAL: 2,
        CSCaseId.CASE1: 2,
        CSCaseId.CASE2: 1,
        CSCaseId.CASE3_ODD_ORD: 1,
    }
    return prod(r.p ** exponent.get(r.case_id, 0) for r in reports)


def cs_delta_E(m: int) -> tuple[int, int]:
    """``(|Delta_E|, sign(Delta_E))`` of the cubic field of the CS order ``m``."""
    delta_phi, _ = cs_invariants(m)
    return _abs_delta_E(cs_prime_reports(m)), 1 if delta_phi > 0 else -1


def cs_delta_phi_reconstruction(m: int) -> int:
    """``|Delta_phi|`` rebuilt from the case of each prime alone."""
    exponent = {CSCaseId.CASE1_MAXIMAL: 2, CSCaseId.CASE1: 4, CSCaseId.CASE2: 3}
    return prod(r.p ** exponent.get(r.case_id, r.ord) for r in cs_prime_reports(m))


def _closed_form_upper(A: int, abs_delta_E: int, r2: int, bits: int) -> Fraction:
    """Certified upper value of ``A (8/3^7 x^3 + 2/3^4 x^2 + 1/3^3 x)`` with ``x = (4/pi)^r2 sqrt(|Delta_E|)``."""
    four_over_pi = Fraction(4) / pi_enclosure(bits).lo if r2 else Fraction(1)
    x = four_over_pi * sqrt_upper(abs_delta_E, bits)
    return A * (Fraction(8, 3**7) * x**3 + Fraction(2, 3**4) * x**2 + Fraction(1, 3**3) * x)


def cs_bound(m: int) -> CSReport:
    """Upper bound for the ideal class monoid of ``Z[x]/(x^3 - m x^2 + (m-1) x - 1)``.

    ``bound_main`` is the Minkowski class-number bound times the exact product
    of local orbital values; the closed and simple forms are its relaxations
    and are reported alongside as exact rationals.
    """
    delta_phi, c_phi = cs_invariants(m)
    A, reports = cs_A(m)
    orbital_product = prod(r.orbital for r in reports)
    if orbital_product != A:
        raise ClassificationError(f"A = {A} differs from the orbital product {orbital_product}", m=m)
    abs_delta_E = _abs_delta_E(reports)
    r2 = 0 if delta_phi > 0 else 1
    class_bound = class_number_upper_bound(FieldShape(degree=3, r2=r2, abs_disc=abs_delta_E))

    bound_simple = None
    if delta_phi > 0 and abs_delta_E > SIMPLE_BOUND_THRESHOLD:
        square = is_perfect_square(delta_phi // abs_delta_E)
        assert square.root is not None
        bound_simple = Fraction(2 * square.root * abs_delta_E**2, 3**5)

    return CSReport(
        m=m,
        delta_phi=delta_phi,
        c_phi=c_phi,
        prime_cases=reports,
        A=A,
        abs_delta_E=abs_delta_E,
        delta_E_sign=1 if delta_phi > 0 else -1,
        r2=r2,
        floor_M=class_bound.floor_M,
        classnum_bound=class_bound.bound,
        bound_main=class_bound.bound * orbital_product,
        bound_closed_form=_closed_form_upper(A, abs_delta_E, r2, get_settings().pi_bits),
        bound_simple=bound_simple,
    )


# ---------- quadratic ----------


def _conductor_primes(f: int) -> tuple[int, ...]:
    if f < 1:
        raise InvalidInputError(f"conductor must be >= 1, got {f}")
    return factorize(f).primes if f > 1 else ()


def _conductor_factor_count(f: int) -> int:
    """``prod(ord_p(f) + 1)``: the number of overorders of ``Z + f O_E``."""
    return prod(e + 1 for _, e in factorize(f).factors) if f > 1 else 1


def quad_chl_bound(d: int, f: int, cl_R: int | None = None) -> int:
    """``#Cl(R) * prod(S_p + 1)`` for ``R = Z + f O_E``.

    ``#Cl(R)`` comes from the form oracle when ``d < 0``.

    Raises:
        InvalidInputError: If ``d > 0`` and ``cl_R`` is not supplied.
    """
    fund = quad_fundamental_discriminant(d)
    _conductor_primes(f)
    if cl_R is None:
        if d > 0:
            raise InvalidInputError(f"#Cl(R) must be supplied for the real quadratic order d={d}, f={f}")
        cl_R = form_class_number(f * f * fund)
    return cl_R * _conductor_factor_count(f)


def quad_bound(d: int, f: int, class_number: int | None = None, cl_R: int | None = None) -> QuadReport:
    """Both global bounds for the quadratic order of conductor ``f`` in ``Q(sqrt(d))``.

    The class number of ``O_E`` is the supplied value, else the form oracle's
    for ``d < 0``, else the Minkowski sum bound. The conductor-count bound is
    left out for ``d > 0`` unless ``cl_R`` is supplied.
    """
    fund = quad_fundamental_discriminant(d)
    local_factors = []
    for p in _conductor_primes(f):
        data = quad_local_data(fund, f, p)
        local_factors.append(
            QuadLocalFactor(p=p, S=data.S, splitting=data.splitting, factor=bass_local_factor(quad_bass_data(data)))
        )

    if class_number is not None:
        if class_number < 1:
            raise InvalidInputError(f"class number must be >= 1, got {class_number}")
        h = ClassNumberInput(kind="exact", source="supplied", value=class_number)
    elif d < 0:
        h = ClassNumberInput(kind="exact", source="oracle", value=form_class_number(fund))
    else:
        shape = FieldShape(degree=2, r2=0, abs_disc=fund)
        h = ClassNumberInput(kind="bound", source="minkowski", value=class_number_upper_bound(shape).bound)

    if cl_R is None and d < 0:
        cl_R = form_class_number(f * f * fund)
    if cl_R is not None and cl_R < 1:
        raise InvalidInputError(f"#Cl(R) must be >= 1, got {cl_R}")

    return QuadReport(
        d=d,
        fund_disc=fund,
        f=f,
        local_factors=local_factors,
        class_number_input=h,
        bound_bass=h.value * prod(lf.factor for lf in local_factors),
        cl_R=cl_R,
        bound_chl=None if cl_R is None else quad_chl_bound(d, f, cl_R),
        conductor_factor_count=_conductor_factor_count(f),
        icm_exact=icm_exact(d, f) if d < 0 else None,
    )


# ---------- caller-supplied local data ----------

LocalData = QuadLocalData | BassLocalData | CubicLocalData


def local_value(data: LocalData) -> LocalValue:
    """Local factor of one place, by the formula matching its kind."""
    if isinstance(data, QuadLocalData):
        return LocalValue(kind="quadratic", q=data.p, value=orbital_quadratic(data))
    if isinstance(data, BassLocalData):
        return LocalValue(kind="bass", q=data.q_R, value=bass_local_factor(data))
    if isinstance(data, CubicLocalData):
        return LocalValue(kind="cubic", q=data.q, value=orbital_cubic(data))
    raise InvalidInputError(f"unsupported local data {data!r}")


def local_data_bound(class_number: int, places: Sequence[LocalData]) -> LocalDataReport:
    """``class_number * prod(local factor)`` for places described by the caller.

    ``class_number`` is ``#Cl(O_E)`` or any upper bound for it; the result is
    then an upper bound for the ideal class monoid of the order the places
    describe.

    Raises:
        InvalidInputError: If ``class_number < 1``.
        LocalDataError: If a cubic place yields a non-integral orbital value.
    """
    if class_number < 1:
        raise InvalidInputError(f"class number must be >= 1, got {class_number}")
    values = [local_value(data) for data in places]
    return LocalDataReport(
        class_number=class_number,
        places=values,
        bound=class_number * prod(v.value for v in values),
    )
