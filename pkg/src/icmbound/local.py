# SPDX-License-Identifier: MIT
"""Local invariants and closed-form local orbital values.

Two layers live here:

- generic formulas driven by explicit local data (``orbital_quadratic``,
  ``orbital_cubic``, ``bass_local_factor``), usable for any order the caller
  can describe place by place;
- automatic drivers for the two families the package knows how to decompose
  itself: quadratic orders ``Z + f O_E`` and the Cappell-Shaneson cubic orders
  ``Z[x]/(x^3 - m x^2 + (m-1) x - 1)``.

Every value here is an integer at the end. The cubic formula passes through
genuinely fractional intermediates, so it is evaluated in ``Fraction`` and
the result is required to come out integral.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import prod

from .arith import factorize, is_squarefree, kronecker, ord_p, require_prime
from .exceptions import ClassificationError, InvalidInputError, LocalDataError

logger = logging.getLogger("icmbound")


class Splitting(str, Enum):
    """How a rational prime decomposes in a quadratic field."""

    SPLIT = "Split"
    INERT = "Inert"
    RAMIFIED = "Ramified"


class CubicShape(str, Enum):
    IRREDUCIBLE_UNRAMIFIED = "IrreducibleUnramified"
    IRREDUCIBLE_RAMIFIED = "IrreducibleRamified"
    TWO_FACTORS = "TwoFactors"
    THREE_FACTORS = "ThreeFactors"

    @property
    def is_irreducible(self) -> bool:
        return self in (CubicShape.IRREDUCIBLE_UNRAMIFIED, CubicShape.IRREDUCIBLE_RAMIFIED)


class CSCaseId(str, Enum):
    """Per-prime case of a Cappell-Shaneson order, by ``ord_p(Delta_phi)`` and ``p | C_phi``."""

    CASE1_MAXIMAL = "Case1Maximal"
    CASE1 = "Case1"
    CASE2 = "Case2"
    CASE3_ODD_ORD = "Case3OddOrd"
    CASE3_EVEN_INERT = "Case3EvenInert"
    CASE4 = "Case4"

    @property
    def label(self) -> str:
        return _CASE_LABELS[self]


_CASE_LABELS = {
    CSCaseId.CASE1_MAXIMAL: "C1max",
    CSCaseId.CASE1: "C1",
    CSCaseId.CASE2: "C2",
    CSCaseId.CASE3_ODD_ORD: "C3odd",
    CSCaseId.CASE3_EVEN_INERT: "C3inert",
    CSCaseId.CASE4: "C4",
}


def _require_prime_power(q: int) -> int:
    """Return the prime under ``q``; reject anything that is not a prime power."""
    if q < 2:
        raise InvalidInputError(f"{q} is not a prime power")
    factors = factorize(q).factors
    if len(factors) != 1:
        raise InvalidInputError(f"{q} is not a prime power")
    return factors[0][0]


@dataclass(frozen=True, slots=True)
class QuadLocalData:
    p: int
    S: int
    splitting: Splitting

    def __post_init__(self) -> None:
        if self.S < 0:
            raise InvalidInputError(f"Serre invariant must be >= 0, got {self.S}")
        require_prime(self.p)


@dataclass(frozen=True, slots=True)
class LocalComponent:
    """One irreducible factor of the local polynomial.

    ``degree`` is ``[E_i : Q_p]``, ``residue_degree`` the residue field degree
    of ``E_i`` and ``serre`` the Serre invariant of the component order.
    """

    degree: int
    residue_degree: int
    serre: int

    def __post_init__(self) -> None:
        if self.degree < 1 or self.residue_degree < 1 or self.degree % self.residue_degree:
            raise LocalDataError(
                f"residue degree {self.residue_degree} must be a positive divisor of degree {self.degree}"
            )
        if self.serre < 0:
            raise LocalDataError(f"Serre invariant must be >= 0, got {self.serre}")


@dataclass(frozen=True, slots=True)
class CubicLocalData:
    q: int
    shape: CubicShape
    components: tuple[LocalComponent, ...]
    delta: int
    rho: int

    def __post_init__(self) -> None:
        _require_prime_power(self.q)
        degrees = sorted(c.degree for c in self.components)
        expected = {
            CubicShape.IRREDUCIBLE_UNRAMIFIED: [3],
            CubicShape.IRREDUCIBLE_RAMIFIED: [3],
            CubicShape.TWO_FACTORS: [1, 2],
            CubicShape.THREE_FACTORS: [1, 1, 1],
        }[self.shape]
        if degrees != expected:
            raise LocalDataError(f"{self.shape.value} needs component degrees {expected}, got {degrees}")
        if self.shape is CubicShape.IRREDUCIBLE_UNRAMIFIED and self.components[0].residue_degree != 3:
            raise LocalDataError("an unramified cubic component has residue degree 3")
        if self.shape is CubicShape.IRREDUCIBLE_RAMIFIED and self.components[0].residue_degree != 1:
            raise LocalDataError("a ramified cubic component has residue degree 1")
        if self.delta != max(c.serre for c in self.components):
            raise LocalDataError(f"delta={self.delta} is not the maximum component Serre invariant")
        if self.rho < 0:
            raise LocalDataError(f"rho must be >= 0, got {self.rho}")
        if self.shape.is_irreducible and self.rho != 0:
            raise LocalDataError("rho vanishes for an irreducible local polynomial")

    @property
    def d(self) -> int:
        return self.delta // 3


@dataclass(frozen=True, slots=True)
class BassLocalData:
    """Data of one place ``w`` of a Bass order: residue size, Serre invariant, residue degree."""

    q_R: int
    S: int
    res_deg: int
    is_domain: bool

    def __post_init__(self) -> None:
        _require_prime_power(self.q_R)
        if self.S < 0:
            raise InvalidInputError(f"Serre invariant must be >= 0, got {self.S}")
        if self.res_deg < 1:
            raise InvalidInputError(f"residue degree must be >= 1, got {self.res_deg}")


@dataclass(frozen=True, slots=True)
class CSCase:
    case_id: CSCaseId
    p: int
    ord_delta: int
    S: int


# ---------- quadratic ----------


def is_fundamental_discriminant(D: int) -> bool:
    if D in (0, 1):
        return False
    if D % 4 == 1:
        return is_squarefree(D)
    if D % 4 == 0:
        core = D // 4
        return core % 4 in (2, 3) and is_squarefree(core)
    return False


def quad_fundamental_discriminant(d: int) -> int:
    """Discriminant of ``Q(sqrt(d))``: ``d`` if ``d = 1 mod 4``, else ``4d``.

    Raises:
        InvalidInputError: If ``d`` is 0, 1 or not squarefree.
    """
    if d in (0, 1) or not is_squarefree(d):
        raise InvalidInputError(f"d must be a squarefree integer other than 0 and 1, got {d}")
    return d if d % 4 == 1 else 4 * d


def serre_quadratic(f: int, p: int) -> int:
    """Serre invariant at ``p`` of the quadratic order of conductor ``f``: ``ord_p(f)``."""
    if f < 1:
        raise InvalidInputError(f"conductor must be >= 1, got {f}")
    return ord_p(f, p)


def quad_splitting(fund_disc: int, p: int) -> Splitting:
    if not is_fundamental_discriminant(fund_disc):
        raise InvalidInputError(f"{fund_disc} is not a fundamental discriminant")
    require_prime(p)
    symbol = kronecker(fund_disc, p)
    if symbol == 0:
        return Splitting.RAMIFIED
    return Splitting.SPLIT if symbol == 1 else Splitting.INERT


def quad_local_data(fund_disc: int, f: int, p: int) -> QuadLocalData:
    return QuadLocalData(p=p, S=serre_quadratic(f, p), splitting=quad_splitting(fund_disc, p))


def torus_count_quadratic(p: int, splitting: Splitting) -> int:
    """Units of ``O_E / p O_E``."""
    match splitting:
        case Splitting.SPLIT:
            return (p - 1) ** 2
        case Splitting.INERT:
            return p * p - 1
        case Splitting.RAMIFIED:
            return p * (p - 1)


def orbital_quadratic(data: QuadLocalData) -> int:
    q = data.p
    per_unit = torus_count_quadratic(q, data.splitting) // (q - 1)
    return 1 + per_unit * ((q**data.S - 1) // (q - 1))


def quad_bass_data(data: QuadLocalData) -> BassLocalData:
    """The same place seen as a Bass place: split places are the non-domain ones."""
    res_deg = 2 if data.splitting is Splitting.INERT else 1
    return BassLocalData(q_R=data.p, S=data.S, res_deg=res_deg, is_domain=data.splitting is not Splitting.SPLIT)


def bass_local_factor(data: BassLocalData) -> int:
    q, s = data.q_R, data.S
    if s == 0:
        return 1
    if not data.is_domain:
        return q**s
    return q**s + data.res_deg * ((q**s - 1) // (q - 1))


# ---------- cubic ----------


def torus_count(q: int, components: tuple[LocalComponent, ...]) -> int:
    """``prod(q**deg * (1 - q**-res_deg))`` over the components, as an integer."""
    return prod(q ** (c.degree - c.residue_degree) * (q**c.residue_degree - 1) for c in components)


def cubic_f_value(data: CubicLocalData) -> Fraction:
    q, delta, d = data.q, data.delta, data.d
    geometric = Fraction(q**delta - 1, q - 1)
    if not data.shape.is_irreducible:
        return geometric
    value = geometric - Fraction(3 * (q ** (delta - d) - 1), q * q - 1)
    if data.shape is CubicShape.IRREDUCIBLE_RAMIFIED:
        value += Fraction((1 + delta - 3 * d) * q ** (delta - d) - 1, q * (q + 1))
    return value


def orbital_cubic(data: CubicLocalData) -> int:
    """``q**rho * (1 + #T / (q-1)**2 * F)``.

    The unscaled term ``#T / (q-1)**2 * F`` is checked before the ``q**rho``
    factor can hide a denominator.

    Raises:
        LocalDataError: If that term is not an integer, which means the local data
            describes no actual order.
    """
    q = data.q
    inner = Fraction(torus_count(q, data.components), (q - 1) ** 2) * cubic_f_value(data)
    if inner.denominator != 1:
        raise LocalDataError(f"non-integral orbital term {inner} before scaling by q**rho for {data}")
    return q**data.rho * (1 + inner.numerator)


# ---------- Cappell-Shaneson family ----------


def cs_invariants(m: int) -> tuple[int, int]:
    """``(Delta_phi, C_phi)`` of ``x^3 - m x^2 + (m-1) x - 1``."""
    delta_phi = m**4 - 10 * m**3 + 31 * m**2 - 30 * m - 23
    c_phi = -2 * m**3 + 9 * m**2 - 9 * m - 27
    return delta_phi, c_phi


def cs_classify_prime(m: int, p: int) -> CSCase:
    """Place a prime ``p | Delta_phi(m)`` into one of the six cases.

    Facts the case split rests on (``p`` never 2 or 3, ``p | C_phi`` forcing
    ``ord_p(Delta_phi)`` into {2, 3, 4}) are checked, never assumed.

    Raises:
        InvalidInputError: If ``p`` is not a prime dividing ``Delta_phi(m)``.
        ClassificationError: If one of those facts fails.
    """
    delta_phi, c_phi = cs_invariants(m)
    ord_delta = ord_p(delta_phi, p)
    if ord_delta == 0:
        raise InvalidInputError(f"{p} does not divide Delta_phi({m}) = {delta_phi}")
    details = {"delta_phi": delta_phi, "c_phi": c_phi, "ord": ord_delta}
    if p in (2, 3):
        raise ClassificationError(f"{p} divides Delta_phi({m}) = {delta_phi}", m=m, p=p, details=details)

    if c_phi % p == 0:
        by_ord = {
            2: (CSCaseId.CASE1_MAXIMAL, 0),
            4: (CSCaseId.CASE1, 1),
            3: (CSCaseId.CASE2, 1),
        }
        if ord_delta not in by_ord:
            raise ClassificationError(
                f"p={p} divides C_phi({m}) but ord_p(Delta_phi) = {ord_delta} is not in {{2, 3, 4}}",
                m=m,
                p=p,
                details=details,
            )
        case_id, serre = by_ord[ord_delta]
    elif ord_delta % 2 == 1:
        case_id, serre = CSCaseId.CASE3_ODD_ORD, (ord_delta - 1) // 2
    elif kronecker(delta_phi // p**ord_delta, p) == -1:
        case_id, serre = CSCaseId.CASE3_EVEN_INERT, ord_delta // 2
    else:
        case_id, serre = CSCaseId.CASE4, ord_delta // 2

    logger.debug("m=%d p=%d ord=%d -> %s (S=%d)", m, p, ord_delta, case_id.value, serre)
    return CSCase(case_id=case_id, p=p, ord_delta=ord_delta, S=serre)


def cs_orbital(case: CSCase) -> int:
    p, s = case.p, case.S
    match case.case_id:
        case CSCaseId.CASE1_MAXIMAL:
            return 1
        case CSCaseId.CASE1:
            return p + 1
        case CSCaseId.CASE2:
            return p
        case CSCaseId.CASE3_ODD_ORD:
            return 1 + p * ((p**s - 1) // (p - 1))
        case CSCaseId.CASE3_EVEN_INERT:
            return 1 + (p + 1) * ((p**s - 1) // (p - 1))
        case CSCaseId.CASE4:
            return p**s


def cs_local_data(case: CSCase) -> CubicLocalData:
    """Local decomposition of a CS order at ``p``; its ``orbital_cubic`` equals ``cs_orbital``."""
    p, s = case.p, case.S
    linear = LocalComponent(degree=1, residue_degree=1, serre=0)
    match case.case_id:
        case CSCaseId.CASE1_MAXIMAL | CSCaseId.CASE1:
            delta = 1 if case.case_id is CSCaseId.CASE1 else 0
            return CubicLocalData(
                q=p,
                shape=CubicShape.IRREDUCIBLE_RAMIFIED,
                components=(LocalComponent(degree=3, residue_degree=1, serre=delta),),
                delta=delta,
                rho=0,
            )
        case CSCaseId.CASE2:
            return CubicLocalData(
                q=p,
                shape=CubicShape.TWO_FACTORS,
                components=(LocalComponent(degree=2, residue_degree=1, serre=0), linear),
                delta=0,
                rho=1,
            )
        case CSCaseId.CASE3_ODD_ORD | CSCaseId.CASE3_EVEN_INERT:
            res_deg = 2 if case.case_id is CSCaseId.CASE3_EVEN_INERT else 1
            return CubicLocalData(
                q=p,
                shape=CubicShape.TWO_FACTORS,
                components=(LocalComponent(degree=2, residue_degree=res_deg, serre=s), linear),
                delta=s,
                rho=0,
            )
        case CSCaseId.CASE4:
            return CubicLocalData(
                q=p,
                shape=CubicShape.THREE_FACTORS,
                components=(linear, linear, linear),
                delta=0,
                rho=s,
            )
