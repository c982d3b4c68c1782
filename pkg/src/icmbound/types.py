# SPDX-License-Identifier: MIT
"""Report models shared by the library and the CLI.

Big integers (discriminants, bounds) serialize to JSON as decimal strings so
no consumer truncates them to 53 bits. Exact rationals serialize as
``"num/den"`` and carry a ``*_decimal`` companion with 6 significant digits.
Small counters (``r2``, valuations, Serre invariants) stay plain ints.
"""

from __future__ import annotations

from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Annotated, Any, Literal

from pydantic import BaseModel, ConfigDict, Field, PlainSerializer, PlainValidator, TypeAdapter, computed_field

from .local import (
    BassLocalData,
    CSCaseId,
    CubicLocalData,
    CubicShape,
    LocalComponent,
    QuadLocalData,
    Splitting,
)


def _to_fraction(value: Any) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int | str):
        return Fraction(value)
    raise ValueError(f"not an exact rational: {value!r}")


def rational_str(x: Fraction) -> str:
    """``"num/den"``, or just ``"num"`` for integers."""
    return str(x)


def decimal_str(x: Fraction, digits: int = 6) -> str:
    with localcontext() as ctx:
        ctx.prec = digits
        return str(Decimal(x.numerator) / Decimal(x.denominator))


BigInt = Annotated[int, PlainSerializer(str, return_type=str, when_used="json")]
Rational = Annotated[
    Fraction,
    PlainValidator(_to_fraction),
    PlainSerializer(rational_str, return_type=str, when_used="json"),
]


class CSPrimeReport(BaseModel):
    """One prime of ``Delta_phi``: its case, Serre invariant, orbital value and A-factor."""

    model_config = ConfigDict(frozen=True)

    p: BigInt
    case_id: CSCaseId
    label: str
    ord: int
    S: int
    orbital: BigInt
    A_factor: BigInt


class CSReport(BaseModel):
    """Global bound for one Cappell-Shaneson order, with every ingredient it was built from."""

    model_config = ConfigDict(frozen=True)

    m: int
    delta_phi: BigInt
    c_phi: BigInt
    prime_cases: list[CSPrimeReport]
    A: BigInt
    abs_delta_E: BigInt
    delta_E_sign: Literal[-1, 1]
    r2: Literal[0, 1]
    floor_M: BigInt
    classnum_bound: BigInt
    bound_main: BigInt
    bound_closed_form: Rational
    bound_simple: Rational | None = None

    @computed_field  # type: ignore[prop-decorator]
    @property
    def bound_closed_form_decimal(self) -> str:
        return decimal_str(self.bound_closed_form)

    @computed_field  # type: ignore[prop-decorator]
    @property
    def bound_simple_decimal(self) -> str | None:
        return None if self.bound_simple is None else decimal_str(self.bound_simple)

    @property
    def prime_case_summary(self) -> str:
        return ";".join(f"{c.p}:{c.label}" for c in self.prime_cases)


class QuadLocalFactor(BaseModel):
    model_config = ConfigDict(frozen=True)

    p: BigInt
    S: int
    splitting: Splitting
    factor: BigInt


class ClassNumberInput(BaseModel):
    """Where the ``#Cl(O_E)`` factor came from.

    ``exact`` values are supplied by the caller or computed by the form oracle;
    ``bound`` values come from the Minkowski sum.
    """

    model_config = ConfigDict(frozen=True)

    kind: Literal["exact", "bound"]
    source: Literal["supplied", "oracle", "minkowski"]
    value: BigInt


class QuadReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    d: BigInt
    fund_disc: BigInt
    f: BigInt
    local_factors: list[QuadLocalFactor]
    class_number_input: ClassNumberInput
    bound_bass: BigInt
    cl_R: BigInt | None = None
    bound_chl: BigInt | None = None
    conductor_factor_count: BigInt
    icm_exact: BigInt | None = None


class OverorderEntry(BaseModel):
    model_config = ConfigDict(frozen=True)

    conductor: BigInt
    discriminant: BigInt
    class_number: BigInt
    units: int


class OverorderLattice(BaseModel):
    """All orders between ``Z + f O_E`` and ``O_E``, one per divisor of ``f``."""

    model_config = ConfigDict(frozen=True)

    d: BigInt
    f: BigInt
    entries: list[OverorderEntry]


class YunCheck(BaseModel):
    """Both sides of the orbital-product / weighted-overorder-sum identity."""

    model_config = ConfigDict(frozen=True)

    d: BigInt
    f: BigInt
    lhs: BigInt
    rhs: Rational
    holds: bool


class AuditRecord(BaseModel):
    model_config = ConfigDict(frozen=True)

    d: BigInt
    f: BigInt
    icm_exact: BigInt
    bound_bass: BigInt
    bound_chl: BigInt


class SweepRow(BaseModel):
    """One CSV/JSONL line of a sweep; fields reproduce ``cs_bound(m)`` exactly."""

    model_config = ConfigDict(frozen=True)

    m: int
    delta_phi: BigInt
    c_phi: BigInt
    abs_delta_E: BigInt
    r2: int
    A: BigInt
    classnum_bound: BigInt
    bound_main: BigInt
    bound_simple: Rational | None = None
    prime_case_summary: str

    @classmethod
    def from_report(cls, report: CSReport) -> SweepRow:
        return cls(
            m=report.m,
            delta_phi=report.delta_phi,
            c_phi=report.c_phi,
            abs_delta_E=report.abs_delta_E,
            r2=report.r2,
            A=report.A,
            classnum_bound=report.classnum_bound,
            bound_main=report.bound_main,
            bound_simple=report.bound_simple,
            prime_case_summary=report.prime_case_summary,
        )


SWEEP_COLUMNS: tuple[str, ...] = tuple(SweepRow.model_fields)


class ClassNumberReport(BaseModel):
    """Minkowski floor and the class-number bound derived from it."""

    model_config = ConfigDict(frozen=True)

    degree: int
    r2: int
    abs_disc: BigInt
    floor_M: BigInt
    bound: BigInt


class ReducedForm(BaseModel):
    model_config = ConfigDict(frozen=True)

    a: BigInt
    b: BigInt
    c: BigInt


class HFormReport(BaseModel):
    """Reduced primitive forms of one negative discriminant."""

    model_config = ConfigDict(frozen=True)

    disc: BigInt
    forms: list[ReducedForm]
    class_number: BigInt


# ---------- caller-supplied local data ----------


class QuadPlace(BaseModel):
    """A place of a quadratic order: the prime, its Serre invariant and splitting."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["quadratic"] = "quadratic"
    p: int
    S: int
    splitting: Splitting

    def to_local(self) -> QuadLocalData:
        return QuadLocalData(p=self.p, S=self.S, splitting=self.splitting)


class BassPlace(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: Literal["bass"] = "bass"
    q_R: int
    S: int
    res_deg: int
    is_domain: bool

    def to_local(self) -> BassLocalData:
        return BassLocalData(q_R=self.q_R, S=self.S, res_deg=self.res_deg, is_domain=self.is_domain)


class CubicComponent(BaseModel):
    model_config = ConfigDict(frozen=True)

    degree: int
    residue_degree: int
    serre: int


class CubicPlace(BaseModel):
    """A place of a cubic order, described by its local decomposition."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["cubic"] = "cubic"
    q: int
    shape: CubicShape
    components: list[CubicComponent]
    delta: int
    rho: int = 0

    def to_local(self) -> CubicLocalData:
        return CubicLocalData(
            q=self.q,
            shape=self.shape,
            components=tuple(
                LocalComponent(degree=c.degree, residue_degree=c.residue_degree, serre=c.serre)
                for c in self.components
            ),
            delta=self.delta,
            rho=self.rho,
        )


Place = Annotated[QuadPlace | BassPlace | CubicPlace, Field(discriminator="kind")]
PLACES_ADAPTER: TypeAdapter[list[Place]] = TypeAdapter(list[Place])


class LocalValue(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: Literal["quadratic", "bass", "cubic"]
    q: BigInt
    value: BigInt


class LocalDataReport(BaseModel):
    """``class_number * prod(value)`` over caller-supplied places."""

    model_config = ConfigDict(frozen=True)

    class_number: BigInt
    places: list[LocalValue]
    bound: BigInt
