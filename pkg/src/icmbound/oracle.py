# SPDX-License-Identifier: MIT
"""Brute-force ground truth for imaginary quadratic orders.

Class numbers come from enumerating reduced positive definite primitive forms.
Because quadratic orders are Bass, every overorder ``Z + f' O_E`` with
``f' | f`` contributes exactly its class group to the ideal class monoid of
``Z + f O_E``; summing those class numbers gives the monoid's exact size.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, prod

from .arith import divisors, factorize, isqrt_floor
from .exceptions import BoundViolationError, InvalidInputError
from .local import orbital_quadratic, quad_fundamental_discriminant, quad_local_data
from .types import AuditRecord, OverorderEntry, OverorderLattice, YunCheck


@dataclass(frozen=True, slots=True)
class QuadForm:
    """The binary quadratic form ``a x^2 + b xy + c y^2``."""

    a: int
    b: int
    c: int

    @property
    def discriminant(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    @property
    def is_reduced(self) -> bool:
        if not (abs(self.b) <= self.a <= self.c):
            return False
        return self.b >= 0 or (abs(self.b) != self.a and self.a != self.c)

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)


def _require_order_discriminant(D: int) -> None:
    if D >= 0 or D % 4 not in (0, 1):
        raise InvalidInputError(f"D must be negative and congruent to 0 or 1 mod 4, got {D}")


def _require_imaginary(d: int) -> int:
    fund = quad_fundamental_discriminant(d)
    if d > 0:
        raise InvalidInputError(f"the form oracle covers imaginary quadratic orders only, got d={d}")
    return fund


def reduced_forms(D: int) -> list[QuadForm]:
    """One reduced primitive form per class of discriminant ``D``.

    Ordered by ``a`` ascending, then ``b`` descending.
    """
    _require_order_discriminant(D)
    forms: list[QuadForm] = []
    for a in range(1, isqrt_floor(-D // 3) + 1):
        start = a if (a - D) % 2 == 0 else a - 1
        for b in range(start, -a - 1, -2):
            num = b * b - D
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a or (b < 0 and (-b == a or a == c)):
                continue
            if gcd(a, b, c) != 1:
                continue
            forms.append(QuadForm(a, b, c))
    return forms


@lru_cache(maxsize=None)
def form_class_number(D: int) -> int:
    return len(reduced_forms(D))


def unit_count(D: int) -> int:
    """Number of roots of unity in the order of discriminant ``D < 0``."""
    _require_order_discriminant(D)
    return {-3: 6, -4: 4}.get(D, 2)


def overorder_lattice(d: int, f: int) -> OverorderLattice:
    fund = _require_imaginary(d)
    if f < 1:
        raise InvalidInputError(f"conductor must be >= 1, got {f}")
    entries = [
        OverorderEntry(
            conductor=g,
            discriminant=g * g * fund,
            class_number=form_class_number(g * g * fund),
            units=unit_count(g * g * fund),
        )
        for g in divisors(f)
    ]
    return OverorderLattice(d=d, f=f, entries=entries)


def icm_exact(d: int, f: int) -> int:
    """Exact size of the ideal class monoid of ``Z + f O_E``."""
    return sum(entry.class_number for entry in overorder_lattice(d, f).entries)


def units_weighted_sum(d: int, f: int) -> int:
    """``sum(h(O) * [O_E^x : O^x])`` over the overorders ``O``.

    Equals ``#Cl(O_E)`` times the product of local orbital values, and is at
    least ``icm_exact`` since every unit index is >= 1.
    """
    lattice = overorder_lattice(d, f)
    w_fund = lattice.entries[0].units
    total = 0
    for entry in lattice.entries:
        if w_fund % entry.units:
            raise ArithmeticError(f"unit index {w_fund}/{entry.units} is not an integer for D={entry.discriminant}")
        total += entry.class_number * (w_fund // entry.units)
    return total


def yun_check(d: int, f: int) -> YunCheck:
    """Compare the local orbital product with the unit-weighted overorder sum over ``h(O_E)``."""
    fund = _require_imaginary(d)
    primes = factorize(f).primes if f > 1 else ()
    lhs = prod(orbital_quadratic(quad_local_data(fund, f, p)) for p in primes)
    rhs = Fraction(units_weighted_sum(d, f), form_class_number(fund))
    return YunCheck(d=d, f=f, lhs=lhs, rhs=rhs, holds=lhs == rhs)


def bound_audit(d: int, f: int) -> AuditRecord:
    """Check ``icm_exact`` against both global bounds for ``Z + f O_E``.

    Raises:
        BoundViolationError: If the exact size exceeds either bound.
    """
    from .bounds import quad_bound

    _require_imaginary(d)
    report = quad_bound(d, f)
    assert report.icm_exact is not None and report.bound_chl is not None
    record = AuditRecord(
        d=d,
        f=f,
        icm_exact=report.icm_exact,
        bound_bass=report.bound_bass,
        bound_chl=report.bound_chl,
    )
    if record.icm_exact > record.bound_bass or record.icm_exact > record.bound_chl:
        raise BoundViolationError(
            f"ICM size {record.icm_exact} exceeds a bound for d={d}, f={f} "
            f"(bass={record.bound_bass}, chl={record.bound_chl})",
            record=record,
        )
    return record
