# SPDX-License-Identifier: MIT
"""Minkowski bound and the derived class-number upper bound of a maximal order.

``M = (n! / n**n) * (4/pi)**r2 * sqrt(|disc|)`` contains pi, so its floor is
certified by comparing squares against a rational pi enclosure rather than
evaluated in floating point.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import factorial, floor

from .arith import RationalEnclosure, faulhaber, isqrt_floor, pi_enclosure, power_sum
from .config import get_settings
from .exceptions import InvalidInputError

logger = logging.getLogger("icmbound")

POWER_SUM_CHECK_MAX = 10**5


@dataclass(frozen=True, slots=True)
class FieldShape:
    """Degree, number of complex places and |discriminant| of a number field."""

    degree: int
    r2: int
    abs_disc: int

    def __post_init__(self) -> None:
        if self.degree < 1:
            raise InvalidInputError(f"degree must be >= 1, got {self.degree}")
        if self.r2 < 0 or 2 * self.r2 > self.degree:
            raise InvalidInputError(f"r2 must satisfy 0 <= 2*r2 <= degree, got r2={self.r2}, degree={self.degree}")
        if self.abs_disc < 1:
            raise InvalidInputError(f"abs_disc must be >= 1, got {self.abs_disc}")


@dataclass(frozen=True, slots=True)
class ClassNumberBound:
    shape: FieldShape
    floor_M: int
    bound: int


def minkowski_enclosure(shape: FieldShape, bits: int) -> RationalEnclosure:
    """Enclose ``M**2``; exact (``lo == hi``) for totally real fields."""
    n = shape.degree
    base = Fraction(factorial(n) ** 2 * 16**shape.r2 * shape.abs_disc, n ** (2 * n))
    if shape.r2 == 0:
        return RationalEnclosure(base, base)
    pi = pi_enclosure(bits)
    k = 2 * shape.r2
    return RationalEnclosure(base / pi.hi**k, base / pi.lo**k)


def minkowski_floor(shape: FieldShape, bits: int | None = None) -> int:
    """Certified ``t >= floor(M)``, equal to ``floor(M)`` whenever precision resolves it.

    The candidate is ``isqrt(floor(hi))`` of the ``M**2`` enclosure, which can
    never undershoot. It is accepted as exact once ``t**2 <= lo``. Otherwise the
    pi precision doubles up to ``pi_max_bits``; past the cap the candidate is
    returned as is, which only loosens the bound.
    """
    settings = get_settings()
    bits = settings.pi_bits if bits is None else bits
    while True:
        enclosure = minkowski_enclosure(shape, bits)
        t = isqrt_floor(floor(enclosure.hi))
        if t * t <= enclosure.lo:
            return t
        if bits >= settings.pi_max_bits:
            logger.warning(
                "floor of Minkowski bound for %s unresolved at %d bits; using upper candidate %d",
                shape,
                bits,
                t,
            )
            return t
        bits = min(2 * bits, settings.pi_max_bits)
        logger.debug("Minkowski floor for %s straddles %d; retrying at %d bits", shape, t, bits)


def class_number_upper_bound(shape: FieldShape) -> ClassNumberBound:
    """``sum(eta**(n-1) for eta in 1..floor(M))``, at least 1.

    A class group is never empty, so ``floor(M) == 0`` still yields 1. The sum
    comes from Faulhaber's closed form; direct summation re-checks it only up
    to ``POWER_SUM_CHECK_MAX`` terms.
    """
    floor_M = minkowski_floor(shape)
    n_max = max(floor_M, 1)
    bound = faulhaber(n_max, shape.degree - 1)
    if n_max <= POWER_SUM_CHECK_MAX:
        direct = power_sum(n_max, shape.degree - 1)
        if direct != bound:
            raise ArithmeticError(f"Faulhaber sum {bound} disagrees with direct sum {direct} for {shape}")
    return ClassNumberBound(shape=shape, floor_M=floor_M, bound=bound)
