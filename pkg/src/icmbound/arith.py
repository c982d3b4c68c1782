# SPDX-License-Identifier: MIT
"""Exact integer and rational primitives used by every other module.

Nothing here touches floating point. Integers are Python ints (arbitrary
precision), rationals are ``fractions.Fraction``. Number-theoretic heavy
lifting (factorization, BPSW primality, Jacobi symbol, integer roots,
Bernoulli numbers) is delegated to sympy; this module pins down the
conventions the bounds depend on.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import NamedTuple

from sympy import bernoulli, divisors as _divisors, factorint, integer_nthroot, isprime, multiplicity
from sympy.functions.combinatorial.numbers import kronecker_symbol

from .config import MIN_PI_BITS
from .exceptions import InvalidInputError


@dataclass(frozen=True, slots=True)
class Factorization:
    """A nonzero integer as ``sign * prod(p**e)``, primes strictly increasing."""

    sign: int
    factors: tuple[tuple[int, int], ...]

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)


@dataclass(frozen=True, slots=True)
class RationalEnclosure:
    """A closed interval ``[lo, hi]`` with exact rational endpoints."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise InvalidInputError(f"empty enclosure: lo={self.lo} > hi={self.hi}")


class SquareTest(NamedTuple):
    is_square: bool
    root: int | None


def require_prime(p: int) -> None:
    if p < 2 or not isprime(p):
        raise InvalidInputError(f"{p} is not a prime")


def factorize(n: int) -> Factorization:
    """Factor a nonzero integer into sign and ascending prime powers.

    Trial division, Pollard rho and friends via sympy's ``factorint``; every
    returned prime has passed sympy's ``isprime`` (deterministic below 2**64,
    BPSW above, which covers every input in scope).

    Raises:
        InvalidInputError: If ``n == 0``.
    """
    if n == 0:
        raise InvalidInputError("cannot factor 0")
    raw = factorint(abs(n))
    factors = tuple(sorted((int(p), int(e)) for p, e in raw.items()))
    return Factorization(sign=1 if n > 0 else -1, factors=factors)


def ord_p(n: int, p: int) -> int:
    """p-adic valuation of a nonzero integer."""
    if n == 0:
        raise InvalidInputError("ord_p(0) is infinite")
    require_prime(p)
    return int(multiplicity(p, abs(n)))


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol ``(a / n)``; the Legendre symbol when ``n`` is an odd prime."""
    if n == 0:
        raise InvalidInputError("kronecker symbol is undefined for n = 0")
    return int(kronecker_symbol(a, n))


def is_perfect_square(n: int) -> SquareTest:
    if n < 0:
        return SquareTest(False, None)
    root, exact = integer_nthroot(n, 2)
    return SquareTest(True, int(root)) if exact else SquareTest(False, None)


def isqrt_floor(n: int) -> int:
    if n < 0:
        raise InvalidInputError(f"isqrt_floor of negative {n}")
    return int(integer_nthroot(n, 2)[0])


def sqrt_upper(n: int, bits: int) -> Fraction:
    """Certified rational upper bound for sqrt(n), exact when n is a square.

    Otherwise the result exceeds sqrt(n) by at most ``2**-bits``.
    """
    square = is_perfect_square(n)
    if square.is_square:
        assert square.root is not None
        return Fraction(square.root)
    return Fraction(isqrt_floor(n << (2 * bits)) + 1, 1 << bits)


def is_squarefree(n: int) -> bool:
    if n == 0:
        return False
    return all(e == 1 for _, e in factorize(n).factors)


def divisors(n: int) -> list[int]:
    """Positive divisors of a positive integer, ascending."""
    if n < 1:
        raise InvalidInputError(f"divisors of non-positive {n}")
    return [int(d) for d in _divisors(n)]


def power_sum(n_max: int, k: int) -> int:
    """``sum(eta**k for eta in 1..n_max)`` by direct summation."""
    if n_max < 1:
        raise InvalidInputError(f"power_sum needs n_max >= 1, got {n_max}")
    return sum(eta**k for eta in range(1, n_max + 1))


@lru_cache(maxsize=64)
def bernoulli_plus(s: int) -> Fraction:
    """Bernoulli number B_s with the B_1 = +1/2 convention.

    The convention matters: Faulhaber's formula in the form
    ``(1/(k+1)) * sum_s C(k+1, s) B_s n**(k+1-s)`` sums ``1..n`` only with
    B_1 = +1/2. sympy switched conventions between releases, so B_1 is pinned
    here instead of trusting whichever version is installed.
    """
    if s == 1:
        return Fraction(1, 2)
    b = bernoulli(s)
    return Fraction(int(b.p), int(b.q))


def faulhaber(n_max: int, k: int) -> int:
    """Closed form of ``power_sum(n_max, k)`` via Bernoulli numbers (B_1 = +1/2)."""
    if n_max < 1:
        raise InvalidInputError(f"faulhaber needs n_max >= 1, got {n_max}")
    total = sum(
        (comb(k + 1, s) * bernoulli_plus(s) * n_max ** (k + 1 - s) for s in range(k + 1)),
        Fraction(0),
    )
    value = total / (k + 1)
    if value.denominator != 1:
        raise ArithmeticError(f"faulhaber({n_max}, {k}) produced non-integer {value}")
    return value.numerator


def _arctan_inverse(x: int, scale: int, bits: int) -> RationalEnclosure:
    """Enclose arctan(1/x) tightly enough that ``scale * width <= 2**-(bits + 2)``.

    Partial sums of the alternating Taylor series: after the terms
    ``0..k-1`` the tail has the sign of term ``k`` and is bounded by it.
    """
    threshold = Fraction(1, 1 << (bits + 2))
    total = Fraction(0)
    k = 0
    while True:
        term = Fraction(1, (2 * k + 1) * x ** (2 * k + 1))
        if scale * term <= threshold:
            if k % 2 == 0:
                return RationalEnclosure(total, total + term)
            return RationalEnclosure(total - term, total)
        total = total + term if k % 2 == 0 else total - term
        k += 1


@lru_cache(maxsize=32)
def pi_enclosure(bits: int) -> RationalEnclosure:
    """Certified enclosure of pi of width at most ``2**-bits``.

    Machin's formula ``pi = 16 atan(1/5) - 4 atan(1/239)``, each arctangent
    bracketed by consecutive partial sums, endpoints then rounded outward to
    the dyadic grid ``2**-(bits + 2)`` to keep denominators small. Both steps
    are monotone in ``bits``, so higher precision always nests inside lower.
    """
    if bits < MIN_PI_BITS:
        raise InvalidInputError(f"pi_enclosure needs bits >= {MIN_PI_BITS}, got {bits}")
    a5 = _arctan_inverse(5, 16, bits)
    a239 = _arctan_inverse(239, 4, bits)
    lo = 16 * a5.lo - 4 * a239.hi
    hi = 16 * a5.hi - 4 * a239.lo
    grid = 1 << (bits + 2)
    lo_num = (lo.numerator * grid) // lo.denominator
    hi_num = -((-hi.numerator * grid) // hi.denominator)
    return RationalEnclosure(Fraction(lo_num, grid), Fraction(hi_num, grid))
