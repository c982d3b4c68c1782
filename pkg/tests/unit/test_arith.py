# SPDX-License-Identifier: MIT
"""Unit tests for the exact integer and rational primitives."""

from fractions import Fraction
from math import prod

import pytest

from icmbound.arith import (
    Factorization,
    RationalEnclosure,
    bernoulli_plus,
    divisors,
    factorize,
    faulhaber,
    is_perfect_square,
    is_squarefree,
    isqrt_floor,
    kronecker,
    ord_p,
    pi_enclosure,
    power_sum,
    sqrt_upper,
)
from icmbound.exceptions import InvalidInputError

# 36 correct digits of pi, one just below and one just above it.
PI_BELOW = Fraction("3.14159265358979323846264338327950288")
PI_ABOVE = Fraction("3.14159265358979323846264338327950289")


# ---------- factorize / ord_p ----------


@pytest.mark.unit
@pytest.mark.parametrize(
    ("n", "expected"),
    [
        (697, Factorization(sign=1, factors=((17, 1), (41, 1)))),
        (-23, Factorization(sign=-1, factors=((23, 1),))),
        (1, Factorization(sign=1, factors=())),
        (-1, Factorization(sign=-1, factors=())),
        (49, Factorization(sign=1, factors=((7, 2),))),
        (-324, Factorization(sign=-1, factors=((2, 2), (3, 4)))),
    ],
)
def test_factorize_examples(n, expected):
    assert factorize(n) == expected


@pytest.mark.unit
def test_factorize_reconstructs_value():
    for n in (-4729, 360, 2**61 - 1, -(3**5) * 7**2 * 101):
        fac = factorize(n)
        assert fac.sign * prod(p**e for p, e in fac.factors) == n


@pytest.mark.unit
def test_factorize_zero_is_invalid_input():
    with pytest.raises(InvalidInputError):
        factorize(0)


@pytest.mark.unit
def test_factorization_primes():
    assert factorize(2**3 * 5).primes == (2, 5)


@pytest.mark.unit
def test_ord_p():
    assert ord_p(-189, 3) == 3
    assert ord_p(49, 7) == 2
    assert ord_p(49, 5) == 0
    assert ord_p(54, 3) == 3
    assert ord_p(-31, 7) == 0


@pytest.mark.unit
def test_ord_p_rejects_non_prime():
    with pytest.raises(InvalidInputError, match="not a prime"):
        ord_p(12, 4)


# ---------- kronecker ----------


@pytest.mark.unit
@pytest.mark.parametrize(
    ("a", "n", "expected"),
    [
        (-4, 3, -1),
        (8, 3, -1),
        (2, 7, 1),
        (12, 3, 0),
        (5, 2, -1),
        (-3, 2, -1),
        (-7, 2, 1),
        (1, 2, 1),
        (8, 2, 0),
        (-1, -1, -1),
        (3, -1, 1),
    ],
)
def test_kronecker_values(a, n, expected):
    assert kronecker(a, n) == expected


@pytest.mark.unit
def test_kronecker_is_legendre_on_odd_primes():
    p = 23
    squares = {x * x % p for x in range(1, p)}
    for a in range(1, p):
        assert kronecker(a, p) == (1 if a in squares else -1)


@pytest.mark.unit
def test_kronecker_is_multiplicative():
    for n in (3, 8, 15, -7, 20):
        for a in range(-12, 13):
            for b in (-5, 2, 7):
                assert kronecker(a * b, n) == kronecker(a, n) * kronecker(b, n)
    for a in (-4, 5, 8, 12):
        for m, n in ((3, 5), (2, 7), (-1, 9), (4, 11)):
            assert kronecker(a, m * n) == kronecker(a, m) * kronecker(a, n)


@pytest.mark.unit
def test_kronecker_rejects_zero_modulus():
    with pytest.raises(InvalidInputError, match="n = 0"):
        kronecker(3, 0)


# ---------- squares and roots ----------


@pytest.mark.unit
def test_is_perfect_square():
    assert is_perfect_square(49) == (True, 7)
    assert is_perfect_square(0) == (True, 0)
    assert is_perfect_square(50) == (False, None)
    assert is_perfect_square(-4) == (False, None)


@pytest.mark.unit
def test_isqrt_floor_examples():
    assert [isqrt_floor(n) for n in (0, 48, 49, 2777)] == [0, 6, 7, 52]
    with pytest.raises(InvalidInputError):
        isqrt_floor(-1)


@pytest.mark.unit
def test_isqrt_floor_large():
    n = 10**40 + 12345
    r = isqrt_floor(n)
    assert r * r <= n < (r + 1) * (r + 1)


@pytest.mark.unit
def test_sqrt_upper_is_exact_on_squares_and_tight_otherwise():
    assert sqrt_upper(4729 * 4729, 32) == 4729
    upper = sqrt_upper(23, 40)
    assert upper * upper > 23
    assert (upper - Fraction(1, 2**40)) ** 2 < 23


@pytest.mark.unit
def test_is_squarefree_and_divisors():
    assert is_squarefree(-1)
    assert is_squarefree(30)
    assert not is_squarefree(12)
    assert not is_squarefree(0)
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    with pytest.raises(InvalidInputError):
        divisors(0)


# ---------- power sums ----------


@pytest.mark.unit
def test_power_sum_examples():
    assert power_sum(15, 2) == 1240
    assert power_sum(14, 2) == 1015
    assert power_sum(1, 5) == 1
    assert power_sum(3, 1) == 6
    assert power_sum(2, 2) == 5
    assert power_sum(10, 2) == 385


@pytest.mark.unit
def test_bernoulli_plus_convention():
    assert bernoulli_plus(0) == 1
    assert bernoulli_plus(1) == Fraction(1, 2)
    assert bernoulli_plus(2) == Fraction(1, 6)
    assert bernoulli_plus(3) == 0
    assert bernoulli_plus(4) == Fraction(-1, 30)


@pytest.mark.unit
@pytest.mark.parametrize("k", [0, 1, 2, 3, 5, 8])
def test_faulhaber_matches_direct_sum(k):
    for n in (1, 2, 7, 31):
        assert faulhaber(n, k) == power_sum(n, k)


@pytest.mark.unit
def test_power_sum_rejects_empty_range():
    with pytest.raises(InvalidInputError):
        power_sum(0, 2)


# ---------- pi ----------


@pytest.mark.unit
@pytest.mark.parametrize("bits", [16, 64, 100])
def test_pi_enclosure_contains_pi_with_requested_width(bits):
    enclosure = pi_enclosure(bits)
    assert enclosure.lo <= PI_ABOVE
    assert enclosure.hi >= PI_BELOW
    assert enclosure.hi - enclosure.lo <= Fraction(1, 2**bits)


@pytest.mark.unit
def test_pi_enclosures_nest_as_precision_grows():
    for fine, coarse in ((pi_enclosure(128), pi_enclosure(64)), (pi_enclosure(64), pi_enclosure(32))):
        assert coarse.lo <= fine.lo <= fine.hi <= coarse.hi


@pytest.mark.unit
def test_pi_enclosure_rejects_low_precision():
    with pytest.raises(InvalidInputError, match="bits >= 16"):
        pi_enclosure(8)


@pytest.mark.unit
def test_rational_enclosure_rejects_empty_interval():
    with pytest.raises(InvalidInputError):
        RationalEnclosure(Fraction(2), Fraction(1))
