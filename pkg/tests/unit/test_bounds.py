# SPDX-License-Identifier: MIT
"""Unit tests for the global bounds of Cappell-Shaneson and quadratic orders."""

import time
from fractions import Fraction
from math import prod

import pytest

from icmbound.arith import factorize
from icmbound.bounds import (
    cs_A,
    cs_bound,
    cs_delta_E,
    cs_delta_phi_reconstruction,
    local_data_bound,
    quad_bound,
    quad_chl_bound,
)
from icmbound.exceptions import InvalidInputError, LocalDataError
from icmbound.local import (
    BassLocalData,
    CSCaseId,
    CubicLocalData,
    CubicShape,
    LocalComponent,
    QuadLocalData,
    Splitting,
    cs_classify_prime,
    cs_invariants,
    cs_local_data,
)

# ---------- Cappell-Shaneson ----------


@pytest.mark.unit
def test_cs_bound_m6_is_trivial():
    report = cs_bound(6)

    assert report.delta_phi == 49
    assert report.c_phi == -189
    assert report.A == 1
    assert report.abs_delta_E == 49
    assert report.r2 == 0
    assert report.delta_E_sign == 1
    assert report.bound_main == 1
    assert report.bound_simple is None
    assert [(c.p, c.case_id) for c in report.prime_cases] == [(7, CSCaseId.CASE1_MAXIMAL)]
    assert report.prime_case_summary == "7:C1max"


@pytest.mark.unit
def test_cs_bound_m0_has_complex_place():
    report = cs_bound(0)

    assert report.delta_phi == -23
    assert report.abs_delta_E == 23
    assert report.delta_E_sign == -1
    assert report.r2 == 1
    assert report.bound_main == 1


@pytest.mark.unit
def test_cs_bound_m11_reports_simple_bound():
    report = cs_bound(11)

    assert report.delta_phi == 4729
    assert report.floor_M == 15
    assert report.classnum_bound == 1240
    assert report.bound_main == 1240
    assert report.bound_simple == Fraction(44726882, 243)
    assert report.bound_main <= report.bound_closed_form <= report.bound_simple


@pytest.mark.unit
def test_cs_delta_e_and_a():
    assert cs_delta_E(1) == (31, -1)
    assert cs_delta_E(8) == (697, 1)
    A, reports = cs_A(8)
    assert A == 1
    assert [r.p for r in reports] == [17, 41]


@pytest.mark.unit
@pytest.mark.parametrize("m", range(-40, 41))
def test_cs_bound_structure(m):
    report = cs_bound(m)
    abs_phi = abs(report.delta_phi)

    assert abs_phi % report.abs_delta_E == 0
    assert cs_delta_phi_reconstruction(m) == abs_phi
    assert report.A == prod(c.A_factor for c in report.prime_cases)
    assert report.bound_main == report.classnum_bound * report.A
    assert report.bound_main <= report.bound_closed_form
    if report.bound_simple is not None:
        assert report.bound_main <= report.bound_simple


@pytest.mark.unit
def test_cs_report_json_uses_strings_for_big_integers():
    data = cs_bound(11).model_dump(mode="json")

    assert data["delta_phi"] == "4729"
    assert data["bound_simple"] == "44726882/243"
    assert data["bound_simple_decimal"] == "184061"
    assert data["r2"] == 0
    assert data["prime_cases"][0]["case_id"] == "Case3OddOrd"


# ---------- quadratic ----------


@pytest.mark.unit
def test_quad_bound_real_with_supplied_class_numbers():
    report = quad_bound(2, 3, class_number=1, cl_R=1)

    assert report.fund_disc == 8
    assert [(lf.p, lf.S, lf.splitting) for lf in report.local_factors] == [(3, 1, Splitting.INERT)]
    assert report.bound_bass == 5
    assert report.bound_chl == 2
    assert report.icm_exact is None
    assert report.class_number_input.source == "supplied"


@pytest.mark.unit
def test_quad_bound_imaginary_uses_oracle():
    report = quad_bound(-1, 9)

    assert report.class_number_input.kind == "exact"
    assert report.class_number_input.source == "oracle"
    assert report.bound_bass == 17
    assert report.cl_R == 6
    assert report.conductor_factor_count == 3
    assert report.bound_chl == 18
    assert report.icm_exact == 9


@pytest.mark.unit
def test_quad_bound_real_without_cl_r_omits_chl_bound():
    report = quad_bound(5, 2)

    assert report.class_number_input.kind == "bound"
    assert report.class_number_input.source == "minkowski"
    assert report.bound_chl is None


@pytest.mark.unit
def test_quad_bound_maximal_order_is_class_number():
    report = quad_bound(-23, 1)

    assert report.local_factors == []
    assert report.bound_bass == 3
    assert report.bound_chl == 3
    assert report.icm_exact == 3


@pytest.mark.unit
def test_quad_chl_bound():
    assert quad_chl_bound(-1, 3) == 4
    assert quad_chl_bound(2, 3, cl_R=1) == 2
    with pytest.raises(InvalidInputError, match="must be supplied"):
        quad_chl_bound(2, 3)


@pytest.mark.unit
@pytest.mark.parametrize(
    ("d", "f", "kwargs"),
    [(4, 1, {}), (-1, 0, {}), (-1, 3, {"class_number": 0}), (-1, 3, {"cl_R": 0})],
)
def test_quad_bound_rejects_invalid_input(d, f, kwargs):
    with pytest.raises(InvalidInputError):
        quad_bound(d, f, **kwargs)


@pytest.mark.slow
def test_cs_bound_large_m_stays_fast():
    start = time.perf_counter()
    report = cs_bound(10**5)
    elapsed = time.perf_counter() - start

    n = report.floor_M
    assert report.classnum_bound == n * (n + 1) * (2 * n + 1) // 6
    assert report.bound_main == report.classnum_bound * report.A
    assert elapsed < 10


# ---------- caller-supplied local data ----------


@pytest.mark.unit
def test_local_data_bound_matches_quad_bound():
    report = local_data_bound(1, [QuadLocalData(p=3, S=2, splitting=Splitting.INERT)])

    assert report.bound == quad_bound(-1, 9).bound_bass == 17
    assert [(v.kind, v.q, v.value) for v in report.places] == [("quadratic", 3, 17)]


@pytest.mark.unit
def test_local_data_bound_mixes_place_kinds():
    places = [
        BassLocalData(q_R=3, S=1, res_deg=2, is_domain=True),
        CubicLocalData(
            q=5,
            shape=CubicShape.IRREDUCIBLE_RAMIFIED,
            components=(LocalComponent(degree=3, residue_degree=1, serre=1),),
            delta=1,
            rho=0,
        ),
    ]

    report = local_data_bound(2, places)

    assert [v.value for v in report.places] == [5, 6]
    assert report.bound == 60


@pytest.mark.unit
def test_local_data_bound_without_places_is_the_class_number():
    assert local_data_bound(7, []).bound == 7


@pytest.mark.unit
@pytest.mark.parametrize("m", [-7, 0, 1, 8, 11, 23, 40])
def test_local_data_bound_reproduces_cs_bound(m):
    report = cs_bound(m)
    places = [cs_local_data(cs_classify_prime(m, p)) for p in factorize(cs_invariants(m)[0]).primes]

    assert local_data_bound(report.classnum_bound, places).bound == report.bound_main


@pytest.mark.unit
def test_local_data_bound_rejects_bad_input():
    with pytest.raises(InvalidInputError, match="class number"):
        local_data_bound(0, [])
    bad_cubic = CubicLocalData(
        q=5,
        shape=CubicShape.IRREDUCIBLE_UNRAMIFIED,
        components=(LocalComponent(degree=3, residue_degree=3, serre=1),),
        delta=1,
        rho=0,
    )
    with pytest.raises(LocalDataError):
        local_data_bound(1, [bad_cubic])
