import cmath
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from powersieve import oracles
from powersieve.expsums import (
    ExpSumParams,
    chalk_smith_check,
    completion_bound,
    completion_sum,
    crt_cd,
    factored_rhs,
    micro_grid_params,
    random_params,
    s1,
    s2,
    s2_bound_grid,
    s_full,
    verify_factorization,
)


def test_s2_forced_values():
    # r | d, r does not divide c: the beta sum collapses to -1
    for r, s, c in ((7, 3, 3), (13, 2, 5), (11, 2, 1)):
        for sign in (1, -1):
            assert abs(s2(r, 1, s, c, 0, sign) - (-1)) < 1e-12
            assert abs(s2(r, 1, s, c, r, sign) - (-1)) < 1e-12
    # r | c and r | d: every unit alpha contributes 1
    assert abs(s2(7, 1, 3, 0, 0, 1) - 6) < 1e-12
    assert abs(s2(13, 1, 2, 13, 26, -1) - 12) < 1e-12


@pytest.mark.parametrize(
    "r,f,s,c,d,sign",
    [
        (7, 1, 3, 2, 3, 1),
        (13, 1, 2, 5, 1, -1),
        (5, 1, 4, 4, 2, 1),
        (3, 2, 3, 4, 7, 1),
        (2, 3, 2, 3, 5, -1),
        (5, 2, 2, 11, 3, 1),
        (3, 3, 4, 2, 20, -1),
    ],
)
def test_s2_matches_double_loop_oracle(r, f, s, c, d, sign, backend):
    m = r**f
    assert abs(s2(r, f, s, c, d, sign) - oracles.s2_bruteforce(m, s, c, d, sign)) < 1e-10


def test_s2_prime_power_equals_unit_form():
    # for f >= 2 the double loop must agree with the beta-elimination form:
    # beta is the unique sign * alpha^(-s) class mod r^f over units
    for r, f, s, c, d, sign in ((3, 2, 3, 4, 7, 1), (2, 3, 2, 3, 5, -1), (5, 2, 2, 1, 2, 1)):
        m = r**f
        unit_form = 0j
        for a in range(1, m + 1):
            if a % r == 0:
                continue
            b = sign * pow(a, -s, m) % m
            unit_form += cmath.exp(2j * cmath.pi * ((c * a + d * b) % m) / m)
        assert abs(s2(r, f, s, c, d, sign) - unit_form) < 1e-10


def test_s2_explicit_bound_example():
    val = abs(s2(7, 1, 3, 2, 3, 1))
    assert val <= 3 * 4 * math.sqrt(7) + 16


def test_s1_row_structure():
    # c = d = 0: the alpha = 0 row survives in full, everything else cancels,
    # so |S1| = p exactly (direct-summation oracle agrees)
    for p, s, sign in ((7, 3, 1), (13, 2, -1), (19, 3, 1)):
        val = s1(p, s, 0, 0, sign)
        assert abs(abs(val) - p) < 1e-9
        assert abs(val - oracles.s1_bruteforce(p, s, 0, 0, sign)) < 1e-9
    # p | d makes |S1| = p for any c
    assert abs(abs(s1(13, 2, 5, 0, -1)) - 13) < 1e-9


@pytest.mark.parametrize("p,s,c,d,sign", [(7, 3, 1, 1, 1), (13, 2, 5, 0, -1), (7, 3, 6, 2, -1)])
def test_s1_matches_oracle(p, s, c, d, sign, backend):
    assert abs(s1(p, s, c, d, sign) - oracles.s1_bruteforce(p, s, c, d, sign)) < 1e-9


@pytest.mark.parametrize("p,s", [(7, 3), (13, 2)])
def test_s1_trivial_bound_full_grid(p, s):
    cap = (s * (s + 1) + 2) * p
    for sign in (1, -1):
        for c in range(p):
            for d in range(p):
                assert abs(s1(p, s, c, d, sign)) <= cap


def test_s1_gauss_split_inequality():
    # |S1(p; c, d)| <= |S2(p; c, d)| sqrt(p) + 2p whenever p divides neither
    for p, s in ((7, 3), (13, 2), (19, 3)):
        for sign in (1, -1):
            for c in range(1, p, 2):
                for d in range(1, p, 3):
                    lhs = abs(s1(p, s, c, d, sign))
                    rhs = abs(s2(p, 1, s, c, d, sign)) * math.sqrt(p) + 2 * p
                    assert lhs <= rhs + 1e-9


def test_crt_cd_zero_maps_to_zero():
    assert crt_cd(9, 7, 13, 0, 0) == (0, 0)


def test_crt_cd_u_one_two_congruences():
    c, d = crt_cd(1, 7, 13, 5, 11)
    assert (7 * c - 5) % 13 == 0 and (13 * c - 5) % 7 == 0
    assert (7 * d - 11) % 13 == 0 and (13 * d - 11) % 7 == 0


def test_crt_cd_exhaustive_oracle():
    u, p, q, gamma, delta = 9, 7, 13, 5, 11
    m = u * p * q
    c, d = crt_cd(u, p, q, gamma, delta)
    sols_c = [
        cc
        for cc in range(m)
        if (q * u * cc - gamma) % p == 0
        and (p * u * cc - gamma) % q == 0
        and (p * q * cc - gamma) % u == 0
    ]
    assert sols_c == [c]
    sols_d = [
        dd
        for dd in range(m)
        if (q * u * dd - delta) % p == 0
        and (p * u * dd - delta) % q == 0
        and (p * q * dd - delta) % u == 0
    ]
    assert sols_d == [d]


@given(st.integers(min_value=0, max_value=10**6), st.integers(min_value=0, max_value=10**6))
@settings(max_examples=50, deadline=None)
def test_crt_cd_gcd_transfer(gamma, delta):
    u, p, q = 12, 7, 13
    m = u * p * q
    c, d = crt_cd(u, p, q, gamma, delta)
    assert math.gcd(c, m) == math.gcd(gamma, m)
    assert math.gcd(d, m) == math.gcd(delta, m)


def test_crt_cd_rejects_common_factor():
    with pytest.raises(ValueError):
        crt_cd(7, 7, 13, 1, 1)


def test_params_validation():
    with pytest.raises(ValueError):
        ExpSumParams(1, 7, 7, 3, 0, 0, 1)  # p = q
    with pytest.raises(ValueError):
        ExpSumParams(1, 7, 11, 5, 0, 0, 1)  # 11 inadmissible for s = 5
    with pytest.raises(ValueError):
        ExpSumParams(14, 7, 13, 3, 0, 0, 1)  # u shares a factor with p
    with pytest.raises(ValueError):
        ExpSumParams(1, 7, 13, 3, 0, 0, 2)  # bad sign
    with pytest.raises(ValueError):
        s_full(ExpSumParams(100, 7, 13, 3, 0, 0, 1))  # upq over the cap


def test_s_full_u_one_splits_into_s1_product():
    for p, q, s, sign in ((7, 13, 3, 1), (13, 19, 3, -1)):
        params = ExpSumParams(1, p, q, s, 0, 0, sign)
        lhs = s_full(params)
        rhs = s1(p, s, 0, 0, sign) * s1(q, s, 0, 0, sign).conjugate()
        assert abs(lhs - rhs) < 1e-8


@pytest.mark.parametrize(
    "params",
    [
        ExpSumParams(4, 7, 13, 3, 1, 2, 1),
        ExpSumParams(9, 7, 13, 3, 0, 5, -1),
        ExpSumParams(6, 7, 13, 3, 5, 0, -1),
    ],
)
def test_s_full_matches_bruteforce(params, backend):
    assert abs(s_full(params) - oracles.s_full_bruteforce(params)) < 1e-8


def test_factorization_residuals_tiny():
    for params in (
        ExpSumParams(8, 7, 13, 3, 3, 7, 1),
        ExpSumParams(8, 7, 13, 3, 3, 7, -1),
        ExpSumParams(15, 7, 13, 4, 11, 4, 1),
        ExpSumParams(1, 7, 13, 2, 4, 9, -1),
    ):
        assert verify_factorization(params) <= 1e-6


def test_factored_rhs_requires_cofactor_twist():
    # feeding each prime-power factor the raw (c, d) must break the identity
    # for u with two distinct primes; this pins the validated reading
    params = ExpSumParams(15, 7, 13, 4, 11, 4, 1)
    c, d = crt_cd(params.u, params.p, params.q, params.gamma, params.delta)
    naive = s1(params.p, 4, c, d, 1) * s1(params.q, 4, -c, -d, 1).conjugate()
    for r, f in ((3, 1), (5, 1)):
        naive *= s2(r, f, 4, c, d, 1)
    lhs = s_full(params)
    assert abs(lhs - naive) / (1 + abs(lhs)) > 1e-3
    assert abs(lhs - factored_rhs(params)) / (1 + abs(lhs)) <= 1e-6


def test_factored_rhs_q_factor_must_be_the_full_character_sum():
    # swapping the q-factor for the constrained (s2-style) sum fails
    params = ExpSumParams(6, 7, 13, 3, 1, 2, 1)
    c, d = crt_cd(params.u, params.p, params.q, params.gamma, params.delta)
    wrong = (
        s1(params.p, 3, c, d, 1)
        * oracles.s2_bruteforce(params.q, 3, -c, -d, 1).conjugate()
    )
    for r, f in ((2, 1), (3, 1)):
        inv = pow(params.u // r**f, -1, r**f)
        wrong *= s2(r, f, 3, c * inv, d * inv, 1)
    lhs = s_full(params)
    assert abs(lhs - wrong) / (1 + abs(lhs)) > 1e-3


def test_micro_grid_size_and_spot():
    grid = micro_grid_params()
    assert len(grid) == 6 * 2 * 9 * 2
    for params in grid[::37]:
        assert verify_factorization(params) <= 1e-6


def test_random_params_deterministic():
    a = random_params(count=25, seed=42)
    b = random_params(count=25, seed=42)
    assert a == b
    assert any(len(oracles.factorize_naive(t.u)) >= 2 for t in random_params(200, 42))


def test_completion_sum_trivial_cases():
    assert completion_sum(3, 17, 202, 101) == complex(14)  # freq = 0 mod m
    assert abs(completion_sum(0, 101, 1, 101)) < 1e-12  # full period
    assert completion_sum(5, 5, 3, 7) == 0


def test_completion_sum_oracle_value():
    val = completion_sum(10, 25, 3, 101)
    direct = oracles.completion_sum_direct(10, 25, 3, 101)
    assert abs(val - direct) < 1e-12


@given(
    st.integers(min_value=1, max_value=2000),
    st.integers(min_value=-4000, max_value=4000),
    st.integers(min_value=-100, max_value=1500),
    st.integers(min_value=0, max_value=250),
)
@settings(max_examples=300, deadline=None)
def test_completion_sum_closed_form_property(modulus, freq, lo, length):
    hi = lo + length
    closed = completion_sum(lo, hi, freq, modulus)
    direct = oracles.completion_sum_direct(lo, hi, freq, modulus)
    assert abs(closed - direct) < 1e-9
    assert abs(closed) <= completion_bound(lo, hi, freq, modulus) + 1e-9


def test_completion_sum_rejects_zero_modulus():
    with pytest.raises(ValueError):
        completion_sum(0, 5, 1, 0)


@pytest.mark.parametrize("p,s,sign", [(7, 3, 1), (13, 2, -1), (31, 5, 1)])
def test_chalk_smith_grid(p, s, sign, backend):
    rep = chalk_smith_check(p, s, sign)
    assert rep.violations == 0
    assert rep.pairs == (p - 1) ** 2
    assert 0.0 < rep.max_ratio <= 1.0


def test_chalk_smith_matches_bruteforce_cells():
    rep_bound = 2 * 3 * math.sqrt(7) + 9
    for c in range(1, 7):
        for d in range(1, 7):
            assert abs(oracles.s2_bruteforce(7, 2, c, d, 1)) <= rep_bound


def test_s2_bound_grid_includes_zero_rows(backend):
    rep = s2_bound_grid(13, 3, 1)
    assert rep.pairs == 13 * 13
    assert rep.violations == 0


def test_grid_caps():
    with pytest.raises(ValueError):
        chalk_smith_check(503, 2, 1)
