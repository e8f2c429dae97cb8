import math

import pytest

from powersieve.arithmetic import factorize
from powersieve.characters import order_s_character
from powersieve.sieve import (
    SievePrimeSet,
    Weights,
    admissible_primes,
    diagonal_term,
    inner_count_identity,
    support_cap_counterexample,
    sieve_lhs,
    sieve_rhs,
    sigma_quantity,
    twin_pair_weight,
    v_bounds,
)


def pset_of(s, primes):
    return SievePrimeSet(s, tuple(primes), 0, max(primes), 1, 0.0)


def test_admissible_primes_examples():
    assert admissible_primes(2, 2, 20).primes == (3, 5, 7, 11, 13, 17, 19)
    assert admissible_primes(3, 2, 20).primes == (7, 13, 19)
    assert admissible_primes(3, 2, 20, exclude=7).primes == (13, 19)
    with pytest.raises(ValueError):
        admissible_primes(2, 20, 20)


def test_admissible_primes_density_ratio():
    ps = admissible_primes(2, 100, 10000)
    assert ps.density_ratio == ps.P * math.log(10000) / 10000
    assert 0.5 < ps.density_ratio < 2.0  # P ~ Q / log Q at this scale


def test_weights_validation():
    with pytest.raises(ValueError):
        Weights(2, {0: 1.0})
    with pytest.raises(ValueError):
        Weights(2, {3: -0.5})
    with pytest.raises(ValueError):
        Weights(1, {3: 1.0})


def test_sieve_lhs_examples():
    assert sieve_lhs(Weights.point(2, 1)) == 1.0
    assert sieve_lhs(Weights(3, {8: 1.0, 9: 1.0})) == 1.0
    # floor(sqrt(1000)) = 31 perfect squares in [1, 1000]
    assert sieve_lhs(Weights.interval(2, 1, 1000)) == 31.0


def test_sieve_rhs_point_one():
    for pset in (pset_of(2, (3, 5, 7)), pset_of(3, (7, 13))):
        rhs = sieve_rhs(Weights.point(pset.s, 1), pset)
        P = pset.P
        assert rhs.term1 == 1.0 / P
        assert abs(rhs.term2 - P * (P - 1) / P**2) < 1e-12
        assert rhs.support_ok  # 1 < e^P


def test_sieve_rhs_requires_two_primes():
    with pytest.raises(ValueError):
        sieve_rhs(Weights.point(2, 1), pset_of(2, (3,)))


def test_sieve_rhs_matches_direct_double_sum():
    w = Weights.interval(2, 1, 100)
    pset = admissible_primes(2, 10, 40)
    chars = {p: order_s_character(p, 2) for p in pset.primes}
    acc = 0.0
    for p in pset.primes:
        for q in pset.primes:
            if p == q:
                continue
            z = sum(
                wt * chars[p](n) * chars[q](n).conjugate()
                for n, wt in w.support.items()
            )
            acc += abs(z)
    rhs = sieve_rhs(w, pset)
    assert abs(rhs.term1 - 100 / pset.P) < 1e-12
    assert abs(rhs.term2 - acc / pset.P**2) < 1e-9


def test_support_cap_counterexample():
    rep = support_cap_counterexample(pset_of(2, (3, 5)))
    assert rep.m == 15 and rep.point == 225
    assert rep.lhs == 1.0
    assert (rep.term1, rep.term2) == (0.5, 0.0)
    assert rep.support_violated  # 225 >= e^2
    assert rep.passed

    rep3 = support_cap_counterexample(pset_of(3, (7, 13)))
    assert rep3.lhs == 1.0 and (rep3.term1, rep3.term2) == (0.5, 0.0)

    with pytest.raises(ValueError):
        support_cap_counterexample(pset_of(2, (3,)))


def test_sigma_point_one_is_p_squared():
    pset = pset_of(2, (3, 5, 7, 11))
    res = sigma_quantity(Weights.point(2, 1), pset)
    assert res.value == pset.P**2
    assert res.residual < 1e-12


def test_sigma_on_degenerate_point_vanishes():
    pset = pset_of(2, (3, 5))
    res = sigma_quantity(Weights.point(2, 225), pset)
    assert res.value == 0.0 and abs(res.expansion) < 1e-12


def test_sigma_square_support_lower_bound():
    # every support point m^2 with nu(m) <= P/2 contributes >= (P/2)^2
    squares = Weights(2, {m * m: 1.0 for m in range(1, 101)})
    pset = admissible_primes(2, 10, 20)  # {11, 13, 17, 19}, P = 4
    assert pset.P == 4
    max_nu = max(factorize(m).nu() for m in range(1, 101))
    assert max_nu <= 3
    res = sigma_quantity(squares, pset)
    assert res.value >= (pset.P - max_nu) ** 2 * sieve_lhs(squares)
    assert res.value >= (pset.P / 2) ** 2 * sieve_lhs(squares)
    assert res.residual < 1e-6


def test_diagonal_term_bound_and_equality_condition():
    pset = admissible_primes(2, 10, 40)
    w_clean = Weights(2, {1: 1.0, 2: 2.0, 7: 0.5})  # no support point hit by 11..37
    assert diagonal_term(w_clean, pset) == pset.P * w_clean.total()
    w_dirty = Weights(2, {11: 1.0, 4: 1.0})
    assert diagonal_term(w_dirty, pset) < pset.P * w_dirty.total()


def test_inner_count_identity_examples():
    pset = pset_of(2, (3, 5, 7))
    assert inner_count_identity(1, pset) == 3
    assert inner_count_identity(3 * 5 * 7, pset) == 0
    assert inner_count_identity(6, pset) == 2


def test_inner_count_identity_many():
    pset = admissible_primes(3, 2, 60)
    for m in range(1, 500):
        expected = sum(1 for p in pset.primes if m % p)
        assert inner_count_identity(m, pset) == expected


def test_support_flag_on_interval():
    w = Weights.interval(2, 1, 10**4)
    pset = admissible_primes(2, 20, 40)  # P = 4, e^4 ~ 54.6
    rhs = sieve_rhs(w, pset)
    assert not rhs.support_ok


def test_v_bounds_bracket_dependent_variable():
    s, J, K, U, sign = 2, 4, 2, 3.0, 1
    L, M = v_bounds(s, J, K, U, sign)
    for u in (4, 5, 6):  # u in (U, 2U]
        for j in range(J + 1, 2 * J + 1):
            for k in range(K + 1, 2 * K + 1):
                m = j**s * u + sign
                if m % k**s == 0:
                    v = m // k**s
                    assert L <= v <= M


@pytest.mark.parametrize("s,u,sign,J,K", [
    (2, 1, -1, 12, 3),  # six box solutions, strictly dominated
    (2, 1, 1, 4, 3),  # one box solution, equality
    (2, 9, -1, 10, 3),
    (2, 5, 1, 12, 2),
    (2, 12, 1, 10, 4),  # empty box
    (3, 1, 1, 4, 2),  # one box solution, equality
    (3, 7, -1, 4, 2),
])
def test_twin_pair_weight_dominates_box_count(s, u, sign, J, K):
    U = u / 2  # so that u lies in (U, 2U]
    L, M = v_bounds(s, J, K, U, sign)
    w = twin_pair_weight(s, u, sign, K, L, M)
    # direct count of (j, k, v) solutions with j in the dyadic box
    n_u = 0
    for j in range(J + 1, 2 * J + 1):
        m = j**s * u + sign
        for k in range(K + 1, 2 * K + 1):
            if m >= k**s and m % k**s == 0:
                n_u += 1
    lhs = sieve_lhs(w)
    assert n_u <= lhs, f"N_u={n_u} exceeds S(A)={lhs}"
    # weight support never touches 0 and all weights are counts
    assert all(n >= 1 for n in w.support)
    assert all(v == int(v) and v >= 0 for v in w.support.values())


def test_twin_pair_weight_support_points_are_multiples():
    w = twin_pair_weight(2, 6, 1, 3, 1.0, 50.0)
    for n in w.support:
        assert n % 6 == 0  # every support point is t * u^(s-1)
