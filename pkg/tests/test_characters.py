import cmath
import math

import numpy as np
import pytest

from powersieve.arithmetic import primes_upto
from powersieve.characters import (
    InadmissiblePrimeError,
    find_primitive_root,
    gauss_sum,
    is_admissible,
    order_s_character,
    pair_char_sum,
)

ADMISSIBLE_SMALL = [
    (int(p), s)
    for s in (2, 3, 4, 5)
    for p in primes_upto(200)
    if is_admissible(int(p), s)
]


def _order(a: int, p: int) -> int:
    x, k = a % p, 1
    while x != 1:
        x = x * a % p
        k += 1
    return k


def test_primitive_root_examples():
    assert find_primitive_root(3) == 2
    # exhaustive order oracle: ord(2) = 3, ord(3) = 6 mod 7
    assert _order(2, 7) == 3 and _order(3, 7) == 6
    assert find_primitive_root(7) == 3
    assert find_primitive_root(101) == 2


def test_primitive_root_matches_order_oracle():
    for p in (int(v) for v in primes_upto(300) if v >= 3):
        g = find_primitive_root(p)
        assert _order(g, p) == p - 1
        for h in range(2, g):
            assert _order(h, p) < p - 1


def test_primitive_root_rejects_nonprime():
    with pytest.raises(ValueError):
        find_primitive_root(15)
    with pytest.raises(ValueError):
        find_primitive_root(2)


def test_legendre_character_mod_5():
    chi = order_s_character(5, 2)
    assert chi.d == 2
    # quadratic residues mod 5 are {1, 4}
    assert chi(1) == 1 and chi(4) == 1
    assert abs(chi(2) + 1) < 1e-15 and abs(chi(3) + 1) < 1e-15


def test_cubic_character_mod_7():
    chi = order_s_character(7, 3)
    assert chi.d == 3 and chi.g == 3
    assert abs(chi(3) - cmath.exp(2j * cmath.pi / 3)) < 1e-15
    # dlog(2) = 2 since 3^2 = 2 mod 7
    assert abs(chi(2) - cmath.exp(4j * cmath.pi / 3)) < 1e-15


def test_inadmissible_prime_rejected():
    with pytest.raises(InadmissiblePrimeError):
        order_s_character(7, 5)  # gcd(5, 6) = 1


def test_char_eval_zero_and_one():
    chi = order_s_character(13, 2)
    assert chi(0) == 0 and chi(13) == 0 and chi(26) == 0
    assert chi(1) == 1


@pytest.mark.parametrize("p,s", ADMISSIBLE_SMALL)
def test_multiplicativity_exact(p, s):
    chi = order_s_character(p, s)
    a = np.arange(p, dtype=np.int64)
    prod_expo = chi.expo[np.outer(a, a) % p]
    sum_expo = (chi.expo[a][:, None] + chi.expo[a][None, :]) % chi.d
    nz = (chi.expo[a][:, None] >= 0) & (chi.expo[a][None, :] >= 0)
    assert np.all(prod_expo[nz] == sum_expo[nz])
    assert np.all(prod_expo[~nz] == -1)


@pytest.mark.parametrize("p,s", ADMISSIBLE_SMALL)
def test_power_triviality_and_nonprincipality(p, s):
    chi = order_s_character(p, s)
    ns = np.arange(1, p, dtype=np.int64)
    powers = np.array([pow(int(n), s, p) for n in ns])
    assert np.all(chi.expo[powers] == 0)  # chi(n^s) is exactly 1
    assert chi.order >= 2
    assert abs(np.sum(chi.vals)) < 1e-9  # full-period sum vanishes


@pytest.mark.parametrize("p,s", [(5, 2), (13, 2), (7, 3), (31, 5), (97, 4)])
def test_gauss_sum_modulus(p, s):
    tau = gauss_sum(order_s_character(p, s))
    assert abs(abs(tau) - math.sqrt(p)) < 1e-9


def test_gauss_sum_quadratic_value():
    # tau for the quadratic character mod 5, summed by hand:
    # chi = (1, -1, -1, 1) at (1, 2, 3, 4)
    e = lambda k: cmath.exp(2j * cmath.pi * k / 5)
    expected = e(1) - e(2) - e(3) + e(4)
    tau = gauss_sum(order_s_character(5, 2))
    assert abs(tau - expected) < 1e-12
    assert abs(abs(tau) - math.sqrt(5)) < 1e-12


def test_character_power_toggle():
    chi = order_s_character(13, 4)  # d = 4
    for j in (1, 2, 3):
        twisted = chi.power(j)
        assert twisted.order == chi.d // math.gcd(j, chi.d) >= 2
        # still trivial on s-th powers, still non-principal
        for n in range(1, 13):
            assert twisted(pow(n, 4, 13)) == 1
        assert abs(np.sum(twisted.vals)) < 1e-9
        assert abs(abs(gauss_sum(twisted)) - math.sqrt(13)) < 1e-9
    with pytest.raises(ValueError):
        chi.power(4)  # principal


def test_pair_char_sum_empty_and_period():
    assert pair_char_sum(5, 13, 2, 0) == 0
    assert abs(pair_char_sum(5, 13, 2, 65)) < 1e-6
    for p, q, s in ((7, 13, 3), (11, 19, 2)):
        assert abs(pair_char_sum(p, q, s, p * q)) < 1e-6


def test_pair_char_sum_oracle_value():
    # 1000 = 10 * 91 + 90 and the tail [1, 90] is a full period minus the
    # vanishing n = 91 term, so the sum is exactly 0 (direct-summation oracle)
    val = pair_char_sum(7, 13, 3, 1000)
    assert abs(val) < 1e-9


def test_pair_char_sum_matches_direct():
    p, q, s, x = 7, 13, 3, 137
    chi_p = order_s_character(p, s)
    chi_q = order_s_character(q, s)
    direct = sum(chi_p(n) * chi_q(n).conjugate() for n in range(1, x + 1))
    assert abs(pair_char_sum(p, q, s, x) - direct) < 1e-10


def test_pair_char_sum_rejects_equal_moduli():
    with pytest.raises(ValueError):
        pair_char_sum(7, 7, 3, 10)


def test_polya_vinogradov_envelope():
    worst = 0.0
    for p, q, s in ((5, 13, 2), (7, 13, 3), (13, 19, 3), (11, 23, 2)):
        m = p * q
        for x in range(1, 2 * m):
            c = abs(pair_char_sum(p, q, s, x)) / (math.sqrt(m) * math.log(m))
            worst = max(worst, c)
    assert worst <= 1.0, f"PV ratio {worst} above classical constant"
