"""Brute-force reference implementations.

Everything here recomputes a quantity by a route independent of the
production code path (definition-level scans, naive trial division,
enumeration), so the two can be compared in tests and in `verify-all`.
Slow on purpose; sized for desk-scale arguments.
"""

import cmath
import math

import numpy as np

from . import _backend
from .arithmetic import iroot, mobius
from .characters import order_s_character
from .twins import QuadrupleQuery, count_N


def factorize_naive(n: int) -> list[tuple[int, int]]:
    """Division by every integer 2, 3, 4, ... with no wheel or prime table."""
    if n < 1:
        raise ValueError("n must be positive")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1
    if n > 1:
        out.append((n, 1))
    return out


def sfree_flags_bruteforce(lo: int, hi: int, s: int) -> np.ndarray:
    """Per-n factorization check instead of sieve marking."""
    return _backend.kernels().sfree_brute_flags(lo, hi, s)


def twin_count_bruteforce(s: int, x: int) -> int:
    flags = sfree_flags_bruteforce(1, x + 1, s)
    return int(np.count_nonzero(flags[:-1] & flags[1:]))


def divisor_count_enumerate(n: int, k: int) -> int:
    """d_k(n) by literally counting ordered k-tuples with product n."""
    if k == 1:
        return 1
    total = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            total += divisor_count_enumerate(n // d, k - 1)
            if d != n // d:
                total += divisor_count_enumerate(d, k - 1)
        d += 1
    return total


def squarefull_flags_sieve(z: int) -> np.ndarray:
    """flags[t] for t in [0, z]: every prime exponent >= 2, by a smallest-
    prime-factor walk per t (1 counts as squarefull)."""
    return _backend.kernels().squarefull_brute_flags(z)


def series_constant(s: int, n_terms: int) -> tuple[float, float]:
    """sum_{n <= N} mu(n) d(n) / n^s and a rigorous tail bound.

    Tail: sum_{n > N} d(n)/n^s <= s N^(1-s) ((log N + 1)/(s-1) + 1/(s-1)^2)
    by partial summation with sum_{n <= t} d(n) <= t (log t + 1).
    """
    N = n_terms
    mu = _mobius_array(N)
    d = np.zeros(N + 1, dtype=np.int64)
    for i in range(1, math.isqrt(N) + 1):
        d[i * i] += 1
        d[i * (i + 1) :: i] += 2
    ns = np.arange(N + 1, dtype=np.float64)
    ns[0] = 1.0
    value = float(np.sum(mu[1:].astype(np.float64) * d[1:] / ns[1:] ** s))
    log_n = math.log(N)
    tail = s * N ** (1 - s) * ((log_n + 1) / (s - 1) + 1.0 / (s - 1) ** 2)
    return value, tail


def _mobius_array(n: int) -> np.ndarray:
    is_p = np.ones(n + 1, dtype=bool)
    is_p[:2] = False
    for p in range(2, math.isqrt(n) + 1):
        if is_p[p]:
            is_p[p * p :: p] = False
    mu = np.ones(n + 1, dtype=np.int8)
    mu[0] = 0
    for p in np.nonzero(is_p)[0]:
        p = int(p)
        mu[p::p] *= -1
        mu[p * p :: p * p] = 0
    return mu


def hensel_scan_counts(
    s: int, k: int, us: list[int], signs: tuple[int, ...] = (1, -1)
) -> dict[tuple[int, int], int]:
    """Exhaustive scan of j in [0, k^s) for every requested (u, sign) at
    once: j^s u = -sign (mod k^s) is j^s = -sign u^(-1), so one pass over j
    serves all targets."""
    M = k**s
    pairs = [(u, sg) for u in us for sg in signs if math.gcd(u, k) == 1]
    targets = sorted({(-sg * pow(u, -1, M)) % M for u, sg in pairs})
    arr = np.array(targets, dtype=np.int64)
    counts = _backend.kernels().pow_target_counts(M, s, arr)
    lookup = {t: int(c) for t, c in zip(targets, counts)}
    return {(u, sg): lookup[(-sg * pow(u, -1, M)) % M] for u, sg in pairs}


def hensel_scan(s: int, u: int, k: int, sign: int) -> int:
    return hensel_scan_counts(s, k, [u], (sign,))[(u, sign)]


def quadruple_count_bruteforce(query: QuadrupleQuery) -> int:
    """Naive triple loop over (j, u, k); v is forced by divisibility."""
    s, x, J, K, sign = query.s, query.x, query.J, query.K, query.sign
    count = 0
    for j in range(J + 1, 2 * J + 1):
        js = j**s
        for u in range(1, (x - sign) // js + 1):
            m = js * u + sign
            if m < 1 or m > x:
                continue
            for k in range(K + 1, 2 * K + 1):
                if m % k**s == 0:
                    count += 1
    return count


def decomposition_rhs_direct(s: int, x: int) -> int:
    """sum over j, k <= x^(1/s) of mu(j) mu(k) N(x, j, k), one count_N call
    per pair."""
    root = iroot(x, s)
    total = 0
    for j in range(1, root + 1):
        mj = mobius(j)
        if mj == 0:
            continue
        for k in range(1, root + 1):
            mk = mobius(k)
            if mk == 0:
                continue
            total += mj * mk * count_N(s, x, j, k)
    return total


def _e(num: int, m: int) -> complex:
    return cmath.exp(2j * cmath.pi * (num % m) / m)


def s1_bruteforce(p: int, s: int, c: int, d: int, sign: int) -> complex:
    chi = order_s_character(p, s)
    total = 0j
    for a in range(1, p + 1):
        for b in range(1, p + 1):
            total += chi(a**s * b - sign) * _e(c * a + d * b, p)
    return total


def s2_bruteforce(m: int, s: int, c: int, d: int, sign: int) -> complex:
    total = 0j
    for a in range(1, m + 1):
        for b in range(1, m + 1):
            if (a**s * b - sign) % m == 0:
                total += _e(c * a + d * b, m)
    return total


def s_full_bruteforce(params) -> complex:
    """Literal (upq)^2 double loop; small moduli only."""
    u, p, q, s, sign = params.u, params.p, params.q, params.s, params.sign
    m = params.modulus
    chp = order_s_character(p, s)
    chq = order_s_character(q, s)
    total = 0j
    for a in range(1, m + 1):
        for b in range(1, m + 1):
            t = a**s * b - sign
            if t % u:
                continue
            total += chp(t) * chq(t).conjugate() * _e(params.gamma * a + params.delta * b, m)
    return total


def completion_sum_direct(lo: int, hi: int, freq: int, modulus: int) -> complex:
    total = 0j
    for n in range(lo + 1, hi + 1):
        total += _e(-freq * n, modulus)
    return total
