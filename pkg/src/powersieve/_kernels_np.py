"""Pure-numpy fallbacks for the hot kernels (see _kernels_nb for the jitted
twins).  Same signatures, same results; vectorized over the inner index so
no python loop runs more than O(outer) times."""

import math

import numpy as np

_CHUNK = 1 << 22


def _powmod_array(base, e, m):
    r = np.ones_like(base)
    b = base % m
    while e > 0:
        if e & 1:
            r = r * b % m
        b = b * b % m
        e >>= 1
    return r


def sfree_flags(lo, hi, prime_powers):
    n = hi - lo + 1
    flags = np.ones(n, dtype=np.bool_)
    for q in prime_powers:
        q = int(q)
        start = ((lo + q - 1) // q) * q
        flags[start - lo :: q] = False
    return flags


def twin_count(x, prime_powers, segment):
    total = 0
    carry = False
    lo = 1
    while lo <= x + 1:
        hi = min(lo + segment - 1, x + 1)
        flags = sfree_flags(lo, hi, prime_powers)
        if lo > 1 and carry and flags[0]:
            total += 1
        total += int(np.count_nonzero(flags[:-1] & flags[1:]))
        carry = bool(flags[-1])
        lo = hi + 1
    return total


def sfree_brute_flags(lo, hi, s):
    flags = np.ones(hi - lo + 1, dtype=np.bool_)
    for i in range(hi - lo + 1):
        m = lo + i
        p = 2
        while p * p <= m:
            if m % p == 0:
                e = 0
                while m % p == 0:
                    m //= p
                    e += 1
                if e >= s:
                    flags[i] = False
                    break
            p += 1 if p == 2 else 2
    return flags


def s1_sum(p, s, c, d, sign, chi_vals, roots):
    bs = np.arange(p, dtype=np.int64)
    parts = np.empty(p, dtype=np.complex128)
    for a in range(p):
        ap = pow(a, s, p)
        t = (ap * bs - sign) % p
        parts[a] = np.sum(chi_vals[t] * roots[(c * a + d * bs) % p])
    return complex(np.sum(parts))


def s2_unit_sum(m, r, s, c, d, sign, roots):
    alphas = np.array([a for a in range(1, m + 1) if a % r != 0], dtype=np.int64)
    inv = _powmod_array(alphas, _unit_inverse_exponent(m, r), m)
    ds = d * sign % m
    idx = (c * alphas + ds * _powmod_array(inv, s, m)) % m
    return complex(np.sum(roots[idx]))


def _unit_inverse_exponent(m, r):
    # a^(phi(m)-1) inverts units of m = r^f
    f = 0
    mm = m
    while mm > 1:
        mm //= r
        f += 1
    phi = m // r * (r - 1)
    return phi - 1


def s2_double_sum(m, s, c, d, sign, roots):
    bs = np.arange(1, m + 1, dtype=np.int64)
    parts = []
    for a in range(1, m + 1):
        ap = pow(a, s, m)
        mask = (ap * bs - sign) % m == 0
        if mask.any():
            parts.append(np.sum(roots[(c * a + d * bs[mask]) % m]))
    if not parts:
        return 0j
    return complex(np.sum(np.array(parts)))


def s_full_sum(u, p, q, s, gamma, delta, sign, chp, chq, roots):
    m = u * p * q
    parts = []
    for a in range(1, m + 1):
        if u > 1:
            if math.gcd(a, u) != 1:
                continue
            b0 = sign * pow(pow(a, s, u), -1, u) % u
            if b0 == 0:
                b0 = u
            bs = np.arange(b0, m + 1, u, dtype=np.int64)
        else:
            bs = np.arange(1, m + 1, dtype=np.int64)
        tp = (pow(a, s, p) * bs - sign) % p
        tq = (pow(a, s, q) * bs - sign) % q
        z = chp[tp] * np.conj(chq[tq]) * roots[(gamma * a + delta * bs) % m]
        parts.append(np.sum(z))
    return complex(np.sum(np.array(parts)))


def s2_abs_grid(p, s, sign, roots):
    alphas = np.arange(1, p, dtype=np.int64)
    inv = _powmod_array(alphas, p - 2, p)
    w = sign * _powmod_array(inv, s, p) % p
    cs = np.arange(p, dtype=np.int64)
    left = roots[np.outer(cs, alphas) % p]
    right = roots[np.outer(w, cs) % p]
    return np.abs(left @ right)


def squarefull_brute_flags(z):
    spf = np.zeros(z + 1, dtype=np.int64)
    for p in range(2, z + 1):
        if spf[p] == 0:
            sl = spf[p::p]
            sl[sl == 0] = p
    flags = np.zeros(z + 1, dtype=bool)
    if z >= 1:
        flags[1] = True
    for t in range(2, z + 1):
        m = t
        ok = True
        while m > 1:
            p = int(spf[m])
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            if e < 2:
                ok = False
                break
        flags[t] = ok
    return flags


def pow_target_counts(modulus, s, targets):
    counts = np.zeros(targets.size, dtype=np.int64)
    if targets.size == 0:
        return counts
    for start in range(0, modulus, _CHUNK):
        js = np.arange(start, min(start + _CHUNK, modulus), dtype=np.int64)
        v = _powmod_array(js, s, modulus)
        idx = np.searchsorted(targets, v)
        ok = (idx < targets.size) & (targets[np.minimum(idx, targets.size - 1)] == v)
        np.add.at(counts, idx[ok], 1)
    return counts


def power_solution_count(modulus, s, u, rhs):
    rhs %= modulus
    c = 0
    for start in range(0, modulus, _CHUNK):
        js = np.arange(start, min(start + _CHUNK, modulus), dtype=np.int64)
        c += int(np.count_nonzero(_powmod_array(js, s, modulus) * u % modulus == rhs))
    return c


def decomp_prefix(s, xmax, mu):
    root = 1
    while (root + 1) ** s <= xmax:
        root += 1
    diff = np.zeros(xmax + 1, dtype=np.int64)
    for j in range(1, root + 1):
        if mu[j] == 0:
            continue
        js = j**s
        for k in range(1, root + 1):
            if mu[k] == 0 or math.gcd(j, k) != 1:
                continue
            ks = k**s
            step = js * ks
            if ks == 1:
                n0 = js
            else:
                n0 = js * ((-pow(js, -1, ks)) % ks)
            if 1 <= n0 <= xmax:
                diff[n0::step] += int(mu[j]) * int(mu[k])
    return np.cumsum(diff)
