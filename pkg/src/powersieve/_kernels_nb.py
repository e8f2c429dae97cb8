"""numba @njit kernels for the hot inner loops.

Mirrors the API of _kernels_np; see _backend for selection.  All arithmetic
stays inside int64 (moduli are capped by the callers so products fit).
Complex accumulation uses Kahan compensation so long sums stay near 1 ulp.
"""

import math

import numpy as np
from numba import njit


@njit(cache=True)
def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


@njit(cache=True)
def _powmod(b, e, m):
    r = 1 % m
    b %= m
    while e > 0:
        if e & 1:
            r = r * b % m
        b = b * b % m
        e >>= 1
    return r


@njit(cache=True)
def _modinv(a, m):
    if m == 1:
        return 0
    old_r, r = a % m, m
    old_s, s = 1, 0
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
    inv = old_s % m
    if inv < 0:
        inv += m
    return inv


@njit(cache=True)
def sfree_flags(lo, hi, prime_powers):
    n = hi - lo + 1
    flags = np.ones(n, dtype=np.bool_)
    for q in prime_powers:
        start = ((lo + q - 1) // q) * q
        for i in range(start - lo, n, q):
            flags[i] = False
    return flags


@njit(cache=True)
def twin_count(x, prime_powers, segment):
    """Count n <= x with both n and n+1 free of every prime_powers divisor."""
    total = 0
    carry = False
    lo = 1
    while lo <= x + 1:
        hi = min(lo + segment - 1, x + 1)
        n = hi - lo + 1
        flags = np.ones(n, dtype=np.bool_)
        for q in prime_powers:
            start = ((lo + q - 1) // q) * q
            for i in range(start - lo, n, q):
                flags[i] = False
        if lo > 1 and carry and flags[0]:
            total += 1
        for i in range(n - 1):
            if flags[i] and flags[i + 1]:
                total += 1
        carry = flags[n - 1]
        lo = hi + 1
    return total


@njit(cache=True)
def sfree_brute_flags(lo, hi, s):
    """Oracle path: per-n trial division, flag cleared on any exponent >= s."""
    n = hi - lo + 1
    flags = np.ones(n, dtype=np.bool_)
    for i in range(n):
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


@njit(cache=True)
def s1_sum(p, s, c, d, sign, chi_vals, roots):
    """Sum over a complete (alpha, beta) grid mod p of
    chi(alpha^s*beta - sign) * e((c*alpha + d*beta)/p)."""
    sr = 0.0
    si = 0.0
    er = 0.0
    ei = 0.0
    for a in range(p):
        ap = _powmod(a, s, p)
        base = c * a % p
        for b in range(p):
            t = (ap * b - sign) % p
            if t < 0:
                t += p
            z = chi_vals[t] * roots[(base + d * b) % p]
            y = z.real - er
            tt = sr + y
            er = (tt - sr) - y
            sr = tt
            y = z.imag - ei
            tt = si + y
            ei = (tt - si) - y
            si = tt
    return complex(sr, si)


@njit(cache=True)
def s2_unit_sum(m, r, s, c, d, sign, roots):
    """Kloosterman-style form: beta is forced to sign*alpha^(-s) mod m, so the
    constrained double sum collapses to units alpha of m = r^f."""
    sr = 0.0
    si = 0.0
    er = 0.0
    ei = 0.0
    ds = d * sign % m
    if ds < 0:
        ds += m
    for a in range(1, m + 1):
        if a % r == 0:
            continue
        ainv = _modinv(a, m)
        z = roots[(c * a + ds * _powmod(ainv, s, m)) % m]
        y = z.real - er
        t = sr + y
        er = (t - sr) - y
        sr = t
        y = z.imag - ei
        t = si + y
        ei = (t - si) - y
        si = t
    return complex(sr, si)


@njit(cache=True)
def s2_double_sum(m, s, c, d, sign, roots):
    """Literal constrained double sum over (alpha, beta) in [1, m]^2."""
    sr = 0.0
    si = 0.0
    er = 0.0
    ei = 0.0
    for a in range(1, m + 1):
        ap = _powmod(a, s, m)
        for b in range(1, m + 1):
            t = (ap * b - sign) % m
            if t < 0:
                t += m
            if t != 0:
                continue
            z = roots[(c * a + d * b) % m]
            y = z.real - er
            tt = sr + y
            er = (tt - sr) - y
            sr = tt
            y = z.imag - ei
            tt = si + y
            ei = (tt - si) - y
            si = tt
    return complex(sr, si)


@njit(cache=True)
def s_full_sum(u, p, q, s, gamma, delta, sign, chp, chq, roots):
    """Constrained character/exponential sum over (alpha, beta) in [1, upq]^2
    with u | alpha^s*beta - sign.  beta runs over one residue class mod u."""
    m = u * p * q
    sr = 0.0
    si = 0.0
    er = 0.0
    ei = 0.0
    for a in range(1, m + 1):
        if u > 1 and _gcd(a % u, u) != 1:
            continue
        ap = _powmod(a, s, p)
        aq = _powmod(a, s, q)
        if u > 1:
            au = _powmod(a, s, u)
            b0 = sign * _modinv(au, u) % u
            if b0 < 0:
                b0 += u
            if b0 == 0:
                b0 = u
            step = u
        else:
            b0 = 1
            step = 1
        for b in range(b0, m + 1, step):
            tp = (ap * b - sign) % p
            if tp < 0:
                tp += p
            tq = (aq * b - sign) % q
            if tq < 0:
                tq += q
            z = chp[tp] * chq[tq].conjugate() * roots[(gamma * a + delta * b) % m]
            y = z.real - er
            t = sr + y
            er = (t - sr) - y
            sr = t
            y = z.imag - ei
            t = si + y
            ei = (t - si) - y
            si = t
    return complex(sr, si)


@njit(cache=True)
def s2_abs_grid(p, s, sign, roots):
    """|S2(p; c, d)| for every (c, d) in [0, p)^2 at f = 1."""
    w = np.empty(p - 1, dtype=np.int64)
    for a in range(1, p):
        w[a - 1] = sign * _powmod(_modinv(a, p), s, p) % p
        if w[a - 1] < 0:
            w[a - 1] += p
    out = np.empty((p, p), dtype=np.float64)
    for c in range(p):
        for d in range(p):
            sr = 0.0
            si = 0.0
            for a in range(1, p):
                z = roots[(c * a + d * w[a - 1]) % p]
                sr += z.real
                si += z.imag
            out[c, d] = math.sqrt(sr * sr + si * si)
    return out


@njit(cache=True)
def squarefull_brute_flags(z):
    """Oracle path: smallest-prime-factor walk per t, exponent check."""
    spf = np.zeros(z + 1, dtype=np.int64)
    for p in range(2, z + 1):
        if spf[p] == 0:
            for m in range(p, z + 1, p):
                if spf[m] == 0:
                    spf[m] = p
    flags = np.zeros(z + 1, dtype=np.bool_)
    if z >= 1:
        flags[1] = True
    for t in range(2, z + 1):
        m = t
        ok = True
        while m > 1:
            p = spf[m]
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            if e < 2:
                ok = False
                break
        flags[t] = ok
    return flags


@njit(cache=True)
def pow_target_counts(modulus, s, targets):
    """counts[i] = #{j in [0, modulus): j^s = targets[i] (mod modulus)};
    targets must be sorted."""
    counts = np.zeros(targets.size, dtype=np.int64)
    for j in range(modulus):
        v = _powmod(j, s, modulus)
        lo = 0
        hi = targets.size
        while lo < hi:
            mid = (lo + hi) // 2
            if targets[mid] < v:
                lo = mid + 1
            else:
                hi = mid
        if lo < targets.size and targets[lo] == v:
            counts[lo] += 1
    return counts


@njit(cache=True)
def power_solution_count(modulus, s, u, rhs):
    """#{j in [0, modulus): j^s * u = rhs (mod modulus)}."""
    rhs %= modulus
    if rhs < 0:
        rhs += modulus
    c = 0
    for j in range(modulus):
        if _powmod(j, s, modulus) * u % modulus == rhs:
            c += 1
    return c


@njit(cache=True)
def decomp_prefix(s, xmax, mu):
    """Cumulative sums of mu(j)mu(k)N(x, j, k) over j, k <= xmax^(1/s).

    N(x, j, k) counts n <= x in the CRT class n = 0 (j^s), n = -1 (k^s);
    realized by adding mu(j)mu(k) at every class member and prefix-summing.
    """
    root = 1
    while (root + 1) ** s <= xmax:
        root += 1
    diff = np.zeros(xmax + 1, dtype=np.int64)
    for j in range(1, root + 1):
        if mu[j] == 0:
            continue
        js = j**s
        for k in range(1, root + 1):
            if mu[k] == 0 or _gcd(j, k) != 1:
                continue
            ks = k**s
            step = js * ks
            if ks == 1:
                n0 = js
            else:
                t0 = (-_modinv(js % ks, ks)) % ks
                if t0 < 0:
                    t0 += ks
                n0 = js * t0
            if n0 < 1 or n0 > xmax:
                continue
            val = mu[j] * mu[k]
            for n in range(n0, xmax + 1, step):
                diff[n] += val
    out = np.empty(xmax + 1, dtype=np.int64)
    acc = 0
    for i in range(xmax + 1):
        acc += diff[i]
        out[i] = acc
    return out
