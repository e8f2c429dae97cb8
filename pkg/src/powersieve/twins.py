"""Counting consecutive s-free pairs: exact twin counts, the Euler-product
density constant, CRT-stepped congruence counts, dyadic quadruple counts with
their Hensel-driven solution jumping, error scans against C_s * x, and the
closed-form exponent table."""

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import _backend
from .arithmetic import (
    DEFAULT_SEGMENT,
    WORD_MAX,
    WordSizeError,
    crt_pair,
    factorize,
    iroot,
    mobius_sieve,
    primes_upto,
)


def cs_constant(s: int, plimit: int) -> tuple[float, float]:
    """Truncated Euler product prod_{p <= plimit} (1 - 2/p^s) and a rigorous
    bound on the log-scale truncation error.

    |log(full) - log(truncated)| <= sum_{p > plimit} 3/p^s
                                 <= 3 * plimit^(1-s) / (s-1),
    using |log(1 - x)| <= 1.5 x for x <= 1/3 (true for every p >= 3).
    """
    if s < 2:
        raise ValueError("s must be >= 2")
    if plimit < 2:
        raise ValueError("plimit must be >= 2")
    ps = primes_upto(plimit).astype(np.float64)
    value = float(np.prod(1.0 - 2.0 / ps**s))
    tail = 3.0 * plimit ** (1 - s) / (s - 1)
    return value, tail


def count_twin_sfree(s: int, x: int, segment: int = DEFAULT_SEGMENT) -> int:
    """#{n <= x : n and n+1 both s-free}, by segmented sieve.

    segment is a cache-size tunable; the count is identical for any value.
    """
    if s < 2:
        raise ValueError("s must be >= 2")
    if x < 1:
        raise ValueError("x must be >= 1")
    if x + 1 > WORD_MAX:
        raise WordSizeError("x exceeds the word domain")
    if segment < 2:
        raise ValueError("segment must be >= 2")
    qs = primes_upto(iroot(x + 1, s)) ** s
    return int(_backend.kernels().twin_count(x, qs, segment))


def twin_prefix(s: int, xmax: int) -> np.ndarray:
    """prefix[x] = count_twin_sfree(s, x) for every x in [0, xmax], from one
    sieve pass (small xmax only)."""
    if s < 2:
        raise ValueError("s must be >= 2")
    if xmax + 1 > (1 << 28):
        raise WordSizeError("xmax too large for a single flag array")
    qs = primes_upto(iroot(xmax + 1, s)) ** s
    flags = _backend.kernels().sfree_flags(1, xmax + 1, qs)
    twins = (flags[:-1] & flags[1:]).astype(np.int64)
    return np.concatenate(([0], np.cumsum(twins)))


def count_N(s: int, x: int, j: int, k: int) -> int:
    """#{n <= x : j^s | n and k^s | n+1}, stepped through the CRT class; zero
    when gcd(j, k) > 1 (a common prime would divide both n and n+1)."""
    if j < 1 or k < 1:
        raise ValueError("j and k must be positive")
    if math.gcd(j, k) != 1:
        return 0
    js, ks = j**s, k**s
    step = js * ks
    n0 = crt_pair(0, js, -1 % ks if ks > 1 else 0, ks)
    if n0 == 0:
        n0 = step
    if n0 > x:
        return 0
    return (x - n0) // step + 1


def decomposition_prefix(s: int, xmax: int) -> np.ndarray:
    """prefix[x] = sum over j, k <= xmax^(1/s) of mu(j) mu(k) N(x, j, k)."""
    mu = mobius_sieve(iroot(xmax, s))
    return _backend.kernels().decomp_prefix(s, xmax, mu)


def hensel_solutions(s: int, u: int, k: int, sign: int) -> tuple[int, ...]:
    """All residues xi mod k^s with xi^s * u = -sign (mod k^s), sorted.

    Per prime power p^t of k: roots mod p by exhaustion, lifted one p-adic
    level at a time.  When p does not divide s*u every root is simple
    (derivative s*xi^(s-1)*u is a unit) and lifts uniquely; otherwise each
    level keeps all p candidate lifts.  Prime powers recombine by CRT.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if math.gcd(u, k) != 1:
        raise ValueError("u and k must be coprime")
    if k == 1:
        return (0,)
    sols = [0]
    modulus = 1
    for p, t in factorize(k).factors:
        target_mod = p ** (s * t)
        local = [j for j in range(p) if (pow(j, s, p) * u + sign) % p == 0]
        level_mod = p
        simple = s % p != 0  # gcd(u, k) = 1 already rules out p | u
        while level_mod < target_mod:
            nxt_mod = level_mod * p
            nxt = []
            for xi in local:
                if simple:
                    fx = (pow(xi, s, nxt_mod) * u + sign) % nxt_mod
                    deriv_inv = pow(s * pow(xi, s - 1, p) * u, -1, p)
                    tau = (-(fx // level_mod) * deriv_inv) % p
                    nxt.append(xi + tau * level_mod)
                else:
                    for tau in range(p):
                        cand = xi + tau * level_mod
                        if (pow(cand, s, nxt_mod) * u + sign) % nxt_mod == 0:
                            nxt.append(cand)
            local = nxt
            level_mod = nxt_mod
        if not local:
            return ()
        sols = [
            crt_pair(a, modulus, b, target_mod) for a in sols for b in local
        ]
        modulus *= target_mod
    return tuple(sorted(sols))


# Exhaustive scans stay inside this budget (the moduli are p^(s*t) <= k^s).
_SCAN_CAP = 1 << 31


def hensel_count(s: int, u: int, k: int, sign: int) -> int:
    """#{j mod k^s : j^s * u = -sign (mod k^s)}.

    Multiplicative over the prime powers of k^s; each factor is the mod-p
    root count when p does not divide s (simple roots lift uniquely), and an
    exhaustive scan of p^(s*t) otherwise.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if math.gcd(u, k) != 1:
        raise ValueError("u and k must be coprime")
    if k == 1:
        return 1
    total = 1
    for p, t in factorize(k).factors:
        if s % p != 0:
            cnt = sum(1 for j in range(p) if (pow(j, s, p) * u + sign) % p == 0)
        else:
            modulus = p ** (s * t)
            if modulus > _SCAN_CAP:
                raise WordSizeError(f"scan modulus {modulus} beyond budget")
            cnt = int(
                _backend.kernels().power_solution_count(
                    modulus, s, u % modulus, (-sign) % modulus
                )
            )
        if cnt == 0:
            return 0
        total *= cnt
    return total


@dataclass(frozen=True)
class QuadrupleQuery:
    """Dyadic box count: (j, k, u, v) with j in (J, 2J], k in (K, 2K],
    j^s u + sign = k^s v <= x."""

    s: int
    x: int
    J: int
    K: int
    sign: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if self.s < 2 or self.J < 1 or self.K < 1 or self.x < 1:
            raise ValueError("need s >= 2 and positive x, J, K")
        if self.J**self.s > self.x:
            raise ValueError("J^s must not exceed x")


@dataclass(frozen=True)
class QuadrupleResult:
    count: int
    bound: float

    @property
    def ratio(self) -> float:
        return self.count / self.bound


def hs_bound(s: int, x: int, J: int, K: int) -> float:
    """x (J^-s K + (JK)^(1-s)) (log x)^(s-1)."""
    return x * (J ** (-s) * K + (J * K) ** (1 - s)) * math.log(x) ** (s - 1)


_QUAD_BUDGET = 2 * 10**8


def quadruple_count(query: QuadrupleQuery) -> QuadrupleResult:
    """Exact box count, iterating (k, u) and jumping j through the residue
    classes that solve j^s u = -sign mod k^s (brute-force oracle:
    powersieve.oracles.quadruple_count_bruteforce)."""
    s, x, J, K, sign = query.s, query.x, query.J, query.K, query.sign
    umax = (x - sign) // (J + 1) ** s
    if umax < 1:
        return QuadrupleResult(0, hs_bound(s, x, J, K))
    est = K * umax * (1 + J // max(2**s, 1))
    if est > _QUAD_BUDGET:
        raise ValueError(f"estimated work {est} beyond budget {_QUAD_BUDGET}")
    count = 0
    for k in range(K + 1, 2 * K + 1):
        ks = k**s
        for u in range(1, umax + 1):
            if math.gcd(u, k) != 1:
                continue
            for xi in hensel_solutions(s, u, k, sign):
                jstart = J + 1 + (xi - (J + 1)) % ks
                for j in range(jstart, 2 * J + 1, ks):
                    if j**s * u + sign <= x:
                        count += 1
    return QuadrupleResult(count, hs_bound(s, x, J, K))


@dataclass(frozen=True)
class TwinScanRow:
    s: int
    x: int
    count: int
    main: float
    error: float
    main_tail: float  # |true main - main| <= main_tail from truncating C_s
    in_fit: bool


def error_scan(
    s: int, xs: list[int], plimit: int = 10**6
) -> tuple[list[TwinScanRow], float]:
    """Twin counts against C_s * x; the fitted slope is the least-squares
    slope of log|error| vs log x over rows with |error| >= 1 (smaller errors
    have no stable log and are flagged out of the fit).

    main_tail carries the truncation uncertainty of C_s scaled by x, so large
    x rows state how much of the error could be constant truncation.
    """
    if not xs:
        raise ValueError("xs must be nonempty")
    if list(xs) != sorted(xs):
        raise ValueError("xs must be sorted ascending")
    c, tail = cs_constant(s, plimit)
    rows = []
    for x in xs:
        count = count_twin_sfree(s, x)
        main = c * x
        err = count - main
        rows.append(
            TwinScanRow(s, x, count, main, err, c * tail * x, abs(err) >= 1.0)
        )
    pts = [(math.log(r.x), math.log(abs(r.error))) for r in rows if r.in_fit]
    if len(pts) < 2:
        return rows, float("nan")
    lx = np.array([p[0] for p in pts])
    ly = np.array([p[1] for p in pts])
    dx = lx - lx.mean()
    denom = float(np.sum(dx * dx))
    if denom == 0.0:
        return rows, float("nan")
    return rows, float(np.sum(dx * (ly - ly.mean())) / denom)


@dataclass(frozen=True)
class ExponentTable:
    """Error-term exponents as exact rationals: the elementary 2/(s+1), the
    sieve-driven 14/(7s+8), and the auxiliary (39s+24)/(21s^2+38s+16)."""

    s: int
    carlitz: Fraction
    new: Fraction
    aux: Fraction


def exponent_table(s: int) -> ExponentTable:
    if s < 2:
        raise ValueError("s must be >= 2")
    carlitz = Fraction(2, s + 1)
    new = Fraction(14, 7 * s + 8)
    aux = Fraction(39 * s + 24, 21 * s * s + 38 * s + 16)
    if not new < carlitz:
        raise ArithmeticError(f"expected {new} < {carlitz} at s={s}")
    if not aux < new:
        raise ArithmeticError(f"expected {aux} < {new} at s={s}")
    return ExponentTable(s, carlitz, new, aux)


def q_choice(s: int, x: float, J: float, K: float) -> float:
    """x^(-1/6) J^(s/2) K^(-(s-1)/3) + (log x)^2, clamped to
    [(log x)^2, x].  K = 1 is allowed (its factor drops out)."""
    if x <= 1.0 or J <= 1.0 or K < 1.0:
        raise ValueError("need x, J > 1 and K >= 1")
    lg2 = math.log(x) ** 2
    q = x ** (-1.0 / 6.0) * J ** (s / 2.0) * K ** (-(s - 1) / 3.0) + lg2
    return min(max(q, lg2), float(x))
