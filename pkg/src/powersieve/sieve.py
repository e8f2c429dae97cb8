"""The power-sieve upper bound for weighted counts of perfect s-th powers:
diagonal term P^-1 * sum w(n) plus off-diagonal character pair sums, with
the degenerate single-point construction that shows the support cap e^P is
needed, and the exact expansion identities behind the bound."""

import math
from dataclasses import dataclass

import numpy as np

from .arithmetic import WORD_MAX, WordSizeError, iroot, primes_upto
from .characters import Character, is_admissible, order_s_character


class Weights:
    """Finitely supported nonnegative weights on positive integers."""

    def __init__(self, s: int, support: dict[int, float]):
        if s < 2:
            raise ValueError("s must be >= 2")
        for n, w in support.items():
            if n < 1:
                raise ValueError(f"support point {n} must be >= 1 (w(0) is forbidden)")
            if w < 0 or not math.isfinite(w):
                raise ValueError(f"weight w({n})={w} must be finite and >= 0")
        self.s = s
        self.support = dict(sorted(support.items()))
        self.ns = np.array(list(self.support.keys()), dtype=np.int64)
        self.ws = np.array(list(self.support.values()), dtype=np.float64)

    @classmethod
    def interval(cls, s: int, lo: int, hi: int, value: float = 1.0) -> "Weights":
        """Indicator-style weight on [lo, hi]."""
        if not 1 <= lo <= hi:
            raise ValueError("need 1 <= lo <= hi")
        return cls(s, {n: value for n in range(lo, hi + 1)})

    @classmethod
    def point(cls, s: int, n: int, value: float = 1.0) -> "Weights":
        return cls(s, {n: value})

    def __getitem__(self, n: int) -> float:
        return self.support.get(n, 0.0)

    def total(self) -> float:
        return float(np.sum(self.ws)) if self.ns.size else 0.0

    @property
    def max_n(self) -> int:
        return int(self.ns[-1]) if self.ns.size else 0


@dataclass(frozen=True)
class SievePrimeSet:
    """Sorted primes admissible for s (gcd(s, p-1) >= 2), none dividing the
    excluded integer; density_ratio = P*log(qhi)/qhi tracks P ~ Q/log Q."""

    s: int
    primes: tuple[int, ...]
    qlo: int
    qhi: int
    exclude: int
    density_ratio: float

    @property
    def P(self) -> int:
        return len(self.primes)

    def characters(self) -> list[Character]:
        return [order_s_character(p, self.s) for p in self.primes]


def admissible_primes(s: int, qlo: int, qhi: int, exclude: int = 1) -> SievePrimeSet:
    """All primes p in (qlo, qhi] with gcd(s, p-1) >= 2 and p not dividing
    exclude."""
    if qlo >= qhi:
        raise ValueError("need qlo < qhi")
    ps = [
        int(p)
        for p in primes_upto(qhi)
        if p > qlo and is_admissible(int(p), s) and exclude % int(p) != 0
    ]
    ratio = len(ps) * math.log(qhi) / qhi if qhi > 1 else 0.0
    return SievePrimeSet(s, tuple(ps), qlo, qhi, exclude, ratio)


def sieve_lhs(weights: Weights) -> float:
    """S(A) = sum of w at perfect s-th powers."""
    s = weights.s
    total = 0.0
    for n, w in weights.support.items():
        if iroot(n, s) ** s == n:
            total += w
    return total


@dataclass(frozen=True)
class SieveRhs:
    term1: float
    term2: float
    support_ok: bool
    support_limit: float

    def as_tuple(self) -> tuple[float, float]:
        return (self.term1, self.term2)


def _pair_sum(weights: Weights, cp: Character, cq: Character) -> complex:
    ns, ws = weights.ns, weights.ws
    if ns.size == 0:
        return 0j
    z = cp.vals[ns % cp.p] * np.conj(cq.vals[ns % cq.p]) * ws
    return complex(np.sum(z))


def sieve_rhs(weights: Weights, pset: SievePrimeSet) -> SieveRhs:
    """Both upper-bound terms, exactly over the finite support.

    term2 runs over ordered pairs p != q; the two orders contribute conjugate
    inner sums, so each unordered pair is computed once and doubled.  The
    support cap max(n) < e^P is reported as a flag, not enforced, so the
    degenerate single-point regime stays runnable.
    """
    P = pset.P
    if P < 2:
        raise ValueError("need at least two sieve primes")
    chars = pset.characters()
    term1 = weights.total() / P
    acc = 0.0
    for i in range(P):
        for j in range(i + 1, P):
            acc += 2.0 * abs(_pair_sum(weights, chars[i], chars[j]))
    term2 = acc / (P * P)
    limit = math.exp(P)
    return SieveRhs(term1, term2, weights.max_n < limit, limit)


@dataclass(frozen=True)
class DegeneratePointReport:
    m: int
    point: int
    lhs: float
    term1: float
    term2: float
    support_violated: bool
    passed: bool


def support_cap_counterexample(pset: SievePrimeSet) -> DegeneratePointReport:
    """Weight concentrated at (prod of sieve primes)^s: every character in
    the pair sums vanishes there, so the bound degenerates to (1/P, 0) while
    the true count is 1.  Requires the support cap to be (knowingly) broken."""
    P = pset.P
    if P < 2:
        raise ValueError("need at least two sieve primes")
    m = 1
    for p in pset.primes:
        m *= p
    if m > iroot(WORD_MAX, pset.s):
        raise WordSizeError(f"m^s overflows the word domain (m={m}, s={pset.s})")
    point = m**pset.s
    weights = Weights.point(pset.s, point)
    lhs = sieve_lhs(weights)
    rhs = sieve_rhs(weights, pset)
    passed = lhs == 1.0 and rhs.term1 == 1.0 / P and rhs.term2 == 0.0
    return DegeneratePointReport(
        m=m,
        point=point,
        lhs=lhs,
        term1=rhs.term1,
        term2=rhs.term2,
        support_violated=not rhs.support_ok,
        passed=passed,
    )


@dataclass(frozen=True)
class SigmaResult:
    value: float
    expansion: float
    residual: float


def sigma_quantity(weights: Weights, pset: SievePrimeSet) -> SigmaResult:
    """sum_n w(n) |sum_p chi_p(n)|^2, with the independent check that
    expanding the square over ordered pairs (p, q) reproduces it."""
    P = pset.P
    if P < 2:
        raise ValueError("need at least two sieve primes")
    chars = pset.characters()
    ns, ws = weights.ns, weights.ws
    if ns.size == 0:
        return SigmaResult(0.0, 0.0, 0.0)
    inner = np.zeros(ns.size, dtype=np.complex128)
    for ch in chars:
        inner += ch.vals[ns % ch.p]
    value = float(np.sum(ws * np.abs(inner) ** 2))
    expansion = 0j
    for cp in chars:
        for cq in chars:
            expansion += _pair_sum(weights, cp, cq)
    residual = abs(value - expansion) / (1.0 + abs(value))
    return SigmaResult(value, float(expansion.real), residual)


def diagonal_term(weights: Weights, pset: SievePrimeSet) -> float:
    """The p = q part of the expanded square: sum_n w(n) #{p : p does not
    divide n}; at most P * sum w(n)."""
    ns, ws = weights.ns, weights.ws
    if ns.size == 0:
        return 0.0
    hits = np.zeros(ns.size, dtype=np.int64)
    for p in pset.primes:
        hits += ns % p != 0
    return float(np.sum(ws * hits))


def inner_count_identity(m: int, pset: SievePrimeSet) -> int:
    """sum_p chi_p(m^s) both as a complex sum and as #{p : p does not divide
    m}; the two must agree exactly (character values at s-th powers are
    exactly 1)."""
    if m < 1:
        raise ValueError("m must be >= 1")
    count = sum(1 for p in pset.primes if m % p != 0)
    z = 0j
    for ch in pset.characters():
        z += ch(pow(m, pset.s, ch.p))
    if z.real != float(count) or z.imag != 0.0:
        raise ArithmeticError(
            f"character route {z} disagrees with divisibility count {count}"
        )
    return count


def v_bounds(s: int, J: float, K: float, U: float, sign: int) -> tuple[float, float]:
    """Range [L, M] of the dependent variable v over the dyadic boxes
    (J, 2J] x (K, 2K] x (U, 2U]."""
    L = max((J**s * U + sign) / (2 * K) ** s, 1.0)
    M = ((2 * J) ** s * 2 * U + sign) / K**s
    return L, M


def twin_pair_weight(s: int, u: int, sign: int, K: int, L: float, M: float) -> Weights:
    """Weight at t * u^(s-1) counting pairs (k, v) with k in (K, 2K],
    v in [L, M], and t = k^s v - sign divisible by u.

    t * u^(s-1) is a perfect s-th power exactly when t = j^s u, so summing
    this weight over s-th powers dominates the dyadic solution count for the
    fixed u."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if u < 1 or K < 1:
        raise ValueError("u and K must be positive")
    support: dict[int, float] = {}
    shift = u ** (s - 1)
    vlo = max(math.ceil(L), 1)
    vhi = math.floor(M)
    for k in range(K + 1, 2 * K + 1):
        ks = k**s
        for v in range(vlo, vhi + 1):
            t = ks * v - sign
            if t >= 1 and t % u == 0:
                key = t * shift
                support[key] = support.get(key, 0.0) + 1.0
    return Weights(s, support)
