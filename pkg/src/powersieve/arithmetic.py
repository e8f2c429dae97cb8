"""Integer infrastructure: factorization, Mobius, generalized divisor counts,
segmented s-free sieving, and the squarefree x squarefull splitting."""

import math
from dataclasses import dataclass

import numpy as np

from . import _backend

# Kernels and python ints are kept inside the signed 64-bit range so the
# numba and numpy paths agree bit for bit with the pure-python arithmetic.
WORD_MAX = 2**63 - 1

# Segment length for the s-free sieve; cache-size tunable, not a correctness
# parameter.
DEFAULT_SEGMENT = 1 << 16


class WordSizeError(OverflowError):
    """Input exceeds the 64-bit integer domain the kernels operate in."""


def _check_word(n: int, what: str = "n") -> int:
    if n > WORD_MAX:
        raise WordSizeError(f"{what}={n} exceeds the 64-bit domain")
    return n


@dataclass(frozen=True)
class Factorization:
    """n as a product of prime powers, primes strictly increasing."""

    n: int
    factors: tuple[tuple[int, int], ...]

    def nu(self) -> int:
        """Number of distinct prime divisors."""
        return len(self.factors)


def primes_upto(n: int) -> np.ndarray:
    """All primes <= n as an int64 array (Eratosthenes)."""
    if n < 2:
        return np.empty(0, dtype=np.int64)
    is_p = np.ones(n + 1, dtype=bool)
    is_p[:2] = False
    for p in range(2, math.isqrt(n) + 1):
        if is_p[p]:
            is_p[p * p :: p] = False
    return np.nonzero(is_p)[0].astype(np.int64)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def iroot(x: int, s: int) -> int:
    """Floor of the s-th root of x >= 0, exact in integer arithmetic."""
    if x < 0:
        raise ValueError("x must be nonnegative")
    if s < 1:
        raise ValueError("s must be >= 1")
    if x in (0, 1) or s == 1:
        return x
    r = int(round(x ** (1.0 / s)))
    while r > 0 and r**s > x:
        r -= 1
    while (r + 1) ** s <= x:
        r += 1
    return r


def crt_pair(r1: int, m1: int, r2: int, m2: int) -> int:
    """Unique x mod m1*m2 with x = r1 (m1), x = r2 (m2); moduli coprime."""
    if m1 == 1:
        return r2 % m2
    if m2 == 1:
        return r1 % m1
    k = (r2 - r1) * pow(m1, -1, m2) % m2
    return (r1 + m1 * k) % (m1 * m2)


def factorize(n: int) -> Factorization:
    """Trial-division factorization; rejects n = 0 and beyond-word inputs."""
    if n == 0:
        raise ValueError("n must be positive")
    if n < 0:
        raise ValueError("n must be positive")
    _check_word(n)
    factors = []
    m = n
    for p in (2, 3):
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            factors.append((p, e))
    f = 5
    while f * f <= m:
        for p in (f, f + 2):
            if m % p == 0:
                e = 0
                while m % p == 0:
                    m //= p
                    e += 1
                factors.append((p, e))
        f += 6
    if m > 1:
        factors.append((m, 1))
    return Factorization(n, tuple(factors))


def mobius(n: int) -> int:
    """mu(n): (-1)^nu for squarefree n, 0 otherwise."""
    fac = factorize(n)
    for _, e in fac.factors:
        if e >= 2:
            return 0
    return -1 if fac.nu() % 2 else 1


def mobius_sieve(n: int) -> np.ndarray:
    """mu(0..n) as int8, computed by sieving (independent of factorize)."""
    mu = np.ones(n + 1, dtype=np.int8)
    if n >= 0:
        mu[0] = 0
    for p in primes_upto(n):
        p = int(p)
        mu[p::p] *= -1
        mu[p * p :: p * p] = 0
    return mu


def divisor_count(n: int, k: int = 2) -> int:
    """d_k(n): number of ordered k-tuples with product n."""
    if k < 2:
        raise ValueError("k must be >= 2")
    total = 1
    for _, e in factorize(n).factors:
        total *= math.comb(e + k - 1, k - 1)
    return total


@dataclass(frozen=True)
class SfreeSegment:
    """Flags for [lo, hi]: flags[i] is True iff lo+i has no divisor p**s."""

    s: int
    lo: int
    hi: int
    flags: np.ndarray

    def __contains__(self, n: int) -> bool:
        if not self.lo <= n <= self.hi:
            raise ValueError(f"{n} outside segment [{self.lo}, {self.hi}]")
        return bool(self.flags[n - self.lo])

    def count(self) -> int:
        return int(np.count_nonzero(self.flags))


def _prime_powers_for(s: int, hi: int) -> np.ndarray:
    return primes_upto(iroot(hi, s)) ** s


def sfree_segment(s: int, lo: int, hi: int) -> SfreeSegment:
    """Mark the s-free numbers in [lo, hi] by striking multiples of p**s."""
    if s < 2:
        raise ValueError("s must be >= 2")
    if not 1 <= lo <= hi:
        raise ValueError("need 1 <= lo <= hi")
    _check_word(hi, "hi")
    if hi - lo + 1 > (1 << 28):
        raise WordSizeError("segment too large; sieve in pieces")
    qs = _prime_powers_for(s, hi)
    flags = _backend.kernels().sfree_flags(lo, hi, qs)
    return SfreeSegment(s, lo, hi, flags)


def squarefull_decompose(u: int) -> tuple[int, int]:
    """Split u = w*t with w squarefree, t squarefull, gcd(w, t) = 1.

    w collects the primes of exponent exactly 1; u = 1 gives (1, 1), with 1
    counted as squarefull (vacuous condition).
    """
    if u < 1:
        raise ValueError("u must be positive")
    w = 1
    t = 1
    for p, e in factorize(u).factors:
        if e == 1:
            w *= p
        else:
            t *= p**e
    return w, t


def is_squarefull(n: int) -> bool:
    """True iff every prime factor of n has exponent >= 2 (true for n = 1)."""
    return all(e >= 2 for _, e in factorize(n).factors)


def squarefull_upto(z: int) -> np.ndarray:
    """Sorted squarefull numbers <= z via the a^2 b^3 parameterization.

    The (a, b) pairs overlap (e.g. 64 = 8^2 = 4^3), so values are dedup'd.
    """
    if z < 1:
        return np.empty(0, dtype=np.int64)
    _check_word(z, "z")
    vals = set()
    b = 1
    while b**3 <= z:
        b3 = b**3
        a = 1
        while a * a * b3 <= z:
            vals.add(a * a * b3)
            a += 1
        b += 1
    return np.array(sorted(vals), dtype=np.int64)


def count_squarefull(z: int) -> int:
    """Number of squarefull t <= z; O(sqrt(z)) many, constant reported by tests."""
    return int(squarefull_upto(z).size)
