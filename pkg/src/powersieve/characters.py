"""Multiplicative characters mod p whose s-th power is principal, built on a
discrete-log table over the least primitive root, plus Gauss sums and
truncated character pair sums.

Values are carried as exponents in Z_d (exact) with a -1 marker at multiples
of p; conversion to complex happens only where sums are formed.
"""

import functools
import math
from dataclasses import dataclass, field

import numpy as np

from .arithmetic import is_prime


class InadmissiblePrimeError(ValueError):
    """gcd(s, p-1) = 1: no non-principal character is trivial on s-th powers."""


def find_primitive_root(p: int) -> int:
    """Least g in [2, p-1] of multiplicative order p-1 mod p."""
    if not is_prime(p) or p < 3:
        raise ValueError(f"p={p} is not an odd prime")
    n = p - 1
    prime_parts = []
    m = n
    f = 2
    while f * f <= m:
        if m % f == 0:
            prime_parts.append(f)
            while m % f == 0:
                m //= f
        f += 1
    if m > 1:
        prime_parts.append(m)
    for g in range(2, p):
        if all(pow(g, n // r, p) != 1 for r in prime_parts):
            return g
    raise ValueError(f"no primitive root found mod {p}")  # unreachable for prime p


@dataclass(frozen=True)
class Character:
    """chi(g^k) = exp(2*pi*i * j*k / d) with d = gcd(s, p-1), twist j.

    The canonical choice is j = 1; .power(j) gives the other characters that
    are still trivial on s-th powers (any j != 0 mod d keeps them
    non-principal).
    """

    p: int
    s: int
    d: int
    g: int
    twist: int
    expo: np.ndarray = field(repr=False, compare=False)
    vals: np.ndarray = field(repr=False, compare=False)

    @property
    def order(self) -> int:
        return self.d // math.gcd(self.twist, self.d)

    def expo_of(self, n: int) -> int:
        """Exponent of chi(n) in Z_d, or -1 when p | n."""
        return int(self.expo[n % self.p])

    def __call__(self, n: int) -> complex:
        return complex(self.vals[n % self.p])

    def power(self, j: int) -> "Character":
        """The twisted character chi^j; j = 0 mod d (principal) is rejected."""
        j %= self.d
        if j == 0:
            raise ValueError("principal character not representable")
        return _build_character(self.p, self.s, self.twist * j % self.d)


@functools.lru_cache(maxsize=512)  # three O(p) tables per entry
def _build_character(p: int, s: int, twist: int) -> Character:
    d = math.gcd(s, p - 1)
    if d < 2:
        raise InadmissiblePrimeError(f"p={p} inadmissible for s={s}: gcd(s, p-1)=1")
    g = find_primitive_root(p)
    dlog = np.full(p, -1, dtype=np.int64)
    x = 1
    for k in range(p - 1):
        dlog[x] = k
        x = x * g % p
    expo = np.where(dlog >= 0, dlog * twist % d, -1)
    vals = np.where(expo >= 0, np.exp(2j * np.pi * np.maximum(expo, 0) / d), 0j)
    return Character(p=p, s=s, d=d, g=g, twist=twist, expo=expo, vals=vals)


def order_s_character(p: int, s: int) -> Character:
    """Canonical non-principal chi mod p with chi^s principal."""
    if s < 2:
        raise ValueError("s must be >= 2")
    if not is_prime(p) or p < 3:
        raise ValueError(f"p={p} is not an odd prime")
    return _build_character(p, s, 1)


def char_eval(chi: Character, n: int) -> complex:
    """chi(n): 0 on multiples of p, a d-th root of unity otherwise."""
    return chi(n)


def gauss_sum(chi: Character) -> complex:
    """tau(chi) = sum over beta in [1, p] of chi(beta) e(beta/p)."""
    if chi.order == 1:
        raise ValueError("Gauss sum requires a non-principal character")
    p = chi.p
    roots = np.exp(2j * np.pi * np.arange(p) / p)
    return complex(np.sum(chi.vals * roots))


def is_admissible(p: int, s: int) -> bool:
    return is_prime(p) and p >= 3 and math.gcd(s, p - 1) >= 2


def pair_char_sum(p: int, q: int, s: int, x: int) -> complex:
    """Sum over n <= x of chi_p(n) * conj(chi_q(n)) for the canonical pair."""
    if p == q:
        raise ValueError("need distinct moduli")
    chi_p = order_s_character(p, s)
    chi_q = order_s_character(q, s)
    if x <= 0:
        return 0j
    ns = np.arange(1, x + 1, dtype=np.int64)
    z = chi_p.vals[ns % p] * np.conj(chi_q.vals[ns % q])
    return complex(np.sum(z))
