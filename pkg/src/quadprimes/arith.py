"""Sieve-backed arithmetic functions and deterministic 64-bit primality.

The smallest-prime-factor sieve is the shared substrate: Mobius, von Mangoldt,
omega and full factorizations are O(log n) per query once the table exists.
Everything above the sieve limit falls back to direct factorization
(trial division + Pollard rho) and a deterministic Miller-Rabin test.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61,
                 67, 71, 73, 79, 83, 89, 97)

# Verified deterministic witness sets (Jaeschke; Sorenson-Webster for the top rows).
# Each entry (bound, bases): the bases are sufficient for all n < bound.
_MR_WITNESSES = (
    (2_047, (2,)),
    (1_373_653, (2, 3)),
    (25_326_001, (2, 3, 5)),
    (3_215_031_751, (2, 3, 5, 7)),
    (2_152_302_898_747, (2, 3, 5, 7, 11)),
    (3_474_749_660_383, (2, 3, 5, 7, 11, 13)),
    (341_550_071_728_321, (2, 3, 5, 7, 11, 13, 17)),
    (3_825_123_056_546_413_051, (2, 3, 5, 7, 11, 13, 17, 19, 23)),
    (1 << 64, (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)),
)


def is_prime_u64(n: int) -> bool:
    """Deterministic primality for 0 <= n < 2**64 (fixed Miller-Rabin witnesses)."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n == p:
            return True
        if n % p == 0:
            return False
    if n >= 1 << 64:
        raise ValueError("is_prime_u64 requires n < 2**64")
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for bound, bases in _MR_WITNESSES:
        if n < bound:
            witnesses = bases
            break
    for a in witnesses:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _iroot(n: int, k: int) -> int:
    """Floor of the integer k-th root of n >= 0."""
    if n < 0:
        raise ValueError("negative radicand")
    if k == 1 or n < 2:
        return n
    if k == 2:
        return math.isqrt(n)
    r = int(round(n ** (1.0 / k)))
    while r > 1 and r ** k > n:
        r -= 1
    while (r + 1) ** k <= n:
        r += 1
    return r


def is_prime_power(n: int):
    """Return (p, nu) with n = p**nu, nu >= 1, or None. is_prime_power(1) is None."""
    if n < 2:
        return None
    if is_prime_u64(n):
        return (n, 1)
    for p in _SMALL_PRIMES:
        if n % p == 0:
            m, nu = n, 0
            while m % p == 0:
                m //= p
                nu += 1
            return (p, nu) if m == 1 else None
    # No factor below 100: a proper power must have exponent <= log_101(n).
    for k in range(2, n.bit_length() // 6 + 2):
        r = _iroot(n, k)
        if r ** k == n and is_prime_u64(r):
            return (r, k)
    return None


def _pollard_rho(n: int) -> int:
    """One nontrivial factor of composite n (Brent's cycle variant, fixed seeds)."""
    if n % 2 == 0:
        return 2
    for c in range(1, 100):
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d
    raise ArithmeticError(f"pollard rho failed on {n}")


@dataclass(frozen=True)
class Factorization:
    """Prime factorization of value as ((p1, e1), (p2, e2), ...), primes increasing."""

    value: int
    parts: tuple

    @property
    def omega(self) -> int:
        return len(self.parts)

    @property
    def largest_prime(self) -> int:
        return self.parts[-1][0] if self.parts else 1

    def verify(self) -> bool:
        prod = 1
        for p, e in self.parts:
            prod *= p ** e
        return prod == self.value


def factorize(n: int) -> Factorization:
    """Factor n >= 1 without a sieve: trial division then Pollard rho."""
    if n < 1:
        raise ValueError("factorize requires n >= 1")
    parts = {}
    m = n
    for p in _SMALL_PRIMES:
        while m % p == 0:
            parts[p] = parts.get(p, 0) + 1
            m //= p
    stack = [m] if m > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime_u64(m):
            parts[m] = parts.get(m, 0) + 1
            continue
        pp = is_prime_power(m)
        if pp:
            p, e = pp
            parts[p] = parts.get(p, 0) + e
            continue
        d = _pollard_rho(m)
        stack.append(d)
        stack.append(m // d)
    return Factorization(n, tuple(sorted(parts.items())))


class FactorSieve:
    """Smallest-prime-factor table for [2, limit]; immutable after construction."""

    def __init__(self, limit: int):
        if limit < 2:
            raise ValueError("sieve limit must be >= 2")
        self.limit = int(limit)
        spf = np.zeros(self.limit + 1, dtype=np.int64)
        for p in range(2, math.isqrt(self.limit) + 1):
            if spf[p] == 0:
                block = spf[p * p :: p]
                block[block == 0] = p
        unset = np.nonzero(spf[2:] == 0)[0] + 2
        spf[unset] = unset
        self.spf = spf

    def smallest_prime_factor(self, n: int) -> int:
        return int(self.spf[n])

    def is_prime(self, n: int) -> bool:
        return n >= 2 and self.spf[n] == n

    def factor(self, n: int) -> Factorization:
        if not 1 <= n <= self.limit:
            raise ValueError(f"n={n} outside sieve range [1, {self.limit}]")
        parts = []
        m = n
        while m > 1:
            p = int(self.spf[m])
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            parts.append((p, e))
        return Factorization(n, tuple(parts))

    def mobius(self, n: int) -> int:
        if n == 1:
            return 1
        t = 0
        m = n
        while m > 1:
            p = int(self.spf[m])
            m //= p
            if m % p == 0:
                return 0
            t += 1
        return -1 if t % 2 else 1

    def omega(self, n: int) -> int:
        t = 0
        m = n
        while m > 1:
            p = int(self.spf[m])
            while m % p == 0:
                m //= p
            t += 1
        return t

    def von_mangoldt(self, n: int) -> float:
        if n < 2:
            return 0.0
        p = int(self.spf[n])
        m = n
        while m % p == 0:
            m //= p
        return math.log(p) if m == 1 else 0.0

    def primes(self) -> np.ndarray:
        idx = np.arange(2, self.limit + 1)
        return idx[self.spf[2:] == idx]


def _parts_of(n: int, sieve: FactorSieve | None) -> tuple:
    if sieve is not None and n <= sieve.limit:
        return sieve.factor(n).parts
    return factorize(n).parts


def mobius(n: int, sieve: FactorSieve | None = None) -> int:
    if n < 1:
        raise ValueError("mobius requires n >= 1")
    if sieve is not None and n <= sieve.limit:
        return sieve.mobius(n)
    parts = factorize(n).parts
    if any(e > 1 for _, e in parts):
        return 0
    return -1 if len(parts) % 2 else 1


def omega(n: int, sieve: FactorSieve | None = None) -> int:
    if n < 1:
        raise ValueError("omega requires n >= 1")
    if sieve is not None and n <= sieve.limit:
        return sieve.omega(n)
    return factorize(n).omega


def von_mangoldt(n: int, sieve: FactorSieve | None = None) -> float:
    """log p when n = p**k (k >= 1), else 0."""
    if n < 1:
        raise ValueError("von_mangoldt requires n >= 1")
    if sieve is not None and n <= sieve.limit:
        return sieve.von_mangoldt(n)
    if n == 1:
        return 0.0
    # Cheap rejection: a small factor not accounting for all of n kills it.
    for p in _SMALL_PRIMES:
        if n % p == 0:
            m = n
            while m % p == 0:
                m //= p
            return math.log(p) if m == 1 else 0.0
    if is_prime_u64(n):
        return math.log(n)
    pp = is_prime_power(n)
    return math.log(pp[0]) if pp else 0.0


def von_mangoldt_via_mobius(n: int, sieve: FactorSieve | None = None) -> float:
    """-sum over divisors q of n of mu(q) log q (inclusion-exclusion route).

    Only squarefree divisors contribute; they are exactly the products of
    subsets of the distinct prime divisors of n.
    """
    if n < 1:
        raise ValueError("requires n >= 1")
    primes = [p for p, _ in _parts_of(n, sieve)]
    total = 0.0
    for mask in range(1 << len(primes)):
        q = 1
        bits = 0
        m = mask
        i = 0
        while m:
            if m & 1:
                q *= primes[i]
                bits += 1
            m >>= 1
            i += 1
        total += (-1 if bits % 2 else 1) * math.log(q)
    return -total


def divisors(n: int, sieve: FactorSieve | None = None) -> list:
    """All positive divisors of n, ascending."""
    divs = [1]
    for p, e in _parts_of(n, sieve):
        divs = [d * p ** k for d in divs for k in range(e + 1)]
    return sorted(divs)


def squarefree_divisors(n: int, sieve: FactorSieve | None = None) -> list:
    """(q, mu(q)) for every squarefree divisor q of n."""
    out = [(1, 1)]
    for p, _ in _parts_of(n, sieve):
        out += [(q * p, -s) for q, s in out]
    return out


_SIEVE_CACHE: FactorSieve | None = None


def shared_sieve(limit: int) -> FactorSieve:
    """Process-wide sieve, grown on demand; safe to share across readers."""
    global _SIEVE_CACHE
    if _SIEVE_CACHE is None or _SIEVE_CACHE.limit < limit:
        _SIEVE_CACHE = FactorSieve(max(limit, 2))
    return _SIEVE_CACHE


def primes_up_to(limit: int) -> np.ndarray:
    """All primes <= limit via a plain boolean Eratosthenes sieve."""
    if limit < 2:
        return np.empty(0, dtype=np.int64)
    mask = np.ones(limit + 1, dtype=bool)
    mask[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if mask[p]:
            mask[p * p :: p] = False
    return np.nonzero(mask)[0].astype(np.int64)
