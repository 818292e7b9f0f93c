"""Roots of n**2 + d = 0 (mod q): prime moduli, prime-power lifting, CRT.

rho(q) = #roots in [0, q) is multiplicative over coprime moduli; for odd
primes p with p coprime to d it is 1 + (-d | p).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .arith import FactorSieve, factorize, is_prime_u64

_SCAN_CUTOFF = 64  # exhaustive residue scan below this prime; Tonelli-Shanks above


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a | p) for an odd prime p."""
    a %= p
    if a == 0:
        return 0
    t = pow(a, (p - 1) // 2, p)
    return -1 if t == p - 1 else 1


def quadratic_character(d: int, p: int) -> int:
    """(-d | p) for odd prime p: +1/-1/0 as -d is a residue/nonresidue/0 mod p."""
    return legendre(-d % p, p)


def sqrt_mod_prime(a: int, p: int) -> list:
    """All z in [0, p) with z*z = a (mod p); [] when a is a nonresidue.

    Rejects composite p (caller contract violation).
    """
    if not is_prime_u64(p):
        raise ValueError(f"modulus {p} is not prime")
    a %= p
    if p == 2:
        return [a]
    if a == 0:
        return [0]
    if p < _SCAN_CUTOFF:
        return [z for z in range(p) if z * z % p == a]
    if legendre(a, p) != 1:
        return []
    if p % 4 == 3:
        z = pow(a, (p + 1) // 4, p)
    else:
        z = _tonelli_shanks(a, p)
    return sorted({z, p - z})


def _tonelli_shanks(a: int, p: int) -> int:
    # p = 1 (mod 4), a a known residue.
    s, e = p - 1, 0
    while s % 2 == 0:
        s //= 2
        e += 1
    n = 2
    while legendre(n, p) != -1:
        n += 1
    x = pow(a, (s + 1) // 2, p)
    b = pow(a, s, p)
    g = pow(n, s, p)
    r = e
    while True:
        t = b
        m = 0
        while t != 1:
            t = t * t % p
            m += 1
        if m == 0:
            return x
        gs = pow(g, 1 << (r - m - 1), p)
        g = gs * gs % p
        x = x * gs % p
        b = b * g % p
        r = m


def _lift_prime_power(p: int, k: int, d: int) -> list:
    """Roots of n**2 + d = 0 (mod p**k), by Hensel steps from the base prime.

    Nonsingular roots (p does not divide 2r) lift uniquely via Newton's step;
    singular ones (only possible when p divides 2d) branch over t in [0, p).
    """
    if p == 2:
        roots = [(-d) % 2]
    else:
        roots = sqrt_mod_prime(-d % p, p)
    mod = p
    for _ in range(k - 1):
        mod_next = mod * p
        lifted = []
        for r in roots:
            fr = (r * r + d) % mod_next
            if (2 * r) % p != 0:
                inv = pow(2 * r, -1, mod_next)
                lifted.append((r - fr * inv) % mod_next)
            else:
                if fr == 0:
                    lifted.extend(r + t * mod for t in range(p))
        roots = sorted(set(lifted))
        mod = mod_next
    return roots


@dataclass(frozen=True)
class RootSet:
    """Sorted roots of n**2 + shift = 0 (mod modulus) in [0, modulus)."""

    modulus: int
    shift: int
    roots: tuple

    @property
    def count(self) -> int:
        return len(self.roots)


def roots_mod(q: int, d: int, sieve: FactorSieve | None = None) -> RootSet:
    """Exact RootSet for modulus q >= 1 via prime-power lifting + CRT."""
    if q < 1:
        raise ValueError("modulus must be >= 1")
    if q == 1:
        return RootSet(1, d, (0,))
    if sieve is not None and q <= sieve.limit:
        parts = sieve.factor(q).parts
    else:
        parts = factorize(q).parts
    residues = [0]
    mod = 1
    for p, e in parts:
        pe = p ** e
        local = _lift_prime_power(p, e, d)
        if not local:
            return RootSet(q, d, ())
        inv = pow(mod % pe, -1, pe) if mod % pe else None
        if inv is None:  # mod and pe share a factor: impossible, parts are coprime
            raise AssertionError
        combined = []
        for a in residues:
            for b in local:
                combined.append(a + mod * ((b - a) * inv % pe))
        residues = combined
        mod *= pe
    return RootSet(q, d, tuple(sorted(r % q for r in residues)))


def rho(q: int, d: int, sieve: FactorSieve | None = None) -> int:
    """Number of solutions of n**2 + d = 0 (mod q) in [0, q)."""
    return roots_mod(q, d, sieve).count


def roots_mod_scan(q: int, d: int) -> tuple:
    """Brute-force oracle: test every residue in [0, q)."""
    if q == 1:
        return (0,)
    n = np.arange(q, dtype=np.int64)
    hits = np.nonzero((n * n + d) % q == 0)[0]
    return tuple(int(v) for v in hits)


def rho_table(limit: int, d: int, sieve: FactorSieve) -> np.ndarray:
    """rho(q, d) for all q in [0, limit], by multiplicative recursion over spf."""
    if sieve.limit < limit:
        raise ValueError("sieve too small for rho_table")
    spf = sieve.spf
    out = np.zeros(limit + 1, dtype=np.int64)
    out[1] = 1
    pp_cache: dict = {}
    for q in range(2, limit + 1):
        p = int(spf[q])
        m = q
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        key = (p, e)
        r = pp_cache.get(key)
        if r is None:
            r = len(_lift_prime_power(p, e, d))
            pp_cache[key] = r
        out[q] = r * out[m]
    return out
