"""Quadratic primes n**2 + d: enumeration, counting, gaps, twins, constants,
the two-variable n**2 + m**4 sum, prime-power scans, and largest-prime-factor
records.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad

from .arith import FactorSieve, factorize, is_prime_u64, primes_up_to
from .congruence import quadratic_character, roots_mod

_U64_MAX = (1 << 64) - 1


@dataclass(frozen=True)
class QuadraticPrimeList:
    """All n <= limit with n**2 + shift prime, with the primes and their gaps."""

    shift: int
    limit: int
    members: tuple
    primes: tuple

    @property
    def gaps(self) -> tuple:
        return tuple(b - a for a, b in zip(self.primes, self.primes[1:]))


def quadratic_primes(n_max: int, d: int) -> QuadraticPrimeList:
    if n_max >= 1 and n_max * n_max + d > _U64_MAX:
        raise OverflowError("n_max**2 + d exceeds 64 bits")
    members = []
    values = []
    for n in range(1, n_max + 1):
        v = n * n + d
        if is_prime_u64(v):
            members.append(n)
            values.append(v)
    return QuadraticPrimeList(d, n_max, tuple(members), tuple(values))


def pi_f(x: float, d: int) -> int:
    """Count of primes of the form n**2 + d <= x, n >= 1."""
    if x < d + 1:
        return 0
    top = math.isqrt(int(x) - d)
    return sum(1 for n in range(1, top + 1) if is_prime_u64(n * n + d))


def twin_quadratic_pairs(n_max: int) -> list:
    """All (n**2 + 1, n**2 + 3) with both entries prime, n <= n_max, ascending."""
    if n_max >= 1 and n_max * n_max + 3 > _U64_MAX:
        raise OverflowError("n_max**2 + 3 exceeds 64 bits")
    pairs = []
    for n in range(1, n_max + 1):
        a = n * n + 1
        if is_prime_u64(a) and is_prime_u64(a + 2):
            pairs.append((a, a + 2))
    return pairs


@dataclass(frozen=True)
class ConstantEstimate:
    """A truncated product/sum for an analytic constant, with tail averaging.

    The raw value is the truncation at the bound; the averaged value is the
    mean of the running value over primes in the top dyadic block, which damps
    the conditional oscillation.
    """

    name: str
    truncation_bound: int
    raw: float
    averaged: float
    reference: float | None = None


HL_CONSTANT_D1 = 1.3727  # truncated decimal as printed in the literature
B_CONSTANT_REF = -0.0662756342


def _character_values(d: int, odd_primes: np.ndarray) -> np.ndarray:
    if d == 1:
        return np.where(odd_primes % 4 == 1, 1, -1).astype(np.int64)
    return np.array([quadratic_character(d, int(p)) for p in odd_primes],
                    dtype=np.int64)


def hardy_littlewood_constant(d: int, prime_bound: int) -> ConstantEstimate:
    """Product over odd primes p <= bound of (1 - chi(p)/(p - 1)), chi = (-d | p).

    The product converges only conditionally; both the plain truncation and the
    tail-averaged value are reported.
    """
    ps = primes_up_to(prime_bound)
    ps = ps[ps >= 3]
    if len(ps) == 0:
        return ConstantEstimate("hardy_littlewood", prime_bound, 1.0, 1.0,
                                HL_CONSTANT_D1 if d == 1 else None)
    chi = _character_values(d, ps)
    factors = 1.0 - chi / (ps.astype(np.float64) - 1.0)
    running = np.cumprod(factors)
    tail = running[ps > prime_bound // 2]
    if len(tail) == 0:
        tail = running[-1:]
    return ConstantEstimate("hardy_littlewood", prime_bound,
                            float(running[-1]), float(tail.mean()),
                            HL_CONSTANT_D1 if d == 1 else None)


def kappa_quadrature() -> float:
    """Integral of sqrt(1 - t**4) over [0, 1], by adaptive quadrature."""
    value, _ = quad(lambda t: math.sqrt(1.0 - t ** 4), 0.0, 1.0,
                    epsabs=1e-13, epsrel=1e-13)
    return value


def kappa_gamma() -> float:
    """Gamma(1/4)**2 / (6 sqrt(2 pi)), the closed form of the same integral."""
    return math.gamma(0.25) ** 2 / (6.0 * math.sqrt(2.0 * math.pi))


@dataclass(frozen=True)
class FouvryIwaniecResult:
    x: float
    lambda_sum: float
    predicted: float

    @property
    def ratio(self) -> float:
        return self.lambda_sum / self.predicted if self.predicted else math.nan


def fouvry_iwaniec_sum(x: float) -> FouvryIwaniecResult:
    """Sum of Lambda(n**2 + m**4) over n, m >= 1 with n**2 + m**4 <= x,
    against the predicted (4 kappa / pi) x**(3/4)."""
    xi = int(x)
    if xi >= 1 << 63:
        raise OverflowError("x too large")
    # Lambda restricted to prime powers: primes tested directly, higher powers
    # from a precomputed table (sparse below x).
    power_log: dict = {}
    for p in primes_up_to(math.isqrt(xi) if xi >= 4 else 0):
        p = int(p)
        v = p * p
        lp = math.log(p)
        while v <= xi:
            power_log[v] = lp
            v *= p
    total = 0.0
    m = 1
    while m ** 4 + 1 <= xi:
        m4 = m ** 4
        top = math.isqrt(xi - m4)
        for n in range(1, top + 1):
            v = n * n + m4
            lam = power_log.get(v)
            if lam is not None:
                total += lam
            elif is_prime_u64(v):
                total += math.log(v)
        m += 1
    predicted = 4.0 * kappa_gamma() / math.pi * x ** 0.75
    return FouvryIwaniecResult(x, total, predicted)


def prime_power_scan(n_max: int, d: int) -> list:
    """All (n, p, nu) with n**2 + d = p**nu, 1 <= n <= n_max, nu >= 2.

    Enumerates prime powers p**nu <= n_max**2 + d and tests p**nu - d for a
    perfect square; equivalent to scanning n but far cheaper.
    """
    if n_max < 1:
        return []
    limit = n_max * n_max + d
    if limit > _U64_MAX:
        raise OverflowError("n_max**2 + d exceeds 64 bits")
    hits = []

    def check(p: int, nu: int, v: int):
        t = v - d
        if t >= 1:
            n = math.isqrt(t)
            if n * n == t and n <= n_max:
                hits.append((n, p, nu))

    # nu = 2: vectorized over all primes p <= sqrt(limit).
    ps = primes_up_to(math.isqrt(limit))
    if len(ps):
        vals = ps.astype(np.int64) ** 2 - d
        ok = vals >= 1
        roots = np.zeros_like(vals)
        roots[ok] = np.sqrt(vals[ok].astype(np.float64)).astype(np.int64)
        for p, v, r in zip(ps[ok], vals[ok], roots[ok]):
            for n in (int(r) - 1, int(r), int(r) + 1):
                if n >= 1 and n <= n_max and n * n == int(v):
                    hits.append((int(n), int(p), 2))
    # nu >= 3: p <= limit**(1/3), tiny.
    for p in primes_up_to(round(limit ** (1 / 3)) + 1):
        p = int(p)
        v = p ** 3
        nu = 3
        while v <= limit:
            check(p, nu, v)
            v *= p
            nu += 1
    return sorted(set(hits))


@dataclass(frozen=True)
class LpfRecords:
    """Record-breaking largest prime factors of n**2 + d, ranked by the
    exponent log P / log n, plus the overall maximum prime factor."""

    shift: int
    limit: int
    records: tuple  # (n, largest prime factor, exponent)
    max_prime: int


def _largest_factors(n_max: int, d: int, sieve: FactorSieve | None) -> list:
    """Largest prime factor of n**2 + d for n = 1..n_max, by root-stepping the
    primes p <= n_max through the value array and testing the cofactor."""
    vals = [0] + [n * n + d for n in range(1, n_max + 1)]
    lpf = [1] * (n_max + 1)
    for p in primes_up_to(n_max):
        p = int(p)
        for r in roots_mod(p, d, sieve).roots:
            start = r if r >= 1 else p
            for n in range(start, n_max + 1, p):
                if vals[n] % p == 0:
                    while vals[n] % p == 0:
                        vals[n] //= p
                    lpf[n] = max(lpf[n], p)
    for n in range(1, n_max + 1):
        c = vals[n]
        if c > 1:
            if is_prime_u64(c):
                lpf[n] = max(lpf[n], c)
            else:
                lpf[n] = max(lpf[n], factorize(c).largest_prime)
    return lpf


def largest_prime_factor_records(n_max: int, d: int,
                                 sieve: FactorSieve | None = None) -> LpfRecords:
    lpf = _largest_factors(n_max, d, sieve)
    records = []
    best = 0.0
    for n in range(2, n_max + 1):
        e = math.log(lpf[n]) / math.log(n)
        if e > best:
            best = e
            records.append((n, lpf[n], e))
    return LpfRecords(d, n_max, tuple(records), max(lpf[1:], default=1))
