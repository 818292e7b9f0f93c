"""The quadratic Chebyshev-type function psi_f(n) = log lcm(1^2+1, ..., n^2+1),
its linear-term constant, and the residual trend against n log n + B n.

The primary route sums max prime-power valuations (only logs of prime powers
are ever needed); exact big-integer lcm is kept as an oracle for small n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .arith import is_prime_u64, primes_up_to
from .congruence import roots_mod
from .primes import B_CONSTANT_REF, ConstantEstimate


def euler_gamma(n: int = 200) -> float:
    """Euler-Mascheroni constant via Euler-Maclaurin on the harmonic sum;
    accurate to well beyond 12 digits already at n = 50."""
    h = sum(1.0 / k for k in range(1, n + 1))
    n2 = float(n) * n
    return (h - math.log(n) - 0.5 / n + 1.0 / (12.0 * n2)
            - 1.0 / (120.0 * n2 * n2) + 1.0 / (252.0 * n2 * n2 * n2))


def _factor_structure(n_max: int) -> list:
    """facs[m] = prime factorization of m**2 + 1 for 1 <= m <= n_max.

    Primes up to n_max are stripped by stepping the roots of the congruence;
    the remaining cofactor is 1 or a single prime > n_max.
    """
    vals = [0] + [m * m + 1 for m in range(1, n_max + 1)]
    facs: list = [[] for _ in range(n_max + 1)]
    for p in primes_up_to(n_max):
        p = int(p)
        if p != 2 and p % 4 != 1:
            continue  # -1 is a nonresidue, p never divides m**2 + 1
        for r in roots_mod(p, 1).roots:
            start = r if r >= 1 else p
            for m in range(start, n_max + 1, p):
                e = 0
                while vals[m] % p == 0:
                    vals[m] //= p
                    e += 1
                if e:
                    facs[m].append((p, e))
    for m in range(1, n_max + 1):
        if vals[m] > 1:
            facs[m].append((vals[m], 1))
    return facs


def _log_big(n: int) -> float:
    shift = max(0, n.bit_length() - 900)
    return math.log(n >> shift) + shift * math.log(2.0)


def psi_f(n: int) -> float:
    """log lcm(1**2+1, ..., n**2+1) via maximal prime-power valuations."""
    if n < 1:
        raise ValueError("psi_f requires n >= 1")
    best: dict = {}
    for parts in _factor_structure(n)[1:]:
        for p, e in parts:
            if e > best.get(p, 0):
                best[p] = e
    return sum(e * math.log(p) for p, e in sorted(best.items()))


def psi_f_direct(n: int) -> float:
    """Oracle: exact big-integer lcm, then its log."""
    acc = 1
    for m in range(1, n + 1):
        acc = math.lcm(acc, m * m + 1)
    return _log_big(acc)


def max_valuation(p: int, n: int) -> int:
    """max over m <= n of v_p(m**2 + 1), via prime-power root lifting.

    The valuation reaches k iff some root of the congruence mod p**k is <= n.
    """
    if not is_prime_u64(p):
        raise ValueError("p must be prime")
    if n < 1:
        return 0
    if p == 2:
        return 1  # m**2 + 1 = 2 (mod 4) for odd m
    best = 0
    k = 1
    while p ** k <= n * n + 1:
        roots = roots_mod(p ** k, 1).roots
        if not roots or min(roots) > n:
            break
        best = k
        k += 1
    return best


def max_valuation_trial(p: int, n: int) -> int:
    """Oracle: direct division over every m <= n."""
    best = 0
    for m in range(1, n + 1):
        v = m * m + 1
        e = 0
        while v % p == 0:
            v //= p
            e += 1
        best = max(best, e)
    return best


def B_constant(prime_bound: int) -> ConstantEstimate:
    """gamma - 1 - log(2)/2 - sum over odd primes p <= bound of (-1|p) log p/(p-1),
    with tail averaging over the top dyadic block of primes."""
    base = euler_gamma() - 1.0 - math.log(2.0) / 2.0
    ps = primes_up_to(prime_bound)
    ps = ps[ps >= 3]
    if len(ps) == 0:
        return ConstantEstimate("B", prime_bound, base, base, B_CONSTANT_REF)
    chi = np.where(ps % 4 == 1, 1.0, -1.0)
    terms = chi * np.log(ps.astype(np.float64)) / (ps.astype(np.float64) - 1.0)
    running = base - np.cumsum(terms)
    tail = running[ps > prime_bound // 2]
    if len(tail) == 0:
        tail = running[-1:]
    return ConstantEstimate("B", prime_bound, float(running[-1]),
                            float(tail.mean()), B_CONSTANT_REF)


@dataclass(frozen=True)
class PsiTrace:
    """psi_f sampled at geometric points with residuals against n log n + B n."""

    ns: tuple
    psi: tuple
    residuals: tuple
    B_used: float
    fitted_slope: float


def psi_residual_trend(n_max: int, samples: int = 24,
                       B_used: float = B_CONSTANT_REF) -> PsiTrace:
    """Trace psi_f at geometric n points up to n_max; report residuals and a
    least-squares slope of psi_f(n) - n log n over the top half of [1, n_max]
    (an independent estimate of the linear coefficient)."""
    if n_max < 100:
        raise ValueError("psi_residual_trend requires n_max >= 100")
    pts = sorted({int(round(100 * (n_max / 100) ** (i / (samples - 1))))
                  for i in range(samples)})
    facs = _factor_structure(n_max)
    best: dict = {}
    running = 0.0
    psi_all = np.zeros(n_max + 1)
    for m in range(1, n_max + 1):
        for p, e in facs[m]:
            prev = best.get(p, 0)
            if e > prev:
                best[p] = e
                running += (e - prev) * math.log(p)
        psi_all[m] = running
    ns = np.array(pts, dtype=np.float64)
    psi = psi_all[pts]
    residuals = psi - ns * np.log(ns) - B_used * ns
    fit_n = np.arange(n_max // 2, n_max + 1, dtype=np.float64)
    fit_y = psi_all[n_max // 2 :] - fit_n * np.log(fit_n)
    slope = float(np.polyfit(fit_n, fit_y, 1)[0])
    return PsiTrace(tuple(pts), tuple(float(v) for v in psi),
                    tuple(float(v) for v in residuals), B_used, slope)
