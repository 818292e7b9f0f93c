"""The central weighted sum over n**2 + d, three ways.

Direct evaluation, full Mobius expansion over moduli, and the small/large
moduli split with an omega sub-split on the large part. All accumulation runs
in fixed ascending order so results are independent of any parallel layout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .arith import FactorSieve, shared_sieve, squarefree_divisors, von_mangoldt
from .congruence import roots_mod


def _n_limit(x: float, d: int) -> int:
    """Largest n with n**2 + d <= x (0 when none)."""
    if x < d + 1:
        return 0
    return math.isqrt(int(x) - d)


def lhs_sum(x: float, d: int, alpha: float = 0.5,
            sieve: FactorSieve | None = None) -> float:
    """Sum of Lambda(n**2 + d) / (n (log n)**(1 - alpha)) over 2 <= n, n**2 + d <= x."""
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    if x < 5:
        return 0.0
    top = _n_limit(x, d)
    total = 0.0
    for n in range(2, top + 1):
        lam = von_mangoldt(n * n + d, sieve)
        if lam:
            total += lam / (n * math.log(n) ** (1.0 - alpha))
    return total


def _support_weights(x: float, d: int, sieve: FactorSieve) -> dict:
    """For every squarefree modulus q dividing some n**2 + d <= x, the weighted
    progression sum T(x; q, d) = sum of 1/(n sqrt(log n)) over qualifying n >= 2,
    together with mu(q). Moduli with mu(q) = 0 contribute nothing and are skipped.
    """
    support: dict = {}
    top = _n_limit(x, d)
    for n in range(2, top + 1):
        w = 1.0 / (n * math.sqrt(math.log(n)))
        for q, mu in squarefree_divisors(n * n + d, sieve):
            entry = support.get(q)
            if entry is None:
                support[q] = [mu, w]
            else:
                entry[1] += w
    return support


def rhs_mobius_expansion(x: float, d: int, sieve: FactorSieve | None = None) -> float:
    """-sum over q <= x of mu(q) log(q) T(x; q, d).

    Only divisors of some value n**2 + d <= x have a nonzero inner sum, so the
    sum runs over that support set, in ascending q.
    """
    if x < 5:
        return 0.0
    if sieve is None:
        sieve = shared_sieve(int(x) + abs(d))
    support = _support_weights(x, d, sieve)
    total = 0.0
    for q in sorted(support):
        mu, t = support[q]
        if q > 1:
            total -= mu * math.log(q) * t
    return total


@dataclass(frozen=True)
class SumDecomposition:
    """One evaluation of the identity with its small/large and omega splits."""

    x: float
    shift: int
    epsilon: float
    lhs: float
    small_part: float
    large_low_omega: float
    large_high_omega: float
    omega_threshold: int

    @property
    def large_part(self) -> float:
        return self.large_low_omega + self.large_high_omega

    @property
    def rhs_total(self) -> float:
        return self.small_part + self.large_part


def dyadic_split(x: float, d: int, epsilon: float = 0.1,
                 sieve: FactorSieve | None = None) -> SumDecomposition:
    """Partition the Mobius expansion by q <= x**(1/2 - eps) vs larger q, and
    sub-partition the large part by omega(q) <= / > ceil(log log x)."""
    if not 0 < epsilon < 0.5:
        raise ValueError("epsilon must lie in (0, 1/2)")
    if sieve is None:
        sieve = shared_sieve(max(int(x) + abs(d), 16))
    lhs = lhs_sum(x, d, 0.5, sieve)
    threshold = math.ceil(math.log(math.log(x))) if x > math.e else 1
    cut = x ** (0.5 - epsilon)
    small = low = high = 0.0
    support = _support_weights(x, d, sieve) if x >= 5 else {}
    for q in sorted(support):
        if q == 1:
            continue
        mu, t = support[q]
        term = -mu * math.log(q) * t
        if q <= cut:
            small += term
        elif sieve.omega(q) <= threshold:
            low += term
        else:
            high += term
    return SumDecomposition(x, d, epsilon, lhs, small, low, high, threshold)


@dataclass(frozen=True)
class ProgressionSumResult:
    """Term-by-term progression sum against its closed-form estimate."""

    modulus: int
    shift: int
    direct: float
    estimate: float
    frac_parts: tuple
    error_bound: float


def progression_sum(x: float, q: int, d: int,
                    sieve: FactorSieve | None = None) -> ProgressionSumResult:
    """Sum of 1/(n sqrt(log n)) over n >= 2 with n**2 + d <= x and q | n**2 + d.

    Qualifying n are enumerated by stepping each root of the congruence by q.
    The estimate integrates the decreasing summand per residue class; the
    error bound is rho(q) times the first summand.
    """
    rs = roots_mod(q, d, sieve)
    top = _n_limit(x, d)
    if not rs.roots or top < 2:
        return ProgressionSumResult(q, d, 0.0, 0.0, (), 0.0)
    s = math.sqrt(max(x - d, 4.0))
    ns = []
    fracs = []
    estimate = 0.0
    for r in rs.roots:
        first = r if r >= 2 else r + q * ((2 - r + q - 1) // q)
        ns.extend(range(first, top + 1, q))
        f = ((s - r) / q) % 1.0
        fracs.append(f)
        last = s - q * f
        if first <= top:
            lo = max(r, 2)
            estimate += (2.0 / q) * (math.sqrt(math.log(last)) - math.sqrt(math.log(lo)))
    if not ns:
        return ProgressionSumResult(q, d, 0.0, 0.0, tuple(fracs), 0.0)
    ns.sort()
    direct = 0.0
    for n in ns:
        direct += 1.0 / (n * math.sqrt(math.log(n)))
    n0 = ns[0]
    bound = rs.count / (n0 * math.sqrt(math.log(n0)))
    return ProgressionSumResult(q, d, direct, estimate, tuple(fracs), bound)


def qualifying_n_by_trial(x: float, q: int, d: int) -> list:
    """Oracle: the same qualifying n found by filtering every n (no roots)."""
    top = _n_limit(x, d)
    return [n for n in range(2, top + 1) if (n * n + d) % q == 0]


def mobius_log_progression(x: float, q: int, a: int,
                           sieve: FactorSieve | None = None) -> float:
    """Empirical partial sum of mu(n) log(n) / n over n <= x, n = a (mod q)."""
    if math.gcd(a, q) > 1:
        raise ValueError("requires gcd(a, q) = 1")
    top = int(x)
    if top < 1:
        return 0.0
    if sieve is None:
        sieve = shared_sieve(max(top, 2))
    total = 0.0
    start = a % q if a % q else q
    for n in range(start, top + 1, q):
        if n < 2:
            continue
        mu = sieve.mobius(n)
        if mu:
            total += mu * math.log(n) / n
    return total


def dirichlet_partial(s: float, n_terms: int, d: int,
                      sieve: FactorSieve | None = None) -> float:
    """Sum of Lambda(n**2 + d) * n**(-s) for 1 <= n <= n_terms."""
    total = 0.0
    for n in range(1, n_terms + 1):
        lam = von_mangoldt(n * n + d, sieve)
        if lam:
            total += lam * n ** (-s)
    return total
