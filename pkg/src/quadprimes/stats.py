"""k-prime-factor statistics: exact pi_k(x) histograms, the Landau-normalized
ratio, and the rho-weighted mass of moduli with many prime factors."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .arith import FactorSieve, primes_up_to
from .congruence import rho_table


def omega_sieve(limit: int) -> np.ndarray:
    """omega(n) for all n in [0, limit] (omega(0) = omega(1) = 0)."""
    counts = np.zeros(limit + 1, dtype=np.uint8)
    for p in primes_up_to(limit):
        counts[p::p] += 1
    return counts


@dataclass(frozen=True)
class OmegaHistogram:
    """counts[k] = #{n <= limit : omega(n) = k}; n = 1 sits at k = 0."""

    limit: int
    counts: tuple
    threshold: int  # ceil(log log limit)

    def pi_k(self, k: int) -> int:
        return self.counts[k] if 0 <= k < len(self.counts) else 0

    @property
    def total(self) -> int:
        return sum(self.counts)


def omega_histogram(limit: int, omegas: np.ndarray | None = None) -> OmegaHistogram:
    if limit < 1:
        raise ValueError("limit must be >= 1")
    if omegas is None:
        omegas = omega_sieve(limit)
    counts = np.bincount(omegas[1 : limit + 1])
    threshold = math.ceil(math.log(math.log(limit))) if limit > 15 else 0
    return OmegaHistogram(limit, tuple(int(c) for c in counts), threshold)


def pi_k(x: int, k: int, omegas: np.ndarray | None = None) -> int:
    """Exact #{n <= x : omega(n) = k}."""
    if k < 0:
        raise ValueError("k must be >= 0")
    return omega_histogram(x, omegas).pi_k(k)


def landau_ratio(x: int, k: int, omegas: np.ndarray | None = None) -> float:
    """pi_k(x) (k-1)! log x / (x (log log x)**(k-1)); tends to 1 as x grows."""
    if x < 16:
        raise ValueError("landau_ratio requires x >= 16")
    if k < 1:
        raise ValueError("k must be >= 1")
    count = pi_k(x, k, omegas)
    llx = math.log(math.log(x))
    return count * math.factorial(k - 1) * math.log(x) / (x * llx ** (k - 1))


@dataclass(frozen=True)
class HighOmegaMass:
    """Moduli q <= limit with more prime factors than the iterated-log cutoff,
    under both cutoff conventions (strict against the real value, and strict
    against its ceiling), with their total root count against the bound
    x**(1 - (log log x)(log log log x) / (2 log x))."""

    limit: int
    shift: int
    threshold_real: float
    count: int          # omega(q) > log log x
    rho_sum: int
    count_ceil: int     # omega(q) > ceil(log log x)
    rho_sum_ceil: int
    bound: float

    @property
    def within_bound(self) -> bool:
        return self.rho_sum <= self.bound

    @property
    def density(self) -> float:
        return self.count / self.limit


def high_omega_mass(x: int, d: int, sieve: FactorSieve,
                    omegas: np.ndarray | None = None) -> HighOmegaMass:
    if x < 16:
        raise ValueError("high_omega_mass requires x >= 16")
    if omegas is None:
        omegas = omega_sieve(x)
    om = omegas[1 : x + 1].astype(np.int64)
    rhos = rho_table(x, d, sieve)[1 : x + 1]
    lx = math.log(x)
    llx = math.log(lx)
    lllx = math.log(llx)
    mask_real = om > llx
    mask_ceil = om > math.ceil(llx)
    bound = x ** (1.0 - llx * lllx / (2.0 * lx))
    return HighOmegaMass(
        x, d, llx,
        int(mask_real.sum()), int(rhos[mask_real].sum()),
        int(mask_ceil.sum()), int(rhos[mask_ceil].sum()),
        bound,
    )
