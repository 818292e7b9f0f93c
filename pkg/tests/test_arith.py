import math

import pytest

from quadprimes import arith

SIEVE = arith.FactorSieve(100_000)


def naive_factor(n):
    parts = []
    m = n
    p = 2
    while p * p <= m:
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        if e:
            parts.append((p, e))
        p += 1
    if m > 1:
        parts.append((m, 1))
    return tuple(parts)


def naive_is_prime(n):
    if n < 2:
        return False
    return all(n % p for p in range(2, math.isqrt(n) + 1))


def test_mobius_examples():
    assert arith.mobius(1) == 1
    assert arith.mobius(12) == 0
    assert arith.mobius(30) == -1


def test_von_mangoldt_examples():
    assert arith.von_mangoldt(1) == 0.0
    assert arith.von_mangoldt(9) == pytest.approx(math.log(3), abs=1e-12)
    assert arith.von_mangoldt(10) == 0.0


def test_via_mobius_examples():
    assert arith.von_mangoldt_via_mobius(4) == pytest.approx(math.log(2), abs=1e-12)
    assert arith.von_mangoldt_via_mobius(6) == pytest.approx(0.0, abs=1e-12)
    assert arith.von_mangoldt_via_mobius(1) == 0.0


def test_via_mobius_matches_direct():
    for n in range(1, 5000):
        assert abs(arith.von_mangoldt_via_mobius(n, SIEVE)
                   - arith.von_mangoldt(n, SIEVE)) <= 1e-9


def test_mobius_divisor_sum_vanishes():
    for n in range(1, 10_001):
        s = sum(mu for _, mu in arith.squarefree_divisors(n, SIEVE))
        assert s == (1 if n == 1 else 0)


def test_von_mangoldt_divisor_sum_is_log():
    for n in range(2, 20_001):
        s = sum(arith.von_mangoldt(d, SIEVE) for d in arith.divisors(n, SIEVE))
        assert abs(s - math.log(n)) <= 1e-9


def test_sieve_agrees_with_trial_division():
    for n in range(1, 10_001):
        parts = naive_factor(n)
        assert SIEVE.factor(n).parts == parts
        assert SIEVE.omega(n) == len(parts)
        mu = 0 if any(e > 1 for _, e in parts) else (-1) ** len(parts)
        if n == 1:
            mu = 1
        assert SIEVE.mobius(n) == mu


def test_factorization_invariant():
    for n in (1, 2, 97, 360, 2 ** 20, 10**12 + 39):
        f = arith.factorize(n)
        assert f.verify()
        assert all(arith.is_prime_u64(p) for p, _ in f.parts)


def test_is_prime_u64_known_values():
    assert arith.is_prime_u64(2 ** 61 - 1)
    assert not arith.is_prime_u64(1)
    assert not arith.is_prime_u64(0)
    assert arith.is_prime_u64(2)
    assert not arith.is_prime_u64((2 ** 31 - 1) * (2 ** 19 - 1))


def test_is_prime_u64_vs_trial_division():
    for n in range(1, 20_000):
        assert arith.is_prime_u64(n) == naive_is_prime(n)


def test_is_prime_power():
    assert arith.is_prime_power(1) is None
    assert arith.is_prime_power(512) == (2, 9)
    assert arith.is_prime_power(7) == (7, 1)
    assert arith.is_prime_power(6) is None
    assert arith.is_prime_power(3 ** 11) == (3, 11)
    assert arith.is_prime_power((10**6 + 3) ** 2) == (10**6 + 3, 2)


def test_sieve_spf_invariants():
    s = arith.FactorSieve(1000)
    for n in range(2, 1001):
        p = s.smallest_prime_factor(n)
        assert n % p == 0
        assert naive_is_prime(p)
        assert (p == n) == naive_is_prime(n)
