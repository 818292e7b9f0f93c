import math
import random

import pytest

from quadprimes import arith, congruence

SIEVE = arith.FactorSieve(10_000)


def test_sqrt_mod_prime_examples():
    assert congruence.sqrt_mod_prime(4, 5) == [2, 3]
    assert congruence.sqrt_mod_prime(0, 7) == [0]
    assert congruence.sqrt_mod_prime(2, 3) == []


def test_sqrt_mod_prime_rejects_composite():
    with pytest.raises(ValueError):
        congruence.sqrt_mod_prime(3, 15)


def test_sqrt_mod_prime_large():
    for p in (101, 10007, 104729, 2 ** 31 - 1):
        rng = random.Random(p)
        for _ in range(20):
            z = rng.randrange(p)
            a = z * z % p
            roots = congruence.sqrt_mod_prime(a, p)
            assert z in roots or p - z in roots
            assert all(r * r % p == a for r in roots)


def test_roots_mod_examples():
    assert congruence.roots_mod(2, 1).roots == (1,)
    assert congruence.roots_mod(3, 1).roots == ()
    rs = congruence.roots_mod(65, 1)
    assert rs.roots == (8, 18, 47, 57)
    assert rs.count == 4


def test_rho_examples():
    assert congruence.rho(5, 1) == 2
    assert congruence.rho(1, 1) == 1
    assert congruence.rho(85, 1) == 4


def test_roots_match_scan_sample():
    for d in (1, 2, 3, 28, 100):
        for q in list(range(1, 300)) + [512, 1024, 2187, 5000, 9973]:
            assert congruence.roots_mod(q, d, SIEVE).roots == \
                congruence.roots_mod_scan(q, d)


def test_rho_multiplicative():
    rng = random.Random(42)
    done = 0
    while done < 300:
        a, b = rng.randrange(1, 1001), rng.randrange(1, 1001)
        if math.gcd(a, b) != 1:
            continue
        done += 1
        assert congruence.rho(a * b, 1, SIEVE) == \
            congruence.rho(a, 1, SIEVE) * congruence.rho(b, 1, SIEVE)


def test_squarefree_product_formula_d1():
    # odd squarefree q, d = 1: rho = 2**#{p | q} when every p = 1 (mod 4), else 0
    for q in range(1, 10_001, 2):
        parts = SIEVE.factor(q).parts
        if any(e > 1 for _, e in parts):
            continue
        if all(p % 4 == 1 for p, _ in parts):
            expected = 2 ** len(parts)
        else:
            expected = 0
        assert congruence.rho(q, 1, SIEVE) == expected


def test_rho_omega_bound():
    rhos = congruence.rho_table(10_000, 1, SIEVE)
    for q in range(1, 10_001):
        assert rhos[q] <= 2 ** (SIEVE.omega(q) + 2)


def test_rho_table_matches_rho():
    for d in (1, 3, 28):
        rhos = congruence.rho_table(2000, d, SIEVE)
        for q in range(1, 2001):
            assert rhos[q] == congruence.rho(q, d, SIEVE)


def test_odd_prime_counts():
    for p in (5, 13, 17, 97):
        assert congruence.rho(p, 1) == 2
    for p in (3, 7, 11, 19):
        assert congruence.rho(p, 1) == 0


def test_quadratic_character():
    assert congruence.quadratic_character(1, 5) == 1
    assert congruence.quadratic_character(1, 3) == -1
    assert congruence.quadratic_character(3, 3) == 0
