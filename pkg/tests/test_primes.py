"""Prime sampling, primality, and factoring."""

import random

import pytest
import sympy

from quadmod.exactalg.primes import divisors, factorint, is_probable_prime, random_prime


def test_random_prime_deterministic():
    assert random_prime(16, 0) == random_prime(16, 0)
    p = random_prime(16, 0)
    assert p.bit_length() == 16 and is_probable_prime(p)


def test_random_prime_bits():
    for bits in (16, 31, 60, 62):
        p = random_prime(bits, 1)
        assert p.bit_length() == bits
        assert is_probable_prime(p)


def test_random_prime_range_check():
    with pytest.raises(ValueError):
        random_prime(8, 0)
    with pytest.raises(ValueError):
        random_prime(63, 0)


def test_primality_vs_sympy():
    rng = random.Random(4)
    for _ in range(400):
        n = rng.randrange(2, 10 ** 12)
        assert is_probable_prime(n) == sympy.isprime(n)


def test_factorint_roundtrip():
    rng = random.Random(5)
    for _ in range(120):
        n = rng.randrange(2, 10 ** 14)
        fac = factorint(n)
        prod = 1
        for p, e in fac.items():
            assert is_probable_prime(p)
            prod *= p ** e
        assert prod == n


def test_factorint_semiprime():
    p, q = 1000003, 999983
    assert factorint(p * q) == {p: 1, q: 1}


def test_divisors():
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisors(-9) == [1, 3, 9]
    assert divisors(1) == [1]
    with pytest.raises(ValueError):
        divisors(0)
