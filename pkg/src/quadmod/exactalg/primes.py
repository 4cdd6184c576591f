"""Deterministic primality testing, seeded prime sampling, and integer factoring.

Primality is Miller-Rabin with a fixed 40-witness schedule (the first 40
primes), so every query is deterministic.  `random_prime` draws candidates
from a caller-supplied seed and therefore always returns the same prime for
the same (bits, seed) pair.  Factoring is trial division plus Brent's cycle
variant of Pollard rho, which comfortably covers the coefficient sizes seen
by the rational-root machinery.
"""

from __future__ import annotations

import math
import random

_SMALL_PRIMES = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53,
                 59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113,
                 127, 131, 137, 139, 149, 151, 157, 163, 167, 173]

# fixed Miller-Rabin witness schedule: 40 rounds, deterministic
_MR_WITNESSES = tuple(_SMALL_PRIMES)


def is_probable_prime(n: int) -> bool:
    """Miller-Rabin over the fixed 40-witness schedule."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n == p:
            return True
        if n % p == 0:
            return False
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def random_prime(bits: int, seed) -> int:
    """Deterministic prime of exactly `bits` bits for the given seed or rng.

    Accepts an int seed or a random.Random instance (advanced in place, so a
    shared instance yields a reproducible prime stream).
    """
    if not 16 <= bits <= 62:
        raise ValueError("bits must be in [16, 62]")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    while True:
        cand = rng.getrandbits(bits) | (1 << (bits - 1)) | 1
        if is_probable_prime(cand):
            return cand


def _pollard_brent(n: int, rng: random.Random) -> int:
    """A nontrivial factor of composite odd n (Brent's variant of Pollard rho)."""
    if n % 2 == 0:
        return 2
    while True:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def factorint(n: int) -> dict:
    """Prime factorization {p: multiplicity} of |n|; {} for n in {0, 1}."""
    n = abs(n)
    out: dict = {}
    if n <= 1:
        return out
    for p in _SMALL_PRIMES:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    if n == 1:
        return out
    stack = [n]
    rng = random.Random(n)
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_probable_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        # try to peel perfect powers first: rho struggles on p^k
        root = math.isqrt(m)
        if root * root == m:
            stack.extend([root, root])
            continue
        d = _pollard_brent(m, rng)
        stack.extend([d, m // d])
    return out


def divisors(n: int) -> list:
    """Sorted positive divisors of |n|; requires n != 0."""
    if n == 0:
        raise ValueError("0 has infinitely many divisors")
    fac = factorint(n)
    out = [1]
    for p, e in fac.items():
        powers = [p ** k for k in range(1, e + 1)]
        out = [d * pk for d in out for pk in [1] + powers]
    return sorted(out)
