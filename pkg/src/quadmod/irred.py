"""Irreducibility certification over Q by the mod-p degree-pattern sieve.

A squarefree integer polynomial that factors over Q factors compatibly
modulo every prime of good reduction, so the degree of any rational factor
must be a subset sum of the factor-degree multiset mod p.  Intersecting the
achievable-sum sets over several primes either empties out the proper range
(verdict Irreducible) or leaves an honest residue of surviving sums
(verdict Inconclusive).  The sieve is one-sided: reducibility is only ever
reported with an exact witness, which the cheap rational-root scan supplies.

Subset sums are kept as bitmasks, so intersection is a single AND and the
per-pattern dynamic program is `mask |= mask << d`.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import NotSquarefreeOverQ
from .exactalg.intpoly import IntPoly, poly_divrem_exact, poly_gcd, rational_roots
from .exactalg.modpoly import ddf, is_squarefree_mod, mod_reduce, squarefree_certificate
from .exactalg.primes import random_prime

DEFAULT_MAX_PRIMES = 100
#: 31-bit primes keep every product inside int64 (vectorized gcds) and halve
#: the Frobenius exponentiation; bad reductions stay rare (~deg^2 / p) and are
#: skipped, not fatal.  Pass prime_bits=60 for the wide-prime behaviour.
DEFAULT_PRIME_BITS = 31


@dataclass(frozen=True)
class DegreePattern:
    """Factor-degree multiset of a good squarefree reduction mod p."""

    p: int
    degrees: tuple

    def __post_init__(self):
        if sum(self.degrees) <= 0:
            raise ValueError("empty degree pattern")


@dataclass(frozen=True)
class BadPrime:
    """Skip signal: the reduction mod p lost degree or squarefreeness."""

    p: int
    reason: str


@dataclass(frozen=True)
class FactorWitness:
    """An exact nontrivial factorization f = factor * cofactor over Z."""

    factor: IntPoly
    cofactor: IntPoly


@dataclass
class IrredCertificate:
    verdict: str                  # "Irreducible" | "Inconclusive" | "ReducibleWitness"
    degree: int
    patterns: list
    possible_sums: tuple          # surviving proper factor degrees, sorted
    seed: int
    primes_tried: int
    bad_primes: int = 0
    witness: FactorWitness | None = None

    def __post_init__(self):
        if self.verdict == "Irreducible" and self.possible_sums:
            raise ValueError("Irreducible verdict with surviving proper sums")
        if self.verdict == "ReducibleWitness" and self.witness is None:
            raise ValueError("ReducibleWitness requires an exact witness")


def degree_pattern(f: IntPoly, p: int):
    """DegreePattern of f mod p, or BadPrime when the reduction is unusable."""
    if f.degree < 1:
        raise ValueError("degree_pattern needs a nonconstant polynomial")
    if f.lc % p == 0:
        return BadPrime(p, "leading coefficient vanishes")
    fbar = mod_reduce(f, p)
    if not is_squarefree_mod(fbar):
        return BadPrime(p, "not squarefree mod p")
    degs = []
    for d, g in ddf(fbar):
        degs.extend([d] * (g.degree // d))
    return DegreePattern(p, tuple(sorted(degs)))


def subset_sum_mask(degrees, deg: int) -> int:
    """Bitmask of achievable subset sums of the degree multiset (bit k = sum k)."""
    mask = 1
    for d in degrees:
        mask |= mask << d
    return mask & ((1 << (deg + 1)) - 1)


def _interior(mask: int, deg: int) -> list:
    return [k for k in range(1, deg) if (mask >> k) & 1]


def rational_factor_scan(f: IntPoly):
    """A linear factor over Q if one exists (via head/tail divisors), else None."""
    if f.degree < 1:
        raise ValueError("scan needs a nonconstant polynomial")
    if f.degree == 1:
        return None  # no *nontrivial* proper factor
    roots = rational_roots(f)
    if not roots:
        return None
    roots.sort(key=lambda r: (r != 0, abs(r)))  # cheapest witness first
    r = roots[0]
    factor = IntPoly([-r.numerator, r.denominator], f.var)
    prim = f.primitive_part()
    cofactor = poly_divrem_exact(prim, factor)
    content = f.content() if f.lc > 0 else -f.content()
    return FactorWitness(factor, cofactor * content)


def sieve(f: IntPoly, max_primes: int = DEFAULT_MAX_PRIMES, seed: int = 0,
          prime_bits: int = DEFAULT_PRIME_BITS, progress=None) -> IrredCertificate:
    """Accumulate degree patterns until irreducibility is certified or the
    prime budget is exhausted.  Deterministic for a fixed seed.

    `progress`, when given, receives one human-readable line per prime."""
    deg = f.degree
    if deg < 1:
        raise ValueError("sieve needs a nonconstant polynomial")
    if squarefree_certificate(f, seed=seed) is None:
        if poly_gcd(f, f.derivative()).degree != 0:
            raise NotSquarefreeOverQ("input has a repeated factor over Q")
    witness = rational_factor_scan(f)
    if witness is not None:
        sums = (witness.factor.degree, deg - witness.factor.degree)
        return IrredCertificate("ReducibleWitness", deg, [], tuple(sorted(set(sums))),
                                seed, 0, witness=witness)
    rng = random.Random(seed)
    mask = (1 << (deg + 1)) - 1
    patterns: list = []
    seen: set = set()
    tried = bad = 0
    while tried < max_primes:
        p = random_prime(prime_bits, rng)
        if p in seen:
            continue
        seen.add(p)
        tried += 1
        pat = degree_pattern(f, p)
        if isinstance(pat, BadPrime):
            bad += 1
            if progress:
                progress(f"prime {tried}: p={p} skipped ({pat.reason})")
            continue
        patterns.append(pat)
        mask &= subset_sum_mask(pat.degrees, deg)
        surviving = _interior(mask, deg)
        if progress:
            progress(f"prime {tried}: p={p} pattern has {len(pat.degrees)} parts, "
                     f"{len(surviving)} proper sums survive")
        if not surviving:
            return IrredCertificate("Irreducible", deg, patterns, (), seed, tried, bad)
    return IrredCertificate("Inconclusive", deg, patterns,
                            tuple(_interior(mask, deg)), seed, tried, bad)
