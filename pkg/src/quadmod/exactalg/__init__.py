"""Exact arithmetic foundation: integers, univariate and multivariate
polynomials over Z, prime-field polynomial arithmetic, and the generic
subresultant elimination engine."""

from .intpoly import (
    IntPoly,
    poly_add,
    poly_derivative,
    poly_divrem_exact,
    poly_gcd,
    poly_mul,
    rational_roots,
    resultant,
    squarefree_part,
)
from .modpoly import (
    ModPoly,
    coprime_certificate,
    ddf,
    is_squarefree_mod,
    mod_divmod,
    mod_gcd,
    mod_reduce,
    roots,
    squarefree_certificate,
)
from .mpoly import MPoly, MPolyRing, PolyRing, bipoly_divexact
from .primes import divisors, factorint, is_probable_prime, random_prime
from .upoly import int_ring, up_gcd, up_pseudo_divrem, up_resultant

__all__ = [
    "IntPoly", "ModPoly", "MPoly", "MPolyRing", "PolyRing",
    "poly_add", "poly_mul", "poly_divrem_exact", "poly_gcd", "poly_derivative",
    "rational_roots", "resultant", "squarefree_part", "bipoly_divexact",
    "mod_reduce", "mod_gcd", "mod_divmod", "ddf", "roots", "is_squarefree_mod",
    "coprime_certificate", "squarefree_certificate",
    "divisors", "factorint", "is_probable_prime", "random_prime",
    "int_ring", "up_gcd", "up_pseudo_divrem", "up_resultant",
]
