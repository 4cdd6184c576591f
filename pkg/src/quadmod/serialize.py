"""JSON-friendly serialization of exact objects.

Polynomials become {"vars": [...], "terms": [[e1, ..., ek, "coeff"], ...]},
terms sorted graded-lex descending so output is canonical.  Every
potentially-large number (coefficients, primes, rational coordinates) is a
decimal string; exponents and degrees are small structural integers and stay
native.  No value in any payload is ever a binary float.
"""

from __future__ import annotations

from fractions import Fraction

from .exactalg.intpoly import IntPoly
from .exactalg.mpoly import MPoly


def poly_terms(p) -> dict:
    """Canonical sparse term list of an IntPoly or MPoly."""
    if isinstance(p, IntPoly):
        terms = [[i, str(c)] for i, c in sorted(
            enumerate(p.coeffs), key=lambda t: t[0], reverse=True) if c]
        return {"vars": [p.var], "terms": terms}
    if isinstance(p, MPoly):
        return {"vars": list(p.vars),
                "terms": [list(e) + [str(c)] for e, c in p.sorted_terms()]}
    raise TypeError(f"cannot serialize {type(p).__name__}")


def terms_to_intpoly(doc: dict) -> IntPoly:
    (var,) = doc["vars"]
    coeffs: dict = {}
    for *exps, c in doc["terms"]:
        (e,) = exps
        coeffs[e] = int(c)
    out = [0] * (max(coeffs, default=-1) + 1)
    for e, c in coeffs.items():
        out[e] = c
    return IntPoly(out, var)


def terms_to_mpoly(doc: dict) -> MPoly:
    vars = tuple(doc["vars"])
    return MPoly(vars, {tuple(t[:-1]): int(t[-1]) for t in doc["terms"]})


def coeff_strings(p: IntPoly) -> list:
    """Dense coefficient list, ascending degree, as decimal strings."""
    return [str(c) for c in p.coeffs]


def frac_str(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
