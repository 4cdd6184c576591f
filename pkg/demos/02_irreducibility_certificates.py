"""Certifying irreducibility over Q with modular degree patterns.

If an integer polynomial factors over Q, the degrees of its factors survive
reduction modulo every prime that keeps the leading coefficient and
squarefreeness.  So the degree of a hypothetical rational factor must be a
subset sum of the factor-degree multiset modulo each good prime.  Intersect
those subset-sum sets over a few primes: once nothing survives strictly
between 0 and the degree, the polynomial is certified irreducible.

The sieve is one-sided by design: it never *claims* reducibility without an
exact witness (a factor that divides over Z), which the rational-root scan
provides for free.
"""

from quadmod import gleason as gl
from quadmod.exactalg import IntPoly
from quadmod.irred import degree_pattern, rational_factor_scan, sieve, subset_sum_mask

g8 = gl.gleason(8).poly
print(f"target: G_8, degree {g8.degree}")

cert = sieve(g8, seed=0)
print(f"verdict: {cert.verdict} after {cert.primes_tried} primes\n")
deg = cert.degree
for pat in cert.patterns:
    mask = subset_sum_mask(pat.degrees, deg)
    interior = [k for k in range(1, deg) if (mask >> k) & 1]
    print(f"  p={pat.p}: degrees {pat.degrees}")
    print(f"           proper factor degrees allowed by this prime alone: "
          f"{interior if len(interior) < 25 else str(len(interior)) + ' values'}")

print("\na reducible input never certifies; the scan finds the witness instead:")
c = IntPoly.variable("c")
f = (c + 1) * (c ** 2 + c + 7)
w = rational_factor_scan(f)
print(f"  {f!r} = ({w.factor!r}) * ({w.cofactor!r})")
print(f"  sieve verdict: {sieve(f, seed=0).verdict}")

print("\nsmall patterns by hand: G_3 stays irreducible mod 2")
print(" ", degree_pattern(gl.gleason(3).poly, 2))
