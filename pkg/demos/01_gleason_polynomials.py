"""Gleason polynomials of z^2 + c, built as exact quotients.

The n-th critical-orbit polynomial is the n-th iterate of 0 under z^2 + c,
viewed as a polynomial in c.  Its roots are parameters whose critical orbit
closes up after n steps -- in period *dividing* n.  Dividing out the factors
of every proper period leaves the exact-period polynomial.  Every division
here is checked to leave remainder zero, and the product of the quotients is
multiplied back together as an independent confirmation.
"""

from quadmod import gleason as gl

print("critical-orbit polynomials (iterating g -> g^2 + c from 0):")
for n in range(1, 5):
    print(f"  n={n}:  {gl.crit_orbit(n).poly!r}")

print("\nexact-period quotients:")
for n in range(1, 7):
    g = gl.gleason(n).poly
    shown = repr(g) if g.degree <= 6 else f"degree {g.degree}, {len(g.coeffs)} coefficients"
    print(f"  G_{n} = {shown}")

print("\ndegree bookkeeping: deg G_n = 2^(n-1) - sum of lower-period degrees")
print(" ", [gl.gleason_degree(n) for n in range(1, 13)])

print("\nre-multiplying the quotients (independent of the division route):")
for n in (6, 10, 12):
    ok = gl.verify_product_identity(n)
    print(f"  product over divisors of {n} == orbit polynomial:  {ok}")

print("\nseparability: each G_n squarefree, distinct periods coprime")
for n in (8, 12):
    rep = gl.verify_separability(n)
    print(f"  n={n}: squarefree={rep.squarefree} (witness prime {rep.squarefree_prime}), "
          f"coprime to all lower periods: {all(rep.coprime.values())}")
