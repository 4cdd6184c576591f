"""Plane models of the periodic-critical-orbit curves in moduli coordinates.

Inside the family f(z) = (z^2+p)/(z^2+q) (critical points pinned at 0 and
infinity), the locus where the orbit of 0 closes after exactly n steps is a
curve in the (p, q) plane.  Moduli coordinates (s1, s2) are the first two
symmetric functions of the three fixed-point multipliers; eliminating (p, q)
gives one integer polynomial per period -- a plane model of the moduli curve.

Two independent confirmations run on every model:

* an exact membership certificate: substituting (s1(p,q), s2(p,q)) back into
  the model and clearing denominators must give a polynomial divisible by
  the period locus;
* the restriction test: the polynomial maps sit on the line s1 = 2 as
  (2, 4c), and there the model must recover the period-n Gleason polynomial.
"""

from fractions import Fraction

from quadmod import pern

sig = pern.multiplier_symmetrics()
print("multiplier symmetric functions (numerator / denominator):")
for name, (num, den) in (("s1", sig.s1), ("s2", sig.s2), ("s3", sig.s3)):
    print(f"  {name} = ({num!r}) / ({den!r})")
print("  relation s3 = s1 - 2 verified at construction\n")

for n in (1, 2, 3, 4):
    model = pern.plane_model(n)
    pm = model.pmodel
    print(f"period {n}: locus {model.gamma!r}")
    shown = repr(pm) if pm.num_terms() <= 8 else \
        f"bidegree ({pm.degree_in('s1')}, {pm.degree_in('s2')}), {pm.num_terms()} terms"
    print(f"  plane model: {shown}")
    v = model.verification
    print(f"  certificate: divisible={v.membership_certified}, "
          f"finite-field samples {v.sample_hits}/{v.sample_points}")
    if n >= 2:
        rep = pern.restriction_check(n)
        print(f"  restriction to s1=2: matches G_{n} with multiplicity {rep.multiplicity}")
    print()

print("the basilica map z^2 - 1 sits at (s1, s2) = (2, -4):")
print("  on the period-2 model:",
      pern.plane_model(2).pmodel.evaluate({"s1": Fraction(2), "s2": Fraction(-4)}) == 0)

print("\nrational points of height <= 3 on the period-2 line 2*s1 + s2 = 0:")
for a, b in pern.rational_point_search(pern.plane_model(2), 3):
    print(f"  ({a}, {b})")

print("\nperiod 5, height <= 10:", pern.rational_point_search(pern.plane_model(5), 10))
