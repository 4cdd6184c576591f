"""Curve models for periodic critical orbits in the rational family."""

import random
from fractions import Fraction

import pytest

from quadmod import pern
from quadmod.errors import InvalidPeriod, ResourceLimit
from quadmod.exactalg import MPoly, bipoly_divexact
from quadmod.exactalg.modpoly import ModPoly, roots as mod_roots
from quadmod.exactalg.primes import random_prime

PQ = ("p", "q")


def test_family_orbit_examples():
    fo1 = pern.family_orbit(1)
    assert fo1.num == MPoly.variable(PQ, "p")
    assert fo1.den == MPoly.variable(PQ, "q")
    fo2 = pern.family_orbit(2)
    p, q = MPoly.variable(PQ, "p"), MPoly.variable(PQ, "q")
    assert fo2.num == p * p + p * q * q
    assert fo2.den == p * p + q * q * q


def test_family_orbit_budget():
    with pytest.raises(ResourceLimit):
        pern.family_orbit(9)


def test_exact_period_locus_small():
    p, q = MPoly.variable(PQ, "p"), MPoly.variable(PQ, "q")
    assert pern.exact_period_locus(1) == p
    assert pern.exact_period_locus(2) == p + q * q
    g3 = pern.exact_period_locus(3)
    assert g3 == p * (p + q * q) ** 2 + (p * p + q ** 3) ** 2


def test_locus_stratification():
    # product over divisors reproduces the orbit numerator up to content
    for n in range(1, 6):
        prod = MPoly.const(PQ, 1)
        for d in range(1, n + 1):
            if n % d == 0:
                prod = prod * pern.exact_period_locus(d)
        num = pern.family_orbit(n).num
        assert prod.primitive_part() == num.primitive_part()


def test_multiplier_relation_and_formulas():
    sig = pern.multiplier_symmetrics()
    a1, e1 = sig.s1
    a3, e3 = sig.s3
    p, q = MPoly.variable(PQ, "p"), MPoly.variable(PQ, "q")
    # hand-derived closed forms (independent of the resultant route)
    assert a1 * (p - q) == (-6 * p - 2 * q) * e1
    assert a3 * (p - q) == -8 * p * e3
    a2, e2 = sig.s2
    expect = 4 * (3 * p * p - p * q + p + q ** 3)
    assert a2 * (p - q) ** 2 == expect * e2


def test_multiplier_denominators_divide_resultant_power():
    # reduced denominators still divide Res_z(F, z^2+q)^2 = (q-p)^4
    sig = pern.multiplier_symmetrics()
    p, q = MPoly.variable(PQ, "p"), MPoly.variable(PQ, "q")
    b2 = (q - p) ** 4
    for _, den in (sig.s1, sig.s2, sig.s3):
        assert den.divides(b2)


def test_multiplier_at_p_zero():
    # fixed critical point: s3 = 0 and s1 = 2 along p = 0
    sig = pern.multiplier_symmetrics()
    for qv in (1, 2, 5, -3):
        pt = {"p": Fraction(0), "q": Fraction(qv)}
        s1 = sig.s1[0].evaluate(pt) / sig.s1[1].evaluate(pt)
        s3 = sig.s3[0].evaluate(pt) / sig.s3[1].evaluate(pt)
        assert (s1, s3) == (2, 0)


def test_multiplier_finite_field_oracle():
    """Multipliers computed directly from fixed points over F_p match the
    symmetric functions from the resultant elimination."""
    sig = pern.multiplier_symmetrics()
    rng = random.Random(77)
    big = random_prime(59, rng)
    checked = 0
    while checked < 25:
        pv, qv = rng.randrange(big), rng.randrange(big)
        if pv == qv:
            continue
        cubic = ModPoly([-pv % big, qv, big - 1, 1], big)
        zs = mod_roots(cubic)
        if len(zs) != 3:
            continue
        mus = []
        for z in zs:
            den = (z * z + qv) % big
            if den == 0:
                break
            mus.append(2 * z % big * (qv - pv) % big * pow(den * den % big, big - 2, big) % big)
        else:
            e1 = sum(mus) % big
            e2 = (mus[0] * mus[1] + mus[0] * mus[2] + mus[1] * mus[2]) % big
            pt = {"p": pv, "q": qv}
            s1 = sig.s1[0].eval_mod(pt, big) * pow(sig.s1[1].eval_mod(pt, big), big - 2, big) % big
            s2 = sig.s2[0].eval_mod(pt, big) * pow(sig.s2[1].eval_mod(pt, big), big - 2, big) % big
            assert (s1, s2) == (e1, e2)
            checked += 1


def test_plane_model_frozen_small():
    assert pern.plane_model(1).pmodel == MPoly(pern.SS, {(1, 0): 1, (0, 0): -2})
    assert pern.plane_model(2).pmodel == MPoly(pern.SS, {(1, 0): 2, (0, 1): 1})


def test_plane_model_basilica_point():
    # the airplane-free sanity point: z^2 - 1 has multipliers (0, 2 + sqrt(5)...)
    # as a moduli point it is (s1, s2) = (2, -4), which must lie on the model
    pm = pern.plane_model(2).pmodel
    assert pm.evaluate({"s1": Fraction(2), "s2": Fraction(-4)}) == 0


def test_membership_certificates():
    for n in range(1, 5):
        model = pern.plane_model(n)
        v = model.verification
        assert v.membership_certified
        assert v.gamma_divides_orbit
        assert not v.fallback_used
        # re-run the certificate here: pullback numerator divisible by the locus
        a1, e1 = pern.multiplier_symmetrics().s1
        a2, e2 = pern.multiplier_symmetrics().s2
        comp = pern._compose_numerator(model.pmodel, a1, e1, a2, e2)
        bipoly_divexact(comp, model.gamma, "p")  # raises on failure


def test_restriction_checks():
    for n in (2, 3, 4):
        rep = pern.restriction_check(n)
        assert rep.match, f"restriction failed at n={n}"
        assert rep.multiplicity >= 1
        assert pern.component_meets_per1(n)


def test_restriction_rejects_n1():
    with pytest.raises(InvalidPeriod):
        pern.restriction_check(1)


def test_plane_model_budget():
    with pytest.raises(ResourceLimit):
        pern.plane_model(6)


def test_fallback_strips_lower_periods():
    """Eliminating with the full orbit numerator instead of the exact-period
    locus must land on the same model once lower periods are divided out."""
    n = 2
    sig = pern.multiplier_symmetrics()
    full = pern.family_orbit(n).num.primitive_part()  # contains periods 1 and 2
    lp, l0 = pern._solve_p_linear(sig)
    dmax = max(full.degree_in("p"), sig.s2[0].degree_in("p"), sig.s2[1].degree_in("p"))
    neg_l0_pows = pern._powers(-l0, dmax)
    lp_pows = pern._powers(lp, dmax)
    u = pern._subst_linear_p(full, neg_l0_pows, lp_pows, full.degree_in("p"))
    u = pern._strip_parameter_content(pern._strip_main_power(u, "q"), "q", "s1")
    clear = max(sig.s2[0].degree_in("p"), sig.s2[1].degree_in("p"))
    a2c = pern._subst_linear_p(sig.s2[0], neg_l0_pows, lp_pows, clear)
    e2c = pern._subst_linear_p(sig.s2[1], neg_l0_pows, lp_pows, clear)
    qss = ("q", "s1", "s2")
    v = (MPoly.variable(qss, "s2") * MPoly(qss, {e + (0,): c for e, c in e2c.terms.items()})
         - MPoly(qss, {e + (0,): c for e, c in a2c.terms.items()}))
    v = pern._strip_main_power(v, "q").primitive_part()
    from quadmod.exactalg import MPolyRing
    from quadmod.exactalg.upoly import up_resultant

    u_up = [MPoly(pern.SS, {(e[0], 0): c for e, c in cf.terms.items()})
            for cf in u.as_univariate("q")]
    v_up = [MPoly(pern.SS, {(e[0], e[1]): c for e, c in cf.terms.items()})
            for cf in v.as_univariate("q")]
    elim = up_resultant(u_up, v_up, MPolyRing(pern.SS))
    pm, _ = pern._strip_eliminant(elim)
    pm = pern._remove_common_factor(pm, pern.plane_model(1).pmodel).primitive_part()
    assert pm == pern.plane_model(2).pmodel


def test_rational_point_search_line():
    pts = pern.rational_point_search(pern.plane_model(1), 2)
    s2s = sorted(b for _, b in pts)
    assert all(a == 2 for a, _ in pts)
    assert s2s == sorted([Fraction(v) for v in (-2, -1, 0, 1, 2)] +
                         [Fraction(-1, 2), Fraction(1, 2)])


def test_rational_point_search_checks_points():
    pts = pern.rational_point_search(pern.plane_model(2), 3)
    assert pts  # the line 2 s1 + s2 = 0 has plenty of small points
    for a, b in pts:
        assert 2 * a + b == 0


def test_rational_point_search_toy_circle():
    toy = MPoly(pern.SS, {(2, 0): 1, (0, 2): 1, (0, 0): 1})
    assert pern.rational_point_search(toy, 6) == []


def test_rational_point_search_known_circle():
    circle = MPoly(pern.SS, {(2, 0): 1, (0, 2): 1, (0, 0): -25})
    pts = pern.rational_point_search(circle, 5)
    assert (Fraction(3), Fraction(4)) in pts and (Fraction(-5), Fraction(0)) in pts
    for a, b in pts:
        assert a * a + b * b == 25


def test_fractions_enumeration_order():
    seq = list(pern.fractions_up_to_height(2))
    assert seq[:3] == [Fraction(-1), Fraction(0), Fraction(1)]
    assert len(seq) == len(set(seq))
    assert all(max(abs(f.numerator), f.denominator) <= 2 for f in seq)
    assert len(seq) == 7
