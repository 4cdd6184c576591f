"""Sparse multivariate polynomials and the generic elimination engine."""

import random

import pytest
import sympy

from quadmod.errors import NonExactDivision
from quadmod.exactalg import IntPoly, MPoly, MPolyRing, PolyRing, bipoly_divexact
from quadmod.exactalg.upoly import (int_ring, up_gcd, up_pseudo_divrem,
                                    up_resultant)

PQ = ("p", "q")


def mp(name):
    return MPoly.variable(PQ, name)


def test_arithmetic_basics():
    p, q = mp("p"), mp("q")
    f = (p + q) * (p - q)
    assert f == p * p - q * q
    assert (f + 3) - 3 == f
    assert (f * 0).is_zero()
    assert f.degree_in("p") == 2 and f.total_degree() == 2


def test_divexact():
    p, q = mp("p"), mp("q")
    f = (p + q * q) * (p * p - p * q + 7)
    assert f.divexact(p + q * q) == p * p - p * q + 7
    with pytest.raises(NonExactDivision):
        (f + 1).divexact(p + q * q)
    with pytest.raises(NonExactDivision):
        (2 * p).divexact(MPoly.const(PQ, 4))


def test_bipoly_divexact_matches_generic():
    rng = random.Random(20)
    for _ in range(50):
        a = MPoly(PQ, {(rng.randint(0, 3), rng.randint(0, 3)): rng.randint(-9, 9)
                       for _ in range(5)})
        b = MPoly(PQ, {(rng.randint(0, 2), rng.randint(0, 2)): rng.randint(-9, 9)
                       for _ in range(4)})
        if a.is_zero() or b.is_zero() or b.degree_in("p") == 0:
            continue
        prod = a * b
        assert bipoly_divexact(prod, b, "p") == prod.divexact(b) == a


def test_primitive_part_sign():
    f = MPoly(PQ, {(2, 0): -4, (0, 1): -6})
    g = f.primitive_part()
    assert g.leading()[1] > 0
    assert g == MPoly(PQ, {(2, 0): 2, (0, 1): 3})


def test_univariate_views_roundtrip():
    p, q = mp("p"), mp("q")
    f = p ** 3 * q + 2 * p * q ** 2 - q + 5
    coeffs = f.as_univariate("p")
    assert MPoly.from_univariate(coeffs, "p", PQ) == f


def test_resultant_symbolic_linear():
    ab = ("a", "b")
    ring = MPolyRing(ab)
    a = MPoly.variable(ab, "a")
    b = MPoly.variable(ab, "b")
    one = MPoly.const(ab, 1)
    # Res_x(x - a, x - b) = a - b (evaluate x - b at the root a)
    assert up_resultant([-a, one], [-b, one], ring) == a - b


def test_resultant_shared_root():
    assert up_resultant([-1, 0, 1], [-1, 1], int_ring) == 0
    assert up_resultant([-2, 0, 1], [-3, 0, 1], int_ring) == 1


def _sylvester_det(fa, fb):
    m, n = len(fa) - 1, len(fb) - 1
    rows = []
    fa_desc = list(reversed(fa))
    fb_desc = list(reversed(fb))
    for i in range(n):
        rows.append([0] * i + fa_desc + [0] * (n - 1 - i))
    for i in range(m):
        rows.append([0] * i + fb_desc + [0] * (m - 1 - i))
    return sympy.Matrix(rows).det()


def test_resultant_vs_sylvester_determinant():
    rng = random.Random(21)
    for _ in range(250):
        fa = [rng.randint(-5, 5) for _ in range(rng.randint(1, 5))] + [rng.choice([-3, -1, 1, 2])]
        fb = [rng.randint(-5, 5) for _ in range(rng.randint(1, 5))] + [rng.choice([-2, -1, 1, 3])]
        assert up_resultant(list(fa), list(fb), int_ring) == _sylvester_det(fa, fb)


def test_resultant_bivariate_vs_sympy():
    # eliminating x from polynomials with coefficients in Z[t]
    rng = random.Random(22)
    ring = PolyRing("t")
    t = sympy.symbols("t")
    xs = sympy.symbols("x")
    for _ in range(40):
        da, db = rng.randint(1, 3), rng.randint(1, 3)
        fa = [IntPoly([rng.randint(-4, 4) for _ in range(2)], "t") for _ in range(da)]
        fb = [IntPoly([rng.randint(-4, 4) for _ in range(2)], "t") for _ in range(db)]
        fa.append(IntPoly([rng.choice([1, 2])], "t"))
        fb.append(IntPoly([rng.choice([1, 3])], "t"))
        mine = up_resultant(fa, fb, ring)
        fa_s = sum(sum(cc * t ** j for j, cc in enumerate(cf.coeffs)) * xs ** i
                   for i, cf in enumerate(fa))
        fb_s = sum(sum(cc * t ** j for j, cc in enumerate(cf.coeffs)) * xs ** i
                   for i, cf in enumerate(fb))
        # sympy resultant through the Sylvester matrix for a neutral reference
        m, n = len(fa) - 1, len(fb) - 1
        sylv = sympy.Matrix(m + n, m + n, lambda r, col: 0)
        fa_desc = [sympy.Poly(fa_s, xs).coeff_monomial(xs ** k) for k in range(m, -1, -1)]
        fb_desc = [sympy.Poly(fb_s, xs).coeff_monomial(xs ** k) for k in range(n, -1, -1)]
        for i in range(n):
            for j, v in enumerate(fa_desc):
                sylv[i, i + j] = v
        for i in range(m):
            for j, v in enumerate(fb_desc):
                sylv[n + i, i + j] = v
        ref = sympy.expand(sylv.det())
        mine_s = sympy.expand(sum(cc * t ** e for e, cc in
                                  [(k, v) for k, v in enumerate(mine.coeffs)]))
        assert sympy.simplify(mine_s - ref) == 0


def test_pseudo_divrem_invariant():
    rng = random.Random(23)
    ring = int_ring
    for _ in range(300):
        a = [rng.randint(-9, 9) for _ in range(rng.randint(1, 7))] + [rng.choice([-2, 1, 3])]
        b = [rng.randint(-9, 9) for _ in range(rng.randint(1, 5))] + [rng.choice([-3, 2, 5])]
        q, r, e = up_pseudo_divrem(list(a), list(b), ring)
        lhs = [v * b[-1] ** e for v in a]
        from quadmod.exactalg.upoly import up_mul, up_trim

        rhs = up_mul(q, list(b), ring)
        rhs = rhs + [0] * (len(lhs) - len(rhs))
        rhs = [x + (r[i] if i < len(r) else 0) for i, x in enumerate(rhs)]
        assert up_trim(lhs, ring) == up_trim(rhs, ring)
        assert len(r) - 1 < len(b) - 1


def test_up_gcd_planted():
    rng = random.Random(24)
    ring = int_ring
    for _ in range(100):
        g = [rng.randint(-5, 5) for _ in range(rng.randint(1, 3))] + [rng.choice([1, 2])]
        a = [rng.randint(-5, 5) for _ in range(3)] + [1]
        b = [rng.randint(-5, 5) for _ in range(3)] + [2]
        from quadmod.exactalg.upoly import up_mul

        ag = up_mul(a, g, ring)
        bg = up_mul(b, g, ring)
        got = up_gcd(ag, bg, ring)
        # planted factor divides the computed gcd
        q, r, _ = up_pseudo_divrem(got, g, ring)
        del q
        assert not r or len(got) >= len(g)
        qq, rr, _ = up_pseudo_divrem(up_mul(a, g, ring), got, ring)
        assert not rr
