"""Univariate integer polynomial arithmetic."""

import random
from fractions import Fraction

import pytest

from quadmod.errors import NonExactDivision
from quadmod.exactalg import (IntPoly, poly_divrem_exact, poly_gcd, poly_mul,
                              rational_roots, resultant, squarefree_part)
from quadmod.exactalg.intpoly import rational_roots_hensel

c = IntPoly.variable("c")
x = IntPoly.variable("x")


def test_mul_examples():
    assert poly_mul(c, c + 1) == c ** 2 + c
    assert poly_mul(IntPoly.zero("c"), c ** 3 + 1).is_zero()
    assert poly_mul(c ** 2 + c, c ** 2 + c) == c ** 4 + 2 * c ** 3 + c ** 2


def test_mul_degree_law():
    rng = random.Random(0)
    for _ in range(200):
        a = IntPoly([rng.randint(-9, 9) for _ in range(rng.randint(1, 6))] + [3])
        b = IntPoly([rng.randint(-9, 9) for _ in range(rng.randint(1, 6))] + [2])
        assert (a * b).degree == a.degree + b.degree


def test_karatsuba_matches_schoolbook():
    from quadmod.exactalg.intpoly import _mul, _mul_school

    rng = random.Random(1)
    for _ in range(30):
        a = [rng.randint(-10 ** 6, 10 ** 6) for _ in range(rng.randint(70, 400))]
        b = [rng.randint(-10 ** 6, 10 ** 6) for _ in range(rng.randint(70, 400))]
        assert _mul(list(a), list(b)) == _mul_school(a, b)


def test_divrem_exact_examples():
    assert poly_divrem_exact(c ** 2 + c, c) == c + 1
    assert poly_divrem_exact(c ** 4 + 2 * c ** 3 + c ** 2 + c, c) == c ** 3 + 2 * c ** 2 + c + 1
    with pytest.raises(NonExactDivision):
        poly_divrem_exact(c ** 2 + 1, c + 1)


def test_divrem_roundtrip():
    rng = random.Random(2)
    for _ in range(500):
        a = IntPoly([rng.randint(-99, 99) for _ in range(rng.randint(0, 9))])
        b = IntPoly([rng.randint(-99, 99) for _ in range(rng.randint(1, 9))] + [5])
        assert poly_divrem_exact(a * b, b) == a


def test_gcd_examples():
    assert poly_gcd(c ** 2 - 1, c - 1) == c - 1
    assert poly_gcd(c, c + 1) == IntPoly.const(1, "c")
    g3 = c ** 3 + 2 * c ** 2 + c + 1
    assert poly_gcd(g3, g3.derivative()) == IntPoly.const(1, "c")


def test_gcd_positive_primitive():
    a = (2 * c - 2) * (c + 3) * 4
    b = (c - 1) * (c + 5) * -6
    assert poly_gcd(a, b) == c - 1  # primitive, positive leading coefficient


def test_resultant_examples():
    assert resultant(x ** 2 - 1, x - 1) == 0
    assert resultant(x ** 2 - 2, x ** 2 - 3) == 1


def test_resultant_product_over_roots():
    # Res(a, b) = lc(a)^deg(b) * prod b(alpha) over roots of a; check on a
    # factored a with known integer roots
    a = (x - 2) * (x + 5)
    b = x ** 3 - x + 1
    assert resultant(a, b) == b.evaluate(2) * b.evaluate(-5)


def test_squarefree_part():
    f = (c + 1) ** 3 * (c - 2)
    assert squarefree_part(f) == (c + 1) * (c - 2)


def test_rational_roots_divisors():
    f = (2 * c - 1) * (c + 3) * (c ** 2 + 1)
    assert rational_roots(f) == [Fraction(-3), Fraction(1, 2)]
    assert rational_roots(c ** 2 + 1) == []
    assert rational_roots(c ** 2 + c) == [Fraction(-1), Fraction(0)]


def test_rational_roots_hensel_agrees():
    rng = random.Random(3)
    for _ in range(60):
        factors = [IntPoly([rng.randint(-9, 9), rng.choice([1, 2, 3])])
                   for _ in range(rng.randint(0, 3))]
        f = IntPoly([rng.randint(-20, 20) for _ in range(3)] + [1])
        for g in factors:
            f = f * g
        assert rational_roots_hensel(f) == rational_roots(f)


def test_rational_roots_hensel_huge_coefficients():
    # divisor enumeration would have to factor the 120-bit tail; Hensel does not
    r = Fraction(12345677, 99999989)
    f = (IntPoly([-r.numerator, r.denominator]) *
         IntPoly([10 ** 18 + 9, 10 ** 17 + 3, 1]))
    assert Fraction(12345677, 99999989) in rational_roots_hensel(f)


def test_evaluate_fraction():
    f = c ** 2 - c + 1
    assert f.evaluate(Fraction(1, 2)) == Fraction(3, 4)


def test_content_primitive():
    f = IntPoly([-4, -8, -12])
    assert f.content() == 4
    assert f.primitive_part() == IntPoly([1, 2, 3])
