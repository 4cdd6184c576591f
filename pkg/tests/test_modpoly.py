"""Prime-field polynomial arithmetic, ddf, and root extraction."""

import random

import pytest

from quadmod.errors import NotSquarefree
from quadmod.exactalg import (IntPoly, ModPoly, coprime_certificate, ddf,
                              is_squarefree_mod, mod_reduce, roots,
                              squarefree_certificate)
from quadmod.exactalg.modpoly import _Ctx, _divmod, _gcd, _kronecker_mul, _mul_school
from quadmod.exactalg.primes import random_prime

c = IntPoly.variable("c")


def test_mod_reduce_examples():
    assert mod_reduce(c ** 3 + 2 * c ** 2 + c + 1, 2) == ModPoly([1, 1, 0, 1], 2)
    assert mod_reduce(c + 1, 7) == ModPoly([1, 1], 7)
    assert mod_reduce(7 * c ** 2 + c, 7) == ModPoly([0, 1], 7)  # degree drops


def test_kronecker_matches_schoolbook():
    rng = random.Random(6)
    for bits in (31, 60):
        p = random_prime(bits, rng)
        for _ in range(20):
            a = [rng.randrange(p) for _ in range(rng.randint(32, 200))]
            b = [rng.randrange(p) for _ in range(rng.randint(32, 200))]
            assert _kronecker_mul(a, b, p) == _mul_school(a, b, p)


def test_ctx_rem_matches_divmod():
    rng = random.Random(7)
    p = random_prime(31, rng)
    f = [rng.randrange(p) for _ in range(40)] + [1]
    ctx = _Ctx(f, p)
    for _ in range(30):
        a = [rng.randrange(p) for _ in range(rng.randint(1, 79))]
        assert ctx.rem(a) == _divmod(a, f, p)[1]


def test_gcd_numpy_path_matches_pure():
    rng = random.Random(8)
    p = random_prime(31, rng)
    for _ in range(10):
        common = [rng.randrange(p) for _ in range(50)] + [1]
        a = _kronecker_mul([rng.randrange(p) for _ in range(80)] + [1], common, p)
        b = _kronecker_mul([rng.randrange(p) for _ in range(70)] + [1], common, p)
        fast = _gcd(a, b, p)           # big degree: vectorized route
        slow = a
        bb = b
        while bb:
            _, r = _divmod(slow, bb, p)
            slow, bb = bb, r
        inv = pow(slow[-1], p - 2, p)
        slow = [v * inv % p for v in slow]
        assert fast == slow


def test_ddf_examples():
    # x^3 + x + 1 irreducible over F_2
    out = ddf(ModPoly([1, 1, 0, 1], 2))
    assert out == [(3, ModPoly([1, 1, 0, 1], 2))]
    # x^2 + 1: roots 2, 3 mod 5 -> pattern {1, 1}
    out = ddf(ModPoly([1, 0, 1], 5))
    assert [(d, g.degree) for d, g in out] == [(1, 2)]
    # x^2 + 1 irreducible mod 7 -> pattern {2}
    out = ddf(ModPoly([1, 0, 1], 7))
    assert [(d, g.degree) for d, g in out] == [(2, 2)]


def test_ddf_requires_squarefree():
    with pytest.raises(NotSquarefree):
        ddf(ModPoly([1, 2, 1], 5))  # (x+1)^2


def test_ddf_product_law_big_prime():
    rng = random.Random(9)
    for bits in (31, 60):
        p = random_prime(bits, rng)
        for _ in range(5):
            f = ModPoly([rng.randrange(p) for _ in range(60)] + [1], p)
            if not is_squarefree_mod(f):
                continue
            prod = ModPoly([1], p)
            total = 0
            for d, g in ddf(f):
                prod = prod * g
                assert g.degree % d == 0
                total += g.degree
            assert prod == f.monic()
            assert total == f.degree


def test_roots_small_and_big():
    assert roots(ModPoly([1, 0, 1], 5)) == [2, 3]
    rng = random.Random(10)
    p = random_prime(60, rng)
    planted = sorted({rng.randrange(p) for _ in range(6)})
    f = ModPoly([1], p)
    for r in planted:
        f = f * ModPoly([-r, 1], p)
    assert roots(f) == planted


def test_coprime_certificate():
    g3 = c ** 3 + 2 * c ** 2 + c + 1
    assert coprime_certificate(c + 1, g3) is not None      # G3(-1) = 1
    assert squarefree_certificate(g3) is not None
    assert squarefree_certificate((c + 1) * (c + 1)) is None
    assert coprime_certificate(c + 1, (c + 1) * (c + 3)) is None
