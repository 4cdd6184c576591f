"""Degree-pattern sieve and its certificates."""

import pytest

from quadmod import gleason as gl
from quadmod.errors import NotSquarefreeOverQ
from quadmod.exactalg import IntPoly
from quadmod.irred import (BadPrime, DegreePattern, IrredCertificate,
                           degree_pattern, rational_factor_scan, sieve,
                           subset_sum_mask)

c = IntPoly.variable("c")


def test_degree_pattern_examples():
    g3 = gl.gleason(3).poly
    assert degree_pattern(g3, 2) == DegreePattern(2, (3,))
    assert degree_pattern(c ** 2 - 1, 7) == DegreePattern(7, (1, 1))
    assert degree_pattern(c ** 2 + c, 2) == DegreePattern(2, (1, 1))


def test_degree_pattern_bad_primes():
    assert isinstance(degree_pattern(7 * c ** 2 + c, 7), BadPrime)      # lc drops
    assert isinstance(degree_pattern(c ** 2 + 2 * c + 1, 5), BadPrime)  # not squarefree


def test_pattern_sums_to_degree():
    for p in (2, 3, 5, 101):
        pat = degree_pattern(gl.gleason(4).poly, p)
        if isinstance(pat, DegreePattern):
            assert sum(pat.degrees) == 6


def test_subset_sum_mask():
    mask = subset_sum_mask((1, 2, 3), 6)
    sums = {k for k in range(7) if (mask >> k) & 1}
    assert sums == {0, 1, 2, 3, 4, 5, 6}
    mask = subset_sum_mask((3, 3), 6)
    assert {k for k in range(7) if (mask >> k) & 1} == {0, 3, 6}


def test_sieve_linear_is_immediate():
    cert = sieve(gl.gleason(2).poly)
    assert cert.verdict == "Irreducible"


def test_sieve_g3():
    cert = sieve(gl.gleason(3).poly, seed=0)
    assert cert.verdict == "Irreducible"
    assert cert.possible_sums == ()
    assert all(sum(p.degrees) == 3 for p in cert.patterns)


def test_sieve_reducible_witness():
    f = (c + 1) * (c ** 2 + c + 7)
    cert = sieve(f, seed=0)
    assert cert.verdict == "ReducibleWitness"
    assert cert.witness is not None
    assert cert.witness.factor * cert.witness.cofactor == f


def test_sieve_reducible_no_rational_root_never_irreducible():
    f = (c ** 2 + c + 7) * (c ** 2 + 3)
    for seed in range(3):
        cert = sieve(f, max_primes=30, seed=seed)
        assert cert.verdict == "Inconclusive"
        assert 2 in cert.possible_sums


def test_sieve_determinism():
    a = sieve(gl.gleason(5).poly, seed=42)
    b = sieve(gl.gleason(5).poly, seed=42)
    assert a == b


def test_sieve_monotone_masks():
    cert = sieve(gl.gleason(6).poly, seed=1)
    deg = cert.degree
    mask = (1 << (deg + 1)) - 1
    for pat in cert.patterns:
        nxt = mask & subset_sum_mask(pat.degrees, deg)
        assert nxt & ~mask == 0  # never grows
        mask = nxt


def test_sieve_rejects_nonsquarefree():
    with pytest.raises(NotSquarefreeOverQ):
        sieve((c + 1) * (c + 1))


def test_rational_factor_scan():
    assert rational_factor_scan(c ** 2 + c).factor == c
    assert rational_factor_scan(gl.gleason(3).poly) is None
    assert rational_factor_scan(c ** 2 + 1) is None
    w = rational_factor_scan((2 * c - 1) * (c ** 2 + 5))
    assert w.factor == 2 * c - 1


def test_certificate_invariants():
    with pytest.raises(ValueError):
        IrredCertificate("Irreducible", 4, [], (2,), 0, 1)
    with pytest.raises(ValueError):
        IrredCertificate("ReducibleWitness", 4, [], (), 0, 1)
