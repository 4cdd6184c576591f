"""Univariate polynomial algorithms over a generic exact coefficient domain.

A polynomial is a plain little-endian list of ring elements with a nonzero
last entry (empty list = zero).  The coefficient domain is described by a
small ring adapter; instances exist for Python ints, `IntPoly` coefficients
and `MPoly` coefficients, which covers every elimination step in the package:
resultants over Z, over Z[q], and over Z[s1, s2].

Division-free growth control uses the classical subresultant
pseudo-remainder sequence; the resultant routine follows the standard
subresultant bookkeeping (sign tracking plus the g/h correction factors) and
returns the exact resultant with the convention

    Res(a, b) = lc(a)^deg(b) * prod_{a(alpha)=0} b(alpha).
"""

from __future__ import annotations

import math

from ..errors import NonExactDivision


class IntRing:
    """Adapter exposing Z through the generic ring interface."""

    zero = 0
    one = 1

    @staticmethod
    def is_zero(a):
        return a == 0

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def sub(a, b):
        return a - b

    @staticmethod
    def neg(a):
        return -a

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def divexact(a, b):
        q, r = divmod(a, b)
        if r:
            raise NonExactDivision("inexact integer division")
        return q

    @staticmethod
    def gcd(a, b):
        return math.gcd(a, b)

    @staticmethod
    def is_unit_normal(a):
        # used to pick a canonical sign for primitive parts
        return a > 0


int_ring = IntRing()


def up_trim(c: list, ring) -> list:
    while c and ring.is_zero(c[-1]):
        c.pop()
    return c


def up_deg(c: list) -> int:
    return len(c) - 1


def up_mul(a: list, b: list, ring) -> list:
    if not a or not b:
        return []
    out = [ring.zero] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ring.is_zero(ai):
            continue
        for j, bj in enumerate(b):
            if not ring.is_zero(bj):
                out[i + j] = ring.add(out[i + j], ring.mul(ai, bj))
    return up_trim(out, ring)


def up_scale(a: list, c, ring) -> list:
    return up_trim([ring.mul(v, c) for v in a], ring)


def up_pow_coeff(c, e: int, ring):
    out = ring.one
    for _ in range(e):
        out = ring.mul(out, c)
    return out


def up_pseudo_divrem(a: list, b: list, ring):
    """Pseudo-division: returns (q, r, e) with lc(b)^e * a = q*b + r, deg r < deg b.

    The scaling exponent e counts only the steps actually taken, so it can be
    smaller than deg(a) - deg(b) + 1 when leading terms cancel.
    """
    if not b:
        raise ZeroDivisionError("pseudo-division by zero polynomial")
    r = list(a)
    db = up_deg(b)
    lc = b[-1]
    q = [ring.zero] * max(len(a) - db, 1)
    e = 0
    while r and up_deg(r) >= db:
        k = up_deg(r) - db
        t = r[-1]
        q = [ring.mul(v, lc) for v in q]
        q[k] = ring.add(q[k], t)
        r = [ring.mul(v, lc) for v in r]
        for j in range(db + 1):
            r[k + j] = ring.sub(r[k + j], ring.mul(t, b[j]))
        up_trim(r, ring)
        e += 1
    return up_trim(q, ring), r, e


def up_divexact_coeff(a: list, c, ring) -> list:
    return [ring.divexact(v, c) for v in a]


def up_content(a: list, ring):
    g = ring.zero
    for v in a:
        if not ring.is_zero(v):
            g = v if ring.is_zero(g) else ring.gcd(g, v)
    return g


def up_primitive(a: list, ring) -> list:
    if not a:
        return a
    g = up_content(a, ring)
    out = up_divexact_coeff(a, g, ring)
    if hasattr(ring, "is_unit_normal") and not ring.is_unit_normal(out[-1]):
        out = [ring.neg(v) for v in out]
    return out


def up_gcd(a: list, b: list, ring) -> list:
    """Gcd via the subresultant PRS; result is primitive in the coefficient ring.

    Requires the ring to provide gcd (Z and Z[x] do); correct up to the usual
    unit ambiguity, normalised through ring.is_unit_normal when available.
    """
    a = up_trim(list(a), ring)
    b = up_trim(list(b), ring)
    if not a:
        return up_primitive(b, ring)
    if not b:
        return up_primitive(a, ring)
    if up_deg(a) < up_deg(b):
        a, b = b, a
    a = up_primitive(a, ring)
    b = up_primitive(b, ring)
    g = ring.one
    h = ring.one
    while True:
        delta = up_deg(a) - up_deg(b)
        _, r, e = up_pseudo_divrem(a, b, ring)
        if not r:
            return up_primitive(b, ring)
        if up_deg(r) == 0:
            return [ring.one]
        # normalise to the full lc^(delta+1) scaling before the subresultant division
        if e < delta + 1:
            r = up_scale(r, up_pow_coeff(b[-1], delta + 1 - e, ring), ring)
        denom = ring.mul(g, up_pow_coeff(h, delta, ring))
        a, b = b, up_divexact_coeff(r, denom, ring)
        g = a[-1]
        if delta == 1:
            h = g
        elif delta > 1:
            h = ring.divexact(up_pow_coeff(g, delta, ring), up_pow_coeff(h, delta - 1, ring))


def up_resultant(a: list, b: list, ring):
    """Exact resultant of a and b via the subresultant PRS (fraction free)."""
    a = up_trim(list(a), ring)
    b = up_trim(list(b), ring)
    if not a or not b:
        return ring.zero
    if up_deg(a) == 0 and up_deg(b) == 0:
        return ring.one
    sign = 1
    if up_deg(a) < up_deg(b):
        if (up_deg(a) * up_deg(b)) & 1:
            sign = -sign
        a, b = b, a
    if up_deg(b) == 0:
        return up_pow_coeff(b[0], up_deg(a), ring)
    g = ring.one
    h = ring.one
    while True:
        da, db = up_deg(a), up_deg(b)
        delta = da - db
        if (da & 1) and (db & 1):
            sign = -sign
        _, r, e = up_pseudo_divrem(a, b, ring)
        if not r:
            return ring.zero
        if e < delta + 1:
            r = up_scale(r, up_pow_coeff(b[-1], delta + 1 - e, ring), ring)
        denom = ring.mul(g, up_pow_coeff(h, delta, ring))
        a, b = b, up_divexact_coeff(r, denom, ring)
        g = a[-1]
        if delta == 1:
            h = g
        elif delta > 1:
            h = ring.divexact(up_pow_coeff(g, delta, ring), up_pow_coeff(h, delta - 1, ring))
        if up_deg(b) == 0:
            da = up_deg(a)
            num = up_pow_coeff(b[0], da, ring)
            if da >= 2:
                num = ring.divexact(num, up_pow_coeff(h, da - 1, ring))
            return num if sign == 1 else ring.neg(num)


def up_derivative(a: list, ring) -> list:
    out = []
    for i in range(1, len(a)):
        c = a[i]
        acc = ring.zero
        for _ in range(i):
            acc = ring.add(acc, c)
        out.append(acc)
    return up_trim(out, ring)
