"""Dense univariate polynomials with exact arbitrary-precision integer coefficients.

Coefficient lists are little-endian: index i holds the coefficient of degree i.
The zero polynomial is the empty list; nonzero polynomials never store trailing
zero coefficients (canonical form).  All public operations are pure and every
`IntPoly` is immutable after construction, so values can be shared freely
between threads.

Multiplication is schoolbook below degree 64 and Karatsuba at and above it,
which is enough for the target workload (critical-orbit polynomials up to
degree 2^13).
"""

from __future__ import annotations

import math
from fractions import Fraction

from ..errors import NonExactDivision

KARATSUBA_CUTOFF = 64


# ---------------------------------------------------------------------------
# raw list-of-int kernels


def _trim(c: list) -> list:
    while c and not c[-1]:
        c.pop()
    return c


def _add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, v in enumerate(b):
        out[i] += v
    return _trim(out)


def _sub(a, b):
    out = list(a)
    if len(out) < len(b):
        out.extend([0] * (len(b) - len(out)))
    for i, v in enumerate(b):
        out[i] -= v
    return _trim(out)


def _neg(a):
    return [-v for v in a]


def _mul_school(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _trim(out)


def _sqr_school(a):
    n = len(a)
    out = [0] * (2 * n - 1)
    for i, ai in enumerate(a):
        if not ai:
            continue
        out[2 * i] += ai * ai
        d = ai + ai
        for j in range(i + 1, n):
            if a[j]:
                out[i + j] += d * a[j]
    return _trim(out)


def _mul(a, b):
    if not a or not b:
        return []
    if a is b:
        return _sqr(a)
    if min(len(a), len(b)) < KARATSUBA_CUTOFF:
        return _mul_school(a, b)
    h = (max(len(a), len(b)) + 1) // 2
    a0, a1 = a[:h], a[h:]
    b0, b1 = b[:h], b[h:]
    z0 = _mul(a0, b0)
    z2 = _mul(a1, b1)
    z1 = _sub(_sub(_mul(_add(a0, a1), _add(b0, b1)), z0), z2)
    out = [0] * (len(a) + len(b) - 1)
    for i, v in enumerate(z0):
        out[i] += v
    for i, v in enumerate(z1):
        out[h + i] += v
    for i, v in enumerate(z2):
        out[2 * h + i] += v
    return _trim(out)


def _sqr(a):
    if not a:
        return []
    if len(a) < KARATSUBA_CUTOFF:
        return _sqr_school(a)
    h = (len(a) + 1) // 2
    a0, a1 = a[:h], a[h:]
    z0 = _sqr(a0)
    z2 = _sqr(a1)
    z1 = _sub(_sub(_sqr(_add(a0, a1)), z0), z2)
    out = [0] * (2 * len(a) - 1)
    for i, v in enumerate(z0):
        out[i] += v
    for i, v in enumerate(z1):
        out[h + i] += v
    for i, v in enumerate(z2):
        out[2 * h + i] += v
    return _trim(out)


def _divrem_exact(a, b):
    """Quotient of a by b assuming b divides a in Z[x].

    Raises NonExactDivision as soon as a coefficient division fails or the
    remainder is nonzero.
    """
    if not b:
        raise NonExactDivision("division by the zero polynomial")
    if not a:
        return []
    if len(a) < len(b):
        raise NonExactDivision("dividend degree below divisor degree")
    r = list(a)
    lc = b[-1]
    nb = len(b)
    q = [0] * (len(a) - nb + 1)
    for k in range(len(q) - 1, -1, -1):
        head = r[k + nb - 1]
        if not head:
            continue
        t, rem = divmod(head, lc)
        if rem:
            raise NonExactDivision("leading coefficient does not divide exactly")
        q[k] = t
        for j in range(nb):
            r[k + j] -= t * b[j]
    if any(r):
        raise NonExactDivision("nonzero remainder")
    return q


def _content(a) -> int:
    g = 0
    for v in a:
        if v:
            g = math.gcd(g, v)
            if g == 1:
                break
    return g


# ---------------------------------------------------------------------------
# public class


class IntPoly:
    """Immutable dense polynomial over Z in one named variable."""

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs=(), var: str = "x"):
        c = list(coeffs)
        for v in c:
            if not isinstance(v, int):
                raise TypeError("IntPoly coefficients must be ints, got %r" % (v,))
        _trim(c)
        object.__setattr__(self, "coeffs", tuple(c))
        object.__setattr__(self, "var", var)

    def __setattr__(self, *a):
        raise AttributeError("IntPoly is immutable")

    @classmethod
    def _raw(cls, coeffs: list, var: str) -> "IntPoly":
        p = object.__new__(cls)
        object.__setattr__(p, "coeffs", tuple(coeffs))
        object.__setattr__(p, "var", var)
        return p

    @classmethod
    def zero(cls, var: str = "x") -> "IntPoly":
        return cls._raw([], var)

    @classmethod
    def const(cls, c: int, var: str = "x") -> "IntPoly":
        return cls._raw([c] if c else [], var)

    @classmethod
    def variable(cls, var: str = "x") -> "IntPoly":
        return cls._raw([0, 1], var)

    # -- structure

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.coeffs == (IntPoly.const(other).coeffs)
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.coeffs, "IntPoly"))

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    # -- arithmetic

    def _coerce(self, other):
        if isinstance(other, IntPoly):
            return other
        if isinstance(other, int):
            return IntPoly.const(other, self.var)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return IntPoly._raw(_add(list(self.coeffs), list(o.coeffs)), self.var)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return IntPoly._raw(_sub(list(self.coeffs), list(o.coeffs)), self.var)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return IntPoly._raw(_neg(list(self.coeffs)), self.var)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return IntPoly.zero(self.var)
            return IntPoly._raw([other * v for v in self.coeffs], self.var)
        if not isinstance(other, IntPoly):
            return NotImplemented
        return IntPoly._raw(_mul(list(self.coeffs), list(other.coeffs)), self.var)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        out = IntPoly.const(1, self.var)
        base = self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def shift(self, k: int) -> "IntPoly":
        """Multiply by var**k."""
        if not self.coeffs:
            return self
        return IntPoly._raw([0] * k + list(self.coeffs), self.var)

    # -- queries

    def evaluate(self, x):
        """Horner evaluation; exact for int and Fraction arguments."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "IntPoly":
        return IntPoly._raw([i * c for i, c in enumerate(self.coeffs)][1:], self.var)

    def content(self) -> int:
        """Nonnegative gcd of the coefficients (0 for the zero polynomial)."""
        return _content(self.coeffs)

    def primitive_part(self) -> "IntPoly":
        """Divide out the content; sign chosen so the leading coefficient is positive."""
        if not self.coeffs:
            return self
        g = self.content()
        if self.coeffs[-1] < 0:
            g = -g
        return IntPoly._raw([v // g for v in self.coeffs], self.var)

    def __repr__(self):
        if not self.coeffs:
            return "IntPoly(0)"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                mono = self.var if i == 1 else f"{self.var}^{i}"
                if c == 1:
                    parts.append(mono)
                elif c == -1:
                    parts.append(f"-{mono}")
                else:
                    parts.append(f"{c}*{mono}")
        s = " + ".join(parts).replace("+ -", "- ")
        return f"IntPoly({s})"


# ---------------------------------------------------------------------------
# spec-level operations


def poly_add(a: IntPoly, b: IntPoly) -> IntPoly:
    return a + b


def poly_mul(a: IntPoly, b: IntPoly) -> IntPoly:
    """Exact product; deg(ab) = deg a + deg b for nonzero inputs."""
    return a * b


def poly_divrem_exact(a: IntPoly, b: IntPoly) -> IntPoly:
    """Exact quotient q with q*b == a; raises NonExactDivision otherwise."""
    return IntPoly._raw(_divrem_exact(list(a.coeffs), list(b.coeffs)), a.var)


def poly_derivative(a: IntPoly) -> IntPoly:
    return a.derivative()


def poly_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Primitive gcd over Z with positive leading coefficient.

    Subresultant pseudo-remainder sequence on the primitive parts, so
    intermediate coefficient growth stays polynomial in the input size.
    """
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    if a.is_zero():
        return b.primitive_part()
    if b.is_zero():
        return a.primitive_part()
    from .upoly import int_ring, up_gcd

    g = up_gcd(list(a.coeffs), list(b.coeffs), int_ring)
    return IntPoly._raw(g, a.var).primitive_part()


def resultant(a: IntPoly, b: IntPoly) -> int:
    """Resultant with the convention Res(a,b) = lc(a)^deg(b) * prod b(root_i(a))."""
    from .upoly import int_ring, up_resultant

    return up_resultant(list(a.coeffs), list(b.coeffs), int_ring)


def squarefree_part(a: IntPoly) -> IntPoly:
    """Primitive squarefree part a / gcd(a, a')."""
    if a.is_zero():
        raise ValueError("squarefree part of 0 is undefined")
    if a.degree == 0:
        return IntPoly.const(1, a.var)
    g = poly_gcd(a, a.derivative())
    if g.degree == 0:
        return a.primitive_part()
    return poly_divrem_exact(a.primitive_part(), g).primitive_part()


def rational_roots(f: IntPoly) -> list:
    """All rational roots of f, found via divisors of the head/tail coefficients.

    Returns sorted Fractions.  Requires factoring the extreme coefficients,
    which is fine for the moderate coefficient sizes this is used on; see
    rational_roots_hensel for the large-coefficient route.
    """
    from .primes import divisors

    if f.is_zero():
        raise ValueError("every rational is a root of the zero polynomial")
    roots = []
    c = list(f.coeffs)
    k = 0
    while not c[0]:
        c.pop(0)
        k += 1
    if k:
        roots.append(Fraction(0))
    g = IntPoly(c, f.var).primitive_part()
    if g.degree >= 1:
        heads = divisors(abs(g.lc))
        tails = divisors(abs(g.coeffs[0]))
        seen = set()
        for a in tails:
            for b in heads:
                if math.gcd(a, b) != 1:
                    continue
                for cand in (Fraction(a, b), Fraction(-a, b)):
                    if cand in seen:
                        continue
                    seen.add(cand)
                    if g.evaluate(cand) == 0:
                        roots.append(cand)
    return sorted(roots)


def _rational_reconstruct(r: int, m: int, bound: int):
    """a/b with a ≡ r·b (mod m), |a| <= bound, 0 < b <= bound, or None."""
    a0, a1 = m, r % m
    b0, b1 = 0, 1
    while a1 > bound:
        q = a0 // a1
        a0, a1 = a1, a0 - q * a1
        b0, b1 = b1, b0 - q * b1
    if b1 == 0 or abs(b1) > bound:
        return None
    a, b = (a1, b1) if b1 > 0 else (-a1, -b1)
    if math.gcd(abs(a), b) != 1:
        return None
    return Fraction(a, b)


def rational_roots_hensel(f: IntPoly) -> list:
    """All rational roots of f without factoring any coefficient.

    Roots mod a good prime are Newton-lifted until the modulus exceeds twice
    the square of the Landau-Mignotte bound for a linear factor, rationally
    reconstructed, and verified by exact evaluation.  Agrees with
    rational_roots everywhere (cross-checked in the test suite)."""
    from . import modpoly
    from .primes import random_prime

    if f.is_zero():
        raise ValueError("every rational is a root of the zero polynomial")
    roots = []
    c = list(f.coeffs)
    k = 0
    while not c[0]:
        c.pop(0)
        k += 1
    if k:
        roots.append(Fraction(0))
    g = squarefree_part(IntPoly(c, f.var))
    if g.degree < 1:
        return sorted(roots)
    # any linear factor b*x - a of g has max(|a|, |b|) <= ||g||_1
    bound = sum(abs(v) for v in g.coeffs)
    target = 2 * bound * bound + 1
    rng = 0
    while True:
        p = random_prime(60, rng)
        rng += 1
        if g.lc % p == 0:
            continue
        gbar = modpoly.mod_reduce(g, p)
        if modpoly.is_squarefree_mod(gbar):
            break
    def eval_mod(poly, x, m):
        acc = 0
        for v in reversed(poly.coeffs):
            acc = (acc * x + v) % m
        return acc

    dg = g.derivative()
    for r in modpoly.roots(gbar):
        m = p
        while m < target:
            m = m * m
            num = eval_mod(g, r, m)
            den = eval_mod(dg, r, m)
            r = (r - num * pow(den, -1, m)) % m
        cand = _rational_reconstruct(r, m, bound)
        if cand is not None and g.evaluate(cand) == 0:
            roots.append(cand)
    return sorted(roots)
