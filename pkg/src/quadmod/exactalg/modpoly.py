"""Dense polynomial arithmetic over word-sized prime fields.

Representation mirrors `intpoly`: little-endian coefficient lists, reduced
into [0, p).  Two things make the large-degree workload (distinct-degree
factorization near degree 2000 under a 60-bit prime) tractable in Python:

* multiplication by Kronecker substitution -- coefficients are packed into
  one large integer at a limb width wide enough that no carries can touch a
  neighbouring limb, multiplied once (gmpy2 when installed, plain int
  otherwise), and unpacked;
* reduction modulo the working polynomial through a cached power-series
  inverse of its reversal (a quotient and a product instead of long
  division).

Euclidean gcd additionally has a vectorized path for primes below 2**31,
where every intermediate product provably fits in int64.
"""

from __future__ import annotations

import random

import numpy as np

from ..errors import NotSquarefree
from .intpoly import IntPoly
from .primes import random_prime

try:
    from gmpy2 import mpz as _mpz
except ImportError:  # pragma: no cover - gmpy2 is an optional speedup
    _mpz = int

_KRONECKER_CUTOFF = 32
_NUMPY_GCD_CUTOFF = 64


def _trim(c: list) -> list:
    while c and not c[-1]:
        c.pop()
    return c


def _mul_school(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _trim([v % p for v in out])


def _kronecker_mul(a, b, p):
    # limb wide enough that sum_{i+j=k} a_i b_j never overflows into limb k+1
    maxval = min(len(a), len(b)) * (p - 1) * (p - 1)
    wb = (maxval.bit_length() + 8) // 8
    abuf = bytearray(len(a) * wb)
    for i, v in enumerate(a):
        abuf[i * wb:(i + 1) * wb] = v.to_bytes(wb, "little")
    bbuf = bytearray(len(b) * wb)
    for i, v in enumerate(b):
        bbuf[i * wb:(i + 1) * wb] = v.to_bytes(wb, "little")
    prod = int(_mpz(int.from_bytes(abuf, "little")) * _mpz(int.from_bytes(bbuf, "little")))
    nout = len(a) + len(b) - 1
    pbuf = prod.to_bytes(nout * wb + wb, "little")
    out = [int.from_bytes(pbuf[k * wb:(k + 1) * wb], "little") % p for k in range(nout)]
    return _trim(out)


def _mul(a, b, p):
    if not a or not b:
        return []
    if min(len(a), len(b)) < _KRONECKER_CUTOFF:
        return _mul_school(a, b, p)
    return _kronecker_mul(a, b, p)


def _divmod(a, b, p):
    """Long division; b need not be monic (p is prime, so lc is invertible)."""
    b = _trim(list(b))
    if not b:
        raise ZeroDivisionError("modpoly division by zero")
    r = [v % p for v in a]
    _trim(r)
    if len(r) < len(b):
        return [], r
    binv = pow(b[-1], p - 2, p)
    nb = len(b)
    q = [0] * (len(r) - nb + 1)
    for k in range(len(q) - 1, -1, -1):
        head = r[k + nb - 1]
        if head:
            t = head * binv % p
            q[k] = t
            for j in range(nb):
                r[k + j] = (r[k + j] - t * b[j]) % p
    return _trim(q), _trim(r[:nb - 1])


def _monic(a, p):
    a = _trim(list(a))
    if not a or a[-1] == 1:
        return a
    inv = pow(a[-1], p - 2, p)
    return [v * inv % p for v in a]


def _np_gcd(a, b, p):
    A = np.array(a, dtype=np.int64)
    B = np.array(b, dtype=np.int64)
    while B.size:
        inv = pow(int(B[-1]), p - 2, p)
        B = (B * inv) % p  # monic; entries < p < 2**31, products below stay < 2**62
        R = A
        while R.size >= B.size:
            c = int(R[-1])
            if c:
                R[R.size - B.size:] = (R[R.size - B.size:] - c * B) % p
            R = R[:-1]
            while R.size and not R[-1]:
                R = R[:-1]
        A, B = B, R
    return _monic([int(v) for v in A], p)


def _gcd(a, b, p):
    a = _trim([v % p for v in a])
    b = _trim([v % p for v in b])
    if not a:
        return _monic(b, p)
    if not b:
        return _monic(a, p)
    if p < (1 << 31) and min(len(a), len(b)) > _NUMPY_GCD_CUTOFF:
        return _np_gcd(a, b, p)
    while b:
        _, r = _divmod(a, b, p)
        a, b = b, r
    return _monic(a, p)


def _derivative(a, p):
    return _trim([i * c % p for i, c in enumerate(a)][1:])


def _eval(a, x, p):
    acc = 0
    for c in reversed(a):
        acc = (acc * x + c) % p
    return acc


class _Ctx:
    """Reduction context for a fixed monic modulus: Barrett-style rem via a
    cached Newton inverse of the reversed modulus."""

    __slots__ = ("f", "p", "m", "_inv", "_prec")

    def __init__(self, f, p):
        f = _trim(list(f))
        if not f or f[-1] != 1:
            raise ValueError("context requires a monic modulus")
        self.f = f
        self.p = p
        self.m = len(f) - 1
        self._inv = [1]
        self._prec = 1

    def _inverse(self, k):
        if self._prec >= k:
            return self._inv
        p = self.p
        frev = self.f[::-1]
        g = self._inv
        prec = self._prec
        while prec < k:
            prec = min(2 * prec, k)
            fg = _mul(frev[:prec], g, p)[:prec]
            t = [-v % p for v in fg]
            if t:
                t[0] = (t[0] + 2) % p
            else:
                t = [2 % p]
            g = _mul(g, t, p)[:prec]
        self._inv = g
        self._prec = prec
        return g

    def rem(self, a):
        a = _trim([v % self.p for v in a])
        m = self.m
        if len(a) <= m:
            return a
        p = self.p
        k = len(a) - m
        inv = self._inverse(k)
        arev = a[::-1][:k]
        qrev = _mul(arev, inv[:k], p)[:k]
        qrev.extend([0] * (k - len(qrev)))
        q = qrev[::-1]
        qf = _mul(q, self.f, p)
        r = [(a[i] - (qf[i] if i < len(qf) else 0)) % p for i in range(m)]
        return _trim(r)

    def mulmod(self, a, b):
        return self.rem(_mul(a, b, self.p))

    def powmod(self, a, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        a = self.rem(a)
        if e == 0:
            return [1 % self.p]
        out = a
        for bit in bin(e)[3:]:  # leading bit of e handled by out = a
            out = self.mulmod(out, out)
            if bit == "1":
                out = self.mulmod(out, a)
        return out


class ModPoly:
    """Immutable dense polynomial over F_p for a word-sized prime p."""

    __slots__ = ("coeffs", "p")

    def __init__(self, coeffs, p: int):
        if p < 2:
            raise ValueError("modulus must be a prime >= 2")
        c = _trim([v % p for v in coeffs])
        object.__setattr__(self, "coeffs", tuple(c))
        object.__setattr__(self, "p", p)

    def __setattr__(self, *a):
        raise AttributeError("ModPoly is immutable")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def monic(self) -> "ModPoly":
        return ModPoly(_monic(list(self.coeffs), self.p), self.p)

    def derivative(self) -> "ModPoly":
        return ModPoly(_derivative(list(self.coeffs), self.p), self.p)

    def evaluate(self, x: int) -> int:
        return _eval(self.coeffs, x % self.p, self.p)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, ModPoly):
            return NotImplemented
        return self.p == other.p and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.coeffs, self.p))

    def __add__(self, other):
        self._check(other)
        a, b = list(self.coeffs), list(other.coeffs)
        if len(a) < len(b):
            a, b = b, a
        for i, v in enumerate(b):
            a[i] = (a[i] + v) % self.p
        return ModPoly(a, self.p)

    def __sub__(self, other):
        self._check(other)
        a, b = list(self.coeffs), list(other.coeffs)
        a.extend([0] * (len(b) - len(a)))
        for i, v in enumerate(b):
            a[i] = (a[i] - v) % self.p
        return ModPoly(a, self.p)

    def __mul__(self, other):
        self._check(other)
        return ModPoly(_mul(list(self.coeffs), list(other.coeffs), self.p), self.p)

    def _check(self, other):
        if not isinstance(other, ModPoly) or other.p != self.p:
            raise TypeError("mixed-modulus arithmetic")

    def __repr__(self):
        return f"ModPoly({list(self.coeffs)}, p={self.p})"


def mod_reduce(f: IntPoly, p: int) -> ModPoly:
    """Coefficientwise reduction of an integer polynomial; degree may drop."""
    return ModPoly([c % p for c in f.coeffs], p)


def mod_gcd(a: ModPoly, b: ModPoly) -> ModPoly:
    a._check(b)
    return ModPoly(_gcd(list(a.coeffs), list(b.coeffs), a.p), a.p)


def mod_divmod(a: ModPoly, b: ModPoly):
    a._check(b)
    q, r = _divmod(list(a.coeffs), list(b.coeffs), a.p)
    return ModPoly(q, a.p), ModPoly(r, a.p)


def is_squarefree_mod(f: ModPoly) -> bool:
    if f.degree <= 0:
        return f.degree == 0
    return len(_gcd(list(f.coeffs), _derivative(list(f.coeffs), f.p), f.p)) == 1


def ddf(f: ModPoly, block: int = 16):
    """Distinct-degree factorization of a squarefree modular polynomial.

    Returns [(d, product of all monic irreducible factors of degree d)],
    ascending in d, computed by iterated Frobenius x -> x^p with gcd
    extraction batched over `block` consecutive degrees.
    """
    p = f.p
    if f.degree < 1:
        raise ValueError("ddf requires a nonconstant polynomial")
    fl = _monic(list(f.coeffs), p)
    if not is_squarefree_mod(f):
        raise NotSquarefree("ddf input must be squarefree mod p")
    if len(fl) == 2:
        return [(1, ModPoly(fl, p))]
    out = []
    d = 0
    ctx = _Ctx(fl, p)
    h = ctx.rem([0, 1])
    while True:
        rd = len(fl) - 1
        if rd == 0:
            break
        if 2 * (d + 1) > rd:
            out.append((rd, ModPoly(fl, p)))
            break
        top = min(d + block, rd // 2)
        batch = []
        acc = [1]
        for i in range(d + 1, top + 1):
            h = ctx.powmod(h, p)
            batch.append((i, h))
            diff = list(h) + [0] * (2 - len(h))
            diff[1] = (diff[1] - 1) % p
            acc = ctx.mulmod(acc, _trim(diff))
        if len(_gcd(acc, fl, p)) > 1:
            for i, hi in batch:
                diff = list(hi) + [0] * (2 - len(hi))
                diff[1] = (diff[1] - 1) % p
                gi = _gcd(_trim(diff), fl, p)
                if len(gi) > 1:
                    out.append((i, ModPoly(gi, p)))
                    fl, rem = _divmod(fl, gi, p)
                    assert not rem, "extracted factor must divide"
            if len(fl) - 1 >= 1:
                ctx = _Ctx(fl, p)
                h = ctx.rem(h)
        d = top
    return out


def roots(f: ModPoly) -> list:
    """Sorted roots of f in F_p (each listed once)."""
    p = f.p
    if f.degree < 1:
        return []
    if p <= 4096:
        fl = list(f.coeffs)
        return [x for x in range(p) if _eval(fl, x, p) == 0]
    fl = _monic(list(f.coeffs), p)
    ctx = _Ctx(fl, p)
    xp = ctx.powmod([0, 1], p)
    diff = list(xp) + [0] * (2 - len(xp))
    diff[1] = (diff[1] - 1) % p
    lin = _gcd(_trim(diff), fl, p)
    found: list = []
    if len(lin) <= 1:
        return found
    seed = p
    for c in lin:
        seed = (seed * 1000003 + c) & ((1 << 63) - 1)
    rng = random.Random(seed)
    stack = [lin]
    while stack:
        g = stack.pop()
        dg = len(g) - 1
        if dg == 1:
            found.append((p - g[0]) % p)
            continue
        gctx = _Ctx(g, p)
        while True:
            a = rng.randrange(p)
            h = gctx.powmod([a, 1], (p - 1) // 2)
            h = list(h) + [0] * (1 - len(h))
            h[0] = (h[0] - 1) % p
            d1 = _gcd(_trim(h), g, p)
            if 0 < len(d1) - 1 < dg:
                stack.append(d1)
                stack.append(_divmod(g, d1, p)[0])
                break
    return sorted(found)


# ---------------------------------------------------------------------------
# certificates bridging back to Z


def coprime_certificate(f: IntPoly, g: IntPoly, bits: int = 31, tries: int = 8,
                        seed: int = 0):
    """A prime p of good reduction with gcd(f, g) = 1 mod p, or None.

    Such a prime proves coprimality over Q: a nonconstant common divisor over
    Z would reduce to a nonconstant common divisor modulo any prime that
    preserves the leading coefficients.  The converse direction is not
    decided here (None just means "no certificate found in `tries` draws").
    """
    if f.is_zero() or g.is_zero():
        return None
    rng = random.Random((seed << 8) ^ 0x9E3779B9)
    for _ in range(tries):
        p = random_prime(bits, rng)
        if f.lc % p == 0 or g.lc % p == 0:
            continue
        if len(_gcd([c % p for c in f.coeffs], [c % p for c in g.coeffs], p)) == 1:
            return p
    return None


def squarefree_certificate(f: IntPoly, bits: int = 31, tries: int = 8, seed: int = 0):
    """A prime p with f squarefree mod p (hence squarefree over Q), or None."""
    if f.degree <= 0:
        return None
    return coprime_certificate(f, f.derivative(), bits=bits, tries=tries, seed=seed)
