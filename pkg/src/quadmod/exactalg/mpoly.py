"""Sparse multivariate polynomials over the integers.

An `MPoly` stores an ordered tuple of variable names and a dict mapping
exponent tuples to nonzero integer coefficients.  The two-variable case
carries the curve models (family coordinates (p, q) and Milnor coordinates
(s1, s2)); three variables appear transiently while eliminating the
multiplier variable.

Term order everywhere is graded lexicographic: compare total degree first,
then the exponent tuple.  Exact division keeps a lazy max-heap of the
remainder's exponents, so dividing a dense composite by a curve equation
does not rescan the whole remainder per step.
"""

from __future__ import annotations

import heapq
import math
from fractions import Fraction

from ..errors import NonExactDivision
from .intpoly import IntPoly


def _gl_key(e):
    return (sum(e), e)


class MPoly:
    """Immutable sparse polynomial over Z in named variables."""

    __slots__ = ("vars", "terms")

    def __init__(self, vars, terms=()):
        vs = tuple(vars)
        t = dict(terms)
        clean = {}
        for e, c in t.items():
            if not isinstance(c, int):
                raise TypeError("MPoly coefficients must be ints")
            e = tuple(int(x) for x in e)
            if len(e) != len(vs) or any(x < 0 for x in e):
                raise ValueError("bad exponent tuple %r" % (e,))
            if c:
                clean[e] = clean.get(e, 0) + c
        clean = {e: c for e, c in clean.items() if c}
        object.__setattr__(self, "vars", vs)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, *a):
        raise AttributeError("MPoly is immutable")

    @classmethod
    def _raw(cls, vars, terms: dict) -> "MPoly":
        p = object.__new__(cls)
        object.__setattr__(p, "vars", vars)
        object.__setattr__(p, "terms", terms)
        return p

    @classmethod
    def zero(cls, vars) -> "MPoly":
        return cls._raw(tuple(vars), {})

    @classmethod
    def const(cls, vars, c: int) -> "MPoly":
        vs = tuple(vars)
        return cls._raw(vs, {(0,) * len(vs): c} if c else {})

    @classmethod
    def variable(cls, vars, name: str) -> "MPoly":
        vs = tuple(vars)
        e = [0] * len(vs)
        e[vs.index(name)] = 1
        return cls._raw(vs, {tuple(e): 1})

    @classmethod
    def from_intpoly(cls, f: IntPoly, vars, name: str) -> "MPoly":
        """Embed a univariate polynomial as an MPoly in a larger variable set."""
        vs = tuple(vars)
        i = vs.index(name)
        terms = {}
        for k, c in enumerate(f.coeffs):
            if c:
                e = [0] * len(vs)
                e[i] = k
                terms[tuple(e)] = c
        return cls._raw(vs, terms)

    # -- structure

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.terms == MPoly.const(self.vars, other).terms
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, name: str) -> int:
        i = self.vars.index(name)
        return max((e[i] for e in self.terms), default=-1)

    def num_terms(self) -> int:
        return len(self.terms)

    def leading(self):
        """(exponent, coefficient) of the graded-lex leading term."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=_gl_key)
        return e, self.terms[e]

    def sorted_terms(self) -> list:
        """Terms as (exponent, coeff), graded-lex descending; canonical output order."""
        return sorted(self.terms.items(), key=lambda t: _gl_key(t[0]), reverse=True)

    # -- arithmetic

    def _check(self, other):
        if self.vars != other.vars:
            raise ValueError("mixed variable sets %r vs %r" % (self.vars, other.vars))

    def __add__(self, other):
        if isinstance(other, int):
            other = MPoly.const(self.vars, other)
        if not isinstance(other, MPoly):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return MPoly._raw(self.vars, out)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = MPoly.const(self.vars, other)
        if not isinstance(other, MPoly):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) - c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return MPoly._raw(self.vars, out)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return MPoly._raw(self.vars, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return MPoly.zero(self.vars)
            return MPoly._raw(self.vars, {e: c * other for e, c in self.terms.items()})
        if not isinstance(other, MPoly):
            return NotImplemented
        self._check(other)
        out: dict = {}
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                v = out.get(e, 0) + ca * cb
                if v:
                    out[e] = v
                else:
                    del out[e]
        return MPoly._raw(self.vars, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        out = MPoly.const(self.vars, 1)
        base = self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def divexact(self, g: "MPoly") -> "MPoly":
        """Exact quotient self / g in Z[vars]; NonExactDivision if g does not divide."""
        if not isinstance(g, MPoly):
            g = MPoly.const(self.vars, g)
        self._check(g)
        if g.is_zero():
            raise NonExactDivision("division by the zero polynomial")
        if self.is_zero():
            return MPoly.zero(self.vars)
        ge, gc = g.leading()
        gt = list(g.terms.items())
        r = dict(self.terms)
        # heap keys: negated (total, exponents) so heapq pops the graded-lex max
        heap = [(-sum(e), tuple(-x for x in e)) for e in r]
        heapq.heapify(heap)
        q: dict = {}
        while r:
            while heap:
                nt, ne = heap[0]
                e = tuple(-x for x in ne)
                if e in r:
                    break
                heapq.heappop(heap)
            c = r[e]
            diff = tuple(x - y for x, y in zip(e, ge))
            if any(x < 0 for x in diff):
                raise NonExactDivision("leading monomial not divisible")
            qc, rem = divmod(c, gc)
            if rem:
                raise NonExactDivision("leading coefficient not divisible")
            q[diff] = qc
            for et, ct in gt:
                ee = tuple(x + y for x, y in zip(diff, et))
                v = r.get(ee, 0) - qc * ct
                if v:
                    if ee not in r:
                        heapq.heappush(heap, (-sum(ee), tuple(-x for x in ee)))
                    r[ee] = v
                else:
                    r.pop(ee, None)
        return MPoly._raw(self.vars, q)

    def divides(self, other: "MPoly") -> bool:
        try:
            other.divexact(self)
            return True
        except NonExactDivision:
            return False

    # -- content and normalization

    def content(self) -> int:
        g = 0
        for c in self.terms.values():
            g = math.gcd(g, c)
            if g == 1:
                break
        return g

    def primitive_part(self) -> "MPoly":
        """Divide out the integer content; graded-lex leading coefficient positive."""
        if not self.terms:
            return self
        g = self.content()
        if self.leading()[1] < 0:
            g = -g
        return MPoly._raw(self.vars, {e: c // g for e, c in self.terms.items()})

    # -- calculus and evaluation

    def derivative(self, name: str) -> "MPoly":
        i = self.vars.index(name)
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                ee = list(e)
                ee[i] -= 1
                out[tuple(ee)] = c * e[i]
        return MPoly._raw(self.vars, out)

    def evaluate(self, assignment: dict):
        """Full evaluation; exact over int or Fraction inputs."""
        vals = [assignment[v] for v in self.vars]
        acc = Fraction(0) if any(isinstance(v, Fraction) for v in vals) else 0
        for e, c in self.terms.items():
            t = c
            for x, k in zip(vals, e):
                if k:
                    t = t * x ** k
            acc = acc + t
        return acc

    def eval_mod(self, assignment: dict, p: int) -> int:
        vals = [assignment[v] % p for v in self.vars]
        acc = 0
        for e, c in self.terms.items():
            t = c % p
            for x, k in zip(vals, e):
                if k:
                    t = t * pow(x, k, p) % p
            acc = (acc + t) % p
        return acc

    # -- univariate views

    def as_univariate(self, name: str):
        """Coefficient list in `name`: entry k is an MPoly in the other variables."""
        i = self.vars.index(name)
        rest = tuple(v for v in self.vars if v != name)
        deg = self.degree_in(name)
        out = [dict() for _ in range(deg + 1)] if deg >= 0 else []
        for e, c in self.terms.items():
            re = tuple(x for j, x in enumerate(e) if j != i)
            out[e[i]][re] = c
        coeffs = [MPoly._raw(rest, d) for d in out]
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        return coeffs

    @classmethod
    def from_univariate(cls, coeffs, name: str, vars) -> "MPoly":
        """Rebuild from a coefficient list in `name` (entries MPoly in the rest)."""
        vs = tuple(vars)
        i = vs.index(name)
        terms: dict = {}
        for k, coef in enumerate(coeffs):
            if coef.is_zero():
                continue
            for re, c in coef.terms.items():
                e = list(re[:i]) + [k] + list(re[i:])
                terms[tuple(e)] = c
        return cls._raw(vs, terms)

    def as_intpoly(self, name: str) -> IntPoly:
        """Collapse to a univariate IntPoly; every other variable must be absent."""
        i = self.vars.index(name)
        deg = self.degree_in(name)
        coeffs = [0] * (deg + 1)
        for e, c in self.terms.items():
            if any(x for j, x in enumerate(e) if j != i):
                raise ValueError("polynomial is not univariate in %s" % name)
            coeffs[e[i]] = c
        return IntPoly(coeffs, var=name)

    def rename(self, mapping: dict) -> "MPoly":
        return MPoly._raw(tuple(mapping.get(v, v) for v in self.vars), dict(self.terms))

    def __repr__(self):
        if not self.terms:
            return "MPoly(0)"
        bits = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                f"{v}^{k}" if k > 1 else v for v, k in zip(self.vars, e) if k
            )
            if mono:
                bits.append(f"{c}*{mono}" if abs(c) != 1 else ("-" + mono if c < 0 else mono))
            else:
                bits.append(str(c))
        return "MPoly(" + " + ".join(bits).replace("+ -", "- ") + ")"


class PolyRing:
    """Ring adapter with IntPoly elements (one named variable)."""

    def __init__(self, var: str):
        self.var = var
        self.zero = IntPoly.zero(var)
        self.one = IntPoly.const(1, var)

    @staticmethod
    def is_zero(a):
        return a.is_zero()

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
        from .intpoly import poly_divrem_exact

        if b.degree == 0:
            c = b.coeffs[0]
            out = []
            for v in a.coeffs:
                q, r = divmod(v, c)
                if r:
                    raise NonExactDivision("inexact constant division")
                out.append(q)
            return IntPoly(out, a.var)
        return poly_divrem_exact(a, b)

    @staticmethod
    def gcd(a, b):
        from .intpoly import poly_gcd

        return poly_gcd(a, b)

    @staticmethod
    def is_unit_normal(a):
        return a.lc > 0


class MPolyRing:
    """Ring adapter with MPoly elements over a fixed variable tuple."""

    def __init__(self, vars):
        self.vars = tuple(vars)
        self.zero = MPoly.zero(self.vars)
        self.one = MPoly.const(self.vars, 1)

    @staticmethod
    def is_zero(a):
        return a.is_zero()

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
        return a.divexact(b)

    @staticmethod
    def is_unit_normal(a):
        return a.leading()[1] > 0


def bipoly_divexact(num: MPoly, den: MPoly, main: str) -> MPoly:
    """Exact division of multivariate polynomials via pseudo-division in `main`.

    Pseudo-divide num by den viewing both as univariate in `main` with
    polynomial coefficients, require a zero pseudo-remainder, then strip the
    accumulated lc(den)^e scaling from the quotient coefficient by
    coefficient.  Raises NonExactDivision when den does not divide num.
    """
    from .upoly import up_pseudo_divrem

    if den.is_zero():
        raise NonExactDivision("division by zero polynomial")
    if num.is_zero():
        return MPoly.zero(num.vars)
    rest = tuple(v for v in num.vars if v != main)
    ring = MPolyRing(rest)
    a = num.as_univariate(main)
    b = den.as_univariate(main)
    if len(b) == 1:
        # divisor is free of the main variable: divide coefficientwise
        q = [c.divexact(b[0]) for c in a]
        return MPoly.from_univariate(q, main, num.vars)
    q, r, e = up_pseudo_divrem(a, b, ring)
    if r:
        raise NonExactDivision("nonzero pseudo-remainder")
    if e:
        scale = b[-1] ** e
        q = [c.divexact(scale) for c in q]
    return MPoly.from_univariate(q, main, num.vars)
