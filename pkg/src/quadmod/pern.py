"""Plane models of the curves of quadratic rational maps with an n-periodic
marked critical point.

The working family is f(z) = (z^2 + p)/(z^2 + q), whose critical points sit
at 0 and infinity.  Writing the orbit of 0 as N_k/D_k gives the recursion

    N_0 = 0, D_0 = 1,   N_{k+1} = N_k^2 + p D_k^2,   D_{k+1} = N_k^2 + q D_k^2,

so N_n vanishes exactly where the critical orbit returns at step n.  The
exact-period locus (`exact_period_locus`) is the quotient of N_n by the
lower-period loci, with a zero-remainder proof at every division.

Moduli coordinates are the first two elementary symmetric functions (s1, s2)
of the three fixed-point multipliers, computed by resultant elimination from
the fixed-point cubic F(z) = z^3 - z^2 + qz - p; the third satisfies
s3 = s1 - 2 identically, re-verified at construction.  `plane_model`
eliminates (p, q): p is solved from the s1 relation (it enters linearly),
q falls to a subresultant resultant, and the eliminant is stripped of
vertical components and s2-multiplicities.  The survivor must pass an exact
membership certificate -- its pullback through (s1, s2) is divisible by the
period locus -- before it is accepted; finite-field sampling of the locus
double-checks the bookkeeping.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (EliminationFailure, InternalConsistency, InvalidPeriod,
                     NonExactDivision, ResourceLimit)
from .exactalg.intpoly import (IntPoly, poly_divrem_exact, poly_gcd,
                               rational_roots_hensel, squarefree_part)
from .exactalg.modpoly import ModPoly, roots as mod_roots
from .exactalg.mpoly import MPoly, MPolyRing, PolyRing, bipoly_divexact
from .exactalg.primes import random_prime
from .exactalg.upoly import up_gcd, up_resultant
from .gleason import gleason

PQ = ("p", "q")
SS = ("s1", "s2")

#: degree budgets: the family doubles in degree each step
DEFAULT_FAMILY_BUDGET = 6
DEFAULT_PLANE_BUDGET = 5

_family_cache: dict = {}
_gamma_cache: dict = {}
_model_cache: dict = {}
_sigma_cache: list = []


@dataclass(frozen=True)
class FamilyOrbit:
    """Numerator/denominator of the n-th orbit point of 0 in the family."""

    n: int
    num: MPoly
    den: MPoly
    stripped: tuple  # integer content removed from the pair at each step


@dataclass(frozen=True)
class MultiplierSymmetrics:
    """Elementary symmetric functions of the fixed-point multipliers, as
    reduced fractions (numerator, denominator) of polynomials in (p, q)."""

    s1: tuple
    s2: tuple
    s3: tuple


@dataclass
class CurveVerification:
    gamma_divides_orbit: bool = False
    membership_certified: bool = False
    fallback_used: bool = False
    sample_points: int = 0
    sample_hits: int = 0
    eliminant_degree: tuple = (0, 0)   # (deg s1, deg s2) before stripping
    stripped_multiplicity: bool = False


@dataclass
class CurveModel:
    n: int
    gamma: MPoly      # exact-period locus in (p, q)
    pmodel: MPoly     # plane model in (s1, s2), primitive, positive leading
    verification: CurveVerification = field(default_factory=CurveVerification)


def clear_caches() -> None:
    _family_cache.clear()
    _gamma_cache.clear()
    _model_cache.clear()
    _sigma_cache.clear()


def family_orbit(n: int, budget: int = DEFAULT_FAMILY_BUDGET) -> FamilyOrbit:
    """Exact (N_n, D_n) of the orbit recursion, with shared integer content
    of the pair stripped (and recorded) at each step."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > budget:
        raise ResourceLimit(f"family_orbit({n}) exceeds budget {budget}")
    if n in _family_cache:
        return _family_cache[n]
    start = max((k for k in _family_cache if k < n), default=0)
    if start:
        prev = _family_cache[start]
        num, den, stripped = prev.num, prev.den, list(prev.stripped)
    else:
        num, den, stripped = MPoly.zero(PQ), MPoly.const(PQ, 1), []
    pvar = MPoly.variable(PQ, "p")
    qvar = MPoly.variable(PQ, "q")
    for k in range(start + 1, n + 1):
        nsq = num * num
        dsq = den * den
        num = nsq + pvar * dsq
        den = nsq + qvar * dsq
        g = math.gcd(num.content(), den.content())
        if g > 1:
            num = num.divexact(MPoly.const(PQ, g))
            den = den.divexact(MPoly.const(PQ, g))
        stripped.append(g)
        _family_cache.setdefault(k, FamilyOrbit(k, num, den, tuple(stripped)))
    return _family_cache[n]


def exact_period_locus(n: int, budget: int = DEFAULT_FAMILY_BUDGET) -> MPoly:
    """The exact-period-n locus: N_n divided by every lower-period locus.

    Every division asserts a zero remainder; NonExactDivision propagates with
    the offending divisor named (the caller may then fall back to N_n)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n in _gamma_cache:
        return _gamma_cache[n]
    g = family_orbit(n, budget).num
    for d in range(1, n):
        if n % d:
            continue
        gd = exact_period_locus(d, budget)
        try:
            g = bipoly_divexact(g, gd, "p")
        except NonExactDivision as exc:
            raise NonExactDivision(
                f"period-{d} locus does not divide the step-{n} numerator") from exc
    out = g.primitive_part()
    _gamma_cache[n] = out
    return out


# ---------------------------------------------------------------------------
# multiplier symmetric functions


def _reduce_fraction(num: MPoly, den: MPoly, factor: MPoly):
    """Cancel as many copies of `factor` (plus integer content) as possible."""
    while True:
        try:
            n2 = num.divexact(factor)
            d2 = den.divexact(factor)
        except NonExactDivision:
            break
        num, den = n2, d2
    g = math.gcd(num.content(), den.content())
    if den.leading()[1] < 0:
        g = -g
    if g not in (0, 1):
        num = num.divexact(MPoly.const(num.vars, g))
        den = den.divexact(MPoly.const(den.vars, g))
    return num, den


def multiplier_symmetrics() -> MultiplierSymmetrics:
    """sigma_1, sigma_2, sigma_3 of the fixed-point multipliers of the family.

    From the fixed-point cubic F(z) = z^3 - z^2 + qz - p and the multiplier
    function 2z(q - p)/(z^2 + q)^2, the characteristic polynomial of the
    multiplier triple is

        chi(T) = Res_z(F, T (z^2+q)^2 - 2(q-p) z) / Res_z(F, z^2+q)^2

    and the symmetric functions are read off chi(T) = T^3 - s1 T^2 + s2 T - s3.
    The identity s3 = s1 - 2 is verified exactly before returning."""
    if _sigma_cache:
        return _sigma_cache[0]
    vt = ("p", "q", "T")
    one = MPoly.const(vt, 1)
    p = MPoly.variable(vt, "p")
    q = MPoly.variable(vt, "q")
    t = MPoly.variable(vt, "T")
    zero = MPoly.zero(vt)
    ring = MPolyRing(vt)
    f_cubic = [-p, q, -one, one]                                # z^3 - z^2 + qz - p
    w = [t * q * q, -2 * (q - p), 2 * q * t, zero, t]           # T(z^2+q)^2 - 2(q-p)z
    chi_num = up_resultant(f_cubic, w, ring)
    b = up_resultant(f_cubic, [q, zero, one], ring)             # Res_z(F, z^2+q)
    b_pq = MPoly(PQ, {e[:2]: c for e, c in b.terms.items()})
    den = b_pq * b_pq

    coeffs = chi_num.as_univariate("T")                         # coeffs in (p, q)
    if len(coeffs) != 4:
        raise InternalConsistency("multiplier polynomial is not cubic in T")
    n0, n1, n2, n3 = coeffs
    if n3 != den:
        raise InternalConsistency("multiplier leading coefficient != denominator")
    # chi = T^3 - s1 T^2 + s2 T - s3; Milnor relation cleared: n2 - n0 + 2 den = 0
    if n2 - n0 + 2 * den != MPoly.zero(PQ):
        raise InternalConsistency("multiplier relation s3 = s1 - 2 failed")
    qp = MPoly.variable(PQ, "q") - MPoly.variable(PQ, "p")
    sig = MultiplierSymmetrics(
        s1=_reduce_fraction(-n2, den, qp),
        s2=_reduce_fraction(n1, den, qp),
        s3=_reduce_fraction(-n0, den, qp),
    )
    _sigma_cache.append(sig)
    return sig


# ---------------------------------------------------------------------------
# elimination to the (s1, s2) plane


def _solve_p_linear(sig: MultiplierSymmetrics):
    """Split s1*E1(p,q) - A1(p,q) = 0, linear in p, into p*Lp + L0 = 0.

    Returns (Lp, L0) as MPoly in (q, s1)."""
    a1, e1 = sig.s1
    qs = ("q", "s1")
    lp = MPoly.zero(qs)
    l0 = MPoly.zero(qs)
    for (i, j), c in e1.terms.items():          # contributes s1 * p^i q^j
        if i > 1:
            raise InternalConsistency("s1 relation is not linear in p")
        term = MPoly(qs, {(j, 1): c})
        lp, l0 = (lp + term, l0) if i == 1 else (lp, l0 + term)
    for (i, j), c in a1.terms.items():          # contributes -p^i q^j
        if i > 1:
            raise InternalConsistency("s1 relation is not linear in p")
        term = MPoly(qs, {(j, 0): c})
        lp, l0 = (lp - term, l0) if i == 1 else (lp, l0 - term)
    if lp.is_zero():
        raise InternalConsistency("coefficient of p in the s1 relation vanishes")
    return lp, l0


def _powers(base: MPoly, upto: int) -> list:
    out = [MPoly.const(base.vars, 1)]
    for _ in range(upto):
        out.append(out[-1] * base)
    return out


def _subst_linear_p(f: MPoly, neg_l0_pows: list, lp_pows: list, clear_to: int) -> MPoly:
    """f(p, q) with p := -L0/Lp, cleared by Lp**clear_to; result in (q, s1)."""
    qs = ("q", "s1")
    by_i: dict = {}
    for (i, j), c in f.terms.items():
        by_i.setdefault(i, {})[(j, 0)] = c
    acc = MPoly.zero(qs)
    for i, terms in by_i.items():
        acc = acc + MPoly(qs, terms) * neg_l0_pows[i] * lp_pows[clear_to - i]
    return acc


def _strip_main_power(u: MPoly, main: str) -> MPoly:
    """Divide out the largest common power of `main` (q = 0 junk)."""
    if u.is_zero():
        return u
    idx = u.vars.index(main)
    kmin = min(e[idx] for e in u.terms)
    if not kmin:
        return u
    return MPoly(u.vars, {tuple(x - kmin if i == idx else x for i, x in enumerate(e)): c
                          for e, c in u.terms.items()})


def _coeff_content(coeffs: list):
    """Gcd of a list of IntPoly coefficients (None when all zero)."""
    cont = None
    for c in coeffs:
        if c.is_zero():
            continue
        cont = c.primitive_part() if cont is None else poly_gcd(cont, c)
        if cont.degree == 0 and cont.lc == 1:
            break
    return cont


def _strip_parameter_content(u: MPoly, main: str, other: str) -> MPoly:
    """Remove the common IntPoly factor of the `main`-direction coefficients."""
    coeffs = [c.as_intpoly(other) for c in u.as_univariate(main)]
    cont = _coeff_content(coeffs)
    if cont is None or (cont.degree == 0 and abs(cont.lc) == 1):
        return u.primitive_part()
    ring = PolyRing(other)
    coeffs = [ring.divexact(c, cont) if not c.is_zero() else c for c in coeffs]
    return MPoly.from_univariate(
        [MPoly.from_intpoly(c, (other,), other) for c in coeffs], main,
        u.vars).primitive_part()


def _strip_eliminant(r: MPoly) -> tuple:
    """Remove the s2-content (vertical components) and s2-multiplicities.

    Returns (stripped model, had_multiplicity)."""
    if r.degree_in("s2") < 1:
        raise EliminationFailure("eliminant has no s2 dependence")
    r = _strip_parameter_content(r, "s2", "s1")
    ring = PolyRing("s1")
    a = [c.as_intpoly("s1") for c in r.as_univariate("s2")]
    da = [c * k for k, c in enumerate(a)][1:]
    g = up_gcd(a, da, ring)
    had_mult = len(g) > 1
    if had_mult:
        gm = MPoly.from_univariate(
            [MPoly.from_intpoly(c, ("s1",), "s1") for c in g], "s2", SS)
        r = bipoly_divexact(r, gm, "s2")
        r = _strip_parameter_content(r, "s2", "s1")
    return r.primitive_part(), had_mult


def _compose_numerator(pm: MPoly, a1: MPoly, e1: MPoly, a2: MPoly, e2: MPoly) -> MPoly:
    """Numerator of pm(s1 <- a1/e1, s2 <- a2/e2) cleared to the full bidegree:
    sum of c_ij a1^i e1^(d1-i) a2^j e2^(d2-j), by double Horner."""
    d1 = pm.degree_in("s1")
    d2 = pm.degree_in("s2")
    e1_pows = _powers(e1, d1)
    e2_pows = _powers(e2, d2)
    rows: dict = {}
    for (i, j), c in pm.terms.items():
        rows.setdefault(j, {})[i] = c

    def row_value(row: dict) -> MPoly:
        acc = MPoly.zero(PQ)
        for i in range(d1, -1, -1):
            acc = acc * a1
            if i in row:
                acc = acc + row[i] * e1_pows[d1 - i]
        return acc

    out = MPoly.zero(PQ)
    for j in range(d2, -1, -1):
        out = out * a2
        if j in rows:
            out = out + row_value(rows[j]) * e2_pows[d2 - j]
    return out


def _sample_membership(gamma: MPoly, pm: MPoly, sig: MultiplierSymmetrics,
                       n: int, want: int = 120, prime_bits: int = 59,
                       n_primes: int = 3) -> tuple:
    """Evaluate the plane model at finite-field points of the period locus,
    over several word-sized prime fields.

    Returns (samples, hits).  The exact certificate is the proof; this guards
    the surrounding bookkeeping."""
    a1, e1 = sig.s1
    a2, e2 = sig.s2
    rng = random.Random(0xC0FFEE ^ n)
    gamma_q = gamma.as_univariate("q")  # coefficients MPoly in ("p",)
    per_prime = -(-want // n_primes)
    samples = hits = 0
    for _ in range(n_primes):
        big = random_prime(prime_bits, rng)
        got = 0
        attempts = 0
        while got < per_prime and attempts < 50 * per_prime:
            attempts += 1
            pv = rng.randrange(big)
            fiber = ModPoly([c.eval_mod({"p": pv}, big) for c in gamma_q], big)
            if fiber.degree < 1:
                continue
            for qv in mod_roots(fiber):
                pt = {"p": pv, "q": qv}
                e1v = e1.eval_mod(pt, big)
                e2v = e2.eval_mod(pt, big)
                if not e1v or not e2v:
                    continue
                got += 1
                samples += 1
                s1v = a1.eval_mod(pt, big) * pow(e1v, big - 2, big) % big
                s2v = a2.eval_mod(pt, big) * pow(e2v, big - 2, big) % big
                if pm.eval_mod({"s1": s1v, "s2": s2v}, big) == 0:
                    hits += 1
                if got >= per_prime:
                    break
    return samples, hits


def plane_model(n: int, budget: int = DEFAULT_PLANE_BUDGET) -> CurveModel:
    """Eliminate (p, q) from the exact-period locus and the moduli relations.

    The result is primitive with positive graded-lex leading coefficient,
    free of vertical components and s2-multiplicities, and certified by exact
    divisibility of its pullback by the period locus."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > budget:
        raise ResourceLimit(f"plane_model({n}) exceeds budget {budget}")
    if n in _model_cache:
        return _model_cache[n]
    sig = multiplier_symmetrics()
    a1, e1 = sig.s1
    a2, e2 = sig.s2
    ver = CurveVerification()

    try:
        gamma = exact_period_locus(n)
    except NonExactDivision:
        gamma = family_orbit(n).num.primitive_part()
        ver.fallback_used = True
    ver.gamma_divides_orbit = gamma.divides(family_orbit(n).num)

    if n == 1:
        # the locus is p = 0, where s1 is identically 2 and s2 is free
        pm = MPoly(SS, {(1, 0): 1, (0, 0): -2})
        bipoly_divexact(a1 - 2 * e1, gamma, "p")  # certificate for s1 - 2
        ver.membership_certified = True
        ver.sample_points, ver.sample_hits = _sample_membership(gamma, pm, sig, n)
        model = CurveModel(n, gamma, pm, ver)
        _model_cache[n] = model
        return model

    lp, l0 = _solve_p_linear(sig)
    dmax = max(gamma.degree_in("p"), a2.degree_in("p"), e2.degree_in("p"))
    neg_l0_pows = _powers(-l0, dmax)
    lp_pows = _powers(lp, dmax)

    u = _subst_linear_p(gamma, neg_l0_pows, lp_pows, gamma.degree_in("p"))
    u = _strip_parameter_content(_strip_main_power(u, "q"), "q", "s1")

    clear = max(a2.degree_in("p"), e2.degree_in("p"))
    a2c = _subst_linear_p(a2, neg_l0_pows, lp_pows, clear)
    e2c = _subst_linear_p(e2, neg_l0_pows, lp_pows, clear)
    qss = ("q", "s1", "s2")
    v = (MPoly.variable(qss, "s2") * MPoly(qss, {e + (0,): c for e, c in e2c.terms.items()})
         - MPoly(qss, {e + (0,): c for e, c in a2c.terms.items()}))
    v = _strip_main_power(v, "q").primitive_part()

    ring = MPolyRing(SS)
    u_up = [MPoly(SS, {(e[0], 0): c for e, c in cf.terms.items()})
            for cf in u.as_univariate("q")]
    v_up = [MPoly(SS, {(e[0], e[1]): c for e, c in cf.terms.items()})
            for cf in v.as_univariate("q")]
    elim = up_resultant(u_up, v_up, ring)
    if elim.is_zero():
        raise EliminationFailure(f"resultant vanished identically at n={n}")
    ver.eliminant_degree = (elim.degree_in("s1"), elim.degree_in("s2"))

    pm, had_mult = _strip_eliminant(elim)
    ver.stripped_multiplicity = had_mult
    if ver.fallback_used:
        for d in range(1, n):
            if n % d == 0:
                pm = _remove_common_factor(pm, plane_model(d, budget).pmodel)
        pm = pm.primitive_part()

    comp = _compose_numerator(pm, a1, e1, a2, e2)
    try:
        bipoly_divexact(comp, gamma, "p")
        ver.membership_certified = True
    except NonExactDivision as exc:
        raise EliminationFailure(
            f"membership certificate failed at n={n}: {exc}") from exc

    samples, hits = _sample_membership(gamma, pm, sig, n)
    ver.sample_points, ver.sample_hits = samples, hits
    if samples and hits < 0.99 * samples:
        raise EliminationFailure(f"sampling check failed at n={n}: {hits}/{samples}")

    model = CurveModel(n, gamma, pm, ver)
    _model_cache[n] = model
    return model


def _remove_common_factor(pm: MPoly, other: MPoly) -> MPoly:
    """Divide out gcd(pm, other) in the s2-direction (fallback path only)."""
    ring = PolyRing("s1")
    a = [c.as_intpoly("s1") for c in pm.as_univariate("s2")]
    b = [c.as_intpoly("s1") for c in other.as_univariate("s2")]
    g = up_gcd(a, b, ring)
    if len(g) <= 1:
        return pm
    gm = MPoly.from_univariate(
        [MPoly.from_intpoly(c, ("s1",), "s1") for c in g], "s2", SS)
    while True:
        try:
            pm = bipoly_divexact(pm, gm, "s2")
        except NonExactDivision:
            return pm


# ---------------------------------------------------------------------------
# restriction to the polynomial line and rational points


def restrict_to_per1(pm: MPoly) -> IntPoly:
    """pm(2, 4c) as an integer polynomial in c.

    The line of polynomial maps is (s1, s2) = (2, 4c): for z^2 + c the finite
    fixed points satisfy z^2 - z + c = 0 with multipliers 2z (plus 0 at the
    fixed critical point), so s1 = 2(z1 + z2) = 2 and s2 = 4 z1 z2 = 4c."""
    deg = pm.degree_in("s2")
    coeffs = [0] * (deg + 1)
    for (i, j), c in pm.terms.items():
        coeffs[j] += c * (1 << i) * (1 << (2 * j))
    return IntPoly(coeffs, "c")


@dataclass
class RestrictionReport:
    n: int
    match: bool
    multiplicity: int
    restriction: IntPoly
    expected: IntPoly

    def __bool__(self):
        return self.match


def restriction_check(n: int) -> RestrictionReport:
    """Does the squarefree part of pm(2, 4c) equal G_n up to a scalar?"""
    if n < 2:
        raise InvalidPeriod("restriction to the polynomial line needs n >= 2")
    model = plane_model(n)
    r = restrict_to_per1(model.pmodel)
    gn = gleason(n).poly
    if r.is_zero() or r.degree == 0:
        return RestrictionReport(n, False, 0, r, gn)
    s = squarefree_part(r)
    match = s == gn  # both primitive with positive lc: equality == proportionality
    mult = 0
    t = r.primitive_part()
    while t.degree >= gn.degree:
        try:
            t = poly_divrem_exact(t, gn)
            mult += 1
        except NonExactDivision:
            break
    return RestrictionReport(n, match, mult, r, gn)


def component_meets_per1(n: int) -> bool:
    """True iff the restriction pm(2, 4c) is neither identically zero nor a
    nonzero constant (the model genuinely meets the polynomial line)."""
    model = plane_model(n)
    r = restrict_to_per1(model.pmodel)
    return (not r.is_zero()) and r.degree >= 1


def fractions_up_to_height(height: int):
    """All rationals of height <= height: ascending height, ties by
    (numerator, denominator)."""
    for h in range(1, height + 1):
        batch = []
        for a in range(-h, h + 1):
            for b in range(1, h + 1):
                if max(abs(a), b) == h and math.gcd(abs(a), b) == 1:
                    batch.append(Fraction(a, b))
        batch.sort(key=lambda f: (f.numerator, f.denominator))
        yield from batch


def rational_point_search(model, height: int) -> list:
    """All rational points (s1, s2) on the model with height(s1) <= height.

    s1 sweeps every rational of bounded height; the s2-roots of each fiber
    polynomial are found exactly and re-substituted as a final check.  When a
    fiber polynomial vanishes identically (a vertical line on the model),
    every s2 of height <= `height` is emitted for that s1."""
    if height < 1:
        raise ValueError("height bound must be >= 1")
    pm = model.pmodel if isinstance(model, CurveModel) else model
    if pm.vars != SS:
        pm = pm.rename({pm.vars[0]: "s1", pm.vars[1]: "s2"})
    coeffs = [c.as_intpoly("s1") for c in pm.as_univariate("s2")]
    dmax = max((c.degree for c in coeffs if not c.is_zero()), default=0)
    points = []
    for s1 in fractions_up_to_height(height):
        a, b = s1.numerator, s1.denominator
        apow = [1]
        bpow = [1]
        for _ in range(dmax):
            apow.append(apow[-1] * a)
            bpow.append(bpow[-1] * b)
        vals = []
        for c in coeffs:
            acc = 0
            for i, ci in enumerate(c.coeffs):
                if ci:
                    acc += ci * apow[i] * bpow[dmax - i]
            vals.append(acc)
        fiber = IntPoly(vals, "s2")
        if fiber.is_zero():
            points.extend((s1, s2) for s2 in fractions_up_to_height(height))
        elif fiber.degree >= 1:
            points.extend((s1, s2) for s2 in rational_roots_hensel(fiber))
    for s1, s2 in points:
        if pm.evaluate({"s1": s1, "s2": s2}) != 0:
            raise InternalConsistency(f"emitted point ({s1}, {s2}) is off the curve")
    return points
