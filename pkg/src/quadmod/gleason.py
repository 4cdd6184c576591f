"""Critical-orbit polynomials and Gleason polynomials of the family z^2 + c.

The n-th critical-orbit polynomial is the n-th iterate of 0 under z^2 + c,
viewed as a polynomial in c: its roots are the parameters where the critical
point 0 has period dividing n.  The Gleason polynomial of period n is the
exact-period factor, realized as an exact quotient

    G_n = orbit_n / prod_{d | n, d < n} G_d .

Every division in that quotient asserts a zero remainder, so the exact-period
stratification is re-proved on every run rather than assumed.  Squarefreeness
and pairwise coprimality are certified through good-reduction primes: a prime
p with gcd(f mod p, g mod p) = 1 proves gcd(f, g) = 1 over Q exactly (the
converse direction falls back to an exact gcd).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ResourceLimit
from .exactalg.intpoly import IntPoly, poly_divrem_exact, poly_gcd
from .exactalg.modpoly import coprime_certificate, squarefree_certificate

#: degree budget: crit_orbit(n) has degree 2^(n-1), so the default admits n <= 16
DEFAULT_COEFF_BUDGET = 1 << 15

VAR = "c"

_orbit_cache: dict = {}
_gleason_cache: dict = {}


@dataclass(frozen=True)
class CritOrbitPoly:
    """f_c^n(0) as an integer polynomial in c; monic of degree 2^(n-1), c | poly."""

    n: int
    poly: IntPoly


@dataclass(frozen=True)
class GleasonPoly:
    """Exact-period-n factor of the critical orbit polynomial; monic, squarefree."""

    n: int
    poly: IntPoly


def proper_divisors(n: int) -> list:
    return [d for d in range(1, n) if n % d == 0]


def gleason_degree(n: int) -> int:
    """Degree of G_n from the recursion d(n) = 2^(n-1) - sum_{d|n, d<n} d(d)."""
    return (1 << (n - 1)) - sum(gleason_degree(d) for d in proper_divisors(n))


def crit_orbit(n: int, max_coeffs: int = DEFAULT_COEFF_BUDGET) -> CritOrbitPoly:
    """The n-th iterate of 0 under z^2 + c, by iterating g -> g^2 + c."""
    if n < 1:
        raise ValueError("period must be >= 1")
    if (1 << (n - 1)) > max_coeffs:
        raise ResourceLimit(
            f"crit_orbit({n}) has degree {1 << (n - 1)}, budget is {max_coeffs}")
    if n in _orbit_cache:
        return _orbit_cache[n]
    # extend from the largest cached iterate
    start = max((k for k in _orbit_cache if k < n), default=0)
    g = _orbit_cache[start].poly if start else IntPoly.zero(VAR)
    c = IntPoly.variable(VAR)
    for k in range(start + 1, n + 1):
        g = g * g + c
        _orbit_cache.setdefault(k, CritOrbitPoly(k, g))
    return _orbit_cache[n]


def gleason(n: int, max_coeffs: int = DEFAULT_COEFF_BUDGET) -> GleasonPoly:
    """The Gleason polynomial G_n as the exact quotient of crit_orbit(n)."""
    if n < 1:
        raise ValueError("period must be >= 1")
    if n in _gleason_cache:
        return _gleason_cache[n]
    q = crit_orbit(n, max_coeffs).poly
    for d in proper_divisors(n):
        q = poly_divrem_exact(q, gleason(d, max_coeffs).poly)
    expected = gleason_degree(n)
    if q.degree != expected or not q.is_monic():
        # cannot happen unless the stratification itself failed
        raise AssertionError(
            f"G_{n}: got degree {q.degree}, expected {expected}, monic={q.is_monic()}")
    out = GleasonPoly(n, q)
    _gleason_cache[n] = out
    return out


def preload_gleason(n: int, poly: IntPoly) -> None:
    """Seed the memo table (used by the CLI cache layer); validated cheaply."""
    if poly.degree == gleason_degree(n) and poly.is_monic():
        _gleason_cache.setdefault(n, GleasonPoly(n, poly))


def clear_caches() -> None:
    _orbit_cache.clear()
    _gleason_cache.clear()


def verify_product_identity(n: int, max_coeffs: int = DEFAULT_COEFF_BUDGET) -> bool:
    """True iff prod_{d | n} G_d equals crit_orbit(n) exactly."""
    prod = IntPoly.const(1, VAR)
    for d in proper_divisors(n) + [n]:
        prod = prod * gleason(d, max_coeffs).poly
    return prod == crit_orbit(n, max_coeffs).poly


@dataclass
class SeparabilityReport:
    """Outcome of the squarefreeness/coprimality battery for G_n."""

    n: int
    squarefree: bool
    squarefree_prime: int | None
    coprime: dict = field(default_factory=dict)       # m -> bool
    coprime_primes: dict = field(default_factory=dict)  # m -> certifying prime
    exact_fallbacks: int = 0

    @property
    def ok(self) -> bool:
        return self.squarefree and all(self.coprime.values())

    def __bool__(self) -> bool:
        return self.ok


def _certified_coprime(f: IntPoly, g: IntPoly, seed: int):
    """(coprime?, certifying prime or None, used_exact_fallback?)."""
    p = coprime_certificate(f, g, seed=seed)
    if p is not None:
        return True, p, False
    # no certificate in the default budget: decide exactly
    return poly_gcd(f, g).degree == 0, None, True


def verify_separability(n: int, others=None,
                        max_coeffs: int = DEFAULT_COEFF_BUDGET) -> SeparabilityReport:
    """Check gcd(G_n, G_n') = 1 and gcd(G_m, G_n) = 1 for the requested m < n.

    `others` defaults to every m < n.  Certification is by good-reduction
    primes; an exact subresultant gcd is the fallback when no certificate
    shows up (which for true Gleason inputs never happens).
    """
    gn = gleason(n, max_coeffs).poly
    p = squarefree_certificate(gn, seed=n)
    fallbacks = 0
    if p is None:
        sq = poly_gcd(gn, gn.derivative()).degree == 0 if gn.degree >= 1 else True
        fallbacks += 1
    else:
        sq = True
    report = SeparabilityReport(n=n, squarefree=sq, squarefree_prime=p)
    for m in (range(1, n) if others is None else others):
        gm = gleason(m, max_coeffs).poly
        ok, cert, fb = _certified_coprime(gm, gn, seed=(n << 8) | m)
        report.coprime[m] = ok
        report.coprime_primes[m] = cert
        fallbacks += fb
    report.exact_fallbacks = fallbacks
    return report
