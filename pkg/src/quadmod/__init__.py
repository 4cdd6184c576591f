"""quadmod: exact-arithmetic toolkit for quadratic maps with a periodic
critical point.

Subpackages and modules:

* ``exactalg`` -- integer/mod-p/multivariate polynomial arithmetic,
  resultants, distinct-degree factorization;
* ``gleason`` -- critical-orbit polynomials and Gleason polynomials of
  z^2 + c, with built-in product-identity and separability checks;
* ``irred`` -- irreducibility certification over Q by the mod-p
  degree-pattern sieve;
* ``pern`` -- plane models of the curves of quadratic rational maps whose
  marked critical point is n-periodic, restriction checks against the
  Gleason polynomials, and bounded-height rational point search;
* ``covers`` / ``trees`` -- stable marked trees, degree-2 admissible tree
  covers, and the node-smoothing verdicts for the boundary point they
  certify;
* ``cli`` -- reproducible command-line runs with JSON reports and an
  on-disk cache.
"""

__version__ = "0.1.0"
