"""Exception types shared across the package."""


class QuadmodError(Exception):
    """Base class for every package-specific error."""


class NonExactDivision(QuadmodError):
    """A division that was mathematically required to be exact left a remainder.

    This always signals a violated expectation (or bad input), never a
    recoverable condition: callers that hit it must abort.
    """


class NotSquarefree(QuadmodError):
    """Input polynomial has a repeated factor where a squarefree one is required."""


class NotSquarefreeOverQ(QuadmodError):
    """Sieve input is not squarefree over the rationals."""


class ResourceLimit(QuadmodError):
    """Requested computation exceeds the configured degree/size budget."""


class EliminationFailure(QuadmodError):
    """No candidate eliminant passed the exact membership certificate."""


class InternalConsistency(QuadmodError):
    """A built-in mathematical identity failed; indicates an implementation bug."""


class InvalidPeriod(QuadmodError):
    """Period parameter outside the valid range for the requested construction."""


class Unstabilizable(QuadmodError):
    """Fewer than three markings kept; no stable model exists."""


class NotSeparable(QuadmodError):
    """No single edge separates the requested marking subset."""


class MissingCoordinates(QuadmodError):
    """A vertex that needs rational coordinates does not carry them."""


class CorruptCache(QuadmodError):
    """On-disk cache entry failed its checksum."""
