"""Exception types shared across the package."""


class BisymwaveError(Exception):
    """Base class for all package-specific errors."""


class ConstructionInconsistent(BisymwaveError):
    """A closed-form filter construction failed its own residual check."""


class InvalidBranch(BisymwaveError, ValueError):
    """Parameters select a branch excluded by the family definition."""


class NotSymmetric(BisymwaveError, ValueError):
    """Mask does not satisfy the centro-symmetry (linear-phase) property."""


class WrongSize(BisymwaveError, ValueError):
    """Mask grid has the wrong shape or origin for the requested operation."""


class SupportTooLarge(BisymwaveError, ValueError):
    """Mask support does not fit the transfer-matrix index range."""


class NoConvergence(BisymwaveError, RuntimeError):
    """An iterative solver exceeded its iteration cap."""


class LevelsOutOfRange(BisymwaveError, ValueError):
    """Cascade level outside the supported range."""


class OddDimensions(BisymwaveError, ValueError):
    """Image dimensions must be even for a one-level analysis."""


class DimensionMismatch(BisymwaveError, ValueError):
    """Subband or image dimensions are inconsistent."""


class LemmaViolated(BisymwaveError):
    """An 8x8 moment-sum necessary condition failed."""

    def __init__(self, relation, value):
        self.relation = relation
        self.value = value
        super().__init__(f"necessary condition violated: {relation} (got {value!r})")


class ParseError(BisymwaveError, ValueError):
    """Malformed mask or image file."""
