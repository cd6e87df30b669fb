"""Exception types shared across the package."""


class StraightKnotError(Exception):
    """Base class for all errors raised by this package."""


class EdgeDegreeError(StraightKnotError):
    """An edge label does not appear exactly twice in a PD code."""


class MultiComponentError(StraightKnotError):
    """The closed-up diagram has more than one component (links are rejected)."""


class NonPlanarError(StraightKnotError):
    """The diagram or Gauss code is not realizable in the plane."""


class InvalidOrientationError(StraightKnotError):
    """No global orientation makes every first PD entry an incoming under-edge."""


class NotPermutationError(StraightKnotError):
    """A straight code's visit sequence is not a permutation of 1..n."""


class CrossingArchesError(StraightKnotError):
    """Two connectors on the same side of the strand touch or interleave."""


class NotAKnotError(StraightKnotError):
    """A braid closure has more than one component."""


class NotAlternatingError(StraightKnotError):
    """A construction required an alternating diagram but did not get one."""


class RegionInvalidError(StraightKnotError):
    """A twist region does not belong to the diagram it was used with."""


class SpecInvalidError(StraightKnotError):
    """Template parameters violate the parity/positivity rules."""


class DomainError(StraightKnotError):
    """Arguments are outside the hypotheses of the requested computation."""


class BudgetExceededError(StraightKnotError):
    """A computation was refused because it exceeds its crossing budget."""


class NonPrimeError(StraightKnotError):
    """The diagram has a 2-edge cut, so cut analysis does not apply."""


class TableError(StraightKnotError):
    """Problem loading or parsing a knot table file."""


class VerificationError(StraightKnotError):
    """A verification driver found a mismatch between two computation routes."""
