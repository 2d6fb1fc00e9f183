"""Exception types shared across the package.

Everything user-triggerable derives from SkewekError so the CLI can map it
to the input-error exit code.  InternalInvariantError marks states the
library promises are impossible; it is never caught.
"""


class SkewekError(ValueError):
    """Base class for rejected inputs and failed preconditions."""


class DimensionError(SkewekError):
    """Exponent vectors of different lengths were combined."""


class LaurentError(SkewekError):
    """A negative exponent appeared where an effective monomial is required."""


class UnitMonomialError(SkewekError):
    """max_index/min_index was asked of the unit monomial."""


class UnitIdealError(SkewekError):
    """The unit monomial appeared among ideal generators."""


class NotInIdealError(SkewekError):
    """A monomial outside the ideal was passed where membership is required."""


class NotStableError(SkewekError):
    """The ideal fails the stable exchange condition.

    witness is a pair (generator, index): multiplying the generator by
    x_index and dividing by its largest variable leaves the ideal.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class SpecializationError(SkewekError):
    """A numeric assignment for the q parameters is missing or invalid."""


class InternalInvariantError(RuntimeError):
    """A structural guarantee of the construction was violated."""
