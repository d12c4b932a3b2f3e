"""Exception types shared across the package.

Validation failures are deliberately split into distinct classes so callers
(and tests) can tell a malformed tour apart from a malformed argument or a
malformed input file.
"""


class InvalidArgumentError(ValueError):
    """An argument is outside the domain of the operation."""


class TourValidationError(ValueError):
    """Base class for tour validation failures."""


class WrongLengthError(TourValidationError):
    """The tour order does not have exactly n entries."""


class DuplicateVertexError(TourValidationError):
    """A vertex appears more than once in the tour order."""


class MissingVertexError(TourValidationError):
    """The tour order is not a permutation of 0..n-1."""


class InvalidMoveError(ValueError):
    """A move does not apply to the given tour."""


class SizeExceededError(ValueError):
    """The instance is larger than the solver's hard limit."""


class ParseError(ValueError):
    """An instance or tour file is malformed."""


class ConstructionError(RuntimeError):
    """An instance generator failed its own cost self-check."""
