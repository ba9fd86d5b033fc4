"""Exception hierarchy shared by all modules."""


class Connect4Error(Exception):
    """Base class for every error raised by this package."""


class ValidationError(Connect4Error, ValueError):
    """Malformed or inconsistent input data."""


class DimensionMismatch(ValidationError):
    pass


class ClosureViolation(ValidationError):
    """A candidate staircase is not closed under taking predecessors.

    ``index`` is 1-based: the missing element is ``element - e_index``.
    """

    def __init__(self, element, index):
        self.element = tuple(element)
        self.index = index
        super().__init__(
            f"{self.element} is present but its predecessor along x_{index} is missing"
        )


class FieldMismatch(ValidationError, TypeError):
    pass


class InvalidBasis(ValidationError):
    """Polynomials do not have the shape of a reduced lex basis for the staircase."""


class DuplicatePoints(ValidationError):
    pass


class DuplicateEvaluationPoints(ValidationError):
    """Two interpolation nodes coincide, so their difference is not invertible."""


class SizeLimitExceeded(Connect4Error):
    pass


class InternalReductionFailure(Connect4Error, RuntimeError):
    """The interpolation/reduction recursion asked for something out of order.

    This signals a bug, not a mathematical obstruction.
    """
