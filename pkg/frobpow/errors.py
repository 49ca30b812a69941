"""
Exception types of frobpow

Oct-2026

"""


class InvalidArgumentError(ValueError):
    """A bad input value: non-prime p, q not a power of p, t out of range, length mismatch."""
    pass


class IdealSyntaxError(InvalidArgumentError):
    """Raised for malformed ideal text; position is the 0-based column."""

    def __init__(self, message, position=None):
        if position is not None:
            message = '{} (at position {})'.format(message, position)
        super().__init__(message)
        self.position = position


class ImproperIdealError(ValueError):
    pass


class MembershipError(ValueError):
    """Raised when x^b already lies in I and no reduction was requested."""
    pass


class BudgetExceededError(RuntimeError):
    pass


class ConsistencyError(RuntimeError):
    pass
