"""Error taxonomy shared across modules.

The CLI maps InvalidInputError (and subclasses) to exit code 2 and
VerificationError to exit code 1; verification routines that return reports
instead of raising encode failure as data and the CLI inspects the report.
"""


class InvalidInputError(ValueError):
    """Input outside an operation's domain."""


class NotSemiSimpleError(InvalidInputError):
    """(order, rank) pair incompatible with a semi-simple Lie algebra."""


class NoTargetError(InvalidInputError):
    """A navigation move leaves the defined region of the chart."""


class VerificationError(ArithmeticError):
    """A computation contradicts an asserted numerical fact."""
