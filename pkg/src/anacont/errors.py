"""Exception types shared across the package.

Every rejection raised by a library routine carries a short machine-readable
``code``; the command-line front end reports the same code so that library
and CLI diagnostics stay in step.
"""


class AnacontError(Exception):
    """Base class for all package errors."""

    code = "error"

    def __init__(self, message, code=None):
        super().__init__(message)
        if code is not None:
            self.code = code


class ParameterError(AnacontError, ValueError):
    """A precondition on an argument was violated."""

    code = "invalid_parameter"


class NumericalAbort(AnacontError, ArithmeticError):
    """A computation produced non-finite values or failed to converge."""

    code = "numerical_abort"
