"""Exception hierarchy.

Everything that a caller can fix by changing the input derives from
:class:`InputError`; the CLI maps those to exit code 1.  An
:class:`InvariantError` means the library itself produced something that
contradicts one of its own checks (exit code 2).
"""


class GradedModError(Exception):
    pass


class InputError(GradedModError, ValueError):
    pass


class UsageError(InputError):
    """An operation was called outside its precondition."""


class FieldMismatchError(UsageError):
    pass


class DegreeOrderError(InputError):
    pass


class GradednessError(InputError):
    """An entry violates ``m_k = n_j + deg A_jk``.

    ``row`` and ``col`` are 1-based.
    """

    def __init__(self, row, col, message=None):
        self.row = row
        self.col = col
        super().__init__(message or f"gradedness violated at entry ({row},{col})")


class NonDivisibleError(GradedModError, ArithmeticError):
    pass


class OutOfScopeError(InputError):
    pass


class InvariantError(GradedModError, AssertionError):
    pass
