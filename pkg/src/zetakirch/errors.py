"""Exception hierarchy.  Every user-facing error carries the CLI exit code it maps to."""


class ZetaKirchError(Exception):
    exit_code = 1


class ParseError(ZetaKirchError):
    exit_code = 2

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ValidationError(ParseError):
    pass


class UnsupportedGroupError(ParseError):
    pass


class SingularError(ZetaKirchError):
    exit_code = 3


class PreconditionError(ZetaKirchError):
    exit_code = 4


class PositivityError(PreconditionError):
    pass


class SizeError(PreconditionError):
    pass


class CoveringError(ZetaKirchError):
    exit_code = 5


class DisconnectedCoverError(CoveringError):
    pass


class SimplicityError(CoveringError):
    pass


class DivisibilityError(ZetaKirchError):
    """A polynomial that should be divisible is not (identity failure or wrong multiplicity)."""

    exit_code = 1


class ArithmeticConsistencyError(AssertionError):
    """Internal invariant broken inside exact arithmetic; never a user error."""
