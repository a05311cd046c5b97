"""Exception hierarchy.

The split mirrors the CLI exit codes: input problems, violated
preconditions, and internal proof-claim failures (which are always bugs).
"""


class TightCutError(Exception):
    """Base class for all errors raised by this package."""


class GraphInputError(TightCutError, ValueError):
    """Malformed input: unknown vertex ids, loops, unparsable files."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class PreconditionError(TightCutError, ValueError):
    """A semantic precondition of an operation does not hold."""


class NotFactorizableError(PreconditionError):
    """The graph has no perfect matching."""


class NotABrickError(PreconditionError):
    """The graph is not a brick."""


class EnumerationBoundError(PreconditionError):
    """Brute-force enumeration requested on a graph above the size bound."""


class ProofClaimError(TightCutError, AssertionError):
    """A structural claim guaranteed by the theory failed at run time.

    Raising this always indicates an implementation bug (or a defect in
    the argument being executed); it is never retried silently.
    """
