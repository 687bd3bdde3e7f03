class UnknownIdError(ValueError):
    """An id does not belong to the universe it was looked up in"""

    def __init__(self, kind: str, value):
        super().__init__(f"Unknown {kind} id: {value!r}")
        self.kind = kind
        self.value = value


class DuplicateIdError(ValueError):
    pass


class VoidRelationError(ValueError):
    pass


class NotTightError(ValueError):
    pass


class PreconditionViolatedError(ValueError):
    pass


class UniverseMismatchError(ValueError):
    pass


class UniverseOverlapError(ValueError):
    pass


class NotStableError(ValueError):
    pass


class NotMaximalError(ValueError):
    pass


class NotInformativeError(ValueError):
    pass


class InvalidMorphismError(ValueError):
    pass


class NotSurjectiveError(ValueError):
    pass


class StochasticUnsupportedError(ValueError):
    pass


class NotControllableError(ValueError):
    pass


class NotHamiltonianError(ValueError):
    pass


class NotCompleteError(ValueError):
    pass


class UnknownElementError(ValueError):
    pass


class MissingFieldError(ValueError):
    pass


class ParseError(ValueError):
    """
    Raised when an input document cannot be parsed.

    Parameters
    ----------
    message: str
        Description of the problem
    line: int (optional)
        One-based line number of the offending input
    column: int (optional)
        One-based column number of the offending input
    """

    def __init__(self, message: str, line: int = None, column: int = None):
        location = ""
        if line is not None:
            location = f" (line {line}" + (f", column {column})" if column is not None else ")")

        super().__init__(f"{message}{location}")
        self.line = line
        self.column = column


class CapExceededError(RuntimeError):
    """
    Raised when an exact search hits its configured cap.

    The best result found before truncation is kept in `best`.
    """

    def __init__(self, message: str, cap: int = None, best=None):
        super().__init__(message)
        self.cap = cap
        self.best = best


class TooLargeError(RuntimeError):
    def __init__(self, message: str, size: int = None, limit: int = None):
        super().__init__(message)
        self.size = size
        self.limit = limit
