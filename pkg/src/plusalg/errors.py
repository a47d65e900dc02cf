"""Exception hierarchy shared by all modules."""


class PlusAlgError(Exception):
    pass


class DomainMismatchError(PlusAlgError, TypeError):
    """Scalars from two different fields were combined."""


class DimensionError(PlusAlgError, ValueError):
    pass


class DegreeRangeError(PlusAlgError, IndexError):
    pass


class InvariantViolation(PlusAlgError, ValueError):
    pass


class TruncationError(PlusAlgError, ValueError):
    """A computation would need data beyond a declared truncation bound."""


class BudgetExceeded(PlusAlgError, RuntimeError):
    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class ParseError(PlusAlgError, ValueError):
    def __init__(self, message, path=None, line=None, column=None):
        loc = ""
        if path is not None:
            loc += f"{path}:"
        if line is not None:
            loc += f"{line}:"
            if column is not None:
                loc += f"{column}:"
        super().__init__(f"{loc} {message}" if loc else message)
        self.path = path
        self.line = line
        self.column = column
