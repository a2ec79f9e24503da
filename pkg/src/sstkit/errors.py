"""Exception types shared across the package."""


class SstKitError(Exception):
    """Base class for every error raised by this library."""


class ParseError(SstKitError):
    """Malformed transducer document."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        prefix = ""
        if line is not None:
            prefix = f"line {line}"
            if column is not None:
                prefix += f", column {column}"
            prefix += ": "
        super().__init__(prefix + message)


class CopylessError(SstKitError):
    """A variable occurs more than once across the images of an update."""

    def __init__(self, variable: str, message: str | None = None):
        self.variable = variable
        super().__init__(message or f"variable {variable!r} occurs more than once")


class UnknownSymbolError(SstKitError):
    """Reference to an undeclared state, letter, or variable."""


class VariableSetMismatchError(SstKitError):
    """Two updates over different variable sets were combined."""


class RunError(SstKitError):
    """Invalid run: broken state chaining, or an operation needed an accepting run."""


class BudgetExceededError(SstKitError):
    """An enumeration or search exceeded its node budget."""


class InputMismatchError(SstKitError):
    """Two runs were required to consume the same input but do not."""


class OutputMismatchError(SstKitError):
    """Two runs were required to produce the same output but do not."""


class NotIdempotentError(SstKitError):
    """An update without an idempotent skeleton was used where a loop is required."""


class ParameterError(SstKitError):
    """Bad parameter structure or assignment in a word inequality."""
