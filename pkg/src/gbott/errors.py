"""Exception types shared across gbott."""


class GbottError(Exception):
    """Base class for all gbott errors."""


class DimensionMismatch(GbottError):
    """Operands live over different numbers of generators."""


class PolynomialSyntaxError(GbottError):
    """A polynomial string does not conform to the text syntax."""


class TowerValidationError(GbottError):
    """A tower violates a shape invariant.

    `stage` is the 1-based index of the offending stage when known.
    """

    def __init__(self, message: str, stage: int | None = None):
        super().__init__(message)
        self.stage = stage


class TowerFormatError(GbottError):
    """A tower file is malformed.  `line` is the 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class InadmissiblePermutation(GbottError):
    """Conjugating by this permutation would make a stage depend on a
    later stage, so the result is not a tower."""


class PreconditionError(GbottError):
    """An operation was called outside its stated precondition."""


class InternalConsistencyError(GbottError):
    """A property that the mathematics guarantees failed to hold;
    indicates a bug, not bad input."""
