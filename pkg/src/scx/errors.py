"""Exception hierarchy shared by every module."""


class SCXError(Exception):
    """Base class for all library errors."""


class EmptyInput(SCXError, ValueError):
    pass


class DuplicateVertexInSimplex(SCXError, ValueError):
    pass


class SimplexNotFound(SCXError, KeyError):
    pass


class DimensionOutOfRange(SCXError, IndexError):
    pass


class ShapeMismatch(SCXError, ValueError):
    pass


class NoBoundary(SCXError):
    """Some top simplex has no finite depth (top Z2 homology is nonzero)."""


class BeyondBruteForceCap(SCXError):
    """An exhaustive search would exceed the configured size cap."""

    def __init__(self, message, bits=None, cap_bits=None, dimension=None):
        super().__init__(message)
        self.bits = bits
        self.cap_bits = cap_bits
        self.dimension = dimension


class NonSymmetric(SCXError, ValueError):
    pass


class NoConvergence(SCXError, ArithmeticError):
    pass


class HypothesisViolated(SCXError):
    """A structural shortcut was requested on a complex outside its hypotheses."""

    def __init__(self, hypothesis):
        super().__init__(f"hypothesis violated: {hypothesis}")
        self.hypothesis = hypothesis


class Branching(SCXError, ValueError):
    pass


class EmptyInterior(SCXError, ValueError):
    pass


class ParseError(SCXError, ValueError):
    def __init__(self, message, line=None, column=None):
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(message + where)
        self.line = line
        self.column = column


class ValidationError(SCXError, ValueError):
    pass
