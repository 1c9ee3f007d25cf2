"""Exception hierarchy shared by the package and the command line."""


class CubicPoissonError(Exception):
    """Base class for all package errors."""


class ParseError(CubicPoissonError, ValueError):
    """Polynomial text could not be turned into a homogeneous polynomial."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class ExpressionSyntaxError(ParseError):
    pass


class UnknownVariableError(ParseError):
    pass


class NonHomogeneousError(ParseError):
    def __init__(self, degrees: tuple[int, int]):
        self.degrees = degrees
        super().__init__(
            f"expression is not homogeneous: it mixes monomials of degree {degrees[0]} and {degrees[1]}"
        )


class DegreeMismatchError(CubicPoissonError, ValueError):
    """Operands of a homogeneous operation have incompatible degrees or variable counts."""


class PreconditionError(CubicPoissonError, ValueError):
    """Input is well-formed but outside the domain of an operation (e.g. not a nonzero cubic)."""


class InternalInconsistencyError(CubicPoissonError, RuntimeError):
    """A runtime certificate failed; indicates a bug rather than bad input."""
