"""Exception types raised by the library."""


class DimensionError(ValueError):
    """Exponent vectors, points or matrices of incompatible sizes."""


class NumericalError(ArithmeticError):
    """A linear algebra backend failed (e.g. SVD did not converge)."""


class PointNotOnVarietyError(ValueError):
    """The base point does not satisfy the system to within tolerance."""

    def __init__(self, index, residual, bound):
        self.index = index
        self.residual = residual
        self.bound = bound
        super().__init__(
            f"generator {index} has residual {residual:.3e} at the point "
            f"(allowed {bound:.3e}); the point is not on the variety"
        )


class NotStabilizedError(RuntimeError):
    """The dual dimension kept growing up to the degree cap."""

    def __init__(self, max_degree, dims):
        self.max_degree = max_degree
        self.dims = list(dims)
        super().__init__(
            f"dual dimension did not stabilize by degree {max_degree} "
            f"(last dims {self.dims[-3:]}); the point likely lies on a "
            "positive-dimensional component, use truncated_dual instead"
        )


class TooManyGeneratorsError(ValueError):
    """Inclusion-exclusion over the lcm lattice would be too large."""


class ParseError(ValueError):
    """Syntax or semantic error in a system file or point string."""

    def __init__(self, message, line=None, col=None):
        self.line = line
        self.col = col
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {col}" if col is not None else "") + ": "
        super().__init__(where + message)
