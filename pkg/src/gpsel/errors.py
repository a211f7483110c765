"""Exception types raised across the package."""


class GpselError(Exception):
    """Base class for every error raised by gpsel."""


# linear algebra / model space
class RankDeficient(GpselError):
    pass


class TooManyModels(GpselError):
    pass


class ShapeMismatch(GpselError, ValueError):
    pass


# special functions and quadrature
class DomainError(GpselError, ValueError):
    pass


class NoConvergence(GpselError):
    pass


class DivergentIntegral(GpselError):
    pass


class QuadratureFailure(GpselError):
    pass


# model scoring
class DegenerateModel(GpselError):
    """Model fits the response exactly (r2 saturated); its posterior weight is undefined."""


class IntegrabilityError(GpselError):
    pass


class NullModelNotAllowed(GpselError):
    pass


class OptimizationFailure(GpselError):
    pass


class ZeroResidual(GpselError):
    pass


class AllDegenerate(GpselError):
    pass


# linear programming
class Infeasible(GpselError):
    pass


class Unbounded(GpselError):
    pass


class IterationLimit(GpselError):
    pass


# experiments and I/O
class TuningFailure(GpselError):
    pass


class ReplicateFailure(GpselError):
    pass


class ParseError(GpselError, ValueError):
    def __init__(self, row, column, message=""):
        self.row = row
        self.column = column
        super().__init__(f"row {row}, column {column!r}: {message}".rstrip(": "))


class EmptyAfterFiltering(GpselError):
    pass


class ConfigError(GpselError, ValueError):
    """Aggregates every violation found while validating a config."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))
