"""Exception taxonomy shared by all gjrvol modules."""


class GjrVolError(Exception):
    """Base class for all errors raised by this package."""


class EmptyInputError(GjrVolError):
    """Input contained no usable observations."""


class MalformedRowError(GjrVolError):
    """A CSV row could not be parsed; carries the 1-based row number."""

    def __init__(self, row_number: int, message: str):
        self.row_number = row_number
        super().__init__(f"row {row_number}: {message}")


class TooShortError(GjrVolError):
    """Series shorter than the operation requires."""


class InvalidParamsError(GjrVolError):
    """Distribution or variance parameters outside their domain."""


class InvalidMeanSpecError(GjrVolError):
    """Mean equation coefficients violate stationarity/invertibility."""


class InvalidInitError(GjrVolError):
    """Variance-recursion initialization rule unusable for these inputs."""


class NonPositiveVarianceError(GjrVolError):
    """The variance recursion produced sigma^2 <= 0.

    ``index`` is the 0-based position in the output series, ``value`` the
    offending variance.
    """

    def __init__(self, index: int, value: float):
        self.index = index
        self.value = value
        super().__init__(
            f"conditional variance non-positive at step {index}: {value!r}"
        )


class OrderMismatchError(GjrVolError):
    """Constraint regime incompatible with the model orders (p, q)."""


class UnsupportedOrderError(GjrVolError):
    """Operation defined only for specific (p, q) orders."""


class NuTooSmallError(GjrVolError):
    """Tail parameter below the validity threshold of a moment condition."""


class EmptyGridError(GjrVolError):
    """Region-scan grid has no points along at least one axis."""


class NoAdmissibleStartError(GjrVolError):
    """Every multistart point evaluated to an infeasible likelihood."""


class SingularHessianError(GjrVolError):
    """Numerical Hessian not invertible; standard errors unavailable."""


class InvalidPresetError(GjrVolError):
    """Unknown or unusable simulation preset."""
