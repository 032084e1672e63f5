"""Shape-parameter Bernstein operators, their moments, error bounds, and
weighted-summability convergence experiments on [0, 1] and the unit square."""

from ._backend import BACKEND
from .basis import bernstein_basis, lambda_basis
from .functions import BIVARIATE, UNIVARIATE, FunctionHandle, LipschitzSpec
from .univariate import OperatorSpec, apply, central_moments, raw_moment, sup_error

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BIVARIATE",
    "UNIVARIATE",
    "FunctionHandle",
    "LipschitzSpec",
    "OperatorSpec",
    "apply",
    "bernstein_basis",
    "central_moments",
    "lambda_basis",
    "raw_moment",
    "sup_error",
    "__version__",
]
