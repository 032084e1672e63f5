"""The univariate operator: evaluation, closed-form moments, sup errors.

Moments through order four have closed forms in (n, lam, x); orders three
and four as printed in the usual references fail a direct-summation check,
so the brackets here are the re-derived ones, validated exactly against an
arbitrary-precision oracle (see tests).  `raw_moment_oracle` is the same
direct summation in floating point and works for any order.
"""

from dataclasses import dataclass

import numpy as np

from . import _backend
from .basis import check_degree, check_point, check_shape


@dataclass(frozen=True)
class OperatorSpec:
    """One operator instance: degree n >= 2 and shape parameter in [-1, 1]."""

    n: int
    lam: float

    def __post_init__(self):
        check_degree(self.n)
        check_shape(self.lam)


@dataclass(frozen=True)
class MomentSet:
    """Raw moments m0..m4 at a point plus the first two central moments."""

    m0: float
    m1: float
    m2: float
    m3: float
    m4: float
    beta: float
    alpha: float
    x: float


def nodes(n):
    return np.arange(n + 1) / n


def apply(spec, f, x):
    """Operator value: sum of f(i/n) against the shape-parameter row at x."""
    x = check_point(x)
    fv = np.asarray(f(nodes(spec.n)), dtype=float)
    return _backend.lambda_apply(spec.n, spec.lam, x, fv)


def _lambda_brackets(n, x):
    """The four shape-parameter brackets of the moment formulas at x."""
    X = x ** (n + 1)
    Y = (1.0 - x) ** (n + 1)
    n = float(n)
    b1 = (1.0 - 2.0 * x + X - Y) / (n * (n - 1.0))
    b2 = (2.0 * x - 4.0 * x**2 + 2.0 * X) / (n * (n - 1.0)) + (X + Y - 1.0) / (
        n**2 * (n - 1.0)
    )
    b3 = (
        (6.0 * X - 6.0 * x**3) / n**2
        + (3.0 * x**2 - 3.0 * X) / (n * (n - 1.0))
        + (9.0 * X - 9.0 * x**2) / (n**2 * (n - 1.0))
        + (1.0 - 2.0 * x + X - Y) / (n**3 * (n - 1.0))
    )
    b4 = (
        (4.0 * x**3 - 8.0 * x**4 + 4.0 * X) / n**2
        + (17.0 * X + 16.0 * x**4 - 32.0 * x**3 - x**2) / n**3
        + (x - X) / n**4
        + (7.0 * x**2 - 7.0 * X) / (n**2 * (n - 1.0))
        + (x - 23.0 * x**2 + 22.0 * X) / (n**3 * (n - 1.0))
        + (Y + x - 1.0) / (n**4 * (n - 1.0))
    )
    return b1, b2, b3, b4


def raw_moment(spec, j, x):
    """Closed-form operator moment of t**j at x, j = 0..4."""
    x = check_point(x)
    n, lam = spec.n, spec.lam
    if j == 0:
        return 1.0
    b1, b2, b3, b4 = _lambda_brackets(n, x)
    nf = float(n)
    if j == 1:
        return x + lam * b1
    if j == 2:
        return x**2 + x * (1.0 - x) / nf + lam * b2
    if j == 3:
        return (
            x**3
            + 3.0 * x**2 * (1.0 - x) / nf
            + (2.0 * x**3 - 3.0 * x**2 + x) / nf**2
            + lam * b3
        )
    if j == 4:
        return (
            x**4
            + 6.0 * x**3 * (1.0 - x) / nf
            + (7.0 * x**2 - 18.0 * x**3 + 11.0 * x**4) / nf**2
            + (x - 7.0 * x**2 + 12.0 * x**3 - 6.0 * x**4) / nf**3
            + lam * b4
        )
    raise ValueError(f"closed forms cover orders 0..4, got {j}")


def raw_moment_oracle(spec, j, x):
    """Direct-summation moment of t**j at x; any order j >= 0."""
    if j < 0:
        raise ValueError(f"moment order must be >= 0, got {j}")
    x = check_point(x)
    return _backend.lambda_apply(spec.n, spec.lam, x, nodes(spec.n) ** j)


def central_moments(spec, x):
    """(beta, alpha): first and second central moments at x.

    Evaluated in expanded form (algebraically identical to
    m1 - x and m2 - 2 x m1 + x^2) to avoid cancellation of the O(1) parts.
    """
    x = check_point(x)
    n, lam = spec.n, spec.lam
    b1, b2, _, _ = _lambda_brackets(n, x)
    beta = lam * b1
    alpha = x * (1.0 - x) / n + lam * b2 - 2.0 * x * beta
    return beta, alpha


def moment_set(spec, x):
    beta, alpha = central_moments(spec, x)
    return MomentSet(
        m0=raw_moment(spec, 0, x),
        m1=raw_moment(spec, 1, x),
        m2=raw_moment(spec, 2, x),
        m3=raw_moment(spec, 3, x),
        m4=raw_moment(spec, 4, x),
        beta=beta,
        alpha=alpha,
        x=x,
    )


def sup_error(spec, f, grid):
    """max over the grid of |operator value - f|."""
    grid = np.asarray(grid, dtype=float)
    if grid.size == 0:
        raise ValueError("grid must be nonempty")
    fv = np.asarray(f(nodes(spec.n)), dtype=float)
    fx = np.asarray(f(grid), dtype=float)
    return _backend.sup_abs_error(spec.n, spec.lam, grid, fv, fx)


def error_sequence(lam, f, grid, n_max):
    """Sup errors e[k] for every degree k <= n_max over a fixed grid.

    Degrees below 2 are clamped to the degree-2 value so the sequence is
    defined from index 0.
    """
    lam = check_shape(lam)
    grid = np.asarray(grid, dtype=float)
    fx = np.asarray(f(grid), dtype=float)
    e = np.empty(n_max + 1)
    for k in range(2, n_max + 1):
        fv = np.asarray(f(np.arange(k + 1) / k), dtype=float)
        e[k] = _backend.sup_abs_error(k, lam, grid, fv, fx)
    e[0] = e[1] = e[2]
    return e
