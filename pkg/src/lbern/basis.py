"""Classical and shape-parameter Bezier basis rows on [0, 1].

The shape-parameter family perturbs the classical row with differences of
the degree-(n+1) row, scaled by lam in [-1, 1].  At lam=0 it reduces to the
classical row exactly; at x in {0, 1} it is an exact unit vector; every row
sums to 1.
"""

from fractions import Fraction

import numpy as np

from ._backend import bernstein_row as _bernstein_row
from ._backend import lambda_row as _lambda_row


def check_degree(n, minimum=2):
    if not isinstance(n, (int, np.integer)) or isinstance(n, bool):
        raise ValueError(f"degree must be an integer, got {n!r}")
    if n < minimum:
        raise ValueError(f"degree must be >= {minimum}, got {n}")
    return int(n)


def check_shape(lam):
    lam = float(lam)
    if not -1.0 <= lam <= 1.0:
        raise ValueError(f"shape parameter must lie in [-1, 1], got {lam}")
    return lam


def check_point(x):
    x = float(x)
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"evaluation point must lie in [0, 1], got {x}")
    return x


def bernstein_basis(n, x):
    """All n+1 classical basis values C(n,i) x^i (1-x)^(n-i) at x.

    Stable for degrees well beyond 5000; no factorials are formed.
    """
    n = check_degree(n, minimum=1)
    x = check_point(x)
    return _bernstein_row(n, x)


def lambda_basis(n, lam, x):
    """All n+1 shape-parameter basis values at x for lam in [-1, 1]."""
    n = check_degree(n)
    lam = check_shape(lam)
    x = check_point(x)
    return _lambda_row(n, lam, x)


def exact_rational_basis(n, lam, x):
    """Shape-parameter row as exact Fractions (test oracle, n <= 64).

    Evaluates the defining formulas directly with arbitrary-precision
    rationals; intentionally independent of the floating-point kernels.
    """
    n = check_degree(n)
    if n > 64:
        raise ValueError("exact rational mode is limited to degree 64")
    from math import comb

    lam = Fraction(lam)
    x = Fraction(x)
    b = [comb(n, i) * x**i * (1 - x) ** (n - i) for i in range(n + 1)]
    bb = [comb(n + 1, i) * x**i * (1 - x) ** (n + 1 - i) for i in range(n + 2)]
    out = [Fraction(0)] * (n + 1)
    out[0] = b[0] - lam * Fraction(1, n + 1) * bb[1]
    out[n] = b[n] - lam * Fraction(1, n + 1) * bb[n]
    for i in range(1, n):
        out[i] = b[i] + lam * (
            Fraction(n - 2 * i + 1, n * n - 1) * bb[i]
            - Fraction(n - 2 * i - 1, n * n - 1) * bb[i + 1]
        )
    return out
