"""Built-in test functions for the experiments and the CLI.

Every handle is vectorized over numpy arrays.  Derivative slots are filled
only where an analytic derivative exists; `abs_half` carries its almost-
everywhere derivative (sign, with the convention sign(0)=0) and `sqrt`
derivatives blow up at 0, so both are used away from those points.
"""

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np


@dataclass(frozen=True)
class LipschitzSpec:
    """Parameters (M, eta, k1, k2) of the two-parameter Lipschitz class."""

    M: float
    eta: float
    k1: float
    k2: float

    def __post_init__(self):
        if self.M <= 0 or not 0 < self.eta <= 1 or self.k1 < 0 or self.k2 <= 0:
            raise ValueError(f"invalid Lipschitz parameters {self}")


@dataclass(frozen=True)
class FunctionHandle:
    """A real function on [0, 1] with optional derivatives, vectorized."""

    name: str
    f: Callable
    df: Optional[Callable] = None
    d2f: Optional[Callable] = None
    lipschitz: Optional[LipschitzSpec] = None

    def __call__(self, x):
        return self.f(x)


@dataclass(frozen=True)
class BivariateFunctionHandle:
    """A real function on the unit square, vectorized."""

    name: str
    f: Callable

    def __call__(self, x, y):
        return self.f(x, y)


def _const(c):
    return lambda x: np.full_like(np.asarray(x, dtype=float), c)


UNIVARIATE = {
    h.name: h
    for h in [
        FunctionHandle("const1", lambda x: np.ones_like(np.asarray(x, dtype=float)),
                       _const(0.0), _const(0.0)),
        FunctionHandle("id", lambda x: np.asarray(x, dtype=float),
                       _const(1.0), _const(0.0)),
        FunctionHandle("square", lambda x: np.asarray(x, dtype=float) ** 2,
                       lambda x: 2.0 * np.asarray(x), _const(2.0)),
        FunctionHandle("cube", lambda x: np.asarray(x, dtype=float) ** 3,
                       lambda x: 3.0 * np.asarray(x) ** 2, lambda x: 6.0 * np.asarray(x)),
        FunctionHandle("quart", lambda x: np.asarray(x, dtype=float) ** 4,
                       lambda x: 4.0 * np.asarray(x) ** 3, lambda x: 12.0 * np.asarray(x) ** 2),
        FunctionHandle("exp", np.exp, np.exp, np.exp),
        FunctionHandle("sinpi", lambda x: np.sin(np.pi * np.asarray(x)),
                       lambda x: np.pi * np.cos(np.pi * np.asarray(x)),
                       lambda x: -np.pi**2 * np.sin(np.pi * np.asarray(x))),
        FunctionHandle("abs_half", lambda x: np.abs(np.asarray(x, dtype=float) - 0.5),
                       lambda x: np.sign(np.asarray(x, dtype=float) - 0.5), _const(0.0)),
        FunctionHandle("sqrt", np.sqrt,
                       lambda x: 0.5 / np.sqrt(x), lambda x: -0.25 * np.asarray(x) ** -1.5),
        FunctionHandle("lip_id", lambda x: np.asarray(x, dtype=float),
                       _const(1.0), _const(0.0),
                       lipschitz=LipschitzSpec(M=np.sqrt(2.0), eta=1.0, k1=0.0, k2=1.0)),
    ]
}

BIVARIATE = {
    h.name: h
    for h in [
        BivariateFunctionHandle("const1", lambda s, t: np.ones_like(np.asarray(s, dtype=float) + t)),
        BivariateFunctionHandle("e10", lambda s, t: np.asarray(s, dtype=float) + 0.0 * np.asarray(t)),
        BivariateFunctionHandle("e01", lambda s, t: 0.0 * np.asarray(s) + np.asarray(t, dtype=float)),
        BivariateFunctionHandle("e20_plus_e02", lambda s, t: np.asarray(s) ** 2 + np.asarray(t) ** 2),
        BivariateFunctionHandle("prod", lambda s, t: np.asarray(s) * np.asarray(t)),
        BivariateFunctionHandle("exp_sum", lambda s, t: np.exp(np.asarray(s) + np.asarray(t))),
        BivariateFunctionHandle("ripple", lambda s, t: np.sin(np.pi * np.asarray(s)) * np.sin(np.pi * np.asarray(t))),
    ]
}


def get_univariate(name):
    try:
        return UNIVARIATE[name]
    except KeyError:
        raise KeyError(
            f"unknown function {name!r}; univariate catalog: {', '.join(sorted(UNIVARIATE))}"
        ) from None


def get_bivariate(name):
    try:
        return BIVARIATE[name]
    except KeyError:
        raise KeyError(
            f"unknown function {name!r}; bivariate catalog: {', '.join(sorted(BIVARIATE))}"
        ) from None
