"""NumPy implementations of the evaluation kernels.

This is the pure-Python backend; `lbern._kernels` is the compiled twin with
the same four functions, and `lbern._backend` picks one at import time.  Keep
the two APIs and semantics identical.

Rows are evaluated by a multiplicative recurrence anchored at the largest
entry (the mode index) and normalized by the row sum.  Anchoring at an end
value such as (1-x)**n underflows to an all-zero row near degree 1500 at
interior points; the mode-anchored form stays in range for any degree and
normalization pins the partition of unity at machine precision.

`sup_abs_error` additionally truncates rows to an 11-sigma index window for
large degrees; the discarded tail mass is below 1e-26, negligible against
every tolerance used downstream.
"""

import numpy as np

NAME = "python"


def bernstein_row(n, x):
    """Classical degree-n basis row at x, shape (n+1,)."""
    out = np.zeros(n + 1)
    if x <= 0.0:
        out[0] = 1.0
        return out
    if x >= 1.0:
        out[n] = 1.0
        return out
    c = min(int((n + 1) * x), n)
    out[c] = 1.0
    if c < n:
        i = np.arange(c, n, dtype=float)
        out[c + 1 :] = np.cumprod((n - i) * x / ((i + 1.0) * (1.0 - x)))
    if c > 0:
        i = np.arange(c, 0, -1, dtype=float)
        out[:c] = np.cumprod(i * (1.0 - x) / ((n - i + 1.0) * x))[::-1]
    out /= out.sum()
    return out


def lambda_row(n, lam, x):
    """Shape-parameter basis row of degree n at x, shape (n+1,)."""
    b = bernstein_row(n, x)
    bb = bernstein_row(n + 1, x)
    out = np.empty(n + 1)
    i = np.arange(1, n, dtype=float)
    out[1:n] = b[1:n] + lam * (
        (n - 2.0 * i + 1.0) * bb[1:n] - (n - 2.0 * i - 1.0) * bb[2 : n + 1]
    ) / (n * n - 1.0)
    out[0] = b[0] - lam / (n + 1.0) * bb[1]
    out[n] = b[n] - lam / (n + 1.0) * bb[n]
    return out


def lambda_apply(n, lam, x, fvals):
    """Sum of fvals[i] * (basis row)[i] for the degree-n operator at x."""
    return float(lambda_row(n, lam, x) @ np.asarray(fvals, dtype=float))


def _windowed_rows(n, x, c, w):
    """Degree-n basis values on window indices c+offs, vectorized over x.

    Requires 0 < x < 1 and 0 <= c <= n.  Out-of-range window columns come
    out exactly zero: the outward recurrence ratio vanishes at the first
    index past 0 or n and zeros absorb whatever follows.  Rows are
    normalized by their window sum.
    """
    offs = np.arange(-w, w + 1, dtype=float)
    idx = c[:, None] + offs[None, :]
    xc = x[:, None]
    rows = np.zeros((x.size, offs.size))
    rows[:, w] = 1.0
    # rightward: value(i+1) = value(i) * (n-i) x / ((i+1)(1-x))
    i = idx[:, w:-1]
    rows[:, w + 1 :] = np.cumprod((n - i) * xc / ((i + 1.0) * (1.0 - xc)), axis=1)
    # leftward: value(i-1) = value(i) * i (1-x) / ((n-i+1) x)
    i = idx[:, w:0:-1]
    rows[:, w - 1 :: -1] = np.cumprod(i * (1.0 - xc) / ((n - i + 1.0) * xc), axis=1)
    rows /= rows.sum(axis=1)[:, None]
    return idx, rows


def sup_abs_error(n, lam, xs, fvals, fxs):
    """max over the grid of |sum_i fvals[i] b~_{n,i}(lam; x_g) - fxs[g]|."""
    xs = np.asarray(xs, dtype=float)
    fvals = np.asarray(fvals, dtype=float)
    fxs = np.asarray(fxs, dtype=float)

    best = 0.0
    interior = (xs > 0.0) & (xs < 1.0)
    if not np.all(interior):
        # the operator interpolates at both ends
        ends = np.where(xs[~interior] >= 0.5, fvals[n], fvals[0])
        best = float(np.max(np.abs(ends - fxs[~interior])))
    x = xs[interior]
    if x.size == 0:
        return best

    w = min(n + 1, int(5.5 * np.sqrt(n)) + 14)
    c = np.clip(((n + 1) * x).astype(int), 0, n)
    idx, bn = _windowed_rows(n, x, c, w)
    _, bn1 = _windowed_rows(n + 1, x, c, w + 1)
    # bn1 columns 1:-1 sit on the same indices as bn; 2: sits on idx+1

    tilde = bn + lam * (
        (n - 2.0 * idx + 1.0) * bn1[:, 1:-1] - (n - 2.0 * idx - 1.0) * bn1[:, 2:]
    ) / (n * n - 1.0)
    tilde = np.where(idx == 0, bn - lam / (n + 1.0) * bn1[:, 2:], tilde)
    tilde = np.where(idx == n, bn - lam / (n + 1.0) * bn1[:, 1:-1], tilde)
    tilde = np.where((idx >= 0) & (idx <= n), tilde, 0.0)

    f_at = fvals[np.clip(idx, 0, n).astype(int)]
    vals = np.einsum("gj,gj->g", tilde, f_at)
    return max(best, float(np.max(np.abs(vals - fxs[interior]))))
