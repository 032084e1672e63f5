# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled evaluation kernels; same API and semantics as `_kernels_py`.

Rows use the mode-anchored multiplicative recurrence normalized by the row
sum (see the fallback module for the numerical rationale).  The weighted-sum
kernel truncates rows to a 9-sigma index window for large degrees; the
discarded tail mass is below 1e-18 and never visible at the tolerances used.
Step ratios are formed from a cached table of integer reciprocals so the
inner loops are division-free.
"""

import numpy as np

from libc.math cimport fabs, sqrt

NAME = "cython"

_INV = 1.0 / np.arange(1, 64, dtype=np.float64)  # _INV[k-1] = 1/k


def _inv_table(int n):
    """Reciprocals 1/1..1/n at least, cached across calls."""
    global _INV
    if _INV.shape[0] < n:
        m = max(2 * _INV.shape[0], n)
        _INV = 1.0 / np.arange(1, m + 1, dtype=np.float64)
    return _INV


cdef double _row_window(int n, double x, int lo, int hi, int anchor,
                        double[::1] out, double[::1] inv) noexcept nogil:
    """Unnormalized degree-n basis values for indices lo..hi into out.

    Requires 0 < x < 1 and lo <= anchor <= hi with 0 <= lo, hi <= n.
    inv[k-1] must hold 1/k up to k = n+1.  Returns the window sum.
    """
    cdef int i, k
    cdef double v, s
    cdef double tx = x / (1.0 - x)
    cdef double ty = (1.0 - x) / x
    out[anchor - lo] = 1.0
    v = 1.0
    for i in range(anchor, hi):
        # value(i+1) = value(i) * (n-i) x / ((i+1)(1-x))
        v = v * tx * (n - i) * inv[i]
        out[i + 1 - lo] = v
    v = 1.0
    for i in range(anchor, lo, -1):
        # value(i-1) = value(i) * i (1-x) / ((n-i+1) x)
        v = v * ty * i * inv[n - i]
        out[i - 1 - lo] = v
    s = 0.0
    for k in range(hi - lo + 1):
        s += out[k]
    return s


def bernstein_row(int n, double x):
    """Classical degree-n basis row at x, shape (n+1,)."""
    out = np.zeros(n + 1)
    cdef double[::1] v = out
    cdef double[::1] inv = _inv_table(n + 1)
    cdef double s, comp, y, t
    cdef int anchor, k
    if x <= 0.0:
        v[0] = 1.0
        return out
    if x >= 1.0:
        v[n] = 1.0
        return out
    anchor = <int>((n + 1) * x)
    if anchor > n:
        anchor = n
    _row_window(n, x, 0, n, anchor, v, inv)
    # Kahan-compensated sum: keeps the partition of unity at machine
    # precision for any degree
    s = 0.0
    comp = 0.0
    for k in range(n + 1):
        y = v[k] - comp
        t = s + y
        comp = (t - s) - y
        s = t
    for k in range(n + 1):
        v[k] /= s
    return out


def lambda_row(int n, double lam, double x):
    """Shape-parameter basis row of degree n at x, shape (n+1,)."""
    b = bernstein_row(n, x)
    bb = bernstein_row(n + 1, x)
    out = np.empty(n + 1)
    cdef double[::1] bv = b, bbv = bb, ov = out
    cdef double denom = n * n - 1.0
    cdef int i
    for i in range(1, n):
        ov[i] = bv[i] + lam * ((n - 2.0 * i + 1.0) * bbv[i]
                               - (n - 2.0 * i - 1.0) * bbv[i + 1]) / denom
    ov[0] = bv[0] - lam / (n + 1.0) * bbv[1]
    ov[n] = bv[n] - lam / (n + 1.0) * bbv[n]
    return out


def lambda_apply(int n, double lam, double x, fvals):
    """Sum of fvals[i] * (basis row)[i] for the degree-n operator at x."""
    cdef double[::1] f = np.ascontiguousarray(fvals, dtype=np.float64)
    cdef double[::1] row = lambda_row(n, lam, x)
    cdef double s = 0.0
    cdef int i
    for i in range(n + 1):
        s += row[i] * f[i]
    return s


cdef double _weighted_sum(int n, double lam, double x, double[::1] f,
                          double[::1] coeff, double[::1] w1,
                          double[::1] inv) noexcept nogil:
    """Operator value at one interior point via the telescoped form

        sum_i f[i] b_{n,i} + lam * sum_{j=1..n} coeff[j] b_{n+1,j},

    which is algebraically identical to summing f against the
    shape-parameter row (the end formulas telescope into coeff).  Only the
    degree-(n+1) row needs a recurrence; the degree-n row follows from
    b_{n,i} = b_{n+1,i} (n+1-i) / ((n+1)(1-x)).
    """
    cdef int c = <int>((n + 2) * x)
    if c > n + 1:
        c = n + 1
    cdef int w = <int>(9.0 * sqrt(n * x * (1.0 - x))) + 12
    cdef int lo = c - w
    if lo < 0:
        lo = 0
    cdef int hi1 = c + w
    if hi1 > n + 1:
        hi1 = n + 1
    cdef int hi = hi1
    if hi > n:
        hi = n
    cdef double s1 = _row_window(n + 1, x, lo, hi1, c, w1, inv)
    cdef double scale = 1.0 / ((n + 1.0) * (1.0 - x))
    cdef double rem = n + 1.0 - lo
    cdef double sn = 0.0, accf = 0.0, accc = 0.0
    cdef double b1, bn
    cdef int i
    for i in range(lo, hi + 1):
        b1 = w1[i - lo]
        bn = b1 * rem * scale
        rem -= 1.0
        sn += bn
        accf += f[i] * bn
        accc += coeff[i] * b1
    return accf / sn + lam * accc / s1


def sup_abs_error(int n, double lam, xs, fvals, fxs):
    """max over the grid of |sum_i fvals[i] b~_{n,i}(lam; x_g) - fxs[g]|."""
    cdef double[::1] xv = np.ascontiguousarray(xs, dtype=np.float64)
    fv_arr = np.ascontiguousarray(fvals, dtype=np.float64)
    cdef double[::1] fv = fv_arr
    cdef double[::1] ev = np.ascontiguousarray(fxs, dtype=np.float64)
    cdef double[::1] w1 = np.empty(n + 3)
    cdef double[::1] inv = _inv_table(n + 2)
    # telescoped first-difference weights; coeff[0] = 0 keeps the hot loop
    # branch-free
    coeff_arr = np.zeros(n + 1)
    j = np.arange(1, n + 1, dtype=np.float64)
    coeff_arr[1:] = (n - 2.0 * j + 1.0) / (n * n - 1.0) * np.diff(fv_arr)
    cdef double[::1] coeff = coeff_arr
    cdef double best = 0.0, v, d, x
    cdef Py_ssize_t g
    for g in range(xv.shape[0]):
        x = xv[g]
        if x <= 0.0:
            v = fv[0]
        elif x >= 1.0:
            v = fv[n]
        else:
            v = _weighted_sum(n, lam, x, fv, coeff, w1, inv)
        d = fabs(v - ev[g])
        if d > best:
            best = d
    return best
