"""Vectorized golden-section search for maxima of unimodal 1-D functions."""

from __future__ import annotations

import math

import numpy as np

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


def golden_max(fun, lo, hi, tol: float = 1e-12, maxiter: int = 200):
    """Maximize ``fun`` on each bracket ``[lo[i], hi[i]]`` simultaneously.

    ``fun`` maps an array of abscissae to an array of values of the same
    shape.  Returns ``(x, fx)``: the best interior probe for each bracket.
    """
    a = np.array(lo, dtype=float, copy=True)
    b = np.array(hi, dtype=float, copy=True)
    x1 = b - INV_PHI * (b - a)
    x2 = a + INV_PHI * (b - a)
    f1 = fun(x1)
    f2 = fun(x2)
    for _ in range(maxiter):
        if np.all(b - a <= tol):
            break
        left = f1 >= f2
        # keep [a, x2] where the left probe wins, [x1, b] otherwise
        b = np.where(left, x2, b)
        a = np.where(left, a, x1)
        nx1 = np.where(left, b - INV_PHI * (b - a), x2)
        nx2 = np.where(left, x1, a + INV_PHI * (b - a))
        probe = np.where(left, nx1, nx2)
        fp = fun(probe)
        f1, f2 = np.where(left, fp, f2), np.where(left, f1, fp)
        x1, x2 = nx1, nx2
    better = f1 >= f2
    return np.where(better, x1, x2), np.where(better, f1, f2)
