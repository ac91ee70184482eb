"""Maximum of ``|A + B z + C z^2| + 1 - |z|^2`` over the closed unit disk.

:func:`y_closed_form` is the Choi-Kim-Sugawa formula; :func:`y_brute_force`
is an independent grid search with golden-section polish used as its oracle.
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from .golden import golden_max


class YInputs(NamedTuple):
    A: float
    B: float
    C: float


BRANCHES = ("i.1", "i.2", "ii.1", "ii.2", "ii.R1", "ii.R2", "ii.R3")


def y_closed_form(inp: YInputs) -> tuple[float, str]:
    """Return ``(Y(A, B, C), branch label)``.

    Branch conditions are tested in the listed order; ties go to the first
    match.  The first case of ``R`` is ``|A| + |B| - |C|``.
    """
    A, B, C = (float(v) for v in inp)
    a, b, c = abs(A), abs(B), abs(C)
    if A * C >= 0.0:
        if b >= 2.0 * (1.0 - c):
            return a + b + c, "i.1"
        return 1.0 + a + B * B / (4.0 * (1.0 - c)), "i.2"
    # -4AC(1/C^2 - 1) written without squaring C, which can underflow
    q = -4.0 * A * (1.0 - C * C) / C
    if q <= B * B and b < 2.0 * (1.0 - c):
        return 1.0 - a + B * B / (4.0 * (1.0 - c)), "ii.1"
    if B * B < min(4.0 * (1.0 + c) ** 2, q):
        return 1.0 + a + B * B / (4.0 * (1.0 + c)), "ii.2"
    if c * (b + 4.0 * a) <= a * b:
        return a + b - c, "ii.R1"
    if a * b <= c * (b - 4.0 * a):
        return -a + b + c, "ii.R2"
    arg = 1.0 - B * B / (4.0 * A * C)
    assert arg >= 1.0, "R(A, B, C) third case needs AC < 0"
    return (a + c) * math.sqrt(arg), "ii.R3"


def y_objective(A, B, C, z):
    return np.abs(A + B * z + C * z * z) + 1.0 - np.abs(z) ** 2


@lru_cache(maxsize=8)
def _grid(radial: int, angular: int):
    r = np.linspace(0.0, 1.0, radial + 1)
    t = np.linspace(0.0, 2.0 * math.pi, angular, endpoint=False)
    z = r[:, None] * np.exp(1j * t[None, :])
    for a in (r, t, z):
        a.setflags(write=False)
    return r, t, z


def _top_local_maxima(v: np.ndarray, k: int) -> np.ndarray:
    """Per row of ``v`` (shape n x R x T), flat indices of the ``k`` best grid
    points that dominate their 8-neighbourhood (angles wrap around)."""
    n, R, T = v.shape
    pad = np.pad(v, ((0, 0), (1, 1), (0, 0)), constant_values=-np.inf)
    keep = np.ones(v.shape, dtype=bool)
    for dr in (-1, 0, 1):
        for dt in (-1, 0, 1):
            if dr or dt:
                keep &= v >= np.roll(pad, dt, axis=2)[:, 1 + dr : 1 + dr + R]
    # a global maximum always survives the filter, so every row has a candidate
    score = np.where(keep, v, -np.inf).reshape(n, R * T)
    order = np.argsort(-score, axis=1, kind="stable")[:, :k]
    # rows with fewer than k local maxima repeat their best one
    ok = np.take_along_axis(score, order, axis=1) > -np.inf
    return np.where(ok, order, order[:, :1])


def y_brute_force_many(A, B, C, radial: int = 64, angular: int = 256,
                       candidates: int = 3, sweeps: int = 60, chunk: int = 256) -> np.ndarray:
    """Vectorized :func:`y_brute_force` over arrays of inputs."""
    if radial < 64 or angular < 256:
        raise ValueError("need radial >= 64 and angular >= 256")
    A, B, C = (np.atleast_1d(np.asarray(x, dtype=float)) for x in (A, B, C))
    out = np.empty(A.shape, dtype=float)
    r, t, z = _grid(radial, angular)
    for lo in range(0, A.size, chunk):
        sl = slice(lo, lo + chunk)
        a, b, c = (x[sl, None, None] for x in (A, B, C))
        v = y_objective(a, b, c, z[None])
        idx = _top_local_maxima(v, candidates)
        ir, it = np.unravel_index(idx, v.shape[1:])
        # the centre has no angle; restart such candidates on the first ring at
        # its best angle so the r bracket still covers z = 0
        centre = ir == 0
        ir = np.where(centre, 1, ir)
        it = np.where(centre, np.argmax(v[:, 1, :], axis=1)[:, None], it)
        idx = np.ravel_multi_index((ir, it), v.shape[1:])
        a, b, c = (x[:, :, 0] for x in (a, b, c))
        out[sl] = _polish(a, b, c, r[ir], t[it], np.take_along_axis(v.reshape(len(v), -1), idx, 1),
                          1.0 / radial, 2.0 * math.pi / angular, sweeps).max(axis=1)
    return out


def _polish(a, b, c, rr, tt, best, dr, dt, sweeps):
    rr = rr.astype(float)
    tt = tt.astype(float)
    for _ in range(sweeps):
        prev = best
        x, fx = golden_max(lambda s: y_objective(a, b, c, s * np.exp(1j * tt)),
                           np.maximum(rr - dr, 0.0), np.minimum(rr + dr, 1.0), tol=1e-9)
        up = fx > best
        rr, best = np.where(up, x, rr), np.where(up, fx, best)
        # golden section never probes the bracket ends; r = 1 is often the maximizer
        edge = y_objective(a, b, c, np.exp(1j * tt))
        up = edge > best
        rr, best = np.where(up, 1.0, rr), np.where(up, edge, best)
        x, fx = golden_max(lambda s: y_objective(a, b, c, rr * np.exp(1j * s)),
                           tt - dt, tt + dt, tol=1e-9)
        up = fx > best
        tt, best = np.where(up, x, tt), np.where(up, fx, best)
        if np.all(best - prev <= 1e-14):
            break
    return best


def y_brute_force(inp: YInputs, radial: int = 64, angular: int = 256) -> float:
    """Grid maximum over the closed disk, refined by coordinate-wise
    golden-section ascent in ``(r, phi)`` from the best local grid maxima."""
    A, B, C = inp
    return float(y_brute_force_many(A, B, C, radial, angular)[0])
