"""Global search for max |H21| over the Libera-Zlotkiewicz parameter box.

The search space is ``c1 in [0, 2]`` (real, by rotation invariance) and
``x, w`` in the closed unit disk, in polar coordinates.  A coarse tensor grid
is scanned, the best cells plus a few seeded random points are refined by
coordinate-wise golden-section ascent, and the best value found is returned.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .bounds import BoundReport, bound, verify_sharpness
from .caratheodory import LZParams, lz_coefficients_array
from .classes import AlphaClassSpec, ClassKind, a234_closed_form
from .errors import DomainError
from .functionals import hankel_from_gammas, log_inverse_from_a
from .golden import golden_max

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class SearchConfig:
    grid_c: int = 41
    grid_ring: int = 21
    grid_angle: int = 32
    polish_iters: int = 60
    seed: int = 0
    top_k: int = 8
    random_starts: int = 8

    def __post_init__(self):
        if min(self.grid_c, self.grid_ring, self.grid_angle) < 4:
            raise DomainError("grid counts must be at least 4")
        if self.polish_iters < 0 or self.top_k < 1 or self.random_starts < 0 or self.seed < 0:
            raise DomainError("invalid polish settings or seed")


@dataclass(frozen=True)
class MaxResult:
    best_params: LZParams
    value: float
    evaluations: int
    bound: float
    margin: float


def h21_abs(spec: AlphaClassSpec, c, xr, xt, wr, wt):
    """|H21| at polar LZ coordinates; broadcasts over all arguments."""
    x = xr * np.exp(1j * xt)
    w = wr * np.exp(1j * wt)
    c1, c2, c3 = lz_coefficients_array(c, x, w)
    return np.abs(hankel_from_gammas(log_inverse_from_a(*a234_closed_form(spec, c1, c2, c3))))


def _grid_scan(spec: AlphaClassSpec, cfg: SearchConfig):
    gc = np.linspace(0.0, 2.0, cfg.grid_c)
    gr = np.linspace(0.0, 1.0, cfg.grid_ring)
    ga = np.linspace(0.0, TWO_PI, cfg.grid_angle, endpoint=False)
    c = gc[:, None, None]
    x = gr[None, :, None] * np.exp(1j * ga[None, None, :])
    # H21 is affine in w (only a4 depends on c3, linearly), so the grid values
    # equal H(w=0) + (H(w=1) - H(w=0)) w exactly.
    h = []
    for w in (0.0, 1.0):
        c1, c2, c3 = lz_coefficients_array(c, x, w)
        h.append(hankel_from_gammas(log_inverse_from_a(*a234_closed_form(spec, c1, c2, c3))))
    h0, dh = h[0], h[1] - h[0]
    wgrid = (gr[:, None] * np.exp(1j * ga[None, :])).ravel()
    # best w per (c, x) cell; argmax returns the lexicographically first tie
    best_val = np.empty(h0.shape)
    best_w = np.empty(h0.shape, dtype=np.intp)
    for i in range(cfg.grid_c):
        vals = np.abs(h0[i, :, :, None] + dh[i, :, :, None] * wgrid)
        best_w[i] = vals.argmax(axis=-1)
        best_val[i] = np.take_along_axis(vals, best_w[i][..., None], -1)[..., 0]
    flat = best_val.ravel()
    # top cells by value, ties by flat index = lexicographic (c, |x|, arg x)
    order = np.lexsort((np.arange(flat.size), -flat))[: cfg.top_k]
    ic, ir, ia = np.unravel_index(order, best_val.shape)
    wi = best_w.ravel()[order]
    wr_i, wa_i = np.unravel_index(wi, (cfg.grid_ring, cfg.grid_angle))
    starts = np.stack([gc[ic], gr[ir], ga[ia], gr[wr_i], ga[wa_i]], axis=1)
    return starts, flat[order], flat.size * wgrid.size


_LOWER = np.array([0.0, 0.0, -np.inf, 0.0, -np.inf])
_UPPER = np.array([2.0, 1.0, np.inf, 1.0, np.inf])


def _polish(spec: AlphaClassSpec, pts: np.ndarray, vals: np.ndarray, steps: np.ndarray, iters: int):
    """Coordinate-wise golden-section ascent; only strict improvements are taken,
    so the result is non-decreasing in ``iters``."""
    pts = pts.copy()
    vals = vals.copy()
    evals = 0
    for _ in range(iters):
        moved = False
        for k in range(5):
            lo = np.maximum(pts[:, k] - steps[k], _LOWER[k])
            hi = np.minimum(pts[:, k] + steps[k], _UPPER[k])

            def f(s, k=k):
                nonlocal evals
                cols = [pts[:, j] for j in range(5)]
                cols[k] = s
                evals += s.size
                return h21_abs(spec, *cols)

            probes = [golden_max(f, lo, hi, tol=1e-9)]
            if np.isfinite(_LOWER[k]):
                # golden section never probes the bracket ends, where maximizers often sit
                probes += [(lo, f(lo)), (hi, f(hi))]
            for x, fx in probes:
                up = fx > vals
                if np.any(up):
                    moved = True
                    pts[up, k] = x[up]
                    vals[up] = fx[up]
        if not moved:
            break
    return pts, vals, evals


def maximize_h21(spec: AlphaClassSpec, cfg: SearchConfig = SearchConfig()) -> MaxResult:
    starts, svals, n_grid = _grid_scan(spec, cfg)
    rng = np.random.default_rng(cfg.seed)
    if cfg.random_starts:
        rnd = rng.uniform([0, 0, 0, 0, 0], [2, 1, TWO_PI, 1, TWO_PI], size=(cfg.random_starts, 5))
        starts = np.vstack([starts, rnd])
        svals = np.concatenate([svals, h21_abs(spec, *rnd.T)])
    steps = np.array([2.0 / (cfg.grid_c - 1), 1.0 / (cfg.grid_ring - 1),
                      TWO_PI / cfg.grid_angle, 1.0 / (cfg.grid_ring - 1), TWO_PI / cfg.grid_angle])
    pts, vals, n_polish = _polish(spec, starts, svals, steps, cfg.polish_iters)
    i = int(np.argmax(vals))
    c, xr, xt, wr, wt = pts[i]
    params = LZParams(float(c), complex(xr * np.exp(1j * xt)), complex(wr * np.exp(1j * wt)))
    b, _ = bound(spec)
    value = float(vals[i])
    return MaxResult(params, value, int(n_grid + cfg.random_starts + n_polish), b, b - value)


def scan_alpha(kind: ClassKind | str, alphas: Sequence[float], cfg: SearchConfig = SearchConfig(),
               tol: float = 1e-9) -> list[BoundReport]:
    """One report per alpha with the bound, the extremal value and the search maximum."""
    kind = ClassKind.parse(kind)
    alphas = [float(a) for a in alphas]
    bad = [a for a in alphas if not 0.0 < a <= 1.0]
    if bad:
        raise DomainError(f"alpha values outside (0, 1]: {bad}")
    out = []
    for a in alphas:
        spec = AlphaClassSpec(kind, a)
        rep = verify_sharpness(spec, tol)
        res = maximize_h21(spec, cfg)
        rep.numeric_max = res.value
        rep.margin = res.margin
        out.append(rep)
    return out
