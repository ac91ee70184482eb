"""Members of the Caratheodory class P (analytic, p(0) = 1, Re p > 0).

Two constructive generators are provided: finite Herglotz mixtures
``sum w_k (1 + e^{i t_k} z)/(1 - e^{i t_k} z)`` and the Libera-Zlotkiewicz
parametrization of the admissible triples ``(c1, c2, c3)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DomainError
from .series import DEFAULT_ORDER, TruncatedSeries

COEFF_SLACK = 1e-9
POSITIVITY_SLACK = 1e-9
MAX_RADIUS = 0.95


@dataclass(frozen=True)
class HerglotzMixture:
    weights: tuple[float, ...]
    angles: tuple[float, ...]

    def __post_init__(self):
        w = np.asarray(self.weights, dtype=float)
        if len(self.weights) != len(self.angles) or w.size == 0:
            raise DomainError("need one angle per weight and at least one atom")
        if not (np.all(np.isfinite(w)) and np.all(np.isfinite(self.angles))):
            raise DomainError("weights and angles must be finite")
        if np.any(w < 0) or abs(w.sum() - 1.0) > 1e-12:
            raise DomainError("weights must be non-negative and sum to 1")

    @classmethod
    def from_atoms(cls, atoms: Sequence[tuple[float, float]]) -> HerglotzMixture:
        return cls(tuple(float(a[0]) for a in atoms), tuple(float(a[1]) for a in atoms))


def herglotz_series(m: HerglotzMixture, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """Taylor series of the mixture: ``c_n = 2 sum w_k e^{i n t_k}``."""
    n = np.arange(1, order + 1)[:, None]
    w = np.asarray(m.weights)
    t = np.asarray(m.angles)
    c = 2.0 * (w * np.exp(1j * n * t)).sum(axis=1)
    return TruncatedSeries(np.concatenate([[1.0], c]))


@dataclass(frozen=True)
class LZParams:
    """Libera-Zlotkiewicz parameters: c1 in [0, 2], x and w in the closed unit disk."""

    c1: float
    x: complex = 0j
    w: complex = 0j

    def __post_init__(self):
        if not (0.0 <= self.c1 <= 2.0):
            raise DomainError(f"c1 must lie in [0, 2], got {self.c1}")
        # slack absorbs rounding of points normalized onto the circle
        if not abs(self.x) <= 1.0 + 1e-12 or not abs(self.w) <= 1.0 + 1e-12:
            raise DomainError("x and w must lie in the closed unit disk")


def lz_coefficients(params: LZParams) -> tuple[complex, complex, complex]:
    """Map ``(c1, x, w)`` to ``(c1, c2, c3)``.

    Uses::

        2 c2 = c1^2 + (4 - c1^2) x
        4 c3 = c1^3 + 2 (4 - c1^2) c1 x - c1 (4 - c1^2) x^2 + 2 (4 - c1^2)(1 - |x|^2) w
    """
    c1, c2, c3 = lz_coefficients_array(params.c1, complex(params.x), complex(params.w))
    return complex(c1), complex(c2), complex(c3)


def lz_coefficients_array(c1, x, w):
    """Elementwise :func:`lz_coefficients` on broadcastable arrays (no validation)."""
    q = 4.0 - c1 * c1
    c2 = (c1 * c1 + q * x) / 2.0
    c3 = (c1**3 + 2.0 * q * c1 * x - c1 * q * x * x + 2.0 * q * (1.0 - np.abs(x) ** 2) * w) / 4.0
    return c1 + 0j, c2, c3


def lz_from_coefficients(c1: float, c2: complex, c3: complex) -> LZParams | None:
    """Invert :func:`lz_coefficients` for real ``c1`` in (0, 2).

    Returns ``None`` when ``c1`` is outside (0, 2) or the recovered point falls
    outside the closed bidisk (beyond a 1e-9 slack, then clipped).  When
    ``|x| = 1`` the parameter ``w`` is free and 0 is returned for it.
    """
    c1 = float(np.real(c1))
    if not 0.0 < c1 < 2.0:
        return None
    q = 4.0 - c1 * c1
    x = (2.0 * c2 - c1 * c1) / q
    if abs(x) > 1.0 + 1e-9:
        return None
    if abs(x) > 1.0:
        x = x / abs(x)
    rest = 4.0 * c3 - c1**3 - 2.0 * q * c1 * x + c1 * q * x * x
    denom = 2.0 * q * (1.0 - abs(x) ** 2)
    if denom < 1e-12:
        w = 0j
    else:
        w = rest / denom
        if abs(w) > 1.0 + 1e-9:
            return None
        if abs(w) > 1.0:
            w = w / abs(w)
    return LZParams(c1, complex(x), complex(w))


def lz_series(params: LZParams, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """``1 + c1 z + c2 z^2 + c3 z^3`` zero-padded to ``order``."""
    return TruncatedSeries([1.0, *lz_coefficients(params)], order)


def coefficients_bounded(p: TruncatedSeries, slack: float = COEFF_SLACK) -> bool:
    return bool(np.all(np.abs(p.coeffs[1:]) <= 2.0 + slack))


def fejer_real_part(p: TruncatedSeries, z: np.ndarray) -> np.ndarray:
    """Real part of the Fejer (Cesaro) mean of the partial sums of ``p`` at ``z``.

    For ``p`` in P this is the Fejer-kernel average of a positive harmonic
    function, hence positive for every ``|z| < 1``.  Plain partial sums do not
    have that property.
    """
    n = p.order
    k = np.arange(n + 1)
    weights = 1.0 - k / (n + 1.0)
    return np.polyval((p.coeffs * weights)[::-1], z).real


def polar_grid(grid: int, max_radius: float = MAX_RADIUS) -> np.ndarray:
    r = np.linspace(0.0, max_radius, max(grid, 2))[:, None]
    t = np.linspace(0.0, 2.0 * math.pi, 4 * max(grid, 2), endpoint=False)[None, :]
    return r * np.exp(1j * t)


def is_caratheodory_approx(p: TruncatedSeries, grid: int = 32) -> bool:
    """Heuristic membership test for P (diagnostic, never a proof)."""
    if p.coeffs[0] != 1:
        raise DomainError("p must satisfy p(0) = 1")
    if not coefficients_bounded(p):
        return False
    return bool(fejer_real_part(p, polar_grid(grid)).min() > -POSITIVITY_SLACK)
