"""Sharp bounds for |Gamma1 Gamma3 - Gamma2^2| over K_alpha and S*_alpha,
their breakpoint constants, and the functions attaining them."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

from scipy.optimize import bisect

from .caratheodory import HerglotzMixture, herglotz_series
from .classes import AlphaClassSpec, ClassKind, f_from_p
from .errors import DomainError
from .functionals import h21_log_inverse
from .series import DEFAULT_ORDER, TruncatedSeries

CONVEX_BREAK = 1.0 / 3.0
STARLIKE_BREAK = 1.0 / 5.0

CONVEX_FIRST_BRANCH_NOTE = (
    "extremal p = (1+z^2)/(1-z^2); the literature's p = (1+z)/(1-z) only "
    "reaches alpha^2 (2+alpha^2)/144 < alpha^2/36"
)


def _check_alpha(alpha: float) -> float:
    alpha = float(alpha)
    if not (0.0 < alpha <= 1.0):
        raise DomainError(f"alpha must lie in (0, 1], got {alpha}")
    return alpha


def alpha_prime_quartic(alpha: float) -> float:
    return 44.0 + 60.0 * alpha + 155.0 * alpha**2 - 1050.0 * alpha**3 - 1225.0 * alpha**4


@lru_cache(maxsize=None)
def alpha_prime() -> float:
    """Root in (0, 1) of the quartic where the two upper starlike branches meet."""
    return bisect(alpha_prime_quartic, 0.3, 0.5, xtol=1e-15, maxiter=200)


# individual branch formulas, exposed for continuity checks


def convex_branch1(alpha: float) -> float:
    return alpha**2 / 36.0


def convex_branch2(alpha: float) -> float:
    return alpha**2 * (17.0 + 18.0 * alpha + 13.0 * alpha**2) / (144.0 * (4.0 + 6.0 * alpha + alpha**2))


def starlike_branch1(alpha: float) -> float:
    return alpha**2 / 4.0


def starlike_branch2(alpha: float) -> float:
    return alpha**2 * (2.0 + 5.0 * alpha + 15.0 * alpha**2) / (7.0 + 30.0 * alpha + 35.0 * alpha**2)


def starlike_branch3(alpha: float) -> float:
    return alpha**2 * (4.0 + 35.0 * alpha**2) / 36.0


def bound_convex(alpha: float) -> tuple[float, str]:
    alpha = _check_alpha(alpha)
    if alpha <= CONVEX_BREAK:
        return convex_branch1(alpha), "branch1"
    return convex_branch2(alpha), "branch2"


def bound_starlike(alpha: float) -> tuple[float, str]:
    alpha = _check_alpha(alpha)
    if alpha < STARLIKE_BREAK:
        return starlike_branch1(alpha), "branch1"
    if alpha <= alpha_prime():
        return starlike_branch2(alpha), "branch2"
    return starlike_branch3(alpha), "branch3"


def bound(spec: AlphaClassSpec) -> tuple[float, str]:
    return bound_convex(spec.alpha) if spec.convex else bound_starlike(spec.alpha)


# breakpoint constants


def t0(alpha: float) -> float:
    return 4.0 * (3.0 * alpha - 1.0) / (4.0 + 6.0 * alpha + alpha**2)


def s0(alpha: float) -> float:
    return 12.0 * (5.0 * alpha - 1.0) / (7.0 + 30.0 * alpha + 35.0 * alpha**2)


def u2(alpha: float) -> float:
    """Positive root of the convex case-split quadratic (squared threshold on c)."""
    disc = 52 * alpha**4 + 72 * alpha**3 + 217 * alpha**2 + 144 * alpha + 64
    return 4.0 * (-(4 * alpha**2 + 3 * alpha + 8) + math.sqrt(disc)) / (3 * alpha**3 + 4 * alpha**2 + 12 * alpha + 8)


def t2(alpha: float) -> float:
    """Positive root of the starlike case-split quadratic (squared threshold on c)."""
    disc = 4 + 20 * alpha + 120 * alpha**2 + 175 * alpha**3 + 525 * alpha**4
    return 12.0 * (-(4 + 5 * alpha + 35 * alpha**2) + 2.0 * math.sqrt(disc)) / (
        8 + 35 * alpha + 70 * alpha**2 + 175 * alpha**3
    )


def branch_constants(spec: AlphaClassSpec, branch: str) -> dict[str, float]:
    a = spec.alpha
    if spec.convex:
        out = {"u2": u2(a)}
        if branch == "branch2":
            out.update(t0=t0(a), tau=math.sqrt(t0(a)))
        return out
    out = {"t2": t2(a)}
    if branch == "branch2":
        out.update(s0=s0(a), zeta=math.sqrt(s0(a)))
    if branch != "branch1":
        out["alpha_prime"] = alpha_prime()
    return out


def _symmetric_pair(half_odd: float, order: int) -> TruncatedSeries:
    """``(1 - half_odd z + z^2)/(1 - z^2)`` as a two-atom mixture at angles 0 and pi.

    Odd coefficients are ``-half_odd``, even ones 2.
    """
    lam = (2.0 - half_odd) / 4.0
    p = herglotz_series(HerglotzMixture((lam, 1.0 - lam), (0.0, math.pi)), order)
    # the atom at pi leaves ~1e-16 imaginary parts; the exact coefficients are real
    return TruncatedSeries(p.coeffs.real)


def extremal_p(spec: AlphaClassSpec, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    a = spec.alpha
    _, branch = bound(spec)
    if spec.convex:
        if branch == "branch1":
            return _symmetric_pair(0.0, order)
        return _symmetric_pair(math.sqrt(t0(a)), order)
    if branch == "branch1":
        return _symmetric_pair(0.0, order)
    if branch == "branch2":
        return _symmetric_pair(math.sqrt(max(s0(a), 0.0)), order)
    return herglotz_series(HerglotzMixture((1.0,), (0.0,)), order)


@dataclass
class BoundReport:
    spec: AlphaClassSpec
    branch: str
    bound: float
    constants: dict[str, float]
    extremal_p: TruncatedSeries
    attained: float
    gap: float
    tol: float = 1e-9
    numeric_max: float | None = None
    margin: float | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def sharp(self) -> bool:
        return abs(self.gap) <= self.tol

    @property
    def passed(self) -> bool:
        return self.sharp


def verify_sharpness(spec: AlphaClassSpec, tol: float = 1e-9) -> BoundReport:
    """Evaluate the functional at the extremal function and compare with the bound.

    A gap larger than ``tol`` is reported through ``report.sharp``, not raised.
    """
    if not tol > 0:
        raise DomainError("tol must be positive")
    value, branch = bound(spec)
    p = extremal_p(spec)
    attained = abs(h21_log_inverse(f_from_p(spec, p)))
    notes = []
    if spec.kind is ClassKind.STRONGLY_CONVEX and branch == "branch1":
        notes.append(CONVEX_FIRST_BRANCH_NOTE)
    return BoundReport(
        spec=spec,
        branch=branch,
        bound=value,
        constants=branch_constants(spec, branch),
        extremal_p=p,
        attained=attained,
        gap=value - attained,
        tol=tol,
        notes=notes,
    )
