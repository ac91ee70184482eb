"""Strongly convex (K_alpha) and strongly starlike (S*_alpha) functions from a
Caratheodory function ``p``.

    K_alpha:  1 + z f''/f' = p^alpha
    S*_alpha: z f'/f      = p^alpha
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .series import TruncatedSeries, pow_real


class ClassKind(str, enum.Enum):
    STRONGLY_CONVEX = "convex"
    STRONGLY_STARLIKE = "starlike"

    @classmethod
    def parse(cls, value: str | ClassKind) -> ClassKind:
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise DomainError(f"unknown class kind {value!r}; expected 'convex' or 'starlike'") from None


@dataclass(frozen=True)
class AlphaClassSpec:
    kind: ClassKind
    alpha: float

    def __post_init__(self):
        object.__setattr__(self, "kind", ClassKind.parse(self.kind))
        if not (0.0 < self.alpha <= 1.0):
            raise DomainError(f"alpha must lie in (0, 1], got {self.alpha}")

    @property
    def convex(self) -> bool:
        return self.kind is ClassKind.STRONGLY_CONVEX


def f_from_p(spec: AlphaClassSpec, p: TruncatedSeries) -> TruncatedSeries:
    """Solve the defining relation order by order; result has order ``p.order + 1``."""
    if p.coeffs[0] != 1:
        raise DomainError("p must satisfy p(0) = 1")
    P = pow_real(p, spec.alpha).coeffs
    n = p.order
    f = np.zeros(n + 2, dtype=complex)
    f[1] = 1.0
    if spec.convex:
        # d = f', with m d_m = sum_{k=1}^m P_k d_{m-k}
        d = np.zeros(n + 1, dtype=complex)
        d[0] = 1.0
        for m in range(1, n + 1):
            d[m] = np.dot(P[1 : m + 1], d[m - 1 :: -1][:m]) / m
        f[1:] = d / np.arange(1, n + 2)
    else:
        # (m - 1) f_m = sum_{j=1}^{m-1} f_j P_{m-j}
        for m in range(2, n + 2):
            f[m] = np.dot(f[1:m], P[m - 1 : 0 : -1]) / (m - 1)
    return TruncatedSeries(f)


def a234_closed_form(spec: AlphaClassSpec, c1: complex, c2: complex, c3: complex):
    """``(a2, a3, a4)`` as polynomials in the first three coefficients of ``p``.

    Works elementwise on numpy arrays as well as on scalars.
    """
    al = spec.alpha
    core3 = 2.0 * c2 + (3.0 * al - 1.0) * c1**2
    core4 = 12.0 * c3 + 6.0 * (5.0 * al - 2.0) * c1 * c2 + (17.0 * al**2 - 15.0 * al + 4.0) * c1**3
    if spec.convex:
        return al * c1 / 2.0, al / 12.0 * core3, al / 144.0 * core4
    return al * c1, al / 4.0 * core3, al / 36.0 * core4
