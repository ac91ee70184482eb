"""Coefficient functionals of a normalized ``f = z + a2 z^2 + ...``.

Every functional is available two ways: the series pipeline (reversion and
logarithm of truncated series) and the explicit polynomial in ``a2, a3, a4``.
The Hankel value stays complex; take ``abs`` at comparison sites.
"""

from __future__ import annotations

from math import comb
from typing import NamedTuple

import numpy as np

from .errors import DomainError
from .series import TruncatedSeries, log_over_lead, revert


class LogInvTriple(NamedTuple):
    gamma1: complex
    gamma2: complex
    gamma3: complex


def _a234(f: TruncatedSeries) -> tuple[complex, complex, complex]:
    if f.order < 4:
        raise DomainError("need at least order 4 to read a2, a3, a4")
    if f.coeffs[0] != 0 or f.coeffs[1] != 1:
        raise DomainError("f must be normalized: f(0) = 0, f'(0) = 1")
    return f[2], f[3], f[4]


def log_coeffs(f: TruncatedSeries, n: int) -> list[complex]:
    """``gamma_1 .. gamma_n`` with ``log(f(z)/z) = 2 sum gamma_k z^k``."""
    if n < 0 or n > f.order - 1:
        raise DomainError(f"can extract at most {f.order - 1} logarithmic coefficients, asked for {n}")
    L = log_over_lead(f)
    return [L[k] / 2.0 for k in range(1, n + 1)]


def log_coeffs_closed_form(a2, a3, a4) -> tuple[complex, complex, complex]:
    return a2 / 2.0, (a3 - a2**2 / 2.0) / 2.0, (a4 - a2 * a3 + a2**3 / 3.0) / 2.0


def inverse_coeffs_from_a(a2, a3, a4):
    return -a2, -a3 + 2.0 * a2**2, -a4 + 5.0 * a2 * a3 - 5.0 * a2**3


def inverse_coeffs(f: TruncatedSeries) -> tuple[complex, complex, complex]:
    """``(A2, A3, A4)`` of ``f^{-1}(w) = w + sum A_n w^n``."""
    return inverse_coeffs_from_a(*_a234(f))


def log_inverse_from_a(a2, a3, a4) -> LogInvTriple:
    return LogInvTriple(
        -a2 / 2.0,
        -a3 / 2.0 + 0.75 * a2**2,
        -a4 / 2.0 + 2.0 * a2 * a3 - 5.0 / 3.0 * a2**3,
    )


def log_inverse_coeffs(f: TruncatedSeries) -> LogInvTriple:
    return log_inverse_from_a(*_a234(f))


def log_inverse_coeffs_series(f: TruncatedSeries) -> LogInvTriple:
    """Same as :func:`log_inverse_coeffs` but through ``revert`` and ``log``."""
    return LogInvTriple(*log_coeffs(revert(f), 3))


def hankel_from_gammas(g: LogInvTriple) -> complex:
    return g.gamma1 * g.gamma3 - g.gamma2**2


def h21_polynomial(a2, a3, a4):
    """``(13 a2^4 - 12 a2^2 a3 - 12 a3^2 + 12 a2 a4) / 48``; vectorizes over arrays."""
    return (13 * a2**4 - 12 * a2**2 * a3 - 12 * a3**2 + 12 * a2 * a4) / 48


def h21_log_inverse(f: TruncatedSeries) -> complex:
    """Second Hankel determinant ``Gamma1 Gamma3 - Gamma2^2`` of the inverse-log sequence."""
    return complex(hankel_from_gammas(log_inverse_coeffs(f)))


def log_inverse_sharp_bound(n: int) -> float:
    """Sharp bound ``binom(2n, n) / (2n)`` for ``|Gamma_n|`` over class S."""
    return comb(2 * n, n) / (2.0 * n)


def inverse_sharp_bound(n: int) -> float:
    """Lowner's bound ``(2n)! / (n! (n+1)!)`` for ``|A_n|`` over class S."""
    return comb(2 * n, n) / (n + 1.0)


def rotate(f: TruncatedSeries, theta: float) -> TruncatedSeries:
    """``e^{-i theta} f(e^{i theta} z)``: multiplies ``a_n`` by ``e^{i (n-1) theta}``."""
    n = np.arange(f.order + 1)
    return TruncatedSeries(f.coeffs * np.exp(1j * (n - 1) * theta))
