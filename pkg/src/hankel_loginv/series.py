"""Truncated complex power series.

A :class:`TruncatedSeries` holds ``c_0 .. c_N`` of ``sum c_k z^k`` and every
operation here is exact for the retained orders (up to floating point).  The
coefficient recursions are the textbook ones::

    log g:  n L_n = n g_n - sum_{k=1}^{n-1} k L_k g_{n-k}      (g_0 = 1)
    exp L:  n E_n = sum_{k=1}^{n} k L_k E_{n-k}                (L_0 = 0)

Reversion is done by order-by-order coefficient matching.
"""

from __future__ import annotations

import math
from typing import Iterable

import numpy as np

from .errors import DomainError

DEFAULT_ORDER = 10


class TruncatedSeries:
    """Coefficients ``c_0 .. c_N`` of a power series truncated at order N.

    The coefficient array is read-only; all operations return new series.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[complex], order: int | None = None):
        c = np.asarray(list(coeffs), dtype=complex)
        if order is not None:
            if order < 0:
                raise DomainError(f"order must be non-negative, got {order}")
            if c.size > order + 1:
                c = c[: order + 1]
            elif c.size < order + 1:
                c = np.concatenate([c, np.zeros(order + 1 - c.size, dtype=complex)])
        if c.size == 0:
            raise DomainError("a series needs at least a constant term")
        if not np.all(np.isfinite(c)):
            raise DomainError("series coefficients must be finite")
        c.setflags(write=False)
        self.coeffs = c

    @property
    def order(self) -> int:
        return self.coeffs.size - 1

    def __getitem__(self, k: int) -> complex:
        return complex(self.coeffs[k])

    def __len__(self) -> int:
        return self.coeffs.size

    def __repr__(self) -> str:
        return f"TruncatedSeries({np.array2string(self.coeffs, precision=6)}, order={self.order})"

    def _check_same_order(self, other: TruncatedSeries) -> None:
        if self.order != other.order:
            raise DomainError(f"order mismatch: {self.order} != {other.order}")

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        self._check_same_order(other)
        return TruncatedSeries(self.coeffs + other.coeffs)

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        self._check_same_order(other)
        return TruncatedSeries(self.coeffs - other.coeffs)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return mul(self, other)
        return TruncatedSeries(self.coeffs * complex(other))

    __rmul__ = __mul__

    def truncate(self, order: int) -> TruncatedSeries:
        return TruncatedSeries(self.coeffs, order)

    def shift(self, k: int) -> TruncatedSeries:
        """Multiply by ``z**k`` keeping the order (negative k divides, dropping low terms)."""
        if k >= 0:
            return TruncatedSeries(np.concatenate([np.zeros(k, complex), self.coeffs]), self.order)
        return TruncatedSeries(self.coeffs[-k:], self.order + k)

    def derivative(self) -> TruncatedSeries:
        n = np.arange(1, self.coeffs.size)
        if n.size == 0:
            return TruncatedSeries([0.0])
        return TruncatedSeries(self.coeffs[1:] * n)

    def __call__(self, z):
        """Evaluate the partial sum at ``z`` (scalar or array)."""
        return np.polyval(self.coeffs[::-1], z)

    def allclose(self, other: TruncatedSeries, atol: float = 1e-12) -> bool:
        return self.order == other.order and bool(np.all(np.abs(self.coeffs - other.coeffs) <= atol))


def constant(value: complex, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    return TruncatedSeries([value], order)


def identity(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """The series ``z``."""
    return TruncatedSeries([0.0, 1.0], order)


def koebe(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """``z/(1-z)^2``, with ``a_n = n``."""
    return TruncatedSeries(np.arange(order + 1, dtype=float), order)


def mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    a._check_same_order(b)
    return TruncatedSeries(np.convolve(a.coeffs, b.coeffs)[: a.order + 1])


def compose(outer: TruncatedSeries, inner: TruncatedSeries) -> TruncatedSeries:
    """Coefficients of ``outer(inner(z))``; requires ``inner(0) == 0``."""
    outer._check_same_order(inner)
    if inner.coeffs[0] != 0:
        raise DomainError("inner series must have zero constant term")
    n = outer.order
    out = np.zeros(n + 1, dtype=complex)
    for k in range(n, -1, -1):
        out = np.convolve(out, inner.coeffs)[: n + 1]
        out[0] += outer.coeffs[k]
    return TruncatedSeries(out)


def _check_normalized(f: TruncatedSeries) -> None:
    if f.order < 1 or f.coeffs[0] != 0 or f.coeffs[1] != 1:
        raise DomainError("series must be normalized: c0 = 0 and c1 = 1")


def revert(f: TruncatedSeries) -> TruncatedSeries:
    """Compositional inverse ``g`` with ``f(g(w)) = w`` to order N."""
    _check_normalized(f)
    n = f.order
    g = np.zeros(n + 1, dtype=complex)
    g[1] = 1.0
    for k in range(2, n + 1):
        # f(g) has w^k coefficient g_k + (terms in g_2..g_{k-1}); cancel the latter.
        h = compose(f, TruncatedSeries(g))
        g[k] = -h[k]
    return TruncatedSeries(g)


def log_series(g: TruncatedSeries) -> TruncatedSeries:
    """``log g`` for a series with ``g(0) == 1``; result has zero constant term."""
    if g.coeffs[0] != 1:
        raise DomainError("log needs constant term 1")
    c = g.coeffs
    n = g.order
    L = np.zeros(n + 1, dtype=complex)
    for m in range(1, n + 1):
        acc = m * c[m]
        for k in range(1, m):
            acc -= k * L[k] * c[m - k]
        L[m] = acc / m
    return TruncatedSeries(L)


def exp_series(L: TruncatedSeries) -> TruncatedSeries:
    """``exp L`` for a series with zero constant term."""
    if L.coeffs[0] != 0:
        raise DomainError("exp needs zero constant term")
    c = L.coeffs
    n = L.order
    E = np.zeros(n + 1, dtype=complex)
    E[0] = 1.0
    for m in range(1, n + 1):
        acc = 0j
        for k in range(1, m + 1):
            acc += k * c[k] * E[m - k]
        E[m] = acc / m
    return TruncatedSeries(E)


def log_over_lead(f: TruncatedSeries) -> TruncatedSeries:
    """Series of ``log(f(z)/z)``, order ``N - 1``."""
    _check_normalized(f)
    return log_series(f.shift(-1))


def pow_real(p: TruncatedSeries, alpha: float) -> TruncatedSeries:
    """``p**alpha`` as ``exp(alpha * log p)``; requires ``p(0) == 1``."""
    if p.coeffs[0] != 1:
        raise DomainError("pow_real needs constant term 1")
    if not math.isfinite(alpha):
        raise DomainError("exponent must be finite")
    return exp_series(log_series(p) * float(alpha))
