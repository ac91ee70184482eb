"""Random generators shared by the test modules."""

import math

import numpy as np

from hankel_loginv.caratheodory import HerglotzMixture, LZParams, herglotz_series
from hankel_loginv.classes import AlphaClassSpec, ClassKind, f_from_p
from hankel_loginv.series import TruncatedSeries


def random_disk(rng, size=None):
    """Uniform points in the closed unit disk."""
    r = np.sqrt(rng.uniform(0.0, 1.0, size))
    return r * np.exp(2j * math.pi * rng.uniform(0.0, 1.0, size))


def random_lz(rng) -> LZParams:
    return LZParams(float(rng.uniform(0.0, 2.0)), complex(random_disk(rng)), complex(random_disk(rng)))


def random_spec(rng) -> AlphaClassSpec:
    kind = ClassKind.STRONGLY_CONVEX if rng.uniform() < 0.5 else ClassKind.STRONGLY_STARLIKE
    return AlphaClassSpec(kind, float(rng.uniform(1e-3, 1.0)))


def random_mixture(rng, max_atoms=4) -> HerglotzMixture:
    k = int(rng.integers(1, max_atoms + 1))
    w = rng.dirichlet(np.ones(k))
    w = w / w.sum()
    return HerglotzMixture(tuple(w), tuple(rng.uniform(0.0, 2.0 * math.pi, k)))


def random_bounded_normalized(rng, order=10) -> TruncatedSeries:
    """``z + sum a_n z^n`` with ``|a_n| <= 2`` (uniform modulus, uniform phase)."""
    m = rng.uniform(0.0, 2.0, order - 1)
    ph = rng.uniform(0.0, 2.0 * math.pi, order - 1)
    return TruncatedSeries([0.0, 1.0, *(m * np.exp(1j * ph))])


def random_class_member(rng, order=10) -> TruncatedSeries:
    """A member of K_alpha or S*_alpha, built from a Herglotz mixture ``p``."""
    spec = random_spec(rng)
    return f_from_p(spec, herglotz_series(random_mixture(rng), order - 1))
