import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from hankel_loginv.caratheodory import (
    HerglotzMixture,
    LZParams,
    coefficients_bounded,
    herglotz_series,
    is_caratheodory_approx,
    lz_coefficients,
    lz_from_coefficients,
    lz_series,
)
from hankel_loginv.errors import DomainError
from hankel_loginv.series import TruncatedSeries

from helpers import random_lz, random_mixture

disk = st.builds(lambda r, t: math.sqrt(r) * complex(math.cos(t), math.sin(t)),
                 st.floats(0, 1), st.floats(0, 2 * math.pi))
lz_st = st.builds(LZParams, st.floats(0, 2), disk, disk)


class TestHerglotz:
    def test_single_atom(self):
        p = herglotz_series(HerglotzMixture.from_atoms([(1.0, 0.0)]), 10)
        assert np.allclose(p.coeffs, [1] + [2] * 10, atol=1e-15)

    def test_antipodal_pair(self):
        p = herglotz_series(HerglotzMixture.from_atoms([(0.5, 0.0), (0.5, math.pi)]), 10)
        assert np.allclose(p.coeffs[:4], [1, 0, 2, 0], atol=1e-15)

    def test_quarter_turn(self):
        p = herglotz_series(HerglotzMixture.from_atoms([(1.0, math.pi / 2)]), 8)
        assert np.allclose(p.coeffs[1:], [2 * 1j**n for n in range(1, 9)], atol=1e-14)

    @pytest.mark.parametrize("weights", [(0.5, 0.6), (-0.1, 1.1), (1.0, float("nan"))])
    def test_invalid_weights(self, weights):
        with pytest.raises(DomainError):
            HerglotzMixture(weights, (0.0, 1.0))

    def test_coefficients_bounded_by_two(self):
        rng = np.random.default_rng(0)
        for _ in range(500):
            p = herglotz_series(random_mixture(rng, 6), 12)
            assert np.all(np.abs(p.coeffs[1:]) <= 2 + 1e-12)


class TestLZ:
    def test_boundary_c1(self):
        for x, w in [(0, 0), (0.3 + 0.4j, -1), (1j, 0.5)]:
            assert np.allclose(lz_coefficients(LZParams(2.0, x, w)), (2, 2, 2))

    def test_even_extremal(self):
        assert np.allclose(lz_coefficients(LZParams(0.0, 1.0, 0.0)), (0, 2, 0))

    def test_pure_w(self):
        assert np.allclose(lz_coefficients(LZParams(0.0, 0.0, 1.0)), (0, 0, 2))

    @pytest.mark.parametrize("args", [(-0.1, 0, 0), (2.1, 0, 0), (1, 1.01, 0), (1, 0, 1j * 1.5)])
    def test_out_of_range(self, args):
        with pytest.raises(DomainError):
            LZParams(*args)

    @given(lz_st)
    def test_admissible(self, params):
        c1, c2, c3 = lz_coefficients(params)
        assert abs(c2) <= 2 + 1e-12 and abs(c3) <= 2 + 1e-12

    @given(lz_st)
    def test_inverse_map(self, params):
        if not 1e-3 < params.c1 < 2 - 1e-3 or abs(params.x) > 1 - 1e-6:
            return
        back = lz_from_coefficients(*lz_coefficients(params))
        assert back is not None
        assert abs(back.x - params.x) < 1e-9 and abs(back.w - params.w) < 1e-6

    def test_mixtures_solve_into_bidisk(self):
        """Brute force over one- and two-atom mixtures: LZ parameters always exist.

        Rotating so that c1 >= 0 is the normalization the parametrization assumes.
        """
        angles = np.linspace(0, 2 * math.pi, 37)
        weights = np.linspace(0, 1, 11)
        count = 0
        for lam in weights:
            for t1 in angles:
                for t2 in angles[::3]:
                    m = HerglotzMixture((lam, 1 - lam), (t1, t2))
                    c = herglotz_series(m, 3).coeffs
                    if abs(c[1]) >= 2 - 1e-9 or abs(c[1]) <= 1e-9:
                        continue
                    rot = np.exp(-1j * np.angle(c[1]))
                    c1, c2, c3 = c[1] * rot, c[2] * rot**2, c[3] * rot**3
                    assert lz_from_coefficients(c1.real, c2, c3) is not None
                    count += 1
        assert count > 1000


class TestMembership:
    def test_cayley(self):
        assert is_caratheodory_approx(TruncatedSeries([1] + [2] * 10))

    def test_large_coefficient(self):
        assert not is_caratheodory_approx(TruncatedSeries([1, 3], 10))

    def test_negative_real_part(self):
        # |c_n| <= 2, but Re(1 + 2z) < 0 near z = -1
        assert not is_caratheodory_approx(TruncatedSeries([1, 2], 6))

    def test_lz_cubic(self):
        rng = np.random.default_rng(1)
        for _ in range(200):
            params = random_lz(rng)
            assert coefficients_bounded(lz_series(params, 10))
            # the unpadded cubic is a truncation of a genuine member of P
            assert is_caratheodory_approx(lz_series(params, 3))

    def test_random_mixtures_pass(self):
        rng = np.random.default_rng(2)
        for _ in range(100):
            assert is_caratheodory_approx(herglotz_series(random_mixture(rng), 10))

    def test_precondition(self):
        with pytest.raises(DomainError):
            is_caratheodory_approx(TruncatedSeries([2, 1]))
