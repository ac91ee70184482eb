"""Coefficient machinery and sharp bounds for the second Hankel determinant of
logarithmic inverse coefficients over strongly convex and strongly starlike
functions of order alpha."""

__version__ = "0.1.0"

from .bounds import (
    BoundReport,
    alpha_prime,
    bound_convex,
    bound_starlike,
    extremal_p,
    verify_sharpness,
)
from .caratheodory import (
    HerglotzMixture,
    LZParams,
    herglotz_series,
    is_caratheodory_approx,
    lz_coefficients,
)
from .classes import AlphaClassSpec, ClassKind, a234_closed_form, f_from_p
from .errors import DomainError
from .functionals import (
    LogInvTriple,
    h21_log_inverse,
    inverse_coeffs,
    log_coeffs,
    log_inverse_coeffs,
)
from .optimizer import MaxResult, SearchConfig, maximize_h21, scan_alpha
from .series import TruncatedSeries, compose, log_over_lead, mul, pow_real, revert
from .ybc import YInputs, y_brute_force, y_closed_form
