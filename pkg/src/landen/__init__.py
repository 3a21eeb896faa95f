"""Definite integrals by iterating Landen transformations.

Quadratic rational Landen map, the arithmetic-geometric mean, the degree-6
denominator iteration, convergence analysis and independent quadrature
checks.
"""

from .agm_elliptic import (
    AgmPair,
    EllipticParams,
    agm,
    agm_step,
    agm_trace,
    elliptic_g,
    elliptic_g_quadrature,
    elliptic_k,
    lemniscate_check,
)
from .convergence import (
    ConvergenceParams,
    ReducedState,
    closed_form_x,
    collapsed_step,
    convergence_order,
    error_bound,
    params_from,
    reduced_step,
    to_reduced,
)
from .degree6 import Degree6Denominator, iterate6, step6
from .errors import (
    DegenerateInputError,
    InsufficientDataError,
    InvalidInputError,
    LandenError,
    NoConvergenceError,
    QuadratureFailureError,
    ToleranceNotMetError,
)
from .quad_landen import (
    IterationTrace,
    Quadratic,
    TraceRow,
    discriminant,
    evaluate_by_iteration,
    integral_value,
    iterate,
    landen_step,
)
from .quadrature import (
    QuadratureResult,
    c_integral,
    integrate_rational_line,
    integrate_trig_form,
    s_integral,
)
from .scaling import (
    ScalingCoefficients,
    next_quadratic_via_normalization,
    scaling_from,
    u_poly,
    v_poly,
    verify_polynomial_identity,
)

__version__ = "0.1.0"
