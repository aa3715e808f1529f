"""Accurate periodic solutions of conservative oscillators by the linear delta expansion."""

from .errors import (
    ConvergenceViolation,
    DomainError,
    FactorizationFailure,
    LdeOscError,
    NoConvergence,
    NoOscillation,
    NoStationaryPoint,
    StepUnderflow,
)
from .potential import (
    OscillatorProblem,
    PolynomialPotential,
    TurningPoints,
    energy_at_rest,
    eval_force,
    eval_potential,
    turning_points,
)
from .quadrature import (
    QuadratureSpec,
    endpoint_singular_integral,
    period_oracle,
    time_oracle,
)
from .lde import (
    InterpolatingPotential,
    LdeExpansion,
    PeriodResult,
    delta_ratio,
    duffing_lambda_pms,
    duffing_period_pms,
    duffing_position_of_time,
    duffing_time_of_position,
    lde_period,
    period_series,
    pms_lambda,
)
from .exact import (
    EllipticParameters,
    asymptotic_c0_ratio,
    cn_fourier,
    duffing_exact_coefficients,
    duffing_exact_period,
    duffing_exact_solution,
    elliptic_k,
    harmonic_ratio,
    jacobi_cn,
    nome,
)
from .fourier import (
    FourierSpectrum,
    duffing_pms_coefficient_numeric,
    duffing_pms_coefficients_closed,
    lp_coefficients,
    small_mu_series,
    synthesize,
)
from .ode import Trajectory, energy_drift, integrate

__version__ = "0.1.0"
