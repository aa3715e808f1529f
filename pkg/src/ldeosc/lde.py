"""Linear delta expansion of the period and the PMS choice of lambda.

The true potential is interpolated by the quadratic
``V0(x) = (1 + lambda**2) (x - c)**2 / 2`` centred on the midpoint ``c`` of
the turning points (``c = 0`` for even potentials). Its reference energy
``E0 = V0(x_plus)`` puts the zeros of ``E0 - V0`` on the true turning points,
so with ``E - V = (x_plus - x)(x - x_minus) g(x)`` the perturbation ratio is
simply ``Delta(x) = g(x) / g0 - 1`` with ``g0 = (1 + lambda**2) / 2``.

The period then expands as::

    T = sum_n (2n-1)!! / (n! 2**n) (-1)**n  *  integral sqrt(2/g0) Delta**n / sqrt((x+ - x)(x - x-)) dx
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceViolation, DomainError, NoStationaryPoint
from .potential import OscillatorProblem
from .quadrature import (
    DEFAULT_SPEC,
    Factorization,
    QuadratureSpec,
    endpoint_singular_integral,
    factorize,
)

__all__ = [
    "InterpolatingPotential",
    "LdeExpansion",
    "PeriodResult",
    "series_prefactor",
    "delta_ratio",
    "period_series",
    "pms_lambda",
    "lde_period",
    "duffing_lambda_pms",
    "duffing_period_pms",
    "duffing_time_of_position",
    "duffing_position_of_time",
]


@dataclass(frozen=True)
class InterpolatingPotential:
    lam: float

    def __post_init__(self):
        if not self.lam >= 0:
            raise DomainError(f"lambda must be nonnegative, got {self.lam}")

    @property
    def stiffness(self) -> float:
        return 1.0 + self.lam**2

    def __call__(self, x, center: float = 0.0):
        return 0.5 * self.stiffness * (np.asarray(x) - center) ** 2

    def reference_energy(self, problem: OscillatorProblem) -> float:
        tp = problem.turning_points()
        return float(self(tp.x_plus, tp.center))


@dataclass(frozen=True)
class LdeExpansion:
    lam: float
    order: int
    terms: tuple[float, ...]
    delta: float = 1.0

    def __post_init__(self):
        if len(self.terms) != self.order + 1:
            raise DomainError("terms must have length order + 1")

    @property
    def value(self) -> float:
        return self.partial_sum(self.delta)

    def partial_sum(self, delta: float = 1.0) -> float:
        return float(sum(t * delta**n for n, t in enumerate(self.terms)))


@dataclass(frozen=True)
class PeriodResult:
    period: float
    frequency: float
    lambda_used: float
    order: int

    @classmethod
    def from_period(cls, period: float, lam: float, order: int) -> "PeriodResult":
        return cls(period, 2.0 * math.pi / period, lam, order)


def series_prefactor(n: int) -> float:
    """(2n-1)!! / (n! 2**n) * (-1)**n, with (-1)!! = 1."""
    return (-1) ** n * math.prod(range(2 * n - 1, 0, -2)) / (math.factorial(n) * 2**n)


def _g0(fac: Factorization, lam: float) -> float:
    # E0 - V0 in scaled units: the quadratic coefficient is divided by the energy scale
    return 0.5 * (1.0 + lam**2) * fac.length**2 / fac.energy


def delta_ratio(problem: OscillatorProblem, interp: InterpolatingPotential, x):
    """Delta(x) = (E - E0 - V + V0) / (E0 - V0), finite at the turning points."""
    fac = factorize(problem)
    y = np.asarray(x, dtype=float) / fac.length
    tp = fac.turning
    if np.any(y < tp.x_minus - 1e-12) or np.any(y > tp.x_plus + 1e-12):
        raise DomainError("x outside the oscillation interval")
    out = fac.g_at(y) / _g0(fac, interp.lam) - 1.0
    return float(out) if np.ndim(out) == 0 else out


def _max_abs_delta(fac: Factorization, lam: float, samples: int = 513) -> float:
    tp = fac.turning
    theta = np.linspace(0.0, np.pi, samples)
    y = tp.center + tp.half_width * np.cos(theta)
    return float(np.max(np.abs(fac.g_at(y) / _g0(fac, lam) - 1.0)))


def period_series(problem: OscillatorProblem, interp: InterpolatingPotential, order: int,
                  spec: QuadratureSpec = DEFAULT_SPEC) -> LdeExpansion:
    if order < 0:
        raise DomainError("order must be nonnegative")
    fac = factorize(problem)
    lam = interp.lam
    worst = _max_abs_delta(fac, lam)
    if worst >= 1.0:
        raise ConvergenceViolation(f"max |Delta| = {worst:.4g} >= 1 at lambda = {lam}")
    g0 = _g0(fac, lam)
    tp = fac.turning
    scale = math.sqrt(problem.mass) * fac.time_scale * math.sqrt(2.0 / g0)
    terms = []
    for n in range(order + 1):
        integral = endpoint_singular_integral(lambda y, n=n: (fac.g_at(y) / g0 - 1.0) ** n,
                                              tp.x_minus, tp.x_plus, spec)
        terms.append(series_prefactor(n) * scale * integral)
    return LdeExpansion(lam, order, tuple(terms))


def _truncated_period_curve(fac: Factorization, order: int, nodes: int):
    """T_order as a vectorized function of u = lambda**2 on a fixed node set.

    Gauss-Chebyshev with `nodes` points is exact for every term because the
    integrands are polynomials of degree deg(g) * order.
    """
    tp = fac.turning
    theta = (np.arange(nodes) + 0.5) * (np.pi / nodes)
    gv = fac.g_at(tp.center + tp.half_width * np.cos(theta))
    pref = np.array([series_prefactor(n) for n in range(order + 1)])
    base = fac.length**2 / fac.energy

    def curve(u):
        u = np.atleast_1d(np.asarray(u, dtype=float))
        g0 = 0.5 * (1.0 + u[:, None]) * base
        d = gv[None, :] / g0 - 1.0
        powers = d[:, :, None] ** np.arange(order + 1)
        moments = powers.mean(axis=1) * np.pi
        return np.sqrt(2.0 / g0[:, 0]) * (moments @ pref)

    return curve


def pms_lambda(problem: OscillatorProblem, order: int = 1,
               spec: QuadratureSpec = DEFAULT_SPEC, grid_points: int = 400) -> float:
    """Smallest nonnegative lambda at which the order-truncated period is stationary.

    The search runs in u = lambda**2 so that the trivial stationarity at
    lambda = 0 (the period depends on lambda**2 only) is not mistaken for a
    root. The derivative is a centred five-point finite difference.
    """
    if order < 1:
        raise DomainError("PMS needs order >= 1")
    fac = factorize(problem)
    tp = fac.turning
    y = tp.center + tp.half_width * np.cos(np.linspace(0.0, np.pi, 257))
    g_max = float(np.max(fac.g_at(y))) * fac.energy / fac.length**2
    u_hi = 100.0 * 2.0 * g_max  # lambda_hi = 10 sqrt(1 + mu A**2) for Duffing
    deg_g = max(len(fac.g) - 1, 0)
    nodes = max(spec.node_count, deg_g * order + 2)
    curve = _truncated_period_curve(fac, order, nodes)

    def deriv(u):
        u = np.asarray(u, dtype=float)
        h = 1e-3 * (1.0 + u)
        return (curve(u - 2 * h) - 8 * curve(u - h) + 8 * curve(u + h) - curve(u + 2 * h)) / (12 * h)

    grid = np.concatenate([[0.0], np.geomspace(1e-8 * u_hi, u_hi, grid_points)])
    d = deriv(grid)
    t0 = float(curve(0.0)[0])
    if abs(d[0]) <= 1e-9 * abs(t0):
        return 0.0
    sign_change = np.nonzero(np.sign(d[:-1]) * np.sign(d[1:]) <= 0)[0]
    if sign_change.size == 0:
        raise NoStationaryPoint(f"no stationary lambda in (0, {math.sqrt(u_hi):.4g}] at order {order}")
    i = sign_change[0]
    lo, hi = grid[i], grid[i + 1]
    dlo = d[i]
    for _ in range(200):
        if math.sqrt(hi) - math.sqrt(lo) <= 1e-10 * max(1.0, math.sqrt(hi)):
            break
        mid = 0.5 * (lo + hi)
        dm = float(deriv(mid)[0])
        if dm == 0.0:
            lo = hi = mid
            break
        if np.sign(dm) == np.sign(dlo):
            lo, dlo = mid, dm
        else:
            hi = mid
    return math.sqrt(0.5 * (lo + hi))


def lde_period(problem: OscillatorProblem, order: int = 1,
               spec: QuadratureSpec = DEFAULT_SPEC) -> PeriodResult:
    """Period from the order-truncated series at the PMS lambda.

    Even orders typically have no stationary point; they reuse the lambda of
    the next lower odd order.
    """
    pms_order = max(order, 1)
    try:
        lam = pms_lambda(problem, pms_order, spec)
    except NoStationaryPoint:
        if pms_order % 2:
            raise
        lam = pms_lambda(problem, pms_order - 1, spec)
    series = period_series(problem, InterpolatingPotential(lam), order, spec)
    return PeriodResult.from_period(series.value, lam, order)


# Closed forms for the Duffing oscillator at first order (unit mass).

def duffing_lambda_pms(mu: float, A: float) -> float:
    if mu < 0 or not A > 0:
        raise DomainError("need mu >= 0 and A > 0")
    return math.sqrt(3.0 * mu) * A / 2.0


def duffing_period_pms(mu: float, A: float) -> PeriodResult:
    if mu < 0 or not A > 0:
        raise DomainError("need mu >= 0 and A > 0")
    z = mu * A * A
    root = math.sqrt(4.0 + 3.0 * z)
    return PeriodResult(4.0 * math.pi / root, root / 2.0, duffing_lambda_pms(mu, A), 1)


def _phase_shift(z: float) -> float:
    # Omega t = theta - eps sin(2 theta) with theta = arccos(X/A)
    return z / (12.0 * z + 16.0)


def duffing_time_of_position(mu: float, A: float, X):
    """First-order LDE time to go from A down to X."""
    X = np.asarray(X, dtype=float)
    if np.any(np.abs(X) > A * (1 + 1e-15)):
        raise DomainError(f"|X| must not exceed A = {A}")
    z = mu * A * A
    ratio = np.clip(X / A, -1.0, 1.0)
    t = ((6 * z + 8) * np.arccos(ratio) - A * mu * X * np.sqrt(1.0 - ratio**2)) / (3 * z + 4) ** 1.5
    return float(t) if t.ndim == 0 else t


def duffing_position_of_time(mu: float, A: float, t):
    """Invert the first-order time-of-position relation.

    t is reduced modulo the PMS period and folded into [0, T/2] by
    X(T - t) = X(t). The angle theta = arccos(X/A) then solves
    theta - eps sin(2 theta) = Omega t, which is monotone because eps <= 1/12;
    bisection brackets it and Newton polishes.
    """
    res = duffing_period_pms(mu, A)
    z = mu * A * A
    eps = _phase_shift(z)
    phase = np.mod(res.frequency * np.asarray(t, dtype=float), 2.0 * np.pi)
    phase = np.where(phase > np.pi, 2.0 * np.pi - phase, phase)

    lo = np.zeros_like(phase)
    hi = np.full_like(phase, np.pi)
    for _ in range(40):
        mid = 0.5 * (lo + hi)
        below = mid - eps * np.sin(2 * mid) < phase
        lo = np.where(below, mid, lo)
        hi = np.where(below, hi, mid)
    theta = 0.5 * (lo + hi)
    for _ in range(4):
        theta = theta - (theta - eps * np.sin(2 * theta) - phase) / (1.0 - 2 * eps * np.cos(2 * theta))
    theta = np.clip(theta, 0.0, np.pi)
    X = A * np.cos(theta)
    return float(X) if X.ndim == 0 else X
