"""Direct integration of m x'' + f(x) = 0 with fixed-step RK4.

The step is tied to an estimate of the period so that convergence orders
are reproducible; crossing times come from cubic Hermite interpolation of
the bracketing samples, using the exact derivative available at each sample.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial as P

from .errors import DomainError, LdeOscError, StepUnderflow
from .lde import duffing_period_pms, lde_period
from .potential import OscillatorProblem, eval_force, eval_potential

__all__ = [
    "Trajectory",
    "period_estimate",
    "integrate",
    "energy_drift",
    "interpolate",
    "zero_crossings",
    "return_times",
]


@dataclass(frozen=True)
class Trajectory:
    times: np.ndarray
    positions: np.ndarray
    velocities: np.ndarray
    accelerations: np.ndarray
    step: float

    def __post_init__(self):
        n = len(self.times)
        if not (len(self.positions) == len(self.velocities) == len(self.accelerations) == n):
            raise DomainError("trajectory arrays must have equal lengths")
        if n > 1 and np.any(np.diff(self.times) <= 0):
            raise DomainError("trajectory times must be strictly increasing")

    def __len__(self):
        return len(self.times)


def period_estimate(problem: OscillatorProblem) -> float:
    """Rough period used only to set the step size."""
    mu = problem.potential.duffing_mu()
    if mu is not None and mu >= 0:
        return duffing_period_pms(mu, problem.amplitude).period * math.sqrt(problem.mass)
    try:
        # order-0 period at the first-order PMS lambda
        return lde_period(problem, order=0).period
    except LdeOscError:
        from .quadrature import period_oracle
        return period_oracle(problem)


def integrate(problem: OscillatorProblem, t_end: float,
              steps_per_period_estimate: int = 1000) -> Trajectory:
    """Classical RK4 from x(0) = A, v(0) = 0 up to t_end.

    The nominal step is T_est / steps_per_period_estimate; it is shrunk
    slightly so that an integer number of steps lands exactly on t_end.
    """
    if not t_end > 0:
        raise DomainError("t_end must be positive")
    if steps_per_period_estimate < 100:
        raise DomainError("steps_per_period_estimate must be at least 100")
    h = period_estimate(problem) / steps_per_period_estimate
    n = max(1, math.ceil(t_end / h - 1e-9))
    h = t_end / n
    if h < 1e-15:
        raise StepUnderflow(f"step {h:g} too small")

    fc = [c / problem.mass for c in problem.potential.force_coefficients]

    def accel(x):
        acc = 0.0
        for c in reversed(fc):
            acc = acc * x + c
        return -acc

    xs = np.empty(n + 1)
    vs = np.empty(n + 1)
    x, v = float(problem.amplitude), 0.0
    xs[0], vs[0] = x, v
    half = 0.5 * h
    for i in range(1, n + 1):
        k1x, k1v = v, accel(x)
        k2x, k2v = v + half * k1v, accel(x + half * k1x)
        k3x, k3v = v + half * k2v, accel(x + half * k2x)
        k4x, k4v = v + h * k3v, accel(x + h * k3x)
        x += h / 6.0 * (k1x + 2 * k2x + 2 * k3x + k4x)
        v += h / 6.0 * (k1v + 2 * k2v + 2 * k3v + k4v)
        xs[i], vs[i] = x, v
    times = np.arange(n + 1) * h
    times[-1] = t_end
    acc = -eval_force(problem.potential, xs) / problem.mass
    return Trajectory(times, xs, vs, acc, h)


def energy_drift(problem: OscillatorProblem, traj: Trajectory) -> float:
    """max |E(t) - E(0)| / |E(0)| over the samples."""
    if len(traj) < 2:
        return 0.0
    e = 0.5 * problem.mass * traj.velocities**2 + eval_potential(problem.potential, traj.positions)
    return float(np.max(np.abs(e - e[0])) / abs(e[0]))


def _hermite(y0, y1, d0, d1, h, s):
    # cubic Hermite on [0, 1] with derivatives scaled by the interval length
    s2, s3 = s * s, s * s * s
    return ((2 * s3 - 3 * s2 + 1) * y0 + (s3 - 2 * s2 + s) * h * d0
            + (-2 * s3 + 3 * s2) * y1 + (s3 - s2) * h * d1)


def interpolate(traj: Trajectory, t):
    """Position at arbitrary times inside the trajectory span."""
    t = np.asarray(t, dtype=float)
    if np.any(t < traj.times[0] - 1e-12) or np.any(t > traj.times[-1] + 1e-12):
        raise DomainError("interpolation time outside the trajectory")
    i = np.clip(np.searchsorted(traj.times, t, side="right") - 1, 0, len(traj) - 2)
    h = traj.times[i + 1] - traj.times[i]
    s = (t - traj.times[i]) / h
    out = _hermite(traj.positions[i], traj.positions[i + 1],
                   traj.velocities[i], traj.velocities[i + 1], h, s)
    return float(out) if out.ndim == 0 else out


def _cubic_root(y0, y1, d0, d1, h):
    """Root of the Hermite cubic in [0, 1], given y0 and y1 of opposite sign."""
    lo, hi = 0.0, 1.0
    f_lo = y0
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        fm = _hermite(y0, y1, d0, d1, h, mid)
        if (fm > 0) == (f_lo > 0):
            lo, f_lo = mid, fm
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _crossings(times, y, dy, direction):
    out = []
    for i in range(len(times) - 1):
        a, b = y[i], y[i + 1]
        if direction < 0 and not (a > 0 >= b):
            continue
        if direction > 0 and not (a < 0 <= b):
            continue
        if direction == 0 and not (a * b < 0 or (b == 0 and a != 0)):
            continue
        h = times[i + 1] - times[i]
        out.append(times[i] + h * _cubic_root(a, b, dy[i], dy[i + 1], h))
    return np.array(out)


def zero_crossings(traj: Trajectory) -> np.ndarray:
    """Times at which x changes sign."""
    return _crossings(traj.times, traj.positions, traj.velocities, 0)


def return_times(traj: Trajectory) -> np.ndarray:
    """Times of successive maxima of x (v crossing zero from above), excluding t = 0."""
    return _crossings(traj.times[1:], traj.velocities[1:], traj.accelerations[1:], -1)
