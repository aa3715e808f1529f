"""Energy integrals with inverse square-root endpoint singularities.

Everything here rests on one substitution: on ``[x_minus, x_plus]`` write
``x = c + r cos(theta)``. Then ``dx / sqrt((x_plus - x)(x - x_minus)) = dtheta``
and the singular integral becomes a smooth integral over an angle, which a
midpoint sum at Chebyshev angles evaluates with spectral accuracy.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np
from numpy.polynomial import polynomial as P

from .errors import DomainError, FactorizationFailure, NoConvergence
from .potential import OscillatorProblem, PolynomialPotential, TurningPoints

__all__ = [
    "QuadratureSpec",
    "Factorization",
    "endpoint_singular_integral",
    "partial_singular_integral",
    "factorize",
    "period_oracle",
    "time_oracle",
]

MAX_DOUBLINGS = 16


@dataclass(frozen=True)
class QuadratureSpec:
    node_count: int = 64
    refinement_tolerance: float = 1e-12

    def __post_init__(self):
        if self.node_count < 8:
            raise DomainError("node_count must be at least 8")
        if not self.refinement_tolerance > 0:
            raise DomainError("refinement_tolerance must be positive")


DEFAULT_SPEC = QuadratureSpec()


def _refine(rule: Callable[[int], tuple[float, float]], spec: QuadratureSpec) -> float:
    # rule(n) -> (estimate, scale); scale guards the test when the integral is ~0
    n = spec.node_count
    prev, _ = rule(n)
    for _ in range(MAX_DOUBLINGS):
        n *= 2
        cur, scale = rule(n)
        if abs(cur - prev) <= spec.refinement_tolerance * max(abs(cur), scale):
            return cur
        prev = cur
    raise NoConvergence(f"no agreement to {spec.refinement_tolerance} after {n} nodes")


def endpoint_singular_integral(smooth_factor, x_minus: float, x_plus: float,
                               spec: QuadratureSpec = DEFAULT_SPEC) -> float:
    """Integral of smooth_factor(x) / sqrt((x_plus - x)(x - x_minus)) over the interval.

    `smooth_factor` must accept numpy arrays.
    """
    c = 0.5 * (x_plus + x_minus)
    r = 0.5 * (x_plus - x_minus)

    def rule(n):
        theta = (np.arange(n) + 0.5) * (np.pi / n)
        vals = np.asarray(smooth_factor(c + r * np.cos(theta)), dtype=float)
        w = np.pi / n
        return w * float(np.sum(vals)), w * float(np.sum(np.abs(vals)))

    return _refine(rule, spec)


def partial_singular_integral(smooth_factor, x_minus: float, x_plus: float, theta_end: float,
                              spec: QuadratureSpec = DEFAULT_SPEC) -> float:
    """Same kernel, restricted to the angle range [0, theta_end].

    theta = 0 is x_plus and theta = pi is x_minus. The angle range is mapped
    onto [0, pi] by theta = theta_end (1 - cos(phi)) / 2 and summed at
    Chebyshev angles in phi.
    """
    if theta_end == 0.0:
        return 0.0
    c = 0.5 * (x_plus + x_minus)
    r = 0.5 * (x_plus - x_minus)

    def rule(n):
        phi = (np.arange(n) + 0.5) * (np.pi / n)
        theta = 0.5 * theta_end * (1.0 - np.cos(phi))
        jac = 0.5 * theta_end * np.sin(phi)
        vals = np.asarray(smooth_factor(c + r * np.cos(theta)), dtype=float) * jac
        w = np.pi / n
        return w * float(np.sum(vals)), w * float(np.sum(np.abs(vals)))

    return _refine(rule, spec)


@dataclass(frozen=True)
class Factorization:
    """E - V(x) = (x_plus - x)(x - x_minus) g(x) for a problem in scaled units.

    Positions are measured in units of `length` and energies in units of
    `energy`, which keeps coefficients O(1) for extreme nonlinearities.
    """

    turning: TurningPoints   # scaled units
    g: tuple[float, ...]     # ascending coefficients, scaled units
    length: float
    energy: float

    def g_at(self, y):
        return P.polyval(y, self.g)

    @property
    def time_scale(self) -> float:
        """Converts a scaled time integral to physical time (mass excluded)."""
        return self.length / np.sqrt(self.energy)


def factorize(problem: OscillatorProblem, check_nodes: int = 257) -> Factorization:
    """Deflate the two turning points out of E - V(x) by synthetic division."""
    tp = problem.turning_points()
    length = max(abs(tp.x_minus), abs(tp.x_plus))
    energy = problem.energy
    if not energy > 0:
        raise FactorizationFailure(f"nonpositive energy {energy} at the turning point")
    v = problem.potential.scaled(length, energy)
    ym, yp = tp.x_minus / length, tp.x_plus / length
    e_minus_v = -np.array(v.coefficients)
    e_minus_v[0] += 1.0
    # (yp - y)(y - ym) = -ym*yp + (ym + yp) y - y**2
    divisor = np.array([-ym * yp, ym + yp, -1.0])
    g, rem = P.polydiv(e_minus_v, divisor)
    if rem.size and np.max(np.abs(rem)) > 1e-8 * max(1.0, np.max(np.abs(e_minus_v))):
        raise FactorizationFailure(f"turning points do not divide E - V exactly (remainder {rem})")
    theta = np.linspace(0.0, np.pi, check_nodes)
    gv = P.polyval(0.5 * (yp + ym) + 0.5 * (yp - ym) * np.cos(theta), g)
    if np.any(gv <= 0):
        raise FactorizationFailure("E - V(x) changes sign inside the oscillation interval")
    return Factorization(TurningPoints(ym, yp), tuple(g), length, energy)


def period_oracle(problem: OscillatorProblem, spec: QuadratureSpec = DEFAULT_SPEC) -> float:
    """T = sqrt(m) * integral of sqrt(2) / sqrt(E - V) over [x_minus, x_plus]."""
    fac = factorize(problem)
    tp = fac.turning
    val = endpoint_singular_integral(lambda y: np.sqrt(2.0 / fac.g_at(y)), tp.x_minus, tp.x_plus, spec)
    return float(np.sqrt(problem.mass) * fac.time_scale * val)


def time_oracle(problem: OscillatorProblem, X: float, spec: QuadratureSpec = DEFAULT_SPEC) -> float:
    """Time to travel from x_plus = A down to X.

    A one-way transit is integral dx / sqrt(2 (E - V)); the period integrand
    sqrt(2) / sqrt(E - V) already counts the return leg.
    """
    fac = factorize(problem)
    tp = fac.turning
    y = X / fac.length
    if not tp.x_minus - 1e-14 <= y <= tp.x_plus + 1e-14:
        raise DomainError(f"X = {X} outside the oscillation interval")
    cos_theta = np.clip((y - tp.center) / tp.half_width, -1.0, 1.0)
    theta_end = float(np.arccos(cos_theta))
    val = partial_singular_integral(lambda u: np.sqrt(0.5 / fac.g_at(u)),
                                    tp.x_minus, tp.x_plus, theta_end, spec)
    return float(np.sqrt(problem.mass) * fac.time_scale * val)
