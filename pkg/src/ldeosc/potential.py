"""One-dimensional conservative systems with polynomial potentials.

The equation of motion is ``m x'' + f(x) = 0`` with ``f = dV/dx``. A problem is
fixed by the potential, the mass and the amplitude ``A``; the particle starts
at rest at ``x(0) = A``, which sets the energy ``E = V(A)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np
from numpy.polynomial import polynomial as P

from .errors import DomainError, NoOscillation

__all__ = [
    "PolynomialPotential",
    "OscillatorProblem",
    "TurningPoints",
    "eval_potential",
    "eval_force",
    "energy_at_rest",
    "turning_points",
]


@dataclass(frozen=True)
class PolynomialPotential:
    """V(x) = sum(coefficients[k] * x**k), normalized so that V(0) = 0."""

    coefficients: tuple[float, ...]

    def __post_init__(self):
        coeffs = tuple(float(c) for c in self.coefficients)
        # drop trailing zeros so the degree is meaningful
        while len(coeffs) > 1 and coeffs[-1] == 0.0:
            coeffs = coeffs[:-1]
        if not any(coeffs):
            raise DomainError("potential must have at least one nonzero coefficient")
        if coeffs[0] != 0.0:
            raise DomainError("potential must satisfy V(0) = 0")
        object.__setattr__(self, "coefficients", coeffs)

    @classmethod
    def duffing(cls, mu: float) -> "PolynomialPotential":
        """x**2/2 + mu x**4/4."""
        return cls((0.0, 0.0, 0.5, 0.0, 0.25 * mu))

    @classmethod
    def harmonic(cls) -> "PolynomialPotential":
        return cls((0.0, 0.0, 0.5))

    @classmethod
    def quartic(cls, mu: float) -> "PolynomialPotential":
        """Pure anharmonic well mu x**4/4."""
        return cls((0.0, 0.0, 0.0, 0.0, 0.25 * mu))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def is_even(self) -> bool:
        return all(c == 0.0 for c in self.coefficients[1::2])

    @property
    def force_coefficients(self) -> tuple[float, ...]:
        return tuple(P.polyder(self.coefficients))

    def duffing_mu(self) -> float | None:
        """Return mu if this is exactly the Duffing family, else None."""
        c = self.coefficients + (0.0,) * max(0, 5 - len(self.coefficients))
        if len(c) == 5 and c[1] == 0.0 and c[2] == 0.5 and c[3] == 0.0:
            return 4.0 * c[4]
        return None

    def scaled(self, length: float, energy: float) -> "PolynomialPotential":
        """Potential in the variable y = x/length, in units of `energy`."""
        k = np.arange(len(self.coefficients))
        return PolynomialPotential(tuple(np.asarray(self.coefficients) * length**k / energy))


@dataclass(frozen=True)
class OscillatorProblem:
    potential: PolynomialPotential
    amplitude: float
    mass: float = 1.0

    def __post_init__(self):
        if not self.amplitude > 0:
            raise DomainError(f"amplitude must be positive, got {self.amplitude}")
        if not self.mass > 0:
            raise DomainError(f"mass must be positive, got {self.mass}")

    @classmethod
    def duffing(cls, mu: float, amplitude: float, mass: float = 1.0) -> "OscillatorProblem":
        return cls(PolynomialPotential.duffing(mu), amplitude, mass)

    @property
    def energy(self) -> float:
        return energy_at_rest(self)

    def turning_points(self) -> "TurningPoints":
        """Turning points with x_plus = A exactly."""
        A = self.amplitude
        if self.potential.is_even:
            return TurningPoints(-A, A)
        seed = _well_seed(self.potential, self.energy, A)
        tp = turning_points(self.potential, self.energy, seed)
        return TurningPoints(tp.x_minus, A)


@dataclass(frozen=True)
class TurningPoints:
    x_minus: float
    x_plus: float

    def __post_init__(self):
        if not self.x_minus < self.x_plus:
            raise DomainError(f"turning points out of order: {self.x_minus} >= {self.x_plus}")

    @property
    def center(self) -> float:
        return 0.5 * (self.x_plus + self.x_minus)

    @property
    def half_width(self) -> float:
        return 0.5 * (self.x_plus - self.x_minus)


def eval_potential(p: PolynomialPotential, x):
    return P.polyval(x, p.coefficients)


def eval_force(p: PolynomialPotential, x):
    """Restoring term f(x) = V'(x)."""
    return P.polyval(x, p.force_coefficients)


def energy_at_rest(problem: OscillatorProblem) -> float:
    return float(eval_potential(problem.potential, problem.amplitude))


def turning_points(p: PolynomialPotential, E: float, x_seed: float = 0.0) -> TurningPoints:
    """Roots of V(x) = E that bracket `x_seed`.

    Roots come from the companion matrix of V(x) - E and get one Newton
    polish step each.
    """
    if not eval_potential(p, x_seed) < E:
        raise NoOscillation(f"V({x_seed}) >= E = {E}: seed is not inside a well")
    shifted = np.array(p.coefficients)
    shifted[0] -= E
    # a leading coefficient this small overflows the companion matrix
    big = np.max(np.abs(shifted))
    while len(shifted) > 2 and abs(shifted[-1]) < 1e-280 * big:
        shifted = shifted[:-1]
    roots = P.polyroots(shifted)
    scale = max(1.0, float(np.max(np.abs(roots))))
    real = np.sort(roots[np.abs(roots.imag) <= 1e-7 * scale].real)

    dshift = P.polyder(shifted)

    def polish(r):
        d = P.polyval(r, dshift)
        return r - P.polyval(r, shifted) / d if d != 0.0 else r

    below = real[real < x_seed]
    above = real[real > x_seed]
    if below.size == 0 or above.size == 0:
        raise NoOscillation(f"energy {E} does not confine motion around x = {x_seed}")
    x_minus, x_plus = polish(below[-1]), polish(above[0])
    if p.is_even and x_seed == 0.0:
        half = 0.5 * (x_plus - x_minus)
        x_minus, x_plus = -half, half
    return TurningPoints(float(x_minus), float(x_plus))


def _well_seed(p: PolynomialPotential, E: float, A: float) -> float:
    """A point inside the well that contains x = A, used to seed root bracketing."""
    crit = P.polyroots(P.polyder(p.coefficients))
    crit = np.sort(crit[np.abs(crit.imag) <= 1e-9 * max(1.0, A)].real)
    candidates = [c for c in crit if c < A and eval_potential(p, c) < E]
    if not candidates:
        raise NoOscillation(f"no potential minimum below E = {E} to the left of A = {A}")
    # the closest minimum to A keeps the bracket inside the same well
    return float(candidates[-1])
