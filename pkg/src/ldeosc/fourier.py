"""Fourier spectra of the first-order PMS trajectory and the LP reference.

Every Duffing trajectory here has the form
``X(t) = sum_n c_n cos((2n + 1) Omega t)``; coefficients divided by ``A``
depend on ``z = mu A**2`` alone.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import DomainError, NoConvergence
from .lde import duffing_period_pms
from .quadrature import DEFAULT_SPEC, MAX_DOUBLINGS, QuadratureSpec

__all__ = [
    "FourierSpectrum",
    "RationalFunction",
    "PMS_CLOSED_FORMS",
    "xi_bound",
    "xi",
    "duffing_pms_coefficients_closed",
    "duffing_pms_coefficient_numeric",
    "small_mu_series",
    "closed_form_taylor",
    "lp_frequency",
    "lp_coefficients",
    "lp_series",
    "synthesize",
]


@dataclass(frozen=True)
class FourierSpectrum:
    frequency: float
    coefficients: tuple[float, ...]

    def __call__(self, t):
        return synthesize(self, t)


def synthesize(spectrum: FourierSpectrum, t):
    t = np.asarray(t, dtype=float)
    out = np.zeros_like(t)
    for n, c in enumerate(spectrum.coefficients):
        out = out + c * np.cos((2 * n + 1) * spectrum.frequency * t)
    return float(out) if out.ndim == 0 else out


def _polymul(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return tuple(out)


def _polypow(a: Sequence[int], k: int) -> tuple[int, ...]:
    out: tuple[int, ...] = (1,)
    for _ in range(k):
        out = _polymul(out, a)
    return out


@dataclass(frozen=True)
class RationalFunction:
    """num(z) / den(z) with integer coefficients in ascending powers of z."""

    num: tuple[int, ...]
    den: tuple[int, ...]

    def __call__(self, z):
        if isinstance(z, Fraction):
            return _horner(self.num, z) / _horner(self.den, z)
        z = float(z)
        if z <= 1.0:
            return _horner(self.num, z) / _horner(self.den, z)
        # evaluate in w = 1/z so huge z cannot overflow
        w = 1.0 / z
        dn, dd = len(self.num) - 1, len(self.den) - 1
        return z ** (dn - dd) * _horner(self.num[::-1], w) / _horner(self.den[::-1], w)

    def taylor(self, order: int) -> tuple[Fraction, ...]:
        """Exact Maclaurin coefficients up to z**order (power series division)."""
        num = [Fraction(c) for c in self.num] + [Fraction(0)] * (order + 1)
        den = [Fraction(c) for c in self.den] + [Fraction(0)] * (order + 1)
        out = []
        for k in range(order + 1):
            acc = num[k] - sum(out[j] * den[k - j] for j in range(k))
            out.append(acc / den[0])
        return tuple(out)

    def limit_at_infinity(self) -> Fraction:
        dn, dd = len(self.num) - 1, len(self.den) - 1
        if dn < dd:
            return Fraction(0)
        if dn > dd:
            raise DomainError("rational function diverges at infinity")
        return Fraction(self.num[-1], self.den[-1])


def _horner(coeffs, x):
    acc = 0 * x
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


_3z4 = (4, 3)
# c_n / A as rational functions of z = mu A**2
PMS_CLOSED_FORMS: tuple[RationalFunction, ...] = (
    RationalFunction((65536, 145408, 107456, 26449), _polymul((1024,), _polypow(_3z4, 3))),
    RationalFunction((0, 16384, 36096, 26424, 6435), _polymul((2048,), _polypow(_3z4, 4))),
    RationalFunction(_polymul((5,), (0, 0, 768, 1112, 427)), _polymul((6144,), _polypow(_3z4, 4))),
    RationalFunction(_polymul((49,), (0, 0, 0, 16, 5)), _polymul((12288,), _polypow(_3z4, 4))),
)


def xi(mu: float, A: float, X):
    """Expansion variable -A mu X sqrt(1 - X**2/A**2) / (6 mu A**2 + 8)."""
    X = np.asarray(X, dtype=float)
    ratio = np.clip(X / A, -1.0, 1.0)
    return -A * mu * X * np.sqrt(1.0 - ratio**2) / (6.0 * mu * A * A + 8.0)


def xi_bound(z: float) -> float:
    """max |xi| over [-A, A], attained at X = A / sqrt(2)."""
    return z / (2.0 * (6.0 * z + 8.0))


def duffing_pms_coefficients_closed(mu: float, A: float) -> FourierSpectrum:
    """c_0..c_3 of the first-order PMS trajectory, truncated at third order in xi."""
    if mu < 0 or not A > 0:
        raise DomainError("need mu >= 0 and A > 0")
    z = mu * A * A
    return FourierSpectrum(duffing_period_pms(mu, A).frequency,
                           tuple(A * float(f(z)) for f in PMS_CLOSED_FORMS))


def duffing_pms_coefficient_numeric(mu: float, A: float, n: int,
                                    spec: QuadratureSpec = DEFAULT_SPEC) -> float:
    """c_n of the first-order PMS trajectory without truncation in xi.

    With theta = arccos(X/A) the phase is Omega t = theta - eps sin(2 theta),
    eps = z / (12 z + 16), and the projection becomes
    (2A/pi) * integral_0^pi cos(theta) cos((2n+1)(theta - eps sin 2theta)) (1 - 2 eps cos 2theta) dtheta.
    The integrand is even and 2pi-periodic, so the trapezoid rule converges spectrally.
    """
    if n < 0:
        raise DomainError("n must be nonnegative")
    z = mu * A * A
    eps = z / (12.0 * z + 16.0)
    k = 2 * n + 1

    def rule(N):
        theta = np.linspace(0.0, np.pi, N + 1)
        w = np.full(N + 1, np.pi / N)
        w[0] = w[-1] = 0.5 * np.pi / N
        h = np.cos(theta) * np.cos(k * (theta - eps * np.sin(2 * theta))) * (1 - 2 * eps * np.cos(2 * theta))
        return float(np.dot(w, h)), float(np.dot(w, np.abs(h)))

    N = spec.node_count
    prev, _ = rule(N)
    for _ in range(MAX_DOUBLINGS):
        N *= 2
        cur, scale = rule(N)
        if abs(cur - prev) <= spec.refinement_tolerance * max(abs(cur), scale):
            return 2.0 * A / math.pi * cur
        prev = cur
    raise NoConvergence(f"Fourier projection n={n} did not converge")


_PMS_SMALL_Z = (
    (Fraction(1), Fraction(-1, 32), Fraction(23, 1024), Fraction(-1055, 65536)),
    (Fraction(0), Fraction(1, 32), Fraction(-51, 2048), Fraction(1287, 65536)),
    (Fraction(0), Fraction(0), Fraction(5, 2048), Fraction(-745, 196608)),
    (Fraction(0), Fraction(0), Fraction(0), Fraction(49, 196608)),
)


def small_mu_series(n: int) -> tuple[Fraction, ...]:
    """Tabulated small-z expansion of c_n / A: coefficients of z**0 .. z**3."""
    if not 0 <= n <= 3:
        raise DomainError("small-z series are tabulated for 0 <= n <= 3")
    return _PMS_SMALL_Z[n]


def closed_form_taylor(n: int, order: int = 3) -> tuple[Fraction, ...]:
    """Maclaurin coefficients of the closed form c_n / A, computed exactly."""
    if not 0 <= n <= 3:
        raise DomainError("closed forms exist for 0 <= n <= 3")
    return PMS_CLOSED_FORMS[n].taylor(order)


_LP_COEFFS = (
    (Fraction(1), Fraction(-1, 32), Fraction(23, 1024), Fraction(-547, 32768)),
    (Fraction(0), Fraction(1, 32), Fraction(-3, 128), Fraction(29, 16384)),
    (Fraction(0), Fraction(0), Fraction(1, 1024), Fraction(-3, 2048)),
    (Fraction(0), Fraction(0), Fraction(0), Fraction(1, 32768)),
)
LP_FREQUENCY_SERIES = (Fraction(1), Fraction(3, 8), Fraction(-21, 256), Fraction(81, 2048))


def _poly(coeffs, z):
    return sum(float(c) * z**k for k, c in enumerate(coeffs))


def lp_frequency(z: float) -> float:
    return _poly(LP_FREQUENCY_SERIES, z)


def lp_coefficients(mu: float, A: float) -> FourierSpectrum:
    """Third-order Lindstedt-Poincare spectrum; meaningful only for mu A**2 < 1."""
    z = mu * A * A
    if z >= 1.0:
        warnings.warn(f"LP series used outside its validity domain (mu A^2 = {z:g})", RuntimeWarning,
                      stacklevel=2)
    return FourierSpectrum(lp_frequency(z), tuple(A * _poly(c, z) for c in _LP_COEFFS))


def lp_series(n: int) -> tuple[Fraction, ...]:
    if not 0 <= n <= 3:
        raise DomainError("LP coefficients are tabulated for 0 <= n <= 3")
    return _LP_COEFFS[n]
