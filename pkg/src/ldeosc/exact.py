"""Exact Duffing solution through Jacobi's cn and its nome expansion.

With x(0) = A at rest, x'' + x + mu x**3 = 0 is solved by
``A cn(sqrt(1 + z) t | m)`` where ``z = mu A**2`` and ``m = z / (2 (1 + z))``.
Since m < 1/2 for every finite z, no special handling near m = 1 is needed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError

__all__ = [
    "EllipticParameters",
    "agm",
    "elliptic_k",
    "nome",
    "jacobi_cn",
    "duffing_modulus",
    "duffing_exact_solution",
    "duffing_exact_period",
    "duffing_exact_frequency",
    "cn_fourier",
    "duffing_exact_coefficients",
    "asymptotic_c0_ratio",
    "harmonic_ratio",
]


def _check_modulus(m: float) -> None:
    if not 0.0 <= m < 1.0:
        raise DomainError(f"modulus m must lie in [0, 1), got {m}")


def agm(a: float, b: float, rtol: float = 1e-16) -> float:
    """Arithmetic-geometric mean of two nonnegative numbers."""
    for _ in range(64):
        if abs(a - b) <= rtol * a:
            break
        a, b = 0.5 * (a + b), math.sqrt(a * b)
    return 0.5 * (a + b)


def elliptic_k(m: float) -> float:
    """Complete elliptic integral of the first kind, K(m) = pi / (2 agm(1, sqrt(1 - m)))."""
    _check_modulus(m)
    return math.pi / (2.0 * agm(1.0, math.sqrt(1.0 - m)))


def nome(m: float) -> float:
    _check_modulus(m)
    if m == 0.0:
        return 0.0
    return math.exp(-math.pi * elliptic_k(1.0 - m) / elliptic_k(m))


@dataclass(frozen=True)
class EllipticParameters:
    modulus_m: float
    k_complete: float
    k_complement: float
    nome_q: float

    @classmethod
    def from_modulus(cls, m: float) -> "EllipticParameters":
        _check_modulus(m)
        k = elliptic_k(m)
        if m == 0.0:
            return cls(m, k, math.inf, 0.0)
        kc = elliptic_k(1.0 - m)
        return cls(m, k, kc, math.exp(-math.pi * kc / k))


def _landen_chain(m: float):
    a, b, c = 1.0, math.sqrt(1.0 - m), math.sqrt(m)
    ratios = []
    while abs(c) > 1e-17 * a and len(ratios) < 64:
        a, b, c = 0.5 * (a + b), math.sqrt(a * b), 0.5 * (a - b)
        ratios.append(c / a)
    return a, ratios


def jacobi_cn(u, m: float):
    """cn(u | m) by the descending Landen (AGM) scheme.

    The phase 2**N a_N u is walked back through
    phi_{n-1} = (phi_n + asin((c_n / a_n) sin(phi_n))) / 2 and cn = cos(phi_0).
    """
    _check_modulus(m)
    a, ratios = _landen_chain(m)
    phi = (2.0 ** len(ratios)) * a * np.asarray(u, dtype=float)
    for r in reversed(ratios):
        phi = 0.5 * (phi + np.arcsin(r * np.sin(phi)))
    out = np.cos(phi)
    return float(out) if out.ndim == 0 else out


def duffing_modulus(mu: float, A: float) -> float:
    z = mu * A * A
    return z / (2.0 * (1.0 + z))


def duffing_exact_solution(mu: float, A: float, t):
    if mu < 0 or not A > 0:
        raise DomainError("need mu >= 0 and A > 0")
    return A * jacobi_cn(math.sqrt(1.0 + mu * A * A) * np.asarray(t, dtype=float), duffing_modulus(mu, A))


def duffing_exact_period(mu: float, A: float) -> float:
    """T = 4 K(m) / sqrt(1 + mu A**2)."""
    if mu < 0 or not A > 0:
        raise DomainError("need mu >= 0 and A > 0")
    return 4.0 * elliptic_k(duffing_modulus(mu, A)) / math.sqrt(1.0 + mu * A * A)


def duffing_exact_frequency(mu: float, A: float) -> float:
    return 2.0 * math.pi / duffing_exact_period(mu, A)


def cn_fourier(m: float, N: int) -> np.ndarray:
    """First N cosine coefficients of cn in the variable v = pi u / (2 K(m)).

    b_n = 2 pi / (sqrt(m) K(m)) * q**(n + 1/2) / (1 + q**(2n + 1)).
    """
    if not 0.0 < m < 1.0:
        raise DomainError(f"cn_fourier needs 0 < m < 1, got {m}; use cos(u) at m = 0")
    p = EllipticParameters.from_modulus(m)
    n = np.arange(N)
    q = p.nome_q
    return 2.0 * math.pi / (math.sqrt(m) * p.k_complete) * q ** (n + 0.5) / (1.0 + q ** (2 * n + 1))


def duffing_exact_coefficients(mu: float, A: float, N: int = 4) -> np.ndarray:
    """Coefficients of cos((2n+1) Omega t) in the exact solution."""
    m = duffing_modulus(mu, A)
    if m == 0.0:
        out = np.zeros(N)
        out[0] = A
        return out
    return A * cn_fourier(m, N)


def asymptotic_c0_ratio() -> float:
    """Strong-coupling limit of the closed-form c0 over the exact c0."""
    pi = math.pi
    return (26449.0 * math.exp(-pi / 2) * (1.0 + math.exp(pi)) * math.sqrt(pi / 2)
            / (110592.0 * math.gamma(0.75) ** 2))


def harmonic_ratio(n: int) -> float:
    """R_n = e**(n pi) (1 + e**pi) / (1 + e**(2 pi n + pi)), the z -> inf limit of c_n / c_0."""
    if n < 0:
        raise DomainError("n must be nonnegative")
    pi = math.pi
    # log form of the same expression; the direct one overflows past n ~ 110
    log_num = n * pi + math.log1p(math.exp(pi))
    log_den = np.logaddexp(0.0, (2 * n + 1) * pi)
    return math.exp(log_num - log_den)
