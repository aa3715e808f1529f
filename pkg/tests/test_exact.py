import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ldeosc import (
    DomainError,
    EllipticParameters,
    OscillatorProblem,
    asymptotic_c0_ratio,
    cn_fourier,
    duffing_exact_period,
    duffing_exact_solution,
    elliptic_k,
    harmonic_ratio,
    jacobi_cn,
    nome,
    period_oracle,
)


def k_by_quadrature(m):
    with mpmath.workdps(30):
        return float(mpmath.quad(lambda t: 1 / mpmath.sqrt(1 - m * mpmath.sin(t) ** 2), [0, mpmath.pi / 2]))


@pytest.mark.parametrize("m", [0.0, 0.25, 0.5, 0.9, 0.999])
def test_elliptic_k_against_quadrature(m):
    assert elliptic_k(m) == pytest.approx(k_by_quadrature(m), rel=1e-15)


def test_elliptic_k_values():
    assert elliptic_k(0.0) == math.pi / 2
    assert elliptic_k(0.5) == pytest.approx(1.8540747, abs=1e-7)
    assert elliptic_k(0.25) == pytest.approx(1.6857504, abs=1e-7)
    with pytest.raises(DomainError):
        elliptic_k(1.0)
    with pytest.raises(DomainError):
        elliptic_k(-0.1)


def test_nome():
    assert nome(0.0) == 0.0
    assert nome(0.5) == pytest.approx(math.exp(-math.pi), rel=1e-14)
    assert 0 < nome(0.25) < math.exp(-math.pi)
    assert nome(0.25) == pytest.approx(float(mpmath.qfrom(m=0.25)), rel=1e-14)
    p = EllipticParameters.from_modulus(0.5)
    assert p.k_complete == pytest.approx(p.k_complement, rel=1e-15)


@pytest.mark.parametrize("u", [0.3, 1.7, 4.0])
def test_cn_degenerates_to_cosine(u):
    assert jacobi_cn(u, 0.0) == pytest.approx(math.cos(u), abs=1e-15)


@pytest.mark.parametrize("m", [0.0, 0.1, 0.5, 0.9])
def test_cn_at_zero_and_quarter_period(m):
    assert jacobi_cn(0.0, m) == 1.0
    assert abs(jacobi_cn(elliptic_k(m), m)) < 1e-11


@pytest.mark.parametrize("m", [0.05, 0.3, 0.5])
def test_cn_against_mpmath(m):
    K = elliptic_k(m)
    u = np.linspace(-10 * K, 10 * K, 97)
    ref = np.array([float(mpmath.ellipfun("cn", x, m=m)) for x in u])
    assert np.max(np.abs(jacobi_cn(u, m) - ref)) < 1e-13


def test_cn_large_argument():
    m = 0.49
    K = elliptic_k(m)
    u = np.array([1234.5678 * K, 9999.1 * K])
    with mpmath.workdps(40):
        ref = np.array([float(mpmath.ellipfun("cn", mpmath.mpf(x), m=m)) for x in u])
    # phase error grows like |u| times machine epsilon
    assert np.max(np.abs(jacobi_cn(u, m) - ref)) < 1e-11


@settings(max_examples=50, deadline=None)
@given(u=st.floats(-50, 50), m=st.floats(0.0, 0.5))
def test_cn_periodicity(u, m):
    K = elliptic_k(m)
    assert jacobi_cn(u + 4 * K, m) == pytest.approx(jacobi_cn(u, m), abs=1e-11)


def test_exact_solution_landmarks():
    assert duffing_exact_solution(1.0, 2.0, 0.0) == 2.0
    t = np.linspace(0, 10, 23)
    assert np.allclose(duffing_exact_solution(0.0, 1.5, t), 1.5 * np.cos(t), atol=1e-14)
    T = duffing_exact_period(1.0, 1.0)
    assert abs(duffing_exact_solution(1.0, 1.0, T / 4)) < 1e-12


def test_exact_solution_satisfies_ode():
    mu, A = 3.0, 1.2
    t = np.linspace(0.1, 3.0, 7)
    X = lambda s: duffing_exact_solution(mu, A, s)
    residuals = []
    for h in (1e-2, 5e-3):
        xdd = (X(t + h) - 2 * X(t) + X(t - h)) / h**2
        residuals.append(np.max(np.abs(xdd + X(t) + mu * X(t) ** 3)))
    # second-order convergence of the finite difference, so the true residual is ~0
    assert residuals[0] / residuals[1] == pytest.approx(4.0, rel=0.05)
    h = 1e-3
    xdd = (-X(t + 2 * h) + 16 * X(t + h) - 30 * X(t) + 16 * X(t - h) - X(t - 2 * h)) / (12 * h**2)
    assert np.max(np.abs(xdd + X(t) + mu * X(t) ** 3)) < 1e-8


def test_exact_period():
    assert duffing_exact_period(0.0, 1.0) == pytest.approx(2 * math.pi, rel=1e-15)
    assert duffing_exact_period(1.0, 1.0) == pytest.approx(4.76803, abs=1e-5)
    for z in np.geomspace(1e-3, 1e8, 12):
        q = period_oracle(OscillatorProblem.duffing(z, 1.0))
        assert duffing_exact_period(z, 1.0) == pytest.approx(q, rel=1e-10)


def test_cn_fourier_values():
    b = cn_fourier(0.5, 8)
    q = math.exp(-math.pi)
    K = float(mpmath.ellipk(0.5))
    assert b[0] == pytest.approx(2 * math.pi / (math.sqrt(0.5) * K) * q**0.5 / (1 + q), rel=1e-14)
    assert b[0] == pytest.approx(0.955006, abs=1e-6)
    # cn(0|m) = 1; the 8-term sum misses exactly the tail starting at b_8
    tail = cn_fourier(0.5, 40)[8:].sum()
    assert abs(b.sum() - 1.0) <= 1.01 * tail
    assert tail < 2e-11
    assert cn_fourier(0.5, 9).sum() == pytest.approx(1.0, abs=1e-12)
    ratios = b[1:] / b[:-1]
    assert np.all(ratios < 1.2 * q)
    with pytest.raises(DomainError):
        cn_fourier(0.0, 4)


@pytest.mark.parametrize("m", [0.01, 0.2, 0.5])
def test_cn_fourier_resynthesis(m):
    K = elliptic_k(m)
    b = cn_fourier(m, 8)
    u = np.linspace(0, 4 * K, 101)
    v = np.pi * u / (2 * K)
    series = sum(b[n] * np.cos((2 * n + 1) * v) for n in range(8))
    assert np.max(np.abs(series - jacobi_cn(u, m))) < 1e-10


def test_gamma_three_quarters_reflection():
    assert math.gamma(0.25) * math.gamma(0.75) == pytest.approx(math.pi / math.sin(math.pi / 4), rel=1e-14)


def test_asymptotic_ratio():
    val = asymptotic_c0_ratio()
    assert val == pytest.approx(1.0017, abs=2e-3)
    # the closed form evaluates to 1.00170408; limits of the two coefficient formulas agree
    from fractions import Fraction
    from ldeosc.fourier import PMS_CLOSED_FORMS
    assert PMS_CLOSED_FORMS[0].limit_at_infinity() == Fraction(26449, 27648)
    assert val == pytest.approx(26449 / 27648 / cn_fourier(0.5, 1)[0], rel=1e-13)


def test_harmonic_ratio():
    assert harmonic_ratio(0) == pytest.approx(1.0, rel=1e-15)
    assert 1 / 22.5 <= harmonic_ratio(1) <= 1 / 21.5
    b = cn_fourier(0.5, 6)
    for n in range(6):
        assert harmonic_ratio(n) == pytest.approx(b[n] / b[0], rel=1e-10)
    # the direct form overflows here; the ratio keeps decaying like e^{-n pi}
    assert 0 < harmonic_ratio(200) < 1e-270
