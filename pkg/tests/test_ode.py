import math

import numpy as np
import pytest

from ldeosc import (
    DomainError,
    OscillatorProblem,
    PolynomialPotential,
    duffing_exact_period,
    energy_drift,
    integrate,
    period_oracle,
)
from ldeosc.ode import Trajectory, interpolate, return_times, zero_crossings


def test_harmonic_half_period():
    p = OscillatorProblem(PolynomialPotential.harmonic(), 1.0)
    tr = integrate(p, math.pi, 1000)
    assert tr.times[-1] == math.pi
    assert tr.positions[-1] == pytest.approx(-1.0, abs=1e-8)


@pytest.mark.parametrize("z", [1.0, 1e4])
def test_return_time_and_zero_crossings(z):
    p = OscillatorProblem.duffing(z, 1.0)
    T = duffing_exact_period(z, 1.0)
    tr = integrate(p, 2.1 * T, 2000)
    assert return_times(tr)[0] == pytest.approx(T, rel=1e-6)
    zc = zero_crossings(tr)
    assert zc[0] == pytest.approx(T / 4, rel=1e-6)
    assert np.diff(zc) == pytest.approx(np.full(len(zc) - 1, T / 2), rel=1e-6)


def test_energy_drift_harmonic():
    p = OscillatorProblem(PolynomialPotential.harmonic(), 1.0)
    tr = integrate(p, 10 * 2 * math.pi, 1000)
    assert energy_drift(p, tr) < 1e-10


def test_energy_drift_order():
    p = OscillatorProblem.duffing(1.0, 1.0)
    T = duffing_exact_period(1.0, 1.0)
    d1 = energy_drift(p, integrate(p, 5 * T, 200))
    d2 = energy_drift(p, integrate(p, 5 * T, 400))
    # RK4 energy error falls at least as fast as h**4
    order = np.log2(d1 / d2)
    assert 3.8 < order < 5.2


def test_energy_drift_single_sample():
    tr = Trajectory(np.array([0.0]), np.array([1.0]), np.array([0.0]), np.array([-1.0]), 0.1)
    assert energy_drift(OscillatorProblem.duffing(1.0, 1.0), tr) == 0.0


def test_period_convergence_order():
    p = OscillatorProblem.duffing(100.0, 1.0)
    T = duffing_exact_period(100.0, 1.0)
    errs = [abs(return_times(integrate(p, 1.1 * T, n))[0] - T) for n in (200, 400, 800)]
    orders = np.log2(np.array(errs[:-1]) / np.array(errs[1:]))
    assert np.all((orders > 3.8) & (orders < 4.2))


def test_time_reversal_symmetry():
    p = OscillatorProblem.duffing(5.0, 1.0)
    T = duffing_exact_period(5.0, 1.0)
    tr = integrate(p, T, 2000)
    t = np.linspace(0, T / 2, 101)
    assert np.max(np.abs(interpolate(tr, T - t) - interpolate(tr, t))) < 1e-8


def test_general_mass_and_potential():
    p = OscillatorProblem(PolynomialPotential((0.0, 0.0, 0.5, 0.2, 0.5)), 1.0, mass=2.5)
    T = period_oracle(p)
    tr = integrate(p, 1.3 * T, 2000)
    assert return_times(tr)[0] == pytest.approx(T, rel=1e-7)


def test_argument_checks():
    p = OscillatorProblem.duffing(1.0, 1.0)
    with pytest.raises(DomainError):
        integrate(p, -1.0)
    with pytest.raises(DomainError):
        integrate(p, 1.0, 50)
