"""
Beyond Duffing: an asymmetric well
==================================

Any polynomial potential works. The series is built around a quadratic
centred between the turning points, lambda is fixed by minimal sensitivity
and the result is checked against the quadrature and RK4 oracles.
"""

from ldeosc import OscillatorProblem, PolynomialPotential, integrate, lde_period, period_oracle
from ldeosc.ode import return_times

V = PolynomialPotential((0.0, 0.0, 0.5, 0.2, 0.5))
problem = OscillatorProblem(V, amplitude=1.5)
tp = problem.turning_points()
print(f"turning points: {tp.x_minus:.6f} .. {tp.x_plus:.6f}")

T_ref = period_oracle(problem)
T_ode = return_times(integrate(problem, 1.2 * T_ref, 2000))[0]
print(f"quadrature period {T_ref:.12f}, RK4 return time {T_ode:.12f}")
for order in (1, 3, 5):
    res = lde_period(problem, order)
    print(f"order {order}: lambda = {res.lambda_used:.6f}, T = {res.period:.10f}, "
          f"rel. error {abs(res.period - T_ref) / T_ref:.2e}")
