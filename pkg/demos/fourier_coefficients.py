"""
Fourier content of the PMS trajectory
=====================================

The trajectory is X(t) = sum_n c_n cos((2n+1) Omega t). Here the closed
third-order coefficients, the same coefficients computed by quadrature,
the exact cn coefficients and the Lindstedt-Poincare series are printed
side by side.
"""

import warnings

import numpy as np

from ldeosc import (
    asymptotic_c0_ratio,
    duffing_exact_coefficients,
    duffing_pms_coefficient_numeric,
    duffing_pms_coefficients_closed,
    harmonic_ratio,
    lp_coefficients,
)

for z in (0.1, 1.0, 100.0, 1e6):
    closed = duffing_pms_coefficients_closed(z, 1.0).coefficients
    numeric = [duffing_pms_coefficient_numeric(z, 1.0, n) for n in range(4)]
    exact = duffing_exact_coefficients(z, 1.0, 4)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        lp = lp_coefficients(z, 1.0).coefficients
    print(f"z = {z:g}")
    for label, c in (("closed", closed), ("numeric", numeric), ("exact", exact), ("LP", lp)):
        print(f"  {label:>8}: " + "  ".join(f"{x: .6e}" for x in c))

print(f"\nc0 closed / c0 exact as z -> inf: {asymptotic_c0_ratio():.7f}")
print("exact harmonic ratios c_n/c_0 at strong coupling:",
      ", ".join(f"1/{1 / harmonic_ratio(n):.1f}" for n in range(1, 4)))
