"""
Period of the Duffing oscillator across ten decades of nonlinearity
===================================================================

The first-order PMS period 4 pi / sqrt(4 + 3 mu A**2) is compared with the
exact elliptic period. The relative error grows monotonically with
z = mu A**2 and saturates just below 2.2%.
"""

import numpy as np

from ldeosc import duffing_exact_period, duffing_period_pms, elliptic_k

z = np.geomspace(1e-3, 1e8, 12)
print(f"{'z':>10} {'T_pms':>14} {'T_exact':>14} {'error %':>10}")
for zi in z:
    t_pms = duffing_period_pms(zi, 1.0).period
    t_ex = duffing_exact_period(zi, 1.0)
    print(f"{zi:10.3g} {t_pms:14.8g} {t_ex:14.8g} {100 * abs(t_pms - t_ex) / t_ex:10.5f}")

# as z grows both periods scale like 1/sqrt(z), so their ratio tends to a constant
limit = np.pi / (np.sqrt(3.0) * elliptic_k(0.5))
print(f"\nstrong-coupling ratio T_pms/T_exact -> {limit:.6f} (error {100 * (1 - limit):.4f}%)")
