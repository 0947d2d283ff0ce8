"""
Designing a 1 GHz high-pass
===========================

Equal series inductors, a transmission zero at half the corner frequency,
and a search over the series inductance until the half-power point of
|S21| lands on the target.
"""

# %%
import math
import time

from bridgedt import SweepGrid, bridged_t_circuit, bridged_t_netlist, design_hpf, run_sweep
from bridgedt.closedform import derived_coefficients, transmission_zeros
from bridgedt.metrics import corner_frequency, rolloff_slope

fc, z0 = 1e9, 50.0
t0 = time.perf_counter()
p = design_hpf(fc, z0)
print(f"designed in {time.perf_counter() - t0:.2f} s")
print(bridged_t_netlist(p, z0, "1 GHz high-pass"))

# %%
table = run_sweep(bridged_t_circuit(p, z0), SweepGrid(fc / 100, fc * 100, 2001))
print(f"corner: {corner_frequency(table, 'S21'):.6g} Hz")
print(f"S21 slope below the corner: {rolloff_slope(table, 'S21', 0.75 * fc, fc):+.1f} dB/GHz")
print(f"S11 slope above the corner: {rolloff_slope(table, 'S11', fc, 1.5 * fc):+.1f} dB/GHz")

# %%
# stopband notches come from finite zeros of the S21 numerator
for z in transmission_zeros(derived_coefficients(p, z0)):
    if z.imag > 0:
        print(f"transmission zero at {z.imag / (2 * math.pi) / 1e9:.4f} GHz")
