"""
Closed-form S-parameters against nodal analysis
===============================================

Builds one bridged T, evaluates it three ways and prints how far the
closed-form polynomials and the two-port composition stray from the
nodal solver.
"""

# %%
import numpy as np

from bridgedt import BridgedTParams, SweepGrid, bridged_t_circuit, run_sweep
from bridgedt.report import relative_deviation

p = BridgedTParams(L1=10e-9, L2=14e-9, L3=8e-9, C1=2.2e-12, C2=3.2e-12)
circuit = bridged_t_circuit(p, z0=50.0)
grid = SweepGrid(1e7, 1e11, 401)

# %%
ref = run_sweep(circuit, grid, "mna")
for method in ("closed-form", "composed"):
    t = run_sweep(circuit, grid, method)
    print(f"{method:12s} worst relative deviation {relative_deviation(t.s, ref.s).max():.2e}")

# %%
# A lossless reciprocal two-port: the power balance stays at one everywhere
s = ref.s
print("max |s12 - s21|          ", np.abs(s[:, 0, 1] - s[:, 1, 0]).max())
print("max ||s11|^2+|s21|^2 - 1|", np.abs(np.abs(s[:, 0, 0]) ** 2 + np.abs(s[:, 1, 0]) ** 2 - 1).max())

# %%
# a few rows of the response
for f, db11, db21 in list(zip(ref.frequencies, ref.magnitude_db("S11"), ref.magnitude_db("S21")))[::50]:
    print(f"{f:12.4g} Hz   S11 {db11:8.2f} dB   S21 {db21:8.2f} dB")
