"""
Printed coefficient expressions versus the derived ones
=======================================================

The commonly printed N, N' and D expressions for this network share the
constant term with the derived set but little else. The derived set has
N0 = -D0 (S11 tends to -1 at DC, where the inductors short both ports
to ground); the printed set has N0 = +D0.
"""

# %%
from bridgedt import BridgedTParams, bridged_t_circuit
from bridgedt.report import format_coefficients, verify_circuit
from bridgedt.sweep import SweepGrid

p = BridgedTParams(10e-9, 10e-9, 8e-9, 2.2e-12, 3.2e-12)
for line in format_coefficients(p, 50.0):
    print(line)

# %%
# What the differences do to the response, measured against nodal analysis
report = verify_circuit(bridged_t_circuit(p), SweepGrid(1e7, 1e11, 401))
for line in report.lines():
    print(line)
