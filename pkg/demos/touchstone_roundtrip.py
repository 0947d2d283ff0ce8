"""
Writing and reading Touchstone files
====================================
"""

# %%
import numpy as np

from bridgedt import BridgedTParams, SweepGrid, bridged_t_circuit, read_touchstone, run_sweep, write_touchstone
from bridgedt.touchstone import write_csv

p = BridgedTParams(10e-9, 10e-9, 8e-9, 2.2e-12, 3.2e-12)
table = run_sweep(bridged_t_circuit(p), SweepGrid(1e8, 1e10, 5))

text = write_touchstone(table)
print(text)

# %%
back = read_touchstone(text)
print("largest change after the round trip:", np.abs(back.s - table.s).max())

# %%
# CSV carries dB and degrees for plotting tools
print(write_csv(table))
