"""
Poles and zeros of the bridged T
================================

With L1 == L2 the S11 numerator is even in s, so its zeros come in
quadruples mirrored across both axes. Unequal inductors break that.
"""

# %%
from bridgedt import BridgedTParams
from bridgedt.closedform import derived_coefficients
from bridgedt.report import format_pole_zero

for L2 in (10e-9, 20e-9):
    p = BridgedTParams(10e-9, L2, 8e-9, 2.2e-12, 3.2e-12)
    print(f"--- L2 = {L2 * 1e9:g} nH")
    for line in format_pole_zero(derived_coefficients(p, 50.0)):
        print(line)
