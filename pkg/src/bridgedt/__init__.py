"""Bridged-T two-port analysis: closed-form S-parameters, a nodal oracle and a high-pass designer."""

from .closedform import (
    NormalizedFrequency,
    SParamPolynomials,
    circuit_polynomials,
    derived_coefficients,
    magnitude_phase,
    quadrature,
    transmission_zeros,
    verbatim_coefficients,
)
from .design import design_hpf
from .elements import BridgedTParams, Element, element_admittance, element_impedance, tank_impedance
from .errors import BridgedTError, InputError, NumericalError
from .metrics import corner_frequency, rolloff_slope
from .mna import Circuit, Port, bridged_t_circuit, bridged_t_params, mna_sparams, nodal_admittance
from .netlist import bridged_t_netlist, format_netlist, load_netlist, parse_netlist
from .polyrat import Polynomial, RationalFunction, poly_eval, poly_roots, rat_arith
from .sweep import SweepGrid, SweepTable, run_sweep
from .touchstone import read_touchstone, write_csv, write_touchstone
from .twoport import (
    AbcdMatrix,
    PiAdmittances,
    SMatrix,
    YMatrix,
    abcd_to_s,
    bridged_t_composed,
    bridged_t_pi,
    cascade,
    kron_reduce,
    pi_to_abcd,
    y_delta,
)

__version__ = "0.1.0"
