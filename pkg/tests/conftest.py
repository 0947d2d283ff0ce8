import numpy as np
import pytest

from bridgedt import BridgedTParams, bridged_t_circuit, design_hpf


def random_params(rng, n=20):
    """Component sets with L in [0.5, 50] nH and C in [0.1, 10] pF, log-uniform."""
    out = []
    for _ in range(n):
        L = 10.0 ** rng.uniform(np.log10(0.5e-9), np.log10(50e-9), 3)
        C = 10.0 ** rng.uniform(np.log10(0.1e-12), np.log10(10e-12), 2)
        out.append(BridgedTParams(L[0], L[1], L[2], C[0], C[1]))
    return out


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def params():
    return BridgedTParams(10e-9, 10e-9, 8e-9, 2.2e-12, 3.2e-12)


@pytest.fixture
def asym_params():
    return BridgedTParams(6e-9, 12e-9, 8e-9, 2.2e-12, 3.2e-12)


@pytest.fixture
def circuit(params):
    return bridged_t_circuit(params, 50.0)


@pytest.fixture(scope="session")
def hpf_params():
    return design_hpf(1e9, 50.0)


_ACCEPTANCE = []


def record(criterion, passed, detail=""):
    """Collect acceptance verdicts for the end-of-session summary."""
    line = f"criterion {criterion}: {'PASS' if passed else 'FAIL'}"
    if detail:
        line += f"  {detail}"
    _ACCEPTANCE.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE:
            terminalreporter.write_line(line)
