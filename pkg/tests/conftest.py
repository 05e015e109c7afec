import numpy as np
import pytest

from jcspec import SystemParams

# Benchmark parameter sets used throughout (units of the resonator
# frequency, kappa = 2*kappa_c i.e. no internal losses):
#  - equal rates:   qubit and photon decohere equally fast
#  - sharp qubit:   qubit far more coherent than the photon mode
#  - broad qubit:   dephasing above the coupling, single-mode regime
EQUAL_RATES = SystemParams(kappa_c=5e-3, kappa=1e-2, g=0.05, gamma=1e-2)
SHARP_QUBIT = SystemParams(kappa_c=5e-3, kappa=1e-2, g=0.05, gamma=1e-4)
BROAD_QUBIT = SystemParams(kappa_c=5e-3, kappa=1e-2, g=0.02, gamma=0.2)


@pytest.fixture
def equal_rates():
    return EQUAL_RATES


@pytest.fixture
def sharp_qubit():
    return SHARP_QUBIT


@pytest.fixture
def broad_qubit():
    return BROAD_QUBIT


def random_params(rng, n, delta_span=0.5):
    """n random valid parameter sets: log-uniform rates, linear detuning."""
    kappa_c = 10.0 ** rng.uniform(-4.0, -2.0, n)
    internal = 10.0 ** rng.uniform(-8.0, -2.5, n)
    g = 10.0 ** rng.uniform(-3.0, -0.7, n)
    gamma = 10.0 ** rng.uniform(-4.0, -1.0, n)
    delta = rng.uniform(-delta_span, delta_span, n)
    return [
        SystemParams(kappa_c=kc, kappa=2.0 * kc + extra, g=gg, gamma=gm,
                     omega_q=1.0 + d)
        for kc, extra, gg, gm, d in zip(kappa_c, internal, g, gamma, delta)
    ]
