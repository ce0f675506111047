import math

import numpy as np
import pytest

from ptqubit import DriveKind, SystemParams
from ptqubit.scenarios import DEFAULT_N_OCC, DEFAULT_OMEGA, DEFAULT_SWEEP


def random_density(rng: np.random.Generator) -> np.ndarray:
    """Hilbert-Schmidt random qubit state via a complex Ginibre matrix."""
    g = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
    m = g @ g.conj().T
    return m / np.trace(m).real


def random_hermitian(rng: np.random.Generator) -> np.ndarray:
    m = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
    return 0.5 * (m + m.conj().T)


def params(drive=DriveKind.IMAGINARY, n_occ=DEFAULT_N_OCC, omega=DEFAULT_OMEGA,
           theta=math.pi / 2, phi=0.0, gamma0=1.0) -> SystemParams:
    return SystemParams(
        drive=drive, n_occ=n_occ, omega_over_gamma=omega,
        theta=theta, phi=phi, gamma0=gamma0,
    )


def comparison_params(drive: DriveKind) -> SystemParams:
    """The three-drive comparison scenario: balanced superposition whose
    initial coherence points against the drive axis (phi = pi)."""
    return params(drive=drive, theta=math.pi / 4, phi=math.pi)


def sweep_params(omega: float) -> SystemParams:
    """The coupling-sweep scenario: incoherent start theta = pi/2."""
    return params(drive=DriveKind.IMAGINARY, omega=omega)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240817)
