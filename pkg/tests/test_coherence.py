import math

import numpy as np
import pytest

from ptqubit import coherence
from ptqubit.dynamics import initial_state, thermal_state
from ptqubit.errors import InvalidStateError

from conftest import random_density

# Binary entropy of the N=5 thermal populations (5/11, 6/11), direct
# evaluation of -sum(p log2 p).
THERMAL_ENTROPY_BITS = 0.9940302114769565


def grid_min_relative_entropy(rho: np.ndarray, n_points: int = 101) -> float:
    """Brute-force min over diagonal states delta of S(rho || delta).

    S(rho||delta) = -S(rho) - sum_i rho_ii log2 delta_ii for diagonal
    delta, scanned on a uniform grid of qubit diagonals.
    """
    ev = np.clip(np.linalg.eigvalsh(rho), 0.0, 1.0)
    s_rho = -sum(v * math.log2(v) for v in ev if v > 0.0)
    p0, p1 = rho[0, 0].real, rho[1, 1].real
    best = math.inf
    for k in range(n_points):
        d0 = k / (n_points - 1)
        cross = 0.0
        for p, d in ((p0, d0), (p1, 1.0 - d0)):
            if p > 0.0:
                if d == 0.0:
                    cross = math.inf
                    break
                cross -= p * math.log2(d)
        best = min(best, cross - s_rho)
    return best


class TestL1Coherence:
    def test_balanced_superposition(self):
        assert coherence.l1_coherence(initial_state(math.pi / 4, 0.0)) == pytest.approx(1.0)

    def test_ground_state(self):
        assert coherence.l1_coherence(initial_state(math.pi / 2, 0.0)) == 0.0

    def test_maximally_mixed(self):
        assert coherence.l1_coherence(0.5 * np.eye(2, dtype=complex)) == 0.0


class TestVonNeumannEntropy:
    def test_maximally_mixed_is_one_bit(self):
        assert coherence.von_neumann_entropy(0.5 * np.eye(2, dtype=complex)) == pytest.approx(1.0)

    def test_pure_states_have_zero_entropy(self, rng):
        for _ in range(20):
            theta, phi = rng.uniform(0, math.pi), rng.uniform(0, 2 * math.pi)
            s = coherence.von_neumann_entropy(initial_state(theta, phi))
            assert s == pytest.approx(0.0, abs=1e-12)

    def test_thermal_populations(self):
        s = coherence.von_neumann_entropy(thermal_state(5.0))
        assert s == pytest.approx(THERMAL_ENTROPY_BITS, abs=1e-12)

    def test_natural_log_base(self):
        s = coherence.von_neumann_entropy(0.5 * np.eye(2, dtype=complex), base=math.e)
        assert s == pytest.approx(math.log(2.0), abs=1e-14)

    def test_rejects_unphysical_eigenvalue(self):
        with pytest.raises(InvalidStateError):
            coherence.von_neumann_entropy(np.diag([1.1, -0.1]).astype(complex))

    def test_clamps_tiny_negative_eigenvalue(self):
        rho = initial_state(math.pi / 4, 0.0)
        rho[0, 0] -= 1e-10
        assert coherence.von_neumann_entropy(rho) >= 0.0


class TestRelativeEntropyCoherence:
    def test_balanced_superposition_is_one_bit(self):
        assert coherence.relative_entropy_coherence(
            initial_state(math.pi / 4, 0.0)
        ) == pytest.approx(1.0)

    def test_diagonal_states_are_incoherent(self, rng):
        for _ in range(20):
            p0 = rng.uniform(0, 1)
            rho = np.diag([p0, 1 - p0]).astype(complex)
            assert coherence.relative_entropy_coherence(rho) == pytest.approx(0.0, abs=1e-14)

    def test_ground_state_start(self):
        assert coherence.relative_entropy_coherence(initial_state(math.pi / 2, 0.0)) == 0.0

    def test_faithfulness(self, rng):
        for _ in range(100):
            rho = random_density(rng)
            c_re = coherence.relative_entropy_coherence(rho)
            if abs(rho[0, 1]) < 1e-10:
                assert c_re <= 1e-10
            else:
                assert c_re > 0.0

    def test_agreement_and_phase_invariance(self, rng):
        for _ in range(50):
            rho = random_density(rng)
            pair = coherence.coherence_pair(rho)
            assert (pair.c_re > 0) == (pair.c_l1 > 0)
            assert 0.0 <= pair.c_l1 <= 1.0
            assert 0.0 <= pair.c_re <= 1.0
            alpha = rng.uniform(0, 2 * math.pi)
            rotated = rho.copy()
            rotated[0, 1] *= np.exp(1j * alpha)
            rotated[1, 0] = rotated[0, 1].conjugate()
            rotated_pair = coherence.coherence_pair(rotated)
            assert rotated_pair.c_l1 == pytest.approx(pair.c_l1, abs=1e-13)
            assert rotated_pair.c_re == pytest.approx(pair.c_re, abs=1e-12)

    def test_matches_grid_minimization(self):
        rng = np.random.default_rng(173)
        for _ in range(20):
            rho = random_density(rng)
            direct = coherence.relative_entropy_coherence(rho)
            brute = grid_min_relative_entropy(rho)
            # grid minimum sits above the exact minimum, never below
            assert -1e-12 <= brute - direct <= 1e-4
