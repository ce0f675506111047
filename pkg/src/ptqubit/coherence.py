"""Coherence measures on normalized qubit states.

Two quantifiers are provided: the l1 norm of the off-diagonal elements
and the relative entropy of coherence S(rho_diag) - S(rho).  Entropies
default to log base 2 so a balanced pure superposition scores exactly 1;
pass base=math.e for natural-log plots.
"""

from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np

from . import qmat
from .errors import InvalidStateError

# Integrator round-off can push a pure state's small eigenvalue slightly
# negative; such values are clamped to zero, anything below this bound
# is rejected as unphysical.
_EIGENVALUE_REJECT = -1e-6


class CoherencePair(NamedTuple):
    c_l1: float
    c_re: float


def l1_coherence(rho: np.ndarray) -> float:
    """Sum of absolute off-diagonal elements, 2|rho01| for a qubit."""
    return float(abs(rho[0, 1]) + abs(rho[1, 0]))


def _entropy(probs: tuple[float, float], base: float) -> float:
    log_base = math.log(base)
    total = 0.0
    for p in probs:
        p = min(max(p, 0.0), 1.0)
        if p > 0.0:
            total -= p * math.log(p) / log_base
    return total


def von_neumann_entropy(rho: np.ndarray, base: float = 2.0) -> float:
    """-sum(lambda log lambda) over the eigenvalues of a qubit state.

    Eigenvalues are clamped into [0, 1] before the log (0 log 0 = 0);
    anything below -1e-6 means rho is not a state and raises
    InvalidStateError.
    """
    hi, lo = qmat.hermitian_eigenvalues(rho)
    if lo < _EIGENVALUE_REJECT:
        raise InvalidStateError(f"eigenvalue {lo:.3e} is too negative for a state")
    return _entropy((hi, lo), base)


def relative_entropy_coherence(rho: np.ndarray, base: float = 2.0) -> float:
    """S(diag(rho)) - S(rho), the entropy cost of erasing off-diagonals.

    The result is non-negative for any state; tiny negative values from
    rounding (within 1e-12) are clamped to zero.
    """
    s_diag = _entropy((rho[0, 0].real, rho[1, 1].real), base)
    value = s_diag - von_neumann_entropy(rho, base)
    if -1e-12 < value < 0.0:
        return 0.0
    return value


def coherence_pair(rho: np.ndarray, base: float = 2.0) -> CoherencePair:
    """Both measures of one state."""
    return CoherencePair(l1_coherence(rho), relative_entropy_coherence(rho, base))
