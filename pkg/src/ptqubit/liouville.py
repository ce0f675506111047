"""Vectorized 4x4 form of the master-equation generator.

Column stacking is used throughout: vec(rho) = (rho00, rho10, rho01,
rho11), so vec(A rho B) = kron(B^T, A) vec(rho).  The matrix exponential
of the generator is the exact propagator that serves as the integration
oracle, and power iteration on it extracts the dominant eigenmatrix.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import qmat
from .dynamics import DriveKind, SystemParams, rhs
from .errors import DegenerateLeadingEigenvalueError

# Hermitian basis used for the build-time self-check; the generator is
# complex-linear, so agreement on a basis implies agreement everywhere.
_CHECK_BASIS = (
    np.array([[1.0, 0.0], [0.0, 0.0]], dtype=complex),
    np.array([[0.0, 0.0], [0.0, 1.0]], dtype=complex),
    np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex),
    np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex),
)


def vec(rho: np.ndarray) -> np.ndarray:
    """Column-stack a 2x2 matrix into a length-4 vector."""
    return np.asarray(rho).reshape(4, order="F")


def unvec(v: np.ndarray) -> np.ndarray:
    """Inverse of vec."""
    return np.asarray(v).reshape((2, 2), order="F")


@dataclass(frozen=True)
class Liouvillian:
    """Immutable 4x4 generator acting on column-stacked states."""

    matrix: np.ndarray
    params: SystemParams


def _left_right(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Superoperator of rho -> a rho b."""
    return np.kron(b.T, a)


def build_liouvillian(p: SystemParams) -> Liouvillian:
    """Assemble the generator and self-check it against rhs().

    The returned matrix satisfies L vec(rho) = vec(rhs(rho)) for every
    rho; construction verifies this on a Hermitian basis to 1e-12.
    """
    eye = qmat.IDENTITY2
    sp, sm, sx = qmat.SIGMA_PLUS, qmat.SIGMA_MINUS, qmat.SIGMA_X
    proj_e, proj_g = sp @ sm, sm @ sp

    matrix = p.rate_down * (
        _left_right(sm, sp)
        - 0.5 * (_left_right(proj_e, eye) + _left_right(eye, proj_e))
    )
    matrix = matrix + p.rate_up * (
        _left_right(sp, sm)
        - 0.5 * (_left_right(proj_g, eye) + _left_right(eye, proj_g))
    )
    if p.drive is DriveKind.IMAGINARY:
        matrix = matrix + 0.5 * p.omega * (_left_right(sx, eye) + _left_right(eye, sx))
    elif p.drive is DriveKind.REAL:
        matrix = matrix - 0.5j * p.omega * (_left_right(sx, eye) - _left_right(eye, sx))

    for basis in _CHECK_BASIS:
        defect = np.abs(unvec(matrix @ vec(basis)) - rhs(basis, p)).max()
        if defect > 1e-12:
            raise AssertionError(
                f"vectorized generator disagrees with rhs by {defect:.3e}"
            )
    return Liouvillian(matrix=matrix, params=p)


def propagate_exact(rho0: np.ndarray, p: SystemParams, t: float) -> np.ndarray:
    """Closed-form solution expm(t L) applied to rho0.

    t is read on the same clock as the generator's rates, i.e. gamma0*t
    units under the default gamma0=1 convention.  OverflowError from the
    exponential propagates to the caller; for a gain drive over long
    horizons, split t into unit intervals and renormalize between them.
    """
    if t < 0.0:
        raise ValueError(f"t must be non-negative, got {t}")
    generator = build_liouvillian(p).matrix
    return unvec(qmat.expm4(generator * t) @ vec(rho0))


def leading_eigenmatrix(
    p: SystemParams, tol: float = 1e-12, max_iter: int = 10_000
) -> tuple[float, np.ndarray]:
    """Dominant eigenvalue and trace-normalized eigenmatrix of the generator.

    Power iteration on the unit-interval propagator expm(L / gamma0),
    renormalizing by the trace each round; the trace gain of a settled
    iterate is exp(growth_rate).  growth_rate is the asymptotic rate of
    d/dt log tr(rho) in gamma0*t units: zero for trace-preserving kinds,
    positive for the gain drive.

    Raises DegenerateLeadingEigenvalueError when the iteration has not
    settled by max_iter, the signature of (near-)degenerate leading real
    parts or a complex-conjugate dominant pair.
    """
    generator = build_liouvillian(p).matrix
    propagator = qmat.expm4(generator / p.gamma0)

    state = 0.5 * np.eye(2, dtype=complex)
    for _ in range(max_iter):
        advanced = unvec(propagator @ vec(state))
        gain = (advanced[0, 0] + advanced[1, 1]).real
        if not (math.isfinite(gain) and gain > 0.0):
            raise DegenerateLeadingEigenvalueError(
                f"trace gain {gain!r} is not a positive real number"
            )
        advanced = advanced / gain
        advanced = 0.5 * (advanced + advanced.conj().T)
        if np.abs(advanced - state).max() < tol:
            return math.log(gain), advanced
        state = advanced
    raise DegenerateLeadingEigenvalueError(
        f"power iteration did not settle in {max_iter} rounds"
    )
