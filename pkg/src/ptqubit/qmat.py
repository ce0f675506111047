"""Dense complex linear algebra for 2x2 and 4x4 matrices.

Everything here is a pure function on small numpy arrays.  Basis
convention for two-level operators: index 0 is the excited state,
index 1 the ground state, so sigma_z = diag(+1, -1) and
sigma_plus = |excited><ground|.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import NotHermitianError

IDENTITY2 = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
SIGMA_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)
SIGMA_PLUS = np.array([[0.0, 1.0], [0.0, 0.0]], dtype=complex)
SIGMA_MINUS = np.array([[0.0, 0.0], [1.0, 0.0]], dtype=complex)

for _m in (IDENTITY2, SIGMA_X, SIGMA_Y, SIGMA_Z, SIGMA_PLUS, SIGMA_MINUS):
    _m.setflags(write=False)

# Taylor order for the scaled exponential core; remainder at ||A|| <= 0.5
# is below 1e-19, far under the 1e-12 accuracy target.
_EXPM_TAYLOR_ORDER = 16
_EXPM_SCALE_THRESHOLD = 0.5


def dagger(a: np.ndarray) -> np.ndarray:
    """Conjugate transpose."""
    return a.conj().T


def commutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """[a, b] = ab - ba."""
    return a @ b - b @ a


def anticommutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """{a, b} = ab + ba."""
    return a @ b + b @ a


def hermiticity_defect(a: np.ndarray) -> float:
    """Largest entrywise deviation of a from its conjugate transpose."""
    return float(np.abs(a - a.conj().T).max())


def hermitian_eigenvalues(h: np.ndarray, tol: float = 1e-10) -> tuple[float, float]:
    """Eigenvalues of a Hermitian 2x2 matrix, descending.

    Uses the closed form mean +- sqrt(((h00-h11)/2)^2 + |h01|^2), which is
    exact and branch-free; no iterative solver is needed at this size.
    Raises NotHermitianError if the defect exceeds ``tol``.
    """
    if hermiticity_defect(h) > tol:
        raise NotHermitianError(
            f"matrix is not Hermitian within {tol:g} (defect {hermiticity_defect(h):.3e})"
        )
    mean = 0.5 * (h[0, 0].real + h[1, 1].real)
    half_gap = 0.5 * (h[0, 0].real - h[1, 1].real)
    radius = math.hypot(half_gap, abs(h[0, 1]))
    return mean + radius, mean - radius


def one_norm(a: np.ndarray) -> float:
    """Maximum absolute column sum."""
    return float(np.abs(a).sum(axis=0).max())


def expm4(a: np.ndarray) -> np.ndarray:
    """Matrix exponential of a 4x4 complex matrix.

    Scaling and squaring: a is divided by 2**s until its 1-norm drops
    below 0.5, the exponential of the scaled matrix is evaluated with a
    truncated Taylor series (Horner form), and the result is squared s
    times.  Raises OverflowError when intermediates leave the
    representable range.
    """
    a = np.asarray(a, dtype=complex)
    if a.shape != (4, 4):
        raise ValueError(f"expected a 4x4 matrix, got shape {a.shape}")
    if not np.isfinite(a).all():
        raise ValueError("matrix has non-finite entries")

    norm = one_norm(a)
    squarings = 0
    if norm > _EXPM_SCALE_THRESHOLD:
        squarings = max(0, math.ceil(math.log2(norm / _EXPM_SCALE_THRESHOLD)))
    scaled = a / (2.0**squarings)

    eye = np.eye(4, dtype=complex)
    result = eye.copy()
    for k in range(_EXPM_TAYLOR_ORDER, 0, -1):
        result = eye + (scaled @ result) / k

    with np.errstate(over="ignore", invalid="ignore"):
        for _ in range(squarings):
            result = result @ result
            if not np.isfinite(result).all():
                raise OverflowError("matrix exponential overflowed during squaring")
    return result
