"""Master equation of a driven dissipative two-level system.

The unnormalized state evolves under a time-independent generator built
from three pieces: thermal emission/absorption dissipators with bath
occupancy N, and one of three drive terms selected by DriveKind.  A
gain-type drive enters as an anticommutator (Omega/2){sigma_x, rho} and
does not conserve the trace; the physical state at any instant is the
trace-normalized matrix.

gamma0 enters only through the transition rates and defaults to 1, so
time is read in units of 1/gamma0 (t means gamma0*t throughout),
matching the Omega/gamma0 parametrization used by the scenario layer.
In particular the generator vanishes entirely in the joint limit
Omega=0, gamma0->0, leaving any state constant on a fixed grid.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import coherence, qmat
from .errors import (
    NoConvergenceError,
    NonFiniteStateError,
    StepTooLargeError,
    ZeroTraceError,
)

# Unnormalized trace above this triggers an exact rescale by the trace;
# the generator is linear, so normalized observables are unaffected.
_RESCALE_THRESHOLD = 1e100


class DriveKind(Enum):
    """Algebraic form of the external drive term."""

    NONE = "none"
    REAL = "real"
    IMAGINARY = "imaginary"


@dataclass(frozen=True)
class SystemParams:
    """Physical parameters of one scenario.

    gamma0 sets the time unit and defaults to 1; n_occ is the mean
    thermal photon number of the bath; omega_over_gamma is the drive
    coupling in units of gamma0; theta/phi fix the initial pure state
    cos(theta)|e> + sin(theta) e^{i phi}|g>.
    """

    drive: DriveKind
    n_occ: float
    omega_over_gamma: float
    theta: float
    phi: float = 0.0
    gamma0: float = 1.0

    def __post_init__(self) -> None:
        if not self.gamma0 > 0.0:
            raise ValueError(f"gamma0 must be positive, got {self.gamma0}")
        if self.n_occ < 0.0:
            raise ValueError(f"n_occ must be non-negative, got {self.n_occ}")
        if self.omega_over_gamma < 0.0:
            raise ValueError(
                f"omega_over_gamma must be non-negative, got {self.omega_over_gamma}"
            )

    @property
    def rate_down(self) -> float:
        """Emission rate gamma0 (N + 1)."""
        return self.gamma0 * (self.n_occ + 1.0)

    @property
    def rate_up(self) -> float:
        """Absorption rate gamma0 N."""
        return self.gamma0 * self.n_occ

    @property
    def omega(self) -> float:
        """Drive coupling in physical units."""
        return self.omega_over_gamma * self.gamma0


@dataclass(frozen=True)
class Trajectory:
    """Sampled history of one integration.

    times holds gamma0*t; raw_trace the unnormalized trace at each
    sample (before any rescale bookkeeping it reflects the non-conserved
    probability); states the trace-normalized Hermitized 2x2 matrices;
    herm_defect the Hermiticity defect of each sample before
    re-symmetrization; n_rescales how often the overflow guard fired.
    """

    times: np.ndarray
    raw_trace: np.ndarray
    states: np.ndarray
    c_l1: np.ndarray
    c_re: np.ndarray
    herm_defect: np.ndarray
    n_rescales: int

    def __len__(self) -> int:
        return len(self.times)


def _cos_sin(angle: float) -> tuple[float, float]:
    """cos/sin with exact values at multiples of pi/2.

    fp(pi/2) is not pi/2, so plain trig leaves ~1e-16 dirt in states
    meant to sit exactly on an axis (an incoherent start must have an
    exactly zero off-diagonal).
    """
    quarter = 0.5 * math.pi
    k = round(angle / quarter)
    if abs(angle - k * quarter) < 1e-12:
        k %= 4
        return (1.0, 0.0, -1.0, 0.0)[k], (0.0, 1.0, 0.0, -1.0)[k]
    return math.cos(angle), math.sin(angle)


def initial_state(theta: float, phi: float = 0.0) -> np.ndarray:
    """Projector onto cos(theta)|e> + sin(theta) e^{i phi}|g>."""
    cos_t, sin_t = _cos_sin(theta)
    cos_p, sin_p = _cos_sin(phi)
    amp = np.array([cos_t, sin_t * complex(cos_p, sin_p)])
    return np.outer(amp, amp.conj())


def thermal_state(n_occ: float) -> np.ndarray:
    """Detailed-balance fixed point diag(N, N+1)/(2N+1)."""
    return np.diag([n_occ, n_occ + 1.0]).astype(complex) / (2.0 * n_occ + 1.0)


def dissipator(rho: np.ndarray, p: SystemParams) -> np.ndarray:
    """Thermal emission and absorption terms acting on rho.

    Sum of gamma0(N+1) D[sigma_minus] and gamma0 N D[sigma_plus] with
    D[L]rho = L rho L^dag - {L^dag L, rho}/2; Hermitian and traceless
    for Hermitian input.
    """
    sp, sm = qmat.SIGMA_PLUS, qmat.SIGMA_MINUS
    proj_e = sp @ sm
    proj_g = sm @ sp
    down = sm @ rho @ sp - 0.5 * qmat.anticommutator(proj_e, rho)
    up = sp @ rho @ sm - 0.5 * qmat.anticommutator(proj_g, rho)
    return p.rate_down * down + p.rate_up * up


def drive_term(rho: np.ndarray, p: SystemParams) -> np.ndarray:
    """Drive contribution for the configured DriveKind.

    REAL is the von Neumann form -i(Omega/2)[sigma_x, rho]; IMAGINARY is
    the gain form (Omega/2){sigma_x, rho}, which feeds the trace.
    """
    if p.drive is DriveKind.NONE:
        return np.zeros((2, 2), dtype=complex)
    if p.drive is DriveKind.IMAGINARY:
        return 0.5 * p.omega * qmat.anticommutator(qmat.SIGMA_X, rho)
    return -0.5j * p.omega * qmat.commutator(qmat.SIGMA_X, rho)


def rhs(rho: np.ndarray, p: SystemParams) -> np.ndarray:
    """Full right-hand side of the master equation."""
    return drive_term(rho, p) + dissipator(rho, p)


def _scalar_deriv(p: SystemParams):
    """Entrywise form of rhs on (rho00, rho01, rho10, rho11).

    Algebraically identical to rhs(); used by the integrator because a
    closure over four complex scalars steps roughly 15x faster than
    composing 2x2 numpy products.
    """
    gd, gu = p.rate_down, p.rate_up
    gc = 0.5 * (gd + gu)
    half_omega = 0.5 * p.omega

    if p.drive is DriveKind.IMAGINARY:

        def deriv(a, b, c, d):
            pump = half_omega * (a + d)
            gain = half_omega * (b + c)
            return (
                -gd * a + gu * d + gain,
                -gc * b + pump,
                -gc * c + pump,
                gd * a - gu * d + gain,
            )

    elif p.drive is DriveKind.REAL:
        jho = 1j * half_omega

        def deriv(a, b, c, d):
            return (
                -gd * a + gu * d - jho * (c - b),
                -gc * b - jho * (d - a),
                -gc * c - jho * (a - d),
                gd * a - gu * d - jho * (b - c),
            )

    else:

        def deriv(a, b, c, d):
            return (-gd * a + gu * d, -gc * b, -gc * c, gd * a - gu * d)

    return deriv


def normalize(rho_raw: np.ndarray) -> np.ndarray:
    """Scale by 1/trace and re-symmetrize to (m + m^dag)/2.

    Raises ZeroTraceError when |trace| <= 1e-300.
    """
    trace = rho_raw[0, 0] + rho_raw[1, 1]
    if abs(trace) <= 1e-300:
        raise ZeroTraceError(f"trace {trace} too small to normalize")
    m = rho_raw / trace
    return 0.5 * (m + m.conj().T)


def integrate(
    rho0: np.ndarray,
    p: SystemParams,
    t_end: float,
    dt: float = 1e-3,
    sample_every: int = 10,
    log_base: float = 2.0,
) -> Trajectory:
    """Advance the unnormalized state with classic fixed-step RK4.

    The integrator carries the raw matrix so the trace stays a meaningful
    diagnostic of the non-conserving dynamics; samples record the raw
    trace and then the normalized state with both coherence measures.
    If the trace exceeds 1e100 the state is rescaled by it (exact for
    normalized observables by linearity) and the event counted.

    rho0 is expected to be Hermitian with unit trace for physical runs
    but is not rejected otherwise: the generator is linear, and scaled
    inputs yield scaled raw traces with identical normalized samples.

    Raises StepTooLargeError if a normalized sample's eigenvalue drops
    below -1e-6 and NonFiniteStateError on NaN/Inf.
    """
    if dt <= 0.0:
        raise ValueError(f"dt must be positive, got {dt}")
    if t_end < dt:
        raise ValueError(f"t_end {t_end} must be at least dt {dt}")
    if sample_every < 1:
        raise ValueError(f"sample_every must be >= 1, got {sample_every}")

    deriv = _scalar_deriv(p)
    h = dt
    n_steps = int(round(t_end / dt))
    a, b = complex(rho0[0, 0]), complex(rho0[0, 1])
    c, d = complex(rho0[1, 0]), complex(rho0[1, 1])

    times: list[float] = []
    raw_traces: list[float] = []
    states: list[np.ndarray] = []
    c_l1s: list[float] = []
    c_res: list[float] = []
    defects: list[float] = []
    n_rescales = 0

    def record(step: int) -> None:
        trace = a + d
        if not all(
            math.isfinite(v) for z in (a, b, c, d) for v in (z.real, z.imag)
        ):
            raise NonFiniteStateError(f"non-finite state at t={step * dt:g}")
        na, nb, nc, nd = a / trace, b / trace, c / trace, d / trace
        defect = max(
            abs(na - na.conjugate()), abs(nd - nd.conjugate()), abs(nb - nc.conjugate())
        )
        state = np.array(
            [
                [0.5 * (na + na.conjugate()), 0.5 * (nb + nc.conjugate())],
                [0.5 * (nc + nb.conjugate()), 0.5 * (nd + nd.conjugate())],
            ]
        )
        lo = qmat.hermitian_eigenvalues(state)[1]
        if lo < -1e-6:
            raise StepTooLargeError(
                f"normalized eigenvalue {lo:.3e} at t={step * dt:g}; reduce dt"
            )
        times.append(step * dt)
        raw_traces.append(trace.real)
        defects.append(defect)
        states.append(state)
        c_l1s.append(coherence.l1_coherence(state))
        c_res.append(coherence.relative_entropy_coherence(state, log_base))

    record(0)
    for step in range(1, n_steps + 1):
        a1, b1, c1, d1 = deriv(a, b, c, d)
        a2, b2, c2, d2 = deriv(
            a + 0.5 * h * a1, b + 0.5 * h * b1, c + 0.5 * h * c1, d + 0.5 * h * d1
        )
        a3, b3, c3, d3 = deriv(
            a + 0.5 * h * a2, b + 0.5 * h * b2, c + 0.5 * h * c2, d + 0.5 * h * d2
        )
        a4, b4, c4, d4 = deriv(a + h * a3, b + h * b3, c + h * c3, d + h * d3)
        sixth = h / 6.0
        a += sixth * (a1 + 2.0 * a2 + 2.0 * a3 + a4)
        b += sixth * (b1 + 2.0 * b2 + 2.0 * b3 + b4)
        c += sixth * (c1 + 2.0 * c2 + 2.0 * c3 + c4)
        d += sixth * (d1 + 2.0 * d2 + 2.0 * d3 + d4)
        trace = a + d
        if abs(trace) > _RESCALE_THRESHOLD:
            a, b, c, d = a / trace, b / trace, c / trace, d / trace
            n_rescales += 1
        if step % sample_every == 0 or step == n_steps:
            record(step)

    return Trajectory(
        times=np.array(times),
        raw_trace=np.array(raw_traces),
        states=np.array(states),
        c_l1=np.array(c_l1s),
        c_re=np.array(c_res),
        herm_defect=np.array(defects),
        n_rescales=n_rescales,
    )


def steady_state(p: SystemParams, tol: float = 1e-12, max_iter: int = 10_000) -> np.ndarray:
    """Fixed point of the normalized flow.

    Repeatedly applies the exact propagator over unit gamma0*t intervals
    with renormalization (power iteration on the dominant eigenmatrix of
    the generator) until successive iterates differ by less than tol and
    the normalized-flow residual rhs(r) - tr(rhs(r)) r is below
    tol*gamma0.  Raises NoConvergenceError at the iteration cap.
    """
    from . import liouville

    if tol <= 0.0:
        raise ValueError(f"tol must be positive, got {tol}")

    state = 0.5 * np.eye(2, dtype=complex)
    for _ in range(max_iter):
        advanced = normalize(liouville.propagate_exact(state, p, 1.0 / p.gamma0))
        settled = np.abs(advanced - state).max() < tol
        state = advanced
        if settled:
            flow = rhs(state, p)
            residual = flow - (flow[0, 0] + flow[1, 1]) * state
            if np.abs(residual).max() <= tol * p.gamma0:
                return state
    raise NoConvergenceError(f"steady state not reached in {max_iter} iterations")
