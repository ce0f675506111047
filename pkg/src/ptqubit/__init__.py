"""Simulator for a dissipative two-level system with a trace
non-conserving (gain-type) drive, tracking quantum coherence measures
of the trace-normalized state over time."""

from .coherence import (
    CoherencePair,
    coherence_pair,
    l1_coherence,
    relative_entropy_coherence,
    von_neumann_entropy,
)
from .dynamics import (
    DriveKind,
    SystemParams,
    Trajectory,
    dissipator,
    drive_term,
    initial_state,
    integrate,
    normalize,
    rhs,
    steady_state,
    thermal_state,
)
from .liouville import (
    Liouvillian,
    build_liouvillian,
    leading_eigenmatrix,
    propagate_exact,
    unvec,
    vec,
)
from .scenarios import (
    DEFAULT_N_OCC,
    DEFAULT_OMEGA,
    DEFAULT_SWEEP,
    ScenarioConfig,
    parse_config,
    run_compare,
    run_figures,
    run_single,
    run_sweep,
)

__all__ = [
    "CoherencePair",
    "DEFAULT_N_OCC",
    "DEFAULT_OMEGA",
    "DEFAULT_SWEEP",
    "DriveKind",
    "Liouvillian",
    "ScenarioConfig",
    "SystemParams",
    "Trajectory",
    "build_liouvillian",
    "coherence_pair",
    "dissipator",
    "drive_term",
    "initial_state",
    "integrate",
    "l1_coherence",
    "leading_eigenmatrix",
    "normalize",
    "parse_config",
    "propagate_exact",
    "relative_entropy_coherence",
    "rhs",
    "run_compare",
    "run_figures",
    "run_single",
    "run_sweep",
    "steady_state",
    "thermal_state",
    "unvec",
    "vec",
    "von_neumann_entropy",
]

__version__ = "0.1.0"
