"""Exception types raised by the simulation layer."""


class SimulationError(Exception):
    """Base class for numerical failures in the simulator."""


class NotHermitianError(SimulationError):
    """Input matrix violates a Hermiticity precondition."""


class StepTooLargeError(SimulationError):
    """A normalized sample left the physical simplex; the step size is too coarse."""


class NonFiniteStateError(SimulationError):
    """NaN or Inf appeared in the integrator state."""


class ZeroTraceError(SimulationError):
    """Normalization requested for a matrix with (numerically) zero trace."""


class NoConvergenceError(SimulationError):
    """Fixed-point iteration hit its iteration cap without settling."""


class DegenerateLeadingEigenvalueError(SimulationError):
    """Power iteration cannot isolate a unique dominant eigenmatrix."""


class InvalidStateError(SimulationError):
    """Matrix is too far from a density matrix to evaluate an entropy."""


class UsageError(Exception):
    """Bad command line or config file input; carries the offending token."""


class ConflictError(UsageError):
    """Mutually inconsistent command line options."""
