"""Scenario configuration and CSV datasets.

Parses command-line tokens (plus an optional key=value config file) into
a ScenarioConfig and runs single trajectories, three-way drive
comparisons, and coupling sweeps.  All CSV output is deterministic:
fixed column order, 17-significant-digit decimal formatting, LF line
endings, so identical configs produce byte-identical files.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from pathlib import Path

from . import coherence
from .dynamics import DriveKind, SystemParams, initial_state, integrate, steady_state
from .errors import ConflictError, UsageError

DEFAULT_N_OCC = 5.0
DEFAULT_OMEGA = 10.0 / math.sqrt(2.0)
# Coupling values for the sweep scenarios; includes the comparison
# scenario's value so sweep and comparison figures share one curve.
DEFAULT_SWEEP = (1.0, 3.0, 5.0, DEFAULT_OMEGA, 10.0)

COMMANDS = ("run", "compare", "sweep", "figures")
TRAJECTORY_COLUMNS = ("t", "raw_trace", "pop_e", "pop_g", "re_rho01", "im_rho01", "c_l1", "c_re")
# Comparison series order; the renderer maps these to green/blue/red.
COMPARE_ORDER = (DriveKind.NONE, DriveKind.REAL, DriveKind.IMAGINARY)


@dataclass(frozen=True)
class ScenarioConfig:
    params: SystemParams
    t_end: float = 10.0
    dt: float = 1e-3
    sample_every: int = 10
    sweep: tuple[float, ...] | None = None
    output_path: Path = Path("out.csv")
    log_base: float = 2.0

    def __post_init__(self) -> None:
        if not 0.0 < self.dt < self.t_end:
            raise UsageError(f"need 0 < dt < t_end, got dt={self.dt} t_end={self.t_end}")
        if self.sample_every < 1:
            raise UsageError(f"sample_every must be >= 1, got {self.sample_every}")
        if self.sweep is not None:
            if len(self.sweep) == 0:
                raise UsageError("sweep list is empty")
            if any(v < 0.0 for v in self.sweep):
                raise UsageError(f"sweep values must be >= 0, got {self.sweep}")
            if any(b <= a for a, b in zip(self.sweep, self.sweep[1:])):
                raise UsageError(f"sweep values must be strictly increasing, got {self.sweep}")


_DEFAULTS = {
    "drive": "imaginary",
    "theta": "pi/2",
    "phi": "0",
    "n": "5",
    "omega": f"{DEFAULT_OMEGA:.17g}",
    "t_end": "10",
    "dt": "1e-3",
    "sample_every": "10",
    "sweep": None,
    "out": None,
    "log_base": "2",
}

_FIGURES_KEYS = {"out"}


def _parse_angle(token: str, key: str) -> float:
    table = {"pi": math.pi, "pi/2": math.pi / 2.0, "pi/4": math.pi / 4.0}
    if token in table:
        return table[token]
    try:
        return float(token)
    except ValueError:
        raise UsageError(f"--{key}={token}: expected radians or pi/2, pi/4") from None


def _parse_float(token: str, key: str) -> float:
    try:
        return float(token)
    except ValueError:
        raise UsageError(f"--{key}={token}: expected a number") from None


def _parse_drive(token: str) -> DriveKind:
    try:
        return DriveKind(token)
    except ValueError:
        raise UsageError(f"--drive={token}: expected none, real or imaginary") from None


def parse_config_file(text: str) -> dict[str, str]:
    """key=value lines with # comments into a raw option dict."""
    values: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"config line {lineno}: expected key=value, got {raw!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        key = key.replace("-", "_")
        if key not in _DEFAULTS:
            raise UsageError(f"config line {lineno}: unknown key {key!r}")
        values[key] = value
    return values


def _split_flags(args: list[str]) -> tuple[dict[str, str], str | None]:
    """Flag tokens into a raw option dict plus the --config path, if any."""
    flags: dict[str, str] = {}
    config_path: str | None = None
    i = 0
    while i < len(args):
        token = args[i]
        if not token.startswith("--"):
            raise UsageError(f"unexpected token {token!r}")
        body = token[2:]
        if "=" in body:
            key, value = body.split("=", 1)
        else:
            key = body
            if i + 1 >= len(args):
                raise UsageError(f"{token}: missing value")
            i += 1
            value = args[i]
        key = key.replace("-", "_")
        if key == "config":
            config_path = value
        elif key in _DEFAULTS:
            flags[key] = value
        else:
            raise UsageError(f"unknown option {token!r}")
        i += 1
    return flags, config_path


def parse_config(args: list[str], file_text: str | None = None) -> tuple[str, ScenarioConfig]:
    """Tokens (and optional config file text) into (command, ScenarioConfig).

    Precedence: flags override file values override defaults.  Unknown
    keys are rejected with UsageError; flags that contradict the chosen
    command raise ConflictError.
    """
    args = list(args)
    command = "run"
    if args and not args[0].startswith("--"):
        command = args.pop(0)
        if command not in COMMANDS:
            raise UsageError(f"unknown command {command!r}; expected one of {', '.join(COMMANDS)}")

    flags, config_path = _split_flags(args)

    if command in ("run", "compare") and "sweep" in flags:
        raise ConflictError(f"--sweep does not apply to {command!r}")
    if command == "sweep" and "omega" in flags:
        raise ConflictError("--omega conflicts with sweep; pass the couplings via --sweep")
    if command == "figures":
        stray = sorted(set(flags) - _FIGURES_KEYS)
        if stray:
            raise ConflictError(f"figures uses its fixed scenario parameters; --{stray[0]} does not apply")
        if config_path is not None:
            raise ConflictError("figures uses its fixed scenario parameters; --config does not apply")

    if file_text is None and config_path is not None:
        file_text = Path(config_path).read_text(encoding="utf-8")

    merged = dict(_DEFAULTS)
    if file_text is not None:
        merged.update(parse_config_file(file_text))
    merged.update(flags)

    drive = _parse_drive(merged["drive"])
    theta = _parse_angle(merged["theta"], "theta")
    phi = _parse_angle(merged["phi"], "phi")
    n_occ = _parse_float(merged["n"], "n")
    omega = _parse_float(merged["omega"], "omega")
    if n_occ < 0.0:
        raise UsageError(f"--n={merged['n']}: must be >= 0")
    if omega < 0.0:
        raise UsageError(f"--omega={merged['omega']}: must be >= 0")

    t_end = _parse_float(merged["t_end"], "t-end")
    dt = _parse_float(merged["dt"], "dt")
    try:
        sample_every = int(merged["sample_every"])
    except ValueError:
        raise UsageError(f"--sample-every={merged['sample_every']}: expected an integer") from None

    sweep: tuple[float, ...] | None = None
    if command == "sweep":
        raw_sweep = merged["sweep"]
        if raw_sweep is None:
            sweep = DEFAULT_SWEEP
        else:
            sweep = tuple(_parse_float(item, "sweep") for item in raw_sweep.split(","))

    if merged["log_base"] == "2":
        log_base = 2.0
    elif merged["log_base"] == "e":
        log_base = math.e
    else:
        raise UsageError(f"--log-base={merged['log_base']}: expected 2 or e")

    default_out = {"run": "run.csv", "compare": "compare.csv", "sweep": "sweep.csv", "figures": "figures"}
    out = merged["out"] if merged["out"] is not None else default_out[command]

    params = SystemParams(
        drive=drive, n_occ=n_occ, omega_over_gamma=omega, theta=theta, phi=phi
    )
    config = ScenarioConfig(
        params=params,
        t_end=t_end,
        dt=dt,
        sample_every=sample_every,
        sweep=sweep,
        output_path=Path(out),
        log_base=log_base,
    )
    return command, config


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def _trajectory_rows(traj) -> list[str]:
    rows = []
    for i in range(len(traj)):
        state = traj.states[i]
        rows.append(
            ",".join(
                _fmt(v)
                for v in (
                    traj.times[i],
                    traj.raw_trace[i],
                    state[0, 0].real,
                    state[1, 1].real,
                    state[0, 1].real,
                    state[0, 1].imag,
                    traj.c_l1[i],
                    traj.c_re[i],
                )
            )
        )
    return rows


def _run_trajectory(cfg: ScenarioConfig, params: SystemParams):
    rho0 = initial_state(params.theta, params.phi)
    return integrate(
        rho0, params, cfg.t_end, cfg.dt, cfg.sample_every, log_base=cfg.log_base
    )


def run_single(cfg: ScenarioConfig) -> Path:
    """One trajectory to CSV: header plus one row per sample."""
    traj = _run_trajectory(cfg, cfg.params)
    lines = [",".join(TRAJECTORY_COLUMNS)]
    lines.extend(_trajectory_rows(traj))
    return _write(cfg.output_path, lines)


def _compare_lines(cfg: ScenarioConfig) -> list[str]:
    lines = ["drive," + ",".join(TRAJECTORY_COLUMNS)]
    for kind in COMPARE_ORDER:
        traj = _run_trajectory(cfg, replace(cfg.params, drive=kind))
        lines.extend(f"{kind.value},{row}" for row in _trajectory_rows(traj))
    return lines


def run_compare(cfg: ScenarioConfig) -> Path:
    """All three drive kinds on one grid, long format with a drive column."""
    return _write(cfg.output_path, _compare_lines(cfg))


def _sweep_lines(cfg: ScenarioConfig) -> list[str]:
    if not cfg.sweep:
        raise UsageError("sweep command needs a non-empty sweep list")
    lines = ["omega," + ",".join(TRAJECTORY_COLUMNS)]
    summaries = []
    for omega in cfg.sweep:
        params = replace(cfg.params, omega_over_gamma=omega)
        traj = _run_trajectory(cfg, params)
        lines.extend(f"{_fmt(omega)},{row}" for row in _trajectory_rows(traj))
        fixed = steady_state(params)
        pair = coherence.coherence_pair(fixed, cfg.log_base)
        summaries.append((omega, pair.c_l1, pair.c_re))
    lines.append("# steady_state_summary")
    lines.append("# omega,c_l1,c_re")
    for omega, c_l1, c_re in summaries:
        lines.append(f"# {_fmt(omega)},{_fmt(c_l1)},{_fmt(c_re)}")
    return lines


def run_sweep(cfg: ScenarioConfig) -> Path:
    """One trajectory per coupling value, long format with an omega column.

    A trailing comment block records the steady-state coherence values
    for each coupling, computed from the dominant-eigenmatrix fixed
    point rather than the trajectory tail.
    """
    return _write(cfg.output_path, _sweep_lines(cfg))


def run_figures(output_dir: Path | str, dt: float = 1e-3, sample_every: int = 10) -> list[Path]:
    """The four standard figure datasets into fig1.csv .. fig4.csv.

    fig1/fig3: coupling sweep from the incoherent start theta=pi/2 (the
    l1-norm and entropy figures read different columns of the same data).
    fig2/fig4: three-drive comparison from the balanced superposition
    theta=pi/4 with phi=pi, whose coherence initially points against the
    drive axis; that phase is what produces the decay-then-revival
    shape of the gain-drive curve (with phi=0 the coherence relaxes
    monotonically and never dips).
    """
    out = Path(output_dir)
    out.mkdir(parents=True, exist_ok=True)

    sweep_params = SystemParams(
        drive=DriveKind.IMAGINARY,
        n_occ=DEFAULT_N_OCC,
        omega_over_gamma=DEFAULT_OMEGA,
        theta=math.pi / 2.0,
        phi=0.0,
    )
    compare_params = replace(sweep_params, theta=math.pi / 4.0, phi=math.pi)

    sweep_cfg = ScenarioConfig(
        params=sweep_params,
        dt=dt,
        sample_every=sample_every,
        sweep=DEFAULT_SWEEP,
        output_path=out / "fig1.csv",
    )
    sweep_lines = _sweep_lines(sweep_cfg)
    compare_cfg = ScenarioConfig(
        params=compare_params,
        dt=dt,
        sample_every=sample_every,
        output_path=out / "fig2.csv",
    )
    compare_lines = _compare_lines(compare_cfg)

    return [
        _write(out / "fig1.csv", sweep_lines),
        _write(out / "fig2.csv", compare_lines),
        _write(out / "fig3.csv", sweep_lines),
        _write(out / "fig4.csv", compare_lines),
    ]


def _write(path: Path, lines: list[str]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text("\n".join(lines) + "\n", encoding="utf-8", newline="\n")
    return path
