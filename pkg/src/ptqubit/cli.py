"""Command line front end.

Subcommands: run | compare | sweep | figures.  Exit codes: 0 success,
2 usage error, 3 numerical error, 4 I/O error.
"""

from __future__ import annotations

import sys

from . import scenarios
from .errors import SimulationError, UsageError

USAGE = """\
usage: ptqubit <run|compare|sweep|figures> [options]

options:
  --drive={none|real|imaginary}   drive kind (default imaginary)
  --theta=<rad|pi/2|pi/4>         initial polar angle (default pi/2)
  --phi=<rad|pi/2|pi/4>           initial phase (default 0)
  --n=<float>                     bath occupancy N (default 5)
  --omega=<float>                 coupling Omega/gamma0 (default 10/sqrt(2))
  --t-end=<float>                 horizon in gamma0*t (default 10)
  --dt=<float>                    step in gamma0*t (default 1e-3)
  --sample-every=<int>            steps between samples (default 10)
  --sweep=v1,v2,...               couplings for the sweep command
  --out=<path>                    output CSV (figures: output directory)
  --config=<file>                 key=value file; flags take precedence
  --log-base={2|e}                entropy log base (default 2)
"""


def main(argv: list[str] | None = None) -> int:
    args = list(sys.argv[1:]) if argv is None else list(argv)
    if args and args[0] in ("-h", "--help", "help"):
        print(USAGE, end="")
        return 0
    try:
        command, cfg = scenarios.parse_config(args)
        if command == "run":
            path = scenarios.run_single(cfg)
        elif command == "compare":
            path = scenarios.run_compare(cfg)
        elif command == "sweep":
            path = scenarios.run_sweep(cfg)
        else:
            for path in scenarios.run_figures(cfg.output_path):
                print(path)
            return 0
        print(path)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SimulationError as exc:
        print(f"numerical error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 4
    return 0


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
