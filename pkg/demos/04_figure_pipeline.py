#!/usr/bin/env python3
"""End-to-end dataset pipeline.

run_figures writes the four CSV datasets (sweep and comparison, one
pair per coherence measure) exactly as the `ptqubit figures` CLI
subcommand does.  The trailing comment block of the sweep files holds
the steady-state summary.  Rendering to SVG/PNG is the job of the
separate plotkit front end:

    ptqubit figures --out=figures
    node plotkit/dist/main.js figures rendered --format=svg
"""

from pathlib import Path

from ptqubit import run_figures

out = Path("figures")
paths = run_figures(out)
print("wrote:")
for path in paths:
    print(f"  {path}")

summary_lines = [
    line for line in (out / "fig1.csv").read_text().splitlines() if line.startswith("#")
]
print("\nsteady-state summary block of fig1.csv:")
for line in summary_lines:
    print(f"  {line}")
