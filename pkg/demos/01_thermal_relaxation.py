#!/usr/bin/env python3
"""Undriven qubit in a thermal bath.

Starting from the ground state, emission and absorption balance out at
the detailed-balance populations (N, N+1)/(2N+1); with N = 5 that is
(5/11, 6/11).  Without a drive the generator preserves the trace, so the
raw trace column stays at 1 and coherence never appears.
"""

import math

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from ptqubit import DriveKind, SystemParams, initial_state, integrate, thermal_state

p = SystemParams(
    drive=DriveKind.NONE, n_occ=5.0, omega_over_gamma=0.0, theta=math.pi / 2
)
traj = integrate(initial_state(p.theta, p.phi), p, t_end=1.0, dt=1e-3)

target = thermal_state(p.n_occ)
print(f"bath occupancy N = {p.n_occ}, relaxation rate (2N+1) gamma0 = {2 * p.n_occ + 1:g}")
print(f"excited population: start {traj.states[0][0, 0].real:.6f} "
      f"-> end {traj.states[-1][0, 0].real:.6f} (thermal {target[0, 0].real:.6f})")
print(f"trace drift: max |tr - 1| = {abs(traj.raw_trace - 1.0).max():.2e}")

fig, ax = plt.subplots(figsize=(6, 4))
ax.plot(traj.times, traj.states[:, 0, 0].real, label="excited population")
ax.plot(traj.times, traj.states[:, 1, 1].real, label="ground population")
ax.axhline(target[0, 0].real, color="gray", ls=":", lw=1)
ax.axhline(target[1, 1].real, color="gray", ls=":", lw=1)
ax.set_xlabel(r"$\gamma_0 t$")
ax.set_ylabel("population")
ax.set_title("Relaxation to the detailed-balance populations")
ax.legend()
fig.tight_layout()
fig.savefig("demo01_thermal_relaxation.png", dpi=150)
print("wrote demo01_thermal_relaxation.png")
