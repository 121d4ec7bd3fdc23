"""
Oscillator eigenstates are fluid at rest
========================================

Real wavefunctions carry no probability current, so every harmonic
oscillator eigenstate describes a fluid at rest: the density can be as
structured as it likes while the velocity vanishes identically.
"""

import numpy as np

from qflow import oscillator, density, current, velocity
from qflow.verify import grid_threshold, default_grid

for nx, ny in [(0, 0), (1, 0), (3, 3)]:
    state = oscillator(nx, ny)
    grid = default_grid(state)
    th = grid_threshold(state, grid)

    worst_j = 0.0
    peak_rho = 0.0
    resting = True
    for raw in grid.points():
        p = (float(raw[0]), float(raw[1]))
        jx, jy = current(state, p)
        worst_j = max(worst_j, abs(jx), abs(jy))
        peak_rho = max(peak_rho, density(state, p))
        sample = velocity(state, p, th)
        if not sample.singular and sample.value != (0.0, 0.0):
            resting = False

    print(f"oscillator({nx},{ny}):  peak density {peak_rho:.4f},  "
          f"max |j| = {worst_j:.1e},  velocity zero everywhere: {resting}")

# the node lines of excited states are excluded, not divided through:
state = oscillator(1, 0)
sample = velocity(state, (0.0, 0.5))  # on the H_1 node line x = 0
print("on a node line the velocity sample is flagged:", sample.singular)
