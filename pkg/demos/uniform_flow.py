"""
Uniform flow from a plane wave
==============================

A plane wave carries a constant probability current, so the velocity
field it induces is the same everywhere: (px/m, py/m).  The associated
complex potential is linear in z and its derivative is the constant
px/m - i py/m.
"""

import numpy as np

from qflow import plane_wave, velocity, potential_of_state
from qflow.potentials import eval_Phi_Psi, complex_velocity

state = plane_wave(px=1.0, py=2.0, amplitude_sq=0.7)

# velocity is (1, 2) no matter where we look
rng = np.random.default_rng(7)
for point in rng.uniform(-4.0, 4.0, size=(5, 2)):
    p = (float(point[0]), float(point[1]))
    print(f"v{p} = {velocity(state, p).value}")

# the potential pair: Phi grows along the momentum, Psi across it
spec = potential_of_state(state)
for p in [(1.0, 0.0), (0.0, 1.0), (2.0, -1.0)]:
    phi, psi = eval_Phi_Psi(spec, p)
    print(f"Phi{p} = {phi:+.6f}   Psi{p} = {psi:+.6f}")

# dW/dz encodes both velocity components at once: v_x - i v_y
print("dW/dz =", complex_velocity(spec, 0.3 + 0.4j))
