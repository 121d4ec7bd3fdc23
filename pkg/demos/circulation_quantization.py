"""
Circulation comes in quanta
===========================

The circulation of the velocity field around the vortex core is
2 pi ml hbar / m: it does not depend on the loop at all, only on how
many times the loop winds around the core.  Loops that miss the core
enclose nothing.
"""

import math

from qflow import central_field, circulation, make_circle, stokes_check

QUANTUM = 2.0 * math.pi  # hbar = m = 1 here, so one quantum is 2 pi

print(" ml   radius 0.5      radius 1.0      radius 2.0     Gamma/quantum")
for ml in range(-3, 4):
    if ml == 0:
        continue
    state = central_field(abs(ml), ml)
    report = stokes_check(state, radii=(0.5, 1.0, 2.0))
    g = report.gammas
    print(f"{ml:+d}   {g[0]:13.9f}   {g[1]:13.9f}   {g[2]:13.9f}   "
          f"{g[1] / QUANTUM:+.9f}")

# a loop that does not encircle the core measures nothing
state = central_field(1, 1)
off_core = make_circle(center=(1.5, 0.0), radius=0.4)
print("non-encircling loop:", circulation(state, off_core).gamma)

# hbar and mass scale the quantum the way they should
state = central_field(1, 1, hbar=2.0, mass=3.0)
result = circulation(state, make_circle((0.0, 0.0), 1.0))
print("hbar=2, m=3:", result.gamma, "expected", 2.0 * math.pi * 2.0 / 3.0)

# traversing the loop twice doubles the count; the sign follows orientation
loop = make_circle((0.0, 0.0), 1.0)
state = central_field(2, 2)
fwd = circulation(state, loop)
bwd = circulation(state, loop.reversed())
print(f"ml=2 loop: winding {fwd.winding}, Gamma {fwd.gamma:.9f}; "
      f"reversed: {bwd.gamma:.9f}")
