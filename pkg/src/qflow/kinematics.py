"""Hydrodynamic fields of a stationary state: density, current, velocity.

The probability density is rho = |psi|^2 and the probability current is

    j = Re[ psi* (-i hbar grad) psi ] / m = (hbar / m) Im[ psi* grad psi ].

The flow velocity is the ratio v = j / rho, defined only where the density
clears a node threshold; at a node the velocity is reported as a flagged
singular sample, never as a clamped number.  Vorticity and divergence of v,
and the divergence of j (the stationary continuity residual), are evaluated
by second-order central differences so the analytic statements about these
fields can be checked without trusting any analytic shortcut.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .errors import StencilNodeError
from .states import CentralFieldSpec, Point, StateSpec, amplitude, grad_amplitude

DEFAULT_FD_STEP = 1e-4
# Pointwise queries this close to an azimuthal vortex core are flagged
# singular instead of differenced across the 1/rho velocity growth.
CORE_RADIUS_STEPS = 10.0
# Within rounding distance of the phase singularity itself the ratio j/rho
# is numerically meaningless (contours "through the origin" land ~1e-16 off
# it); velocity queries there come back flagged, not astronomically large.
CORE_GUARD_RADIUS = 1e-12


@dataclass(frozen=True)
class NodeThreshold:
    """Density level below which a point counts as a node."""

    epsilon_rho: float = 1e-12

    def __post_init__(self):
        if not (self.epsilon_rho > 0.0 and math.isfinite(self.epsilon_rho)):
            raise ValueError(f"epsilon_rho must be positive, got {self.epsilon_rho}")

    @staticmethod
    def relative_to_peak(peak_density: float, rel: float = 1e-12) -> "NodeThreshold":
        """Threshold at rel times the peak density seen on a sampled grid."""
        if not (peak_density > 0.0 and math.isfinite(peak_density)):
            raise ValueError(f"peak density must be positive, got {peak_density}")
        return NodeThreshold(rel * peak_density)


@dataclass(frozen=True)
class FieldSample:
    """A pointwise field value, or a singular flag with no numeric value."""

    value: object
    singular: bool = False

    def __post_init__(self):
        if self.singular and self.value is not None:
            raise ValueError("singular samples carry no value")


VelocityFn = Callable[[Point], tuple[float, float]]


def density(state: StateSpec, point: Point) -> float:
    """Probability density |psi|^2."""
    psi = amplitude(state, point)
    return psi.real * psi.real + psi.imag * psi.imag


def current(state: StateSpec, point: Point) -> tuple[float, float]:
    """Probability current (hbar/m) Im[psi* grad psi]."""
    psi = amplitude(state, point)
    gx, gy = grad_amplitude(state, point)
    scale = state.constants.hbar / state.constants.mass
    conj = psi.conjugate()
    return scale * (conj * gx).imag, scale * (conj * gy).imag


def velocity(state: StateSpec, point: Point,
             th: NodeThreshold | None = None) -> FieldSample:
    """Flow velocity j / rho, or a singular sample below the node threshold.

    Azimuthal states also flag points within CORE_GUARD_RADIUS of their
    phase singularity at the origin.
    """
    th = th or NodeThreshold()
    if _near_vortex_core(state, point, CORE_GUARD_RADIUS):
        return FieldSample(None, singular=True)
    rho = density(state, point)
    if rho > th.epsilon_rho:
        jx, jy = current(state, point)
        return FieldSample((jx / rho, jy / rho))
    return FieldSample(None, singular=True)


def _near_vortex_core(state: StateSpec | None, point: Point, radius: float) -> bool:
    if state is None:
        return False
    v = state.variant
    return (isinstance(v, CentralFieldSpec) and v.ml != 0
            and math.hypot(point[0], point[1]) <= radius)


def _stencil_velocities(state: StateSpec | None, point: Point, h: float,
                        th: NodeThreshold | None,
                        velocity_fn: VelocityFn | None):
    """Velocities at the four central-difference stencil points."""
    x, y = point
    stencil = (("x+h", (x + h, y)), ("x-h", (x - h, y)),
               ("y+h", (x, y + h)), ("y-h", (x, y - h)))
    out = {}
    for label, p in stencil:
        if velocity_fn is not None:
            out[label] = tuple(velocity_fn(p))
            continue
        sample = velocity(state, p, th)
        if sample.singular:
            raise StencilNodeError(label, p)
        out[label] = sample.value
    return out


def _check_step(h: float) -> float:
    h = float(h)
    if not (h > 0.0 and math.isfinite(h)):
        raise ValueError(f"finite-difference step must be positive, got {h}")
    return h


def vorticity_fd(state: StateSpec | None, point: Point, h: float = DEFAULT_FD_STEP,
                 th: NodeThreshold | None = None,
                 velocity_fn: VelocityFn | None = None,
                 core_radius: float | None = None) -> FieldSample:
    """Scalar curl dv_y/dx - dv_x/dy by second-order central differences.

    velocity_fn overrides the state-derived velocity (test hook for fields
    like rigid rotation).  Near an azimuthal vortex core the query returns a
    singular sample; the curl there lives in the circulation integral, not
    in a pointwise stencil.
    """
    h = _check_step(h)
    if velocity_fn is None and state is None:
        raise ValueError("either a state or a velocity_fn is required")
    if velocity_fn is None and _near_vortex_core(
            state, point, CORE_RADIUS_STEPS * h if core_radius is None else core_radius):
        return FieldSample(None, singular=True)
    v = _stencil_velocities(state, point, h, th, velocity_fn)
    curl = ((v["x+h"][1] - v["x-h"][1]) - (v["y+h"][0] - v["y-h"][0])) / (2.0 * h)
    return FieldSample(curl)


def divergence_fd(state: StateSpec | None, point: Point, h: float = DEFAULT_FD_STEP,
                  th: NodeThreshold | None = None,
                  velocity_fn: VelocityFn | None = None,
                  core_radius: float | None = None) -> FieldSample:
    """Divergence dv_x/dx + dv_y/dy of the flow velocity, central differences."""
    h = _check_step(h)
    if velocity_fn is None and state is None:
        raise ValueError("either a state or a velocity_fn is required")
    if velocity_fn is None and _near_vortex_core(
            state, point, CORE_RADIUS_STEPS * h if core_radius is None else core_radius):
        return FieldSample(None, singular=True)
    v = _stencil_velocities(state, point, h, th, velocity_fn)
    div = ((v["x+h"][0] - v["x-h"][0]) + (v["y+h"][1] - v["y-h"][1])) / (2.0 * h)
    return FieldSample(div)


def continuity_residual(state: StateSpec, point: Point,
                        h: float = DEFAULT_FD_STEP) -> float:
    """div j by central differences; zero for a stationary state.

    The current is defined at nodes too, so no threshold is involved.
    """
    h = _check_step(h)
    x, y = point
    jxp = current(state, (x + h, y))[0]
    jxm = current(state, (x - h, y))[0]
    jyp = current(state, (x, y + h))[1]
    jym = current(state, (x, y - h))[1]
    return ((jxp - jxm) + (jyp - jym)) / (2.0 * h)
