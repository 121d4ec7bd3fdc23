"""Complex velocity potentials W(z) = Phi + i Psi for the flow catalog.

For an irrotational, divergence-free planar flow the velocity potential Phi
(v = grad Phi) and the stream function Psi (v_x = dPsi/dy, v_y = -dPsi/dx)
combine into one holomorphic function W(z) of z = x + i y, with

    dW/dz = v_x - i v_y.

Catalog flows:

* uniform flow    W = (px - i py) z / m            (plane wave)
* fluid at rest   W = 0                            (real stationary states)
* line vortex     W = -i (ml hbar / m) log z       (azimuthal states)
* corner flow     W = A z^n, integer n >= 1        (flow inside a corner of
                                                    opening angle pi/n)

The vortex potential is multivalued: Phi gains 2 pi ml hbar / m per loop
around the origin.  A branch cut along the ray at cut_angle pins one sheet,
with the angle taken in (cut_angle - 2 pi, cut_angle].
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from . import kinematics
from .errors import BranchCutError, DomainError, OriginError, SingularVelocityError
from .states import (
    CentralFieldSpec,
    OscillatorSpec,
    PhysicalConstants,
    PlaneWaveSpec,
    Point,
    StateSpec,
)


@dataclass(frozen=True)
class BranchCut:
    """Branch selection for multivalued potentials.

    The cut runs along the ray at cut_angle (radians, in (-pi, pi]); returned
    angles lie in the half-open window (cut_angle - 2 pi, cut_angle].  The
    default pi reproduces the principal branch.
    """

    cut_angle: float = math.pi

    def __post_init__(self):
        if not (-math.pi < self.cut_angle <= math.pi):
            raise DomainError(f"cut_angle must lie in (-pi, pi], got {self.cut_angle}")

    def angle(self, z: complex) -> float:
        """Argument of z on this branch."""
        if z == 0:
            raise OriginError("argument of z = 0 is undefined")
        phi = math.atan2(z.imag, z.real)
        if phi > self.cut_angle:
            phi -= 2.0 * math.pi
        return phi

    def log(self, z: complex) -> complex:
        """log z with the imaginary part on this branch."""
        return complex(math.log(abs(z)), self.angle(z))


@dataclass(frozen=True)
class UniformFlow:
    """Uniform stream of momentum (px, py): W = (px - i py) z / m."""

    px: float
    py: float

    def __post_init__(self):
        if not (math.isfinite(self.px) and math.isfinite(self.py)):
            raise DomainError("momentum components must be finite")


@dataclass(frozen=True)
class FluidAtRest:
    """Identically vanishing flow: W = 0."""


@dataclass(frozen=True)
class VortexFlow:
    """Line vortex of winding charge ml: W = -i (ml hbar / m) log z."""

    ml: int

    def __post_init__(self):
        if not isinstance(self.ml, int):
            raise DomainError(f"ml must be an integer, got {self.ml!r}")


@dataclass(frozen=True)
class CornerFlow:
    """Flow in a corner of opening angle pi/n: W = A z^n, integer n >= 1."""

    strength: complex
    exponent: int

    def __post_init__(self):
        object.__setattr__(self, "strength", complex(self.strength))
        if not (isinstance(self.exponent, int) and self.exponent >= 1):
            raise DomainError(f"exponent must be an integer >= 1, got {self.exponent!r}")
        if not (math.isfinite(self.strength.real) and math.isfinite(self.strength.imag)):
            raise DomainError("strength must be finite")


FlowVariant = UniformFlow | FluidAtRest | VortexFlow | CornerFlow


@dataclass(frozen=True)
class ComplexPotentialSpec:
    """A catalog flow plus the physical constants that scale it."""

    flow: FlowVariant
    constants: PhysicalConstants = PhysicalConstants()

    def __post_init__(self):
        if not isinstance(self.flow, (UniformFlow, FluidAtRest, VortexFlow, CornerFlow)):
            raise DomainError(f"unknown flow variant {type(self.flow).__name__}")


def uniform_flow(px: float, py: float, hbar: float = 1.0, mass: float = 1.0) -> ComplexPotentialSpec:
    return ComplexPotentialSpec(UniformFlow(px, py), PhysicalConstants(hbar, mass))


def fluid_at_rest(hbar: float = 1.0, mass: float = 1.0) -> ComplexPotentialSpec:
    return ComplexPotentialSpec(FluidAtRest(), PhysicalConstants(hbar, mass))


def vortex_flow(ml: int, hbar: float = 1.0, mass: float = 1.0) -> ComplexPotentialSpec:
    return ComplexPotentialSpec(VortexFlow(ml), PhysicalConstants(hbar, mass))


def corner_flow(strength: complex, exponent: int,
                hbar: float = 1.0, mass: float = 1.0) -> ComplexPotentialSpec:
    return ComplexPotentialSpec(CornerFlow(strength, exponent), PhysicalConstants(hbar, mass))


def potential_of_state(state: StateSpec) -> ComplexPotentialSpec:
    """The complex potential whose velocity matches the state's flow."""
    v = state.variant
    if isinstance(v, PlaneWaveSpec):
        return ComplexPotentialSpec(UniformFlow(v.px, v.py), state.constants)
    if isinstance(v, OscillatorSpec):
        return ComplexPotentialSpec(FluidAtRest(), state.constants)
    if isinstance(v, CentralFieldSpec):
        if v.ml == 0:
            return ComplexPotentialSpec(FluidAtRest(), state.constants)
        return ComplexPotentialSpec(VortexFlow(v.ml), state.constants)
    raise DomainError(f"no potential for state variant {type(v).__name__}")


def eval_W(spec: ComplexPotentialSpec, z: complex,
           cut: BranchCut | None = None) -> complex:
    """Complex potential W(z) on the chosen branch."""
    cut = cut or BranchCut()
    z = complex(z)
    f = spec.flow
    c = spec.constants
    if isinstance(f, UniformFlow):
        return complex(f.px, -f.py) * z / c.mass
    if isinstance(f, FluidAtRest):
        return 0.0 + 0.0j
    if isinstance(f, VortexFlow):
        if z == 0:
            raise OriginError("vortex potential is undefined at z = 0")
        return -1j * (f.ml * c.hbar / c.mass) * cut.log(z)
    return f.strength * z ** f.exponent


def eval_Phi_Psi(spec: ComplexPotentialSpec, point: Point,
                 cut: BranchCut | None = None) -> tuple[float, float]:
    """Velocity potential and stream function (Phi, Psi) = (Re W, Im W)."""
    w = eval_W(spec, complex(point[0], point[1]), cut)
    return w.real, w.imag


def complex_velocity(spec: ComplexPotentialSpec, z: complex) -> complex:
    """Closed-form dW/dz = v_x - i v_y (single valued, no branch needed)."""
    z = complex(z)
    f = spec.flow
    c = spec.constants
    if isinstance(f, UniformFlow):
        return complex(f.px, -f.py) / c.mass
    if isinstance(f, FluidAtRest):
        return 0.0 + 0.0j
    if isinstance(f, VortexFlow):
        if z == 0:
            raise OriginError("vortex velocity is undefined at z = 0")
        return -1j * (f.ml * c.hbar / c.mass) / z
    if f.exponent == 1:
        return f.strength
    return f.exponent * f.strength * z ** (f.exponent - 1)


def velocity_from_potential(spec: ComplexPotentialSpec, point: Point) -> tuple[float, float]:
    """Velocity (v_x, v_y) read off the complex velocity."""
    w = complex_velocity(spec, complex(point[0], point[1]))
    return w.real, -w.imag


def _require_off_cut(spec: ComplexPotentialSpec, pts, cut: BranchCut):
    """Reject stencils that straddle the cut or the origin of a vortex."""
    if not isinstance(spec.flow, VortexFlow):
        return
    angles = []
    for p in pts:
        z = complex(p[0], p[1])
        if z == 0:
            raise OriginError("stencil point at the vortex origin")
        angles.append(cut.angle(z))
    if max(angles) - min(angles) > math.pi:
        raise BranchCutError("finite-difference stencil straddles the branch cut")


def cauchy_riemann_residual(spec: ComplexPotentialSpec, point: Point,
                            h: float = kinematics.DEFAULT_FD_STEP,
                            cut: BranchCut | None = None) -> tuple[float, float]:
    """Central-difference Cauchy-Riemann residuals of (Phi, Psi).

    Returns (dPhi/dx - dPsi/dy, dPhi/dy + dPsi/dx); both vanish to O(h^2)
    wherever W is holomorphic.
    """
    if not (h > 0.0 and math.isfinite(h)):
        raise ValueError(f"finite-difference step must be positive, got {h}")
    cut = cut or BranchCut()
    x, y = point
    pts = ((x + h, y), (x - h, y), (x, y + h), (x, y - h), (x, y))
    _require_off_cut(spec, pts, cut)
    phi_xp, psi_xp = eval_Phi_Psi(spec, pts[0], cut)
    phi_xm, psi_xm = eval_Phi_Psi(spec, pts[1], cut)
    phi_yp, psi_yp = eval_Phi_Psi(spec, pts[2], cut)
    phi_ym, psi_ym = eval_Phi_Psi(spec, pts[3], cut)
    r1 = (phi_xp - phi_xm) / (2.0 * h) - (psi_yp - psi_ym) / (2.0 * h)
    r2 = (phi_yp - phi_ym) / (2.0 * h) + (psi_xp - psi_xm) / (2.0 * h)
    return r1, r2


def consistency_state_vs_potential(state: StateSpec, point: Point,
                                   th: kinematics.NodeThreshold | None = None,
                                   cut: BranchCut | None = None) -> float:
    """Max-norm gap between the state's velocity and its potential's velocity.

    cut is accepted for signature symmetry; dW/dz is single valued, so the
    comparison never touches a branch.
    """
    sample = kinematics.velocity(state, point, th)
    if sample.singular:
        raise SingularVelocityError(f"state velocity is singular at {tuple(point)}")
    vx, vy = sample.value
    wx, wy = velocity_from_potential(potential_of_state(state), point)
    return max(abs(vx - wx), abs(vy - wy))
