"""qflow: hydrodynamic velocity fields of stationary quantum states.

The probability current of a stationary state defines a planar flow
velocity v = j / rho.  This package evaluates that flow for a small catalog
of closed-form states, pairs each flow with its complex velocity potential
W(z) = Phi + i Psi, integrates circulation around closed contours, and
verifies the structural claims (irrotationality away from nodes, the
Cauchy-Riemann equations, stationary continuity, circulation quantization
in integer multiples of 2 pi hbar / m) by independent finite-difference and
quadrature routes.
"""

from .circulation import (
    CirculationResult,
    Contour,
    LoopIndependenceReport,
    circulation,
    make_circle,
    stokes_check,
    winding_number,
)
from .errors import (
    BranchCutError,
    DegreeError,
    DomainError,
    OriginError,
    QflowError,
    SingularVelocityError,
    StencilNodeError,
    TableRangeError,
)
from .kinematics import (
    FieldSample,
    NodeThreshold,
    continuity_residual,
    current,
    density,
    divergence_fd,
    velocity,
    vorticity_fd,
)
from .numerics import (
    AnnulusGrid,
    CartesianGrid,
    ConvergenceReport,
    Disk,
    GridRow,
    Tolerances,
    convergence_order,
    sample_grid,
)
from .potentials import (
    BranchCut,
    ComplexPotentialSpec,
    CornerFlow,
    FluidAtRest,
    UniformFlow,
    VortexFlow,
    cauchy_riemann_residual,
    complex_velocity,
    consistency_state_vs_potential,
    corner_flow,
    eval_Phi_Psi,
    eval_W,
    fluid_at_rest,
    potential_of_state,
    uniform_flow,
    velocity_from_potential,
    vortex_flow,
)
from .special_functions import (
    MAX_DEGREE,
    assoc_legendre,
    assoc_legendre_norm,
    hermite,
    hermite_derivative,
    oscillator_norm,
)
from .states import (
    CentralFieldSpec,
    GaussianRadial,
    OscillatorSpec,
    PhysicalConstants,
    PlaneWaveSpec,
    StateSpec,
    TabulatedRadial,
    amplitude,
    central_field,
    grad_amplitude,
    oscillator,
    plane_wave,
    state_from_json,
    state_from_json_dict,
    state_to_json,
    state_to_json_dict,
)
from .verify import CheckResult, VerificationReport, verify_state

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
