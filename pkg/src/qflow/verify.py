"""Verification suites: the package checking its own claims numerically.

Each suite sweeps a state over a grid and reduces to named checks with an
observed value, a tolerance, and a verdict:

* irrotational    max |curl v| by finite differences, plus the h-convergence
                  order of that residual (floor-flagged when the residual
                  sits at roundoff, e.g. exactly constant velocity fields)
* cauchy_riemann  max Cauchy-Riemann residual of (Phi, Psi)
* continuity      max |div j| by finite differences
* quantization    circulation on concentric loops vs 2 pi ml hbar / m,
                  loop-to-loop spread, and a non-encircling control loop
* consistency     max gap between the kinematic velocity and dW/dz

Suites skip points that are legitimately unevaluable (flagged nodes, vortex
cores, stencils blocked by a node) and report how many were skipped; a
skipped point is never silently counted as a pass of anything.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import kinematics, potentials
from .circulation import circulation, make_circle, stokes_check
from .errors import BranchCutError, QflowError
from .kinematics import NodeThreshold
from .numerics import AnnulusGrid, CartesianGrid, Grid2D, Tolerances, convergence_order
from .states import CentralFieldSpec, StateSpec, state_to_json_dict

SUITES = ("irrotational", "cauchy_riemann", "continuity", "quantization",
          "consistency", "all")

DEFAULT_H_SEQUENCE = (1e-2, 3e-3, 1e-3, 3e-4, 1e-4)
DEFAULT_RADII = (0.5, 1.0, 2.0)

# Rounding jitter of size eps*|v| in the sampled velocities shows up in a
# central difference as noise ~ eps*|v|/(2h); below 10x that bound a residual
# carries no truncation signal and must not enter an order fit.
FD_NOISE_FACTOR = 10.0


@dataclass(frozen=True)
class CheckResult:
    """One named check: observed value against a tolerance."""

    name: str
    observed: float
    tolerance: float
    passed: bool
    comparison: str = "<="
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        obs = "n/a" if not math.isfinite(self.observed) else f"{self.observed:.3e}"
        extra = f"  ({self.detail})" if self.detail else ""
        return (f"[{status}] {self.name}: observed {obs} "
                f"{self.comparison} {self.tolerance:.3e}{extra}")


@dataclass(frozen=True)
class VerificationReport:
    suite: str
    state: StateSpec
    checks: tuple[CheckResult, ...]

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json_dict(self) -> dict:
        def _num(x):
            return x if math.isfinite(x) else None
        return {
            "suite": self.suite,
            "state": state_to_json_dict(self.state),
            "all_passed": self.all_passed,
            "checks": [
                {"name": c.name, "observed": _num(c.observed),
                 "tolerance": c.tolerance, "comparison": c.comparison,
                 "passed": c.passed, "detail": c.detail}
                for c in self.checks
            ],
        }


def default_grid(state: StateSpec) -> Grid2D:
    """A >= 1000-point grid suited to the state's geometry."""
    if isinstance(state.variant, CentralFieldSpec):
        return AnnulusGrid(0.7, 2.4, 32, 36)
    return CartesianGrid(-2.4, 2.4, -2.4, 2.4, 34, 34)


def grid_threshold(state: StateSpec, grid: Grid2D,
                   rel: float = 1e-12) -> NodeThreshold:
    """Node threshold at rel times the peak density over the grid."""
    peak = max(kinematics.density(state, (float(p[0]), float(p[1])))
               for p in grid.points())
    return NodeThreshold.relative_to_peak(peak, rel)


def _sweep_max(points, evaluate) -> tuple[float, int, int]:
    """(max |value|, evaluated count, skipped count) over points.

    evaluate returns a float, an iterable of floats, or None to skip;
    package errors skip the point as well.
    """
    worst = 0.0
    done = skipped = 0
    for raw in points:
        p = (float(raw[0]), float(raw[1]))
        try:
            out = evaluate(p)
        except QflowError:
            skipped += 1
            continue
        if out is None:
            skipped += 1
            continue
        vals = out if isinstance(out, tuple) else (out,)
        worst = max(worst, max(abs(v) for v in vals))
        done += 1
    return worst, done, skipped


def _detail(done: int, skipped: int) -> str:
    note = f"{done} points"
    if skipped:
        note += f", {skipped} skipped"
    return note


def check_irrotational(state: StateSpec, tol: Tolerances = Tolerances(),
                       grid: Grid2D | None = None,
                       h: float | None = None,
                       h_sequence=DEFAULT_H_SEQUENCE) -> list[CheckResult]:
    """Finite-difference curl of v vanishes away from nodes and cores."""
    grid = grid or default_grid(state)
    h = tol.fd_step if h is None else float(h)
    th = grid_threshold(state, grid, tol.node_threshold_rel)

    def curl_at(p, step):
        sample = kinematics.vorticity_fd(state, p, step, th)
        return None if sample.singular else sample.value

    worst, done, skipped = _sweep_max(grid.points(), lambda p: curl_at(p, h))
    checks = [CheckResult("irrotational_max_abs_curl", worst, tol.irrotational,
                          worst <= tol.irrotational, "<=", _detail(done, skipped))]
    if h_sequence:
        subsample = grid.points()[::23]

        def residual(step):
            w, _, _ = _sweep_max(subsample, lambda p: curl_at(p, step))
            return w

        def vel_at(p):
            sample = kinematics.velocity(state, p, th)
            return None if sample.singular else sample.value

        v_scale, _, _ = _sweep_max(subsample, vel_at)
        eps = math.ulp(1.0)

        def noise_floor(step):
            return max(1e-13, FD_NOISE_FACTOR * eps * v_scale / step)

        report = convergence_order(h_sequence, residual, noise_floor)
        if report.all_floored:
            checks.append(CheckResult("irrotational_convergence_order",
                                      math.nan, tol.irrotational_order, True, ">=",
                                      "residuals at roundoff floor; order fit skipped"))
        else:
            checks.append(CheckResult("irrotational_convergence_order",
                                      report.fitted_order, tol.irrotational_order,
                                      report.fitted_order >= tol.irrotational_order, ">="))
    return checks


def check_cauchy_riemann(state: StateSpec, tol: Tolerances = Tolerances(),
                         grid: Grid2D | None = None,
                         h: float | None = None,
                         cut: potentials.BranchCut | None = None) -> list[CheckResult]:
    """The potential/stream pair of the state's flow is holomorphic off cuts."""
    grid = grid or default_grid(state)
    h = tol.fd_step if h is None else float(h)
    spec = potentials.potential_of_state(state)

    def residual_at(p):
        try:
            return potentials.cauchy_riemann_residual(spec, p, h, cut)
        except BranchCutError:
            return None

    worst, done, skipped = _sweep_max(grid.points(), residual_at)
    return [CheckResult("cauchy_riemann_max_residual", worst, tol.cauchy_riemann,
                        worst <= tol.cauchy_riemann, "<=", _detail(done, skipped))]


def check_continuity(state: StateSpec, tol: Tolerances = Tolerances(),
                     grid: Grid2D | None = None,
                     h: float | None = None) -> list[CheckResult]:
    """div j = 0 for stationary states, by finite differences."""
    grid = grid or default_grid(state)
    h = tol.fd_step if h is None else float(h)
    worst, done, skipped = _sweep_max(
        grid.points(), lambda p: kinematics.continuity_residual(state, p, h))
    return [CheckResult("continuity_max_abs_div_j", worst, tol.continuity,
                        worst <= tol.continuity, "<=", _detail(done, skipped))]


def check_quantization(state: StateSpec, tol: Tolerances = Tolerances(),
                       radii=DEFAULT_RADII, n_points: int = 256,
                       th: NodeThreshold | None = None) -> list[CheckResult]:
    """Circulation is 2 pi ml hbar / m on any loop around the core, zero off it."""
    radii = tuple(float(r) for r in radii)
    v = state.variant
    ml = v.ml if isinstance(v, CentralFieldSpec) else 0
    expected = 2.0 * math.pi * ml * state.constants.hbar / state.constants.mass
    report = stokes_check(state, radii, th, n_points)
    if ml != 0:
        worst_rel = max(abs(g - expected) / abs(expected) for g in report.gammas)
        name = "quantization_max_rel_error"
        tol_val = tol.quantization_rel
    else:
        worst_rel = max(abs(g) for g in report.gammas)
        name = "quantization_max_abs_gamma"
        tol_val = tol.nonencircling_abs
    checks = [
        CheckResult(name, worst_rel, tol_val, worst_rel <= tol_val, "<=",
                    f"radii {list(radii)}, expected {expected:.6g}"),
        CheckResult("quantization_loop_spread", report.spread, tol.quantization_spread,
                    report.spread <= tol.quantization_spread),
    ]
    # Control loop placed inside the sampled annulus but away from the core.
    mid = 0.5 * (min(radii) + max(radii))
    control_r = 0.25 * (max(radii) - min(radii))
    control = make_circle((mid, 0.0), max(control_r, 1e-3), n_points)
    gamma_off = circulation(state, control, th).gamma
    checks.append(CheckResult("quantization_nonencircling_abs_gamma", abs(gamma_off),
                              tol.nonencircling_abs,
                              abs(gamma_off) <= tol.nonencircling_abs))
    return checks


def check_consistency(state: StateSpec, tol: Tolerances = Tolerances(),
                      grid: Grid2D | None = None,
                      th: NodeThreshold | None = None) -> list[CheckResult]:
    """Kinematic velocity equals the potential-theory velocity pointwise."""
    grid = grid or default_grid(state)
    th = th or grid_threshold(state, grid, tol.node_threshold_rel)
    worst, done, skipped = _sweep_max(
        grid.points(),
        lambda p: potentials.consistency_state_vs_potential(state, p, th))
    return [CheckResult("consistency_max_velocity_gap", worst, tol.consistency,
                        worst <= tol.consistency, "<=", _detail(done, skipped))]


def verify_state(state: StateSpec, suite: str = "all",
                 tol: Tolerances = Tolerances(),
                 grid: Grid2D | None = None,
                 h: float | None = None,
                 h_sequence=DEFAULT_H_SEQUENCE,
                 radii=DEFAULT_RADII,
                 n_points: int = 256,
                 cut: potentials.BranchCut | None = None) -> VerificationReport:
    """Run one named suite (or all of them) against a state."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {SUITES}")
    checks: list[CheckResult] = []
    if suite in ("irrotational", "all"):
        checks += check_irrotational(state, tol, grid, h, h_sequence)
    if suite in ("cauchy_riemann", "all"):
        checks += check_cauchy_riemann(state, tol, grid, h, cut)
    if suite in ("continuity", "all"):
        checks += check_continuity(state, tol, grid, h)
    if suite in ("quantization", "all"):
        checks += check_quantization(state, tol, radii, n_points)
    if suite in ("consistency", "all"):
        checks += check_consistency(state, tol, grid)
    return VerificationReport(suite, state, tuple(checks))
