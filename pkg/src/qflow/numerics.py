"""Deterministic sampling grids, sweep tables, and convergence-order fits.

Grids are value objects: the same spec always generates bit-identical point
sequences.  Cartesian grids emit points with x varying slowest, annulus
grids with r varying slowest; annulus angles are cell centered so no sample
lands exactly on the principal branch cut at +-pi.  Exclusion disks drop
points near known trouble spots (vortex cores, tabulated-range edges).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .kinematics import FieldSample

Point = tuple[float, float]


@dataclass(frozen=True)
class Disk:
    """Open exclusion disk; points strictly inside are dropped."""

    center: Point
    radius: float

    def __post_init__(self):
        object.__setattr__(self, "center", (float(self.center[0]), float(self.center[1])))
        if not (self.radius > 0.0 and math.isfinite(self.radius)):
            raise ValueError(f"radius must be positive, got {self.radius}")

    def contains(self, point: Point) -> bool:
        dx = point[0] - self.center[0]
        dy = point[1] - self.center[1]
        return dx * dx + dy * dy < self.radius * self.radius


def _apply_exclusions(pts: np.ndarray, exclusions: tuple[Disk, ...]) -> np.ndarray:
    keep = np.ones(len(pts), dtype=bool)
    for disk in exclusions:
        dx = pts[:, 0] - disk.center[0]
        dy = pts[:, 1] - disk.center[1]
        keep &= dx * dx + dy * dy >= disk.radius * disk.radius
    return pts[keep]


@dataclass(frozen=True)
class CartesianGrid:
    """nx-by-ny lattice on [x0, x1] x [y0, y1], inclusive endpoints."""

    x0: float
    x1: float
    y0: float
    y1: float
    nx: int
    ny: int
    exclusions: tuple[Disk, ...] = ()

    def __post_init__(self):
        if not (self.x1 > self.x0 and self.y1 > self.y0):
            raise ValueError("grid extents must satisfy x1 > x0 and y1 > y0")
        if self.nx < 2 or self.ny < 2:
            raise ValueError("grid needs at least 2 points per axis")
        object.__setattr__(self, "exclusions", tuple(self.exclusions))

    def points(self) -> np.ndarray:
        xs = np.linspace(self.x0, self.x1, self.nx)
        ys = np.linspace(self.y0, self.y1, self.ny)
        gx, gy = np.meshgrid(xs, ys, indexing="ij")  # x varies slowest
        pts = np.column_stack([gx.ravel(), gy.ravel()])
        return _apply_exclusions(pts, self.exclusions)


@dataclass(frozen=True)
class AnnulusGrid:
    """Polar annulus r in [r0, r1], nr radii by nphi cell-centered angles."""

    r0: float
    r1: float
    nr: int
    nphi: int
    center: Point = (0.0, 0.0)
    exclusions: tuple[Disk, ...] = ()

    def __post_init__(self):
        if not (0.0 < self.r0 < self.r1):
            raise ValueError("annulus needs 0 < r0 < r1")
        if self.nr < 2 or self.nphi < 4:
            raise ValueError("annulus needs nr >= 2 and nphi >= 4")
        object.__setattr__(self, "center", (float(self.center[0]), float(self.center[1])))
        object.__setattr__(self, "exclusions", tuple(self.exclusions))

    def points(self) -> np.ndarray:
        rs = np.linspace(self.r0, self.r1, self.nr)
        # Cell-centered: stays inside (-pi, pi), never on the cut itself.
        phis = -math.pi + (np.arange(self.nphi) + 0.5) * (2.0 * math.pi / self.nphi)
        gr, gp = np.meshgrid(rs, phis, indexing="ij")  # r varies slowest
        pts = np.column_stack([self.center[0] + (gr * np.cos(gp)).ravel(),
                               self.center[1] + (gr * np.sin(gp)).ravel()])
        return _apply_exclusions(pts, self.exclusions)

    def polar_coords(self) -> np.ndarray:
        """(r, phi) pairs in the same order as points()."""
        pts = self.points()
        dx = pts[:, 0] - self.center[0]
        dy = pts[:, 1] - self.center[1]
        return np.column_stack([np.hypot(dx, dy), np.arctan2(dy, dx)])


Grid2D = CartesianGrid | AnnulusGrid


@dataclass
class GridRow:
    """One sampled point: a field sample, or the error that evaluation raised."""

    point: Point
    sample: FieldSample | None
    error: str | None = None


def sample_grid(grid: Grid2D, evaluator: Callable[[Point], object]) -> list[GridRow]:
    """Evaluate a pointwise field over a grid; per-point failures are recorded.

    The evaluator may return a FieldSample, a scalar, or a tuple; scalars and
    tuples are wrapped.  Exceptions become GridRow.error strings so a single
    bad point cannot abort a sweep.
    """
    rows: list[GridRow] = []
    for raw in grid.points():
        p = (float(raw[0]), float(raw[1]))
        try:
            out = evaluator(p)
        except Exception as exc:  # recorded, not fatal
            rows.append(GridRow(p, None, f"{type(exc).__name__}: {exc}"))
            continue
        if not isinstance(out, FieldSample):
            out = FieldSample(out)
        rows.append(GridRow(p, out))
    return rows


@dataclass(frozen=True)
class ConvergenceReport:
    """Least-squares order fit of residual(h) ~ C h^p on log-log axes.

    Residuals at or below the roundoff floor are excluded from the fit and
    flagged; fitted_order is NaN when fewer than two points survive.
    """

    h_values: tuple[float, ...]
    residuals: tuple[float, ...]
    fitted_order: float
    floored: tuple[bool, ...]
    floors: tuple[float, ...]

    @property
    def all_floored(self) -> bool:
        return all(self.floored)


def convergence_order(h_values: Sequence[float],
                      residual_fn: Callable[[float], float],
                      floor: float | Callable[[float], float] = 1e-13,
                      ) -> ConvergenceReport:
    """Fit the order of residual_fn(h) over at least a decade of steps.

    floor may be a constant or a callable h -> floor.  The callable form
    suits finite-difference residuals, whose roundoff contribution grows as
    the step shrinks (jitter delta in the samples appears as ~delta/(2h)).
    """
    hs = tuple(float(h) for h in h_values)
    if len(hs) < 3:
        raise ValueError("need at least 3 step sizes")
    if any(not (h > 0.0 and math.isfinite(h)) for h in hs):
        raise ValueError("step sizes must be positive and finite")
    if len(set(hs)) != len(hs):
        raise ValueError("step sizes must be distinct")
    if max(hs) / min(hs) < 10.0:
        raise ValueError("step sizes must span at least one decade")
    floor_fn = floor if callable(floor) else (lambda _h: floor)
    residuals = tuple(abs(float(residual_fn(h))) for h in hs)
    floors = tuple(float(floor_fn(h)) for h in hs)
    floored = tuple(r <= f for r, f in zip(residuals, floors))
    usable = [(h, r) for h, r, f in zip(hs, residuals, floored) if not f]
    if len(usable) < 2:
        order = math.nan
    else:
        log_h = np.log([h for h, _ in usable])
        log_r = np.log([r for _, r in usable])
        order = float(np.polyfit(log_h, log_r, 1)[0])
    return ConvergenceReport(hs, residuals, order, floored, floors)


@dataclass(frozen=True)
class Tolerances:
    """Every default tolerance used by the verification suites, in one place."""

    irrotational: float = 1e-6
    irrotational_order: float = 1.9
    cauchy_riemann: float = 1e-6
    continuity: float = 1e-6
    quantization_rel: float = 1e-6
    quantization_spread: float = 1e-8
    nonencircling_abs: float = 1e-8
    consistency: float = 1e-8
    fd_step: float = 1e-4
    node_threshold_rel: float = 1e-12

    def replace(self, **kwargs) -> "Tolerances":
        from dataclasses import replace as _replace
        return _replace(self, **kwargs)
