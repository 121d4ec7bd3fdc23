"""Command line driver.

Subcommands:
    field        sample a pointwise field over a grid, write CSV or JSON
    circulation  integrate the velocity around a closed contour
    verify       run named verification suites against a state

Exit codes: 0 success (all checks passed), 1 verification failure,
2 usage or configuration error, 3 runtime evaluation failure.

CSV output uses '.' as the decimal separator and shortest round-trip float
formatting, so re-reading a file and re-emitting it is byte identical.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from . import kinematics, potentials
from .circulation import Contour, circulation, make_circle
from .errors import QflowError
from .numerics import AnnulusGrid, CartesianGrid, Grid2D, Tolerances, sample_grid
from .states import StateSpec, state_from_json
from .verify import (
    DEFAULT_H_SEQUENCE,
    DEFAULT_RADII,
    SUITES,
    grid_threshold,
    verify_state,
)

FIELD_COLUMNS = {
    "rho": ("rho",),
    "current": ("jx", "jy"),
    "velocity": ("vx", "vy"),
    "phi": ("Phi",),
    "psi": ("Psi",),
    "W": ("ReW", "ImW"),
    "vorticity": ("vorticity",),
    "divergence": ("divergence",),
}


def _fmt_float(v: float) -> str:
    return repr(float(v))


def _load_state(arg: str) -> StateSpec:
    """--state accepts a file path or an inline JSON object."""
    text = arg
    if not arg.lstrip().startswith("{"):
        with open(arg, "r", encoding="utf-8") as fh:
            text = fh.read()
    return state_from_json(text)


def _parse_grid(spec: str) -> Grid2D:
    kind, _, rest = spec.partition(":")
    parts = [p for p in rest.split(",") if p != ""]
    try:
        if kind == "cartesian":
            if len(parts) != 6:
                raise ValueError("cartesian grid needs x0,x1,y0,y1,nx,ny")
            x0, x1, y0, y1 = (float(p) for p in parts[:4])
            return CartesianGrid(x0, x1, y0, y1, int(parts[4]), int(parts[5]))
        if kind == "annulus":
            if len(parts) != 4:
                raise ValueError("annulus grid needs r0,r1,nr,nphi")
            return AnnulusGrid(float(parts[0]), float(parts[1]),
                               int(parts[2]), int(parts[3]))
    except ValueError as exc:
        raise ValueError(f"bad grid spec {spec!r}: {exc}") from None
    raise ValueError(f"unknown grid kind {kind!r} (use cartesian: or annulus:)")


def _parse_contour(arg: str) -> Contour:
    text = arg
    if not arg.lstrip().startswith("{"):
        with open(arg, "r", encoding="utf-8") as fh:
            text = fh.read()
    data = json.loads(text)
    if "points" in data:
        return Contour(np.asarray(data["points"], dtype=float),
                       data.get("orientation", "ccw"))
    center = tuple(data.get("center", (0.0, 0.0)))
    return make_circle((float(center[0]), float(center[1])),
                       float(data["radius"]), int(data.get("n_points", 256)))


def _parse_floats(text: str) -> tuple[float, ...]:
    return tuple(float(p) for p in text.split(",") if p != "")


def _write_text(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def rows_to_csv(columns, rows) -> str:
    lines = [",".join(columns)]
    for row in rows:
        cells = []
        for cell in row:
            if cell is None:
                cells.append("")
            elif isinstance(cell, bool):
                cells.append("true" if cell else "false")
            else:
                cells.append(_fmt_float(cell))
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def csv_to_rows(text: str):
    """Inverse of rows_to_csv; round-trips byte identically."""
    lines = text.splitlines()
    columns = lines[0].split(",")
    rows = []
    for line in lines[1:]:
        cells = []
        for cell in line.split(","):
            if cell == "":
                cells.append(None)
            elif cell in ("true", "false"):
                cells.append(cell == "true")
            else:
                cells.append(float(cell))
        rows.append(cells)
    return columns, rows


def rows_to_json(columns, rows) -> str:
    def clean(cell):
        if cell is None or isinstance(cell, bool):
            return cell
        cell = float(cell)
        return cell if math.isfinite(cell) else None
    payload = {"columns": list(columns),
               "rows": [[clean(c) for c in row] for row in rows]}
    return json.dumps(payload, indent=2) + "\n"


def _field_evaluator(state: StateSpec, which: str, h: float,
                     th, cut: potentials.BranchCut):
    spec = potentials.potential_of_state(state) if which in ("phi", "psi", "W") else None
    if which == "rho":
        return lambda p: kinematics.density(state, p)
    if which == "current":
        return lambda p: kinematics.current(state, p)
    if which == "velocity":
        return lambda p: kinematics.velocity(state, p, th)
    if which == "phi":
        return lambda p: potentials.eval_Phi_Psi(spec, p, cut)[0]
    if which == "psi":
        return lambda p: potentials.eval_Phi_Psi(spec, p, cut)[1]
    if which == "W":
        return lambda p: potentials.eval_Phi_Psi(spec, p, cut)
    if which == "vorticity":
        return lambda p: kinematics.vorticity_fd(state, p, h, th)
    return lambda p: kinematics.divergence_fd(state, p, h, th)


def cmd_field(args) -> int:
    try:
        state = _load_state(args.state)
        grid = _parse_grid(args.grid)
        cut = potentials.BranchCut(args.cut_angle)
    except (QflowError, OSError, ValueError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    try:
        th = grid_threshold(state, grid, args.node_threshold_rel)
        evaluator = _field_evaluator(state, args.which, args.h, th, cut)
        sampled = sample_grid(grid, evaluator)
    except QflowError as exc:
        print(f"evaluation error: {exc}", file=sys.stderr)
        return 3

    value_cols = FIELD_COLUMNS[args.which]
    if isinstance(grid, AnnulusGrid):
        coord_cols, coords = ("r", "phi"), grid.polar_coords()
    else:
        coord_cols, coords = ("x", "y"), grid.points()
    columns = coord_cols + value_cols + ("singular",)

    rows = []
    n_failed = 0
    for coord, entry in zip(coords, sampled):
        if entry.error is not None or entry.sample.singular:
            if entry.error is not None:
                n_failed += 1
            cells = [None] * len(value_cols) + [True]
        else:
            val = entry.sample.value
            cells = list(val if isinstance(val, tuple) else (val,)) + [False]
        rows.append([float(coord[0]), float(coord[1])] + cells)
    if n_failed:
        print(f"note: {n_failed} points failed to evaluate and were "
              f"flagged singular", file=sys.stderr)

    text = rows_to_csv(columns, rows) if args.format == "csv" else rows_to_json(columns, rows)
    _write_text(args.out, text)
    return 0


def cmd_circulation(args) -> int:
    try:
        state = _load_state(args.state)
        if args.contour is not None:
            contour = _parse_contour(args.contour)
        else:
            center = _parse_floats(args.center)
            if len(center) != 2:
                raise ValueError("--center needs two comma-separated numbers")
            contour = make_circle(center, args.radius, args.n_points)
    except (QflowError, OSError, ValueError, json.JSONDecodeError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    try:
        result = circulation(state, contour)
    except QflowError as exc:
        print(f"evaluation error: {exc}", file=sys.stderr)
        return 3

    payload = {"gamma": result.gamma, "winding": result.winding,
               "quantum_residual": result.quantum_residual}
    _write_text(args.out, json.dumps(payload, indent=2) + "\n")
    return 0


def _tolerances_from(args) -> Tolerances:
    tol = Tolerances()
    overrides = {
        "irrotational": args.tol_irrotational,
        "irrotational_order": args.tol_order,
        "cauchy_riemann": args.tol_cauchy_riemann,
        "continuity": args.tol_continuity,
        "quantization_rel": args.tol_quantization_rel,
        "quantization_spread": args.tol_quantization_spread,
        "nonencircling_abs": args.tol_nonencircling,
        "consistency": args.tol_consistency,
        "fd_step": args.h,
        "node_threshold_rel": args.node_threshold_rel,
    }
    return tol.replace(**{k: v for k, v in overrides.items() if v is not None})


def cmd_verify(args) -> int:
    try:
        state = _load_state(args.state)
        grid = _parse_grid(args.grid) if args.grid else None
        tol = _tolerances_from(args)
        h_sequence = _parse_floats(args.h_seq) if args.h_seq else DEFAULT_H_SEQUENCE
        radii = _parse_floats(args.radii) if args.radii else DEFAULT_RADII
        cut = potentials.BranchCut(args.cut_angle)
    except (QflowError, OSError, ValueError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    try:
        report = verify_state(state, args.suite, tol, grid,
                              h=tol.fd_step, h_sequence=h_sequence,
                              radii=radii, n_points=args.n_points, cut=cut)
    except QflowError as exc:
        print(f"evaluation error: {exc}", file=sys.stderr)
        return 3

    for check in report.checks:
        print(check.line())
    if args.out:
        _write_text(args.out, json.dumps(report.to_json_dict(), indent=2) + "\n")
    return 0 if report.all_passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qflow",
        description="Velocity fields, complex potentials, and circulation "
                    "of stationary quantum states.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--state", required=True,
                       help="state JSON: a file path or an inline object")
        p.add_argument("--h", type=float, default=None,
                       help="finite-difference step (default 1e-4)")
        p.add_argument("--node-threshold-rel", type=float, default=1e-12,
                       help="node threshold as a fraction of peak grid density")
        p.add_argument("--cut-angle", type=float, default=math.pi,
                       help="branch cut angle in (-pi, pi] (default pi)")

    p_field = sub.add_parser("field", help="sample a field over a grid")
    add_common(p_field)
    p_field.add_argument("--which", required=True, choices=sorted(FIELD_COLUMNS))
    p_field.add_argument("--grid", required=True,
                         help="cartesian:x0,x1,y0,y1,nx,ny or annulus:r0,r1,nr,nphi")
    p_field.add_argument("--out", default="-", help="output path, '-' for stdout")
    p_field.add_argument("--format", choices=("csv", "json"), default="csv")

    p_circ = sub.add_parser("circulation", help="circulation around a contour")
    add_common(p_circ)
    p_circ.add_argument("--contour", default=None,
                        help="contour JSON (file or inline): {center, radius, "
                             "n_points} or {points, orientation}")
    p_circ.add_argument("--center", default="0,0", help="circle center x,y")
    p_circ.add_argument("--radius", type=float, default=1.0)
    p_circ.add_argument("--n-points", type=int, default=256)
    p_circ.add_argument("--out", default="-")

    p_verify = sub.add_parser("verify", help="run verification suites")
    add_common(p_verify)
    p_verify.add_argument("--suite", default="all", choices=SUITES)
    p_verify.add_argument("--grid", default=None,
                          help="override the default sweep grid")
    p_verify.add_argument("--h-seq", default=None,
                          help="comma-separated steps for the order fit")
    p_verify.add_argument("--radii", default=None,
                          help="comma-separated loop radii for quantization")
    p_verify.add_argument("--n-points", type=int, default=256)
    p_verify.add_argument("--out", default=None, help="write the JSON report here")
    for flag in ("tol-irrotational", "tol-order", "tol-cauchy-riemann",
                 "tol-continuity", "tol-quantization-rel",
                 "tol-quantization-spread", "tol-nonencircling",
                 "tol-consistency"):
        p_verify.add_argument(f"--{flag}", type=float, default=None)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.h is not None and args.h <= 0:
        print("error: --h must be positive", file=sys.stderr)
        return 2
    if args.command == "field":
        if args.h is None:
            args.h = kinematics.DEFAULT_FD_STEP
        return cmd_field(args)
    if args.command == "circulation":
        return cmd_circulation(args)
    return cmd_verify(args)


if __name__ == "__main__":
    sys.exit(main())
