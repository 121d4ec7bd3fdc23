"""Catalog of stationary two-dimensional states and their amplitudes.

Three families are supported, each with a closed-form complex amplitude
psi(x, y) and an analytic Cartesian gradient:

* plane wave          psi = a exp(i (px x + py y) / hbar)
* isotropic oscillator  psi = N_nx N_ny exp(-alpha^2 (x^2+y^2)/2)
                             * H_nx(alpha x) H_ny(alpha y),  alpha = sqrt(m w / hbar)
* azimuthal state     psi = M(rho) exp(i m_l phi)  on a fixed-polar-angle plane,
                      with M built from a real radial profile and a constant
                      associated-Legendre factor.

The azimuthal family is the planar reduction of a central-field eigenstate
R(r) Y_lm: on the cone of polar angle theta the cylindrical radius is
rho = r sin(theta), the angular factor contributes the constant
N_lm P_l^|m|(cos theta), and the only surviving phase is exp(i m_l phi).
Only realness and square integrability of the radial profile matter for any
flow statement downstream, so the profile is pluggable: a Gaussian by
default, or a user table interpolated by a cubic spline.
"""

from __future__ import annotations

import cmath
import json
import math
from dataclasses import dataclass, field

from scipy.interpolate import CubicSpline

from .errors import DomainError, OriginError, TableRangeError
from .special_functions import (
    MAX_DEGREE,
    assoc_legendre,
    assoc_legendre_norm,
    hermite,
    hermite_derivative,
    oscillator_norm,
)

Point = tuple[float, float]


@dataclass(frozen=True)
class PhysicalConstants:
    """Reduced Planck constant and particle mass; natural units by default."""

    hbar: float = 1.0
    mass: float = 1.0

    def __post_init__(self):
        if not (self.hbar > 0.0 and math.isfinite(self.hbar)):
            raise DomainError(f"hbar must be positive and finite, got {self.hbar}")
        if not (self.mass > 0.0 and math.isfinite(self.mass)):
            raise DomainError(f"mass must be positive and finite, got {self.mass}")


@dataclass(frozen=True)
class GaussianRadial:
    """Radial profile exp(-r^2 / (2 width^2)); square integrable for any width > 0."""

    width: float = 1.0

    def __post_init__(self):
        if not (self.width > 0.0 and math.isfinite(self.width)):
            raise DomainError(f"width must be positive and finite, got {self.width}")

    def value(self, r: float) -> float:
        return math.exp(-0.5 * (r / self.width) ** 2)

    def derivative(self, r: float) -> float:
        return -(r / self.width**2) * self.value(r)


@dataclass(frozen=True, eq=False)
class TabulatedRadial:
    """Radial profile given as samples, interpolated by a cubic spline.

    The derivative comes from the spline.  Evaluation outside the tabulated
    range raises TableRangeError rather than extrapolating.
    """

    radii: tuple[float, ...]
    values: tuple[float, ...]
    _spline: CubicSpline = field(init=False, repr=False, compare=False)
    _spline_d: CubicSpline = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        radii = tuple(float(r) for r in self.radii)
        values = tuple(float(v) for v in self.values)
        if len(radii) != len(values):
            raise DomainError("radii and values must have equal length")
        if len(radii) < 4:
            raise DomainError("tabulated profile needs at least 4 points")
        if any(b <= a for a, b in zip(radii, radii[1:])):
            raise DomainError("radii must be strictly increasing")
        if radii[0] < 0.0:
            raise DomainError("radii must be non-negative")
        if any(not math.isfinite(v) for v in values):
            raise DomainError("profile values must be finite")
        object.__setattr__(self, "radii", radii)
        object.__setattr__(self, "values", values)
        spline = CubicSpline(radii, values)
        object.__setattr__(self, "_spline", spline)
        object.__setattr__(self, "_spline_d", spline.derivative())

    def _check_range(self, r: float) -> float:
        if r < self.radii[0] or r > self.radii[-1]:
            raise TableRangeError(
                f"r={r} outside tabulated range [{self.radii[0]}, {self.radii[-1]}]")
        return r

    def value(self, r: float) -> float:
        return float(self._spline(self._check_range(r)))

    def derivative(self, r: float) -> float:
        return float(self._spline_d(self._check_range(r)))


RadialProfile = GaussianRadial | TabulatedRadial


@dataclass(frozen=True)
class PlaneWaveSpec:
    """Momentum components and squared amplitude of a free plane wave."""

    px: float
    py: float
    amplitude_sq: float = 1.0

    def __post_init__(self):
        for name in ("px", "py"):
            if not math.isfinite(getattr(self, name)):
                raise DomainError(f"{name} must be finite")
        if not (self.amplitude_sq > 0.0 and math.isfinite(self.amplitude_sq)):
            raise DomainError(f"amplitude_sq must be positive, got {self.amplitude_sq}")


@dataclass(frozen=True)
class OscillatorSpec:
    """Quantum numbers and angular frequency of a 2-D isotropic oscillator state."""

    nx: int
    ny: int
    omega: float = 1.0

    def __post_init__(self):
        for name in ("nx", "ny"):
            n = getattr(self, name)
            if not isinstance(n, int) or n < 0 or n > MAX_DEGREE:
                raise DomainError(f"{name} must be an integer in [0, {MAX_DEGREE}], got {n!r}")
        if not (self.omega > 0.0 and math.isfinite(self.omega)):
            raise DomainError(f"omega must be positive, got {self.omega}")


@dataclass(frozen=True)
class CentralFieldSpec:
    """Planar reduction of a central-field eigenstate at fixed polar angle.

    theta is the polar angle of the evaluation plane (pi/2 = equatorial).
    The constant angular factor N_lm P_l^|ml|(cos theta) must not vanish
    there, otherwise the whole plane would be a node.
    """

    l: int
    ml: int
    radial: RadialProfile = GaussianRadial()
    theta: float = math.pi / 2.0

    def __post_init__(self):
        if not isinstance(self.l, int) or self.l < 0 or self.l > MAX_DEGREE:
            raise DomainError(f"l must be an integer in [0, {MAX_DEGREE}], got {self.l!r}")
        if not isinstance(self.ml, int) or abs(self.ml) > self.l:
            raise DomainError(f"ml must be an integer with |ml| <= l, got {self.ml!r}")
        if not (0.0 < self.theta < math.pi):
            raise DomainError(f"theta must lie in (0, pi), got {self.theta}")
        # cos(pi/2) rounds to ~6e-17, so an exact-zero test would miss the
        # equatorial node planes; anything this small is a node plane.
        if abs(self.angular_factor()) <= 1e-14:
            raise DomainError(
                f"P_{self.l}^{abs(self.ml)}(cos theta) vanishes at theta={self.theta}; "
                "pick a different plane angle")

    def angular_factor(self) -> float:
        """Constant N_lm P_l^|ml|(cos theta) carried by the planar amplitude."""
        m = abs(self.ml)
        return assoc_legendre_norm(self.l, m) * assoc_legendre(self.l, m, math.cos(self.theta))


StateVariant = PlaneWaveSpec | OscillatorSpec | CentralFieldSpec


@dataclass(frozen=True)
class StateSpec:
    """A catalog state: variant parameters plus physical constants."""

    variant: StateVariant
    constants: PhysicalConstants = PhysicalConstants()

    def __post_init__(self):
        if not isinstance(self.variant, (PlaneWaveSpec, OscillatorSpec, CentralFieldSpec)):
            raise DomainError(f"unknown state variant {type(self.variant).__name__}")


def plane_wave(px: float, py: float, amplitude_sq: float = 1.0,
               hbar: float = 1.0, mass: float = 1.0) -> StateSpec:
    return StateSpec(PlaneWaveSpec(px, py, amplitude_sq), PhysicalConstants(hbar, mass))


def oscillator(nx: int, ny: int, omega: float = 1.0,
               hbar: float = 1.0, mass: float = 1.0) -> StateSpec:
    return StateSpec(OscillatorSpec(nx, ny, omega), PhysicalConstants(hbar, mass))


def central_field(l: int, ml: int, radial: RadialProfile | None = None,
                  theta: float = math.pi / 2.0,
                  hbar: float = 1.0, mass: float = 1.0) -> StateSpec:
    return StateSpec(CentralFieldSpec(l, ml, radial or GaussianRadial(), theta),
                     PhysicalConstants(hbar, mass))


def _oscillator_alpha(spec: OscillatorSpec, constants: PhysicalConstants) -> float:
    return math.sqrt(constants.mass * spec.omega / constants.hbar)


def _herm_factor(n: int, alpha: float, s: float) -> tuple[float, float]:
    """f(s) = exp(-alpha^2 s^2 / 2) H_n(alpha s) and its derivative."""
    u = alpha * s
    env = math.exp(-0.5 * u * u)
    h = hermite(n, u)
    dh = hermite_derivative(n, u)
    f = env * h
    df = env * (alpha * dh - alpha * u * h)
    return f, df


def amplitude(state: StateSpec, point: Point) -> complex:
    """Complex amplitude psi at a point of the evaluation plane."""
    x, y = float(point[0]), float(point[1])
    v = state.variant
    c = state.constants
    if isinstance(v, PlaneWaveSpec):
        a = math.sqrt(v.amplitude_sq)
        return a * cmath.exp(1j * (v.px * x + v.py * y) / c.hbar)
    if isinstance(v, OscillatorSpec):
        alpha = _oscillator_alpha(v, c)
        norm = oscillator_norm(v.nx, alpha) * oscillator_norm(v.ny, alpha)
        fx, _ = _herm_factor(v.nx, alpha, x)
        fy, _ = _herm_factor(v.ny, alpha, y)
        return complex(norm * fx * fy, 0.0)
    rho = math.hypot(x, y)
    phi = math.atan2(y, x)
    m_mod = _central_modulus(v, rho)
    return m_mod * cmath.exp(1j * v.ml * phi)


def _central_modulus(v: CentralFieldSpec, rho: float) -> float:
    """Real radial modulus M(rho) of the planar azimuthal amplitude."""
    r = rho / math.sin(v.theta)
    return v.angular_factor() * v.radial.value(r)


def _central_modulus_derivative(v: CentralFieldSpec, rho: float) -> float:
    sin_t = math.sin(v.theta)
    return v.angular_factor() * v.radial.derivative(rho / sin_t) / sin_t


def grad_amplitude(state: StateSpec, point: Point) -> tuple[complex, complex]:
    """Analytic Cartesian gradient (d psi/dx, d psi/dy)."""
    x, y = float(point[0]), float(point[1])
    v = state.variant
    c = state.constants
    if isinstance(v, PlaneWaveSpec):
        psi = amplitude(state, point)
        return (1j * v.px / c.hbar) * psi, (1j * v.py / c.hbar) * psi
    if isinstance(v, OscillatorSpec):
        alpha = _oscillator_alpha(v, c)
        norm = oscillator_norm(v.nx, alpha) * oscillator_norm(v.ny, alpha)
        fx, dfx = _herm_factor(v.nx, alpha, x)
        fy, dfy = _herm_factor(v.ny, alpha, y)
        return complex(norm * dfx * fy, 0.0), complex(norm * fx * dfy, 0.0)
    rho = math.hypot(x, y)
    if rho == 0.0:
        raise OriginError("gradient of an azimuthal state is undefined at the origin")
    phi = math.atan2(y, x)
    cos_p, sin_p = math.cos(phi), math.sin(phi)
    m_mod = _central_modulus(v, rho)
    dm = _central_modulus_derivative(v, rho)
    phase = cmath.exp(1j * v.ml * phi)
    # d phi/dx = -sin(phi)/rho, d phi/dy = cos(phi)/rho
    gx = phase * complex(dm * cos_p, -v.ml * m_mod * sin_p / rho)
    gy = phase * complex(dm * sin_p, v.ml * m_mod * cos_p / rho)
    return gx, gy


# ---------------------------------------------------------------------------
# JSON round trip.  Schema:
#     {"variant": "plane_wave" | "oscillator" | "central",
#      "params": {...}, "hbar": number, "mass": number}
# ---------------------------------------------------------------------------

def state_to_json_dict(state: StateSpec) -> dict:
    v = state.variant
    if isinstance(v, PlaneWaveSpec):
        name = "plane_wave"
        params = {"px": v.px, "py": v.py, "amplitude_sq": v.amplitude_sq}
    elif isinstance(v, OscillatorSpec):
        name = "oscillator"
        params = {"nx": v.nx, "ny": v.ny, "omega": v.omega}
    else:
        name = "central"
        if isinstance(v.radial, GaussianRadial):
            radial = {"variant": "gaussian", "width": v.radial.width}
        else:
            radial = {"variant": "user_table",
                      "radii": list(v.radial.radii), "values": list(v.radial.values)}
        params = {"l": v.l, "ml": v.ml, "radial": radial, "theta": v.theta}
    return {"variant": name, "params": params,
            "hbar": state.constants.hbar, "mass": state.constants.mass}


def state_from_json_dict(data: dict) -> StateSpec:
    if not isinstance(data, dict):
        raise DomainError("state JSON must be an object")
    try:
        name = data["variant"]
        params = dict(data.get("params", {}))
        constants = PhysicalConstants(float(data.get("hbar", 1.0)),
                                      float(data.get("mass", 1.0)))
        if name == "plane_wave":
            variant = PlaneWaveSpec(float(params["px"]), float(params["py"]),
                                    float(params.get("amplitude_sq", 1.0)))
        elif name == "oscillator":
            variant = OscillatorSpec(int(params["nx"]), int(params["ny"]),
                                     float(params.get("omega", 1.0)))
        elif name == "central":
            radial_data = params.get("radial", {"variant": "gaussian"})
            rname = radial_data.get("variant", "gaussian")
            if rname == "gaussian":
                radial: RadialProfile = GaussianRadial(float(radial_data.get("width", 1.0)))
            elif rname == "user_table":
                radial = TabulatedRadial(tuple(radial_data["radii"]),
                                         tuple(radial_data["values"]))
            else:
                raise DomainError(f"unknown radial variant {rname!r}")
            variant = CentralFieldSpec(int(params["l"]), int(params["ml"]), radial,
                                       float(params.get("theta", math.pi / 2.0)))
        else:
            raise DomainError(f"unknown state variant {name!r}")
    except KeyError as exc:
        raise DomainError(f"state JSON missing field {exc.args[0]!r}") from None
    except (TypeError, ValueError) as exc:
        if isinstance(exc, DomainError):
            raise
        raise DomainError(f"malformed state JSON: {exc}") from None
    return StateSpec(variant, constants)


def state_to_json(state: StateSpec) -> str:
    return json.dumps(state_to_json_dict(state), indent=2)


def state_from_json(text: str) -> StateSpec:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DomainError(f"invalid JSON: {exc}") from None
    return state_from_json_dict(data)
