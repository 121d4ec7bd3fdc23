"""Density, current, velocity, and their finite-difference derivatives."""

import math

import numpy as np
import pytest

from qflow import (
    FieldSample,
    NodeThreshold,
    StencilNodeError,
    central_field,
    continuity_residual,
    current,
    density,
    divergence_fd,
    oscillator,
    plane_wave,
    velocity,
    vorticity_fd,
)
from qflow.numerics import convergence_order

RNG_SEED = 2718


def annulus_points(rng, n, r0=0.6, r1=2.2):
    r = rng.uniform(r0, r1, size=n)
    phi = rng.uniform(-math.pi, math.pi, size=n)
    return np.column_stack([r * np.cos(phi), r * np.sin(phi)])


class TestPlaneWaveFlow:
    def test_current_is_density_times_momentum_over_mass(self):
        s = plane_wave(1.0, 2.0, 0.7)
        jx, jy = current(s, (0.21, -1.7))
        assert jx == pytest.approx(0.7 * 1.0, rel=1e-13)
        assert jy == pytest.approx(0.7 * 2.0, rel=1e-13)

    def test_velocity_is_momentum_over_mass(self):
        s = plane_wave(-0.4, 1.1, 2.0, hbar=2.0, mass=4.0)
        rng = np.random.default_rng(RNG_SEED)
        for x, y in rng.uniform(-3, 3, size=(20, 2)):
            vx, vy = velocity(s, (x, y)).value
            assert vx == pytest.approx(-0.4 / 4.0, abs=1e-14)
            assert vy == pytest.approx(1.1 / 4.0, abs=1e-14)

    def test_velocity_independent_of_amplitude(self):
        # scaling |a|^2 scales the current but not the velocity
        rng = np.random.default_rng(RNG_SEED + 1)
        weak = plane_wave(0.9, -0.3, 1.0)
        strong = plane_wave(0.9, -0.3, 173.5)
        for x, y in rng.uniform(-2, 2, size=(10, 2)):
            v1 = velocity(weak, (x, y)).value
            v2 = velocity(strong, (x, y)).value
            assert abs(v1[0] - v2[0]) <= 1e-12
            assert abs(v1[1] - v2[1]) <= 1e-12
            j1 = current(weak, (x, y))
            j2 = current(strong, (x, y))
            assert j2[0] == pytest.approx(173.5 * j1[0], rel=1e-12)


class TestOscillatorFlow:
    @pytest.mark.parametrize("nx,ny", [(0, 0), (1, 0), (2, 1), (3, 3)])
    def test_current_and_velocity_vanish(self, nx, ny):
        s = oscillator(nx, ny, 1.0)
        xs = np.linspace(-3, 3, 21)
        for x in xs:
            for y in xs:
                jx, jy = current(s, (x, y))
                assert jx == 0.0 and jy == 0.0
                sample = velocity(s, (x, y))
                if not sample.singular:
                    assert sample.value == (0.0, 0.0)

    def test_velocity_singular_at_node(self):
        s = oscillator(1, 0, 1.0)
        sample = velocity(s, (0.0, 0.5))  # H_1(0) = 0 exactly
        assert sample.singular
        assert sample.value is None

    def test_density_positive_off_nodes(self):
        s = oscillator(2, 1, 1.0)
        assert density(s, (0.3, 0.4)) > 0.0


class TestAzimuthalFlow:
    def test_current_is_azimuthal(self):
        # magnitude rho_density * ml hbar / (m rho), direction (-sin, cos)
        s = central_field(1, 1)
        p = (2.0, 0.0)
        rho_density = density(s, p)
        jx, jy = current(s, p)
        assert jx == pytest.approx(0.0, abs=1e-18)
        assert jy == pytest.approx(rho_density * 1.0 / (1.0 * 2.0), rel=1e-13)

    def test_velocity_magnitude_and_direction(self):
        rng = np.random.default_rng(RNG_SEED + 2)
        for ml, l in ((1, 1), (2, 2), (-3, 3)):
            s = central_field(l, ml)
            for x, y in annulus_points(rng, 40):
                rho = math.hypot(x, y)
                vx, vy = velocity(s, (x, y)).value
                v_phi = (-y * vx + x * vy) / rho
                v_rad = (x * vx + y * vy) / rho
                assert v_phi * rho == pytest.approx(ml, rel=1e-12), (ml, x, y)
                assert abs(v_rad) <= 1e-12 * abs(v_phi)

    def test_velocity_scales_with_hbar_over_mass(self):
        s = central_field(2, 2, hbar=2.0, mass=3.0)
        vx, vy = velocity(s, (1.5, 0.0)).value
        assert vy == pytest.approx(2.0 * 2.0 / (3.0 * 1.5), rel=1e-12)

    def test_ml_zero_is_at_rest(self):
        s = central_field(2, 0, theta=math.pi / 3)
        jx, jy = current(s, (1.1, -0.2))
        assert jx == 0.0 and jy == 0.0

    def test_negative_ml_reverses_flow(self):
        fwd = central_field(2, 2)
        rev = central_field(2, -2)
        p = (0.0, 1.3)
        vf = velocity(fwd, p).value
        vr = velocity(rev, p).value
        assert vf[0] == pytest.approx(-vr[0], rel=1e-12)
        assert abs(vf[0]) > 0.1


class TestNodeThreshold:
    def test_threshold_gates_singular_flag(self):
        s = plane_wave(1.0, 0.0, 1e-6)
        assert velocity(s, (0.0, 0.0), NodeThreshold(1e-7)).singular is False
        assert velocity(s, (0.0, 0.0), NodeThreshold(1e-5)).singular is True

    def test_relative_to_peak(self):
        th = NodeThreshold.relative_to_peak(2.5, 1e-12)
        assert th.epsilon_rho == pytest.approx(2.5e-12)
        with pytest.raises(ValueError):
            NodeThreshold.relative_to_peak(0.0)

    def test_validation(self):
        with pytest.raises(ValueError):
            NodeThreshold(0.0)
        with pytest.raises(ValueError):
            FieldSample(1.0, singular=True)


class TestVorticity:
    def test_rigid_rotation_override(self):
        sample = vorticity_fd(None, (0.4, -0.6),
                              velocity_fn=lambda p: (-p[1], p[0]))
        assert sample.value == pytest.approx(2.0, abs=1e-8)

    def test_plane_wave_curl_is_exactly_zero(self):
        s = plane_wave(1.0, 2.0, 0.7)
        assert vorticity_fd(s, (0.3, 0.9)).value == 0.0

    def test_oscillator_curl_is_exactly_zero(self):
        s = oscillator(2, 1, 1.0)
        assert vorticity_fd(s, (0.4, -0.3)).value == 0.0

    def test_azimuthal_curl_small_and_second_order(self):
        # central differences across v_phi = ml/rho leave an O(h^2) residue
        s = central_field(1, 1)
        h = 1e-4
        w = vorticity_fd(s, (1.0, 0.0), h).value
        assert abs(w) <= 3.0 * h * h  # theory: ~2 h^2 / rho^4 at rho = 1
        report = convergence_order([1e-2, 3e-3, 1e-3, 3e-4, 1e-4],
                                   lambda step: vorticity_fd(s, (1.0, 0.5), step).value)
        assert report.fitted_order >= 1.9
        assert not report.all_floored

    def test_core_exclusion_returns_singular(self):
        s = central_field(1, 1)
        h = 1e-4
        assert vorticity_fd(s, (5 * h, 0.0), h).singular is True
        assert vorticity_fd(s, (20 * h, 0.0), h).singular is False

    def test_stencil_node_is_reported(self):
        s = oscillator(1, 0, 1.0)
        with pytest.raises(StencilNodeError) as err:
            vorticity_fd(s, (1e-4, 0.5), h=1e-4)
        assert err.value.label == "x-h"
        assert err.value.point == (0.0, 0.5)

    def test_step_validation(self):
        s = plane_wave(1.0, 0.0)
        with pytest.raises(ValueError):
            vorticity_fd(s, (0.0, 0.0), h=0.0)
        with pytest.raises(ValueError):
            vorticity_fd(None, (0.0, 0.0))


class TestDivergence:
    def test_incompressible_everywhere_sampled(self):
        rng = np.random.default_rng(RNG_SEED + 3)
        s = central_field(2, 2)
        for x, y in annulus_points(rng, 30):
            d = divergence_fd(s, (x, y)).value
            assert abs(d) <= 1e-6

    def test_linear_field_divergence(self):
        sample = divergence_fd(None, (0.2, 0.8),
                               velocity_fn=lambda p: (3.0 * p[0], -1.0 * p[1]))
        assert sample.value == pytest.approx(2.0, abs=1e-9)


class TestContinuity:
    def test_plane_wave_tiny(self):
        # |psi|^2 carries ~1e-16 rounding jitter across the stencil, so the
        # residual is roundoff / (2h), not an exact zero
        s = plane_wave(1.0, 2.0, 0.7)
        assert abs(continuity_residual(s, (0.77, -0.1))) <= 1e-11

    def test_oscillator_exact(self):
        s = oscillator(3, 1, 1.0)
        assert continuity_residual(s, (0.4, 0.9)) == 0.0

    def test_azimuthal_small(self):
        # div j = (1/rho) d(rho j_rho)/drho + (1/rho) dj_phi/dphi; j_rho = 0
        # and j_phi has no phi dependence, so the residual is pure FD error.
        s = central_field(1, 1)
        assert abs(continuity_residual(s, (0.8, 0.0))) <= 1e-6
        rng = np.random.default_rng(RNG_SEED + 4)
        for x, y in annulus_points(rng, 30):
            assert abs(continuity_residual(s, (x, y))) <= 1e-6

    def test_works_at_nodes(self):
        # the current is defined on nodes even though the velocity is not
        s = oscillator(1, 0, 1.0)
        assert continuity_residual(s, (0.0, 0.3)) == 0.0
