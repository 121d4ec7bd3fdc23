"""Circulation quadrature, winding numbers, quantization."""

import math

import numpy as np
import pytest

from qflow import (
    Contour,
    DomainError,
    SingularVelocityError,
    central_field,
    circulation,
    corner_flow,
    make_circle,
    oscillator,
    plane_wave,
    stokes_check,
    uniform_flow,
    vortex_flow,
    winding_number,
)

RNG_SEED = 4242


def star_contour(n=256, base=1.5, wobble=0.3, lobes=3, center=(0.0, 0.0)):
    """Smooth non-circular closed curve, uniformly sampled in parameter."""
    t = 2.0 * math.pi * np.arange(n) / n
    r = base + wobble * np.cos(lobes * t)
    pts = np.column_stack([center[0] + r * np.cos(t), center[1] + r * np.sin(t)])
    return Contour(pts, "ccw")


class TestContourBasics:
    def test_make_circle_orientation_and_radius(self):
        c = make_circle((1.0, -2.0), 0.5, 64)
        assert c.orientation == "ccw"
        assert len(c) == 64
        radii = np.hypot(c.points[:, 0] - 1.0, c.points[:, 1] + 2.0)
        np.testing.assert_allclose(radii, 0.5, rtol=1e-14)

    def test_minimum_points_enforced(self):
        with pytest.raises(DomainError):
            make_circle((0, 0), 1.0, 8)
        with pytest.raises(DomainError):
            Contour(np.zeros((4, 2)))

    def test_bad_radius(self):
        with pytest.raises(DomainError):
            make_circle((0, 0), 0.0)
        with pytest.raises(DomainError):
            make_circle((0, 0), -2.0)

    def test_points_are_read_only(self):
        c = make_circle((0, 0), 1.0)
        with pytest.raises(ValueError):
            c.points[0, 0] = 99.0

    def test_reversed_flips_label_and_order(self):
        c = make_circle((0, 0), 1.0, 32)
        r = c.reversed()
        assert r.orientation == "cw"
        np.testing.assert_array_equal(r.points, c.points[::-1])


class TestWindingNumber:
    def test_circle_windings(self):
        c = make_circle((0, 0), 1.0, 64)
        assert winding_number(c) == 1
        assert winding_number(c.reversed()) == -1
        assert winding_number(make_circle((3.0, 0.0), 1.0, 64)) == 0

    def test_double_traversal(self):
        t = 2.0 * math.pi * np.arange(128) / 128
        pts = np.column_stack([np.cos(2 * t), np.sin(2 * t)])
        assert winding_number(Contour(pts)) == 2

    def test_about_shifted_point(self):
        c = make_circle((2.0, 2.0), 0.5, 64)
        assert winding_number(c, about=(2.0, 2.0)) == 1
        assert winding_number(c, about=(0.0, 0.0)) == 0

    def test_point_on_contour_rejected(self):
        c = make_circle((0, 0), 1.0, 64)
        with pytest.raises(DomainError):
            winding_number(c, about=(1.0, 0.0))


class TestQuantizedCirculation:
    @pytest.mark.parametrize("ml", [-3, -2, -1, 1, 2, 3])
    def test_azimuthal_state_quantization(self, ml):
        state = central_field(abs(ml), ml)
        expected = 2.0 * math.pi * ml
        for radius in (0.5, 1.0, 2.0):
            res = circulation(state, make_circle((0, 0), radius, 256))
            assert res.gamma == pytest.approx(expected, rel=1e-12)
            assert res.winding == 1
            assert res.quantum_residual <= 1e-10

    def test_hbar_mass_scaling(self):
        state = central_field(2, 2, hbar=2.0, mass=3.0)
        res = circulation(state, make_circle((0, 0), 1.0, 256))
        assert res.gamma == pytest.approx(2.0 * math.pi * 2 * 2.0 / 3.0, rel=1e-12)
        assert res.quantum_residual <= 1e-10

    def test_vortex_potential_matches_state(self):
        res_p = circulation(vortex_flow(2), make_circle((0, 0), 1.3, 256))
        res_s = circulation(central_field(2, 2), make_circle((0, 0), 1.3, 256))
        assert res_p.gamma == pytest.approx(res_s.gamma, rel=1e-12)

    def test_non_encircling_loop_is_zero(self):
        state = central_field(1, 1)
        res = circulation(state, make_circle((3.0, 0.0), 1.0, 256))
        assert res.winding == 0
        assert abs(res.gamma) <= 1e-8
        assert res.quantum_residual == abs(res.gamma)

    def test_loop_shape_does_not_matter(self):
        # any simple smooth loop around the core sees the full circulation
        res = circulation(vortex_flow(2), star_contour())
        assert res.gamma == pytest.approx(4.0 * math.pi, rel=1e-10)

    def test_double_traversal_doubles_gamma(self):
        t = 2.0 * math.pi * np.arange(512) / 512
        pts = 1.2 * np.column_stack([np.cos(2 * t), np.sin(2 * t)])
        res = circulation(vortex_flow(1), Contour(pts))
        assert res.winding == 2
        assert res.gamma == pytest.approx(2.0 * 2.0 * math.pi, rel=1e-10)
        assert res.quantum_residual <= 1e-10


class TestGradientFlows:
    def test_plane_wave_loops_carry_nothing(self):
        state = plane_wave(1.0, 2.0, 0.7)
        for contour in (make_circle((0, 0), 1.0, 256),
                        make_circle((-1.0, 2.0), 0.7, 128),
                        star_contour()):
            res = circulation(state, contour)
            assert abs(res.gamma) <= 1e-12
            assert res.quantum_residual == abs(res.gamma)

    def test_oscillator_loops_carry_nothing(self):
        state = oscillator(2, 1, 1.0)
        res = circulation(state, make_circle((0.3, 0.2), 1.1, 128))
        assert abs(res.gamma) <= 1e-12

    def test_corner_flow_loops_carry_nothing(self):
        spec = corner_flow(0.7 + 0.2j, 3)
        res = circulation(spec, star_contour(center=(0.5, 0.5)))
        assert abs(res.gamma) <= 1e-10

    def test_uniform_potential_loops_carry_nothing(self):
        res = circulation(uniform_flow(3.0, -1.0), make_circle((0, 0), 2.0, 64))
        assert abs(res.gamma) <= 1e-12


class TestOrientation:
    def test_reversal_negates_exactly(self):
        state = central_field(2, 2)
        c = make_circle((0, 0), 1.0, 256)
        fwd = circulation(state, c).gamma
        bwd = circulation(state, c.reversed()).gamma
        assert bwd == -fwd  # bit-exact by construction

    def test_cw_label_integrates_consistently(self):
        c = make_circle((0, 0), 1.0, 128)
        cw = Contour(c.points[::-1].copy(), "cw")
        res = circulation(vortex_flow(1), cw)
        assert res.gamma == pytest.approx(-2.0 * math.pi, rel=1e-12)
        assert res.winding == -1
        assert res.quantum_residual <= 1e-10


class TestSingularContours:
    def test_node_on_contour_raises(self):
        # the (1,0) oscillator dies on x = 0; a unit circle crosses that line
        state = oscillator(1, 0, 1.0)
        with pytest.raises(SingularVelocityError):
            circulation(state, make_circle((0, 0), 1.0, 256))

    def test_core_on_contour_raises(self):
        state = central_field(1, 1)
        with pytest.raises(Exception) as err:
            circulation(state, make_circle((1.0, 0.0), 1.0, 256))
        assert "origin" in str(err.value).lower() or "singular" in str(err.value).lower()

    def test_rejects_unknown_target(self):
        with pytest.raises(DomainError):
            circulation("nonsense", make_circle((0, 0), 1.0))


class TestLoopIndependence:
    def test_azimuthal_state_spread(self):
        report = stokes_check(central_field(3, 3), (0.5, 1.0, 2.0))
        assert report.spread <= 1e-10
        assert report.windings == (1, 1, 1)
        for g in report.gammas:
            assert g == pytest.approx(6.0 * math.pi, rel=1e-12)

    def test_plane_wave_spread(self):
        report = stokes_check(plane_wave(1.0, 2.0, 0.7), (1.0, 2.0))
        assert report.spread <= 1e-12
        for g in report.gammas:
            assert abs(g) <= 1e-12

    def test_needs_two_radii(self):
        with pytest.raises(DomainError):
            stokes_check(central_field(1, 1), (1.0,))
