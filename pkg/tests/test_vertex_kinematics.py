import math

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from foldfront.engine.enums import FoldMode
from foldfront.engine.errors import DomainError, SingularVertex
from foldfront.engine.vertex import (
    SectorAngles,
    VertexState,
    ab_coefficients,
    closure_residual,
    flat_multiplier,
    fold_angles,
    folding_multiplier,
    is_singular,
    relation_curve,
)


def deg(theta0, theta1):
    return SectorAngles.from_degrees(theta0, theta1)


# sector angles at least 6° away from both singular configurations
regular_vertices = st.tuples(
    st.floats(min_value=15.0, max_value=165.0),
    st.floats(min_value=15.0, max_value=165.0),
    st.sampled_from([FoldMode.SAME, FoldMode.OPPOSITE]),
).filter(lambda v: abs(v[0] - v[1]) > 6.0 and abs(v[0] + v[1] - 180.0) > 6.0)

drive_angles = st.floats(min_value=-math.pi, max_value=math.pi)


class TestSingularity:
    """Test detection of singular vertices."""

    def test_mirror_vertex_opposite_mode_is_singular(self):
        assert is_singular(deg(85, 85), -1)

    def test_regular_vertex(self):
        assert not is_singular(deg(60, 55), 1)

    def test_supplementary_vertex_same_mode_is_singular(self):
        assert is_singular(deg(120, 60), 1)
        assert not is_singular(deg(120, 60), -1)

    def test_singular_vertex_refuses_closed_form(self):
        with pytest.raises(SingularVertex):
            fold_angles(deg(85, 85), -1, 0.5)
        with pytest.raises(SingularVertex):
            folding_multiplier(deg(120, 60), 1)


class TestCoefficients:
    """Test the A and B coefficients of the fold-angle relation."""

    def test_straight_quad_turning_vertex(self):
        coeffs = ab_coefficients(deg(120, 60), -1)
        assert coeffs.a == pytest.approx(-1.25)
        assert coeffs.b == pytest.approx(0.75)
        assert coeffs.ratio == pytest.approx(-5 / 3)

    def test_right_angles(self):
        coeffs = ab_coefficients(deg(90, 90), 1)
        assert coeffs.a == pytest.approx(1.0)
        assert coeffs.b == pytest.approx(1.0)

    def test_decaying_single_vertex(self):
        coeffs = ab_coefficients(deg(148.75, 60), 1)
        assert coeffs.a == pytest.approx(0.572545, abs=1e-5)
        assert coeffs.b == pytest.approx(0.449271, abs=1e-5)


class TestFoldAngles:
    """Test the closed-form fold angles of one vertex."""

    def test_developed_state(self):
        state = fold_angles(deg(120, 60), -1, 0.0)
        assert state.rho == (0.0, 0.0, 0.0, 0.0)

    def test_flat_folded_state(self):
        state = fold_angles(deg(60, 55), 1, math.pi)
        assert state.rho == (math.pi, -math.pi, math.pi, math.pi)

    @pytest.mark.parametrize("theta0,theta1,mode", [(110, 70, -1), (110, 60, 1)])
    def test_opposite_creases_follow_mode(self, theta0, theta1, mode):
        state = fold_angles(deg(theta0, theta1), mode, 1.2)
        assert state.rho[2] == mode * state.rho[0]
        assert state.rho[3] == -mode * state.rho[1]

    def test_same_mode_folds_less_than_opposite(self):
        rho_same = fold_angles(deg(100, 50), 1, 1.0).rho[1]
        rho_opposite = fold_angles(deg(100, 50), -1, 1.0).rho[1]
        assert abs(rho_same) < 1.0 < abs(rho_opposite)

    def test_rejects_out_of_range_drive(self):
        with pytest.raises(DomainError):
            fold_angles(deg(120, 60), -1, 3.5)
        with pytest.raises(DomainError):
            fold_angles(deg(120, 60), -1, float("nan"))

    def test_rejects_bad_mode(self):
        with pytest.raises(DomainError):
            fold_angles(deg(120, 60), 0, 0.5)

    def test_sector_angles_validated(self):
        with pytest.raises(DomainError):
            SectorAngles(0.0, 1.0)
        with pytest.raises(DomainError):
            SectorAngles(1.0, math.pi)
        with pytest.raises(DomainError):
            VertexState((0.0, 0.0, 0.0))

    def test_derived_sector_angles(self):
        angles = deg(120, 60)
        assert angles.theta2 == pytest.approx(math.radians(60))
        assert angles.theta3 == pytest.approx(math.radians(120))
        assert sum(angles.as_tuple()) == pytest.approx(2 * math.pi)


class TestMultipliers:
    """Test the folding multiplier at both flat states."""

    def test_decaying_single_multiplier(self):
        assert folding_multiplier(deg(148.75, 60), 1) == pytest.approx(0.34733, abs=1e-4)

    def test_magnitudes(self):
        assert abs(folding_multiplier(deg(120, 60), -1)) == pytest.approx(2.0, abs=1e-12)
        assert abs(folding_multiplier(deg(120, 120), 1)) == pytest.approx(0.5, abs=1e-12)

    def test_flat_multiplier_is_reciprocal(self):
        angles = deg(148.75, 60)
        assert flat_multiplier(angles, 1) * folding_multiplier(angles, 1) == pytest.approx(1.0)

    @pytest.mark.parametrize("theta0,theta1,mode", [
        (148.75, 60, 1), (120, 60, -1), (120, 120, 1), (150, 90, -1), (110, 70, -1), (40, 100, 1),
    ])
    def test_reciprocal_slopes(self, theta0, theta1, mode):
        angles = deg(theta0, theta1)
        h = 1e-6
        at_developed = (fold_angles(angles, mode, h).rho[1] - fold_angles(angles, mode, -h).rho[1]) / (2 * h)
        at_flat = (math.pi - abs(fold_angles(angles, mode, math.pi - h).rho[1])) / h
        assert abs(at_developed) == pytest.approx(abs(folding_multiplier(angles, mode)), rel=1e-6)
        assert abs(at_developed) * at_flat == pytest.approx(1.0, abs=1e-6)


class TestClosure:
    """Test the loop-closure residual."""

    def test_closed_form_closes(self):
        angles = deg(120, 60)
        for rho0 in (0.3, 1.0, 2.0, -2.9):
            assert closure_residual(angles, fold_angles(angles, -1, rho0)) < 1e-9

    def test_developed_state_closes_exactly(self):
        angles = deg(148.75, 60)
        assert closure_residual(angles, fold_angles(angles, 1, 0.0)) < 1e-12

    def test_perturbed_state_does_not_close(self):
        angles = deg(120, 60)
        rho = fold_angles(angles, -1, 1.0).rho
        perturbed = VertexState((rho[0], rho[1] + 1e-3, rho[2], rho[3]))
        assert closure_residual(angles, perturbed) > 1e-5


class TestRelationCurve:
    """Test sampling of the adjacent fold-angle relation."""

    def test_curve_spans_both_flat_states(self):
        rows = relation_curve(deg(148.75, 60), 1, samples=37)
        assert len(rows) == 37
        assert rows[0][0] == -math.pi
        assert abs(rows[0][1]) == math.pi
        assert rows[18][1] == pytest.approx(0.0, abs=1e-12)

    def test_needs_two_samples(self):
        with pytest.raises(DomainError):
            relation_curve(deg(148.75, 60), 1, samples=1)


@settings(max_examples=200, deadline=None)
@given(regular_vertices, drive_angles)
def test_odd_symmetry(vertex, rho0):
    theta0, theta1, mode = vertex
    angles = deg(theta0, theta1)
    plus = fold_angles(angles, mode, rho0).rho
    minus = fold_angles(angles, mode, -rho0).rho
    assert minus == tuple(-x for x in plus)


@settings(max_examples=200, deadline=None)
@given(regular_vertices, drive_angles)
def test_cosine_relation(vertex, rho0):
    theta0, theta1, mode = vertex
    angles = deg(theta0, theta1)
    coeffs = ab_coefficients(angles, mode)
    rho1 = fold_angles(angles, mode, rho0).rho[1]
    c = math.cos(rho0)
    assert math.cos(rho1) == pytest.approx((coeffs.a * c + coeffs.b) / (coeffs.b * c + coeffs.a), abs=1e-12)


@settings(max_examples=200, deadline=None)
@given(regular_vertices, st.floats(min_value=1e-6, max_value=math.pi - 0.01))
def test_half_angle_relation(vertex, rho0):
    theta0, theta1, mode = vertex
    angles = deg(theta0, theta1)
    p = folding_multiplier(angles, mode)
    rho1 = fold_angles(angles, mode, rho0).rho[1]
    assert math.tan(rho1 / 2) ** 2 == pytest.approx(p * p * math.tan(rho0 / 2) ** 2, rel=1e-10)


@settings(max_examples=100, deadline=None)
@given(regular_vertices)
def test_endpoint_lock(vertex):
    theta0, theta1, mode = vertex
    angles = deg(theta0, theta1)
    assert abs(fold_angles(angles, mode, math.pi).rho[1]) == math.pi
    assert abs(fold_angles(angles, mode, -math.pi).rho[1]) == math.pi


@settings(max_examples=100, deadline=None)
@given(regular_vertices, drive_angles)
def test_sign_follows_multiplier(vertex, rho0):
    assume(abs(rho0) > 1e-9)
    theta0, theta1, mode = vertex
    angles = deg(theta0, theta1)
    rho1 = fold_angles(angles, mode, rho0).rho[1]
    assert math.copysign(1.0, rho1) == math.copysign(1.0, rho0 * folding_multiplier(angles, mode))
