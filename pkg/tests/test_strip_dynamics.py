import math

import pytest

from foldfront.engine.cell_map import compose_cell
from foldfront.engine.enums import Propagation, StableState
from foldfront.engine.errors import DesignError, DomainError, UniformMap
from foldfront.engine.strip import (
    classify,
    count_transition_cells,
    is_autonomous,
    iterate,
    sigmoid_value,
    transition_width,
)
from foldfront.engine.strip_data import StripDesign, VertexSpec


class TestIterate:
    """Test propagation of a driven strip."""

    def test_orbit_shape(self, load_named_design):
        orbit = iterate(load_named_design("straight_quad"), 0.5, 3)
        assert orbit.cells == 3
        assert len(orbit.rho_t) == 4
        assert len(orbit.full_states) == 12
        assert orbit.rho_t[0] == 0.5
        assert orbit.full_states[4].rho[0] == pytest.approx(orbit.rho_t[1], abs=1e-15)

    def test_zero_cells(self, load_named_design):
        orbit = iterate(load_named_design("decaying_single"), 1.0, 0)
        assert orbit.rho_t == (1.0,)
        assert orbit.full_states == ()

    @pytest.mark.parametrize("name", ["decaying_single", "growing_pair", "curved_quad"])
    def test_flat_states_are_fixed_points(self, load_named_design, name):
        design = load_named_design(name)
        assert iterate(design, 0.0, 5).rho_t == (0.0,) * 6
        assert all(abs(r) == math.pi for r in iterate(design, math.pi, 5).rho_t)

    def test_decaying_front(self, load_named_design):
        rho = iterate(load_named_design("decaying_single"), 2.8, 12).rho_t
        assert all(a > b > 0 for a, b in zip(rho, rho[1:]))
        assert rho[-1] < 1e-4

    def test_growing_front(self, load_named_design):
        rho = iterate(load_named_design("growing_pair"), 0.05, 12).rho_t
        assert all(0 < a < b for a, b in zip(rho, rho[1:]))
        assert rho[-1] > math.pi - 1e-3

    def test_uniform_strip_keeps_its_angle(self, load_named_design):
        rho = iterate(load_named_design("uniform_pair"), 1.3, 6).rho_t
        assert rho == pytest.approx([1.3] * 7, abs=1e-12)

    def test_rejects_bad_input(self, load_named_design):
        design = load_named_design("decaying_single")
        with pytest.raises(DomainError):
            iterate(design, 3.5, 2)
        with pytest.raises(DomainError):
            iterate(design, 1.0, -1)

    def test_non_periodic_design_runs_out(self):
        spec = VertexSpec.from_degrees(148.75, 60, 1, 1)
        design = StripDesign((spec, spec), period=1, periodic=False)
        assert iterate(design, 1.0, 2).cells == 2
        with pytest.raises(DesignError):
            iterate(design, 1.0, 3)

    def test_cobweb_staircase(self, load_named_design):
        orbit = iterate(load_named_design("decaying_single"), 2.0, 3)
        points = orbit.cobweb()
        assert len(points) == 7
        assert points[0] == (2.0, 2.0)
        assert points[1] == (2.0, orbit.rho_t[1])
        assert points[-1] == (orbit.rho_t[-1], orbit.rho_t[-1])


class TestSigmoid:
    """Test the closed-form orbit against iteration."""

    @pytest.mark.parametrize("name", ["decaying_single", "growing_pair", "straight_quad", "curved_quad"])
    @pytest.mark.parametrize("rho0", [0.05, 1.0, 2.5, -1.7])
    def test_matches_iteration(self, load_named_design, name, rho0):
        design = load_named_design(name)
        p = compose_cell(design.cell(0)).p_eff
        orbit = iterate(design, rho0, 20)
        for t, rho in enumerate(orbit.rho_t):
            assert sigmoid_value(rho0, p, t) == pytest.approx(rho, abs=1e-9)

    def test_negative_multiplier_alternates(self):
        assert sigmoid_value(1.0, -2.0, 1) < 0
        assert sigmoid_value(1.0, -2.0, 2) > 0

    def test_developed_start_stays(self):
        assert sigmoid_value(0.0, 3.0, 4) == 0.0

    def test_far_cells_saturate(self):
        assert sigmoid_value(1.0, 4.0, 600) == math.pi
        assert sigmoid_value(-1.0, 4.0, 10_000) == -math.pi
        assert sigmoid_value(1.0, -4.0, 601) == -math.pi
        assert sigmoid_value(1.0, 0.25, 600) == 0.0

    def test_saturation_is_continuous(self):
        near = sigmoid_value(1.0, 4.0, 10)
        assert near == pytest.approx(math.pi, abs=1e-5)
        assert near < math.pi

    def test_rejects_bad_input(self):
        with pytest.raises(DomainError):
            sigmoid_value(math.pi, 2.0, 1)
        with pytest.raises(DomainError):
            sigmoid_value(1.0, 0.0, 1)
        with pytest.raises(DomainError):
            sigmoid_value(1.0, -2.0, 0.5)


class TestTransitionWidth:
    """Test the width of a folding front."""

    def test_decaying_single(self):
        assert transition_width(0.3473348) == pytest.approx(3.4851, abs=1e-3)

    def test_reciprocal_multipliers_share_width(self):
        assert transition_width(4.0) == pytest.approx(2.6585, abs=1e-4)
        assert transition_width(0.25) == pytest.approx(transition_width(4.0), rel=1e-12)
        assert transition_width(-4.0) == transition_width(4.0)

    def test_uniform_has_no_front(self):
        with pytest.raises(UniformMap):
            transition_width(1.0)
        with pytest.raises(UniformMap):
            transition_width(-1.0)

    def test_counted_cells(self, load_named_design):
        assert count_transition_cells(load_named_design("decaying_single")) == 4
        assert count_transition_cells(load_named_design("straight_quad")) == 3

    def test_counted_cells_for_uniform_strip(self, load_named_design):
        with pytest.raises(UniformMap):
            count_transition_cells(load_named_design("uniform_pair"))


class TestClassify:
    """Test classification of propagation behavior."""

    def test_decaying_single(self, load_named_design):
        report = classify(load_named_design("decaying_single").cell(0))
        assert report.kind is Propagation.DOMINO_LIKE
        assert report.attracting_state is StableState.DEVELOPED
        assert report.developed_slope == pytest.approx(0.3473348, rel=1e-5)
        assert report.flat_slope == pytest.approx(1 / 0.3473348, rel=1e-5)

    @pytest.mark.parametrize("name", ["growing_pair", "zigzag_asymmetric", "straight_quad", "curved_quad"])
    def test_growing_designs_fold_flat(self, load_named_design, name):
        report = classify(load_named_design(name).cell(0))
        assert report.kind is Propagation.DOMINO_LIKE
        assert report.attracting_state is StableState.FLAT_FOLDED

    def test_uniform(self, load_named_design):
        report = classify(load_named_design("uniform_pair").cell(0))
        assert report.kind is Propagation.UNIFORM
        assert report.attracting_state is StableState.NEUTRAL

    def test_degenerate(self, load_named_design):
        report = classify(load_named_design("straight_pass").cell(0))
        assert report.kind is Propagation.DEGENERATE
        assert report.p_eff is None

    def test_accepts_composed_map(self, load_named_design):
        cell = load_named_design("growing_pair").cell(0)
        assert classify(compose_cell(cell)) == classify(cell)


class TestAutonomy:
    """Test detection of strips whose cells all act alike."""

    def test_repeated_cells(self):
        a = VertexSpec.from_degrees(120, 120, 1, 1)
        b = VertexSpec.from_degrees(120, 60, -1, 3)
        assert is_autonomous(StripDesign((a, b, a, b), period=2, periodic=False))

    def test_different_cells(self):
        a = VertexSpec.from_degrees(120, 120, 1, 1)
        b = VertexSpec.from_degrees(120, 60, -1, 3)
        c = VertexSpec.from_degrees(100, 60, -1, 3)
        assert not is_autonomous(StripDesign((a, b, a, c), period=2, periodic=False))
