import pytest

from foldfront.engine.enums import FoldMode
from foldfront.engine.errors import DesignError, SingularVertex
from foldfront.engine.strip_data import UNIT_LENGTHS, StripDesign, VertexSpec


def spec(theta0, theta1, mode, i_out):
    return VertexSpec.from_degrees(theta0, theta1, mode, i_out)


class TestVertexSpec:
    """Test construction and validation of strip vertices."""

    def test_mode_is_coerced(self):
        v = spec(120, 60, -1, 1)
        assert v.mode is FoldMode.OPPOSITE

    @pytest.mark.parametrize("i_out", [0, 4, -1])
    def test_rejects_bad_output_crease(self, i_out):
        with pytest.raises(DesignError):
            spec(120, 60, -1, i_out)

    def test_singular_vertex_cannot_turn(self):
        with pytest.raises(SingularVertex):
            spec(85, 85, -1, 1)
        with pytest.raises(SingularVertex):
            spec(120, 60, 1, 3)

    def test_singular_vertex_may_pass_straight(self):
        v = spec(85, 85, -1, 2)
        assert v.passes_straight

    @pytest.mark.parametrize("i_out,expected", [(1, False), (2, True), (3, False)])
    def test_passes_straight(self, i_out, expected):
        assert spec(120, 60, -1, i_out).passes_straight is expected


class TestStripDesign:
    """Test periodicity, indexing and crease-length checks."""

    def test_periodic_indexing_wraps(self):
        a, b = spec(120, 120, 1, 1), spec(120, 60, -1, 3)
        design = StripDesign((a, b), period=2)
        assert design.spec_at(0) == a
        assert design.spec_at(5) == b
        assert design.cell(3) == (a, b)
        assert design.cell_count == 1

    def test_default_lengths_are_unit(self):
        design = StripDesign((spec(148.75, 60, 1, 1),), period=1)
        assert design.lengths_at(7) == UNIT_LENGTHS

    def test_stored_vertices_must_be_whole_periods(self):
        with pytest.raises(DesignError, match="multiple of period"):
            StripDesign((spec(120, 120, 1, 1),) * 3, period=2)

    def test_stored_periods_must_repeat(self):
        a, b = spec(120, 120, 1, 1), spec(120, 60, -1, 3)
        with pytest.raises(DesignError, match="differ"):
            StripDesign((a, b, b, a), period=2)

    def test_non_periodic_design_ends(self):
        a = spec(120, 120, 1, 1)
        design = StripDesign((a, a, a), period=2, periodic=False)
        assert design.cell_count == 1
        with pytest.raises(DesignError, match="only 3 vertices"):
            design.spec_at(3)

    def test_negative_index_rejected(self):
        design = StripDesign((spec(148.75, 60, 1, 1),), period=1)
        with pytest.raises(DesignError):
            design.spec_at(-1)

    @pytest.mark.parametrize("period", [0, -2, True, 1.5])
    def test_bad_period(self, period):
        with pytest.raises(DesignError):
            StripDesign((spec(148.75, 60, 1, 1),), period=period)

    def test_empty_design(self):
        with pytest.raises(DesignError):
            StripDesign((), period=1)

    def test_shared_crease_lengths_must_agree(self):
        a = spec(120, 120, 1, 1)
        b = spec(120, 60, -1, 3)
        lengths = ((1.0, 2.0, 1.0, 1.0), (2.0, 1.0, 1.0, 1.0))
        design = StripDesign((a, b), period=2, periodic=False, crease_lengths=lengths)
        assert design.lengths_at(1)[0] == 2.0

        bad = ((1.0, 2.0, 1.0, 1.0), (1.5, 1.0, 1.0, 1.0))
        with pytest.raises(DesignError, match="shared crease"):
            StripDesign((a, b), period=2, periodic=False, crease_lengths=bad)

    def test_periodic_wrap_checks_lengths(self):
        a = spec(120, 120, 1, 1)
        b = spec(120, 60, -1, 3)
        # b's output crease (index 3) feeds crease 0 of the next cell's a
        lengths = ((1.0, 2.0, 1.0, 1.0), (2.0, 1.0, 1.0, 3.0))
        with pytest.raises(DesignError, match="vertices\\[0\\]"):
            StripDesign((a, b), period=2, crease_lengths=lengths)

    def test_lengths_must_be_positive(self):
        with pytest.raises(DesignError, match="positive"):
            StripDesign(
                (spec(148.75, 60, 1, 1),), period=1, crease_lengths=((1.0, 1.0, 0.0, 1.0),)
            )

    def test_name_does_not_affect_equality(self):
        a = spec(148.75, 60, 1, 1)
        assert StripDesign((a,), period=1, name="x") == StripDesign((a,), period=1, name="y")
