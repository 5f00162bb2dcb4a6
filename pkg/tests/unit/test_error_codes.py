import pytest

from foldfront.engine.errors import (
    DegenerateMap,
    DesignError,
    DomainError,
    FoldfrontError,
    GeometryInfeasible,
    NonUniformPolyline,
    NoSolution,
    NotPeriodic,
    NotPlanar,
    SingularResult,
    SingularVertex,
    UniformMap,
    WrongConnectivity,
)


@pytest.mark.parametrize("error,code", [
    (DesignError, 2),
    (NonUniformPolyline, 2),
    (WrongConnectivity, 2),
    (NotPeriodic, 2),
    (DomainError, 3),
    (SingularVertex, 3),
    (DegenerateMap, 3),
    (UniformMap, 3),
    (NotPlanar, 3),
    (NoSolution, 4),
    (SingularResult, 4),
    (GeometryInfeasible, 4),
])
def test_exit_codes(error, code):
    assert issubclass(error, FoldfrontError)
    assert error("x").exit_code == code


def test_input_errors_are_value_errors():
    assert issubclass(DesignError, ValueError)
    assert issubclass(DomainError, ValueError)


def test_geometry_error_names_the_cell():
    e = GeometryInfeasible("too far apart", cell=3)
    assert e.cell == 3
    assert str(e) == "cell 3: too far apart"
    assert GeometryInfeasible("bad").cell is None
