"""
Exception hierarchy for strip kinematics and design.

Every error carries the process exit code the command line reports for it:
2 for bad input, 3 for kinematic failures, 4 for infeasible designs.
"""


class FoldfrontError(Exception):
    """Base class for all foldfront errors."""

    exit_code = 3


class DesignError(FoldfrontError, ValueError):
    """Malformed design file or inconsistent strip design."""

    exit_code = 2


class NonUniformPolyline(FoldfrontError, ValueError):
    """Target polyline segments differ in length."""

    exit_code = 2


class WrongConnectivity(FoldfrontError):
    """Panel insertion tested on vertices without opposite-crease connection."""

    exit_code = 2


class NotPeriodic(FoldfrontError):
    """Operation needs a periodic design."""

    exit_code = 2


class DomainError(FoldfrontError, ValueError):
    """Angle, argument or frame outside its valid domain."""

    exit_code = 3


class SingularVertex(FoldfrontError):
    """Closed-form kinematics evaluated at a singular vertex."""

    exit_code = 3


class DegenerateMap(FoldfrontError):
    """Composed cell map is the structural identity."""

    exit_code = 3


class UniformMap(FoldfrontError):
    """Transition width requested for a multiplier of magnitude one."""

    exit_code = 3


class NotPlanar(FoldfrontError):
    """Configuration does not lie in a plane."""

    exit_code = 3


class NoSolution(FoldfrontError):
    """No admissible sector angle realizes the requested ratio."""

    exit_code = 4


class SingularResult(FoldfrontError):
    """Only singular sector angles realize the requested ratio."""

    exit_code = 4


class GeometryInfeasible(FoldfrontError):
    """Target polyline cannot be realized by the four-point construction."""

    exit_code = 4

    def __init__(self, message: str, cell: int | None = None):
        self.cell = cell
        if cell is not None:
            message = f"cell {cell}: {message}"
        super().__init__(message)
