"""
Closed-form kinematics of a developable, flat-foldable degree-4 vertex.

Sector angles run (θ0, θ1, π − θ0, π − θ1) counterclockwise. Opposite creases
fold by equal magnitudes: |ρ2| = |ρ0| and |ρ3| = |ρ1|. The fold mode σ says
whether creases 0 and 2 carry the same mountain/valley assignment (σ = +1)
or opposite ones (σ = −1). Positive fold angles are valleys.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import bisect

from .angles import ARCCOS_TOL, SINGULAR_TOL, Radians, clamp_unit, sgn, to_radians
from .enums import FoldMode
from .errors import DomainError, SingularVertex
from .linkage import X_AXIS, Z_AXIS, loop_gap, rotation_matrix, walk_faces
from .logger import format_angle_for_logging, get_logger

logger = get_logger(__name__)

# Multipliers beyond this (or below its inverse) mean a nearly singular vertex.
NEAR_SINGULAR_MULTIPLIER = 1e3


@dataclass(frozen=True)
class SectorAngles:
    """Independent sector angles θ0 and θ1 in radians."""
    theta0: Radians
    theta1: Radians

    def __post_init__(self):
        for name in ("theta0", "theta1"):
            value = getattr(self, name)
            if not math.isfinite(value) or not 0.0 < value < math.pi:
                raise DomainError(f"{name} must lie strictly between 0 and π, got {value!r}")

    @classmethod
    def from_degrees(cls, theta0: float | str, theta1: float | str) -> "SectorAngles":
        return cls(to_radians(theta0), to_radians(theta1))

    @property
    def theta2(self) -> Radians:
        return math.pi - self.theta0

    @property
    def theta3(self) -> Radians:
        return math.pi - self.theta1

    def as_tuple(self) -> tuple[Radians, Radians, Radians, Radians]:
        return (self.theta0, self.theta1, self.theta2, self.theta3)


@dataclass(frozen=True)
class VertexState:
    """Fold angles ρ0..ρ3 of one vertex, each in [-π, π]."""
    rho: tuple[Radians, Radians, Radians, Radians]

    def __post_init__(self):
        if len(self.rho) != 4:
            raise DomainError(f"A vertex has four fold angles, got {len(self.rho)}")
        for i, value in enumerate(self.rho):
            if not math.isfinite(value) or abs(value) > math.pi:
                raise DomainError(f"rho[{i}] must lie in [-π, π], got {value!r}")


@dataclass(frozen=True)
class AbCoefficients:
    """A = cosθ0·cosθ1 + σ and B = sinθ0·sinθ1."""
    a: float
    b: float

    @property
    def ratio(self) -> float:
        return self.a / self.b


def as_mode(mode: FoldMode | int) -> FoldMode:
    try:
        return FoldMode(mode)
    except ValueError as e:
        raise DomainError(f"Fold mode must be +1 or -1, got {mode!r}") from e


def is_singular(angles: SectorAngles, mode: FoldMode | int) -> bool:
    """
    Check whether the vertex sits on a bifurcation of its two folding modes.

    Args:
        angles: Sector angles
        mode: Fold mode σ

    Returns:
        True for θ0 = θ1 with σ = -1, or θ0 + θ1 = π with σ = +1
    """
    if as_mode(mode) is FoldMode.OPPOSITE:
        return abs(angles.theta0 - angles.theta1) < SINGULAR_TOL
    return abs(angles.theta0 + angles.theta1 - math.pi) < SINGULAR_TOL


def ab_coefficients(angles: SectorAngles, mode: FoldMode | int) -> AbCoefficients:
    sigma = int(as_mode(mode))
    return AbCoefficients(
        a=math.cos(angles.theta0) * math.cos(angles.theta1) + sigma,
        b=math.sin(angles.theta0) * math.sin(angles.theta1),
    )


def _branch(angles: SectorAngles, mode: FoldMode) -> int:
    # sign of ρ1 relative to ρ0
    return -sgn(math.cos(angles.theta0) + int(mode) * math.cos(angles.theta1))


def _multiplier_squared(coeffs: AbCoefficients) -> float:
    q = (coeffs.a - coeffs.b) / (coeffs.a + coeffs.b)
    if q < 0.0:
        if q < -ARCCOS_TOL:
            raise DomainError(f"(A - B)/(A + B) is negative: {q!r}")
        q = 0.0
    return q


def _require_regular(angles: SectorAngles, mode: FoldMode) -> None:
    if is_singular(angles, mode):
        raise SingularVertex(
            f"vertex ({format_angle_for_logging(angles.theta0)}, "
            f"{format_angle_for_logging(angles.theta1)}, σ={int(mode)}) is singular"
        )


def image_magnitude(magnitude: Radians, multiplier: float) -> Radians:
    """
    Map |ρ| through tan(ρ'/2) = |p|·tan(ρ/2).

    Args:
        magnitude: |ρ| in [0, π]
        multiplier: |p| > 0

    Returns:
        |ρ'| in [0, π]; π maps to π exactly
    """
    if magnitude == math.pi:
        return math.pi
    half = 0.5 * magnitude
    return 2.0 * math.atan2(multiplier * math.sin(half), math.cos(half))


def fold_angles(angles: SectorAngles, mode: FoldMode | int, rho0: Radians) -> VertexState:
    """
    All four fold angles of a vertex driven at crease 0.

    ρ1 = -sgn(ρ0)·sgn(cosθ0 + σcosθ1)·arccos((A cosρ0 + B)/(B cosρ0 + A)),
    ρ2 = σρ0, ρ3 = -σρ1. The magnitude is evaluated through the equivalent
    half-angle form so that it stays accurate next to both flat states.

    Args:
        angles: Sector angles
        mode: Fold mode σ
        rho0: Fold angle of crease 0 in [-π, π]

    Returns:
        VertexState with rho = (ρ0, ρ1, ρ2, ρ3)

    Raises:
        SingularVertex: If the vertex is singular
        DomainError: If |ρ0| > π or the arccos argument leaves [-1, 1]
    """
    mode = as_mode(mode)
    rho0 = float(rho0)
    if not math.isfinite(rho0) or abs(rho0) > math.pi:
        raise DomainError(f"rho0 must lie in [-π, π], got {rho0!r}")
    _require_regular(angles, mode)

    coeffs = ab_coefficients(angles, mode)
    c = math.cos(rho0)
    clamp_unit((coeffs.a * c + coeffs.b) / (coeffs.b * c + coeffs.a), what="adjacent fold cosine")

    multiplier = math.sqrt(_multiplier_squared(coeffs))
    rho1 = sgn(rho0) * _branch(angles, mode) * image_magnitude(abs(rho0), multiplier)
    sigma = int(mode)
    return VertexState((rho0, rho1, sigma * rho0, -sigma * rho1))


def folding_multiplier(angles: SectorAngles, mode: FoldMode | int) -> float:
    """
    Signed folding multiplier p = dρ1/dρ0 at the developed state.

    Args:
        angles: Sector angles
        mode: Fold mode σ

    Returns:
        p = -sgn(cosθ0 + σcosθ1)·√((A - B)/(A + B))

    Raises:
        SingularVertex: If the vertex is singular
        DomainError: If (A - B)/(A + B) is negative
    """
    mode = as_mode(mode)
    _require_regular(angles, mode)
    p = _branch(angles, mode) * math.sqrt(_multiplier_squared(ab_coefficients(angles, mode)))
    if not 1.0 / NEAR_SINGULAR_MULTIPLIER < abs(p) < NEAR_SINGULAR_MULTIPLIER:
        logger.warning(
            f"Nearly singular vertex ({format_angle_for_logging(angles.theta0)}, "
            f"{format_angle_for_logging(angles.theta1)}, σ={int(mode)}): p = {p:.3g}"
        )
    return p


def flat_multiplier(angles: SectorAngles, mode: FoldMode | int) -> float:
    """Slope dρ1/dρ0 at the flat-folded state, the reciprocal of p."""
    return 1.0 / folding_multiplier(angles, mode)


def closure_residual(angles: SectorAngles, state: VertexState) -> float:
    """Loop-closure error of a state walked from the seed c⁰ = +x, n⁰ = +z."""
    creases, normals = walk_faces(angles.as_tuple(), state.rho)
    return loop_gap(creases, normals)


def _closure_gap(angles: SectorAngles, rho0: Radians):
    theta0, theta1, theta2, theta3 = angles.as_tuple()
    # crease 3 only depends on ρ0 when walking backwards from crease 0
    n3 = rotation_matrix(-rho0, X_AXIS) @ Z_AXIS
    c3 = rotation_matrix(-theta3, n3) @ X_AXIS
    c1 = rotation_matrix(theta0, Z_AXIS) @ X_AXIS
    target = math.cos(theta2)

    def gap(rho1: float) -> float:
        n1 = rotation_matrix(rho1, c1) @ Z_AXIS
        c2 = rotation_matrix(theta1, n1) @ c1
        return float(c2 @ c3) - target

    return gap


def oracle_adjacent_angle(
    angles: SectorAngles, mode: FoldMode | int, rho0: Radians, xtol: float = 1e-14
) -> Radians:
    """
    Solve for ρ1 by bisection on the loop-closure condition.

    Crease 2 must sit at angle θ2 from crease 3. Of the two fold angles that
    achieve it, the σ = +1 branch has |ρ1| < |ρ0| and the σ = -1 branch has
    |ρ1| > |ρ0|.

    Args:
        angles: Sector angles
        mode: Fold mode σ
        rho0: Fold angle of crease 0, |ρ0| < π
        xtol: Bisection tolerance

    Returns:
        ρ1 for the requested mode

    Raises:
        SingularVertex: If the vertex is singular
        DomainError: If |ρ0| >= π or no bracket is found
    """
    mode = as_mode(mode)
    _require_regular(angles, mode)
    if not abs(rho0) < math.pi:
        raise DomainError(f"Oracle needs |rho0| < π, got {rho0!r}")
    if rho0 == 0.0:
        return 0.0

    gap = _closure_gap(angles, rho0)
    m = abs(rho0)
    if mode is FoldMode.SAME:
        arcs = [(0.0, m), (-m, 0.0)]
    else:
        arcs = [(m, math.pi), (-math.pi, -m)]

    for lo, hi in arcs:
        if gap(lo) * gap(hi) < 0.0:
            return bisect(gap, lo, hi, xtol=xtol, maxiter=200)
    raise DomainError(f"No closure bracket found for rho0 = {rho0!r}")


def relation_curve(
    angles: SectorAngles, mode: FoldMode | int, samples: int = 181
) -> list[tuple[Radians, Radians, Radians]]:
    """
    Sample the adjacent fold-angle relation over ρ0 ∈ [-π, π].

    Returns:
        (ρ0, ρ1, ρ3) triples
    """
    if samples < 2:
        raise DomainError(f"Need at least 2 samples, got {samples}")
    rows = []
    for rho0 in np.linspace(-math.pi, math.pi, samples):
        state = fold_angles(angles, mode, float(rho0))
        rows.append((state.rho[0], state.rho[1], state.rho[3]))
    return rows
