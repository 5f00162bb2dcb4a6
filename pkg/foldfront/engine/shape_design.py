"""
Deployed shape of periodic strips and synthesis of strips along a polyline.

A periodic strip that is planar in both flat states turns by a fixed angle
per cell, so its centerline is an arc whose curvature differs between the
developed and the flat-folded state. The inverse problem places four crease
points per polyline segment and picks sector angles that keep every
adjacent-crease vertex at the same A/B ratio, which keeps the folding
multiplier (and with it the propagation behavior) of a template strip.
"""

import math
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from .angles import ARCCOS_TOL, Radians, clamp_unit, fmt_angle, sgn, wrap_angle
from .embedding import propagate
from .enums import FoldMode
from .errors import (
    DesignError,
    DomainError,
    GeometryInfeasible,
    NonUniformPolyline,
    NoSolution,
    NotPeriodic,
    SingularResult,
)
from .logger import get_logger
from .strip_data import StripDesign, VertexSpec
from .vertex import SectorAngles, ab_coefficients, as_mode, folding_multiplier, is_singular

logger = get_logger(__name__)

# Segments of a target polyline must agree in length to this relative tolerance.
SEGMENT_RTOL = 1e-6
RATIO_TOL = 1e-10


@dataclass(frozen=True)
class TurningAngles:
    """Turning per cell of the centerline in the two flat states."""
    phi_dev: Radians
    phi_flat: Radians


@dataclass(frozen=True, eq=False)
class PolylinePlan:
    """Crease-point layout along a target polyline."""
    points: np.ndarray
    segment_length: float
    crease_length: float
    phi_star: Radians
    phi0: Radians
    phi: np.ndarray
    psi: np.ndarray
    psi_bar: np.ndarray
    aux_a: np.ndarray
    centers: np.ndarray
    entry_point: np.ndarray
    exit_point: np.ndarray
    mirrored: bool = False

    @property
    def cell_count(self) -> int:
        return len(self.points) - 1

    def chain(self) -> np.ndarray:
        """Entry point, the 4T crease points, exit point."""
        return np.vstack([self.entry_point, self.centers, self.exit_point])


def turning_angles(design: StripDesign) -> TurningAngles:
    """
    Turning per cell of a periodic strip in its developed and flat states.

    Args:
        design: Periodic strip design

    Returns:
        TurningAngles with both values reduced into (-π, π]

    Raises:
        NotPeriodic: If the design is not periodic
    """
    if not design.periodic:
        raise NotPeriodic("turning angles are only defined for periodic designs")

    phi_dev = 0.0
    phi_flat = 0.0
    offset = 0
    for spec in design.cell(0):
        theta = spec.angles.as_tuple()
        k = spec.i_out
        phi_dev += math.pi + sum(theta[:k])
        # faces alternate orientation in the flat-folded state
        phi_flat += math.pi + sum(
            (-1) ** ((i + offset) % 2) * theta[i - 1] for i in range(1, k + 1)
        )
        offset += k - 1
    return TurningAngles(wrap_angle(phi_dev), wrap_angle(phi_flat))


def _make_angles(which: int, fixed: Radians, free: Radians) -> SectorAngles:
    return SectorAngles(fixed, free) if which == 0 else SectorAngles(free, fixed)


def solve_sector_for_ratio(
    theta_fixed: Radians,
    which: int,
    mode: FoldMode | int,
    ratio: float,
    branch: int | None = None,
) -> SectorAngles:
    """
    Complete a vertex so that its A/B ratio equals a target.

    Solves cosθ0·cosθ1 + σ = r·sinθ0·sinθ1 for the free sector angle.

    Args:
        theta_fixed: The known sector angle
        which: 0 if theta_fixed is θ0, 1 if it is θ1
        mode: Fold mode σ
        ratio: Target A/B
        branch: Required sign of the folding multiplier, if any

    Returns:
        SectorAngles of the chosen root: nonsingular, matching branch, smallest

    Raises:
        NoSolution: If no root lies in (0, π) or none matches the branch
        SingularResult: If every root makes the vertex singular
    """
    if which not in (0, 1):
        raise DomainError(f"which must be 0 or 1, got {which!r}")
    if not 0.0 < theta_fixed < math.pi:
        raise DomainError(f"fixed sector angle must lie in (0, π), got {theta_fixed!r}")
    mode = as_mode(mode)
    sigma = int(mode)

    alpha = math.cos(theta_fixed)
    beta = -ratio * math.sin(theta_fixed)
    amplitude = math.hypot(alpha, beta)
    target = -sigma / amplitude
    if abs(target) > 1.0 + ARCCOS_TOL:
        raise NoSolution(
            f"no sector angle pairs with {fmt_angle(theta_fixed)}° for A/B = {ratio:.9g}"
        )
    delta = math.atan2(beta, alpha)
    gamma = math.acos(clamp_unit(target))

    roots = []
    for x in (wrap_angle(delta + gamma), wrap_angle(delta - gamma)):
        if not 0.0 < x < math.pi or any(abs(x - r) < 1e-12 for r in roots):
            continue
        coeffs = ab_coefficients(_make_angles(which, theta_fixed, x), mode)
        if abs(coeffs.ratio - ratio) < RATIO_TOL * max(1.0, abs(ratio)):
            roots.append(x)
    if not roots:
        raise NoSolution(f"no root in (0, π) for A/B = {ratio:.9g}")

    regular = [x for x in roots if not is_singular(_make_angles(which, theta_fixed, x), mode)]
    if not regular:
        raise SingularResult(f"only singular roots for A/B = {ratio:.9g}")

    if branch is not None:
        regular = [
            x for x in regular
            if sgn(folding_multiplier(_make_angles(which, theta_fixed, x), mode)) == branch
        ]
        if not regular:
            raise NoSolution(f"no root with multiplier sign {branch:+d} for A/B = {ratio:.9g}")

    return _make_angles(which, theta_fixed, min(regular))


def _rotate(angle: float, v: np.ndarray) -> np.ndarray:
    c, s = math.cos(angle), math.sin(angle)
    return np.array([c * v[0] - s * v[1], s * v[0] + c * v[1]])


def _signed_angle(u: np.ndarray, v: np.ndarray) -> float:
    return math.atan2(u[0] * v[1] - u[1] * v[0], u[0] * v[0] + u[1] * v[1])


def map_polyline(
    points: Sequence[Sequence[float]] | np.ndarray,
    l: float,
    phi_star: Radians,
    phi0: Radians,
    mirrored: bool = False,
) -> PolylinePlan:
    """
    Lay out four crease points per segment of a uniform planar polyline.

    Each polyline point p_t is crossed by a crease of length l at angle φ_t to
    the outgoing segment, φ_t = φ* + Δφ_t/2 with Δφ_t the turn at p_t. The
    two middle points of each segment are placed symmetrically about the
    segment midpoint so that all four creases have length l.

    Args:
        points: (T + 1) x 2 polyline points with equal segment lengths L
        l: Crease length, at most L/3
        phi_star: Base crossing angle
        phi0: Crossing angle at the first point
        mirrored: Reverse the turn of the middle creases (Miura-like strip)

    Returns:
        PolylinePlan

    Raises:
        DesignError: If fewer than two points are given
        NonUniformPolyline: If segment lengths differ
        GeometryInfeasible: If a segment cannot host the four creases
    """
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 2 or pts.shape[1] != 2 or len(pts) < 2:
        raise DesignError(f"polyline needs at least two 2D points, got shape {pts.shape}")
    if not np.all(np.isfinite(pts)):
        raise DesignError("polyline points must be finite")

    segments = np.diff(pts, axis=0)
    seg_lengths = np.linalg.norm(segments, axis=1)
    L = float(seg_lengths[0])
    if L <= 0.0:
        raise NonUniformPolyline("polyline has a zero-length segment")
    spread = np.abs(seg_lengths - L)
    if np.any(spread > SEGMENT_RTOL * L):
        bad = int(np.argmax(spread))
        raise NonUniformPolyline(
            f"segment {bad} has length {seg_lengths[bad]:.9g}, expected {L:.9g}"
        )
    if not l > 0.0:
        raise DomainError(f"crease length must be positive, got {l!r}")
    if l > L / 3.0 + 1e-12 * L:
        raise GeometryInfeasible(f"crease length {l:.9g} exceeds L/3 = {L / 3.0:.9g}")

    T = len(segments)
    directions = segments / seg_lengths[:, None]
    # last point continues straight
    directions = np.vstack([directions, directions[-1]])

    phi = np.empty(T + 1)
    phi[0] = phi0
    for t in range(1, T + 1):
        phi[t] = phi_star + 0.5 * _signed_angle(directions[t - 1], directions[t])

    half = 0.5 * l
    psi = np.empty(T)
    psi_bar = np.empty(T)
    aux_a = np.empty(T)
    centers = np.empty((4 * T, 2))
    for t in range(T):
        o0 = pts[t] + half * _rotate(phi[t], directions[t])
        o3 = pts[t + 1] - half * _rotate(phi[t + 1], directions[t + 1])
        chord = o3 - o0
        d = float(np.linalg.norm(chord))
        if not l - 1e-12 <= d <= 3.0 * l + 1e-12:
            raise GeometryInfeasible(f"crease points {d:.9g} apart, need [{l:.9g}, {3 * l:.9g}]", cell=t)

        cos_psi = (3.0 * l * l + d * d) / (4.0 * l * d)
        if abs(cos_psi) > 1.0 + ARCCOS_TOL:
            raise GeometryInfeasible(f"psi arccos argument {cos_psi:.9g} out of range", cell=t)
        angle_psi = math.acos(clamp_unit(cos_psi))

        a = math.sqrt(max(l * l + d * d - 2.0 * l * d * math.cos(angle_psi), 0.0))
        if a <= 0.0:
            raise GeometryInfeasible("degenerate middle crease", cell=t)
        try:
            cos_alpha = clamp_unit(a / (2.0 * l), what="alpha arccos argument")
            cos_beta = clamp_unit((a * a + d * d - l * l) / (2.0 * a * d), what="beta arccos argument")
        except DomainError as e:
            raise GeometryInfeasible(str(e), cell=t) from e
        sin_alpha = math.sqrt(1.0 - cos_alpha * cos_alpha)
        sin_beta = math.sqrt(1.0 - cos_beta * cos_beta)
        angle_psi_bar = math.acos(clamp_unit(cos_alpha * cos_beta + sin_alpha * sin_beta))

        if mirrored:
            angle_psi, angle_psi_bar = -angle_psi, -angle_psi_bar

        u = chord / d
        centers[4 * t] = o0
        centers[4 * t + 1] = o0 + l * _rotate(angle_psi, u)
        centers[4 * t + 2] = o3 + l * _rotate(angle_psi_bar, -u)
        centers[4 * t + 3] = o3
        psi[t], psi_bar[t], aux_a[t] = angle_psi, angle_psi_bar, a
        logger.debug(f"cell {t}: d={d:.6g} psi={math.degrees(angle_psi):.6g}°")

    entry = pts[0] - half * _rotate(phi[0], directions[0])
    exit_ = pts[T] + half * _rotate(phi[T], directions[T])
    return PolylinePlan(
        points=pts,
        segment_length=L,
        crease_length=float(l),
        phi_star=float(phi_star),
        phi0=float(phi0),
        phi=phi,
        psi=psi,
        psi_bar=psi_bar,
        aux_a=aux_a,
        centers=centers,
        entry_point=entry,
        exit_point=exit_,
        mirrored=mirrored,
    )


def interior_angles(plan: PolylinePlan) -> np.ndarray:
    """Counterclockwise angle at each crease point from the incoming to the outgoing crease."""
    chain = plan.chain()
    incoming = chain[:-2] - chain[1:-1]
    outgoing = chain[2:] - chain[1:-1]
    start = np.arctan2(incoming[:, 1], incoming[:, 0])
    end = np.arctan2(outgoing[:, 1], outgoing[:, 0])
    return np.mod(end - start, 2.0 * math.pi)


def polyline_to_strip(
    plan: PolylinePlan, template: StripDesign, ratio: float | None = None
) -> StripDesign:
    """
    Assign sector angles to every crease point of a plan.

    Template vertices fix the output crease and fold mode at each of the four
    positions of a cell. A vertex turning onto an adjacent crease takes one
    sector angle from the plan and solves the other for the common A/B ratio;
    a vertex passing straight through splits its angle evenly.

    Args:
        plan: Output of map_polyline
        template: Design with period 4 supplying i_out and σ per position
        ratio: A/B to preserve; defaults to that of the first adjacent-crease
            template vertex

    Returns:
        Non-periodic StripDesign with period 4 and all crease lengths l

    Raises:
        GeometryInfeasible: If a plan angle cannot be a sector angle
        NoSolution, SingularResult: If a vertex cannot meet the ratio
    """
    if template.period != 4:
        raise DesignError(f"template must have period 4, got {template.period}")
    cell = template.cell(0)
    if ratio is None:
        turning = [spec for spec in cell if not spec.passes_straight]
        if turning:
            ratio = ab_coefficients(turning[0].angles, turning[0].mode).ratio

    vertices = []
    for n, interior in enumerate(interior_angles(plan)):
        t = n // 4
        ref = cell[n % 4]
        interior = float(interior)
        try:
            if ref.i_out == 1:
                if not 0.0 < interior < math.pi:
                    raise GeometryInfeasible(f"vertex {n} needs θ0 = {fmt_angle(interior)}°", cell=t)
                branch = sgn(folding_multiplier(ref.angles, ref.mode))
                angles = solve_sector_for_ratio(interior, 0, ref.mode, ratio, branch=branch)
            elif ref.i_out == 3:
                theta1 = interior - math.pi
                if not 0.0 < theta1 < math.pi:
                    raise GeometryInfeasible(f"vertex {n} needs θ1 = {fmt_angle(theta1)}°", cell=t)
                branch = sgn(folding_multiplier(ref.angles, ref.mode))
                angles = solve_sector_for_ratio(theta1, 1, ref.mode, ratio, branch=branch)
            else:
                angles = SectorAngles(0.5 * interior, 0.5 * interior)
                if is_singular(angles, ref.mode):
                    raise SingularResult(f"vertex {n} is singular after the even split")
        except (NoSolution, SingularResult) as e:
            raise type(e)(f"cell {t}, vertex {n}: {e}") from e
        except DomainError as e:
            raise GeometryInfeasible(f"vertex {n}: {e}", cell=t) from e
        vertices.append(VertexSpec(angles, ref.mode, ref.i_out))

    l = plan.crease_length
    lengths = tuple((l, l, l, l) for _ in vertices)
    logger.info(f"Synthesized {len(vertices)} vertices over {plan.cell_count} cells")
    return StripDesign(
        tuple(vertices), period=4, periodic=False, crease_lengths=lengths, name="polyline"
    )


def rigid_alignment_deviation(target: np.ndarray, points: np.ndarray) -> float:
    """
    Largest point distance after the best proper rigid motion of points onto target.

    Uses the SVD solution of the orthogonal Procrustes problem with the
    reflection excluded.
    """
    target = np.asarray(target, dtype=float)
    points = np.asarray(points, dtype=float)
    if target.shape != points.shape:
        raise DomainError(f"shape mismatch: {target.shape} vs {points.shape}")
    target_mean = target.mean(axis=0)
    points_mean = points.mean(axis=0)
    p = points - points_mean
    q = target - target_mean
    u, _, vt = np.linalg.svd(p.T @ q)
    correction = np.eye(p.shape[1])
    correction[-1, -1] = np.sign(np.linalg.det(vt.T @ u.T)) or 1.0
    rotation = vt.T @ correction @ u.T
    aligned = p @ rotation.T + target_mean
    return float(np.max(np.linalg.norm(aligned - target, axis=1)))


def verify_round_trip(plan: PolylinePlan, design: StripDesign) -> float:
    """
    Rebuild the developed strip from a design and compare it with the plan.

    Returns:
        Largest deviation of a crease point after rigid alignment
    """
    config = propagate(design, 0.0)
    rebuilt = config.centers()[:, :2]
    if len(rebuilt) != len(plan.centers):
        raise DesignError(
            f"design has {len(rebuilt)} vertices, plan has {len(plan.centers)} crease points"
        )
    return rigid_alignment_deviation(plan.centers, rebuilt)
