"""
Rigid 3D reconstruction of a folded strip.

Each vertex is placed from a seed (origin, crease 0 direction, normal of
face 0) by walking the rotation recursion around it. The next vertex sits
at the far end of the output crease, looking back along it, and shares the
face that precedes the output crease.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .angles import UNIT_TOL, Radians, wrap_angle
from .errors import DomainError, NotPlanar
from .linkage import X_AXIS, Z_AXIS, loop_gap, walk_faces
from .logger import get_logger
from .strip_data import Lengths, StripDesign
from .vertex import SectorAngles, VertexState, fold_angles

logger = get_logger(__name__)

PLANAR_TOL = 1e-8


@dataclass(frozen=True, eq=False)
class Seed:
    """Placement of a vertex: origin, direction of crease 0, normal of face 0."""
    origin: np.ndarray
    crease: np.ndarray
    normal: np.ndarray

    def __post_init__(self):
        for name in ("origin", "crease", "normal"):
            value = np.asarray(getattr(self, name), dtype=float)
            if value.shape != (3,):
                raise DomainError(f"seed {name} must be a 3-vector, got shape {value.shape}")
            object.__setattr__(self, name, value)
        for name in ("crease", "normal"):
            if abs(np.linalg.norm(getattr(self, name)) - 1.0) > UNIT_TOL:
                raise DomainError(f"seed {name} must be a unit vector")
        if abs(float(self.crease @ self.normal)) > UNIT_TOL:
            raise DomainError("seed crease and normal must be orthogonal")


CANONICAL_SEED = Seed(np.zeros(3), X_AXIS, Z_AXIS)


@dataclass(frozen=True, eq=False)
class Pose:
    """Placed vertex: origin, unit crease directions c⁰..c³, face normals n⁰..n³."""
    origin: np.ndarray
    creases: np.ndarray
    normals: np.ndarray
    closure_error: float

    def tip(self, i: int, length: float) -> np.ndarray:
        return self.origin + length * self.creases[i]


@dataclass(frozen=True, eq=False)
class StripConfiguration:
    design: StripDesign
    states: tuple[VertexState, ...]
    poses: tuple[Pose, ...]
    lengths: tuple[Lengths, ...]

    @property
    def vertex_count(self) -> int:
        return len(self.poses)

    def centers(self) -> np.ndarray:
        """Vertex positions o_0..o_{M-1}, shape (M, 3)."""
        return np.array([pose.origin for pose in self.poses])

    def exit_point(self) -> np.ndarray:
        """Far end o_M of the last output crease."""
        last = self.vertex_count - 1
        k = self.design.spec_at(last).i_out
        return self.poses[last].tip(k, self.lengths[last][k])


@dataclass(frozen=True, eq=False)
class Mesh:
    points: np.ndarray
    faces: np.ndarray = field(repr=False)


def vertex_poses(angles: SectorAngles, state: VertexState, seed: Seed = CANONICAL_SEED) -> Pose:
    """
    Place one vertex.

    Args:
        angles: Sector angles
        state: Fold angles of the vertex
        seed: Origin, crease 0 direction and face 0 normal

    Returns:
        Pose with crease directions, face normals and the loop-closure error
    """
    creases, normals = walk_faces(angles.as_tuple(), state.rho, seed.crease, seed.normal)
    return Pose(seed.origin.copy(), creases[:4], normals[:4], loop_gap(creases, normals))


def propagate(
    design: StripDesign,
    rho00: Radians,
    seed: Seed = CANONICAL_SEED,
    cells: int | None = None,
) -> StripConfiguration:
    """
    Fold a strip from crease 0 of vertex 0 and place every vertex.

    Args:
        design: Strip design
        rho00: Driving fold angle
        seed: Placement of vertex 0
        cells: Number of cells to build; defaults to the stored vertices

    Returns:
        StripConfiguration of the folded strip
    """
    count = design.vertex_count if cells is None else cells * design.period
    if count < 1:
        raise DomainError(f"need at least one vertex, got {count}")

    states, poses, lengths = [], [], []
    rho = float(rho00)
    for n in range(count):
        spec = design.spec_at(n)
        row = design.lengths_at(n)
        state = fold_angles(spec.angles, spec.mode, rho)
        pose = vertex_poses(spec.angles, state, seed)
        states.append(state)
        poses.append(pose)
        lengths.append(row)

        k = spec.i_out
        seed = Seed(pose.tip(k, row[k]), -pose.creases[k], pose.normals[k - 1])
        rho = state.rho[k]

    logger.debug(f"Placed {count} vertices at rho0={rho00:.6g}")
    return StripConfiguration(design, tuple(states), tuple(poses), tuple(lengths))


def build_mesh(config: StripConfiguration) -> Mesh:
    """
    Triangulate the strip: one triangle per sector of every vertex.

    Returns:
        Mesh with 5 points and 4 faces per vertex, counterclockwise about the
        face normal
    """
    points, faces = [], []
    for pose, row in zip(config.poses, config.lengths):
        base = len(points)
        points.append(pose.origin)
        for i in range(4):
            points.append(pose.tip(i, row[i]))
        for i in range(4):
            faces.append((base, base + 1 + i, base + 1 + (i + 1) % 4))
    return Mesh(np.array(points), np.array(faces, dtype=int))


def planarity_deviation(config: StripConfiguration) -> float:
    """Largest distance of a mesh point from the plane of face 0 of vertex 0."""
    first = config.poses[0]
    points = build_mesh(config).points
    return float(np.max(np.abs((points - first.origin) @ first.normals[0])))


def measure_turning(config: StripConfiguration) -> list[Radians]:
    """
    Signed turning per cell of a planar configuration.

    Each cell is a rigid copy of the previous one, so the centerline through
    o_0, o_N, o_2N, ... turns by the rotation between consecutive cells. That
    rotation is read from the crease-0 direction at the start of each cell,
    which stays defined when a flat-folded cell closes on itself, and is
    measured about the normal of face 3 of vertex 0.

    Returns:
        One angle in (-π, π] per placed cell

    Raises:
        NotPlanar: If the configuration leaves the plane
        DomainError: If no whole cell is placed
    """
    total = sum(row[config.design.spec_at(n).i_out] for n, row in enumerate(config.lengths))
    deviation = planarity_deviation(config)
    if deviation > PLANAR_TOL * max(1.0, total):
        raise NotPlanar(f"configuration deviates from its plane by {deviation:.3g}")

    period = config.design.period
    cells = config.vertex_count // period
    if cells < 1:
        raise DomainError("turning needs at least one whole cell")

    frames = [config.poses[period * t].creases[0] for t in range(cells)]
    if config.vertex_count > cells * period:
        frames.append(config.poses[cells * period].creases[0])
    else:
        last = config.vertex_count - 1
        frames.append(-config.poses[last].creases[config.design.spec_at(last).i_out])
    reference = config.poses[0].normals[3]

    turning = []
    for before, after in zip(frames, frames[1:]):
        angle = math.atan2(float(reference @ np.cross(before, after)), float(before @ after))
        turning.append(wrap_angle(angle))
    return turning


def junction_dihedrals(config: StripConfiguration) -> list[Radians]:
    """
    Signed dihedral across each crease shared by vertices n and n + 1.

    Measured between the face of vertex n before the shared crease and the
    last face of vertex n + 1, so it agrees with both vertices' fold angles
    only if the placements are mutually consistent.
    """
    values = []
    for n in range(config.vertex_count - 1):
        k = config.design.spec_at(n).i_out
        axis = config.poses[n].creases[k]
        before = config.poses[n].normals[k - 1]
        after = config.poses[n + 1].normals[3]
        values.append(math.atan2(float(np.cross(before, after) @ axis), float(before @ after)))
    return values
