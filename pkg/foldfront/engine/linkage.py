"""
Rotation recursion around a degree-4 vertex.

Walking counterclockwise from crease 0, crease c^{i+1} is crease c^i rotated
by the sector angle θ^i about the face normal n^i, and the face normal
n^{i+1} is n^i rotated by the fold angle ρ^{i+1} about crease c^{i+1}
(ρ^4 = ρ^0). A consistent set of fold angles brings both vectors back to
their starting values after four steps.
"""

from collections.abc import Sequence

import numpy as np

from .angles import UNIT_TOL
from .errors import DomainError

X_AXIS = np.array([1.0, 0.0, 0.0])
Z_AXIS = np.array([0.0, 0.0, 1.0])


def rotation_matrix(angle: float, axis: Sequence[float] | np.ndarray) -> np.ndarray:
    """
    Right-handed rotation by angle about a unit axis (Rodrigues form).

    Args:
        angle: Rotation angle in radians
        axis: Unit rotation axis

    Returns:
        3x3 rotation matrix

    Raises:
        DomainError: If the axis is not a unit vector
    """
    v = np.asarray(axis, dtype=float)
    if abs(np.linalg.norm(v) - 1.0) > UNIT_TOL:
        raise DomainError(f"Rotation axis must be a unit vector, got {v.tolist()}")
    x, y, z = v
    cross = np.array([[0.0, -z, y], [z, 0.0, -x], [-y, x, 0.0]])
    c, s = np.cos(angle), np.sin(angle)
    return c * np.eye(3) + s * cross + (1.0 - c) * np.outer(v, v)


def walk_faces(
    sectors: Sequence[float],
    rho: Sequence[float],
    crease: np.ndarray = X_AXIS,
    normal: np.ndarray = Z_AXIS,
) -> tuple[np.ndarray, np.ndarray]:
    """
    Run the rotation recursion once around the vertex.

    Args:
        sectors: The four sector angles θ^0..θ^3
        rho: The four fold angles ρ^0..ρ^3
        crease: Starting crease direction c^0
        normal: Starting face normal n^0 (face between crease 0 and crease 1)

    Returns:
        (creases, normals), each of shape (5, 3); row 4 is the value after a
        full loop and equals row 0 when the fold angles close the vertex
    """
    creases = np.empty((5, 3))
    normals = np.empty((5, 3))
    creases[0] = crease
    normals[0] = normal
    for i in range(4):
        creases[i + 1] = rotation_matrix(sectors[i], normals[i]) @ creases[i]
        normals[i + 1] = rotation_matrix(rho[(i + 1) % 4], creases[i + 1]) @ normals[i]
    return creases, normals


def loop_gap(creases: np.ndarray, normals: np.ndarray) -> float:
    """‖c⁴ − c⁰‖ + ‖n⁴ − n⁰‖ for the output of walk_faces."""
    return float(np.linalg.norm(creases[4] - creases[0]) + np.linalg.norm(normals[4] - normals[0]))
