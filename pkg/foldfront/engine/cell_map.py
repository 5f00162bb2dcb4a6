"""
Composition of the per-vertex maps of one periodic cell.

In cosine form each vertex acts as the fractional-linear map
cos ρ -> (A cos ρ + B)/(B cos ρ + A), represented by the matrix [[A, B], [B, A]].
A vertex that passes straight through (i_out = 2) only copies the fold
angle, up to sign, and contributes the identity. The product over a cell has
the same form, so the whole cell acts like a single effective vertex.
"""

import math
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from .angles import Radians, sgn
from .errors import DegenerateMap, DomainError
from .logger import get_logger
from .strip_data import VertexSpec
from .vertex import ab_coefficients, fold_angles, image_magnitude

logger = get_logger(__name__)

# Probe angle used to read the sign of the composite map.
BRANCH_PROBE = 1e-3


@dataclass(frozen=True)
class CellMap:
    """Composite map of a cell, normalized so that a_eff = 1."""
    a_eff: float
    b_eff: float
    branch_sign: int

    @property
    def p_eff(self) -> float:
        q = (self.a_eff - self.b_eff) / (self.a_eff + self.b_eff)
        return self.branch_sign * math.sqrt(max(q, 0.0))

    @property
    def ratio(self) -> float:
        if self.b_eff == 0.0:
            return math.copysign(math.inf, self.a_eff)
        return self.a_eff / self.b_eff

    def cos_image(self, rho: Radians) -> float:
        """Cosine of the image of rho."""
        c = math.cos(rho)
        return (self.a_eff * c + self.b_eff) / (self.b_eff * c + self.a_eff)

    def __call__(self, rho: Radians) -> Radians:
        if not abs(rho) <= math.pi:
            raise DomainError(f"rho must lie in [-π, π], got {rho!r}")
        return sgn(rho) * self.branch_sign * image_magnitude(abs(rho), abs(self.p_eff))


def coefficient_matrix(spec: VertexSpec) -> np.ndarray:
    """The 2x2 cosine-form matrix of one vertex."""
    if spec.passes_straight:
        return np.eye(2)
    coeffs = ab_coefficients(spec.angles, spec.mode)
    return np.array([[coeffs.a, coeffs.b], [coeffs.b, coeffs.a]])


def compose_cell(cell: Sequence[VertexSpec]) -> CellMap:
    """
    Compose the maps of one cell into a single effective map.

    Args:
        cell: The N vertex specs of the cell, in strip order

    Returns:
        CellMap with a_eff = 1 and the sign of the composite map

    Raises:
        DegenerateMap: If no vertex of the cell turns the strip (all i_out = 2)
    """
    if not cell:
        raise DomainError("cannot compose an empty cell")
    if all(spec.passes_straight for spec in cell):
        raise DegenerateMap("every vertex passes straight through; the cell map is the identity")

    product = np.eye(2)
    for spec in cell:
        product = coefficient_matrix(spec) @ product
    a, b = float(product[0, 0]), float(product[0, 1])

    rho = BRANCH_PROBE
    for spec in cell:
        rho = fold_angles(spec.angles, spec.mode, rho).rho[spec.i_out]

    cell_map = CellMap(a_eff=1.0, b_eff=b / a, branch_sign=sgn(rho))
    logger.debug(f"Composed cell: a={a:.6g} b={b:.6g} p_eff={cell_map.p_eff:.6g}")
    return cell_map
