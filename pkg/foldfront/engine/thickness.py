"""
Thick-panel offsets of a strip.

A thick degree-4 vertex becomes a Bennett linkage when its creases are
offset from the zero-thickness plane. Flat-foldability fixes the offsets to
(d0, d0·sinθ1/sinθ0, d0, d0·sinθ1/sinθ0). Along a strip the offset of the
output crease carries over to crease 0 of the next vertex, so a cell scales
every offset by the same ratio.
"""

import math
from dataclasses import dataclass

from .angles import Radians
from .errors import DomainError, WrongConnectivity
from .logger import get_logger
from .strip_data import StripDesign
from .vertex import SectorAngles

logger = get_logger(__name__)

RATIO_TOL = 1e-9
SYMMETRY_TOL = 1e-9


@dataclass(frozen=True)
class BennettOffsets:
    d: tuple[float, float, float, float]


@dataclass(frozen=True)
class ThicknessProfile:
    """Offsets along a strip; d0_values holds one entry per vertex plus the carried value."""
    d0_values: tuple[float, ...]
    offsets: tuple[BennettOffsets, ...]
    cell_ratios: tuple[float, ...]

    @property
    def cell_ratio(self) -> float:
        return self.cell_ratios[0]

    @property
    def exponential(self) -> bool:
        """True when offsets grow or shrink geometrically from cell to cell."""
        return any(abs(r - 1.0) > RATIO_TOL for r in self.cell_ratios)


@dataclass(frozen=True)
class PanelInsertion:
    feasible: bool
    offending: tuple[int, ...]


def bennett_offsets(angles: SectorAngles, d0: float) -> BennettOffsets:
    """
    Crease offsets of a flat-foldable thick vertex.

    Args:
        angles: Sector angles
        d0: Offset of crease 0, positive

    Returns:
        BennettOffsets (d0, d1, d0, d1) with d1 = d0·sinθ1/sinθ0
    """
    if not math.isfinite(d0) or d0 <= 0.0:
        raise DomainError(f"d0 must be positive, got {d0!r}")
    d1 = d0 * math.sin(angles.theta1) / math.sin(angles.theta0)
    return BennettOffsets((d0, d1, d0, d1))


def thickness_profile(design: StripDesign, d0_initial: float, cells: int | None = None) -> ThicknessProfile:
    """
    Carry crease offsets along a strip.

    Args:
        design: Strip design
        d0_initial: Offset of crease 0 of vertex 0
        cells: Number of cells; defaults to the stored vertices

    Returns:
        ThicknessProfile with per-vertex offsets and per-cell growth ratios
    """
    count = design.vertex_count if cells is None else cells * design.period
    if count < design.period:
        raise DomainError(f"need at least one full cell, got {count} vertices")

    d0 = float(d0_initial)
    d0_values = [d0]
    offsets = []
    for n in range(count):
        spec = design.spec_at(n)
        off = bennett_offsets(spec.angles, d0)
        offsets.append(off)
        d0 = off.d[spec.i_out]
        d0_values.append(d0)

    period = design.period
    ratios = tuple(
        d0_values[(t + 1) * period] / d0_values[t * period] for t in range(count // period)
    )
    profile = ThicknessProfile(tuple(d0_values), tuple(offsets), ratios)
    if profile.exponential:
        logger.debug(f"Offsets scale by {profile.cell_ratio:.6g} per cell")
    return profile


def _symmetric(theta0: Radians, theta1: Radians) -> bool:
    return abs(theta0 - theta1) <= SYMMETRY_TOL


def can_insert_rectangular_panels(design: StripDesign) -> PanelInsertion:
    """
    Check whether rectangular panels fit between consecutive cell vertices.

    The vertices at odd positions of each cell connect through opposite
    creases; a rectangular panel keeps the offsets unchanged across them only
    if they are mirror symmetric (θ0 = θ1).

    Returns:
        PanelInsertion listing the vertices that break the condition

    Raises:
        WrongConnectivity: If a tested vertex does not pass straight through
    """
    tested = [n for n in range(design.vertex_count) if (n % design.period) % 2 == 1]
    if not tested:
        raise WrongConnectivity(f"cells of {design.period} vertices have no odd positions to test")

    offending = []
    for n in tested:
        spec = design.spec_at(n)
        if not spec.passes_straight:
            raise WrongConnectivity(f"vertex {n} has i_out={spec.i_out}, expected 2")
        if not _symmetric(spec.angles.theta0, spec.angles.theta1):
            offending.append(n)
    return PanelInsertion(feasible=not offending, offending=tuple(offending))
