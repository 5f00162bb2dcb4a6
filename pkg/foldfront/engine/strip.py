"""
Strip recurrence: local maps, orbits, closed-form fronts and classification.

The fold angle on the shared crease of cell t + 1 is a fixed function of the
fold angle on the shared crease of cell t. Both flat states (ρ = 0 and
|ρ| = π) are fixed points; their slopes are |p| and 1/|p|, so one of them
attracts and the other repels unless |p| = 1.
"""

import math
from collections.abc import Sequence
from dataclasses import dataclass

from .angles import Radians, sgn
from .cell_map import CellMap, compose_cell
from .enums import Propagation, StableState
from .errors import DegenerateMap, DomainError, UniformMap
from .logger import get_logger
from .strip_data import StripDesign, VertexSpec
from .vertex import VertexState, fold_angles

logger = get_logger(__name__)

UNIFORM_TOL = 1e-9
FRONT_LOW = 0.1 * math.pi
FRONT_HIGH = 0.9 * math.pi


@dataclass(frozen=True)
class Orbit:
    """Cell-boundary fold angles and the full state of every vertex."""
    rho_t: tuple[Radians, ...]
    full_states: tuple[VertexState, ...]
    period: int

    @property
    def cells(self) -> int:
        return len(self.rho_t) - 1

    def cobweb(self) -> list[tuple[Radians, Radians]]:
        """Staircase points (ρ_t, ρ_t) -> (ρ_t, ρ_{t+1}) -> (ρ_{t+1}, ρ_{t+1})."""
        points = []
        for x, y in zip(self.rho_t, self.rho_t[1:]):
            points.append((x, x))
            points.append((x, y))
        if self.rho_t:
            points.append((self.rho_t[-1], self.rho_t[-1]))
        return points


@dataclass(frozen=True)
class PropagationReport:
    kind: Propagation
    p_eff: float | None
    developed_slope: float | None
    flat_slope: float | None
    # state the orbit approaches far from the driven end
    attracting_state: StableState


def local_map(spec: VertexSpec, rho_in: Radians) -> Radians:
    """Fold angle on the output crease of a vertex driven at crease 0."""
    return fold_angles(spec.angles, spec.mode, rho_in).rho[spec.i_out]


def iterate(design: StripDesign, rho0: Radians, cells: int) -> Orbit:
    """
    Fold a strip from its first crease.

    Args:
        design: Strip design
        rho0: Fold angle of crease 0 of vertex 0
        cells: Number of cells to propagate through

    Returns:
        Orbit with cells + 1 boundary angles and cells·N vertex states

    Raises:
        DomainError: If |rho0| > π or cells < 0
        DesignError: If a non-periodic design runs out of vertices
    """
    if cells < 0:
        raise DomainError(f"cells must be non-negative, got {cells}")
    rho = float(rho0)
    if not abs(rho) <= math.pi:
        raise DomainError(f"rho0 must lie in [-π, π], got {rho0!r}")

    rho_t = [rho]
    states = []
    for n in range(cells * design.period):
        spec = design.spec_at(n)
        state = fold_angles(spec.angles, spec.mode, rho)
        states.append(state)
        rho = state.rho[spec.i_out]
        if (n + 1) % design.period == 0:
            rho_t.append(rho)
    logger.debug(f"Iterated {cells} cells of {design.name or 'design'} from rho0={rho0:.6g}")
    return Orbit(rho_t=tuple(rho_t), full_states=tuple(states), period=design.period)


def sigmoid_value(rho0: Radians, p: float, t: int) -> Radians:
    """
    Closed-form orbit value ρ_t = 2·arctan(tan(ρ0/2)·p^t).

    Args:
        rho0: Driving fold angle, |rho0| < π
        p: Effective multiplier of the cell map, nonzero
        t: Cell index

    Returns:
        Fold angle on the shared crease of cell t
    """
    if not abs(rho0) < math.pi:
        raise DomainError(f"sigmoid needs |rho0| < π, got {rho0!r}")
    if p == 0.0 or not math.isfinite(p):
        raise DomainError(f"multiplier must be finite and nonzero, got {p!r}")
    if p < 0 and t != int(t):
        raise DomainError("a negative multiplier needs an integer cell index")
    if rho0 == 0.0:
        return 0.0
    log_ratio = math.log(math.tan(0.5 * abs(rho0))) + t * math.log(abs(p))
    # atan(e^700) is π/2 to double precision; exp overflows past ~709
    magnitude = math.pi if log_ratio > 700.0 else 2.0 * math.atan(math.exp(log_ratio))
    return sgn(rho0) * sgn(p) ** int(t) * magnitude


def transition_width(p: float) -> float:
    """
    Number of cells over which the front rises from 10% to 90% of π.

    Raises:
        UniformMap: If |p| = 1 (no front forms)
    """
    if p == 0.0 or not math.isfinite(p):
        raise DomainError(f"multiplier must be finite and nonzero, got {p!r}")
    if abs(abs(p) - 1.0) < UNIFORM_TOL:
        raise UniformMap("|p| = 1: folding is uniform and no front forms")
    return abs(2.0 * math.log(math.tan(math.pi / 20.0)) / math.log(abs(p)))


def classify(source: CellMap | Sequence[VertexSpec]) -> PropagationReport:
    """
    Classify how folding propagates along a strip.

    Args:
        source: A composed CellMap, or the vertex specs of one cell

    Returns:
        PropagationReport; DEGENERATE when the cell map is the identity
    """
    if isinstance(source, CellMap):
        cell_map = source
    else:
        try:
            cell_map = compose_cell(source)
        except DegenerateMap:
            return PropagationReport(Propagation.DEGENERATE, None, None, None, StableState.NEUTRAL)

    p = cell_map.p_eff
    magnitude = abs(p)
    if abs(magnitude - 1.0) < UNIFORM_TOL:
        return PropagationReport(Propagation.UNIFORM, p, magnitude, 1.0 / magnitude, StableState.NEUTRAL)

    attracting = StableState.DEVELOPED if magnitude < 1.0 else StableState.FLAT_FOLDED
    return PropagationReport(Propagation.DOMINO_LIKE, p, magnitude, 1.0 / magnitude, attracting)


def cell_maps(design: StripDesign) -> list[CellMap]:
    """Composite map of every stored cell."""
    return [compose_cell(design.cell(t)) for t in range(design.cell_count)]


def is_autonomous(design: StripDesign, tol: float = 1e-9) -> bool:
    """True when every stored cell composes to the same map."""
    maps = cell_maps(design)
    first = maps[0]
    return all(
        abs(m.b_eff - first.b_eff) <= tol and m.branch_sign == first.branch_sign for m in maps[1:]
    )


def count_transition_cells(design: StripDesign, max_cells: int = 10_000) -> int:
    """
    Count the cells a front needs to cross from 10% to 90% of π.

    Iterates the strip from 0.9π until the boundary angle drops below 0.1π
    (|p| < 1) or from 0.1π until it exceeds 0.9π (|p| > 1).

    Raises:
        UniformMap: If the first cell has |p| = 1
        DomainError: If the threshold is not crossed within max_cells
    """
    p = abs(compose_cell(design.cell(0)).p_eff)
    if abs(p - 1.0) < UNIFORM_TOL:
        raise UniformMap("|p| = 1: folding is uniform and no front forms")
    decaying = p < 1.0
    rho = FRONT_HIGH if decaying else FRONT_LOW

    for count in range(1, max_cells + 1):
        for spec in design.cell(count - 1):
            rho = local_map(spec, rho)
        if (decaying and abs(rho) <= FRONT_LOW) or (not decaying and abs(rho) >= FRONT_HIGH):
            return count
    raise DomainError(f"front did not cross within {max_cells} cells")
