"""
Analysis summary of a strip design, shared by the text and JSON outputs of
the analyze command.
"""

from typing import Any

from .angles import fmt_float, to_degrees
from .cell_map import compose_cell
from .errors import DegenerateMap, DesignError, SingularVertex, UniformMap
from .logger import get_logger
from .shape_design import turning_angles
from .strip import classify, count_transition_cells, is_autonomous, transition_width
from .strip_data import StripDesign
from .vertex import folding_multiplier

logger = get_logger(__name__)


def _rounded(value: float | None) -> float | None:
    if value is None:
        return None
    if abs(value) < 1e-12:
        return 0.0
    return float(fmt_float(value))


def _vertex_entries(design: StripDesign) -> list[dict[str, Any]]:
    count = design.period if design.periodic else design.vertex_count
    entries = []
    for n in range(count):
        spec = design.spec_at(n)
        try:
            abs_p = abs(folding_multiplier(spec.angles, spec.mode))
        except SingularVertex:
            abs_p = None
        entries.append({
            "index": n,
            "theta0_deg": _rounded(to_degrees(spec.angles.theta0)),
            "theta1_deg": _rounded(to_degrees(spec.angles.theta1)),
            "sigma": int(spec.mode),
            "i_out": spec.i_out,
            "abs_p": _rounded(abs_p),
        })
    return entries


def _cell_entry(design: StripDesign, t: int) -> dict[str, Any]:
    try:
        cell_map = compose_cell(design.cell(t))
    except DegenerateMap:
        return {"t": t, "a_eff": None, "b_eff": None, "p_eff": None}
    return {
        "t": t,
        "a_eff": _rounded(cell_map.a_eff),
        "b_eff": _rounded(cell_map.b_eff),
        "p_eff": _rounded(cell_map.p_eff),
    }


def analyze_design(design: StripDesign) -> dict[str, Any]:
    """
    Summarize the propagation behavior and shape of a design.

    Returns:
        Report dict with rounded numbers; angles in degrees
    """
    first = _cell_entry(design, 0)
    report = classify(design.cell(0))

    width = None
    counted = None
    if report.p_eff is not None:
        try:
            width = transition_width(report.p_eff)
        except UniformMap:
            width = None
        if width is not None:
            try:
                counted = count_transition_cells(design)
            except DesignError:
                logger.warning("Design too short to count the transition cells")

    out: dict[str, Any] = {
        "name": design.name,
        "period": design.period,
        "periodic": design.periodic,
        "vertices": _vertex_entries(design),
        "a_eff": first["a_eff"],
        "b_eff": first["b_eff"],
        "p_eff": first["p_eff"],
        "classification": report.kind.value,
        "attracting_state": report.attracting_state.value,
        "transition_width": _rounded(width),
        "transition_cells_counted": counted,
    }

    if design.periodic:
        phi = turning_angles(design)
        out["phi_dev_deg"] = _rounded(to_degrees(phi.phi_dev))
        out["phi_flat_deg"] = _rounded(to_degrees(phi.phi_flat))
    else:
        cells = [_cell_entry(design, t) for t in range(design.cell_count)]
        try:
            autonomous = is_autonomous(design)
        except DegenerateMap:
            autonomous = all(c["p_eff"] is None for c in cells)
        if not autonomous:
            logger.warning("Cells of this design compose to different maps")
        out["phi_dev_deg"] = None
        out["phi_flat_deg"] = None
        out["cells"] = [{"t": c["t"], "p_eff": c["p_eff"]} for c in cells]
        out["autonomous"] = autonomous
    return out


def format_report(report: dict[str, Any]) -> str:
    """Plain-text rendering of analyze_design output."""

    def show(value: Any) -> str:
        if value is None:
            return "n/a"
        if isinstance(value, bool):
            return "yes" if value else "no"
        if isinstance(value, float):
            return fmt_float(value)
        return str(value)

    lines = [
        f"design: {show(report['name'])}",
        f"period: {report['period']}",
        f"periodic: {show(report['periodic'])}",
    ]
    for v in report["vertices"]:
        lines.append(
            f"vertex {v['index']}: theta0={show(v['theta0_deg'])} theta1={show(v['theta1_deg'])} "
            f"sigma={v['sigma']:+d} i_out={v['i_out']} |p|={show(v['abs_p'])}"
        )
    for key in (
        "a_eff", "b_eff", "p_eff", "classification", "attracting_state",
        "transition_width", "transition_cells_counted", "phi_dev_deg", "phi_flat_deg",
    ):
        lines.append(f"{key}: {show(report[key])}")
    if "cells" in report:
        for c in report["cells"]:
            lines.append(f"cell {c['t']}: p_eff={show(c['p_eff'])}")
        lines.append(f"autonomous: {show(report['autonomous'])}")
    return "\n".join(lines) + "\n"
