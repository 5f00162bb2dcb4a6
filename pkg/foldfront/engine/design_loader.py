import json
import math
from pathlib import Path
from typing import Any

from .angles import to_degrees, to_radians
from .errors import DesignError, DomainError, SingularVertex
from .strip_data import UNIT_LENGTHS, StripDesign, VertexSpec
from .vertex import SectorAngles

DESIGN_VERSION = "foldfront.design/1"

VERTEX_FIELDS = ("theta0_deg", "theta1_deg", "sigma", "i_out")


def load_design(path: str | Path) -> StripDesign:
    """
    Load and validate a design file.

    Args:
        path: Path to JSON design file

    Returns:
        StripDesign built from the file

    Raises:
        DesignError: If the file is unreadable, not JSON, or fails validation
        SingularVertex: If a turning vertex is singular
    """
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as e:
        raise DesignError(f"{path}: cannot read design file ({e.strerror})") from e
    return loads_design(text, source=str(path))


def loads_design(text: str, source: str = "<string>") -> StripDesign:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise DesignError(f"{source}: line {e.lineno} column {e.colno}: {e.msg}") from e
    try:
        return parse_design(raw)
    except DesignError as e:
        raise DesignError(f"{source}: {e}") from e
    except SingularVertex as e:
        raise SingularVertex(f"{source}: {e}") from e


def _number(value: Any, where: str) -> float:
    if isinstance(value, bool) or not isinstance(value, int | float) or not math.isfinite(value):
        raise DesignError(f"{where}: must be a finite number, got {value!r}")
    return float(value)


def _integer(value: Any, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise DesignError(f"{where}: must be an integer, got {value!r}")
    return value


def validate_design_structure(raw: Any) -> bool:
    """
    Validate that a parsed design file has the required fields and types.

    Args:
        raw: Parsed JSON document

    Returns:
        True if valid, raises DesignError if invalid
    """
    if not isinstance(raw, dict):
        raise DesignError("design file must hold a JSON object")

    for name in ("version", "periodic", "period", "vertices"):
        if name not in raw:
            raise DesignError(f"missing required field: {name}")

    if raw["version"] != DESIGN_VERSION:
        raise DesignError(f"version: expected {DESIGN_VERSION!r}, got {raw['version']!r}")
    if not isinstance(raw["periodic"], bool):
        raise DesignError("periodic: must be true or false")
    if _integer(raw["period"], "period") < 1:
        raise DesignError("period: must be at least 1")
    if "name" in raw and not isinstance(raw["name"], str):
        raise DesignError("name: must be a string")

    vertices = raw["vertices"]
    if not isinstance(vertices, list) or not vertices:
        raise DesignError("vertices: must be a non-empty list")

    for i, vertex in enumerate(vertices):
        where = f"vertices[{i}]"
        if not isinstance(vertex, dict):
            raise DesignError(f"{where}: must be an object")
        for name in VERTEX_FIELDS:
            if name not in vertex:
                raise DesignError(f"{where}: missing required field: {name}")
        _number(vertex["theta0_deg"], f"{where}.theta0_deg")
        _number(vertex["theta1_deg"], f"{where}.theta1_deg")
        if _integer(vertex["sigma"], f"{where}.sigma") not in (-1, 1):
            raise DesignError(f"{where}.sigma: must be -1 or 1, got {vertex['sigma']!r}")
        if _integer(vertex["i_out"], f"{where}.i_out") not in (1, 2, 3):
            raise DesignError(f"{where}.i_out: must be 1, 2 or 3, got {vertex['i_out']!r}")
        if "lengths" in vertex:
            lengths = vertex["lengths"]
            if not isinstance(lengths, list) or len(lengths) != 4:
                raise DesignError(f"{where}.lengths: must be a list of 4 numbers")
            for k, value in enumerate(lengths):
                if _number(value, f"{where}.lengths[{k}]") <= 0.0:
                    raise DesignError(f"{where}.lengths[{k}]: must be positive")

    return True


def parse_design(raw: Any) -> StripDesign:
    """
    Build a StripDesign from a parsed design document.

    Errors name the offending field, e.g. "vertices[2].theta0_deg".
    """
    validate_design_structure(raw)

    specs = []
    lengths = []
    for i, vertex in enumerate(raw["vertices"]):
        where = f"vertices[{i}]"
        try:
            angles = SectorAngles(to_radians(vertex["theta0_deg"]), to_radians(vertex["theta1_deg"]))
        except DomainError as e:
            raise DesignError(f"{where}: {e}") from e
        try:
            specs.append(VertexSpec(angles, vertex["sigma"], vertex["i_out"]))
        except SingularVertex as e:
            raise SingularVertex(f"{where}: {e}") from e
        lengths.append(tuple(float(x) for x in vertex.get("lengths", UNIT_LENGTHS)))

    return StripDesign(
        vertices=tuple(specs),
        period=raw["period"],
        periodic=raw["periodic"],
        crease_lengths=tuple(lengths),
        name=raw.get("name"),
    )


def design_to_dict(design: StripDesign) -> dict[str, Any]:
    """Serialize a design to the design-file document (angles in degrees)."""
    vertices = []
    for spec, row in zip(design.vertices, design.crease_lengths):
        entry: dict[str, Any] = {
            "theta0_deg": to_degrees(spec.angles.theta0),
            "theta1_deg": to_degrees(spec.angles.theta1),
            "sigma": int(spec.mode),
            "i_out": spec.i_out,
        }
        if tuple(row) != UNIT_LENGTHS:
            entry["lengths"] = list(row)
        vertices.append(entry)

    doc: dict[str, Any] = {"version": DESIGN_VERSION}
    if design.name is not None:
        doc["name"] = design.name
    doc["periodic"] = design.periodic
    doc["period"] = design.period
    doc["vertices"] = vertices
    return doc


def dumps_design(design: StripDesign) -> str:
    return json.dumps(design_to_dict(design), indent=2) + "\n"


def dump_design(design: StripDesign, path: str | Path) -> None:
    Path(path).write_text(dumps_design(design))
