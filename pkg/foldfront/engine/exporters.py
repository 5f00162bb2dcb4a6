"""
Text formats written and read by the command line: OBJ meshes, CSV tables
and polyline input. Every number is printed with 9 significant digits so
output is byte-identical across runs.
"""

import csv
from collections.abc import Iterable, Sequence
from pathlib import Path
from typing import TextIO

import numpy as np

from .angles import fmt_angle, fmt_float
from .embedding import Mesh
from .errors import DesignError
from .strip import Orbit
from .thickness import ThicknessProfile


def write_obj(mesh: Mesh, stream: TextIO) -> None:
    """Write a Wavefront OBJ mesh (1-based face indices)."""
    for x, y, z in mesh.points:
        stream.write(f"v {fmt_float(x)} {fmt_float(y)} {fmt_float(z)}\n")
    for a, b, c in mesh.faces:
        stream.write(f"f {a + 1} {b + 1} {c + 1}\n")


def save_obj(mesh: Mesh, path: str | Path) -> None:
    with open(Path(path), "w", newline="") as f:
        write_obj(mesh, f)


def _writer(stream: TextIO):
    return csv.writer(stream, lineterminator="\n")


def orbit_rows(orbit: Orbit, full: bool = False) -> tuple[list[str], list[list[str]]]:
    """
    Orbit table: one row per cell boundary.

    With full=True each row also lists the four fold angles of every vertex of
    the cell that starts at that boundary (empty on the last row).
    """
    header = ["t", "rho_deg"]
    if full:
        header += [f"v{k}_rho{i}_deg" for k in range(orbit.period) for i in range(4)]

    rows = []
    for t, rho in enumerate(orbit.rho_t):
        row = [str(t), fmt_angle(rho)]
        if full:
            states = orbit.full_states[t * orbit.period:(t + 1) * orbit.period]
            if states:
                row += [fmt_angle(value) for state in states for value in state.rho]
            else:
                row += [""] * (4 * orbit.period)
        rows.append(row)
    return header, rows


def write_orbit_csv(orbit: Orbit, stream: TextIO, full: bool = False) -> None:
    header, rows = orbit_rows(orbit, full)
    writer = _writer(stream)
    writer.writerow(header)
    writer.writerows(rows)


def write_cobweb_csv(orbit: Orbit, stream: TextIO) -> None:
    writer = _writer(stream)
    writer.writerow(["x_deg", "y_deg"])
    for x, y in orbit.cobweb():
        writer.writerow([fmt_angle(x), fmt_angle(y)])


def write_sweep_index(entries: Iterable[tuple[int, float, str]], stream: TextIO) -> None:
    """Index of sweep frames: frame number, driving angle, OBJ file name."""
    writer = _writer(stream)
    writer.writerow(["frame", "rho0_deg", "file"])
    for frame, rho0, name in entries:
        writer.writerow([frame, fmt_angle(rho0), name])


def write_thickness_csv(profile: ThicknessProfile, stream: TextIO) -> None:
    writer = _writer(stream)
    writer.writerow(["vertex", "d0", "d1", "d2", "d3"])
    for n, off in enumerate(profile.offsets):
        writer.writerow([n, *(fmt_float(x) for x in off.d)])


def write_relation_csv(rows: Sequence[tuple[float, float, float]], stream: TextIO) -> None:
    writer = _writer(stream)
    writer.writerow(["rho0_deg", "rho1_deg", "rho3_deg"])
    for rho0, rho1, rho3 in rows:
        writer.writerow([fmt_angle(rho0), fmt_angle(rho1), fmt_angle(rho3)])


def read_polyline_csv(path: str | Path) -> np.ndarray:
    """
    Read polyline points from a CSV file of x,y rows.

    A first line that is not numeric is treated as a header.

    Raises:
        DesignError: If the file cannot be read or a row is malformed
    """
    path = Path(path)
    try:
        with open(path, newline="") as f:
            rows = list(csv.reader(f))
    except OSError as e:
        raise DesignError(f"{path}: cannot read polyline ({e.strerror})") from e

    points = []
    for lineno, row in enumerate(rows, start=1):
        if not row or all(not cell.strip() for cell in row):
            continue
        if len(row) != 2:
            raise DesignError(f"{path}: line {lineno}: expected 2 columns, got {len(row)}")
        try:
            points.append((float(row[0]), float(row[1])))
        except ValueError as e:
            if lineno == 1:
                continue
            raise DesignError(f"{path}: line {lineno}: not a number") from e
    if len(points) < 2:
        raise DesignError(f"{path}: polyline needs at least two points")
    return np.array(points)
