import argparse
import json
import logging
import math
import sys
from pathlib import Path

import numpy as np

from foldfront.engine.angles import fmt_float, to_radians
from foldfront.engine.design_loader import dumps_design, load_design
from foldfront.engine.embedding import build_mesh, propagate
from foldfront.engine.errors import DomainError, FoldfrontError, GeometryInfeasible, WrongConnectivity
from foldfront.engine.exporters import (
    read_polyline_csv,
    save_obj,
    write_cobweb_csv,
    write_orbit_csv,
    write_relation_csv,
    write_sweep_index,
    write_thickness_csv,
)
from foldfront.engine.logger import get_logger, set_level
from foldfront.engine.report import analyze_design, format_report
from foldfront.engine.shape_design import map_polyline, polyline_to_strip, verify_round_trip
from foldfront.engine.strip import iterate
from foldfront.engine.thickness import can_insert_rectangular_panels, thickness_profile
from foldfront.engine.vertex import SectorAngles, relation_curve

logger = get_logger(__name__)

# Sweeps stop just short of the flat-folded state, where the strip self-overlaps.
SWEEP_LIMIT = 1.0 - 1e-6
ROUND_TRIP_RTOL = 1e-6


def _angle(text: str) -> float:
    try:
        return to_radians(text)
    except DomainError as e:
        raise argparse.ArgumentTypeError(str(e)) from e


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {value}")
    return value


def _frame_count(text: str) -> int:
    value = int(text)
    if value < 2:
        raise argparse.ArgumentTypeError(f"a sweep needs at least 2 frames, got {value}")
    return value


def _non_negative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative, got {value}")
    return value


def cmd_analyze(args) -> int:
    report = analyze_design(load_design(args.design))
    if args.json:
        sys.stdout.write(json.dumps(report, indent=2) + "\n")
    else:
        sys.stdout.write(format_report(report))
    return 0


def cmd_fold(args) -> int:
    design = load_design(args.design)
    orbit = iterate(design, args.rho0, args.cells)
    if args.cobweb:
        write_cobweb_csv(orbit, sys.stdout)
    else:
        write_orbit_csv(orbit, sys.stdout, full=args.full)
    return 0


def cmd_sweep(args) -> int:
    design = load_design(args.design)
    cells = args.cells if args.cells is not None else design.cell_count
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)

    sign = -1.0 if args.negative else 1.0
    entries = []
    for frame, rho0 in enumerate(np.linspace(0.0, sign * math.pi * SWEEP_LIMIT, args.frames)):
        name = f"frame_{frame:04d}.obj"
        config = propagate(design, float(rho0), cells=cells)
        save_obj(build_mesh(config), out_dir / name)
        entries.append((frame, float(rho0), name))
        logger.debug(f"Wrote {name}")

    with open(out_dir / "index.csv", "w", newline="") as f:
        write_sweep_index(entries, f)
    sys.stdout.write(f"frames: {len(entries)}\n")
    return 0


def cmd_design(args) -> int:
    points = read_polyline_csv(args.polyline)
    template = load_design(args.template)
    plan = map_polyline(points, args.l, args.phi_star, args.phi0, mirrored=args.mirrored)
    design = polyline_to_strip(plan, template, ratio=args.ratio)

    if args.verify:
        deviation = verify_round_trip(plan, design)
        limit = ROUND_TRIP_RTOL * plan.segment_length
        print(f"round-trip deviation: {fmt_float(deviation)}", file=sys.stderr)
        if deviation > limit:
            raise GeometryInfeasible(
                f"rebuilt strip deviates by {fmt_float(deviation)} (limit {fmt_float(limit)})"
            )

    text = dumps_design(design)
    if args.out:
        Path(args.out).write_text(text)
        logger.info(f"Wrote design with {design.vertex_count} vertices to {args.out}")
    else:
        sys.stdout.write(text)
    return 0


def cmd_thickness(args) -> int:
    design = load_design(args.design)
    profile = thickness_profile(design, args.d0, cells=args.cells)
    try:
        panels = can_insert_rectangular_panels(design)
        verdict = "feasible" if panels.feasible else "infeasible"
        offending = ",".join(str(n) for n in panels.offending)
    except WrongConnectivity as e:
        logger.info(f"Panel test skipped: {e}")
        verdict, offending = "not_applicable", ""

    sys.stdout.write(f"cell_ratio: {fmt_float(profile.cell_ratio)}\n")
    sys.stdout.write(f"exponential: {'yes' if profile.exponential else 'no'}\n")
    sys.stdout.write(f"rectangular_panels: {verdict}\n")
    if offending:
        sys.stdout.write(f"offending_vertices: {offending}\n")
    sys.stdout.write("hinge_height_drift: not modeled\n")
    write_thickness_csv(profile, sys.stdout)
    return 0


def cmd_curve(args) -> int:
    angles = SectorAngles(args.theta0, args.theta1)
    write_relation_csv(relation_curve(angles, args.sigma, args.samples), sys.stdout)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="foldfront",
        description="Analyze, fold and design strips of degree-4 origami vertices.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="log debug output to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="classify propagation and report curvature")
    p.add_argument("design", help="design JSON file")
    p.add_argument("--json", action="store_true", help="print the report as JSON")
    p.set_defaults(handler=cmd_analyze)

    p = sub.add_parser("fold", help="print the orbit of a driven strip")
    p.add_argument("design", help="design JSON file")
    p.add_argument("--rho0", type=_angle, required=True, help="driving fold angle in degrees")
    p.add_argument("--cells", type=_non_negative_int, required=True, help="number of cells")
    p.add_argument("--full", action="store_true", help="include every vertex's fold angles")
    p.add_argument("--cobweb", action="store_true", help="print cobweb diagram points instead")
    p.set_defaults(handler=cmd_fold)

    p = sub.add_parser("sweep", help="write OBJ frames of a folding sweep")
    p.add_argument("design", help="design JSON file")
    p.add_argument("--frames", type=_frame_count, required=True, help="number of frames")
    p.add_argument("--out", required=True, help="output directory")
    p.add_argument("--cells", type=_positive_int, default=None, help="cells to build")
    p.add_argument("--negative", action="store_true", help="sweep towards -180 degrees")
    p.set_defaults(handler=cmd_sweep)

    p = sub.add_parser("design", help="synthesize a strip along a target polyline")
    p.add_argument("polyline", help="CSV file of x,y points")
    p.add_argument("--template", required=True, help="design file with period 4")
    p.add_argument("--ratio", type=float, default=None, help="A/B ratio to preserve")
    p.add_argument("--l", type=float, required=True, help="crease length")
    p.add_argument("--phi-star", dest="phi_star", type=_angle, required=True, help="degrees")
    p.add_argument("--phi0", type=_angle, required=True, help="degrees")
    p.add_argument("--mirrored", action="store_true", help="Miura-like strip (reversed middle creases)")
    p.add_argument("--verify", action="store_true", help="check the rebuilt developed strip")
    p.add_argument("--out", default=None, help="output design file (default: stdout)")
    p.set_defaults(handler=cmd_design)

    p = sub.add_parser("thickness", help="thick-panel offsets along a strip")
    p.add_argument("design", help="design JSON file")
    p.add_argument("--d0", type=float, required=True, help="offset of the first crease")
    p.add_argument("--cells", type=_positive_int, default=None, help="cells to follow")
    p.set_defaults(handler=cmd_thickness)

    p = sub.add_parser("curve", help="adjacent fold-angle relation of one vertex")
    p.add_argument("--theta0", type=_angle, required=True, help="degrees")
    p.add_argument("--theta1", type=_angle, required=True, help="degrees")
    p.add_argument("--sigma", type=int, choices=(-1, 1), default=1)
    p.add_argument("--samples", type=_positive_int, default=181)
    p.set_defaults(handler=cmd_curve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    if args.verbose:
        set_level(logging.DEBUG)

    try:
        return args.handler(args)
    except FoldfrontError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code


if __name__ == "__main__":
    sys.exit(main())
