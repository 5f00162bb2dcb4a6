"""
All kinematic arithmetic uses radians. Degrees only cross the I/O boundary.

This module provides angle primitives: conversion between degrees and
radians with validation, sign and wrapping helpers, the shared numeric
tolerances, and the fixed-precision formatting used for every printed number.
"""

import math

from .errors import DomainError

# Type aliases - internal arithmetic is always Radians
Radians = float
Degrees = float

# Vertex counts as singular when its sector angles are this close to the
# mirror (θ0 = θ1) or supplementary (θ0 + θ1 = π) configuration.
SINGULAR_TOL = 1e-9

# Largest excursion of an arccos argument outside [-1, 1] that is clamped
# instead of reported.
ARCCOS_TOL = 1e-9

# Tolerance on unit length and orthogonality of frame vectors.
UNIT_TOL = 1e-9

SIGNIFICANT_DIGITS = 9


def to_radians(value: float | str | int) -> Radians:
    """
    Convert an angle in degrees to radians.

    Args:
        value: Angle in degrees as float, int, or numeric string

    Returns:
        Angle in radians

    Raises:
        DomainError: If the value is not numeric or not finite
    """
    if isinstance(value, bool):
        raise DomainError(f"Unsupported angle type: {type(value)}")
    if isinstance(value, str):
        try:
            deg = float(value.strip())
        except ValueError as e:
            raise DomainError(f"Invalid angle format: {value!r}") from e
    elif isinstance(value, int | float):
        deg = float(value)
    else:
        raise DomainError(f"Unsupported angle type: {type(value)}")

    if not math.isfinite(deg):
        raise DomainError(f"Angle must be finite, got {value!r}")

    return math.radians(deg)


def to_degrees(rad: Radians) -> Degrees:
    """Convert radians to degrees (for display and file output only)."""
    return math.degrees(rad)


def sgn(x: float) -> int:
    """Sign of x with sgn(0) = 0."""
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0


def wrap_angle(x: Radians) -> Radians:
    """
    Reduce an angle into (-π, π].

    Args:
        x: Angle in radians

    Returns:
        Equivalent angle in (-π, π]; -π maps to +π
    """
    w = math.remainder(x, 2.0 * math.pi)
    if w <= -math.pi:
        w += 2.0 * math.pi
    return w


def clamp_unit(x: float, what: str = "arccos argument", tol: float = ARCCOS_TOL) -> float:
    """
    Clamp a cosine value into [-1, 1] if it is within tolerance.

    Args:
        x: Value that should be a cosine
        what: Name used in the error message
        tol: Allowed excursion outside [-1, 1]

    Returns:
        x clamped to [-1, 1]

    Raises:
        DomainError: If x lies further than tol outside [-1, 1]
    """
    if not math.isfinite(x) or abs(x) > 1.0 + tol:
        raise DomainError(f"{what} out of range: {x!r}")
    return max(-1.0, min(1.0, x))


def fmt_float(x: float) -> str:
    """Format a number with 9 significant digits (no negative zero)."""
    if x == 0.0:
        x = 0.0
    return f"{x:.{SIGNIFICANT_DIGITS}g}"


def fmt_angle(rad: Radians) -> str:
    """Format a radian angle as degrees with 9 significant digits."""
    return fmt_float(to_degrees(rad))
