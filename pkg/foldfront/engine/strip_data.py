"""
Data structures describing a strip of degree-4 vertices.

A strip is a chain of vertices in which the output crease i_out of vertex n
is the same physical crease as crease 0 of vertex n + 1. Designs are
immutable; operations that generate designs return new instances.
"""

import math
from dataclasses import dataclass, field

from .enums import FoldMode
from .errors import DesignError, SingularVertex
from .vertex import SectorAngles, as_mode, is_singular

Lengths = tuple[float, float, float, float]

UNIT_LENGTHS: Lengths = (1.0, 1.0, 1.0, 1.0)

# Relative tolerance on the length of a crease shared by two vertices.
LENGTH_RTOL = 1e-9


@dataclass(frozen=True)
class VertexSpec:
    """One vertex of a strip: its geometry, fold mode and output crease."""
    angles: SectorAngles
    mode: FoldMode
    i_out: int

    def __post_init__(self):
        object.__setattr__(self, "mode", as_mode(self.mode))
        if self.i_out not in (1, 2, 3):
            raise DesignError(f"i_out must be 1, 2 or 3, got {self.i_out!r}")
        if not self.passes_straight and is_singular(self.angles, self.mode):
            raise SingularVertex(
                f"vertex with i_out={self.i_out} must not be singular"
            )

    @classmethod
    def from_degrees(cls, theta0: float, theta1: float, mode: int, i_out: int) -> "VertexSpec":
        return cls(SectorAngles.from_degrees(theta0, theta1), as_mode(mode), i_out)

    @property
    def passes_straight(self) -> bool:
        """True when the strip continues through the opposite crease."""
        return self.i_out == 2


@dataclass(frozen=True)
class StripDesign:
    """
    A chain of vertices with a repeat period.

    Periodic designs repeat their stored vertices indefinitely; the stored
    list is a whole number of periods. Non-periodic designs (for example a
    strip synthesized from a target shape) end after the stored vertices.
    """
    vertices: tuple[VertexSpec, ...]
    period: int
    periodic: bool = True
    crease_lengths: tuple[Lengths, ...] | None = None
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        if not self.vertices:
            raise DesignError("design has no vertices")
        if not isinstance(self.period, int) or isinstance(self.period, bool) or self.period < 1:
            raise DesignError(f"period must be a positive integer, got {self.period!r}")

        m = len(self.vertices)
        if self.periodic:
            if m % self.period:
                raise DesignError(
                    f"periodic design stores {m} vertices, not a multiple of period {self.period}"
                )
            for n in range(m - self.period):
                if self.vertices[n] != self.vertices[n + self.period]:
                    raise DesignError(
                        f"vertices[{n}] and vertices[{n + self.period}] differ in a periodic design"
                    )

        if self.crease_lengths is None:
            lengths = tuple(UNIT_LENGTHS for _ in range(m))
        else:
            lengths = tuple(tuple(float(x) for x in row) for row in self.crease_lengths)
        object.__setattr__(self, "crease_lengths", lengths)
        self._validate_lengths()

    def _validate_lengths(self) -> None:
        m = len(self.vertices)
        if len(self.crease_lengths) != m:
            raise DesignError(
                f"design has {m} vertices but {len(self.crease_lengths)} length rows"
            )
        for n, row in enumerate(self.crease_lengths):
            if len(row) != 4:
                raise DesignError(f"vertices[{n}].lengths must hold 4 values")
            for i, value in enumerate(row):
                if not math.isfinite(value) or value <= 0.0:
                    raise DesignError(f"vertices[{n}].lengths[{i}] must be positive, got {value!r}")

        pairs = list(range(m - 1))
        if self.periodic:
            pairs.append(m - 1)
        for n in pairs:
            shared = self.crease_lengths[n][self.vertices[n].i_out]
            following = self.crease_lengths[(n + 1) % m][0]
            if not math.isclose(shared, following, rel_tol=LENGTH_RTOL):
                raise DesignError(
                    f"vertices[{(n + 1) % m}].lengths[0] = {following!r} does not match the "
                    f"shared crease of vertices[{n}] ({shared!r})"
                )

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def cell_count(self) -> int:
        """Number of whole cells stored in the design."""
        return len(self.vertices) // self.period

    def _index(self, n: int) -> int:
        if n < 0:
            raise DesignError(f"vertex index must be non-negative, got {n}")
        if n >= len(self.vertices):
            if not self.periodic:
                raise DesignError(
                    f"design has only {len(self.vertices)} vertices, vertex {n} requested"
                )
            return n % len(self.vertices)
        return n

    def spec_at(self, n: int) -> VertexSpec:
        return self.vertices[self._index(n)]

    def lengths_at(self, n: int) -> Lengths:
        return self.crease_lengths[self._index(n)]

    def cell(self, t: int) -> tuple[VertexSpec, ...]:
        """The N vertices of cell t."""
        return tuple(self.spec_at(t * self.period + k) for k in range(self.period))
