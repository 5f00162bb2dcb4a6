from enum import Enum, IntEnum


class FoldMode(IntEnum):
    """Relative mountain/valley assignment of the two opposite creases (σ)."""
    SAME = 1
    OPPOSITE = -1


class Propagation(str, Enum):
    DOMINO_LIKE = "domino_like"
    UNIFORM = "uniform"
    DEGENERATE = "degenerate"


class StableState(str, Enum):
    DEVELOPED = "developed"
    FLAT_FOLDED = "flat_folded"
    NEUTRAL = "neutral"
