"""Surface bookkeeping: topology invariants and boundary-word data.

The toolkit computes bracket tables only for the two surfaces with Euler
characteristic -1 (the three-holed sphere and the one-holed torus); any
compact orientable surface with boundary gets its dimension counts.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List

from .words import Word, REVERSED_COMMUTATOR_WORD


class RankTooSmall(ValueError):
    """The character variety dimension formula needs rank at least 2."""


class UnsupportedTopology(ValueError):
    """Boundary-word data exists only for the two chi = -1 surfaces."""


@dataclass(frozen=True)
class SurfaceTopology:
    """Compact orientable surface of genus g with n boundary circles."""

    genus: int
    boundaries: int

    def __post_init__(self):
        if self.genus < 0:
            raise ValueError("genus must be non-negative")
        if self.boundaries < 1:
            raise ValueError("at least one boundary component required")


TRINION = SurfaceTopology(genus=0, boundaries=3)
ONE_HOLED_TORUS = SurfaceTopology(genus=1, boundaries=1)


def rank(s: SurfaceTopology) -> int:
    """Rank of the (free) fundamental group: 2g + n - 1."""
    return 2 * s.genus + s.boundaries - 1


def euler_char(s: SurfaceTopology) -> int:
    return 2 - 2 * s.genus - s.boundaries


def dim_character_variety(s: SurfaceTopology) -> int:
    """Krull dimension 8(r - 1) of the SL(3,C) character variety."""
    r = rank(s)
    if r <= 1:
        raise RankTooSmall(f"rank {r} surface has a trivial moduli dimension count")
    return 8 * (r - 1)


def generic_leaf_dimension(s: SurfaceTopology) -> int:
    """Dimension of a generic symplectic leaf: 16(g - 1) + 6n."""
    return 16 * (s.genus - 1) + 6 * s.boundaries


def surface_name(s: SurfaceTopology) -> str:
    if s == TRINION:
        return "trinion"
    if s == ONE_HOLED_TORUS:
        return "torus"
    raise UnsupportedTopology(f"no bracket data for genus {s.genus}, {s.boundaries} boundaries")


def boundary_words(s: SurfaceTopology) -> List[Word]:
    """Words of the boundary curves in the fixed rank-2 presentation."""
    if s == TRINION:
        # x3 x2 x1 = 1, so the third boundary is x3 = (x2 x1)^-1
        return [(1,), (2,), (-1, -2)]
    if s == ONE_HOLED_TORUS:
        # boundary is the inverse of the commutator of the two handles
        return [REVERSED_COMMUTATOR_WORD]
    raise UnsupportedTopology(f"no boundary words for genus {s.genus}, {s.boundaries} boundaries")
