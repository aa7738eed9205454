from fractions import Fraction
from numbers import Rational

from tricover.core.errors import InputError
from tricover.core.models import HTriangle, PieceRole, Variant, to_rat
from .base_construction import BaseConstruction, Placement


def grid(n: int, x0: Rational = 0, y0: Rational = 0) -> list[HTriangle]:
    """The n^2 unit triangles tiling the side-n Up triangle with base-left (x0, y0), row by row."""
    if n < 1:
        raise InputError(f"grid needs n >= 1, got {n}")
    x0, y0 = to_rat(x0), to_rat(y0)
    half = Fraction(1, 2)
    pieces = []
    for r in range(n):
        left = x0 + r * half
        pieces.extend(HTriangle.up(left + k, y0 + r) for k in range(n - r))
        pieces.extend(HTriangle.down(left + half + k, y0 + r + 1) for k in range(n - 1 - r))
    return pieces


class GridConstruction(BaseConstruction):
    MIN_N = 1

    @property
    def variant(self) -> Variant:
        return Variant.GRID

    def max_eps(self, n: int) -> Fraction:
        return Fraction(0)

    def place_pieces(self, n: int, eps: Fraction) -> list[Placement]:
        return [(tri, PieceRole.GRID_PART) for tri in grid(n)]
