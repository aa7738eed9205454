from fractions import Fraction

from tricover.core.models import PieceRole, Variant
from .base_construction import BaseConstruction, Placement
from .grid import grid
from .interleaved import final_pieces, interleave, top_grid


class PlusThreeConstruction(BaseConstruction):
    """n^2 + 3 unit triangles for eps <= 1/n.

    Like the interleaved covering, but the three rightmost strip pieces become a side-2
    triangle flush with the target's right edge, which saves one eps of horizontal drift.
    """

    @property
    def variant(self) -> Variant:
        return Variant.PLUS3

    def max_eps(self, n: int) -> Fraction:
        return Fraction(1, n)

    def place_pieces(self, n: int, eps: Fraction) -> list[Placement]:
        shift = (n - 1) * eps
        corner = [(tri, PieceRole.GRID_PART) for tri in grid(2, n + eps - 2, 0)]
        return top_grid(n, eps) + corner + interleave(shift, n - 2, n - 2, eps) + final_pieces(shift, eps)
