from fractions import Fraction

from tricover.core.models import HTriangle, PieceRole, Variant
from .base_construction import BaseConstruction, Placement
from .grid import grid


def interleave(first_left: Fraction, ups: int, downs: int, eps: Fraction) -> list[Placement]:
    """Up triangles on y=0 stepping by 1-eps, each Down flush with the Up on its right.

    Downs have their base on y = 1+eps so they close the strip of height 1+eps.
    """
    step = 1 - eps
    top = 1 + eps
    placements = []
    for k in range(ups):
        placements.append((HTriangle.up(first_left + k * step, 0), PieceRole.INTERLEAVE_PART))
    for k in range(downs):
        placements.append((HTriangle.down(first_left + k * step + step / 2, top), PieceRole.INTERLEAVE_PART))
    return placements


def final_pieces(shift: Fraction, eps: Fraction) -> list[Placement]:
    # The parallelogram left over at the bottom-left corner, split into an Up and a Down.
    return [
        (HTriangle.up(0, 0), PieceRole.FINAL_PIECES),
        (HTriangle.down(shift + (eps - 1) / 2, 1 + eps), PieceRole.FINAL_PIECES),
    ]


def top_grid(n: int, eps: Fraction) -> list[Placement]:
    return [(tri, PieceRole.GRID_PART) for tri in grid(n - 1, (1 + eps) / 2, 1 + eps)]


class InterleavedConstruction(BaseConstruction):
    """n^2 + 2 unit triangles over the side n+eps triangle for eps <= 1/(n+1).

    The top (n-1)-grid sits on the strip of height 1+eps, which is covered by 2n-1
    triangles interleaved from the right plus two pieces at the left corner.
    """

    @property
    def variant(self) -> Variant:
        return Variant.CS1

    def max_eps(self, n: int) -> Fraction:
        return Fraction(1, n + 1)

    def place_pieces(self, n: int, eps: Fraction) -> list[Placement]:
        shift = n * eps
        return top_grid(n, eps) + interleave(shift, n, n - 1, eps) + final_pieces(shift, eps)
