from fractions import Fraction
from numbers import Rational

from tricover.core.errors import ConsistencyError, InputError
from tricover.core.models import HTriangle, PieceRole, Variant, to_rat
from .base_construction import BaseConstruction, Placement


def layer_deviations(n: int, eps: Rational) -> list[Fraction]:
    """delta_1..delta_{n-1}: how far each layer's triangles drift apart from their neighbours."""
    eps = to_rat(eps)
    if n < 2:
        raise InputError(f"Layered covering needs n >= 2, got {n}")
    deltas = [eps / (n - 1)]
    for j in range(1, n - 1):
        deltas.append((n - j + 1) * deltas[-1] / (n - j - 1))

    for j, delta in enumerate(deltas, start=1):
        if delta != Fraction(n * (n - 1), (n - j + 1) * (n - j)) * deltas[0]:
            raise ConsistencyError(f"delta_{j} = {delta} disagrees with its closed form")
    return deltas


class LayeredConstruction(BaseConstruction):
    """n^2 + 2 unit triangles for eps <= 1/(2n), built in n-1 slightly misaligned layers plus a cap."""

    @property
    def variant(self) -> Variant:
        return Variant.CS2

    def max_eps(self, n: int) -> Fraction:
        return Fraction(1, 2 * n)

    def place_pieces(self, n: int, eps: Fraction) -> list[Placement]:
        placements = []
        level = Fraction(0)
        for j, delta in enumerate(layer_deviations(n, eps), start=1):
            top = level + 1 - delta
            lefts = [level / 2 + k * (1 + delta) for k in range(n + 1 - j)]
            placements.extend((HTriangle.up(x, level), PieceRole.INTERLEAVE_PART) for x in lefts)
            placements.extend(
                (HTriangle.down(x + Fraction(1, 2) + delta / 2, top), PieceRole.INTERLEAVE_PART) for x in lefts[:-1]
            )
            level = top
        self.logger.debug(f"cs2(n={n}, eps={eps}): cap starts at y={level}")

        placements.extend(
            [
                (HTriangle.up(level / 2, level), PieceRole.FINAL_PIECES),
                (HTriangle.up(level / 2 + n * eps, level), PieceRole.FINAL_PIECES),
                (HTriangle.down(level / 2 + n * eps / 2, n + eps), PieceRole.FINAL_PIECES),
            ]
        )
        return placements
