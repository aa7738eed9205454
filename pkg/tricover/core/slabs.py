"""Critical heights: vertex ys plus crossings of non-parallel slanted edges."""

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .models import HTriangle


@dataclass(frozen=True)
class EdgeLine:
    # x(y) = x_at_zero + dx_dy * y on [y_lo, y_hi]
    dx_dy: Fraction
    x_at_zero: Fraction
    y_lo: Fraction
    y_hi: Fraction


def slanted_edge_lines(triangles: Iterable[HTriangle]) -> list[EdgeLine]:
    lines = []
    for tri in triangles:
        for (x0, y0), (x1, y1) in tri.slanted_edges:
            dx_dy = (x1 - x0) / (y1 - y0)
            lines.append(EdgeLine(dx_dy, x0 - dx_dy * y0, min(y0, y1), max(y0, y1)))
    return lines


def edge_crossing(a: EdgeLine, b: EdgeLine) -> Fraction | None:
    if a.dx_dy == b.dx_dy:
        return None
    y = (b.x_at_zero - a.x_at_zero) / (a.dx_dy - b.dx_dy)
    if max(a.y_lo, b.y_lo) <= y <= min(a.y_hi, b.y_hi):
        return y
    return None


def critical_ys(
    triangles: Iterable[HTriangle], y_lo: Fraction | None = None, y_hi: Fraction | None = None
) -> list[Fraction]:
    triangles = list(triangles)
    ys: set[Fraction] = set()
    for tri in triangles:
        ys.add(tri.base_y)
        ys.add(tri.apex_y)

    # Edges sharing a direction never cross; bucket by direction to skip those pairs.
    by_direction: dict[Fraction, list[EdgeLine]] = {}
    for line in slanted_edge_lines(triangles):
        by_direction.setdefault(line.dx_dy, []).append(line)

    for dir_a, dir_b in combinations(by_direction, 2):
        for a in by_direction[dir_a]:
            for b in by_direction[dir_b]:
                y = edge_crossing(a, b)
                if y is not None:
                    ys.add(y)

    if y_lo is not None:
        ys = {y for y in ys if y >= y_lo}
        ys.add(y_lo)
    if y_hi is not None:
        ys = {y for y in ys if y <= y_hi}
        ys.add(y_hi)
    return sorted(ys)


def slab_midpoints(ys: list[Fraction]) -> Iterator[Fraction]:
    for lower, upper in zip(ys, ys[1:]):
        yield (lower + upper) / 2
