from collections import deque
from collections.abc import Iterable
from fractions import Fraction
from itertools import combinations
from numbers import Rational

from .errors import GeometryError
from .models import HTriangle, Orientation, Point, Region, to_rat
from .slabs import critical_ys, slab_midpoints


Interval = tuple[Fraction, Fraction]
LatticeCell = tuple[int, int, Orientation]


def cross_section(tri: HTriangle, y: Fraction) -> Interval | None:
    """Closed intersection of the closed triangle with the line at height y."""
    if y < tri.y_min or y > tri.y_max:
        return None
    s = (y - tri.base_y) / (tri.apex_y - tri.base_y)
    left = tri.base_x_left + s * (tri.apex_x - tri.base_x_left)
    right = tri.base_x_right + s * (tri.apex_x - tri.base_x_right)
    return left, right


def orient(a: Point, b: Point, p: Point) -> Fraction:
    return (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0])


def contains_point(tri: HTriangle, p: Point) -> bool:
    p = (to_rat(p[0]), to_rat(p[1]))
    a, b, c = tri.vertices
    signs = (orient(a, b, p), orient(b, c, p), orient(c, a, p))
    return all(s >= 0 for s in signs) or all(s <= 0 for s in signs)


def in_region(region: Region, p: Point) -> bool:
    return any(contains_point(part, p) for part in region.parts)


def interiors_meet(first: HTriangle, second: HTriangle) -> bool:
    y_lo = max(first.y_min, second.y_min)
    y_hi = min(first.y_max, second.y_max)
    if y_lo >= y_hi or max(first.x_min, second.x_min) >= min(first.x_max, second.x_max):
        return False

    for y in slab_midpoints(critical_ys((first, second), y_lo, y_hi)):
        a = cross_section(first, y)
        b = cross_section(second, y)
        if min(a[1], b[1]) > max(a[0], b[0]):
            return True
    return False


def interiors_disjoint(region: Region) -> bool:
    return not any(interiors_meet(a, b) for a, b in combinations(region.parts, 2))


def lattice_triangle(i: int, j: int, orientation: Orientation, side: Rational = 1) -> HTriangle:
    """Cell (i, j) of the unit triangular lattice: row j, i-th Up cell or the Down cell to its right."""
    side = to_rat(side)
    x = Fraction(i) + Fraction(j, 2)
    if Orientation(orientation) == Orientation.UP:
        return HTriangle.up(x * side, j * side, side)
    return HTriangle.down((x + Fraction(1, 2)) * side, (j + 1) * side, side)


def lattice_neighbours(cell: LatticeCell) -> list[LatticeCell]:
    i, j, orientation = cell
    if Orientation(orientation) == Orientation.UP:
        return [(i - 1, j, Orientation.DOWN), (i, j, Orientation.DOWN), (i, j - 1, Orientation.DOWN)]
    return [(i, j, Orientation.UP), (i + 1, j, Orientation.UP), (i, j + 1, Orientation.UP)]


def is_edge_connected(cells: Iterable[LatticeCell]) -> bool:
    cells = {(i, j, Orientation(o)) for i, j, o in cells}
    if not cells:
        return False
    start = next(iter(cells))
    seen = {start}
    queue = deque([start])
    while queue:
        for neighbour in lattice_neighbours(queue.popleft()):
            if neighbour in cells and neighbour not in seen:
                seen.add(neighbour)
                queue.append(neighbour)
    return len(seen) == len(cells)


def trigon_region(cells: Iterable[LatticeCell], side: Rational = 1) -> Region:
    cells = sorted({(i, j, Orientation(o)) for i, j, o in cells})
    if not is_edge_connected(cells):
        raise GeometryError(f"Cells {cells} do not form an edge-connected trigon")
    return Region(tuple(lattice_triangle(i, j, o, side) for i, j, o in cells))
