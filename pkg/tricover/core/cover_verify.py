import logging
import math

from bisect import bisect_right
from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from tricover.utils import parallel_map, worker_count
from .errors import InputError
from .geometry import Interval, contains_point, cross_section
from .models import Covering, HTriangle, Point, to_rat
from .slabs import critical_ys, slab_midpoints


@dataclass(frozen=True)
class Witness:
    y: Fraction
    x_lo: Fraction
    x_hi: Fraction

    @property
    def point(self) -> Point:
        return (self.x_lo + self.x_hi) / 2, self.y


@dataclass(frozen=True)
class VerifyReport:
    covered: bool
    witness: Witness | None
    slab_count: int
    critical_ys: tuple[Fraction, ...]

    def to_dict(self) -> dict[str, object]:
        return {
            "covered": self.covered,
            "witness": None
            if self.witness is None
            else {"y": str(self.witness.y), "x_interval": [str(self.witness.x_lo), str(self.witness.x_hi)]},
            "slab_count": self.slab_count,
            "critical_ys": [str(y) for y in self.critical_ys],
        }


def merge_intervals(intervals: Iterable[Interval]) -> list[Interval]:
    merged: list[Interval] = []
    for lo, hi in sorted(intervals):
        if merged and lo <= merged[-1][1]:
            if hi > merged[-1][1]:
                merged[-1] = (merged[-1][0], hi)
        else:
            merged.append((lo, hi))
    return merged


def first_gap(merged: list[Interval], a: Fraction, b: Fraction) -> Interval | None:
    """Leftmost open interval of [a, b] missed by the merged closed intervals."""
    x = a
    for lo, hi in merged:
        if hi < x:
            continue
        if lo > x:
            return x, min(lo, b)
        if hi >= b:
            return None
        x = hi
    return x, b


def sections(triangles: Iterable[HTriangle], y: Fraction) -> list[Interval]:
    return [iv for iv in (cross_section(tri, y) for tri in triangles) if iv is not None]


class CoverageVerifier:
    def __init__(self, max_workers: int | None = None) -> None:
        self.logger = logging.getLogger(self.__class__.__name__)
        self.max_workers = max_workers if max_workers is not None else worker_count()

    def check_slab(self, covering: Covering, y: Fraction) -> Witness | None:
        cover = merge_intervals(sections(covering.pieces, y))
        for a, b in sorted(sections(covering.target.parts, y)):
            gap = first_gap(cover, a, b)
            if gap is not None:
                return Witness(y, gap[0], gap[1])
        return None

    def verify(self, covering: Covering) -> VerifyReport:
        covering.require_pieces()
        target = covering.target
        ys = critical_ys(target.parts + covering.pieces, target.y_min, target.y_max)
        # Coverage is constant on each open slab; closed pieces carry it to the critical heights.
        midpoints = list(slab_midpoints(ys))
        self.logger.debug(f"'{covering.label}': {len(ys)} critical heights, {len(midpoints)} slabs")

        witness = None
        if self.max_workers <= 1:
            for y in midpoints:
                witness = self.check_slab(covering, y)
                if witness is not None:
                    break
        else:
            # Lowest failing slab wins, whatever order the workers finish in.
            results = parallel_map(lambda y: self.check_slab(covering, y), midpoints, self.max_workers)
            witness = next((w for w in results if w is not None), None)

        report = VerifyReport(witness is None, witness, len(midpoints), tuple(ys))
        if report.covered:
            self.logger.info(f"'{covering.label}' is covered ({report.slab_count} slabs)")
        else:
            self.logger.info(f"'{covering.label}' is not covered: witness {witness}")
        return report

    def sample_falsify(self, covering: Covering, grid_denominator: int) -> Point | None:
        """First grid point (i/d, j/d) of the target that no piece contains; never certifies."""
        if grid_denominator < 1:
            raise InputError(f"grid_denominator must be at least 1, got {grid_denominator}")
        d = grid_denominator
        target = covering.target

        for j in range(math.ceil(target.y_min * d), math.floor(target.y_max * d) + 1):
            y = Fraction(j, d)
            cover = merge_intervals(sections(covering.pieces, y))
            starts = [lo for lo, _ in cover]
            for a, b in sorted(sections(target.parts, y)):
                i = math.ceil(a * d)
                while Fraction(i, d) <= b:
                    x = Fraction(i, d)
                    k = bisect_right(starts, x) - 1
                    if k < 0 or cover[k][1] < x:
                        self.logger.info(f"'{covering.label}': uncovered grid point ({x}, {y})")
                        return x, y
                    # Skip every grid point inside the covering interval.
                    i = math.floor(cover[k][1] * d) + 1
        return None


def verify(covering: Covering) -> VerifyReport:
    return CoverageVerifier().verify(covering)


def sample_falsify(covering: Covering, grid_denominator: int) -> Point | None:
    return CoverageVerifier().sample_falsify(covering, grid_denominator)


def six_landmarks(side: Rational, x0: Rational = 0, y0: Rational = 0) -> list[Point]:
    """Vertices and edge midpoints of the Up triangle of the given side at (x0, y0)."""
    s, x0, y0 = to_rat(side), to_rat(x0), to_rat(y0)
    return [
        (x0, y0),
        (x0 + s, y0),
        (x0 + s / 2, y0 + s),
        (x0 + s / 2, y0),
        (x0 + 3 * s / 4, y0 + s / 2),
        (x0 + s / 4, y0 + s / 2),
    ]


def landmarks_covered(tri: HTriangle, landmarks: Iterable[Point]) -> int:
    return sum(1 for p in landmarks if contains_point(tri, p))


def covers_at_most_one_landmark(tri: HTriangle, landmarks: Iterable[Point]) -> bool:
    if tri.base_len > 1 or tri.height > 1:
        raise InputError(f"Landmark test needs base and height at most 1, got {tri.base_len} x {tri.height}")
    return landmarks_covered(tri, landmarks) <= 1