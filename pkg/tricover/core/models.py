from dataclasses import dataclass, field
try:
    from enum import StrEnum
except ImportError:  # Python < 3.11
    from enum import Enum

    class StrEnum(str, Enum):
        __str__ = str.__str__
        __format__ = str.__format__
from fractions import Fraction
from numbers import Rational

from .errors import GeometryError, InputError


Rat = Fraction
Point = tuple[Fraction, Fraction]


def to_rat(value: Rational | int | str) -> Fraction:
    if isinstance(value, float):
        raise InputError(f"Refusing float {value!r}: all quantities must be exact")
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError, TypeError) as e:
        raise InputError(f"Not an exact rational: {value!r} ({e})") from e


def frac_part(value: Fraction) -> Fraction:
    return value - (value.numerator // value.denominator)


class Orientation(StrEnum):
    UP = "up"
    DOWN = "down"


class PieceRole(StrEnum):
    PIECE = "piece"
    GRID_PART = "grid-part"
    INTERLEAVE_PART = "interleave-part"
    FINAL_PIECES = "final-pieces"


@dataclass(frozen=True)
class HTriangle:
    """A triangle with a horizontal base, in stretched coordinates.

    A unit equilateral triangle has base 1 and height 1 here; the true picture is
    recovered by scaling y by sqrt(3)/2, which only the SVG renderer does.
    """

    base_y: Fraction
    base_x_left: Fraction
    base_len: Fraction
    apex_x: Fraction
    apex_y: Fraction

    def __post_init__(self) -> None:
        for name in ("base_y", "base_x_left", "base_len", "apex_x", "apex_y"):
            object.__setattr__(self, name, to_rat(getattr(self, name)))
        if self.base_len <= 0:
            raise GeometryError(f"Degenerate triangle: base_len={self.base_len}")
        if self.apex_y == self.base_y:
            raise GeometryError(f"Degenerate triangle: apex on base line y={self.base_y}")

    @classmethod
    def up(cls, x: Rational, y: Rational, side: Rational = 1) -> "HTriangle":
        x, y, side = to_rat(x), to_rat(y), to_rat(side)
        return cls(base_y=y, base_x_left=x, base_len=side, apex_x=x + side / 2, apex_y=y + side)

    @classmethod
    def down(cls, x: Rational, y: Rational, side: Rational = 1) -> "HTriangle":
        x, y, side = to_rat(x), to_rat(y), to_rat(side)
        return cls(base_y=y, base_x_left=x, base_len=side, apex_x=x + side / 2, apex_y=y - side)

    @property
    def orientation(self) -> Orientation:
        return Orientation.UP if self.apex_y > self.base_y else Orientation.DOWN

    @property
    def height(self) -> Fraction:
        return abs(self.apex_y - self.base_y)

    @property
    def base_x_right(self) -> Fraction:
        return self.base_x_left + self.base_len

    @property
    def y_min(self) -> Fraction:
        return min(self.base_y, self.apex_y)

    @property
    def y_max(self) -> Fraction:
        return max(self.base_y, self.apex_y)

    @property
    def x_min(self) -> Fraction:
        return min(self.base_x_left, self.apex_x)

    @property
    def x_max(self) -> Fraction:
        return max(self.base_x_right, self.apex_x)

    @property
    def is_unit(self) -> bool:
        return self.base_len == 1 and self.height == 1

    @property
    def vertices(self) -> tuple[Point, Point, Point]:
        return (
            (self.base_x_left, self.base_y),
            (self.base_x_right, self.base_y),
            (self.apex_x, self.apex_y),
        )

    @property
    def slanted_edges(self) -> tuple[tuple[Point, Point], tuple[Point, Point]]:
        apex = (self.apex_x, self.apex_y)
        return (((self.base_x_left, self.base_y), apex), ((self.base_x_right, self.base_y), apex))

    def scaled(self, factor: Rational) -> "HTriangle":
        factor = to_rat(factor)
        if factor <= 0:
            raise InputError(f"Scale factor must be positive, got {factor}")
        return HTriangle(
            base_y=self.base_y * factor,
            base_x_left=self.base_x_left * factor,
            base_len=self.base_len * factor,
            apex_x=self.apex_x * factor,
            apex_y=self.apex_y * factor,
        )

    def translated(self, dx: Rational, dy: Rational) -> "HTriangle":
        dx, dy = to_rat(dx), to_rat(dy)
        return HTriangle(
            base_y=self.base_y + dy,
            base_x_left=self.base_x_left + dx,
            base_len=self.base_len,
            apex_x=self.apex_x + dx,
            apex_y=self.apex_y + dy,
        )


@dataclass(frozen=True)
class Region:
    parts: tuple[HTriangle, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "parts", tuple(self.parts))
        if not self.parts:
            raise GeometryError("Region must have at least one part")

    @property
    def y_min(self) -> Fraction:
        return min(part.y_min for part in self.parts)

    @property
    def y_max(self) -> Fraction:
        return max(part.y_max for part in self.parts)

    @property
    def x_min(self) -> Fraction:
        return min(part.x_min for part in self.parts)

    @property
    def x_max(self) -> Fraction:
        return max(part.x_max for part in self.parts)


@dataclass(frozen=True)
class Covering:
    target: Region
    pieces: tuple[HTriangle, ...]
    label: str = ""
    roles: tuple[PieceRole, ...] = field(default=())

    def __post_init__(self) -> None:
        object.__setattr__(self, "pieces", tuple(self.pieces))
        roles = tuple(PieceRole(role) for role in self.roles) or (PieceRole.PIECE,) * len(self.pieces)
        if len(roles) != len(self.pieces):
            raise GeometryError(f"Got {len(roles)} roles for {len(self.pieces)} pieces")
        object.__setattr__(self, "roles", roles)

    def require_pieces(self) -> None:
        if not self.pieces:
            raise InputError(f"Covering '{self.label}' has no pieces")

    def scaled(self, factor: Rational) -> "Covering":
        return Covering(
            target=Region(tuple(part.scaled(factor) for part in self.target.parts)),
            pieces=tuple(piece.scaled(factor) for piece in self.pieces),
            label=self.label,
            roles=self.roles,
        )

    def without_piece(self, index: int) -> "Covering":
        pieces = self.pieces[:index] + self.pieces[index + 1 :]
        roles = self.roles[:index] + self.roles[index + 1 :]
        return Covering(target=self.target, pieces=pieces, label=f"{self.label} minus piece {index}", roles=roles)


class Variant(StrEnum):
    GRID = "grid"
    CS1 = "cs1"
    CS2 = "cs2"
    PLUS3 = "plus3"
