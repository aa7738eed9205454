"""Exact right-continuous piecewise-linear functions on [0, 1), kept in canonical piece tables."""

import math

from bisect import bisect_right
from collections.abc import Callable, Iterable
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from .errors import InputError
from .models import to_rat


ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class Piece:
    start: Fraction
    value: Fraction
    slope: Fraction


@dataclass(frozen=True)
class Minimum:
    value: Fraction
    argmin: Fraction
    attained: bool


@dataclass(frozen=True)
class Comparison:
    holds: bool
    witness: Fraction | None = None


@dataclass(frozen=True)
class PLFunc:
    pieces: tuple[Piece, ...]

    def __post_init__(self) -> None:
        pieces = tuple(self.pieces)
        if not pieces or pieces[0].start != 0:
            raise InputError("A PLFunc needs a first piece starting at 0")
        starts = [piece.start for piece in pieces]
        if any(a >= b for a, b in zip(starts, starts[1:])) or starts[-1] >= 1:
            raise InputError(f"Breakpoints must be strictly increasing in [0, 1): {starts}")
        object.__setattr__(self, "pieces", canonical_pieces(pieces))

    @classmethod
    def from_rows(cls, rows: Iterable[tuple[Rational, Rational, Rational]]) -> "PLFunc":
        return cls(tuple(Piece(to_rat(start), to_rat(value), to_rat(slope)) for start, value, slope in rows))

    @classmethod
    def constant(cls, c: Rational) -> "PLFunc":
        return cls((Piece(ZERO, to_rat(c), ZERO),))

    @classmethod
    def linear(cls, slope: Rational, intercept: Rational) -> "PLFunc":
        return cls((Piece(ZERO, to_rat(intercept), to_rat(slope)),))

    @classmethod
    def window(cls, a: Fraction, b: Fraction, value_at_a: Fraction, slope: Fraction) -> "PLFunc":
        """value_at_a + slope*(t - a) on [a, b) inside [0, 1], zero elsewhere."""
        if not 0 <= a < b <= 1:
            raise InputError(f"Window [{a}, {b}) is not inside [0, 1]")
        rows = []
        if a > 0:
            rows.append(Piece(ZERO, ZERO, ZERO))
        rows.append(Piece(a, value_at_a, slope))
        if b < 1:
            rows.append(Piece(b, ZERO, ZERO))
        return cls(tuple(rows))

    @property
    def breakpoints(self) -> tuple[Fraction, ...]:
        return tuple(piece.start for piece in self.pieces)

    def piece_end(self, index: int) -> Fraction:
        return self.pieces[index + 1].start if index + 1 < len(self.pieces) else ONE

    def piece_index(self, t: Fraction) -> int:
        if not 0 <= t < 1:
            raise InputError(f"t={t} is outside [0, 1)")
        return bisect_right(self.breakpoints, t) - 1

    def __call__(self, t: Rational) -> Fraction:
        t = to_rat(t)
        piece = self.pieces[self.piece_index(t)]
        return piece.value + piece.slope * (t - piece.start)

    def slope_at(self, t: Fraction) -> Fraction:
        return self.pieces[self.piece_index(t)].slope

    def left_limit(self, t: Rational) -> Fraction:
        """lim f(s) as s -> t from the left, for t in (0, 1]."""
        t = to_rat(t)
        if not 0 < t <= 1:
            raise InputError(f"Left limit needs t in (0, 1], got {t}")
        index = len(self.pieces) - 1 if t == 1 else bisect_right(self.breakpoints, t) - 1
        if self.pieces[index].start == t:
            index -= 1
        piece = self.pieces[index]
        return piece.value + piece.slope * (t - piece.start)

    def end_limits(self) -> list[tuple[Fraction, Fraction]]:
        return [
            (self.piece_end(i), piece.value + piece.slope * (self.piece_end(i) - piece.start))
            for i, piece in enumerate(self.pieces)
        ]

    def combine(self, other: "PLFunc", op: Callable[[Fraction, Fraction], Fraction]) -> "PLFunc":
        starts = sorted(set(self.breakpoints) | set(other.breakpoints))
        return PLFunc(
            tuple(Piece(t, op(self(t), other(t)), op(self.slope_at(t), other.slope_at(t))) for t in starts)
        )

    def __add__(self, other: "PLFunc") -> "PLFunc":
        return self.combine(other, lambda a, b: a + b)

    def __sub__(self, other: "PLFunc") -> "PLFunc":
        return self.combine(other, lambda a, b: a - b)

    def __neg__(self) -> "PLFunc":
        return PLFunc(tuple(Piece(p.start, -p.value, -p.slope) for p in self.pieces))

    def add_const(self, c: Rational) -> "PLFunc":
        c = to_rat(c)
        return PLFunc(tuple(Piece(p.start, p.value + c, p.slope) for p in self.pieces))

    def scale(self, k: Rational) -> "PLFunc":
        k = to_rat(k)
        return PLFunc(tuple(Piece(p.start, p.value * k, p.slope * k) for p in self.pieces))

    def integral(self) -> Fraction:
        total = ZERO
        for i, piece in enumerate(self.pieces):
            length = self.piece_end(i) - piece.start
            total += piece.value * length + piece.slope * length * length / 2
        return total

    def minimum(self) -> Minimum:
        """Exact infimum over [0, 1), preferring an attained value on ties."""
        best_value, best_arg = min((p.value, p.start) for p in self.pieces)
        limit_value, limit_arg = min(((value, t) for t, value in self.end_limits()), key=lambda vt: vt[0])
        if limit_value < best_value:
            return Minimum(limit_value, limit_arg, attained=False)
        return Minimum(best_value, best_arg, attained=True)

    def point_below(self, level: Fraction) -> Fraction | None:
        """Some t with f(t) < level, or None when f >= level everywhere."""
        for i, piece in enumerate(self.pieces):
            if piece.value < level:
                return piece.start
            end = self.piece_end(i)
            end_value = piece.value + piece.slope * (end - piece.start)
            if end_value < level:
                # Approach the piece end from the left far enough to stay under the level.
                step = (end - piece.start) / 2
                if piece.slope < 0:
                    step = min(step, (level - end_value) / (-piece.slope) / 2)
                return end - step
        return None

    def leq(self, other: "PLFunc") -> Comparison:
        """Decide self(t) <= other(t) on all of [0, 1); the witness has self(t) > other(t)."""
        witness = (other - self).point_below(ZERO)
        return Comparison(holds=witness is None, witness=witness)


def canonical_pieces(pieces: tuple[Piece, ...]) -> tuple[Piece, ...]:
    merged = [pieces[0]]
    for piece in pieces[1:]:
        last = merged[-1]
        if piece.slope == last.slope and piece.value == last.value + last.slope * (piece.start - last.start):
            continue
        merged.append(piece)
    return tuple(merged)


def fold_segment(y_lo: Rational, y_hi: Rational, value_at_lo: Rational, slope: Rational) -> PLFunc:
    # t -> sum over integers k of F(t + k), F affine on [y_lo, y_hi) and zero elsewhere
    y_lo, y_hi, value_at_lo, slope = to_rat(y_lo), to_rat(y_hi), to_rat(value_at_lo), to_rat(slope)
    if y_lo >= y_hi:
        raise InputError(f"fold_segment needs y_lo < y_hi, got [{y_lo}, {y_hi})")

    total = PLFunc.constant(ZERO)
    for k in range(math.floor(y_lo), math.ceil(y_hi)):
        lo = max(y_lo, Fraction(k))
        hi = min(y_hi, Fraction(k + 1))
        if lo >= hi:
            continue
        start_value = value_at_lo + slope * (lo - y_lo)
        total = total + PLFunc.window(lo - k, hi - k, start_value, slope)
    return total
