"""Group generated by t -> {t - a} and t -> 1 - {t - a}, stored as offset + slope*t + jumps."""

import logging

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

from sortedcontainers import SortedDict

from .errors import ConsistencyError, InputError
from .models import HTriangle, Orientation, frac_part, to_rat
from .plfunc import Minimum, PLFunc, Piece


logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class SawtoothElt:
    slope: Fraction
    jumps: SortedDict = field(default_factory=SortedDict)
    offset: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "slope", to_rat(self.slope))
        object.__setattr__(self, "offset", to_rat(self.offset))
        jumps = SortedDict()
        for position, magnitude in dict(self.jumps).items():
            position, magnitude = to_rat(position), to_rat(magnitude)
            if not 0 < position < 1:
                raise InputError(f"Jump position {position} must lie in (0, 1)")
            if magnitude != 0:
                jumps[position] = magnitude
        object.__setattr__(self, "jumps", jumps)

    @classmethod
    def raw(cls, slope: Rational, jumps: dict | None = None, offset: Rational = 0) -> "SawtoothElt":
        return cls(slope=slope, jumps=SortedDict(jumps or {}), offset=offset)

    @classmethod
    def from_plfunc(cls, f: PLFunc) -> "SawtoothElt":
        """Read a PLFunc with one slope throughout as offset, slope and jumps."""
        slopes = {piece.slope for piece in f.pieces}
        if len(slopes) != 1:
            raise InputError(f"Pieces have different slopes {sorted(slopes)}; not an element")
        jumps = SortedDict({p.start: p.value - f.left_limit(p.start) for p in f.pieces[1:]})
        return cls(slope=slopes.pop(), jumps=jumps, offset=f.pieces[0].value)

    @classmethod
    def zero(cls) -> "SawtoothElt":
        return cls(slope=Fraction(0))

    @classmethod
    def one(cls) -> "SawtoothElt":
        return generator_down(0) + generator_up(0)

    def __call__(self, t: Rational) -> Fraction:
        t = to_rat(t)
        if not 0 <= t < 1:
            raise InputError(f"t={t} is outside [0, 1)")
        return self.offset + self.slope * t + sum((self.jumps[p] for p in self.jumps.irange(maximum=t)), Fraction(0))

    def __add__(self, other: "SawtoothElt") -> "SawtoothElt":
        jumps = SortedDict(self.jumps)
        for position, magnitude in other.jumps.items():
            jumps[position] = jumps.get(position, 0) + magnitude
        return SawtoothElt(self.slope + other.slope, jumps, self.offset + other.offset)

    def __neg__(self) -> "SawtoothElt":
        return SawtoothElt(-self.slope, SortedDict({p: -k for p, k in self.jumps.items()}), -self.offset)

    def __sub__(self, other: "SawtoothElt") -> "SawtoothElt":
        return self + (-other)

    def integral(self) -> Fraction:
        return self.offset + self.slope / 2 + sum((k * (1 - p) for p, k in self.jumps.items()), Fraction(0))

    def to_plfunc(self) -> PLFunc:
        pieces = [Piece(Fraction(0), self.offset, self.slope)]
        level = self.offset
        for position, magnitude in self.jumps.items():
            level += magnitude
            pieces.append(Piece(position, level + self.slope * position, self.slope))
        return PLFunc(tuple(pieces))

    def minimum(self) -> Minimum:
        return self.to_plfunc().minimum()


def generator_down(alpha: Rational) -> SawtoothElt:
    """t -> {t - alpha}, the projection function of a unit Down triangle at height alpha."""
    alpha = to_rat(alpha)
    if not 0 <= alpha < 1:
        raise InputError(f"Generator position must lie in [0, 1), got {alpha}")
    if alpha == 0:
        return SawtoothElt(slope=Fraction(1))
    return SawtoothElt(slope=Fraction(1), jumps=SortedDict({alpha: -1}), offset=1 - alpha)


def generator_up(alpha: Rational) -> SawtoothElt:
    """t -> 1 - {t - alpha}, the projection function of a unit Up triangle at height alpha."""
    alpha = to_rat(alpha)
    if not 0 <= alpha < 1:
        raise InputError(f"Generator position must lie in [0, 1), got {alpha}")
    if alpha == 0:
        return SawtoothElt(slope=Fraction(-1), offset=Fraction(1))
    return SawtoothElt(slope=Fraction(-1), jumps=SortedDict({alpha: 1}), offset=alpha)


def generator_for(tri: HTriangle) -> SawtoothElt:
    if not tri.is_unit:
        raise InputError(f"Only base-1 height-1 triangles map to a generator, got {tri}")
    alpha = frac_part(tri.base_y)
    return generator_up(alpha) if tri.orientation == Orientation.UP else generator_down(alpha)


def sawtooth_positions(a: int, c: Fraction) -> list[Fraction]:
    # Points in (0, 1) where a*t + c crosses an integer.
    last = a if c > 0 else a - 1
    return [(m - c) / a for m in range(1, last + 1)]


def fractional_affine(a: int, c: Rational) -> SawtoothElt:
    """t -> {a*t + c} for a positive integer a and c in [0, 1)."""
    c = to_rat(c)
    if a <= 0 or not 0 <= c < 1:
        raise InputError(f"Need a > 0 and c in [0, 1), got a={a}, c={c}")
    return SawtoothElt(Fraction(a), SortedDict({p: -1 for p in sawtooth_positions(a, c)}), c)


def reflected_fractional_affine(a: int, c: Rational) -> SawtoothElt:
    """t -> 1 - {a*t + c} for a positive integer a and c in [0, 1)."""
    c = to_rat(c)
    if a <= 0 or not 0 <= c < 1:
        raise InputError(f"Need a > 0 and c in [0, 1), got a={a}, c={c}")
    return SawtoothElt(Fraction(-a), SortedDict({p: 1 for p in sawtooth_positions(a, c)}), 1 - c)


class Lemma3Check(StrEnum):
    INTEGER_SLOPE = "ii"
    INTEGER_JUMPS = "iii"
    HALF_INTEGER_INTEGRAL = "iv"
    INTEGRAL_PARITY = "iv-parity"


@dataclass(frozen=True)
class Lemma3Report:
    violations: tuple[Lemma3Check, ...]
    integral: Fraction
    doubled_integral: Fraction

    @property
    def passed(self) -> bool:
        return not self.violations


def validate_lemma3(e: SawtoothElt) -> Lemma3Report:
    # Right-continuity holds for every stored element by construction.
    violations = []
    integral = e.integral()
    doubled = 2 * integral
    if e.slope.denominator != 1:
        violations.append(Lemma3Check.INTEGER_SLOPE)
    if any(k.denominator != 1 for k in e.jumps.values()):
        violations.append(Lemma3Check.INTEGER_JUMPS)
    if doubled.denominator != 1:
        violations.append(Lemma3Check.HALF_INTEGER_INTEGRAL)
    elif e.slope.denominator == 1 and (doubled.numerator - e.slope.numerator) % 2 != 0:
        violations.append(Lemma3Check.INTEGRAL_PARITY)
    return Lemma3Report(tuple(violations), integral, doubled)


class SawtoothFamily(StrEnum):
    UP = "up"
    DOWN = "down"
    NOT_APPLICABLE = "not-applicable"


@dataclass(frozen=True)
class Lemma4Result:
    family: SawtoothFamily
    a: int | None = None
    c: Fraction | None = None
    reason: str = ""

    @property
    def applicable(self) -> bool:
        return self.family != SawtoothFamily.NOT_APPLICABLE

    def reconstruct(self) -> SawtoothElt:
        if self.family == SawtoothFamily.UP:
            return fractional_affine(self.a, self.c)
        if self.family == SawtoothFamily.DOWN:
            return reflected_fractional_affine(self.a, self.c)
        raise InputError(f"Nothing to reconstruct: {self.reason}")


def classify_lemma4(e: SawtoothElt) -> Lemma4Result:
    """Recognise a nonnegative group element of integral 1/2 as {at+c} (UP) or 1-{at+c} (DOWN)."""
    report = validate_lemma3(e)
    if not report.passed:
        violated = ", ".join(check.value for check in report.violations)
        return Lemma4Result(SawtoothFamily.NOT_APPLICABLE, reason=f"not a group element (fails {violated})")
    if report.integral != HALF:
        return Lemma4Result(SawtoothFamily.NOT_APPLICABLE, reason=f"integral is {report.integral}, not 1/2")
    lowest = e.minimum()
    if lowest.value < 0:
        return Lemma4Result(SawtoothFamily.NOT_APPLICABLE, reason=f"negative near t={lowest.argmin}")

    slope = e.slope.numerator
    if slope > 0:
        result = Lemma4Result(SawtoothFamily.UP, a=slope, c=e.offset)
    elif slope < 0:
        result = Lemma4Result(SawtoothFamily.DOWN, a=-slope, c=1 - e.offset)
    else:
        raise ConsistencyError("Slope 0 with integral 1/2 passed the parity check")

    if not 0 <= result.c < 1 or result.reconstruct().to_plfunc() != e.to_plfunc():
        raise ConsistencyError(f"Element with integral 1/2 and minimum {lowest.value} is not a sawtooth: {e}")
    logger.debug(f"Classified sawtooth as {result.family} a={result.a} c={result.c}")
    return result


@dataclass(frozen=True)
class JumpInequalityReport:
    gap: Minimum
    integral_g: Fraction
    integral_h: Fraction
    witness: Fraction | None = None
    reason: str = ""

    @property
    def hypothesis_holds(self) -> bool:
        return self.gap.value > 0

    @property
    def conclusion_holds(self) -> bool:
        return self.integral_g + 1 <= self.integral_h


def corollary3_check(g: SawtoothElt, h: SawtoothElt) -> JumpInequalityReport:
    """A uniform positive gap g + delta <= h forces the integrals apart by at least 1."""
    for name, element in (("g", g), ("h", h)):
        report = validate_lemma3(element)
        if not report.passed:
            raise InputError(f"{name} is not a group element (fails {[c.value for c in report.violations]})")

    difference = h - g
    gap = difference.minimum()
    witness, reason = None, ""
    if gap.value <= 0 and gap.attained:
        witness, reason = gap.argmin, f"h - g = {gap.value} at t={gap.argmin}"
    elif gap.value < 0:
        witness = difference.to_plfunc().point_below(Fraction(0))
        reason = f"h - g < 0 at t={witness}"
    elif gap.value == 0:
        reason = f"h - g has infimum 0, approached but not attained towards t={gap.argmin}"

    result = JumpInequalityReport(gap, g.integral(), h.integral(), witness, reason)
    if result.hypothesis_holds and not result.conclusion_holds:
        raise ConsistencyError(
            f"Gap {result.gap.value} > 0 but integrals {result.integral_g} + 1 > {result.integral_h}"
        )
    return result
