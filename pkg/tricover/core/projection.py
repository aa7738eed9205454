"""Horizontal-projection functions of H-triangles and the decisions built on them."""

import logging

from dataclasses import dataclass
try:
    from enum import StrEnum
except ImportError:  # Python < 3.11
    from enum import Enum

    class StrEnum(str, Enum):
        __str__ = str.__str__
        __format__ = str.__format__
from fractions import Fraction
from functools import reduce
from numbers import Rational

from tricover.utils import parallel_map
from .errors import ConsistencyError, InputError, UnsupportedError
from .geometry import interiors_disjoint
from .models import Covering, HTriangle, Orientation, to_rat
from .plfunc import Minimum, PLFunc, fold_segment
from .sawtooth import (
    Lemma3Report,
    Lemma4Result,
    SawtoothElt,
    classify_lemma4,
    generator_down,
    generator_for,
    validate_lemma3,
)


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FTilde:
    # value_at_lo + slope*(t - y_lo) on [y_lo, y_hi), zero elsewhere on the real line
    y_lo: Fraction
    y_hi: Fraction
    value_at_lo: Fraction
    slope: Fraction

    def __call__(self, t: Rational) -> Fraction:
        t = to_rat(t)
        if self.y_lo <= t < self.y_hi:
            return self.value_at_lo + self.slope * (t - self.y_lo)
        return Fraction(0)


def f_tilde(tri: HTriangle) -> FTilde:
    b, h = tri.base_len, tri.height
    if tri.orientation == Orientation.UP:
        return FTilde(tri.base_y, tri.base_y + h, b, -b / h)
    return FTilde(tri.base_y - h, tri.base_y, Fraction(0), b / h)


def f_T(tri: HTriangle) -> PLFunc:
    ft = f_tilde(tri)
    return fold_segment(ft.y_lo, ft.y_hi, ft.value_at_lo, ft.slope)


def sum_projections(triangles: tuple[HTriangle, ...]) -> PLFunc:
    return reduce(lambda acc, f: acc + f, parallel_map(f_T, triangles), PLFunc.constant(0))


class ProjectionVerdict(StrEnum):
    HOLDS = "necessary-condition-holds"
    REFUTED = "refuted-at-line"


@dataclass(frozen=True)
class ProjectionReport:
    g: PLFunc
    minimum: Minimum
    integral: Fraction
    verdict: ProjectionVerdict
    witness_t: Fraction | None = None
    membership: Lemma3Report | None = None
    classification: Lemma4Result | None = None

    def to_dict(self) -> dict[str, object]:
        data: dict[str, object] = {
            "verdict": self.verdict.value,
            "witness_t": None if self.witness_t is None else str(self.witness_t),
            "min_g": str(self.minimum.value),
            "argmin": str(self.minimum.argmin),
            "attained": self.minimum.attained,
            "integral_g": str(self.integral),
            "breakpoints": [
                {"t": str(p.start), "value": str(p.value), "slope": str(p.slope)} for p in self.g.pieces
            ],
        }
        if self.membership is not None:
            data["group_membership"] = {
                "passed": self.membership.passed,
                "violations": [check.value for check in self.membership.violations],
                "doubled_integral": str(self.membership.doubled_integral),
            }
        if self.classification is not None:
            data["classification"] = {
                "family": self.classification.family.value,
                "a": self.classification.a,
                "c": None if self.classification.c is None else str(self.classification.c),
                "reason": self.classification.reason,
            }
        return data


def projection_check(covering: Covering) -> ProjectionReport:
    """Necessary condition for coverage: g = sum f_piece - sum f_target must be >= 0."""
    covering.require_pieces()
    if not interiors_disjoint(covering.target):
        raise InputError(f"Target parts of '{covering.label}' overlap; their projections would be counted twice")
    g = sum_projections(covering.pieces) - sum_projections(covering.target.parts)
    lowest = g.minimum()
    integral = g.integral()

    witness = None
    verdict = ProjectionVerdict.HOLDS
    if lowest.value < 0:
        verdict = ProjectionVerdict.REFUTED
        witness = lowest.argmin if lowest.attained else g.point_below(Fraction(0))

    membership = classification = None
    if all(tri.is_unit for tri in covering.pieces + covering.target.parts):
        element = reduce(lambda acc, tri: acc + generator_for(tri), covering.pieces, SawtoothElt.zero())
        element = reduce(lambda acc, tri: acc - generator_for(tri), covering.target.parts, element)
        membership = validate_lemma3(element)
        if membership.integral == Fraction(1, 2) and lowest.value >= 0:
            classification = classify_lemma4(element)

    logger.info(f"Projection check of '{covering.label}': {verdict} (min g = {lowest.value}, ∫g = {integral})")
    return ProjectionReport(g, lowest, integral, verdict, witness, membership, classification)


class BoundVerdict(StrEnum):
    IMPOSSIBLE = "impossible"
    WITHIN_BOUND = "within-bound"


@dataclass(frozen=True)
class TraceStep:
    name: str
    detail: str
    holds: bool = True


@dataclass(frozen=True)
class BoundReport:
    n: int
    extra: int
    eps: Fraction
    threshold: Fraction
    verdict: BoundVerdict
    trace: tuple[TraceStep, ...]
    witness_construction: str | None = None

    def to_dict(self) -> dict[str, object]:
        return {
            "n": self.n,
            "extra": self.extra,
            "eps": str(self.eps),
            "threshold": str(self.threshold),
            "verdict": self.verdict.value,
            "witness_construction": self.witness_construction,
            "trace": [{"name": s.name, "detail": s.detail, "holds": s.holds} for s in self.trace],
        }


WITNESS_CONSTRUCTIONS = {2: "cs1", 3: "plus3"}


def max_eps(n: int, extra: int) -> Fraction:
    if extra == 2:
        return Fraction(1, n + 1)
    if extra == 3:
        return Fraction(1, n)
    raise UnsupportedError(f"No exact bound is known for n^2 + {extra} pieces; only extra in (2, 3) is decided")


def bound_profile(n: int, eps: Rational) -> PLFunc:
    """g = f_T - (f_T0 + 1) for T of side n + eps and T0 of side n sharing the lower-left vertex."""
    eps = to_rat(eps)
    return f_T(HTriangle.up(0, 0, n + eps)) - f_T(HTriangle.up(0, 0, n)).add_const(1)


def lower_bound_function(n: int, eps: Fraction) -> PLFunc:
    # -(1 - n*eps) + max(0, eps - t) on [0, 1)
    base = n * eps - 1
    if eps >= 1:
        return PLFunc.linear(-1, base + eps)
    return PLFunc.from_rows([(0, base + eps, -1), (eps, base, 0)])


def bound_decision(n: int, extra: int, eps: Rational) -> BoundReport:
    """Decide whether n^2 + extra unit H-triangles can cover the side n + eps triangle."""
    eps = to_rat(eps)
    if n < 2:
        raise InputError(f"n must be at least 2, got {n}")
    if eps <= 0:
        raise InputError(f"eps must be positive, got {eps}")
    threshold = max_eps(n, extra)
    pieces = n * n + extra

    trace = [
        TraceStep(
            "area",
            f"(n+eps)^2 = {(n + eps) ** 2} vs n^2+{extra} = {pieces} (informational only)",
            (n + eps) ** 2 <= pieces,
        )
    ]

    if eps <= threshold:
        witness = WITNESS_CONSTRUCTIONS[extra]
        trace.append(TraceStep("threshold", f"eps = {eps} <= {threshold}"))
        trace.append(TraceStep("witness", f"generate {witness}(n={n}, eps={eps}) and verify it"))
        logger.info(f"Bound n={n} k={extra} eps={eps}: within bound, witness {witness}")
        return BoundReport(n, extra, eps, threshold, BoundVerdict.WITHIN_BOUND, tuple(trace), witness)

    trace.append(TraceStep("threshold", f"eps = {eps} > {threshold}"))
    trace.append(
        TraceStep("triangles", f"T = Up side {n + eps} at (0, 0); T0 = Up side {n} sharing the vertex (0, 0)")
    )

    r = f_T(HTriangle.up(0, 0, n)).add_const(1)
    r_element = SawtoothElt.from_plfunc(r)
    r_report = validate_lemma3(r_element)
    trace.append(
        TraceStep(
            "reference",
            f"r = f_T0 + 1 has slope {r_element.slope}, ∫r = {r.integral()} (expected {Fraction(n * n + 2, 2)})",
            r_report.passed and r.integral() == Fraction(n * n + 2, 2),
        )
    )

    g = bound_profile(n, eps)
    bound = lower_bound_function(n, eps)
    trace.append(TraceStep("lower-bound", "g = f_T - r >= -(1 - n*eps) + max(0, eps - t)", bound.leq(g).holds))
    if eps <= 1:
        trace.append(TraceStep("lower-bound-equality", "equality holds since eps <= 1", g == bound))
    else:
        trace.append(TraceStep("lower-bound-equality", "eps > 1: only the inequality is guaranteed", True))

    if extra == 2:
        delta = (n + 1) * eps - 1
        reference = -generator_down(0)
        comparison = PLFunc.linear(-1, delta)
        comparison_text = f"g >= -t + delta with delta = (n+1)*eps - 1 = {delta}"
    else:
        delta = n * eps - 1
        reference = SawtoothElt.zero()
        comparison = PLFunc.constant(delta)
        comparison_text = f"g >= 0 + delta with delta = n*eps - 1 = {delta}"
    trace.append(TraceStep("comparison", comparison_text, delta > 0 and comparison.leq(g).holds))

    lower = reference.integral() + 1
    trace.append(
        TraceStep("jump-inequality", f"h >= g gives a uniform gap {delta} > 0 over an element of integral "
                  f"{reference.integral()}, so ∫h >= {lower}")
    )
    actual = Fraction(pieces, 2) - r.integral()
    trace.append(TraceStep("piece-count", f"∫h = {pieces}/2 - ∫r = {actual}"))
    trace.append(TraceStep("contradiction", f"∫h ≥ {lower} contradicts ∫h = {actual}", lower > actual))

    failed = [step.name for step in trace[1:] if not step.holds]
    if failed:
        raise ConsistencyError(f"Bound trace for n={n} k={extra} eps={eps} failed at {failed}")

    logger.info(f"Bound n={n} k={extra} eps={eps}: impossible")
    return BoundReport(n, extra, eps, threshold, BoundVerdict.IMPOSSIBLE, tuple(trace))
