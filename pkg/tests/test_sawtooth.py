import math
import random

from fractions import Fraction

import pytest

from tricover.core import HTriangle, InputError, PLFunc, SawtoothElt, f_T
from tricover.core.sawtooth import (
    Lemma3Check,
    SawtoothFamily,
    classify_lemma4,
    corollary3_check,
    fractional_affine,
    generator_down,
    generator_for,
    generator_up,
    reflected_fractional_affine,
    validate_lemma3,
)


F = Fraction


def random_rational(rng: random.Random, lo: int, hi: int, denominator: int = 100) -> Fraction:
    return F(rng.randint(lo * denominator, hi * denominator), denominator)


def random_generator(rng: random.Random) -> SawtoothElt:
    alpha = F(rng.randint(0, 99), 100)
    return generator_up(alpha) if rng.random() < 0.5 else generator_down(alpha)


def random_element(rng: random.Random, max_generators: int = 20) -> SawtoothElt:
    element = SawtoothElt.zero()
    for _ in range(rng.randint(1, max_generators)):
        generator = random_generator(rng)
        element = element + generator if rng.random() < 0.5 else element - generator
    return element


def test_generators_are_fractional_parts():
    down, up = generator_down(F(1, 4)), generator_up(F(1, 4))
    assert down(0) == F(3, 4)
    assert down(F(1, 4)) == 0
    assert down(F(3, 4)) == F(1, 2)
    assert up(0) == F(1, 4)
    assert up(F(1, 4)) == 1
    assert generator_down(0).to_plfunc() == PLFunc.linear(1, 0)


@pytest.mark.parametrize("alpha", [F(-1, 2), F(1), F(3, 2)])
def test_generator_position_must_be_in_unit_interval(alpha):
    with pytest.raises(InputError):
        generator_down(alpha)


def test_one_is_the_constant_function():
    assert SawtoothElt.one().to_plfunc() == PLFunc.constant(1)
    assert SawtoothElt.zero().integral() == 0


def test_projection_of_unit_triangle_is_its_generator():
    rng = random.Random(2)
    for _ in range(100):
        x, y = random_rational(rng, -3, 3), random_rational(rng, -3, 3)
        tri = HTriangle.up(x, y) if rng.random() < 0.5 else HTriangle.down(x, y)
        assert f_T(tri) == generator_for(tri).to_plfunc()


def test_generator_for_needs_unit_triangle():
    with pytest.raises(InputError):
        generator_for(HTriangle.up(0, 0, 2))


def test_element_round_trips_through_plfunc():
    element = generator_up(F(1, 3)) + generator_down(F(2, 5)) + generator_down(F(1, 3))
    assert SawtoothElt.from_plfunc(element.to_plfunc()).to_plfunc() == element.to_plfunc()
    with pytest.raises(InputError):
        SawtoothElt.from_plfunc(PLFunc.from_rows([(0, 0, 1), (F(1, 2), 0, 0)]))


def test_integral_matches_plfunc_integral():
    rng = random.Random(3)
    for _ in range(50):
        element = random_element(rng)
        assert element.integral() == element.to_plfunc().integral()


def test_random_group_elements_pass_every_clause():
    rng = random.Random(5)
    for _ in range(1000):
        report = validate_lemma3(random_element(rng))
        assert report.passed, report.violations
        assert report.doubled_integral.denominator == 1


@pytest.mark.parametrize(
    "element, clause",
    [
        (SawtoothElt.raw(F(1, 2)), Lemma3Check.INTEGER_SLOPE),
        (SawtoothElt.raw(1, {F(1, 2): F(1, 2)}), Lemma3Check.INTEGER_JUMPS),
        (SawtoothElt.raw(0, {}, F(1, 3)), Lemma3Check.HALF_INTEGER_INTEGRAL),
        (SawtoothElt.raw(0, {}, F(1, 2)), Lemma3Check.INTEGRAL_PARITY),
    ],
)
def test_hand_built_violations_fail_the_right_clause(element, clause):
    report = validate_lemma3(element)
    assert not report.passed
    assert clause in report.violations


@pytest.mark.parametrize("a", [1, 3, 5, 7])
def test_sawtooth_classification_recovers_slope_and_offset(a):
    rng = random.Random(a)
    for _ in range(20):
        c = F(rng.randint(0, 999), 1000)
        up = classify_lemma4(fractional_affine(a, c))
        assert (up.family, up.a, up.c) == (SawtoothFamily.UP, a, c)
        assert up.reconstruct().to_plfunc() == fractional_affine(a, c).to_plfunc()

        down = classify_lemma4(reflected_fractional_affine(a, c))
        assert (down.family, down.a, down.c) == (SawtoothFamily.DOWN, a, c)


def test_fractional_affine_is_the_fractional_part():
    f = fractional_affine(3, F(1, 2))
    for t in (F(0), F(1, 6), F(1, 3), F(2, 3), F(9, 10)):
        value = 3 * t + F(1, 2)
        assert f(t) == value - math.floor(value)


@pytest.mark.parametrize(
    "element, reason",
    [
        (generator_down(0) + generator_down(F(1, 2)), "integral"),
        (generator_down(F(1, 2)) + generator_down(0) - generator_up(0), "negative"),
        (SawtoothElt.raw(F(1, 2)), "not a group element"),
    ],
)
def test_classification_not_applicable(element, reason):
    result = classify_lemma4(element)
    assert result.family == SawtoothFamily.NOT_APPLICABLE
    assert reason in result.reason
    with pytest.raises(InputError):
        result.reconstruct()


def test_positive_gap_forces_integrals_apart():
    rng = random.Random(7)
    for _ in range(500):
        g, e = random_element(rng, 10), random_element(rng, 10)
        # Shift e by an integer constant so its infimum is strictly positive.
        shift = math.floor(-e.minimum().value) + 1
        h = g + e + SawtoothElt.raw(0, {}, shift)
        report = corollary3_check(g, h)
        assert report.hypothesis_holds
        assert report.conclusion_holds


def test_zero_gap_gives_a_witness():
    g = generator_up(F(1, 3))
    report = corollary3_check(g, g)
    assert not report.hypothesis_holds
    assert report.witness is not None
    assert report.witness == report.gap.argmin
    assert 0 <= report.witness < 1


def test_jump_inequality_needs_group_elements():
    with pytest.raises(InputError):
        corollary3_check(SawtoothElt.raw(F(1, 2)), SawtoothElt.zero())


def test_group_laws_on_random_elements():
    rng = random.Random(29)
    for _ in range(200):
        e, f, g = random_element(rng), random_element(rng), random_element(rng)
        assert e + f == f + e
        assert (e + f) + g == e + (f + g)
        assert e + (-e) == SawtoothElt.zero()
        assert e - e == SawtoothElt.zero()


def test_equal_functions_have_identical_canonical_forms():
    rng = random.Random(31)
    for _ in range(200):
        generators = [random_generator(rng) for _ in range(rng.randint(1, 20))]
        shuffled = generators[:]
        rng.shuffle(shuffled)
        first = sum(generators, SawtoothElt.zero())
        second = sum(shuffled, SawtoothElt.zero())
        assert first == second
        assert first.to_plfunc() == second.to_plfunc()
        assert SawtoothElt.from_plfunc(first.to_plfunc()) == first


def test_unattained_zero_gap_has_no_witness():
    # h - g = 1 - t approaches 0 only as t -> 1.
    report = corollary3_check(SawtoothElt.zero(), generator_up(0))
    assert not report.hypothesis_holds
    assert report.gap.value == 0
    assert not report.gap.attained
    assert report.witness is None
    assert "not attained" in report.reason


def test_negative_gap_witness_lies_in_unit_interval():
    g, h = generator_down(0), generator_up(0)
    report = corollary3_check(g, h)
    assert not report.hypothesis_holds
    assert 0 <= report.witness < 1
    assert h(report.witness) < g(report.witness)
