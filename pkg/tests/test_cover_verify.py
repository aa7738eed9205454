import random

from fractions import Fraction

import pytest

from tricover.constructions import cs1, cs2, grid, plus3
from tricover.core import (
    CoverageVerifier,
    Covering,
    HTriangle,
    InputError,
    Orientation,
    Region,
    sample_falsify,
    six_landmarks,
    trigon_region,
    verify,
)
from tricover.core.cover_verify import covers_at_most_one_landmark, first_gap, merge_intervals
from tricover.core.geometry import contains_point, in_region, lattice_triangle


F = Fraction
SHRUNK = F(99, 100)


def random_triangle(rng: random.Random, lo: int, hi: int, side: Fraction = F(1)) -> HTriangle:
    x = F(rng.randint(lo * 100, hi * 100), 100)
    y = F(rng.randint(lo * 100, hi * 100), 100)
    return HTriangle.up(x, y, side) if rng.random() < 0.5 else HTriangle.down(x, y, side)


def assert_valid_witness(covering, report):
    assert not report.covered
    point = report.witness.point
    assert in_region(covering.target, point)
    assert not any(contains_point(piece, point) for piece in covering.pieces)


def test_merge_intervals_joins_touching_intervals():
    assert merge_intervals([(F(1), F(2)), (F(0), F(1)), (F(3), F(4))]) == [(0, 2), (3, 4)]


def test_first_gap():
    merged = [(F(0), F(1)), (F(2), F(3))]
    assert first_gap(merged, F(0), F(3)) == (1, 2)
    assert first_gap(merged, F(0), F(1)) is None
    assert first_gap(merged, F(-1), F(1)) == (-1, 0)


def test_tiling_is_covered_and_loses_coverage_without_any_piece():
    covering = Covering(Region((HTriangle.up(0, 0, 3),)), tuple(grid(3)), label="grid 3")
    assert verify(covering).covered
    for index in range(len(covering.pieces)):
        smaller = covering.without_piece(index)
        assert_valid_witness(smaller, verify(smaller))


def test_construction_minus_a_piece_is_not_covered():
    covering = cs1(4, F(1, 5))
    assert_valid_witness(covering.without_piece(0), verify(covering.without_piece(0)))
    assert_valid_witness(covering.without_piece(17), verify(covering.without_piece(17)))


def test_report_lists_critical_heights():
    report = verify(Covering(Region((HTriangle.up(0, 0),)), (HTriangle.up(0, 0),)))
    assert report.covered
    assert report.critical_ys == (0, 1)
    assert report.slab_count == 1
    assert report.to_dict()["witness"] is None


def test_verify_needs_pieces_but_falsifier_does_not():
    covering = Covering(Region((HTriangle.up(0, 0),)), ())
    with pytest.raises(InputError):
        verify(covering)
    assert sample_falsify(covering, 10) == (0, 0)


def test_sample_falsifier_rejects_bad_denominator():
    with pytest.raises(InputError):
        sample_falsify(Covering(Region((HTriangle.up(0, 0),)), (HTriangle.up(0, 0),)), 0)


def test_parallel_verification_matches_sequential():
    covering = cs1(5, F(1, 6)).without_piece(3)
    sequential = CoverageVerifier(max_workers=1).verify(covering)
    parallel = CoverageVerifier(max_workers=4).verify(covering)
    assert sequential == parallel


def test_trigon_target_is_covered_by_its_cells():
    cells = [(0, 0, Orientation.UP), (0, 0, Orientation.DOWN), (1, 0, Orientation.UP), (1, 0, Orientation.DOWN)]
    target = trigon_region(cells)
    pieces = tuple(lattice_triangle(i, j, o) for i, j, o in cells)
    assert verify(Covering(target, pieces)).covered
    assert not verify(Covering(target, pieces[:-1])).covered


def test_shrunk_pieces_never_cover_a_unit_triangle():
    rng = random.Random(11)
    target = Region((HTriangle.up(0, 0),))
    for _ in range(10_000):
        covering = Covering(target, (random_triangle(rng, -1, 1, SHRUNK), random_triangle(rng, -1, 1, SHRUNK)))
        assert_valid_witness(covering, verify(covering))


def test_five_shrunk_pieces_never_cover_a_side_two_triangle():
    rng = random.Random(13)
    target = Region((HTriangle.up(0, 0, 2),))
    for _ in range(1_000):
        covering = Covering(target, tuple(random_triangle(rng, -1, 2, SHRUNK) for _ in range(5)))
        assert_valid_witness(covering, verify(covering))


def test_shrinking_a_covering_keeps_it_covered():
    covering = cs1(3, F(1, 4))
    assert verify(covering.scaled(SHRUNK)).covered


def test_falsifier_never_contradicts_exact_result():
    rng = random.Random(17)
    target = Region((HTriangle.up(0, 0, 2),))
    disagreements = 0
    for _ in range(100):
        pieces = tuple(random_triangle(rng, -1, 2) for _ in range(rng.randint(3, 8)))
        covering = Covering(target, pieces)
        point = sample_falsify(covering, 100)
        if point is not None:
            assert in_region(target, point)
            assert not any(contains_point(piece, point) for piece in pieces)
            disagreements += verify(covering).covered
    assert disagreements == 0


def test_falsifier_finds_nothing_on_a_real_covering():
    assert sample_falsify(cs1(3, F(1, 4)), 100) is None


def test_six_landmarks():
    marks = six_landmarks(F(21, 10))
    assert marks[:3] == [(0, 0), (F(21, 10), 0), (F(21, 20), F(21, 10))]
    assert len(set(marks)) == 6


def test_unit_triangles_hold_at_most_one_landmark():
    rng = random.Random(19)
    marks = six_landmarks(2 + F(1, 10))
    for _ in range(10_000):
        assert covers_at_most_one_landmark(random_triangle(rng, -1, 3), marks)


def test_landmark_test_needs_small_triangle():
    with pytest.raises(InputError):
        covers_at_most_one_landmark(HTriangle.up(0, 0, 2), six_landmarks(3))


@pytest.mark.parametrize("build", [cs1, cs2, plus3], ids=["cs1", "cs2", "plus3"])
def test_slab_count_is_bounded_by_edges_and_vertices(build):
    covering = build(8, F(1, 16))
    triangles = covering.target.parts + covering.pieces
    edges = vertices = 3 * len(triangles)
    report = verify(covering)
    assert report.covered
    assert report.slab_count <= edges**2 + vertices
    assert report.slab_count == len(report.critical_ys) - 1
