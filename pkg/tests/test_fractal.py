import math
from fractions import Fraction
from itertools import product

import pytest

from frobpow.basep import PAdicRational
from frobpow.fractal import (SimplexSpec, cells, closed_member, constraint_lines, digit_vectors,
                             dimension, level_line, open_member, sierpinski_points)
from frobpow.monomials import exponent_matrix, parse_ideal
from frobpow.oracle import carry_free_vectors


def as_fractions(points):
    return {tuple(x.to_fraction() for x in pt) for pt in points}


def test_points_depth_one():
    half = Fraction(1, 2)
    assert as_fractions(sierpinski_points(SimplexSpec(2, 2, 1))) == {(0, 0), (half, 0), (0, half)}
    assert as_fractions(sierpinski_points(SimplexSpec(3, 1, 1))) == \
        {(0,), (Fraction(1, 3),), (Fraction(2, 3),)}


@pytest.mark.parametrize('p, d, depth', [(2, 2, 1), (2, 2, 2), (2, 2, 3), (2, 2, 4), (3, 2, 2),
                                         (2, 3, 2), (5, 1, 2)])
def test_point_count(p, d, depth):
    spec = SimplexSpec(p, d, depth)
    points = sierpinski_points(spec)
    assert len(points) == math.comb(p + d - 1, d) ** depth == spec.num_points
    assert len(digit_vectors(p, d)) == spec.digit_count


def test_points_are_in_the_open_simplex():
    for p, d, depth in [(2, 2, 3), (3, 2, 2), (3, 3, 1)]:
        for point in sierpinski_points(SimplexSpec(p, d, depth)):
            assert all(isinstance(x, PAdicRational) for x in point)
            assert open_member(point, p)
            assert closed_member(point, p)


def test_membership_examples():
    half = Fraction(1, 2)
    assert not open_member((half, half), 2)
    assert closed_member((half, half), 2)
    third = PAdicRational(1, 1, 3)
    assert open_member((third, third), 3)
    assert open_member((0, 0, 0), 5) and closed_member((0, 0, 0), 5)


def test_open_inside_closed_on_a_grid():
    p = 3
    grid = [Fraction(k, 9) for k in range(10)]
    for v in product(grid, repeat=2):
        if open_member(v, p):
            assert closed_member(v, p)


def test_dimension():
    gasket = dimension(2, 2)
    assert (gasket.count, gasket.base) == (3, 2)
    assert gasket.value == pytest.approx(math.log2(3))
    assert dimension(2, 1).value == pytest.approx(1.0)
    assert dimension(3, 2).count == 6
    assert str(gasket) == 'log_2(3) = 1.584963'


def test_simplex_spec_errors():
    for args in [(4, 2, 1), (2, 0, 1), (2, 2, 0)]:
        with pytest.raises(ValueError):
            SimplexSpec(*args)
    with pytest.raises(ValueError):
        dimension(2, 0)


def test_constraint_lines(square_cube):
    segments = constraint_lines(square_cube, 12)
    assert [(s.row, s.level, s.start, s.end) for s in segments] == [
        (0, 1, (6, 0), (6, 12)),
        (0, 2, (12, 0), (12, 12)),
        (1, 1, (0, 4), (6, 0)),
        (1, 2, (0, 8), (12, 0)),
        (1, 3, (0, 12), (12, 4)),
        (2, 1, (0, 4), (12, 4)),
        (2, 2, (0, 8), (12, 8)),
        (2, 3, (0, 12), (12, 12)),
    ]


def test_constraint_lines_two_variables():
    segments = constraint_lines(parse_ideal('x, y'), 2)
    assert len(segments) == 2
    assert len(cells(parse_ideal('x, y'), 2)) == 1


def test_level_line():
    assert level_line(Fraction(1, 2), 12) == ((0, 6), (6, 0))
    assert level_line(Fraction(3, 2), 12) == ((6, 12), (12, 6))
    assert level_line(3, 12) is None


def test_cells_running_example(square_cube):
    q = 12
    a = exponent_matrix(square_cube)
    subdivision = cells(square_cube, q)
    assert subdivision[0].label == (0, 0, 0)
    assert [c.label for c in subdivision] == [
        (0, 0, 0), (0, 1, 0), (0, 1, 1), (0, 2, 1), (0, 2, 2), (0, 3, 2),
        (1, 1, 0), (1, 2, 0), (1, 2, 1), (1, 3, 1), (1, 3, 2), (1, 4, 2)]
    assert set(subdivision[0].vertices) == {(0, 0), (6, 0), (0, 4)}
    assert sum(c.area for c in subdivision) == q * q
    for cell in subdivision:
        floors = tuple(math.floor(x / q) for x in a.apply(cell.sample))
        assert floors == cell.label


def inside(cell, u):
    vertices = cell.vertices
    signs = set()
    for (x0, y0), (x1, y1) in zip(vertices, vertices[1:] + vertices[:1]):
        cross = (x1 - x0) * (u[1] - y0) - (y1 - y0) * (u[0] - x0)
        if cross:
            signs.add(cross > 0)
    return len(signs) <= 1


def test_cells_agree_with_the_generator_formula(square_cube):
    p, q = 3, 9
    a = exponent_matrix(square_cube)
    subdivision = cells(square_cube, q)
    for k in range(q):
        for u in carry_free_vectors(k, 2, p):
            label = tuple(x // q for x in a.apply(u))
            assert label in {c.label for c in subdivision if inside(c, u)}


def test_cells_errors(square_cube):
    with pytest.raises(ValueError):
        cells(parse_ideal('x, y, z'), 4)
    with pytest.raises(ValueError):
        cells(square_cube, 0)
    with pytest.raises(ValueError):
        constraint_lines(square_cube, -3)
