"""
Sierpinski simplices and the polytope subdivision of the u-plane

The open (p, d)-Sierpinski simplex holds the points of [0, 1]^d whose
base p expansions add without a carry; its closure also admits the
nonterminating tails. cells() cuts the square [0, q]^2 along the lines
where floor(A u / q) changes, which is what plot_subdivision draws.

Oct-2026

"""

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import NamedTuple

from scipy.special import comb

from .basep import PAdicRational, admissible, check_prime
from .errors import InvalidArgumentError
from .monomials import exponent_matrix
from .oracle import compositions


@dataclass(frozen=True)
class SimplexSpec:
    p: int
    d: int
    depth: int = 1

    def __post_init__(self):
        check_prime(self.p)
        if self.d < 1:
            raise InvalidArgumentError('Dimension must be at least 1, got {}.'.format(self.d))
        if self.depth < 1:
            raise InvalidArgumentError('Depth must be at least 1, got {}.'.format(self.depth))

    @property
    def digit_count(self):
        """|X|, the number of digit vectors with entries adding below p."""
        return int(comb(self.p + self.d - 1, self.d, exact=True))

    @property
    def num_points(self):
        return self.digit_count ** self.depth


def digit_vectors(p, d):
    """X = {x in N^d : sum(x) < p}."""
    return [x for total in range(p) for x in compositions(total, d)]


def sierpinski_points(spec):
    """
    S_1 = X / p and S_i = {v + w / p^i : v in S_{i-1}, w in X}.

    Points are tuples of PAdicRational. Numerators are carried as
    integers over p^depth until the end.
    """
    p, depth = spec.p, spec.depth
    xs = digit_vectors(p, spec.d)
    numerators = {(0,) * spec.d}
    for _ in range(depth):
        numerators = {tuple(p * v + w for v, w in zip(point, x)) for point in numerators for x in xs}
    return {tuple(PAdicRational(k, depth, p) for k in point) for point in numerators}


def _as_fractions(v):
    return [x.to_fraction() if isinstance(x, PAdicRational) else Fraction(x) for x in v]


def open_member(v, p):
    """Canonical expansions only: (1/2, 1/2) is not in the open simplex for p = 2."""
    return admissible(_as_fractions(v), p, closed=False)


def closed_member(v, p):
    return admissible(_as_fractions(v), p, closed=True)


class FractalDimension(NamedTuple):
    count: int
    base: int
    value: float

    def __str__(self):
        return 'log_{}({}) = {:.6f}'.format(self.base, self.count, self.value)


def dimension(p, d):
    """
    log_p binom(p+d-1, d); exact as the pair (count, base), with the
    float for display.
    """
    check_prime(p)
    if d < 1:
        raise InvalidArgumentError('Dimension must be at least 1, got {}.'.format(d))
    count = int(comb(p + d - 1, d, exact=True))
    return FractalDimension(count, p, math.log(count) / math.log(p))


# ------------ SUBDIVISION ----------------------------

@dataclass(frozen=True)
class Cell:
    """
    One polygon of the subdivision: floor(A u / q) equals label on its
    interior. Vertices are exact and counter-clockwise.
    """
    label: tuple
    vertices: tuple
    sample: tuple

    @property
    def area(self):
        return abs(_signed_area(self.vertices))


@dataclass(frozen=True)
class Segment:
    row: int
    level: int
    start: tuple
    end: tuple


def _signed_area(vertices):
    total = Fraction(0)
    for (x0, y0), (x1, y1) in zip(vertices, vertices[1:] + vertices[:1]):
        total += x0 * y1 - x1 * y0
    return total / 2


def _clip(polygon, coeffs, bound, keep_below):
    """Sutherland-Hodgman against coeffs . u <= bound (or >= bound)."""
    def value(pt):
        return coeffs[0] * pt[0] + coeffs[1] * pt[1] - bound

    def inside(pt):
        return value(pt) <= 0 if keep_below else value(pt) >= 0

    def cut(a, b):
        t = value(a) / (value(a) - value(b))
        return (a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1]))

    result = []
    for i, current in enumerate(polygon):
        previous = polygon[i - 1]
        if inside(current):
            if not inside(previous):
                result.append(cut(previous, current))
            result.append(current)
        elif inside(previous):
            result.append(cut(previous, current))
    # drop repeated vertices from cuts through a corner
    cleaned = []
    for pt in result:
        if not cleaned or cleaned[-1] != pt:
            cleaned.append(pt)
    if len(cleaned) > 1 and cleaned[0] == cleaned[-1]:
        cleaned.pop()
    return cleaned


def _check_plane(ideal, q):
    if q <= 0:
        raise InvalidArgumentError('q must be positive, got {}.'.format(q))
    a = exponent_matrix(ideal)
    if a.num_cols != 2:
        raise InvalidArgumentError('The subdivision needs exactly 2 generators, got {}.'.format(a.num_cols))
    return a


def cells(ideal, q):
    """
    The cells of [0, q]^2 on which floor(A u / q) is constant, in label
    order. Zero-area pieces are skipped.
    """
    a = _check_plane(ideal, q)
    square = [(Fraction(0), Fraction(0)), (Fraction(q), Fraction(0)),
              (Fraction(q), Fraction(q)), (Fraction(0), Fraction(q))]
    result = []
    for label in product(*(range(sum(row) + 1) for row in a.rows)):
        polygon = square
        for row, c in zip(a.rows, label):
            polygon = _clip(polygon, row, c * q, keep_below=False)
            polygon = _clip(polygon, row, (c + 1) * q, keep_below=True)
            if len(polygon) < 3:
                break
        if len(polygon) < 3 or _signed_area(polygon) == 0:
            continue
        sample = tuple(sum(pt[i] for pt in polygon) / len(polygon) for i in range(2))
        result.append(Cell(label, tuple(polygon), sample))
    return result


def _segment(coeffs, value, q):
    """The part of coeffs . u = value inside [0, q]^2, or None."""
    a1, a2 = coeffs
    value = Fraction(value)
    points = set()
    if a2:
        for u1 in (Fraction(0), Fraction(q)):
            points.add((u1, (value - a1 * u1) / a2))
    if a1:
        for u2 in (Fraction(0), Fraction(q)):
            points.add(((value - a2 * u2) / a1, u2))
    points = sorted(pt for pt in points if 0 <= pt[0] <= q and 0 <= pt[1] <= q)
    if len(points) < 2:
        return None
    return points[0], points[-1]


def constraint_lines(ideal, q):
    """
    Segments (A u)_i = c q for c = 1 .. max of row i, clipped to the square.
    """
    a = _check_plane(ideal, q)
    segments = []
    for i, row in enumerate(a.rows):
        if not any(row):
            continue
        for c in range(1, max(row) + 1):
            ends = _segment(row, c * q, q)
            if ends is not None:
                segments.append(Segment(i, c, ends[0], ends[1]))
    return segments


def level_line(t, q):
    """The segment ||u|| = t q, the level set of the Frobenius exponent t."""
    return _segment((1, 1), Fraction(t) * q, q)
