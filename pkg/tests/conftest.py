"""Shared fixtures and independent oracles.

The oracles here deliberately avoid the library's LP machinery so that tests
cross-check results through a second route: 2D hulls via exact monotone
chain, simplex membership via barycentric coordinates from a direct linear
solve.
"""

import pytest

from gaugeradii.bodies import VPolytope
from gaugeradii.ratcore import ONE, ZERO, rat, solve_linear, vec


def V(points):
    return VPolytope.from_points(points)


@pytest.fixture
def triangle():
    """The standard centered triangle conv{(1,0),(0,1),(-1,-1)}."""
    return V([(1, 0), (0, 1), (-1, -1)])


@pytest.fixture
def square():
    return V([(1, 1), (1, -1), (-1, 1), (-1, -1)])


def hull2d(points):
    """Exact convex hull of 2D points (Andrew monotone chain), ccw order
    starting at the lexicographic minimum.  Oracle only; no LPs involved."""
    pts = sorted(set(tuple(vec(p)) for p in points))
    if len(pts) <= 2:
        return pts

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def barycentric_inside(point, simplex_vertices):
    """Membership of a point in a simplex via its barycentric coordinates,
    solved directly (no LP).  Returns True iff all coordinates are >= 0."""
    verts = [tuple(vec(v)) for v in simplex_vertices]
    p = tuple(vec(point))
    n = len(p)
    assert len(verts) == n + 1
    rows = [[v[k] for v in verts] for k in range(n)] + [[ONE] * (n + 1)]
    rhs = list(p) + [ONE]
    res = solve_linear(rows, rhs)
    assert res.status == "unique"
    return all(c >= ZERO for c in res.solution)


def in_translated_dilate(point, translation, factor, simplex_vertices):
    """point in translation + factor*S, via the barycentric oracle."""
    f = rat(factor)
    shifted = [a - b for a, b in zip(vec(point), vec(translation))]
    scaled = [[f * x for x in vec(v)] for v in simplex_vertices]
    return barycentric_inside(shifted, scaled)
