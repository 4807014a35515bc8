"""Radii functionals against hand-derived instances and their exact
invariance laws.

The 8/3 circumradius instance carries a two-sided oracle: summing the body's
support values over the gauge's facet normals (which cancel) gives the lower
bound 3*rho >= 8 without any LP, and the barycentric oracle confirms the
containment at exactly 8/3.
"""

import pytest

from conftest import V, in_translated_dilate
from gaugeradii.bodies import (
    canonicalize,
    difference_body,
    negate,
    same_vertex_set,
    scale,
    simplex_hrep,
    support,
    translate,
    vertex_centroid,
)
from gaugeradii.constructions import SplitMix64, random_vpolytope, standard_centered_simplex
from gaugeradii.radii import (
    DegenerateGaugeError,
    asymmetry,
    breadth,
    circumradius,
    diameter,
    inradius,
    is_constant_width,
    is_minkowski_center,
    jung_ratio,
    sym_gauge_norm,
)
from gaugeradii.ratcore import rat, vadd, vec


def seeded_pairs(count, seed, dim=2, verts=4):
    rng = SplitMix64(seed)
    return [
        (random_vpolytope(dim, verts, 5, 0, rng=rng), random_vpolytope(dim, verts, 5, 0, rng=rng))
        for _ in range(count)
    ]


def test_self_circumradius(square, triangle):
    for body in (square, triangle):
        res = circumradius(body, body)
        assert res.value == 1


def test_reflected_simplex_circumradius(triangle):
    assert circumradius(negate(triangle), triangle).value == 2


def test_square_in_triangle_gauge(square, triangle):
    res = circumradius(square, triangle)
    assert res.value == rat("8/3")
    assert res.translation == vec(("-1/3", "-1/3"))
    # oracle, lower bound: the triangle's facet normals sum to zero, so for
    # any t, summing h(square, a_f) <= a_f.t + rho h(triangle, a_f) kills t
    normals = [h.normal for h in simplex_hrep(triangle).halfspaces]
    assert vadd(vadd(normals[0], normals[1]), normals[2]) == vec((0, 0))
    support_sum = sum(support(square, a)[0] for a in normals)
    gauge_sum = sum(support(triangle, a)[0] for a in normals)
    assert support_sum == 8 and gauge_sum == 3  # so rho >= 8/3
    # oracle, upper bound: every square corner inside t + 8/3 triangle
    for corner in square.vertices:
        assert in_translated_dilate(corner, res.translation, "8/3", triangle.vertices)


def test_circumradius_infinite_for_flat_gauge(square):
    segment = V([(0, 0), (1, 0)])
    assert circumradius(square, segment) is None


def test_inradius(square, triangle):
    assert inradius(square, square).value == 1
    assert inradius(square, triangle).value == 1
    res = inradius(triangle, scale(square, "1/2"))
    # reciprocity against the independent circumradius path
    assert res.value * circumradius(scale(square, "1/2"), triangle).value == 1


def test_inradius_rejects_point_gauge(square):
    with pytest.raises(DegenerateGaugeError):
        inradius(square, V([(0, 0)]))


def test_reciprocity_random():
    for body, gauge in seeded_pairs(8, 21):
        assert inradius(body, gauge).value * circumradius(gauge, body).value == 1


def test_witness_translations_certify_values():
    from gaugeradii.bodies import contains_point

    for body, gauge in seeded_pairs(6, 58):
        circ = circumradius(body, gauge)
        cover = translate(scale(gauge, circ.value), circ.translation)
        assert all(contains_point(cover, v) for v in body.vertices)
        inr = inradius(body, gauge)
        inscribed = translate(scale(gauge, inr.value), inr.translation)
        assert all(contains_point(body, v) for v in inscribed.vertices)


def test_inradius_of_flat_body_is_zero(square):
    segment = V([(0, 0), (1, 0)])
    assert inradius(segment, square).value == 0


def test_sym_gauge_norm(triangle):
    assert sym_gauge_norm((0, 0), triangle) == 0
    # the ray through (1,-1) leaves S-S on the edge 2x - y = 3
    assert sym_gauge_norm((2, -2), triangle) == 4
    assert sym_gauge_norm((-2, 2), triangle) == 4


def test_norm_is_twice_segment_circumradius(triangle):
    rng = SplitMix64(77)
    for _ in range(12):
        z = rng.point(2, 6)
        if all(x == 0 for x in z):
            continue
        segment = V([(0, 0), z])
        assert sym_gauge_norm(z, triangle) == 2 * circumradius(segment, triangle).value


def test_diameter(square, triangle):
    res = diameter(square, triangle)
    assert res.value == 4
    assert res.attaining == (vec((-1, 1)), vec((1, -1)))


def test_diameter_identities():
    for body, gauge in seeded_pairs(6, 33):
        d = diameter(body, gauge).value
        assert d == 2 * diameter(body, difference_body(gauge)).value
        assert d == diameter(negate(body), gauge).value


def test_asymmetry_basics(square, triangle):
    assert asymmetry(square).s == 1
    assert asymmetry(square).center == vec((0, 0))
    res = asymmetry(triangle)
    assert res.s == 2 and res.center == vec((0, 0))


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_simplex_asymmetry_is_dimension(n):
    res = asymmetry(standard_centered_simplex(n))
    assert res.s == n
    assert res.center == vec([0] * n)


def test_asymmetry_range_and_reflection():
    for body, _ in seeded_pairs(8, 55):
        s = asymmetry(body).s
        assert 1 <= s <= body.dim
        assert asymmetry(negate(body)).s == s


def test_minkowski_center_checks(triangle):
    assert is_minkowski_center(triangle, vertex_centroid(triangle))
    assert not is_minkowski_center(triangle, (1, 0))
    shifted = translate(triangle, (5, "1/2"))
    assert is_minkowski_center(shifted, (5, "1/2"))
    for body, _ in seeded_pairs(5, 13):
        assert is_minkowski_center(body, asymmetry(body).center)


def test_breadth(square, triangle):
    assert breadth(square, square, (1, 0)) == 2
    assert breadth(square, square, (0, 1)) == 2
    # invariant under central symmetrization of both arguments
    for body, gauge in seeded_pairs(5, 91):
        d = (3, -1)
        assert breadth(body, gauge, d) == breadth(
            difference_body(body), difference_body(gauge), d
        )
    with pytest.raises(ValueError):
        breadth(square, triangle, (0, 0))


def test_breadth_below_diameter(triangle, square):
    # breadth never exceeds the diameter, and attains it for some direction
    hexagon = difference_body(triangle)
    dmax = diameter(square, triangle).value
    values = [breadth(square, triangle, v) for v in hexagon.vertices]
    assert all(b <= dmax for b in values)
    assert dmax in values


def test_jung_ratio(triangle, square):
    hexagon = difference_body(triangle)
    assert circumradius(triangle, hexagon).value == rat("2/3")
    assert diameter(triangle, hexagon).value == 1
    assert jung_ratio(triangle, hexagon) == rat("2/3")
    segment = V([(0, 0), (1, 0)])
    assert jung_ratio(segment, square) == rat("1/2")


def test_translation_invariance(triangle, square):
    for body, gauge in ((square, triangle), (triangle, square)):
        moved_body = translate(body, (7, -3))
        moved_gauge = translate(gauge, ("-1/2", 9))
        assert circumradius(moved_body, moved_gauge).value == circumradius(body, gauge).value
        assert inradius(moved_body, moved_gauge).value == inradius(body, gauge).value
        assert diameter(moved_body, moved_gauge).value == diameter(body, gauge).value
        assert asymmetry(moved_body).s == asymmetry(body).s


def test_homogeneity_and_monotonicity(triangle, square):
    assert circumradius(scale(square, "3/2"), triangle).value == rat("3/2") * rat("8/3")
    sub_body = V([(1, 1), (1, -1), (-1, 1)])  # hull subset of the square
    assert circumradius(sub_body, triangle).value <= circumradius(square, triangle).value


def test_affine_invariance(triangle, square):
    # unimodular map plus translation
    def apply(m, t, body):
        return canonicalize(
            type(body)(
                body.dim,
                tuple(
                    (
                        m[0][0] * v[0] + m[0][1] * v[1] + t[0],
                        m[1][0] * v[0] + m[1][1] * v[1] + t[1],
                    )
                    for v in body.vertices
                ),
            )
        )

    m = ((rat(2), rat(1)), (rat(1), rat(1)))
    t = (rat(-3), rat(5))
    for body, gauge in ((square, triangle), (triangle, difference_body(triangle))):
        assert (
            circumradius(apply(m, t, body), apply(m, t, gauge)).value
            == circumradius(body, gauge).value
        )
        assert diameter(apply(m, t, body), apply(m, t, gauge)).value == diameter(body, gauge).value


def test_constant_width(square, triangle):
    assert is_constant_width(square, square)
    assert not is_constant_width(triangle, square)
    assert is_constant_width(difference_body(triangle), triangle)
    # the witness identity: K - K equals D/2 (C - C) exactly
    d = diameter(difference_body(triangle), triangle).value
    assert same_vertex_set(
        difference_body(difference_body(triangle)),
        scale(difference_body(triangle), d / 2),
    )
