"""Polytope representations and Minkowski algebra over exact rationals.

The vertex representation is primary: every radius downstream reduces to a
containment LP over vertex lists.  Halfspace representations exist only where
they are exact and cheap — simplices (n+1 facets from determinants) and
desk-scale brute-force vertex enumeration — because general V/H conversion is
out of scope here.

Bodies are immutable value objects; operations are pure functions, so results
may be shared freely and cached.  ``canonicalize`` removes every point lying
in the hull of the others (one membership LP per point) and sorts the rest,
which makes vertex-set equality of polytopes a plain tuple comparison.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cmp_to_key, lru_cache
from typing import Iterable, NamedTuple

from . import lp
from .ratcore import (
    ONE,
    ZERO,
    Rational,
    Vec,
    det,
    rank,
    rat,
    rat_str,
    solve_linear,
    vadd,
    vdot,
    vec,
    vneg,
    vscale,
    vsub,
    vzero,
)


class DimensionMismatchError(ValueError):
    """Bodies or directions of different ambient dimensions were combined."""


class DegenerateSimplexError(ValueError):
    """Expected dim+1 affinely independent vertices."""


class UnboundedRegionError(ValueError):
    """A halfspace intersection is unbounded where a polytope was required."""


class ScaleGuardError(ValueError):
    """Brute-force enumeration request exceeds the desk-scale guard."""


@dataclass(frozen=True)
class VPolytope:
    """Convex body given by a finite list of rational vertices.

    ``canonical`` is True once no listed point is in the convex hull of the
    others and the list is sorted lexicographically.
    """

    dim: int
    vertices: tuple
    canonical: bool = False

    def __post_init__(self):
        if not self.vertices:
            raise ValueError("a polytope needs at least one point")
        for v in self.vertices:
            if len(v) != self.dim:
                raise DimensionMismatchError(
                    f"point of length {len(v)} in a {self.dim}-dimensional body"
                )

    @classmethod
    def from_points(cls, points: Iterable, dim: int | None = None) -> "VPolytope":
        pts = tuple(vec(p) for p in points)
        if dim is None:
            if not pts:
                raise ValueError("cannot infer dimension from an empty point list")
            dim = len(pts[0])
        return cls(dim=dim, vertices=pts)

    def __repr__(self) -> str:
        pts = ", ".join("(" + ", ".join(map(str, v)) + ")" for v in self.vertices[:6])
        more = "" if len(self.vertices) <= 6 else f", ... {len(self.vertices)} vertices"
        return f"VPolytope[{self.dim}d: {pts}{more}]"


class Halfspace(NamedTuple):
    normal: tuple
    offset: Rational


@dataclass(frozen=True)
class HPolytope:
    """Intersection of halfspaces ``normal . x <= offset``."""

    dim: int
    halfspaces: tuple

    def __post_init__(self):
        for h in self.halfspaces:
            if len(h.normal) != self.dim:
                raise DimensionMismatchError("halfspace normal of wrong length")


def check_same_dim(*bodies) -> int:
    dims = {b.dim for b in bodies}
    if len(dims) != 1:
        raise DimensionMismatchError(f"mixed ambient dimensions: {sorted(dims)}")
    return dims.pop()


# ---------------------------------------------------------------------------
# support and membership


def support(body: VPolytope, direction) -> tuple:
    """h(K, a) = max a.v over vertices; returns (value, indices of argmax)."""
    a = vec(direction)
    if len(a) != body.dim:
        raise DimensionMismatchError("direction length does not match body dimension")
    best = None
    argmax: list[int] = []
    for i, v in enumerate(body.vertices):
        val = vdot(a, v)
        if best is None or val > best:
            best = val
            argmax = [i]
        elif val == best:
            argmax.append(i)
    return best, tuple(argmax)


def _in_hull(point: Vec, points: list) -> bool:
    """Membership in conv(points) via a feasibility LP over convex weights."""
    n = len(point)
    builder = lp.ProgramBuilder()
    alphas = builder.add_vars(len(points))
    for k in range(n):
        builder.add_row({a: points[i][k] for i, a in enumerate(alphas)}, point[k])
    builder.add_row({a: ONE for a in alphas}, ONE)
    return lp.feasible_point(builder.build()) is not None


def contains_point(body, point) -> bool:
    """Exact membership test for either representation."""
    x = vec(point)
    if len(x) != body.dim:
        raise DimensionMismatchError("point length does not match body dimension")
    if isinstance(body, HPolytope):
        return all(vdot(h.normal, x) <= h.offset for h in body.halfspaces)
    return _in_hull(x, list(body.vertices))


# ---------------------------------------------------------------------------
# canonical forms


@lru_cache(maxsize=None)
def canonicalize(body: VPolytope) -> VPolytope:
    """Drop every point inside the hull of the others, dedupe and sort.

    Removing a non-extreme point never changes the hull, so a single pass is
    enough; the surviving points are exactly the extreme ones.
    """
    if body.canonical:
        return body
    pts = list(dict.fromkeys(body.vertices))
    if len(pts) > 1:
        i = 0
        while i < len(pts):
            p = pts.pop(i)
            if _in_hull(p, pts):
                continue
            pts.insert(i, p)
            i += 1
    return VPolytope(body.dim, tuple(sorted(pts)), canonical=True)


def same_vertex_set(a: VPolytope, b: VPolytope) -> bool:
    """Exact equality of the represented bodies (canonical vertex lists)."""
    check_same_dim(a, b)
    return canonicalize(a).vertices == canonicalize(b).vertices


# ---------------------------------------------------------------------------
# Minkowski algebra


def translate(body: VPolytope, shift) -> VPolytope:
    t = vec(shift)
    if len(t) != body.dim:
        raise DimensionMismatchError("translation length does not match body dimension")
    verts = tuple(vadd(v, t) for v in body.vertices)
    if body.canonical:
        return VPolytope(body.dim, tuple(sorted(verts)), canonical=True)
    return VPolytope(body.dim, verts)


def negate(body: VPolytope) -> VPolytope:
    verts = tuple(vneg(v) for v in body.vertices)
    if body.canonical:
        return VPolytope(body.dim, tuple(sorted(verts)), canonical=True)
    return VPolytope(body.dim, verts)


def scale(body: VPolytope, factor) -> VPolytope:
    """Dilation by factor >= 0 (compose with ``negate`` for negatives)."""
    f = rat(factor)
    if f < 0:
        raise ValueError("dilation factor must be nonnegative; use negate() first")
    if f == 0:
        return VPolytope(body.dim, (vzero(body.dim),), canonical=True)
    verts = tuple(vscale(f, v) for v in body.vertices)
    if body.canonical:
        return VPolytope(body.dim, tuple(sorted(verts)), canonical=True)
    return VPolytope(body.dim, verts)


def minkowski_sum(a: VPolytope, b: VPolytope) -> VPolytope:
    """Canonicalized pairwise vertex sums of the two bodies."""
    check_same_dim(a, b)
    sums = tuple(vadd(u, v) for u in a.vertices for v in b.vertices)
    return canonicalize(VPolytope(a.dim, sums))


@lru_cache(maxsize=None)
def difference_body(body: VPolytope) -> VPolytope:
    """K + (-K); always origin-symmetric.

    For a body that is already centrally symmetric about c this is just
    2(K - c), which skips the quadratic pairwise-sum canonicalization.
    """
    sym, center = is_centrally_symmetric(body)
    if sym:
        return scale(translate(canonicalize(body), vneg(center)), 2)
    return minkowski_sum(body, negate(body))


@lru_cache(maxsize=None)
def is_centrally_symmetric(body: VPolytope) -> tuple:
    """(True, center) iff the canonical vertex set equals its reflection
    through the vertex mean — the only possible center."""
    k = canonicalize(body)
    c = vertex_centroid(k)
    twice_c = vadd(c, c)
    reflected = tuple(sorted(vsub(twice_c, v) for v in k.vertices))
    if reflected == k.vertices:
        return True, c
    return False, None


def vertex_centroid(body: VPolytope) -> Vec:
    """Arithmetic mean of the vertex list (the centroid, for a simplex)."""
    total = body.vertices[0]
    for v in body.vertices[1:]:
        total = vadd(total, v)
    return vscale(ONE / len(body.vertices), total)


# ---------------------------------------------------------------------------
# simplex facets, halfspaces, enumeration


def is_simplex(body: VPolytope) -> bool:
    k = canonicalize(body)
    if len(k.vertices) != k.dim + 1:
        return False
    base = k.vertices[0]
    return rank([vsub(v, base) for v in k.vertices[1:]]) == k.dim


def normalize_halfspace(half: Halfspace) -> Halfspace:
    """Scale by a positive rational so the normal is a primitive integer
    vector; makes halfspace lists comparable."""
    entries = list(half.normal) + [half.offset]
    denom_lcm = 1
    for q in entries:
        denom_lcm = math.lcm(denom_lcm, int(q.denominator))
    ints = [int(q * denom_lcm) for q in entries]
    g = 0
    for z in ints[:-1]:
        g = math.gcd(g, abs(z))
    if g == 0:
        raise ValueError("zero normal in halfspace")
    scale_q = Rational(denom_lcm, g)
    return Halfspace(
        tuple(q * scale_q for q in half.normal), half.offset * scale_q
    )


@lru_cache(maxsize=None)
def simplex_hrep(body: VPolytope) -> HPolytope:
    """Exact facet description of a simplex: one hyperplane through each
    n-subset of vertices, oriented by the omitted vertex, coefficients from
    cofactor determinants."""
    s = canonicalize(body)
    n = s.dim
    if len(s.vertices) != n + 1 or not is_simplex(s):
        raise DegenerateSimplexError(
            f"need {n + 1} affinely independent vertices, got {len(s.vertices)}"
        )
    halves = []
    for i in range(n + 1):
        rest = [v for k, v in enumerate(s.vertices) if k != i]
        base = rest[0]
        dirs = [vsub(v, base) for v in rest[1:]]  # (n-1) x n
        normal = []
        for j in range(n):
            minor = [[d[k] for k in range(n) if k != j] for d in dirs]
            sign = ONE if j % 2 == 0 else -ONE
            normal.append(sign * (det(minor) if minor else ONE))
        normal_t = tuple(normal)
        offset = vdot(normal_t, base)
        inside = vdot(normal_t, s.vertices[i])
        if inside == offset:
            raise DegenerateSimplexError("vertex lies on the opposite facet")
        if inside > offset:
            normal_t = vneg(normal_t)
            offset = -offset
        halves.append(normalize_halfspace(Halfspace(normal_t, offset)))
    return HPolytope(n, tuple(halves))


def intersect(a: HPolytope, b: HPolytope) -> HPolytope:
    """Concatenated (deduplicated) halfspace lists."""
    check_same_dim(a, b)
    seen = dict.fromkeys(
        normalize_halfspace(h) for h in (*a.halfspaces, *b.halfspaces)
    )
    return HPolytope(a.dim, tuple(seen))


def _hrep_support(region: HPolytope, direction: Vec):
    """max direction.x over the region, or None when unbounded."""
    builder = lp.ProgramBuilder()
    xs = [builder.add_var(objective=-direction[k], free=True) for k in range(region.dim)]
    for h in region.halfspaces:
        slack = builder.add_var()
        row = {x: h.normal[k] for k, x in enumerate(xs) if h.normal[k]}
        row[slack] = ONE
        builder.add_row(row, h.offset)
    out = lp.solve(builder.build())
    if out.status == lp.UNBOUNDED:
        return None
    if out.status == lp.INFEASIBLE:
        raise ValueError("empty halfspace intersection")
    return -out.value


def enumerate_vertices(region: HPolytope, *, max_dim: int = 4, max_halfspaces: int = 16) -> VPolytope:
    """Brute-force vertex enumeration of a bounded low-dimensional H-polytope.

    Solves the square system of every dim-subset of halfspaces and keeps the
    feasible unique solutions; each such point sits on dim independent active
    constraints and is therefore a vertex, and every vertex arises this way.
    """
    n = region.dim
    if n > max_dim or len(region.halfspaces) > max_halfspaces:
        raise ScaleGuardError(
            f"enumeration guard: dim {n} (max {max_dim}), "
            f"{len(region.halfspaces)} halfspaces (max {max_halfspaces})"
        )
    for k in range(n):
        for sgn in (ONE, -ONE):
            d = [ZERO] * n
            d[k] = sgn
            if _hrep_support(region, tuple(d)) is None:
                raise UnboundedRegionError("halfspace intersection is unbounded")
    found = {}
    for subset in itertools.combinations(region.halfspaces, n):
        res = solve_linear([h.normal for h in subset], [h.offset for h in subset])
        if res.status != "unique":
            continue
        x = res.solution
        if all(vdot(h.normal, x) <= h.offset for h in region.halfspaces):
            found[x] = None
    if not found:
        raise ValueError("empty halfspace intersection")
    return VPolytope(n, tuple(sorted(found)), canonical=True)


# ---------------------------------------------------------------------------
# planar helpers


def _ccw_sorted(points: list, center: Vec) -> list:
    def half(d):
        return 0 if (d[1] > 0 or (d[1] == 0 and d[0] > 0)) else 1

    def compare(p, q):
        dp, dq = vsub(p, center), vsub(q, center)
        hp, hq = half(dp), half(dq)
        if hp != hq:
            return -1 if hp < hq else 1
        cross = dp[0] * dq[1] - dp[1] * dq[0]
        if cross == 0:
            return 0
        return -1 if cross > 0 else 1

    return sorted(points, key=cmp_to_key(compare))


def polygon_facet_balance(body: VPolytope) -> bool:
    """Check that length-weighted outer normals of a polygon sum to zero.

    Rotating each boundary edge vector by 90 degrees gives exactly
    edge-length times the unit normal without leaving the rationals, so the
    facet-normal balance can be verified bit-exactly.
    """
    if body.dim != 2:
        raise DimensionMismatchError("facet balance is implemented for polygons only")
    k = canonicalize(body)
    if len(k.vertices) < 3:
        raise ValueError("degenerate polygon")
    ring = _ccw_sorted(list(k.vertices), vertex_centroid(k))
    total = (ZERO, ZERO)
    for p, q in zip(ring, ring[1:] + ring[:1]):
        e = vsub(q, p)
        total = vadd(total, (e[1], -e[0]))
    return total == (ZERO, ZERO)


# ---------------------------------------------------------------------------
# JSON forms (the on-disk body format of the CLI)


def body_to_json(body) -> dict:
    if isinstance(body, VPolytope):
        return {
            "dim": body.dim,
            "vertices": [[rat_str(x) for x in v] for v in body.vertices],
        }
    return {
        "dim": body.dim,
        "halfspaces": [
            {"normal": [rat_str(x) for x in h.normal], "offset": rat_str(h.offset)}
            for h in body.halfspaces
        ],
    }


def body_from_json(data: dict):
    if not isinstance(data, dict) or "dim" not in data:
        raise ValueError("body JSON needs a 'dim' field")
    dim = data["dim"]
    if not isinstance(dim, int) or dim < 1:
        raise ValueError("'dim' must be a positive integer")
    if "vertices" in data:
        return VPolytope.from_points(data["vertices"], dim=dim)
    if "halfspaces" in data:
        halves = tuple(
            Halfspace(vec(h["normal"]), rat(h["offset"])) for h in data["halfspaces"]
        )
        return HPolytope(dim, halves)
    raise ValueError("body JSON needs 'vertices' or 'halfspaces'")
