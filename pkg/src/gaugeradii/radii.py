"""Circumradius, inradius, diameter and Minkowski asymmetry of polytopes
with respect to a (possibly non-symmetric) polytopal gauge body, all exact.

The circumradius R(K, C) — the least dilation factor of C that can cover a
translate of K — is the workhorse: the inradius is its reciprocal with the
roles swapped, the asymmetry is R(-K, K), and translative containment tests
throughout the library are "circumradius <= 1".  Each functional returns an
exact optimum together with a witness translation, so every value can be
re-certified independently.

Results are memoized on the (immutable, canonicalized) bodies; a verification
suite touches the same radii many times over.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import lp
from .bodies import (
    VPolytope,
    canonicalize,
    check_same_dim,
    contains_point,
    difference_body,
    is_centrally_symmetric,
    negate,
    same_vertex_set,
    scale,
    support,
)
from .ratcore import ONE, ZERO, Rational, Vec, is_zero_vec, vec, vscale


class DegenerateGaugeError(ValueError):
    """The gauge body cannot measure anything (e.g. a single point)."""


@dataclass(frozen=True)
class RadiiResult:
    """An exact radius value with its certifying data.

    ``translation`` is the witness shift of the defining containment;
    ``attaining`` is operation-specific: contact vertex indices for the
    circumradius, the diametral vertex pair for the diameter, None otherwise.
    """

    value: Rational
    translation: tuple | None = None
    attaining: tuple | None = None


@dataclass(frozen=True)
class AsymmetryResult:
    s: Rational
    center: tuple


# ---------------------------------------------------------------------------
# circumradius


class _CircumLayout:
    """Row/column bookkeeping of the circumradius LP, for dual extraction."""

    def __init__(self, n: int, body_count: int, gauge_count: int):
        self.n = n
        self.body_count = body_count
        self.gauge_count = gauge_count

    def dual_block(self, dual: tuple, i: int) -> tuple:
        """(normal vector y_i, mass multiplier beta_i) of body vertex i."""
        start = i * (self.n + 1)
        return tuple(dual[start : start + self.n]), dual[start + self.n]


def circumradius_program(body: VPolytope, gauge: VPolytope):
    """Build the containment LP for R(body, gauge).

    "v_i in t + lambda*C" is not linear in (t, lambda) with C given by
    vertices, since it reads v_i = t + lambda * (convex combination of c_j).
    Substituting nu_ij := lambda * mu_ij absorbs the product: the constraints
    become

        v_i = t + sum_j nu_ij c_j      and      sum_j nu_ij = lambda,

    which are linear, with nu >= 0.  Minimizing lambda yields the exact
    circumradius; this substitution is what makes every radius in the library
    a single LP.
    """
    n = check_same_dim(body, gauge)
    builder = lp.ProgramBuilder()
    t = builder.add_vars(n, free=True)
    lam = builder.add_var(objective=ONE)
    nus = [builder.add_vars(len(gauge.vertices)) for _ in body.vertices]
    for i, v in enumerate(body.vertices):
        for k in range(n):
            row = {t[k]: ONE}
            for j, c in enumerate(gauge.vertices):
                if c[k]:
                    row[nus[i][j]] = c[k]
            builder.add_row(row, v[k])
        mass = {nu: ONE for nu in nus[i]}
        mass[lam] = -ONE
        builder.add_row(mass, ZERO)
    layout = _CircumLayout(n, len(body.vertices), len(gauge.vertices))
    return builder.build(), (t, lam), layout


def circumradius(body: VPolytope, gauge: VPolytope) -> RadiiResult | None:
    """R(body, gauge); None when no dilate of the gauge can cover the body
    (the affine hulls are incompatible)."""
    return _circumradius(canonicalize(body), canonicalize(gauge))


@lru_cache(maxsize=None)
def _circumradius(body: VPolytope, gauge: VPolytope) -> RadiiResult | None:
    program, (t_vars, lam_var), layout = circumradius_program(body, gauge)
    out = lp.solve(program)
    if out.status == lp.INFEASIBLE:
        return None
    if out.status != lp.OPTIMAL:  # minimizing a nonnegative variable
        raise RuntimeError("circumradius LP cannot be unbounded")
    translation = tuple(out.primal[v] for v in t_vars)
    contacts = tuple(
        i
        for i in range(layout.body_count)
        if not is_zero_vec(layout.dual_block(out.dual, i)[0])
    )
    return RadiiResult(out.primal[lam_var], translation, contacts)


def circumradius_outcome(body: VPolytope, gauge: VPolytope):
    """Solve the circumradius LP and return the raw pieces (program, outcome,
    layout) for consumers that read the dual, e.g. certificate extraction."""
    body, gauge = canonicalize(body), canonicalize(gauge)
    program, (t_vars, lam_var), layout = circumradius_program(body, gauge)
    out = lp.solve(program)
    return program, out, layout, t_vars, lam_var, body, gauge


# ---------------------------------------------------------------------------
# inradius


def inradius(body: VPolytope, gauge: VPolytope) -> RadiiResult:
    """r(body, gauge): the largest factor rho with rho*gauge fitting in a
    translate of the body (0 when the body is lower-dimensional)."""
    return _inradius(canonicalize(body), canonicalize(gauge))


@lru_cache(maxsize=None)
def _inradius(body: VPolytope, gauge: VPolytope) -> RadiiResult:
    n = check_same_dim(body, gauge)
    builder = lp.ProgramBuilder()
    t = builder.add_vars(n, free=True)
    lam = builder.add_var(objective=-ONE)  # maximize lambda
    # lambda*c_j + t must be a convex combination of body vertices, for each
    # gauge vertex c_j; alpha are the combination weights.
    for c in gauge.vertices:
        alphas = builder.add_vars(len(body.vertices))
        for k in range(n):
            row = {t[k]: ONE}
            if c[k]:
                row[lam] = c[k]
            for a, v in zip(alphas, body.vertices):
                if v[k]:
                    row[a] = -v[k]
            builder.add_row(row, ZERO)
        builder.add_row({a: ONE for a in alphas}, ONE)
    out = lp.solve(builder.build())
    if out.status == lp.UNBOUNDED:
        raise DegenerateGaugeError("inradius is unbounded: gauge is a single point")
    if out.status != lp.OPTIMAL:
        raise RuntimeError("inradius LP is always feasible")
    return RadiiResult(-out.value, tuple(out.primal[v] for v in t))


# ---------------------------------------------------------------------------
# norms, diameter, breadth


def sym_gauge_norm(z, gauge: VPolytope) -> Rational | None:
    """Norm of z in the symmetrized gauge (C - C)/2: the least rho with
    z in (rho/2)(C - C).  None when z leaves the span of C - C."""
    zv = vec(z)
    if len(zv) != gauge.dim:
        raise ValueError("vector length does not match gauge dimension")
    if is_zero_vec(zv):
        return ZERO
    return _sym_gauge_norm(zv, canonicalize(gauge))


@lru_cache(maxsize=None)
def _sym_gauge_norm(zv: Vec, gauge: VPolytope) -> Rational | None:
    # z = sum nu_j c_j - sum nu'_j c_j with sum nu = sum nu' = rho/2;
    # minimizing rho = sum nu + sum nu' under the balance row gives the norm.
    n = gauge.dim
    builder = lp.ProgramBuilder()
    plus = builder.add_vars(len(gauge.vertices), objective=ONE)
    minus = builder.add_vars(len(gauge.vertices), objective=ONE)
    for k in range(n):
        row = {}
        for p, m, c in zip(plus, minus, gauge.vertices):
            if c[k]:
                row[p] = c[k]
                row[m] = -c[k]
        builder.add_row(row, zv[k])
    balance = {p: ONE for p in plus}
    balance.update({m: -ONE for m in minus})
    builder.add_row(balance, ZERO)
    out = lp.solve(builder.build())
    if out.status == lp.INFEASIBLE:
        return None
    return out.value


def diameter(body: VPolytope, gauge: VPolytope) -> RadiiResult | None:
    """D(body, gauge): the largest pairwise vertex distance in the
    (C - C)/2 norm, with the attaining pair.  None if some difference leaves
    the span of the gauge."""
    return _diameter(canonicalize(body), canonicalize(gauge))


@lru_cache(maxsize=None)
def _diameter(body: VPolytope, gauge: VPolytope) -> RadiiResult | None:
    check_same_dim(body, gauge)
    verts = body.vertices  # canonical, hence sorted: first attaining pair is
    best = ZERO            # the lexicographically smallest one
    pair = None
    for i in range(len(verts)):
        for j in range(i + 1, len(verts)):
            norm = sym_gauge_norm(tuple(a - b for a, b in zip(verts[j], verts[i])), gauge)
            if norm is None:
                return None
            if norm > best:
                best = norm
                pair = (verts[i], verts[j])
    return RadiiResult(best, attaining=pair)


def breadth(body: VPolytope, gauge: VPolytope, direction) -> Rational:
    """s-breadth: 2 h(K - K, s) / h(C - C, s), via support sums."""
    d = vec(direction)
    if is_zero_vec(d):
        raise ValueError("breadth needs a nonzero direction")
    check_same_dim(body, gauge)
    num = support(body, d)[0] + support(body, tuple(-x for x in d))[0]
    den = support(gauge, d)[0] + support(gauge, tuple(-x for x in d))[0]
    if den == 0:
        raise DegenerateGaugeError("gauge has zero breadth in this direction")
    return 2 * num / den


def jung_ratio(body: VPolytope, gauge: VPolytope) -> Rational | None:
    """Circumradius over diameter; None when the circumradius is infinite."""
    circ = circumradius(body, gauge)
    if circ is None:
        return None
    diam = diameter(body, gauge)
    if diam is None or diam.value == 0:
        raise ValueError("Jung ratio needs a body with positive diameter")
    return circ.value / diam.value


# ---------------------------------------------------------------------------
# asymmetry and Minkowski centers


def asymmetry(body: VPolytope) -> AsymmetryResult:
    """Minkowski asymmetry s(K) = R(-K, K) with one Minkowski center.

    The center follows from the witness translation: -K in t + sK means
    -(K - c) in s(K - c) for c = -t/(1 + s).  Centers are not unique in
    general; predicates quantifying over centers must use the full center
    polytope (see ``center_polytope_constraints``), never just this one.
    """
    return _asymmetry(canonicalize(body))


@lru_cache(maxsize=None)
def _asymmetry(body: VPolytope) -> AsymmetryResult:
    sym, center = is_centrally_symmetric(body)
    if sym:  # s = 1 exactly iff the body is symmetric; center is forced
        return AsymmetryResult(ONE, center)
    result = circumradius(negate(body), body)
    if result is None:
        raise ValueError("asymmetry needs a full-dimensional body")
    s = result.value
    center = vscale(-ONE / (ONE + s), result.translation)
    return AsymmetryResult(s, center)


def is_minkowski_center(body: VPolytope, point) -> bool:
    """Exact check of -(K - c) in s(K)(K - c), one membership LP per vertex."""
    c = vec(point)
    k = canonicalize(body)
    s = asymmetry(k).s
    shifted = vscale(ONE + s, c)
    target = scale(k, s)
    return all(
        contains_point(target, tuple(sc - v for sc, v in zip(shifted, vert)))
        for vert in k.vertices
    )


def center_polytope_constraints(builder: lp.ProgramBuilder, body: VPolytope, c_vars) -> None:
    """Constrain LP variables ``c_vars`` to the Minkowski-center polytope of
    the body: for every vertex v, -v + (1+s)c must lie in s*K."""
    k = canonicalize(body)
    s = asymmetry(k).s
    n = k.dim
    for v in k.vertices:
        gammas = builder.add_vars(len(k.vertices))
        for coord in range(n):
            row = {c_vars[coord]: ONE + s}
            for g, w in zip(gammas, k.vertices):
                if w[coord]:
                    row[g] = -s * w[coord]
            builder.add_row(row, v[coord])
        builder.add_row({g: ONE for g in gammas}, ONE)


# ---------------------------------------------------------------------------
# constant width


def is_constant_width(body: VPolytope, gauge: VPolytope) -> bool:
    """K has constant width iff K - K equals D(K, C)/2 (C - C) exactly."""
    diam = diameter(body, gauge)
    if diam is None:
        raise ValueError("constant width needs a gauge spanning the body")
    return same_vertex_set(
        difference_body(body), scale(difference_body(gauge), diam.value / 2)
    )
