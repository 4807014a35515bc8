"""Evaluators for the radius inequality chains, equivalence conditions and
concentricity predicates, each reporting exact per-link values and equality
flags.

Design rules observed throughout:

* Equality flags compare exact rationals.  There are no tolerances anywhere
  in this module.
* Translative containment ``A in t + B`` is decided as "circumradius <= 1";
  optimal containment as "circumradius = 1".  Inclusions between
  origin-symmetric bodies skip the translation variable (equivalent for
  symmetric sets, and much cheaper) via gauge-function maxima.
* Predicates of the form "there exists a Minkowski center c ..." are decided
  by one joint feasibility LP over the full center polytope.  Minkowski
  centers are not unique, so testing only the returned center would be wrong.
* Completeness is decided only where an exact criterion exists: simplices
  (via the symmetrized-gauge characterization) and constant-width bodies.
  Everything else reports "undecidable" rather than guessing.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import lp
from .bodies import (
    DegenerateSimplexError,
    VPolytope,
    canonicalize,
    check_same_dim,
    contains_point,
    difference_body,
    is_centrally_symmetric,
    is_simplex,
    minkowski_sum,
    negate,
    same_vertex_set,
    scale,
    simplex_hrep,
    support,
    translate,
)
from .radii import (
    asymmetry,
    center_polytope_constraints,
    circumradius,
    diameter,
    inradius,
    is_constant_width,
    is_minkowski_center,
    sym_gauge_norm,
)
from .ratcore import ONE, ZERO, Rational, Vec, is_zero_vec, rat, rat_str, solve_linear, vec, vsub, vzero


class GaugeNotSymmetricError(ValueError):
    """This chain is only defined for a centrally symmetric gauge."""


class NotCenteredError(ValueError):
    """The body must be Minkowski centered at the origin."""


class InfiniteRadiusError(ValueError):
    """A chain value would be infinite (affine hulls incompatible)."""


# ---------------------------------------------------------------------------
# gauge function


class OriginNotInGaugeError(ValueError):
    pass


@lru_cache(maxsize=None)
def _contains_origin(body: VPolytope) -> bool:
    return contains_point(body, vzero(body.dim))


def gauge_value(z, body: VPolytope) -> Rational | None:
    """Gauge function of a body containing the origin: the least rho >= 0
    with z in rho * body.  None when z is outside the cone of the body.

    For non-symmetric bodies this is *not* a norm (gauge(z) != gauge(-z) in
    general) and deliberately not called a length.
    """
    k = canonicalize(body)
    if not _contains_origin(k):
        raise OriginNotInGaugeError("gauge function needs the origin inside the body")
    zv = vec(z)
    if len(zv) != k.dim:
        raise ValueError("vector length does not match body dimension")
    if is_zero_vec(zv):
        return ZERO
    return _gauge_value(zv, k)


@lru_cache(maxsize=None)
def _gauge_value(zv: Vec, body: VPolytope) -> Rational | None:
    builder = lp.ProgramBuilder()
    nus = builder.add_vars(len(body.vertices), objective=ONE)
    for k in range(body.dim):
        builder.add_row(
            {nu: v[k] for nu, v in zip(nus, body.vertices) if v[k]}, zv[k]
        )
    out = lp.solve(builder.build())
    return out.value if out.status == lp.OPTIMAL else None


# ---------------------------------------------------------------------------
# containment factors


def translative_factor(body: VPolytope, gauge: VPolytope) -> Rational:
    """Least rho with body in a translate of rho*gauge (a circumradius)."""
    res = circumradius(body, gauge)
    if res is None:
        raise InfiniteRadiusError("no translate of any dilate contains the body")
    return res.value


def symmetric_factor(body: VPolytope, sym_gauge: VPolytope) -> Rational:
    """Least rho with body in rho*sym_gauge, no translation.

    Used for inclusions whose right side is origin-symmetric, where the
    translated and direct factors coincide whenever the left side is also
    origin-symmetric (and upper-bound the translated one otherwise).
    """
    worst = ZERO
    for v in canonicalize(body).vertices:
        g = gauge_value(v, sym_gauge)
        if g is None:
            raise InfiniteRadiusError("body leaves the span of the gauge")
        if g > worst:
            worst = g
    return worst


# ---------------------------------------------------------------------------
# inequality chains


CHAINS = (
    "bohnenblust",
    "extended-bohnenblust",
    "asymmetric-jung-bound",
    "concentricity",
    "symmetric-gauge-chain",
    "gauge-asymmetry-chain",
    "body-asymmetry-chain",
    "mirrored-concentricity",
    "generalized-concentricity",
    "complete-chain",
    "extended-jung",
)

_SYMMETRIC_ONLY = {"bohnenblust", "concentricity", "symmetric-gauge-chain"}


@dataclass(frozen=True)
class ChainReport:
    """Exact link values of one inequality chain.

    For ``kind == "values"`` the i-th relation compares values[i] with
    values[i+1]; for ``kind == "inclusions"`` the values are containment
    factors, each compared against 1.  ``">"`` marks a violated link (never
    expected; it would witness a counterexample), and ``holds`` is True when
    no link is violated.
    """

    chain_id: str
    values: tuple
    relations: tuple
    holds: bool
    kind: str = "values"
    note: str | None = None

    @property
    def all_equal(self) -> bool:
        return all(r == "=" for r in self.relations)

    def to_json(self) -> dict:
        data = {
            "chain": self.chain_id,
            "values": [rat_str(v) for v in self.values],
            "relations": list(self.relations),
            "holds": self.holds,
            "kind": self.kind,
        }
        if self.note:
            data["note"] = self.note
        return data


def _relation(a, b) -> str:
    if a == b:
        return "="
    return "<" if a < b else ">"


def _values_report(chain_id: str, values: tuple, note: str | None = None) -> ChainReport:
    relations = tuple(_relation(a, b) for a, b in zip(values, values[1:]))
    return ChainReport(chain_id, values, relations, ">" not in relations, "values", note)


def _inclusion_report(chain_id: str, factors: tuple, note: str | None = None) -> ChainReport:
    relations = tuple(_relation(f, ONE) for f in factors)
    return ChainReport(chain_id, factors, relations, ">" not in relations, "inclusions", note)


def eval_chain(chain_id: str, body: VPolytope, gauge: VPolytope) -> ChainReport:
    """Evaluate one inequality chain on (body, gauge) with exact relations."""
    if chain_id not in CHAINS:
        raise ValueError(f"unknown chain {chain_id!r}; choose from {CHAINS}")
    if chain_id in _SYMMETRIC_ONLY and not is_centrally_symmetric(gauge)[0]:
        raise GaugeNotSymmetricError(f"chain {chain_id!r} needs a symmetric gauge")
    K, C = canonicalize(body), canonicalize(gauge)
    n = rat(check_same_dim(K, C))

    if chain_id == "extended-jung":
        return _extended_jung_chain(K, C)

    R = translative_factor(K, C)
    d = diameter(K, C)
    if d is None:
        raise InfiniteRadiusError("diameter is infinite for this pair")
    D = d.value
    sK = asymmetry(K).s
    sC = asymmetry(C).s
    r = inradius(K, C).value
    r_mirror = inradius(K, negate(C)).value

    if chain_id == "bohnenblust":
        return _values_report(chain_id, (R / D, n / (n + 1)))
    if chain_id == "extended-bohnenblust":
        return _values_report(chain_id, (R / D, sK * (sC + 1) / (2 * (sK + 1))))
    if chain_id == "asymmetric-jung-bound":
        return _values_report(chain_id, (R / D, n * (sC + 1) / (2 * (n + 1))))
    if chain_id == "concentricity":
        return _values_report(chain_id, (r + R, D))
    if chain_id == "symmetric-gauge-chain":
        return _values_report(
            chain_id, ((1 + sK) * r, r + R, (1 + sK) / sK * R, D)
        )
    if chain_id == "gauge-asymmetry-chain":
        return _values_report(
            chain_id,
            ((1 + sK) * r_mirror, r_mirror + R, sC * r + R, (1 + sC) * D / 2),
        )
    if chain_id == "body-asymmetry-chain":
        return _values_report(
            chain_id,
            ((1 + sK) * r_mirror, r_mirror + R, (1 + sK) / sK * R, (1 + sC) * D / 2),
        )
    if chain_id == "mirrored-concentricity":
        return _values_report(chain_id, (r_mirror + R, (1 + sC) * D / 2))
    if chain_id == "generalized-concentricity":
        return _values_report(chain_id, (sC * r + R, (1 + sC) * D / 2))
    # complete-chain: evaluated on any pair, meaningful when K is complete.
    return _values_report(
        chain_id,
        (
            (1 + sK) * r_mirror,
            r_mirror + R,
            (1 + sK) / sK * R,
            sC * r + R,
            (1 + sC) * D / 2,
        ),
        note="hypothesis: body complete with respect to the gauge",
    )


def _extended_jung_chain(K: VPolytope, C: VPolytope) -> ChainReport:
    """Inclusion chain: (s+1)/s K in K-K in D/2 (C-C), the last translatively
    inside D/2 (s(C)+1) C.  The first link is a direct inclusion after
    re-centering K at a Minkowski center."""
    asym = asymmetry(K)
    sK = asym.s
    K0 = translate(K, tuple(-x for x in asym.center))
    KK = difference_body(K)
    CC = difference_body(C)
    d = diameter(K, C)
    if d is None:
        raise InfiniteRadiusError("diameter is infinite for this pair")
    D = d.value
    sC = asymmetry(C).s
    f1 = symmetric_factor(scale(K0, (sK + 1) / sK), KK)
    f2 = symmetric_factor(KK, CC) / (D / 2)
    f3 = translative_factor(CC, C) / (sC + 1)
    return _inclusion_report(
        "extended-jung",
        (f1, f2, f3),
        note="first link re-centered at a Minkowski center of the body",
    )


# ---------------------------------------------------------------------------
# condition vectors


@dataclass(frozen=True)
class ConditionVector:
    """Named boolean outcomes of one equivalence theorem's conditions.

    ``consistent`` must be True on every instance satisfying the theorem's
    hypotheses; a mixed vector witnesses an implementation bug, not a poor
    input.
    """

    entries: tuple  # of (name, bool) pairs

    @property
    def flags(self) -> tuple:
        return tuple(flag for _name, flag in self.entries)

    @property
    def consistent(self) -> bool:
        return len(set(self.flags)) == 1

    @property
    def all_true(self) -> bool:
        return all(self.flags)

    def as_dict(self) -> dict:
        return dict(self.entries)

    def to_json(self) -> dict:
        return {"conditions": dict(self.entries), "consistent": self.consistent}


# ---------------------------------------------------------------------------
# elementary radius bounds (used by the main chains)


@dataclass(frozen=True)
class RadiusBoundsReport:
    """The five elementary radius/asymmetry bounds, labeled (a)..(e), plus
    the concentricity implications triggered by equality in (a)."""

    checks: tuple  # (("a", bool), ..., ("e", bool))
    gauge_equality_followup: bool | None  # s(C) = R/r(K,-C): K mirrored conc. wrt C
    body_equality_followup: bool | None  # s(K) = R/r(K,-C): C mirrored conc. wrt K

    @property
    def all_hold(self) -> bool:
        return all(flag for _name, flag in self.checks)


def radius_bound_checks(body: VPolytope, gauge: VPolytope) -> RadiusBoundsReport:
    K, C = canonicalize(body), canonicalize(gauge)
    R = translative_factor(K, C)
    R_neg = translative_factor(K, negate(C))
    r = inradius(K, C).value
    r_neg = inradius(K, negate(C)).value
    CC = difference_body(C)
    R_cc = translative_factor(K, CC)
    r_cc = inradius(K, CC).value
    sK = asymmetry(K).s
    sC = asymmetry(C).s

    # All bounds are cross-multiplied so zero inradii (flat bodies) stay exact.
    a = max(sK, sC) * r_neg <= R
    b = (sC + 1) * R_cc <= sC * R and R <= (sC + 1) * R_cc
    c = (sC + 1) * r_cc <= sC * r and r <= (sC + 1) * r_cc
    d = min(sK, sC) * r >= r_neg and min(sK, sC) * R >= R_neg
    e = sC * r * R_cc >= R * r_cc

    gauge_followup = None
    if sC * r_neg == R:
        gauge_followup = is_mirrored_concentric(K, C)
    body_followup = None
    if sK * r_neg == R:
        body_followup = is_mirrored_concentric(C, K)
    return RadiusBoundsReport(
        checks=(("a", a), ("b", b), ("c", c), ("d", d), ("e", e)),
        gauge_equality_followup=gauge_followup,
        body_equality_followup=body_followup,
    )


def breadth_ratio_bounds(gauge: VPolytope, r, directions) -> bool:
    """For a Minkowski-centered gauge C and r in [0, 1], the ratio
    (h(C,a) + h(rC,-a)) / (h(C,a) + h(C,-a)) stays within
    [(1 + s r)/(1 + s), (r + s)/(1 + s)] for every direction a."""
    C = canonicalize(gauge)
    rho = rat(r)
    if not (ZERO <= rho <= ONE):
        raise ValueError("the shrink factor must lie in [0, 1]")
    if not is_minkowski_center(C, vzero(C.dim)):
        raise NotCenteredError("gauge must be Minkowski centered at the origin")
    s = asymmetry(C).s
    for a in directions:
        av = vec(a)
        if is_zero_vec(av):
            raise ValueError("breadth bound needs nonzero directions")
        h_plus = support(C, av)[0]
        h_minus = support(C, tuple(-x for x in av))[0]
        num = h_plus + rho * h_minus
        den = h_plus + h_minus
        if not ((1 + s * rho) * den <= (1 + s) * num <= (rho + s) * den):
            return False
    return True


@dataclass(frozen=True)
class RatioBoundsReport:
    """Circum/in ratio against the asymmetries: the lower bound always, the
    upper bound where completeness is decidable."""

    lower_holds: bool
    completeness: str  # "complete" | "incomplete" | "undecidable"
    upper_holds: bool | None
    equality_concentric: bool | None  # mutual concentricity at upper equality


def ratio_bound_checks(body: VPolytope, gauge: VPolytope) -> RatioBoundsReport:
    K, C = canonicalize(body), canonicalize(gauge)
    R = translative_factor(K, C)
    r = inradius(K, C).value
    sK = asymmetry(K).s
    sC = asymmetry(C).s
    lower = R * sC >= r * sK and R * sK >= r * sC

    if is_simplex(K):
        completeness = "complete" if simplex_complete(K, C)[0] else "incomplete"
    elif is_constant_width(K, C):
        completeness = "complete"
    else:
        completeness = "undecidable"
    upper = None
    equality_followup = None
    if completeness == "complete":
        upper = R <= sK * sC * r
        if R == sK * sC * r:
            equality_followup = are_mutually_concentric(K, C)
    return RatioBoundsReport(lower, completeness, upper, equality_followup)


# ---------------------------------------------------------------------------
# concentricity predicates


def is_minkowski_concentric(body: VPolytope, gauge: VPolytope) -> bool:
    """Does r(K,C)(C-c) in K-t in R(K,C)(C-c) hold for some Minkowski center
    c of the gauge and some translation t?"""
    return _concentric_feasible(body, gauge, mirrored=False, mutual=False)


def is_mirrored_concentric(body: VPolytope, gauge: VPolytope, *, mutual: bool = False) -> bool:
    """Mirrored variant: -r(K,-C)(C-c) in K-t in R(K,C)(C-c); with
    ``mutual`` the translation t must itself be a Minkowski center of K."""
    return _concentric_feasible(body, gauge, mirrored=True, mutual=mutual)


def are_mutually_concentric(body: VPolytope, gauge: VPolytope) -> bool:
    """Minkowski concentric with t a Minkowski center of the body, which
    makes the relation symmetric in the two sets."""
    return _concentric_feasible(body, gauge, mirrored=False, mutual=True)


def _concentric_feasible(body: VPolytope, gauge: VPolytope, mirrored: bool, mutual: bool) -> bool:
    K, C = canonicalize(body), canonicalize(gauge)
    n = check_same_dim(K, C)
    circ = circumradius(K, C)
    if circ is None:
        return False
    R = circ.value
    if mirrored:
        r = inradius(K, negate(C)).value
        inner_sign = -ONE
    else:
        r = inradius(K, C).value
        inner_sign = ONE
    builder = lp.ProgramBuilder()
    c_vars = builder.add_vars(n, free=True)
    t_vars = builder.add_vars(n, free=True)
    center_polytope_constraints(builder, C, c_vars)
    if mutual:
        center_polytope_constraints(builder, K, t_vars)
    # inner: inner_sign * r * (w - c) + t in K, for every gauge vertex w
    for w in C.vertices:
        deltas = builder.add_vars(len(K.vertices))
        for k in range(n):
            row = {c_vars[k]: -inner_sign * r, t_vars[k]: ONE}
            for dvar, v in zip(deltas, K.vertices):
                if v[k]:
                    row[dvar] = -v[k]
            builder.add_row(row, -inner_sign * r * w[k])
        builder.add_row({dvar: ONE for dvar in deltas}, ONE)
    # outer: v - t in R(C - c), i.e. v - t + R c = R * (convex comb of C)
    for v in K.vertices:
        eps_vars = builder.add_vars(len(C.vertices))
        for k in range(n):
            row = {t_vars[k]: -ONE, c_vars[k]: R}
            for evar, w in zip(eps_vars, C.vertices):
                if w[k]:
                    row[evar] = -R * w[k]
            builder.add_row(row, -v[k])
        builder.add_row({evar: ONE for evar in eps_vars}, ONE)
    return lp.feasible_point(builder.build()) is not None


# ---------------------------------------------------------------------------
# completeness of simplices


def simplex_complete(simplex: VPolytope, gauge: VPolytope):
    """Decide diametral completeness of a simplex with respect to the gauge.

    Completeness is invariant under symmetrizing the gauge, and for the
    symmetric gauge C' = C - C a simplex is complete iff

        S - S  in  D(S,C') C'  in  (n+1)((S - c) ∩ (-S + c))   for some c.

    The left inclusion is checked by vertex memberships; the right one is one
    feasibility LP over c, since by symmetry of C' both intersection halves
    impose the same facet constraints  a_f . c <= b_f - h(D C', a_f)/(n+1).

    Returns (complete, witness c or None).
    """
    S = canonicalize(simplex)
    hrep = simplex_hrep(S)  # raises DegenerateSimplexError when not a simplex
    n = S.dim
    C2 = difference_body(gauge)
    d = diameter(S, C2)
    if d is None:
        raise InfiniteRadiusError("gauge does not span the simplex")
    D2 = d.value
    SS = difference_body(S)
    for u in SS.vertices:
        g = gauge_value(u, C2)
        if g is None or g > D2:
            return False, None
    builder = lp.ProgramBuilder()
    c_vars = builder.add_vars(n, free=True)
    for half in hrep.halfspaces:
        h = D2 * support(C2, half.normal)[0]
        slack = builder.add_var()
        row = {c_vars[k]: half.normal[k] for k in range(n) if half.normal[k]}
        row[slack] = ONE
        builder.add_row(row, half.offset - h / (n + 1))
    point = lp.feasible_point(builder.build())
    if point is None:
        return False, None
    return True, tuple(point[v] for v in c_vars)


def is_equilateral(simplex: VPolytope, gauge: VPolytope) -> bool:
    """All edges of the simplex have the same symmetrized-gauge length
    (equivalently: every edge is diametral)."""
    S = canonicalize(simplex)
    simplex_hrep(S)  # validates the simplex
    norms = set()
    verts = S.vertices
    for i in range(len(verts)):
        for j in range(i + 1, len(verts)):
            norms.add(sym_gauge_norm(vsub(verts[j], verts[i]), gauge))
    return len(norms) == 1 and None not in norms


# ---------------------------------------------------------------------------
# simplex equivalence conditions


def simplex_equality_conditions(simplex: VPolytope, gauge: VPolytope) -> ConditionVector:
    """The five equivalent characterizations of extremal complete simplices:
    the four-link inclusion chain, equality through both main chains,
    equality in the generalized concentricity inequality, equality in the
    asymmetric Jung bound, and completeness with R = n s(C) r."""
    S = canonicalize(simplex)
    C = canonicalize(gauge)
    simplex_hrep(S)  # validates the simplex
    n = rat(S.dim)
    SS = difference_body(S)
    CC = difference_body(C)
    R = translative_factor(S, C)
    r = inradius(S, C).value
    r_mirror = inradius(S, negate(C)).value
    d = diameter(S, C)
    if d is None:
        raise InfiniteRadiusError("gauge does not span the simplex")
    D = d.value
    sC = asymmetry(C).s

    f1 = translative_factor(scale(S, (n + 1) / n), SS)
    f2 = symmetric_factor(SS, CC) / (D / 2)
    f3 = translative_factor(CC, C) / (sC + 1)
    f4 = translative_factor(C, negate(S)) * (sC + 1) * D / (2 * (n + 1))
    cond_inclusions = f1 <= 1 and f2 <= 1 and f3 <= 1 and f4 <= 1

    cond_chains = (
        eval_chain("gauge-asymmetry-chain", S, C).all_equal
        and eval_chain("body-asymmetry-chain", S, C).all_equal
    )
    # Equality in the mirrored concentricity inequality.  (The generalized
    # variant s(C)r + R is an equality even for homothetic self-gauge pairs
    # like (S, S), which satisfy none of the other conditions; only the
    # mirrored form closes the equivalence cycle.)
    cond_concentricity = r_mirror + R == (sC + 1) * D / 2
    cond_jung = 2 * (n + 1) * R == n * (sC + 1) * D
    cond_complete = simplex_complete(S, C)[0] and R == n * sC * r

    return ConditionVector(
        entries=(
            ("inclusion_chain", cond_inclusions),
            ("chain_equalities", cond_chains),
            ("mirrored_concentricity_equality", cond_concentricity),
            ("jung_bound_equality", cond_jung),
            ("complete_with_extremal_ratio", cond_complete),
        )
    )


def sandwich_equivalence(body: VPolytope, gauge: VPolytope) -> ConditionVector:
    """Equality throughout the complete chain is equivalent to the closing
    inclusion D/2 (s(C)+1) C in a translate of (s(K)+1)(-K)."""
    K, C = canonicalize(body), canonicalize(gauge)
    chain = eval_chain("complete-chain", K, C)
    d = diameter(K, C)
    if d is None:
        raise InfiniteRadiusError("diameter is infinite for this pair")
    D = d.value
    sK = asymmetry(K).s
    sC = asymmetry(C).s
    closing = translative_factor(C, negate(K)) * D * (sC + 1) / (2 * (sK + 1)) <= 1
    return ConditionVector(
        entries=(
            ("complete_chain_equalities", chain.all_equal),
            ("closing_inclusion", closing),
        )
    )


# ---------------------------------------------------------------------------
# planar results


def triangle_gauge_decomposition(simplex: VPolytope, gauge: VPolytope):
    """Write the gauge as t + lam*S + (1-lam)(-S) for a Minkowski-centered
    triangle S, or None.

    Requires C - C = S - S (otherwise no decomposition exists).  The pair
    (lam, t) solves the support equalities h(C, a) = t.a + lam h(S, a) +
    (1-lam) h(-S, a) on the three facet normals of S — a nonsingular 3x3
    system for any nondegenerate triangle — and is then verified by exact
    vertex-set equality.
    """
    S = canonicalize(simplex)
    if S.dim != 2:
        raise ValueError("the decomposition is a planar construction")
    hrep = simplex_hrep(S)
    C = canonicalize(gauge)
    if not same_vertex_set(difference_body(C), difference_body(S)):
        return None
    negS = negate(S)
    rows = []
    rhs = []
    for half in hrep.halfspaces:
        a = half.normal
        h_s = support(S, a)[0]
        h_neg = support(negS, a)[0]
        rows.append([a[0], a[1], h_s - h_neg])
        rhs.append(support(C, a)[0] - h_neg)
    solved = solve_linear(rows, rhs)
    if solved.status != "unique":
        return None
    t = (solved.solution[0], solved.solution[1])
    lam = solved.solution[2]
    if not (ZERO <= lam <= ONE):
        return None
    mixed = translate(minkowski_sum(scale(S, lam), scale(negS, ONE - lam)), t)
    if not same_vertex_set(C, mixed):
        return None
    return lam, t


def triangle_equality_conditions(simplex: VPolytope, gauge: VPolytope) -> ConditionVector:
    """The seven equivalent planar conditions (completeness and constant
    width coincide in the plane).  The triangle is re-centered at a Minkowski
    center first; every condition is translation invariant in the triangle."""
    S0 = canonicalize(simplex)
    if S0.dim != 2:
        raise ValueError("this equivalence is planar")
    if len(S0.vertices) != 3:
        raise DegenerateSimplexError("need a triangle")
    center = asymmetry(S0).center
    S = translate(S0, tuple(-x for x in center))
    C = canonicalize(gauge)
    SS = difference_body(S)
    CC = difference_body(C)
    R = translative_factor(S, C)
    r = inradius(S, C).value
    r_mirror = inradius(S, negate(C)).value
    D = diameter(S, C).value
    sC = asymmetry(C).s
    j_plus = R / D
    j_minus = translative_factor(negate(S), C) / D  # D(-S, C) = D(S, C)

    f1 = translative_factor(scale(S, rat("3/2")), SS)
    mid_equality = same_vertex_set(SS, scale(CC, D / 2))
    f3 = translative_factor(CC, C) / (sC + 1)
    f4 = translative_factor(C, negate(S)) * (sC + 1) * D / 6
    cond_i = f1 <= 1 and mid_equality and f3 <= 1 and f4 <= 1

    cond_ii = eval_chain("complete-chain", S, C).all_equal
    # Mirrored concentricity equality; see simplex_equality_conditions for
    # why the mirrored (not the generalized) form is the right condition.
    cond_iii = r_mirror + R == (sC + 1) * D / 2
    cond_iv = 3 * j_plus == sC + 1
    width = is_constant_width(S, C)
    cond_v = width and R == 2 * sC * r
    cond_vi = width and j_plus >= j_minus
    decomposition = triangle_gauge_decomposition(S, C)
    cond_vii = decomposition is not None and decomposition[0] <= rat("1/2")

    return ConditionVector(
        entries=(
            ("inclusion_chain", cond_i),
            ("complete_chain_equalities", cond_ii),
            ("mirrored_concentricity_equality", cond_iii),
            ("jung_bound_equality", cond_iv),
            ("constant_width_with_extremal_ratio", cond_v),
            ("constant_width_with_jung_dominance", cond_vi),
            ("mixed_triangle_gauge", cond_vii),
        )
    )


# ---------------------------------------------------------------------------
# ratio laws for complete simplices


@dataclass(frozen=True)
class SimplexRatioReport:
    """R/r of a complete simplex and its reflection against the bounds
    n/s(C) and n s(C), plus the crossed equality law tying the two bodies
    to the extremal-simplex conditions."""

    applicable: bool  # the simplex is complete wrt the gauge
    bounds_hold: bool | None
    cross_law_holds: bool | None
    ratio: Rational | None = None
    ratio_reflected: Rational | None = None


def complete_simplex_ratio_laws(simplex: VPolytope, gauge: VPolytope) -> SimplexRatioReport:
    S = canonicalize(simplex)
    C = canonicalize(gauge)
    if not simplex_complete(S, C)[0]:
        return SimplexRatioReport(applicable=False, bounds_hold=None, cross_law_holds=None)
    n = rat(S.dim)
    sC = asymmetry(C).s
    reports = {}
    for label, body in (("plus", S), ("minus", negate(S))):
        R = translative_factor(body, C)
        r = inradius(body, C).value
        ratio = R / r
        reports[label] = {
            "ratio": ratio,
            "in_bounds": n <= ratio * sC and ratio <= n * sC,
            "right_eq": ratio == n * sC,
            "left_eq": ratio * sC == n,
            "extremal": simplex_equality_conditions(body, C).all_true,
        }
    bounds = reports["plus"]["in_bounds"] and reports["minus"]["in_bounds"]
    cross = (
        reports["plus"]["right_eq"] == reports["minus"]["left_eq"] == reports["plus"]["extremal"]
    ) and (
        reports["minus"]["right_eq"] == reports["plus"]["left_eq"] == reports["minus"]["extremal"]
    )
    return SimplexRatioReport(
        applicable=True,
        bounds_hold=bounds,
        cross_law_holds=cross,
        ratio=reports["plus"]["ratio"],
        ratio_reflected=reports["minus"]["ratio"],
    )
