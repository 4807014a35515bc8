"""Optimal-containment certificates: extraction from LP duals, plus a fully
independent validator.

A containment K inside a translated dilate of C is *optimal* when no smaller
dilate admits any translate.  Optimality is witnessed combinatorially: at
most n+1 contact points of K on the boundary of the scaled gauge, an outer
normal of the gauge at each, and positive convex weights under which the
normals sum to zero.

Extraction reads these from the circumradius LP dual — the equality block of
each body vertex carries its candidate normal, and the free translation
variable forces the weighted normals to cancel.  Dual interpretation is the
least robust step of the whole pipeline, so the validator shares *nothing*
with it: it rechecks every condition from the vertex data alone and is the
ground truth whenever the two disagree.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import lp
from .bodies import VPolytope, contains_point, scale, support, translate
from .ratcore import ONE, ZERO, Rational, is_zero_vec, rat, rat_str, vec, vdot


class ExtractionError(RuntimeError):
    """The dual yielded no certificate that survives validation."""


@dataclass(frozen=True)
class ContainmentCertificate:
    """Contact points, outer normals and convex weights per the optimal
    containment condition; ``fallback_used`` flags the perturbed re-solve."""

    contacts: tuple
    normals: tuple
    weights: tuple
    fallback_used: bool = False

    @property
    def count(self) -> int:
        return len(self.contacts)


def validate(body: VPolytope, scaled_gauge: VPolytope, cert: ContainmentCertificate) -> bool:
    """Exact check of all certificate conditions against the vertex data.

    Requires 2..n+1 contacts, each a point of the body lying on the boundary
    of the scaled gauge with its normal supporting there, and positive
    weights summing to one under which the normals vanish.  Needs only
    support evaluations and membership LPs — nothing from extraction.
    """
    n = body.dim
    k = cert.count
    if not (2 <= k <= n + 1):
        return False
    if len(cert.normals) != k or len(cert.weights) != k:
        return False
    if any(w <= 0 for w in cert.weights) or sum(cert.weights) != 1:
        return False
    balance = [ZERO] * n
    for w, a in zip(cert.weights, cert.normals):
        if is_zero_vec(a):
            return False
        for i in range(n):
            balance[i] += w * a[i]
    if not all(x == 0 for x in balance):
        return False
    for p, a in zip(cert.contacts, cert.normals):
        if not contains_point(body, p) or not contains_point(scaled_gauge, p):
            return False
        if vdot(a, p) != support(scaled_gauge, a)[0]:
            return False
    return True


def scaled_gauge_body(gauge: VPolytope, value, translation) -> VPolytope:
    """The body ``translation + value * gauge`` a certificate refers to."""
    return translate(scale(gauge, value), translation)


def extract(body: VPolytope, gauge: VPolytope) -> ContainmentCertificate:
    """Certificate for the optimal containment achieved at R(body, gauge).

    Contacts are the body vertices with a nonzero dual block; a small
    feasibility LP then selects a basic convex combination of their normals
    summing to zero, which prunes the contact count to at most n+1
    (Caratheodory, done by the LP returning a basic solution).
    """
    from .radii import circumradius_outcome  # local import: radii builds the LP

    program, out, layout, t_vars, lam_var, body_c, gauge_c = circumradius_outcome(body, gauge)
    if out.status == lp.INFEASIBLE:
        raise ValueError("no dilate of the gauge covers the body (infinite circumradius)")
    cert = _certificate_from_outcome(out, layout, body_c, lam_var)
    scaled = scaled_gauge_body(
        gauge_c, out.primal[lam_var], tuple(out.primal[v] for v in t_vars)
    )
    if cert is not None and validate(body_c, scaled, cert):
        return cert

    # Degenerate dual: re-solve with the mass variables charged a tiny exact
    # epsilon, which steers the solver to a clean optimal basis, then insist
    # the certificate still validates at the perturbed optimum.
    eps = Rational(1, 2**64)
    perturbed = lp.LinearProgram(
        objective=tuple(
            eps if j > lam_var else q for j, q in enumerate(program.objective)
        ),
        lhs=program.lhs,
        rhs=program.rhs,
        free=program.free,
    )
    out2 = lp.solve(perturbed)
    if out2.status != lp.OPTIMAL:
        raise ExtractionError("perturbed circumradius LP failed to solve")
    cert2 = _certificate_from_outcome(out2, layout, body_c, lam_var, fallback=True)
    scaled2 = scaled_gauge_body(
        gauge_c, out2.primal[lam_var], tuple(out2.primal[v] for v in t_vars)
    )
    if cert2 is not None and validate(body_c, scaled2, cert2):
        return cert2
    raise ExtractionError("no certificate passed validation")


def _certificate_from_outcome(out, layout, body_c: VPolytope, lam_var: int, fallback: bool = False):
    if out.primal[lam_var] == 0:
        raise ValueError("degenerate containment: the body is a single point")
    candidates = []
    for i in range(layout.body_count):
        normal, _beta = layout.dual_block(out.dual, i)
        if not is_zero_vec(normal):
            candidates.append((body_c.vertices[i], normal))
    if len(candidates) < 2:
        return None
    # Basic solution of {w >= 0, sum w = 1, sum w*a = 0}: at most n+1 positive
    # weights, which is exactly the Caratheodory pruning we need.
    builder = lp.ProgramBuilder()
    ws = builder.add_vars(len(candidates))
    for k in range(layout.n):
        builder.add_row(
            {w: a[k] for w, (_, a) in zip(ws, candidates) if a[k]}, ZERO
        )
    builder.add_row({w: ONE for w in ws}, ONE)
    sol = lp.solve(builder.build())
    if sol.status != lp.OPTIMAL:
        return None
    kept = [(candidates[i], sol.primal[w]) for i, w in enumerate(ws) if sol.primal[w] > 0]
    return ContainmentCertificate(
        contacts=tuple(p for (p, _a), _w in kept),
        normals=tuple(a for (_p, a), _w in kept),
        weights=tuple(w for _pa, w in kept),
        fallback_used=fallback,
    )


# ---------------------------------------------------------------------------
# JSON form


def certificate_to_json(cert: ContainmentCertificate) -> dict:
    return {
        "contacts": [[rat_str(x) for x in p] for p in cert.contacts],
        "normals": [[rat_str(x) for x in a] for a in cert.normals],
        "weights": [rat_str(w) for w in cert.weights],
        "fallback_used": cert.fallback_used,
    }


def certificate_from_json(data: dict) -> ContainmentCertificate:
    return ContainmentCertificate(
        contacts=tuple(vec(p) for p in data["contacts"]),
        normals=tuple(vec(a) for a in data["normals"]),
        weights=tuple(rat(w) for w in data["weights"]),
        fallback_used=bool(data.get("fallback_used", False)),
    )
