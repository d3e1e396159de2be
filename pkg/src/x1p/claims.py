"""Checkable statements at a fixed level, each returning (passed, witness, detail)."""

from __future__ import annotations

from fractions import Fraction

from .actions import fricke_involution_check, fricke_membership, fricke_point
from .cusps import cusp_orbit, principal_cusp, satisfies_generators, tangent_nullity
from .eisenstein import NumericContext, numeric_s_t, s_numeric_crosscheck, s_series_all, span_rank, sum_s_vanishes, t_series_all
from .hilbert import hilbert_table
from .ideal import determine_kappa, eliminate_t, eliminated_quadrics, generators_on_series, KappaError, series_point
from .ode import antisymmetry_check, solve_standard, theta_compare, u_closed, verify_rhat_relations
from .polys import ModuliPoint, eval_poly

__all__ = [
    "claim_sum_s",
    "claim_quad_rel",
    "claim_elim_t",
    "claim_kappa",
    "claim_cusps",
    "claim_cusp_quadrics",
    "claim_fricke_membership",
    "claim_fricke_involution",
    "claim_fricke_points",
    "claim_standard_solution",
    "claim_hilbert",
    "claim_tangent",
    "claim_span_rank",
    "claim_theta",
    "ode_point",
    "hilbert_point",
]


def claim_sum_s(lvl, N):
    ok = sum_s_vanishes(lvl, N)
    return ok, {} if ok else {"order": N}, f"sum of s_a vanishes through q^{N - 1}"


def claim_quad_rel(lvl, N):
    bad = [(tr, v) for tr, v in generators_on_series(lvl, N) if not v == 0]
    if not bad:
        return True, {}, f"{len(generators_on_series(lvl, N))} generators vanish through q^{N - 1}"
    tr, v = bad[0]
    n = v.valuation()
    return False, {"triple": tr, "order": n, "residual": v[n]}, f"{len(bad)} generators fail"


def claim_elim_t(lvl, N):
    s = s_series_all(lvl, N)
    t = t_series_all(lvl, N)
    got = eliminate_t(lvl, [s[a] for a in range(1, lvl.m + 1)])
    for a, g in enumerate(got, start=1):
        diff = g - t[a]
        if not diff == 0:
            n = diff.valuation()
            return False, {"index": a, "order": n, "residual": diff[n]}, "t-elimination mismatch"
    return True, {}, f"eliminated t matches the t-expansions through q^{N - 1}"


def claim_kappa(lvl, N):
    try:
        k = determine_kappa(lvl, N)
    except KappaError as e:
        return False, {}, str(e)
    return True, {"kappa": k}, f"kappa = {k}"


def claim_cusps(lvl):
    orbit = cusp_orbit(lvl)
    ok = len(orbit) == lvl.p - 1 and all(satisfies_generators(c.point) for c in orbit)
    return ok, {"count": len(orbit)}, f"{len(orbit)} cusps on the curve"


def claim_cusp_quadrics(lvl, kappa):
    kappa = Fraction(kappa)
    quads = eliminated_quadrics(lvl, kappa)
    for c in cusp_orbit(lvl):
        s = list(c.point.s)
        for i, f in enumerate(quads):
            v = eval_poly(f, s)
            if not v == 0:
                return False, {"cusp": c.provenance, "quadric": i, "residual": v}, f"kappa={kappa} fails"
    return True, {}, f"kappa={kappa} quadrics vanish at all {lvl.p - 1} cusps"


def claim_fricke_membership(lvl):
    rep = fricke_membership(lvl)
    if rep.ok:
        return True, {}, f"{len(rep)} Fricke images in the generator span"
    tr = sorted(rep.failures)[0]
    return False, {"triple": tr}, f"{len(rep.failures)} images outside the span"


def claim_fricke_involution(lvl):
    ok = fricke_involution_check(lvl)
    return ok, {}, "w_p^2 = 1 on s and t (t modulo the ideal)"


def claim_fricke_points(lvl):
    for c in cusp_orbit(lvl):
        if not satisfies_generators(fricke_point(c.point)):
            return False, {"cusp": c.provenance}, "Fricke image leaves the curve"
    return True, {}, "Fricke images of all cusps lie on the curve"


def ode_point(lvl, q_order=None, tau=None, terms=30) -> ModuliPoint:
    if tau is not None:
        s, t = numeric_s_t(lvl, tau, terms)
        return ModuliPoint.from_residues(lvl, s, t)
    if q_order is not None:
        return series_point(lvl, q_order)
    return principal_cusp(lvl).point


def claim_standard_solution(P: ModuliPoint, M):
    sol = solve_standard(P, M)
    tol = 1e-9
    u = u_closed(P)
    for a in P.level.units():
        d = sol.coefficient(a, 2) - u[a]
        if not (abs(d) <= tol if isinstance(d, complex) else d == 0):
            return False, {"index": a}, "second coefficient differs from the u formula"
    if not antisymmetry_check(sol):
        return False, {}, "antisymmetry fails"
    rep = verify_rhat_relations(sol)
    if not rep.ok or rep.verified_through != M - 2:
        return False, {"first_failure": rep.first_failure}, f"verified through z^{rep.verified_through}"
    return True, {}, f"relations vanish through z^{rep.verified_through}"


def hilbert_point(lvl, at=None, tau=None) -> ModuliPoint:
    if tau is not None:
        return ode_point(lvl, tau=tau)
    orbit = cusp_orbit(lvl)
    return orbit[at or 0].point


def claim_hilbert(P: ModuliPoint, D, mode="auto"):
    table = hilbert_table(P, D, mode)
    for n, w, d in table:
        want = 1 if n == 0 and w == 0 else (0 if n == 0 else n)
        if d != want:
            return False, {"n": n, "w": w, "dim": d}, "block dimension differs from n"
    dims = [sum(d for m, _, d in table if m == n) for n in range(D + 1)]
    return True, {"table": table}, f"dimensions {dims}"


def claim_tangent(lvl, tau=None, at=None):
    if at is not None:
        c = cusp_orbit(lvl)[at]
        k = tangent_nullity(c.point)
        return k == 2, {"cusp": c.provenance, "nullity": k}, f"nullity {k} at cusp {at} ({c.provenance})"
    if tau is not None:
        P = ode_point(lvl, tau=tau)
        k = tangent_nullity(P)
        return k == 2, {"nullity": k}, f"nullity {k} at tau={tau}"
    for c in cusp_orbit(lvl):
        k = tangent_nullity(c.point)
        if k != 2:
            return False, {"cusp": c.provenance, "nullity": k}, "singular cusp"
    return True, {}, f"nullity 2 at all {lvl.p - 1} cusps"


def claim_span_rank(lvl, N):
    r = span_rank(lvl, N)
    return r == lvl.m, {"rank": r}, f"span rank {r}"


def claim_theta(lvl, tau=1j, radius=0.05, M=10):
    ctx = NumericContext(tau)
    cross = max(s_numeric_crosscheck(ctx, lvl, a, 30) for a in lvl.units())
    samples = [radius * complex(c) for c in (1, 1j, -1, -1j, (1 + 1j) / abs(1 + 1j))]
    res = theta_compare(ctx, lvl, samples, M=M)
    ok = cross < 1e-8 and res < 1e-6
    return ok, {"crosscheck": cross, "theta": res}, f"crosscheck {cross:.1e}, theta residual {res:.1e}"
