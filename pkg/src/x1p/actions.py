"""Diamond operators and the Fricke involution on polynomials and points.

The Fricke involution involves (-p)^(-1/2). Everything here works with the
rescaled substitution

    s_a -> F_a = sum_k zeta^{ka} s_k,    t_a -> G_a = sum_k zeta^{ka} (-s_k^2 + 2 t_k),

which equals (-p)^(d/2) w_p on weighted degree d, so no square root of -p
ever appears. On points the same rescaling is a weighted homothety.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .cyclotomic import as_level, cyclo_power
from .ideal import all_generators, distinct_generators
from .linalg import exact_solve
from .polys import ST, ModuliPoint, SparsePoly, s_var, t_var

__all__ = [
    "DiamondElement",
    "FrickeError",
    "diamond_apply",
    "fricke_images",
    "fricke_poly",
    "fricke_point",
    "fricke_membership",
    "FrickeMembershipReport",
    "fricke_involution_check",
]


class FrickeError(ValueError):
    pass


@dataclass(frozen=True)
class DiamondElement:
    p: int
    k: int

    def __post_init__(self):
        as_level(self.p)
        if self.k % self.p == 0:
            raise ValueError(f"{self.k} is not a unit mod {self.p}")
        object.__setattr__(self, "k", self.k % self.p)

    def inverse(self) -> DiamondElement:
        return DiamondElement(self.p, pow(self.k, -1, self.p))


def diamond_apply(k, obj, lvl=None):
    """<k>: s_a -> s_{ak}, t_a -> t_{ak} on polynomials; (<k>P)_a = P_{ak} on points."""
    if isinstance(k, DiamondElement):
        k = k.k
    if isinstance(obj, ModuliPoint):
        lv = obj.level
        r = range(1, lv.m + 1)
        return ModuliPoint(lv, tuple(obj.s_at(a * k) for a in r), tuple(obj.t_at(a * k) for a in r))
    if isinstance(obj, SparsePoly):
        lv = obj.level
        if obj.kind != ST:
            raise ValueError("diamond operators act on the s/t ring")
        m = lv.m
        images = [s_var(lv, a * k) for a in range(1, m + 1)] + [t_var(lv, a * k) for a in range(1, m + 1)]
        return obj.substitute(images)
    raise TypeError(f"cannot apply a diamond operator to {type(obj).__name__}")


@lru_cache(maxsize=None)
def _fricke_images(p: int) -> tuple:
    lvl = as_level(p)
    m = lvl.m
    F, G = [], []
    for a in range(1, m + 1):
        f = SparsePoly.zero(lvl)
        g = SparsePoly.zero(lvl)
        for k in range(1, m + 1):
            sk, tk = s_var(lvl, k), t_var(lvl, k)
            f = f + sk * (cyclo_power(p, k * a) - cyclo_power(p, -k * a))
            g = g + (sk * sk * -1 + tk * 2) * (cyclo_power(p, k * a) + cyclo_power(p, -k * a))
        F.append(f)
        G.append(g)
    return tuple(F), tuple(G)


def fricke_images(lvl) -> tuple[tuple[SparsePoly, ...], tuple[SparsePoly, ...]]:
    """The rescaled images (F_1..F_m, G_1..G_m) of s_1..s_m, t_1..t_m."""
    return _fricke_images(as_level(lvl).p)


def _sigma(f: SparsePoly) -> SparsePoly:
    F, G = fricke_images(f.level)
    return f.substitute(list(F) + list(G))


def fricke_poly(f: SparsePoly) -> SparsePoly:
    """(-p)^(d/2) w_p(f) for f weighted-homogeneous of even degree d (the generators have d = 2)."""
    if f.kind != ST:
        raise FrickeError("the Fricke involution acts on the s/t ring")
    if f.is_zero():
        return f
    degs = f.weighted_degrees()
    if len(degs) != 1:
        raise FrickeError("input must be weighted-homogeneous")
    (d,) = degs
    if d % 2:
        raise FrickeError(f"odd weighted degree {d} would need a square root of -p")
    return _sigma(f)


def fricke_point(P: ModuliPoint) -> ModuliPoint:
    """Image of P under w_p, rescaled by (-p)^(1/2) so it stays in the same ring."""
    lvl = P.level
    p = lvl.p
    units = list(lvl.units())
    s_full = {k: P.s_at(k) for k in units}
    x_full = {k: -s_full[k] * s_full[k] + P.t_at(k) * 2 for k in units}
    s_new, t_new = [], []
    for a in range(1, lvl.m + 1):
        sa = None
        ta = None
        for k in units:
            z = cyclo_power(p, k * a)
            u = z * s_full[k]
            v = z * x_full[k]
            sa = u if sa is None else sa + u
            ta = v if ta is None else ta + v
        s_new.append(sa)
        t_new.append(ta)
    Q = ModuliPoint(lvl, tuple(s_new), tuple(t_new))
    if Q.is_zero():
        raise FrickeError("the Fricke image is the all-zero tuple")
    return Q


@dataclass
class FrickeMembershipReport:
    level: object
    members: dict = field(default_factory=dict)  # triple -> {basis triple: coefficient}
    failures: dict = field(default_factory=dict)  # triple -> residual polynomial

    @property
    def ok(self) -> bool:
        return not self.failures

    def __len__(self):
        return len(self.members) + len(self.failures)


def fricke_membership(lvl) -> FrickeMembershipReport:
    """Write the Fricke image of every generator as a Q(zeta_p)-combination of generators."""
    lvl = as_level(lvl)
    basis = distinct_generators(lvl)
    targets = all_generators(lvl)
    images = [fricke_poly(g.poly) for g in targets]
    monos = sorted({e for g in basis for e in g.poly.terms} | {e for f in images for e in f.terms})
    A = [[g.poly.terms.get(e, 0) for g in basis] for e in monos]
    B = [[f.terms.get(e, 0) for f in images] for e in monos]
    report = FrickeMembershipReport(lvl)
    X = exact_solve(A, B)
    if X is not None:
        for j, g in enumerate(targets):
            report.members[g.triple] = {basis[i].triple: X[i][j] for i in range(len(basis)) if not X[i][j] == 0}
        return report
    # some image is outside the span; sort out which ones column by column
    for j, g in enumerate(targets):
        x = exact_solve(A, [[row[j]] for row in B])
        if x is None:
            report.failures[g.triple] = images[j]
        else:
            report.members[g.triple] = {basis[i].triple: x[i][0] for i in range(len(basis)) if not x[i][0] == 0}
    return report


def _in_generator_span(lvl, f: SparsePoly) -> bool:
    basis = distinct_generators(lvl)
    monos = sorted({e for g in basis for e in g.poly.terms} | set(f.terms))
    A = [[g.poly.terms.get(e, 0) for g in basis] for e in monos]
    B = [[f.terms.get(e, 0)] for e in monos]
    return exact_solve(A, B) is not None


def fricke_involution_check(lvl) -> bool:
    """w_p^2 = id on the s/t variables.

    In rescaled form: sigma(sigma(s_a)) = -p s_a holds as a polynomial
    identity, while sigma(sigma(t_a)) - p^2 t_a only lies in the span of the
    quadric generators (it uses the t-elimination relation).
    """
    lvl = as_level(lvl)
    p = lvl.p
    F, G = fricke_images(lvl)
    for a in range(1, lvl.m + 1):
        if _sigma(F[a - 1]) != s_var(lvl, a) * (-p):
            return False
        if not _in_generator_span(lvl, _sigma(G[a - 1]) - t_var(lvl, a) * (p * p)):
            return False
    return True
