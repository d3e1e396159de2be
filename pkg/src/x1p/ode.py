"""Standard Laurent solutions of the differential system attached to a point (s, t).

For a point satisfying the quadric generators, the system

    r_a' = -(1/(p-2)) (sum_{k != 0,a} r_k r_{a-k} + 2 s_a r_a),   a in (Z/p)^*,

has a unique solution r_a = 1/z + s_a + t_a z + ... . Comparing the
coefficients of z^{n-1} gives, for n >= 1, the linear system

    n x_a + (2/(p-2)) (sum_b x_b - x_a) = rhs_a(lower orders),

i.e. (alpha I + beta E) x = rhs with alpha = n - 2/(p-2), beta = 2/(p-2) and
E the all-ones matrix. Its inverse is (1/alpha)(I - beta/(n+2) E), which
only divides by rationals, so the recursion runs over any Q-algebra.

The r-relations

    R_{a,b,c,d} = r_a r_b - r_c r_d - r_0 r_{a+b} (s_a + s_b - s_c - s_d),      a+b = c+d != 0
    R_{a,b,-a,-b} = r_a r_{-a} - r_b r_{-b} - r_0^2 (-s_a^2 + 2t_a + s_b^2 - 2t_b)

vanish on the standard solution (with r_0 = 1).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .cyclotomic import as_level, cyclo_power
from .eisenstein import NumericContext, numeric_s_t, theta_eval, theta_z0
from .ideal import all_generators
from .polys import R, ModuliPoint, SparsePoly, eval_poly

__all__ = [
    "RGenerators",
    "StandardSolution",
    "TorsionPoint",
    "PreconditionError",
    "CalibrationError",
    "RhatReport",
    "build_r_generators",
    "full_r_relations",
    "solve_standard",
    "order_matrix_eigenvalues",
    "verify_rhat_relations",
    "u_closed",
    "u_identity_check",
    "antisymmetry_check",
    "theta_quotient",
    "theta_compare",
]


class PreconditionError(ValueError):
    pass


class CalibrationError(ArithmeticError):
    pass


def _mono(p: int, *idx) -> tuple:
    e = [0] * p
    for i in idx:
        e[i % p] += 1
    return tuple(e)


def _add(terms: dict, e, c):
    if c == 0:
        return
    if e in terms:
        terms[e] = terms[e] + c
    else:
        terms[e] = c


def _rel1(P: ModuliPoint, a, b, c, d) -> SparsePoly:
    p = P.level.p
    terms = {}
    _add(terms, _mono(p, a, b), 1)
    _add(terms, _mono(p, c, d), -1)
    coeff = P.s_at(a) + P.s_at(b) - P.s_at(c) - P.s_at(d)
    _add(terms, _mono(p, 0, a + b), -coeff)
    return SparsePoly(P.level, R, terms)


def _rel2(P: ModuliPoint, a, b) -> SparsePoly:
    p = P.level.p
    terms = {}
    _add(terms, _mono(p, a, -a), 1)
    _add(terms, _mono(p, b, -b), -1)
    sa, sb = P.s_at(a), P.s_at(b)
    coeff = -sa * sa + P.t_at(a) * 2 + sb * sb - P.t_at(b) * 2
    _add(terms, _mono(p, 0, 0), -coeff)
    return SparsePoly(P.level, R, terms)


@dataclass(frozen=True)
class RGenerators:
    """Spanning set of the r-relations at a point.

    rel1 keeps, for each sum class sigma = a+b, the differences against the
    first pair of the class; rel2 keeps the differences against index 1.
    Both are labelled by their index quadruple and graded weight.
    """

    level: object
    point: ModuliPoint
    rel1: list = field(default_factory=list)  # ((a, b, c, d), poly)
    rel2: list = field(default_factory=list)  # ((a, b, -a, -b), poly)

    def all(self) -> list:
        return self.rel1 + self.rel2

    def polys(self) -> list[SparsePoly]:
        return [f for _, f in self.all()]

    @staticmethod
    def weight(label, p: int) -> int:
        a, b, _, _ = label
        return (a + b) % p


def _pairs(p: int, sigma: int) -> list[tuple[int, int]]:
    out = []
    for a in range(1, p):
        b = (sigma - a) % p
        if b and a <= b:
            out.append((a, b))
    return out


def build_r_generators(P: ModuliPoint) -> RGenerators:
    lvl = P.level
    p = lvl.p
    gens = RGenerators(lvl, P)
    for sigma in range(1, p):
        pairs = _pairs(p, sigma)
        c, d = pairs[0]
        for a, b in pairs[1:]:
            gens.rel1.append(((a, b, c, d), _rel1(P, a, b, c, d)))
    for a in range(2, lvl.m + 1):
        gens.rel2.append(((a, 1, p - a, p - 1), _rel2(P, a, 1)))
    return gens


def full_r_relations(P: ModuliPoint) -> list:
    """Every R_{a,b,c,d} and R_{a,b,-a,-b} with ordered indices, zero ones dropped."""
    lvl = P.level
    p = lvl.p
    out = []
    units = list(lvl.units())
    for a in units:
        for b in units:
            if (a + b) % p == 0:
                continue
            for c in units:
                d = (a + b - c) % p
                if d:
                    f = _rel1(P, a, b, c, d)
                    if not f.is_zero():
                        out.append(((a, b, c, d), f))
    for a in units:
        for b in units:
            if a != b:
                f = _rel2(P, a, b)
                if not f.is_zero():
                    out.append(((a, b, p - a, p - b), f))
    return out


@dataclass(frozen=True)
class TorsionPoint:
    """The point r_0 = 0, r_a = zeta^{ka} of P^{p-1}."""

    p: int
    k: int

    def coordinates(self) -> list:
        return [0] + [cyclo_power(self.p, self.k * a) for a in range(1, self.p)]


@dataclass(frozen=True)
class StandardSolution:
    """Truncated Laurent expansions r_a(z) for every unit a, known for exponents < order."""

    point: ModuliPoint
    order: int
    series: dict  # unit a -> TruncatedSeries in z, low -1
    one: object

    @property
    def level(self):
        return self.point.level

    def coefficient(self, a: int, n: int):
        return self.series[a % self.level.p][n]

    def r_vector(self) -> list:
        """[r_0 = 1, r_1, ..., r_{p-1}] as z-series."""
        from .series import TruncatedSeries

        one = TruncatedSeries.constant(self.one, self.order, "z", self.one * 0, low=-1)
        return [one] + [self.series[a] for a in self.level.units()]


def order_matrix_eigenvalues(lvl, n: int) -> tuple[Fraction, Fraction]:
    """Eigenvalues (on constants, on sum-zero vectors) of the order-n recursion matrix."""
    p = as_level(lvl).p
    return Fraction(n + 2), n - Fraction(2, p - 2)


def _check_point(P: ModuliPoint):
    cache = {}
    for g in all_generators(P.level):
        v = eval_poly(g.poly, P, cache=cache)
        if not _is_small(v):
            raise PreconditionError(f"point fails the quadric generator {g.triple}")


def _is_small(v, tol=1e-9) -> bool:
    if isinstance(v, complex) or isinstance(v, float):
        return abs(v) <= tol
    return v == 0


def solve_standard(P: ModuliPoint, M: int = 8) -> StandardSolution:
    """Standard solution with coefficients r_{a,n} for -1 <= n < M."""
    from .series import TruncatedSeries

    lvl = P.level
    p = lvl.p
    if M < 2:
        raise ValueError("need z-order at least 2")
    _check_point(P)
    units = list(lvl.units())
    zero = P.s[0] * 0
    one = zero + 1
    beta = Fraction(2, p - 2)
    table = {a: [one, P.s_at(a)] for a in units}  # index n + 1
    for n in range(1, M):
        alpha = n - beta
        rhs = {}
        for a in units:
            acc = table[a][n] * P.s_at(a) * 2
            for k in units:
                if k == a:
                    continue
                j = (a - k) % p
                for d in range(0, n):
                    acc = acc + table[k][d + 1] * table[j][n - d]
            rhs[a] = acc * Fraction(-1, p - 2)
        total = None
        for a in units:
            total = rhs[a] if total is None else total + rhs[a]
        shift = total * (beta / (n + 2))
        for a in units:
            table[a].append((rhs[a] - shift) * (1 / alpha))
    series = {a: TruncatedSeries(table[a], -1, M, "z", zero) for a in units}
    sol = StandardSolution(P, M, series, one)
    if any(not _is_small(sol.coefficient(a, 1) - P.t_at(a)) for a in units):
        raise PreconditionError("order-one coefficients differ from t_a; the point is off the quadrics")
    return sol


@dataclass(frozen=True)
class RhatReport:
    verified_through: int  # largest n with every relation vanishing through z^n
    computable_through: int
    first_failure: tuple | None = None  # (label, order)

    @property
    def ok(self) -> bool:
        return self.first_failure is None


def verify_rhat_relations(sol: StandardSolution, tol: float = 1e-9) -> RhatReport:
    gens = build_r_generators(sol.point)
    r = sol.r_vector()
    cache = {}
    worst = None
    computable = None
    for label, f in gens.all():
        val = eval_poly(f, r, cache=cache)
        top = val.order - 1
        computable = top if computable is None else min(computable, top)
        for n, c in val.items():
            if not _is_small_ring(c, tol):
                if worst is None or n < worst[1]:
                    worst = (label, n)
                break
    if computable is None:
        computable = sol.order - 2
    if worst is None:
        return RhatReport(computable, computable)
    return RhatReport(worst[1] - 1, computable, worst)


def _is_small_ring(c, tol):
    if isinstance(c, (complex, float)):
        return abs(c) <= tol
    return c == 0


def u_closed(P: ModuliPoint) -> dict:
    """u_a = (1/(p-3)) (sum_{k != 0,a} s_{k-a} t_k - s_a t_a) for every unit a."""
    lvl = P.level
    p = lvl.p
    out = {}
    for a in lvl.units():
        acc = -(P.s_at(a) * P.t_at(a))
        for k in lvl.units():
            if k != a:
                acc = acc + P.s_at(k - a) * P.t_at(k)
        out[a] = acc * Fraction(1, p - 3)
    return out


def u_identity_check(P: ModuliPoint) -> bool:
    """s_a t_b + s_b t_a - (s_a+s_b) t_{a+b} + u_a + u_b + 2 u_{a+b} = 0 for all a, b, a+b != 0."""
    lvl = P.level
    p = lvl.p
    u = u_closed(P)
    for a in lvl.units():
        for b in lvl.units():
            c = (a + b) % p
            if c == 0:
                continue
            val = (P.s_at(a) * P.t_at(b) + P.s_at(b) * P.t_at(a) - (P.s_at(a) + P.s_at(b)) * P.t_at(c)
                   + u[a] + u[b] + u[c] * 2)
            if not _is_small_ring(val, 1e-9):
                return False
    return True


def antisymmetry_check(sol: StandardSolution) -> bool:
    """r_a(-z) + r_{-a}(z) vanishes to the computed order for every a."""
    p = sol.level.p
    for a in sol.level.units():
        diff = sol.series[a].negate_variable() + sol.series[(-a) % p]
        if not all(_is_small_ring(c, 1e-9) for _, c in diff.items()):
            return False
    return True


def theta_quotient(ctx: NumericContext, x: float, z: complex) -> complex:
    """theta(x - z) theta_z(0) / (theta(-z) theta(x))."""
    return theta_eval(ctx, x - z) * theta_z0(ctx) / (theta_eval(ctx, -z) * theta_eval(ctx, x))


_CALIBRATIONS = (
    (1 / (2j * math.pi), -1 / (2j * math.pi)),
    (-1 / (2j * math.pi), 1 / (2j * math.pi)),
    (1.0, -1.0),
    (-1.0, 1.0),
)


def _laurent_head(g, radius: float, nodes: int = 64) -> tuple[complex, complex]:
    """Residue and constant term of g at 0 from the trapezoid rule on a circle."""
    c_m1 = 0j
    c_0 = 0j
    for j in range(nodes):
        w = radius * cmath.exp(2j * math.pi * j / nodes)
        v = g(w)
        c_m1 += v * w
        c_0 += v
    return c_m1 / nodes, c_0 / nodes


def theta_compare(ctx: NumericContext, lvl, z_samples, M: int = 10, N: int = 30) -> float:
    """Max |r_a(w) - scale * F_a(var * w)| over samples and units, after calibration.

    F_a is the theta quotient at x = a/p. The pair (scale, var) is chosen as
    the first candidate whose residue and constant term match 1 and s_a(tau)
    to 1e-6; the expected one is (1/2 pi i, -1/2 pi i).
    """
    lvl = as_level(lvl)
    p = lvl.p
    s, t = numeric_s_t(lvl, ctx.tau, N)
    P = ModuliPoint.from_residues(lvl, s, t)
    sol = solve_standard(P, M)
    chosen = None
    for scale, var in _CALIBRATIONS:
        good = True
        for a in lvl.units():

            def g(w, a=a):
                return scale * theta_quotient(ctx, a / p, var * w)

            res, const = _laurent_head(g, 0.05)
            if abs(res - 1) > 1e-6 or abs(const - s[a]) > 1e-6:
                good = False
                break
        if good:
            chosen = (scale, var)
            break
    if chosen is None:
        raise CalibrationError("no scale/variable normalisation matches the residue and constant term")
    scale, var = chosen
    worst = 0.0
    for w in z_samples:
        for a in lvl.units():
            lhs = sol.series[a].evaluate(w)
            rhs = scale * theta_quotient(ctx, a / p, var * w)
            worst = max(worst, abs(lhs - rhs))
    return worst
