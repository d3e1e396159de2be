"""Weight-one series s_a, weight-two series t_a and the theta-function oracle.

q-expansions:

    s_a = (zeta^a + 1) / (2 (zeta^a - 1)) - sum_d q^d sum_{k | d} (zeta^{ka} - zeta^{-ka})
    t_a = 1/12 - sum_d q^d sum_{k | d} (d/k) (zeta^{ak} + zeta^{-ak})

The numeric side evaluates the Jacobi theta product and checks that s_a is
the (1 / 2 pi i) log-derivative of theta at z = a/p.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .cyclotomic import CyclotomicNumber, Level, as_level, cyclo_inv, cyclo_power, to_complex
from .linalg import exact_rank
from .series import TruncatedSeries

__all__ = [
    "EisensteinSeries",
    "NumericContext",
    "eis_s",
    "eis_t",
    "s_series_all",
    "t_series_all",
    "sum_s_vanishes",
    "span_rank",
    "theta_eval",
    "theta_z0",
    "log_derivative_theta",
    "s_numeric_crosscheck",
    "numeric_s_t",
]


@dataclass(frozen=True)
class EisensteinSeries:
    level: Level
    a: int
    weight: int
    series: TruncatedSeries


def _residue(lvl: Level, a: int) -> int:
    a %= lvl.p
    if a == 0:
        raise ValueError(f"index must be a nonzero residue mod {lvl.p}")
    return a


def _divisors(d: int):
    small = [k for k in range(1, math.isqrt(d) + 1) if d % k == 0]
    return sorted(set(small + [d // k for k in small]))


@lru_cache(maxsize=None)
def _s_series(p: int, a: int, N: int) -> TruncatedSeries:
    zero = CyclotomicNumber.zero(p)
    za = cyclo_power(p, a)
    coeffs = [(za + 1) * cyclo_inv((za - 1) * 2)]
    for d in range(1, N):
        c = zero
        for k in _divisors(d):
            c = c - cyclo_power(p, k * a) + cyclo_power(p, -k * a)
        coeffs.append(c)
    return TruncatedSeries(coeffs[:N], 0, N, "q", zero)


@lru_cache(maxsize=None)
def _t_series(p: int, a: int, N: int) -> TruncatedSeries:
    zero = CyclotomicNumber.zero(p)
    coeffs = [CyclotomicNumber.rational(p, Fraction(1, 12))]
    for d in range(1, N):
        c = zero
        for k in _divisors(d):
            c = c - (cyclo_power(p, a * k) + cyclo_power(p, -a * k)) * (d // k)
        coeffs.append(c)
    return TruncatedSeries(coeffs[:N], 0, N, "q", zero)


def eis_s(lvl, a: int, N: int) -> EisensteinSeries:
    """Weight-one Eisenstein series s_a to q-order N."""
    lvl = as_level(lvl)
    a = _residue(lvl, a)
    if N < 1:
        raise ValueError("q-order must be at least 1")
    return EisensteinSeries(lvl, a, 1, _s_series(lvl.p, a, N))


def eis_t(lvl, a: int, N: int) -> EisensteinSeries:
    """Weight-two Eisenstein series t_a to q-order N."""
    lvl = as_level(lvl)
    a = _residue(lvl, a)
    if N < 1:
        raise ValueError("q-order must be at least 1")
    return EisensteinSeries(lvl, a, 2, _t_series(lvl.p, a, N))


def s_series_all(lvl, N: int) -> dict[int, TruncatedSeries]:
    lvl = as_level(lvl)
    return {a: eis_s(lvl, a, N).series for a in lvl.units()}


def t_series_all(lvl, N: int) -> dict[int, TruncatedSeries]:
    lvl = as_level(lvl)
    return {a: eis_t(lvl, a, N).series for a in lvl.units()}


def sum_s_vanishes(lvl, N: int) -> bool:
    series = list(s_series_all(lvl, N).values())
    total = series[0]
    for f in series[1:]:
        total = total + f
    return total.is_zero()


def span_rank(lvl, N: int) -> int:
    """Rank over Q(zeta_p) of the q-coefficient matrix of s_1, ..., s_m."""
    lvl = as_level(lvl)
    rows = [list(eis_s(lvl, a, N).series.coeffs) for a in range(1, lvl.m + 1)]
    return exact_rank(rows)


def span_rank_stabilized(lvl, N: int) -> tuple[int, bool]:
    """Rank at order N and whether it already agrees with the rank at N // 2."""
    r = span_rank(lvl, N)
    return r, span_rank(lvl, max(N // 2, 1)) == r


# numerics

@dataclass(frozen=True)
class NumericContext:
    tau: complex
    terms: int = 60
    precision: int = 15

    def __post_init__(self):
        if complex(self.tau).imag <= 0:
            raise ValueError("tau must lie in the upper half plane")

    @property
    def q(self) -> complex:
        return cmath.exp(2j * math.pi * self.tau)


def theta_eval(ctx: NumericContext, z: complex) -> complex:
    """Jacobi theta_{1,1}(z, tau) from its triple product, ``ctx.terms`` factors.

    The principal branch of q^(1/8) is used; it cancels in every quotient
    and log-derivative taken in this package.
    """
    q = ctx.q
    q8 = cmath.exp(2j * math.pi * ctx.tau / 8)
    e = cmath.exp(2j * math.pi * z)
    einv = 1 / e
    prod = 1 + 0j
    ql = 1 + 0j
    for _ in range(ctx.terms):
        ql *= q
        prod *= (1 - ql) * (1 - ql * e) * (1 - ql * einv)
    return q8 * 2 * cmath.sin(math.pi * z) * prod


def theta_z0(ctx: NumericContext) -> complex:
    """d/dz theta at z = 0, i.e. 2 pi q^(1/8) prod (1 - q^l)^3."""
    q = ctx.q
    q8 = cmath.exp(2j * math.pi * ctx.tau / 8)
    prod = 1 + 0j
    ql = 1 + 0j
    for _ in range(ctx.terms):
        ql *= q
        prod *= (1 - ql) ** 3
    return 2 * math.pi * q8 * prod


def log_derivative_theta(ctx: NumericContext, z: complex, h: float = 1e-5) -> complex:
    """(1 / 2 pi i) d/dz log theta at z, central differences plus one Richardson step."""

    def central(step):
        return cmath.log(theta_eval(ctx, z + step) / theta_eval(ctx, z - step)) / (2 * step)

    d = (4 * central(h / 2) - central(h)) / 3
    return d / (2j * math.pi)


def _series_at(f: TruncatedSeries, q: complex) -> complex:
    total = 0j
    qn = 1 + 0j
    for _, c in f.items():
        total += to_complex(c) * qn
        qn *= q
    return total


def s_numeric_crosscheck(ctx: NumericContext, lvl, a: int, N: int) -> float:
    """|partial q-sum of s_a at q(tau) - log-derivative of theta at a/p|."""
    lvl = as_level(lvl)
    a = _residue(lvl, a)
    exact = _series_at(eis_s(lvl, a, N).series, ctx.q)
    return abs(exact - log_derivative_theta(ctx, a / lvl.p))


def numeric_s_t(lvl, tau: complex, N: int = 30) -> tuple[dict, dict]:
    """Complex values of s_a(tau), t_a(tau) for every nonzero residue a."""
    lvl = as_level(lvl)
    q = cmath.exp(2j * math.pi * tau)
    s = {a: _series_at(eis_s(lvl, a, N).series, q) for a in lvl.units()}
    t = {a: _series_at(eis_t(lvl, a, N).series, q) for a in lvl.units()}
    return s, t
