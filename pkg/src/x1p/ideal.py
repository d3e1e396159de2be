"""The quadric generators s_as_b + s_bs_c + s_cs_a + t_a + t_b + t_c and their t-free forms.

Summing the generators over the triples (k, a-k, -a) and using
sum_k s_k = 0 gives

    (p-4) t_a = -sum_{k != 0,a} s_k s_{a-k} - 2 s_a^2 - 2 T,   T = sum_k t_k,

and summing once more over a gives T = -(sum_k s_k^2) / (p-2). Substituting
back into a generator and clearing p-4 leaves an s-only quadric whose
sum_k s_k^2 coefficient is kappa/(p-2); ``determine_kappa`` decides kappa
from the q-expansions instead of fixing it by hand.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .cyclotomic import Level, as_level
from .eisenstein import s_series_all, t_series_all
from .polys import ModuliPoint, SparsePoly, eval_poly, reduce_index, s_var, t_var

__all__ = [
    "QuadricGenerator",
    "EliminationData",
    "KappaError",
    "InvalidTripleError",
    "canonical_triples",
    "quad_generator",
    "all_generators",
    "distinct_generators",
    "eliminate_t",
    "elimination_T",
    "eliminated_quadric",
    "eliminated_quadrics",
    "determine_kappa",
    "generators_on_series",
    "series_point",
    "KAPPA_CANDIDATES",
]

KAPPA_CANDIDATES = (Fraction(4), Fraction(6))


class InvalidTripleError(ValueError):
    pass


class KappaError(ArithmeticError):
    pass


@dataclass(frozen=True)
class QuadricGenerator:
    triple: tuple[int, int, int]
    poly: SparsePoly


@dataclass(frozen=True)
class EliminationData:
    level: Level
    kappa: Fraction
    T: SparsePoly


def canonical_triples(lvl) -> list[tuple[int, int, int]]:
    """Sorted representatives of multisets {a,b,c} of units with a+b+c = 0 mod p."""
    p = as_level(lvl).p
    out = []
    for a in range(1, p):
        for b in range(a, p):
            c = (-a - b) % p
            if c >= b:
                out.append((a, b, c))
    return out


def _check_triple(lvl: Level, triple) -> tuple[int, int, int]:
    p = lvl.p
    if len(triple) != 3:
        raise InvalidTripleError(f"expected three indices, got {triple!r}")
    a, b, c = (x % p for x in triple)
    if 0 in (a, b, c) or (a + b + c) % p:
        raise InvalidTripleError(f"{tuple(triple)} is not a triple of units summing to 0 mod {p}")
    return a, b, c


@lru_cache(maxsize=None)
def _generator(p: int, triple: tuple[int, int, int]) -> SparsePoly:
    a, b, c = triple
    s = {x: s_var(p, x) for x in triple}
    return s[a] * s[b] + s[b] * s[c] + s[c] * s[a] + t_var(p, a) + t_var(p, b) + t_var(p, c)


def quad_generator(lvl, triple) -> QuadricGenerator:
    lvl = as_level(lvl)
    tr = _check_triple(lvl, triple)
    return QuadricGenerator(tuple(sorted(tr)), _generator(lvl.p, tuple(sorted(tr))))


def all_generators(lvl) -> list[QuadricGenerator]:
    lvl = as_level(lvl)
    return [quad_generator(lvl, tr) for tr in canonical_triples(lvl)]


def distinct_generators(lvl) -> list[QuadricGenerator]:
    """The generator family with duplicates (from negated triples) removed."""
    out = []
    for g in all_generators(lvl):
        if not any(g.poly == h.poly for h in out):
            out.append(g)
    return out


def _s_values(lvl: Level, s) -> dict:
    """Map every unit a to s_a from reduced values s_1..s_m (or a ModuliPoint)."""
    if isinstance(s, ModuliPoint):
        s = s.s
    s = list(s)
    out = {}
    for a in lvl.units():
        sign, i = reduce_index(lvl, a)
        out[a] = s[i - 1] if sign > 0 else -s[i - 1]
    return out


def _convolution(lvl: Level, sv: dict, a: int):
    """sum_{k != 0, a} s_k s_{a-k}, pairing k with a-k."""
    p = lvl.p
    total = None
    for k in lvl.units():
        j = (a - k) % p
        if j == 0 or k > j:
            continue
        term = sv[k] * sv[j]
        if k != j:
            term = term * 2
        total = term if total is None else total + term
    return total


def _sum_squares(lvl: Level, sv: dict):
    total = None
    for a in range(1, lvl.m + 1):
        sq = sv[a] * sv[a]
        total = sq if total is None else total + sq
    return total * 2


def eliminate_t(lvl, s) -> list:
    """t_1..t_m forced by the generators, from s_1..s_m in any Q-algebra."""
    lvl = as_level(lvl)
    p = lvl.p
    sv = _s_values(lvl, s)
    sq = _sum_squares(lvl, sv) * Fraction(2, p - 2)
    out = []
    for a in range(1, lvl.m + 1):
        val = sq - _convolution(lvl, sv, a) - sv[a] * sv[a] * 2
        out.append(val * Fraction(1, p - 4))
    return out


def elimination_T(lvl, s):
    """T = sum_{k != 0} t_k = -(sum_{k != 0} s_k^2) / (p - 2)."""
    lvl = as_level(lvl)
    sv = _s_values(lvl, s)
    return _sum_squares(lvl, sv) * Fraction(-1, lvl.p - 2)


def elimination_data(lvl, kappa=6) -> EliminationData:
    lvl = as_level(lvl)
    s = [s_var(lvl, a) for a in range(1, lvl.m + 1)]
    return EliminationData(lvl, Fraction(kappa), elimination_T(lvl, s))


@lru_cache(maxsize=None)
def _eliminated(p: int, triple, kappa: Fraction) -> SparsePoly:
    lvl = Level(p)
    s = [s_var(lvl, a) for a in range(1, lvl.m + 1)]
    sv = _s_values(lvl, s)
    a, b, c = triple
    f = (sv[a] * sv[b] + sv[b] * sv[c] + sv[c] * sv[a]) * (p - 4)
    f = f - (sv[a] * sv[a] + sv[b] * sv[b] + sv[c] * sv[c]) * 2
    f = f + _sum_squares(lvl, sv) * (kappa / (p - 2))
    for x in triple:
        f = f - _convolution(lvl, sv, x)
    return f


def eliminated_quadric(lvl, triple, kappa) -> SparsePoly:
    """(p-4)(s_as_b+s_bs_c+s_cs_a) - 2(s_a^2+s_b^2+s_c^2) + kappa/(p-2) sum s_k^2
    - sum_{x in a,b,c} sum_{k != 0,x} s_k s_{x-k}."""
    lvl = as_level(lvl)
    tr = tuple(sorted(_check_triple(lvl, triple)))
    return _eliminated(lvl.p, tr, Fraction(kappa))


def eliminated_quadrics(lvl, kappa) -> list[SparsePoly]:
    lvl = as_level(lvl)
    return [eliminated_quadric(lvl, tr, kappa) for tr in canonical_triples(lvl)]


def series_point(lvl, N: int) -> ModuliPoint:
    """The point (s, t) with coordinates the q-expansions truncated at q^N."""
    lvl = as_level(lvl)
    s = s_series_all(lvl, N)
    t = t_series_all(lvl, N)
    return ModuliPoint.from_residues(lvl, s, t)


def generators_on_series(lvl, N: int) -> list[tuple[tuple[int, int, int], object]]:
    """Each generator evaluated on the exact q-expansions (s_a, t_a)."""
    lvl = as_level(lvl)
    pt = series_point(lvl, N)
    cache = {}
    return [(g.triple, eval_poly(g.poly, pt, cache=cache)) for g in all_generators(lvl)]


def determine_kappa(lvl, N: int = 30) -> Fraction:
    """The kappa in {4, 6} for which every eliminated quadric vanishes on the s-expansions."""
    lvl = as_level(lvl)
    if N < 10:
        raise ValueError("use at least 10 q-coefficients to decide kappa")
    s = s_series_all(lvl, N)
    pt = [s[a] for a in range(1, lvl.m + 1)]
    good = []
    for kappa in KAPPA_CANDIDATES:
        cache = {}
        if all(eval_poly(f, pt, cache=cache) == 0 for f in eliminated_quadrics(lvl, kappa)):
            good.append(kappa)
    if not good:
        raise KappaError(f"no kappa in {[int(k) for k in KAPPA_CANDIDATES]} works at p={lvl.p}")
    if len(good) > 1:
        raise KappaError(f"kappa is ambiguous at p={lvl.p}: {good}")
    return good[0]
