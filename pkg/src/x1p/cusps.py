"""Cusps of X_1(p) as weighted-projective points and tangent-space dimensions."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .actions import diamond_apply, fricke_point
from .cyclotomic import CyclotomicNumber, as_level
from .ideal import all_generators, distinct_generators
from .linalg import exact_rank, numeric_rank
from .polys import ModuliPoint, eval_poly, jacobian

__all__ = [
    "CuspPoint",
    "CuspError",
    "principal_cusp",
    "cusp_orbit",
    "wp_point_equal",
    "is_exact",
    "satisfies_generators",
    "tangent_nullity",
    "stationary_residual",
]


class CuspError(ArithmeticError):
    pass


@dataclass(frozen=True)
class CuspPoint:
    point: ModuliPoint
    provenance: str  # "principal", "diamond k" or "fricke*diamond k"


def is_exact(x) -> bool:
    return isinstance(x, (int, Fraction, CyclotomicNumber))


def satisfies_generators(P: ModuliPoint) -> bool:
    cache = {}
    return all(eval_poly(g.poly, P, cache=cache) == 0 for g in all_generators(P.level))


def principal_cusp(lvl) -> CuspPoint:
    """s_a = 1 - 2a/p and t_a = (s_a^2 - 1/3) / 2, the cusp at i*infinity."""
    lvl = as_level(lvl)
    p = lvl.p
    s = [1 - Fraction(2 * a, p) for a in range(1, lvl.m + 1)]
    t = [(x * x - Fraction(1, 3)) / 2 for x in s]
    P = ModuliPoint(lvl, tuple(s), tuple(t))
    if not satisfies_generators(P):
        raise CuspError(f"principal cusp fails the quadric generators at p={p}")
    return CuspPoint(P, "principal")


def wp_point_equal(P: ModuliPoint, Q: ModuliPoint) -> bool:
    """Whether Q = (lam s_P, lam^2 t_P) for some nonzero lam."""
    if P.level != Q.level:
        return False
    i = next((j for j, x in enumerate(P.s) if not x == 0), None)
    if i is None:
        if any(not x == 0 for x in Q.s):
            return False
        # all s vanish: compare t up to any nonzero factor (lam may be imaginary)
        j = next((k for k, x in enumerate(P.t) if not x == 0), None)
        if j is None or Q.t[j] == 0:
            return False
        mu = Q.t[j] / P.t[j]
        return all(_close(mu * x, y) for x, y in zip(P.t, Q.t))
    if Q.s[i] == 0:
        return False
    lam = Q.s[i] / P.s[i]
    lam2 = lam * lam
    return all(_close(lam * x, y) for x, y in zip(P.s, Q.s)) and all(
        _close(lam2 * x, y) for x, y in zip(P.t, Q.t)
    )


def _close(x, y, tol=1e-9) -> bool:
    if is_exact(x) and is_exact(y):
        return x == y
    scale = max(1.0, abs(complex(x)), abs(complex(y)))
    return abs(complex(x) - complex(y)) <= tol * scale


def cusp_orbit(lvl) -> list[CuspPoint]:
    """Closure of the principal cusp under the diamond operators and w_p."""
    lvl = as_level(lvl)
    orbit = [principal_cusp(lvl)]
    frontier = list(orbit)
    while frontier:
        nxt = []
        for c in frontier:
            moves = [(f"diamond {k}", diamond_apply(k, c.point)) for k in range(2, lvl.p)]
            moves.append(("fricke", fricke_point(c.point)))
            for tag, Q in moves:
                if any(wp_point_equal(d.point, Q) for d in orbit):
                    continue
                base = c.provenance
                if tag == "fricke":
                    label = "fricke" if base == "principal" else f"fricke*{base}"
                else:
                    label = tag if base == "principal" else f"{tag}*{base}"
                new = CuspPoint(Q, label)
                orbit.append(new)
                nxt.append(new)
        frontier = nxt
    if len(orbit) != lvl.p - 1:
        raise CuspError(f"cusp orbit has {len(orbit)} points, expected {lvl.p - 1}")
    for c in orbit:
        if not satisfies_generators(c.point):
            raise CuspError(f"cusp {c.provenance} fails the quadric generators")
    return orbit


def tangent_nullity(P: ModuliPoint, mode: str = "auto") -> int:
    """Kernel dimension of the generators' Jacobian in the 2m reduced coordinates.

    This is the affine-cone tangent dimension; a smooth point of the curve
    gives 2 (the curve direction plus the weighted scaling direction).
    """
    polys = [g.poly for g in distinct_generators(P.level)]
    J = jacobian(polys, P)
    ncols = 2 * P.level.m
    if mode == "auto":
        mode = "exact" if all(is_exact(x) for x in P.coordinates()) else "numeric"
    if mode == "exact":
        return ncols - exact_rank(J)
    return ncols - numeric_rank([[complex(x) for x in row] for row in J])


def stationary_residual(rho: dict, P: ModuliPoint) -> dict:
    """-(1/(p-2)) (sum_{k != 0,a} rho_k rho_{a-k} + 2 rho_a s_a) for every unit a.

    ``rho`` maps each unit mod p to a value; the result is zero exactly when
    rho is a constant solution of the differential system at P.
    """
    lvl = P.level
    p = lvl.p
    out = {}
    for a in lvl.units():
        total = rho[a] * P.s_at(a) * 2
        for k in lvl.units():
            if k != a:
                total = total + rho[k] * rho[(a - k) % p]
        out[a] = total * Fraction(-1, p - 2)
    return out
