from fractions import Fraction

import pytest

from x1p.actions import diamond_apply
from x1p.cusps import (
    CuspError,
    cusp_orbit,
    principal_cusp,
    satisfies_generators,
    stationary_residual,
    tangent_nullity,
    wp_point_equal,
)
from x1p.eisenstein import numeric_s_t
from x1p.ideal import all_generators, eliminated_quadrics
from x1p.linalg import exact_nullspace
from x1p.polys import ModuliPoint, eval_poly, jacobian

F = Fraction


def test_principal_cusp_values():
    P = principal_cusp(5).point
    assert P.s == (F(3, 5), F(1, 5)) and P.t == (F(1, 75), F(-11, 75))
    assert principal_cusp(7).point.s == (F(5, 7), F(3, 7), F(1, 7))


def test_unhalved_cusp_t_fails():
    # t_a = s_a^2 - 1/3 (without the factor 1/2) is not on the curve
    s = (F(3, 5), F(1, 5))
    P = ModuliPoint(5, s, tuple(x * x - F(1, 3) for x in s))
    g = next(g for g in all_generators(5) if g.triple == (1, 1, 3))
    assert eval_poly(g.poly, P) == F(-3, 25)
    assert not satisfies_generators(P)


@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_orbit_size(p):
    orbit = cusp_orbit(p)
    assert len(orbit) == p - 1
    assert orbit[0].provenance == "principal"
    for i, c in enumerate(orbit):
        assert not any(wp_point_equal(c.point, d.point) for d in orbit[i + 1:])


@pytest.mark.parametrize("p", [5, 7, 11])
def test_diamond_alone_gives_half(p):
    P = principal_cusp(p).point
    pts = []
    for k in range(1, p):
        Q = diamond_apply(k, P)
        if not any(wp_point_equal(Q, R) for R in pts):
            pts.append(Q)
    assert len(pts) == (p - 1) // 2


@pytest.mark.parametrize("p", [5, 7])
def test_cusps_satisfy_kappa6_quadrics(p):
    quads = eliminated_quadrics(p, 6)
    for c in cusp_orbit(p):
        assert all(eval_poly(f, list(c.point.s)) == 0 for f in quads)


def test_wp_point_equal_examples():
    P = ModuliPoint(5, (F(1), F(2)), (F(3), F(4)))
    assert wp_point_equal(P, P.scale(2))
    assert not wp_point_equal(P, ModuliPoint(5, (F(2), F(4)), (F(6), F(8))))
    Z = ModuliPoint(5, (0, 0), (F(1), F(2)))
    assert wp_point_equal(Z, ModuliPoint(5, (0, 0), (F(-1), F(-2))))
    assert not wp_point_equal(Z, ModuliPoint(5, (0, 0), (F(1), F(3))))


def test_tangent_p5_by_hand():
    P = principal_cusp(5).point
    J = jacobian([g.poly for g in all_generators(5)], P)
    kernel = exact_nullspace(J, 4)
    assert len(kernel) == 2
    # Euler direction (ds, dt) = (s, 2t)
    euler = list(P.s) + [2 * x for x in P.t]
    assert all(sum(a * b for a, b in zip(row, euler)) == 0 for row in J)


@pytest.mark.parametrize("p", [5, 7, 11])
def test_tangent_nullity_at_cusps(p):
    assert all(tangent_nullity(c.point) == 2 for c in cusp_orbit(p))


@pytest.mark.parametrize("p", [5, 7])
def test_tangent_nullity_numeric(p):
    s, t = numeric_s_t(p, 1j)
    assert tangent_nullity(ModuliPoint.from_residues(p, s, t)) == 2


def test_euler_vector_on_series_point():
    p = 7
    s, t = numeric_s_t(p, 0.3 + 1.1j)
    P = ModuliPoint.from_residues(p, s, t)
    J = jacobian([g.poly for g in all_generators(p)], P)
    euler = list(P.s) + [2 * x for x in P.t]
    assert max(abs(sum(a * b for a, b in zip(row, euler))) for row in J) < 1e-10


def test_stationary_residual_examples():
    P = principal_cusp(5).point
    zero = stationary_residual({a: 0 for a in range(1, 5)}, P)
    assert all(v == 0 for v in zero.values())
    ones = stationary_residual({a: 1 for a in range(1, 5)}, P)
    assert any(v != 0 for v in ones.values())
    # frozen: -(1/3)(3 + 2 s_a) for a = 1
    assert ones[1] == -(3 + 2 * F(3, 5)) / 3


def test_cusp_error_type():
    assert issubclass(CuspError, ArithmeticError)
