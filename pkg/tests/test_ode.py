import random
from fractions import Fraction

import pytest

from x1p.cusps import cusp_orbit, principal_cusp
from x1p.cyclotomic import as_level
from x1p.eisenstein import NumericContext, numeric_s_t
from x1p.ideal import series_point, generators_on_series
from x1p.ode import (
    CalibrationError,
    PreconditionError,
    TorsionPoint,
    antisymmetry_check,
    build_r_generators,
    full_r_relations,
    order_matrix_eigenvalues,
    solve_standard,
    theta_compare,
    u_closed,
    u_identity_check,
    verify_rhat_relations,
)
from x1p.polys import R, ModuliPoint, eval_poly

F = Fraction
CUSP5 = principal_cusp(5).point


def test_generator_shapes():
    g = build_r_generators(CUSP5)
    labels = [l for l, _ in g.rel1]
    assert (1, 1, 3, 4) in labels or (3, 4, 1, 1) in labels
    for _, f in g.all():
        assert f.kind == R and f.weighted_degrees() == {2}
        prods = [c for e, c in f.terms.items() if e[0] == 0]
        assert sorted(prods) == [-1, 1]


@pytest.mark.parametrize("p", [5, 7, 11])
def test_generator_counts(p):
    g = build_r_generators(principal_cusp(p).point)
    m = (p - 1) // 2
    # sum class sigma != 0 has (p-1)/2 unordered pairs {a, b}
    assert len(g.rel1) == (p - 1) * (m - 1)
    assert len(g.rel2) == m - 1


def test_rel2_diagonal_is_zero():
    from x1p.ode import _rel2

    assert _rel2(CUSP5, 2, 2).is_zero()


@pytest.mark.parametrize("p", [5, 7])
def test_reduced_family_spans_full_family(p):
    from x1p.linalg import exact_rank

    P = principal_cusp(p).point
    full = [f for _, f in full_r_relations(P)]
    red = build_r_generators(P).polys()
    monos = sorted({e for f in full for e in f.terms})
    rows = lambda fs: [[f.terms.get(e, 0) for e in monos] for f in fs]
    assert exact_rank(rows(red)) == exact_rank(rows(full)) == exact_rank(rows(red + full))


@pytest.mark.parametrize("p", [5, 7])
def test_torsion_points(p):
    for P in (principal_cusp(p).point, cusp_orbit(p)[-1].point):
        fs = [f for _, f in full_r_relations(P)]
        for k in range(p):
            c = TorsionPoint(p, k).coordinates()
            assert c[0] == 0
            assert all(eval_poly(f, c) == 0 for f in fs)


def test_eigenvalues():
    assert order_matrix_eigenvalues(5, 1) == (3, F(1, 3))


def test_standard_solution_p5_cusp():
    sol = solve_standard(CUSP5, 8)
    for a in range(1, 5):
        assert sol.coefficient(a, -1) == 1
        assert sol.coefficient(a, 0) == CUSP5.s_at(a)
        assert sol.coefficient(a, 1) == CUSP5.t_at(a)
    assert sol.coefficient(1, 2) == F(-8, 125)
    assert u_closed(CUSP5)[1] == F(-8, 125)
    assert antisymmetry_check(sol)
    rep = verify_rhat_relations(sol)
    assert rep.ok and rep.verified_through == 6 == rep.computable_through


def test_standard_solution_needs_curve_point():
    bad = ModuliPoint(5, CUSP5.s, (F(0), F(0)))
    with pytest.raises(PreconditionError):
        solve_standard(bad, 6)


def test_standard_solution_is_order_independent():
    # the same point with coordinates supplied through a different route
    P = ModuliPoint.from_residues(5, {a: CUSP5.s_at(a) for a in range(1, 5)}, {a: CUSP5.t_at(a) for a in range(1, 5)})
    a = solve_standard(CUSP5, 7)
    b = solve_standard(P, 7)
    assert all(a.coefficient(i, n) == b.coefficient(i, n) for i in range(1, 5) for n in range(-1, 7))


@pytest.mark.parametrize("p", [5, 7])
def test_standard_solution_over_q_series(p):
    P = series_point(as_level(p), 12)
    sol = solve_standard(P, 8)
    u = u_closed(P)
    assert all(sol.coefficient(a, 2) == u[a] for a in range(1, p))
    rep = verify_rhat_relations(sol)
    assert rep.ok and rep.verified_through == 6


def test_z0_coefficient_of_rel2_is_quadric_combination():
    # The z^0 part of r_a r_{-a} is -s_a^2 + 2 t_a, which rel2 subtracts exactly.
    P = CUSP5
    sol = solve_standard(P, 4)
    r = sol.r_vector()
    for (a, b, _, _), f in build_r_generators(P).rel2:
        v = eval_poly(f, r)
        assert v[0] == 0


def test_u_identity():
    assert u_identity_check(CUSP5)
    assert u_identity_check(series_point(as_level(7), 20))


def test_u_identity_detects_perturbation():
    P = principal_cusp(7).point
    Q = ModuliPoint(7, (P.s[0] + F(1, 10),) + P.s[1:], P.t)
    assert not u_identity_check(Q)


def test_u_identity_is_unconditional_at_p5():
    # At p = 5 the identity holds for any (s, t); see the decisions ledger.
    rng = random.Random(5)
    for _ in range(5):
        Q = ModuliPoint(5, tuple(F(rng.randint(-9, 9), 7) for _ in range(2)), tuple(F(rng.randint(-9, 9), 5) for _ in range(2)))
        assert u_identity_check(Q)


def test_theta_compare_p5():
    ctx = NumericContext(1j)
    samples = [0.05, 0.05j, -0.05, -0.05j, 0.05 * (1 + 1j) / abs(1 + 1j)]
    assert theta_compare(ctx, 5, samples, M=10) < 1e-6


def test_theta_calibration_constant_term():
    from x1p.ode import _laurent_head, theta_quotient
    import math

    ctx = NumericContext(1j)
    s, _ = numeric_s_t(5, 1j)
    k = 1 / (2j * math.pi)
    for a in range(1, 5):
        res, const = _laurent_head(lambda w: k * theta_quotient(ctx, a / 5, -k * w), 0.05)
        assert abs(res - 1) < 1e-8 and abs(const - s[a]) < 1e-8


def test_numeric_standard_solution():
    s, t = numeric_s_t(7, 1j)
    sol = solve_standard(ModuliPoint.from_residues(7, s, t), 8)
    assert verify_rhat_relations(sol).ok


def test_calibration_error_type():
    assert issubclass(CalibrationError, ArithmeticError)
