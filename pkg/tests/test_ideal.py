from fractions import Fraction

import pytest

from x1p.eisenstein import s_series_all, t_series_all
from x1p.ideal import (
    InvalidTripleError,
    KappaError,
    all_generators,
    canonical_triples,
    determine_kappa,
    distinct_generators,
    eliminate_t,
    eliminated_quadric,
    elimination_T,
    generators_on_series,
    quad_generator,
)
from x1p.polys import ModuliPoint, eval_poly, s_var, t_var

F = Fraction
CUSP5 = ModuliPoint(5, (F(3, 5), F(1, 5)), (F(1, 75), F(-11, 75)))


def test_triples_p5():
    assert canonical_triples(5) == [(1, 1, 3), (1, 2, 2), (2, 4, 4), (3, 3, 4)]


@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_triple_count(p):
    assert len(canonical_triples(p)) == (p - 1) * (p + 1) // 6


@pytest.mark.parametrize("p,n", [(5, 2), (7, 4), (11, 10), (13, 14)])
def test_distinct_generator_count(p, n):
    assert len(distinct_generators(p)) == n


def test_generator_examples_p5():
    s1, s2, t1, t2 = s_var(5, 1), s_var(5, 2), t_var(5, 1), t_var(5, 2)
    assert quad_generator(5, (1, 1, 3)).poly == s1 * s1 - s1 * s2 * 2 + t1 * 2 + t2
    assert quad_generator(5, (1, 2, 2)).poly == s1 * s2 * 2 + s2 * s2 + t1 + t2 * 2
    assert quad_generator(5, (3, 3, 4)).poly == quad_generator(5, (1, 2, 2)).poly
    assert str(quad_generator(5, (3, 1, 1)).poly) == "s1^2 - 2*s1*s2 + 2*t1 + t2"


@pytest.mark.parametrize("bad", [(1, 1, 1), (0, 2, 3), (1, 2)])
def test_invalid_triples(bad):
    with pytest.raises(InvalidTripleError):
        quad_generator(5, bad)


def test_generators_weighted_homogeneous():
    for p in (5, 7, 11):
        assert all(g.poly.is_weighted_homogeneous(2) for g in all_generators(p))


def test_eval_at_p5_cusp():
    assert eval_poly(quad_generator(5, (1, 1, 3)).poly, CUSP5) == 0


@pytest.mark.parametrize("p", [5, 7])
def test_generators_vanish_on_series(p):
    assert all(v == 0 for _, v in generators_on_series(p, 25))


def test_eliminate_t_at_p5_cusp():
    t = eliminate_t(5, CUSP5)
    assert t == [F(1, 75), F(-11, 75)]
    assert elimination_T(5, CUSP5) == F(-4, 15)
    assert 2 * (t[0] + t[1]) == F(-4, 15)


def test_eliminate_t_on_series_p7():
    s = s_series_all(7, 30)
    t = t_series_all(7, 30)
    got = eliminate_t(7, [s[1], s[2], s[3]])
    assert all(g == t[a] for a, g in zip((1, 2, 3), got))


def test_eliminated_quadric_kappa_values_at_p5_cusp():
    assert eval_poly(eliminated_quadric(5, (1, 1, 3), 6), list(CUSP5.s)) == 0
    # magnitude 40/75; the sign follows the polynomial as written
    assert eval_poly(eliminated_quadric(5, (1, 1, 3), 4), list(CUSP5.s)) == F(-40, 75)


def test_kappa_four_variant_differs_by_sum_of_squares():
    # kappa = 4 gives 4/(p-2) as the coefficient of sum_{k != 0} s_k^2
    p = 7
    diff = eliminated_quadric(p, (1, 2, 4), 4) - eliminated_quadric(p, (1, 2, 4), 6)
    sq = sum((s_var(p, k) * s_var(p, k) for k in range(1, p)), s_var(p, 1) * 0)
    assert diff == sq * F(-2, p - 2)


@pytest.mark.parametrize("p", [5, 7])
def test_determine_kappa(p):
    assert determine_kappa(p, 30) == 6


def test_determine_kappa_needs_enough_terms():
    with pytest.raises(ValueError):
        determine_kappa(5, 5)


def test_kappa_error_is_arithmetic():
    assert issubclass(KappaError, ArithmeticError)


def test_weighted_homogeneity_scaling():
    lam = F(-7, 3)
    for g in all_generators(7):
        P = ModuliPoint(7, (F(1), F(2), F(-1, 2)), (F(3), F(1, 5), F(-2)))
        assert eval_poly(g.poly, P.scale(lam)) == lam * lam * eval_poly(g.poly, P)
