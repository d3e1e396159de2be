import cmath
from fractions import Fraction

import pytest

from x1p.cyclotomic import cyclo_power, galois_apply
from x1p.eisenstein import (
    NumericContext,
    eis_s,
    eis_t,
    s_numeric_crosscheck,
    s_series_all,
    span_rank,
    sum_s_vanishes,
    t_series_all,
    theta_eval,
)
from x1p.ideal import canonical_triples


def z(k, p=5):
    return cyclo_power(p, k)


def test_s_examples_at_p5():
    f = eis_s(5, 1, 5).series
    assert f[0] == (z(1) + 1) / ((z(1) - 1) * 2)
    assert f[1] == -(z(1) - z(4))
    assert f[2] == -(z(1) - z(4)) - (z(2) - z(3))
    # q^4: divisors 1, 2, 4
    assert f[4] == -((z(1) - z(4)) + (z(2) - z(3)) + (z(4) - z(1)))


def test_t_examples_at_p5():
    f = eis_t(5, 1, 5).series
    assert f[0] == Fraction(1, 12)
    assert f[1] == -(z(1) + z(4))
    # q^2: k=1 contributes 2(z + z^4), k=2 contributes z^2 + z^3
    assert f[2] == -((z(1) + z(4)) * 2 + (z(2) + z(3)))


def test_series_metadata():
    e = eis_s(7, 3, 10)
    assert (e.a, e.weight, e.series.order) == (3, 1, 10)
    assert eis_t(7, 10, 10).a == 3


@pytest.mark.parametrize("p", [5, 7, 11])
def test_symmetries(p):
    for a in range(1, p):
        assert (eis_s(p, a, 20).series + eis_s(p, p - a, 20).series) == 0
        assert (eis_t(p, a, 20).series - eis_t(p, p - a, 20).series) == 0


def test_index_zero_rejected():
    with pytest.raises(ValueError):
        eis_s(5, 0, 10)
    with pytest.raises(ValueError):
        eis_t(5, 10, 10)
    with pytest.raises(ValueError):
        eis_s(5, 1, 0)


@pytest.mark.parametrize("p,N", [(5, 20), (7, 20), (13, 40)])
def test_sum_of_s_vanishes(p, N):
    assert sum_s_vanishes(p, N)


@pytest.mark.parametrize("p,rank", [(5, 2), (7, 3), (11, 5), (13, 6)])
def test_span_rank(p, rank):
    assert span_rank(p, 2 * p) == rank


@pytest.mark.parametrize("p", [5, 7])
def test_galois_compatibility(p):
    N = 12
    s = s_series_all(p, N)
    for k in range(2, p):
        for a in range(1, p):
            for n in range(N):
                assert galois_apply(s[a][n], k) == s[(a * k) % p][n]


@pytest.mark.parametrize("p", [5, 7, 11])
def test_constant_term_cotangent_identity(p):
    s = s_series_all(p, 1)
    for a, b, c in canonical_triples(p):
        val = s[a][0] * s[b][0] + s[b][0] * s[c][0] + s[c][0] * s[a][0]
        assert val == Fraction(-1, 4)


def test_theta_examples():
    ctx = NumericContext(1j)
    assert abs(theta_eval(ctx, 0)) == 0
    for x in (0.1, 0.23 + 0.05j, 0.4):
        assert abs(theta_eval(ctx, -x) + theta_eval(ctx, x)) < 1e-12
        assert abs(theta_eval(ctx, x + 1) + theta_eval(ctx, x)) < 1e-10
    v = theta_eval(ctx, 0.2)
    w = theta_eval(NumericContext(1j, terms=120), 0.2)
    assert abs(v) > 0.1 and abs(v - w) < 1e-12


def test_context_requires_upper_half_plane():
    with pytest.raises(ValueError):
        NumericContext(-1j)


@pytest.mark.parametrize("p,a,tau,N,tol", [(5, 1, 1j, 30, 1e-8), (5, 2, 1j, 30, 1e-8), (7, 3, 2j, 20, 1e-10)])
def test_numeric_crosscheck(p, a, tau, N, tol):
    assert s_numeric_crosscheck(NumericContext(tau), p, a, N) < tol
