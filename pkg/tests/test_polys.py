from fractions import Fraction

import pytest

from x1p.cyclotomic import cyclo_power
from x1p.polys import (
    MissingVariableError,
    ModuliPoint,
    SparsePoly,
    eval_poly,
    jacobian,
    poly_from_json,
    poly_to_json,
    r_var,
    s_var,
    t_var,
)

F = Fraction


def test_reduced_variables_fold_indices():
    assert s_var(5, 3) == -s_var(5, 2)
    assert t_var(5, 3) == t_var(5, 2)
    assert s_var(7, 6) == -s_var(7, 1)
    assert str(s_var(5, 4) * s_var(5, 1)) == "-s1^2"


def test_no_stored_zero_coefficients():
    f = s_var(5, 1) + s_var(5, 4)
    assert f.is_zero() and f.terms == {}


def test_weights_and_homogeneity():
    f = s_var(7, 1) * s_var(7, 2) + t_var(7, 3)
    assert f.weighted_degrees() == {2}
    assert f.is_weighted_homogeneous(2)
    assert not (f + s_var(7, 1)).is_weighted_homogeneous()


def test_eval_examples():
    P = ModuliPoint(5, (F(3, 5), F(1, 5)), (F(1, 75), F(-11, 75)))
    assert eval_poly(SparsePoly.zero(5), P) == 0
    f = s_var(5, 1) ** 2 - s_var(5, 1) * s_var(5, 2) * 2  # s1^2 - 2 s1 s2
    assert eval_poly(f, P) == F(3, 25)
    with pytest.raises(MissingVariableError):
        eval_poly(t_var(5, 2), [F(1), F(2)])


def test_jacobian_examples():
    P = ModuliPoint(5, (F(3, 5), F(1, 5)), (F(1, 75), F(-11, 75)))
    f = s_var(5, 1) ** 2 - s_var(5, 1) * s_var(5, 2) * 2
    g = s_var(5, 1) ** 2 - s_var(5, 1) * s_var(5, 2) * 2 + t_var(5, 1) * 2 + t_var(5, 2)
    J = jacobian([SparsePoly.constant(5, 7), f, g], P)
    assert J[0] == [0, 0, 0, 0]
    assert J[1][0] == F(4, 5)
    assert J[2][2] == 2


def test_point_helpers():
    P = ModuliPoint.from_residues(5, {1: 1, 2: 2, 3: -2, 4: -1}, {1: 5, 2: 6, 3: 6, 4: 5})
    assert P.s_at(4) == -1 and P.t_at(3) == 6
    Q = P.scale(3)
    assert Q.s == (3, 6) and Q.t == (45, 54)
    with pytest.raises(ValueError):
        ModuliPoint(5, (1,), (1, 2))


def test_r_ring():
    f = r_var(5, 0) * r_var(5, 3) - r_var(5, 1) ** 2
    assert f.nvars == 5
    assert eval_poly(f, [2, 1, 0, 5, 0]) == 9


def test_json_round_trip():
    f = s_var(7, 1) * s_var(7, 2) * cyclo_power(7, 2) + t_var(7, 3) * F(-5, 3) + s_var(7, 3) ** 2
    doc = poly_to_json(f)
    assert {"monomial", "coeff"} == set(doc[0])
    assert poly_from_json(7, "st", doc) == f
