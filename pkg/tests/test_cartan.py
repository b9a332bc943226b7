from fractions import Fraction

import pytest
from hypothesis import given, settings

from helpers import polys
from nlie.cartan import (
    GradingError,
    VectorField,
    commutator,
    density_action,
    divergence,
    euler_field,
    field_of_matrix,
    format_field,
    gl_of_degree0,
    graded_parts,
    parse_field,
    partial_field,
)
from nlie.poly import Poly, const, mono, var


def F(*coeffs):
    return VectorField(list(coeffs))


x1, x2 = var(1, 2), var(2, 2)
zero = Poly.zero(2)
D1, D2 = partial_field(1, 2), partial_field(2, 2)


def test_commutator_examples():
    assert commutator(D1, F(x1, zero)) == D1
    assert commutator(F(zero, x1), F(x2, zero)) == F(x1, -x2)


def test_graded_parts():
    assert graded_parts(D1) == {-1: D1}
    X = F(x1, x1 * x1)
    assert graded_parts(X) == {0: F(x1, zero), 1: F(zero, x1 * x1)}
    assert graded_parts(VectorField.zero(2)) == {}


def test_degree_zero_matrices():
    assert gl_of_degree0(F(zero, x1)) == [[0, 1], [0, 0]]
    assert gl_of_degree0(F(zero, x2)) == [[0, 0], [0, 1]]
    assert gl_of_degree0(F(x1 + 2 * x2, zero)) == [[1, 0], [2, 0]]
    with pytest.raises(GradingError):
        gl_of_degree0(D1)


def test_divergence_examples():
    assert divergence(euler_field(3)) == const(3, 3)
    assert divergence(-euler_field(2)) == const(-2, 2)
    assert divergence(D1) == zero


def test_matrix_round_trip():
    m = [[1, 2], [0, -3]]
    assert gl_of_degree0(field_of_matrix(m)) == m


def test_format_parse():
    X = F(mono((2, 0)) - 1, x2.scale(3))
    assert parse_field(format_field(X), 2) == X
    assert parse_field("0", 2) == VectorField.zero(2)
    with pytest.raises(ValueError):
        parse_field("x1 D1", 2)


@settings(max_examples=40, deadline=None)
@given(polys(2, 2), polys(2, 2), polys(2, 2), polys(2, 2), polys(2, 2), polys(2, 2))
def test_jacobi_identity(a, b, c, d, e, f):
    X, Y, Z = F(a, b), F(c, d), F(e, f)
    total = (commutator(X, commutator(Y, Z)) + commutator(Y, commutator(Z, X))
             + commutator(Z, commutator(X, Y)))
    assert not total


@settings(max_examples=40, deadline=None)
@given(polys(2, 2), polys(2, 2), polys(2, 2), polys(2, 2), polys(2, 3))
def test_density_action_is_a_representation(a, b, c, d, h):
    X, Y = F(a, b), F(c, d)
    w = Fraction(-1, 2)
    lhs = density_action(commutator(X, Y), h, w)
    rhs = density_action(X, density_action(Y, h, w), w) - density_action(Y, density_action(X, h, w), w)
    assert lhs == rhs
