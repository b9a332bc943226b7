from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import polys
from nlie.poly import (
    ArityError,
    Poly,
    const,
    det,
    det_bareiss,
    det_cofactor,
    format_poly,
    mono,
    parse_poly,
    var,
)

x1, x2 = var(1, 2), var(2, 2)


def test_monomial_construction():
    assert mono((0, 0)) == const(1, 2)
    assert mono((2, 1)) == x1 * x1 * x2
    assert mono((1, 0, 0)) == var(1, 3)


def test_ring_operations():
    assert x1 + (-x1) == Poly.zero(2)
    assert not (x1 - x1)
    assert (x1 + x2) * x1 == mono((2, 0)) + mono((1, 1))
    assert (2 * x1).scale(Fraction(1, 2)) == x1


def test_derivatives():
    assert mono((2, 1)).deriv(1) == 2 * mono((1, 1))
    assert const(1, 2).deriv(2) == Poly.zero(2)
    assert mono((1, 1, 1)).deriv(3) == mono((1, 1, 0))


def test_determinants():
    one, zero = const(1, 2), const(0, 2)
    ident = [[one if i == j else zero for j in range(3)] for i in range(3)]
    assert det(ident) == one
    assert det([[x1, x2], [one, zero]]) == -x2
    assert det([[x1, x2], [x1, x2]]) == Poly.zero(2)


def test_arity_mismatch():
    with pytest.raises(ArityError):
        x1 + var(1, 3)


def test_no_zero_coefficients_stored():
    p = Poly(2, {(1, 0): 0, (0, 1): Fraction(2, 4)})
    assert p.terms == {(0, 1): Fraction(1, 2)}


def test_text_round_trip_examples():
    p = parse_poly("x1^2*x2 - 3/2*x1 + 1", 2)
    assert p == mono((2, 1)) - mono((1, 0)).scale(Fraction(3, 2)) + const(1, 2)
    assert parse_poly(format_poly(p), 2) == p
    assert format_poly(Poly.zero(2)) == "0"


@given(polys(2), polys(2), polys(2))
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a


@given(polys(2), polys(2), st.integers(1, 2))
def test_leibniz_rule(a, b, i):
    assert (a * b).deriv(i) == a.deriv(i) * b + a * b.deriv(i)


@given(polys(3, max_degree=3))
def test_format_parse_round_trip(p):
    assert parse_poly(format_poly(p), 3) == p


@settings(max_examples=40, deadline=None)
@given(st.lists(polys(2, max_degree=2, max_terms=2), min_size=9, max_size=9))
def test_determinant_methods_agree(entries):
    rows = [entries[0:3], entries[3:6], entries[6:9]]
    assert det_bareiss(rows) == det_cofactor(rows)
    swapped = [rows[1], rows[0], rows[2]]
    assert det_cofactor(swapped) == -det_cofactor(rows)
