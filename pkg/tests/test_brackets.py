import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import polys
from nlie.brackets import (
    TaggedSeries,
    WAlgebra,
    adjoint_action,
    algebra,
    bracket_s,
    bracket_sw,
    bracket_vp,
    bracket_w,
    corrupted_bracket_w,
    filippov_residual,
)
from nlie.poly import ArityError, Poly, const, mono, var

x1, x2 = var(1, 2), var(2, 2)
one = const(1, 2)


def test_w_bracket_examples():
    assert bracket_w([one, x1, x2]) == one
    assert bracket_w([x1, x1, x2]) == Poly.zero(2)
    assert bracket_w([x1, x2, x1 * x2]) == -(x1 * x2)


def test_s_bracket_examples():
    y = [var(i, 3) for i in (1, 2, 3)]
    assert bracket_s(y) == const(1, 3)
    assert bracket_s([y[0], y[0], y[2]]) == Poly.zero(3)
    assert bracket_s([y[0] * y[0], y[1], y[2]]) == 2 * y[0]


def test_vector_product_examples():
    e = [tuple(1 if i == k else 0 for i in range(4)) for k in range(4)]
    assert bracket_vp([e[0], e[1], e[2]]) == e[3]
    assert bracket_vp([e[0], e[0], e[2]]) == (0, 0, 0, 0)
    assert bracket_vp([e[1], e[2], e[3]]) == tuple(-x for x in e[0])


def test_sw_bracket_examples():
    x, c = var(1, 1), const(1, 1)
    canonical = bracket_sw([TaggedSeries(1, x), TaggedSeries(1, c), TaggedSeries(2, c)])
    assert canonical == TaggedSeries(1, c)
    assert bracket_sw([TaggedSeries(1, x), TaggedSeries(1, c), TaggedSeries(1, x)]) is None
    # (1^(2), x^(1), 1^(1)) sorts into canonical order by a 3-cycle, an even permutation
    rotated = bracket_sw([TaggedSeries(2, c), TaggedSeries(1, x), TaggedSeries(1, c)])
    assert rotated == TaggedSeries(1, c)
    swapped = bracket_sw([TaggedSeries(1, c), TaggedSeries(1, x), TaggedSeries(2, c)])
    assert swapped == TaggedSeries(1, -c)


def test_adjoint_action_examples():
    h = mono((2, 1)) + 3 * x2
    assert adjoint_action([one, x1], h) == h.deriv(2)
    assert adjoint_action([x1, x2], h) == h - x1 * h.deriv(1) - x2 * h.deriv(2)
    y = [var(i, 3) for i in (1, 2, 3)]
    g = mono((1, 2, 0)) + y[2]
    expect = sum((y[i] * g.deriv(i + 1) for i in range(3)), Poly.zero(3)) - g
    assert adjoint_action(y, g) == expect


def test_arity_checks():
    with pytest.raises(ValueError):
        bracket_w([x1, x2])
    with pytest.raises(ArityError):
        bracket_w([x1, x2, var(1, 3)])
    with pytest.raises(ArityError):
        bracket_vp([(1, 0), (0, 1)])
    with pytest.raises(ValueError):
        TaggedSeries(0, const(1, 1))
    with pytest.raises(ValueError):
        algebra("xyz", 3)


@settings(max_examples=60, deadline=None)
@given(st.lists(polys(2, max_degree=2, max_terms=2), min_size=3, max_size=3), st.permutations(range(3)))
def test_w_bracket_alternating(fs, perm):
    sign = 1
    p = list(perm)
    for i in range(3):
        for j in range(i + 1, 3):
            if p[i] > p[j]:
                sign = -sign
    assert bracket_w([fs[k] for k in perm]) == bracket_w(fs).scale(sign)


@settings(max_examples=40, deadline=None)
@given(st.lists(polys(2, max_degree=2, max_terms=2), min_size=5, max_size=5))
def test_w_filippov_identity(fs):
    alg = WAlgebra(3)
    res = filippov_residual(alg, fs[:2], fs[2:])
    assert alg.is_zero(res)


@pytest.mark.parametrize("name", ["w", "s", "vp", "sw"])
@pytest.mark.parametrize("n", [3, 4])
def test_filippov_identity_random(name, n):
    alg = algebra(name, n)
    rng = random.Random(7)
    for _ in range(30):
        as_ = [alg.random_element(rng, 3) for _ in range(n - 1)]
        bs = [alg.random_element(rng, 3) for _ in range(n)]
        assert alg.is_zero(filippov_residual(alg, as_, bs))


def test_corrupted_bracket_is_detected():
    alg = WAlgebra(3, corrupted_bracket_w)
    rng = random.Random(3)
    found = False
    for _ in range(100):
        as_ = [alg.random_element(rng, 3) for _ in range(2)]
        bs = [alg.random_element(rng, 3) for _ in range(3)]
        if not alg.is_zero(filippov_residual(alg, as_, bs)):
            found = True
            break
    assert found


def test_vp_rational_entries():
    v = bracket_vp([(Fraction(1, 2), 0, 0), (0, 1, 0)])
    assert v == (0, 0, Fraction(1, 2))
