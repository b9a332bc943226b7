from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nlie.glrep import (
    NotDominantError,
    SLWeight,
    TruncationError,
    betas_of_height,
    contravariant_ranks,
    exceptional_index,
    exceptional_module,
    form,
    freudenthal,
    from_sl,
    is_dominant,
    positive_roots,
    scalar_module,
    standard_module,
    to_sl,
    truncated_irreducible,
    weyl_dim,
)


def test_dominance():
    assert is_dominant((2, 2))
    assert is_dominant((0, -1))
    assert not is_dominant((-1, 0))
    assert not is_dominant((Fraction(1, 2), 0))


def test_sl_coordinates():
    assert to_sl((3, 3, 3)) == SLWeight((0, 0), 9)
    assert to_sl((0, 0, -1)).fund == (0, 1)
    assert to_sl((1, 0)) == SLWeight((1,), 1)
    assert from_sl(to_sl((2, 0, -1))) == (2, 0, -1)


def test_form_normalization():
    assert form((1, 0, 0), (1, 0, 0)) == 1
    assert form((1, 0, 0), (0, 1, 0)) == Fraction(-1, 2)
    assert form((1, 0, 0), (0, 0, 1)) == 0


def test_root_data():
    assert len(positive_roots(3)) == 6
    assert betas_of_height(2, 2) == [(0, 2), (1, 1), (2, 0)]


@pytest.mark.parametrize("m", range(6))
def test_sl2_strings(m):
    mult = freudenthal(SLWeight((m,)), m + 2)
    for k in range(m + 3):
        assert mult[(k,)] == (1 if k <= m else 0)


def test_adjoint_zero_weight():
    assert freudenthal(SLWeight((1, 1)), 2)[(1, 1)] == 2


def test_trivial_weight_has_no_descendants():
    mult = freudenthal(SLWeight((0, 0, 0)), 3)
    assert mult[(0, 0, 0)] == 1
    assert all(m == 0 for beta, m in mult.items() if any(beta))


@pytest.mark.parametrize("rank", [2, 3])
def test_last_fundamental_weight_multiplicity(rank):
    fund = tuple(1 if i == rank - 1 else 0 for i in range(rank))
    beta = tuple(1 if i >= rank - 2 else 0 for i in range(rank))
    assert freudenthal(SLWeight(fund), 2)[beta] == 1


def test_weyl_dimension():
    assert weyl_dim(SLWeight((0, 0))) == 1
    assert weyl_dim(SLWeight((4,))) == 5
    assert weyl_dim(SLWeight((1, 1))) == 8
    with pytest.raises(NotDominantError):
        weyl_dim(SLWeight((-1, 0)))


def test_exceptional_index():
    assert exceptional_index((0, -1)) == 1
    assert exceptional_index((-1, -1, -1)) == 3
    assert exceptional_index((0, 0, 0)) is None


def test_scalar_module():
    F = scalar_module(2, 2)
    assert F.dim == 1
    assert F.apply(2, 1, {0: 1}) == {}
    assert F.apply(1, 1, {0: 1}) == {0: 2}
    assert scalar_module(0, 3).apply(2, 2, {0: 1}) == {}


def test_exceptional_modules():
    F = exceptional_module(1, 2)
    assert F.dim == 2 and F.highest_weight == (0, -1)
    top = exceptional_module(3, 3)
    assert top.dim == 1 and top.highest_weight == (-1, -1, -1)
    mid = exceptional_module(2, 3)
    assert mid.dim == 3 and mid.highest_weight == (0, -1, -1)
    for p, N in [(1, 2), (1, 3), (2, 3), (2, 4)]:
        assert exceptional_module(p, N).check_relations() == []


def test_standard_module():
    F = standard_module(3)
    assert F.check_relations() == []
    assert F.apply(2, 1, {0: 1}) == {1: 1}


def test_truncated_irreducible_examples():
    F = truncated_irreducible((1, 0), 2)
    assert F.dim == 2 and F.complete
    v1 = F.apply(2, 1, {0: 1})
    assert v1 and not F.apply(2, 1, v1)
    G = truncated_irreducible((0, 0, -1), 2)
    assert G.apply(3, 1, {0: 1})
    H = truncated_irreducible((2, 2, 2), 2)
    assert H.dim == 1


def test_incomplete_slice_raises():
    F = truncated_irreducible((3, 0, 0), 1)
    assert not F.complete
    v = F.apply(2, 1, {0: 1})
    with pytest.raises(TruncationError):
        F.apply(2, 1, v)


@settings(max_examples=15, deadline=None)
@given(st.lists(st.integers(0, 2), min_size=2, max_size=3), st.integers(-2, 2))
def test_freudenthal_matches_contravariant_ranks(fund, c):
    w = SLWeight(tuple(fund), c)
    lam = from_sl(w)
    mult = freudenthal(w, 3)
    ranks = contravariant_ranks(lam, 3)
    assert {b: m for b, m in mult.items()} == ranks


@settings(max_examples=15, deadline=None)
@given(st.lists(st.integers(0, 2), min_size=1, max_size=2))
def test_truncated_modules_satisfy_gl_relations(fund):
    lam = from_sl(SLWeight(tuple(fund), 0))
    assert truncated_irreducible(lam, 4).check_relations() == []
