import random
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import monomial_exps, polys
from nlie.brackets import bracket_w
from nlie.cartan import VectorField, commutator, density_action, partial_field
from nlie.poly import const, mono, var
from nlie.wedge import (
    WedgeElement,
    abstract_qgen,
    ad_field_of,
    ad_to_field,
    ker_ad_injectivity,
    lie_bracket,
    monomials_upto,
    wedge_normalize,
)

x1, x2 = var(1, 2), var(2, 2)
one = const(1, 2)


def w(*fs):
    return wedge_normalize(list(fs))


def test_normal_form_examples():
    assert not w(x1, x1)
    assert w(x2, x1) == -w(x1, x2)
    assert w(x1 + x2, x2) == w(x1, x2)


def test_lie_bracket_examples():
    assert not lie_bracket(w(one, x1), w(one, x2))
    assert lie_bracket(w(x1, x2), w(one, x1)) == w(one, x1)


def test_ad_to_field_examples():
    assert ad_to_field(w(one, x1)) == partial_field(2, 2)
    assert ad_to_field(w(x1, x2)) == VectorField([-x1, -x2])
    y = [var(i, 3) for i in (1, 2, 3)]
    assert ad_to_field(wedge_normalize(y)) == VectorField(y)


def test_field_reproduces_adjoint_action():
    rng = random.Random(5)
    monos = monomials_upto(2, 3)
    for _ in range(30):
        fs = [mono(rng.choice(monos)) for _ in range(2)]
        h = mono(rng.choice(monos)) + mono(rng.choice(monos))
        # the adjoint module is the density module of weight -1/(n-1)
        assert bracket_w(fs + [h]) == density_action(ad_field_of(fs), h, Fraction(-1, 2))


def test_generator_examples():
    fs = [mono((1, 0)), mono((0, 2)), one, x2]
    g = abstract_qgen(fs)
    inner = bracket_w(fs[:3])
    assert g.head == ad_to_field(w(inner, x2))
    assert len(g.tail) == 3
    assert not abstract_qgen([x1, x1, one, x2]).head
    assert abstract_qgen([one] * 4).is_zero_data()


def test_kernel_small_degrees():
    assert ker_ad_injectivity(3, 2)["kernel_dim"] == 0
    assert ker_ad_injectivity(4, 1)["kernel_dim"] == 0


def test_kernel_appears_at_degree_three():
    report = ker_ad_injectivity(3, 3)
    assert report["kernel_dim"] == 10
    witness = report["witness"]
    assert witness and not ad_to_field(witness)


def test_explicit_kernel_element():
    a = w(one, mono((0, 3))).scale(Fraction(-1, 3)) + w(x2, mono((0, 2)))
    assert a and not ad_to_field(a)


def _random_wedge(rng, nvars, deg=2, terms=2):
    monos = monomials_upto(nvars, deg)
    out = WedgeElement(nvars)
    for _ in range(terms):
        fs = [mono(rng.choice(monos)) for _ in range(nvars)]
        out = out + wedge_normalize(fs).scale(rng.choice([-2, -1, 1, 3]))
    return out


def test_ad_is_a_homomorphism():
    rng = random.Random(11)
    for nvars in (2, 3):
        for _ in range(20):
            a, b = _random_wedge(rng, nvars), _random_wedge(rng, nvars)
            assert ad_to_field(lie_bracket(a, b)) == commutator(ad_to_field(a), ad_to_field(b))


def test_self_bracket_lies_in_the_kernel():
    # the wedge bracket is only alternating modulo the kernel of ad
    assert not lie_bracket(w(x1, x2), w(x1, x2))
    rng = random.Random(2)
    nonzero = 0
    for _ in range(20):
        a = _random_wedge(rng, 2)
        aa = lie_bracket(a, a)
        nonzero += bool(aa)
        assert not ad_to_field(aa)
    assert nonzero


@settings(max_examples=25, deadline=None)
@given(st.lists(monomial_exps(2, 2), min_size=4, max_size=4), polys(2, 4))
def test_generators_kill_the_adjoint_module(exps, h):
    g = abstract_qgen([mono(e) for e in exps])
    assert not g.apply_density(h, Fraction(-1, 2))
