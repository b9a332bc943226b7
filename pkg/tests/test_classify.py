import pytest

from nlie.classify import (
    J_KIND,
    M_KIND,
    ScanRow,
    Verdict,
    brute_verify,
    dominant_box,
    module_for,
    scan,
    theorem7_predicate,
)
from nlie.glrep import NotDominantError
from nlie.qgen import apply_to_hw
from nlie.verma import VermaSlice, in_singplus, singplus_span
from nlie.wedge import abstract_qgen


def test_predicate_examples():
    assert theorem7_predicate(3, (2, 2)) == (True, M_KIND)
    assert theorem7_predicate(3, (1, -2)) == (True, M_KIND)
    assert theorem7_predicate(3, (-1, -1)) == (True, J_KIND)
    assert theorem7_predicate(3, (0, -1)) == (True, J_KIND)
    assert theorem7_predicate(3, (3, 1))[0] is False
    assert theorem7_predicate(4, (0, 0, -1)) == (False, J_KIND)
    assert theorem7_predicate(4, (-1, -1, -1)) == (True, J_KIND)
    assert theorem7_predicate(4, (2, 2, 2)) == (True, M_KIND)
    with pytest.raises(NotDominantError):
        theorem7_predicate(3, (0, 1))


def test_accepts_second_branch():
    v = brute_verify(3, (1, -2))
    assert v.accepted and v.module_kind == M_KIND and v.witness is None
    assert v.checked_tuples > 0


def test_rejects_with_reproducible_witness():
    v = brute_verify(3, (3, 1))
    assert not v.accepted
    spec, img = v.witness
    assert img
    vs = VermaSlice(module_for((3, 1)), 2)
    assert apply_to_hw(abstract_qgen(spec.polys()), vs) == img


def test_exceptional_weights_accepted_for_three():
    for lam in ((0, -1), (-1, -1)):
        assert brute_verify(3, lam).accepted


def test_exceptional_rejection_for_four_lies_outside_singular_span():
    v = brute_verify(4, (0, -1, -1))
    assert not v.accepted
    spec, img = v.witness
    vs = VermaSlice(module_for((0, -1, -1)), 2)
    assert not in_singplus(img, singplus_span(vs))


def test_verdict_serializes():
    d = brute_verify(3, (3, 1)).as_dict()
    assert d["accepted"] is False and d["witness"]["spec"]


def test_boxes():
    assert dominant_box(3, -1, 1) == [(-1, -1), (0, -1), (0, 0), (1, -1), (1, 0), (1, 1)]
    assert dominant_box(3, 1, 0) == []


def test_empty_scan():
    assert scan(3, []) == []


def test_kind_agreement_rule():
    accepted_m = Verdict(3, (0, -1), True, M_KIND, 1)
    assert ScanRow((0, -1), (True, J_KIND), accepted_m).agree
    accepted_j = Verdict(3, (2, 2), True, J_KIND, 1)
    assert not ScanRow((2, 2), (True, M_KIND), accepted_j).agree


def test_small_scan_agrees():
    rows = scan(3, dominant_box(3, -2, 1))
    assert rows and all(r.agree for r in rows)


def test_larger_bounds_do_not_flip_acceptance():
    for lam in ((2, 2), (1, -2), (0, -1)):
        assert brute_verify(3, lam, slot_deg=3, total_deg=5).accepted
