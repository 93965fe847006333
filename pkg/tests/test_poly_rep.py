import pytest

from critdaha.basic_rep import BasicRepresentation
from critdaha.poly_rep import (DivisibilityError, LevelConstraintError, LevelledAction,
                               affine_weight_action, apply_smash, dl_poly_apply, monomial_box,
                               verify_poly_presentation, verify_smash_compatibility)
from critdaha.rational import CoeffRing
from conftest import rs_of

A1 = rs_of(("A", 1, "untwisted"))


def test_level_constraint():
    with pytest.raises(LevelConstraintError):
        LevelledAction(A1, 0)
    assert LevelledAction(A1, 1).c == 1
    assert LevelledAction(rs_of(("C", 2, "untwisted")), 1).c == 2


def test_a1_affine_action():
    act = LevelledAction(A1, 1)
    s0, s1 = act.W.simple
    assert affine_weight_action(s0, (0,), act) == (2,)   # s0(0) = alpha_1
    assert affine_weight_action(s0, (1,), act) == (1,)   # omega lies on the affine wall
    assert affine_weight_action(s1, (3,), act) == (-3,)


def test_finite_part_acts_linearly(rs):
    act = LevelledAction(rs, 1)
    for v in act.W.finite_elements():
        w = act.W.element(v, (0,) * rs.rank)
        for lam in monomial_box(rs.rank, 1):
            assert act.weight(w, lam) == act.W.act_weight(v, lam)


def test_affine_action_is_a_group_action(rs):
    act = LevelledAction(rs, 2)
    W = act.W
    els = [W.simple[j] for j in range(rs.rank + 1)] + [u.elt for u in W.omega()]
    for x in els:
        for y in els:
            for lam in monomial_box(rs.rank, 1):
                assert act.weight(x * y, lam) == act.weight(x, act.weight(y, lam))


def test_a1_operator_values():
    ring = CoeffRing(A1)
    act = LevelledAction(A1, 1)
    t, ti = ring.tau(0), ring.tau(0, -1)
    assert dl_poly_apply(1, ring.x((1,)), act, ring) == t * ring.x((-1,)) + (t - ti) * ring.x((1,))
    assert dl_poly_apply(1, ring.one(), act, ring) == t
    # s0 . 1 = X^alpha; (1 - X^alpha)/(1 - X^-alpha0') is a unit times 1
    assert dl_poly_apply(0, ring.one(), act, ring) == t * ring.x((2,)) + (t - ti)


def test_presentation_on_box(rs):
    act = LevelledAction(rs, 1)
    report = verify_poly_presentation(rs, act, monomial_box(rs.rank, 2), cross=True)
    assert report.passed, [c for c in report.failures]


def test_smash_compatibility(rs):
    ring = CoeffRing(rs)
    act = LevelledAction(rs, 1)
    cases = verify_smash_compatibility(act, ring, monomial_box(rs.rank, 1), BasicRepresentation(ring))
    assert all(c.ok for c in cases)


def test_mutation_detected():
    rs = rs_of(("A", 2, "untwisted"))
    report = verify_poly_presentation(rs, LevelledAction(rs, 1), monomial_box(2, 1), mutate=1)
    bad = {(c.relation, c.params.get("j"), c.params.get("k")) for c in report.failures}
    assert ("quadratic", 1, None) in bad and ("braid", 0, 1) in bad and ("braid", 1, 2) in bad


def test_apply_smash_rejects_denominators():
    ring = CoeffRing(A1)
    rep = BasicRepresentation(ring)
    bogus = rep.T(1).scale_left(ring.inv_one_minus_x(0))
    with pytest.raises(DivisibilityError):
        apply_smash(bogus, ring.x((1,)))
