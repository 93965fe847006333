from fractions import Fraction

import pytest

from critdaha.roots import (AffineRoot, InadmissibleRootSystem, InvalidAffineRoot, RootSystemSpec,
                            build_root_system, cartan_determinant, is_positive_affine,
                            parabolic_subsystem, subsystem_coordinates)
from conftest import rs_of


def test_inadmissible_specs_are_rejected():
    for bad in [("A", 0, "untwisted"), ("G", 3, "untwisted"), ("B", 1, "untwisted"),
                ("Q", 2, "untwisted"), ("A", 2, "sideways"), ("D", 2, "untwisted")]:
        with pytest.raises(InadmissibleRootSystem):
            RootSystemSpec(*bad)


@pytest.mark.parametrize("label,n_roots", [
    (("A", 1, "untwisted"), 2), (("A", 2, "untwisted"), 6), (("C", 2, "twisted"), 8),
    (("G", 2, "twisted"), 12), (("B", 3, "untwisted"), 18), (("F", 4, "untwisted"), 48),
    (("E", 6, "untwisted"), 72), (("E", 8, "untwisted"), 240),
])
def test_root_counts(label, n_roots):
    assert len(rs_of(label).roots) == n_roots


def test_root_table_layout(rs):
    N = rs.n_pos
    for i in range(2 * N):
        assert rs.neg(rs.neg(i)) == i
        assert rs.roots[rs.neg(i)] == tuple(-x for x in rs.roots[i])
        assert rs.is_positive(i) == (i < N)
    for j in range(rs.rank):
        assert rs.roots[j] == tuple(int(k == j) for k in range(rs.rank))


def test_alpha0_and_multiplier():
    g_tw = rs_of(("G", 2, "twisted"))
    g_un = rs_of(("G", 2, "untwisted"))
    # highest root 3a1 + 2a2, highest short root 2a1 + a2 (a1 short)
    assert g_tw.roots[g_tw.alpha0] == (-2, -1)
    assert g_un.roots[g_un.alpha0] == (-3, -2)
    assert g_tw.long_multiplier == 3 and g_un.long_multiplier == 1
    c_tw = rs_of(("C", 2, "twisted"))
    assert c_tw.roots[c_tw.alpha0] == (-1, -1) and c_tw.long_multiplier == 2


def test_affine_root_validation():
    rs = rs_of(("C", 2, "twisted"))
    long_root = rs.highest_root
    rs.affine_root(long_root, 2)
    with pytest.raises(InvalidAffineRoot):
        rs.affine_root(long_root, 1)
    assert is_positive_affine(rs, AffineRoot(rs.neg(0), 1))
    assert not is_positive_affine(rs, AffineRoot(rs.neg(0), 0))


@pytest.mark.parametrize("label,det", [
    (("A", 1, "untwisted"), 2), (("A", 2, "untwisted"), 3), (("C", 2, "twisted"), 2),
    (("C", 2, "untwisted"), 2), (("G", 2, "twisted"), 1), (("G", 2, "untwisted"), 1),
])
def test_cartan_determinant(label, det):
    assert cartan_determinant(rs_of(label)) == det


def test_affine_simple_roots_sum_to_null_direction(rs):
    # sum_j m_j a_j' = 0 with positive integer marks, a_0 = alpha0
    simple = [rs.roots[rs.affine_simple[j]] for j in range(rs.rank + 1)]
    a0 = simple[0]
    assert all(x <= 0 for x in a0)
    assert [-x for x in a0] == list(rs.roots[rs.neg(rs.alpha0)])


def test_parabolic_subsystems_have_full_rank(rs):
    for k in range(rs.rank + 1):
        sub = parabolic_subsystem(rs, k)
        assert sub.rank == rs.rank
        for i in sub.members:
            coords = subsystem_coordinates(sub, i)
            assert all(c.denominator == 1 for c in coords)
            assert all(c >= 0 for c in coords) or all(c <= 0 for c in coords)


def test_coweight_pairing_matches_vectors(rs):
    for i in range(len(rs.roots)):
        for k in range(rs.rank):
            lam = tuple(int(j == k) for j in range(rs.rank))
            vec = rs.coweight_to_vector(lam)
            assert rs.inner(rs.roots[i], vec) == rs.pair_coweight(i, lam)
