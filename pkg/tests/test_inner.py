"""Inner projections over orthogonal families of two-sided band projections."""

import itertools
from fractions import Fraction

import pytest

import latticealg as la
from latticealg import (
    CapExceededError,
    FamilyError,
    GammaSet,
    NotBandProjectionError,
    OperatorMatrix,
    vec,
)
from latticealg.inner import all_gamma_sets


def noid3_family():
    alg = la.builtin("noid3")
    return alg, la.validate_family(alg, [alg.elements["p1"], alg.elements["p2"]])


def test_gamma_set_algebra():
    g = GammaSet.of([(0, 0), (1, 1)], 2)
    h = GammaSet.of([(0, 0), (0, 1)], 2)
    assert g.intersection(h).sorted_pairs() == [(0, 0)]
    assert g.union(h).sorted_pairs() == [(0, 0), (0, 1), (1, 1)]
    assert g.complement().sorted_pairs() == [(0, 1), (1, 0)]
    assert GammaSet.full(2).sorted_pairs() == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert GammaSet.empty(2).sorted_pairs() == []
    with pytest.raises(FamilyError):
        GammaSet.of([(0, 2)], 2)  # index out of range
    with pytest.raises(FamilyError):
        g.union(GammaSet.of([(0, 0)], 3))  # different families


def test_validate_family_accepts_orthogonal_projections():
    _, family = noid3_family()
    assert len(family) == 2
    m2 = la.builtin("m2-regular")
    fam = la.validate_family(m2, [m2.elements["E11"], m2.elements["E22"]])
    assert len(fam) == 2


def test_validate_family_rejects_non_orthogonal():
    alg = la.builtin("upper2")
    e = alg.require_identity()
    with pytest.raises(FamilyError) as err:
        la.validate_family(alg, [vec([1, 0, 0]), e])
    assert "orthogonal" in str(err.value) or err.value.witness is not None


def test_validate_family_rejects_non_member():
    alg = la.builtin("upper2")
    # the E12 direction is a band projection but not a left/right one
    with pytest.raises(FamilyError):
        la.validate_family(alg, [vec([0, 1, 0])])


def test_inner_bp_matrices():
    alg, family = noid3_family()
    p00 = la.inner_bp(alg, family, GammaSet.of([(0, 0)], 2))
    assert p00 == OperatorMatrix.diagonal([1, 0, 0])
    p_both = la.inner_bp(alg, family, GammaSet.of([(0, 0), (1, 1)], 2))
    assert p_both == OperatorMatrix.diagonal([1, 1, 0])
    p_cross = la.inner_bp(alg, family, GammaSet.of([(0, 1)], 2))
    assert p_cross == OperatorMatrix.zero(3)
    with pytest.raises(FamilyError):
        la.inner_bp(alg, family, GammaSet.of([(0, 0)], 3))


def test_boolean_laws_all_pairs_noid3():
    alg, family = noid3_family()
    gammas = all_gamma_sets(2)
    assert len(gammas) == 16
    for g, h in itertools.product(gammas, repeat=2):
        assert la.boolean_laws(alg, family, g, h).ok


def test_enumerate_inner_noid3():
    alg, family = noid3_family()
    found = la.enumerate_inner(alg, family)
    assert len(found) == 4
    matrices = {m.entries for _, m in found}
    assert matrices == {
        OperatorMatrix.zero(3).entries,
        OperatorMatrix.diagonal([1, 0, 0]).entries,
        OperatorMatrix.diagonal([0, 1, 0]).entries,
        OperatorMatrix.diagonal([1, 1, 0]).entries,
    }
    # first witness is the smallest bit mask, so the empty Γ comes first
    assert found[0][0] == GammaSet.empty(2)


def test_enumerate_inner_m2_regular_all_distinct():
    alg = la.builtin("m2-regular")
    family = la.validate_family(alg, [alg.elements["E11"], alg.elements["E22"]])
    found = la.enumerate_inner(alg, family)
    # all 16 Γ-subsets give distinct projections here: the four summands
    # x ↦ E_αα x E_ββ are the four coordinate masks
    assert len(found) == 16


def test_enumerate_inner_cap():
    alg = la.builtin("upper2-pair")
    atoms = la.ck_representation(alg).atoms
    family = la.validate_family(alg, list(atoms))
    assert len(family) == 4
    with pytest.raises(CapExceededError):
        la.enumerate_inner(alg, family, cap=9)
    found = la.enumerate_inner(alg, family, cap=16)
    assert len(found) == 64


def test_is_inner_witnesses():
    alg, family = noid3_family()
    gamma = la.is_inner(alg, family, OperatorMatrix.diagonal([1, 1, 0]))
    assert gamma is not None
    assert la.inner_bp(alg, family, gamma) == OperatorMatrix.diagonal([1, 1, 0])
    # the z-coordinate band projection is not inner for this family
    assert la.is_inner(alg, family, OperatorMatrix.diagonal([0, 0, 1])) is None
    with pytest.raises(NotBandProjectionError):
        la.is_inner(alg, family, OperatorMatrix.diagonal([2, 0, 0]))


def test_find_families_noid3():
    alg = la.builtin("noid3")
    pool = [vec(bits) for bits in itertools.product([0, 1], repeat=3)]
    families = la.find_families(alg, pool)
    members = [sorted(p.coords for p in fam.members) for fam in families]
    assert members == [
        [(0, 1, 0), (1, 0, 0)],
        [(1, 1, 0)],
    ]


def test_find_families_m2_regular():
    alg = la.builtin("m2-regular")
    pool = la.enumerate_order_idempotents(alg)
    families = la.find_families(alg, pool)
    members = [sorted(p.coords for p in fam.members) for fam in families]
    assert members == [
        [(0, 0, 0, 1), (1, 0, 0, 0)],
        [(1, 0, 0, 1)],
    ]


def test_find_families_ignores_zero_and_duplicates():
    alg = la.builtin("noid3")
    pool = [vec([0, 0, 0]), vec([1, 0, 0]), vec([1, 0, 0]), vec([0, 1, 0])]
    families = la.find_families(alg, pool)
    assert [len(f) for f in families] == [2]
