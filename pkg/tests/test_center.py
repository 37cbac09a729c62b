"""The order ideal A_e generated by the identity: bands, atoms, truncations."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import latticealg as la
from latticealg import InputError, vec

rationals = st.fractions(min_value=-9, max_value=9, max_denominator=10)
positives = st.fractions(min_value=0, max_value=30, max_denominator=6)


def test_principal_ideal_differs_from_identity_ideal_on_upper2():
    # the two-sided principal ideal of e absorbs E12 (E11∗E12∗E22 = E12),
    # while the order ideal A_e stays on the diagonal support
    alg = la.builtin("upper2")
    e = alg.require_identity()
    two_sided = la.principal_ideal(alg, e)
    assert two_sided.sorted_support() == [0, 1, 2]
    basis, _ = la.identity_ideal(alg)
    assert basis.sorted_support() == [0, 2]


def test_identity_ideal_support_and_projection(unital_algebra):
    basis, projection = la.identity_ideal(unital_algebra)
    e = unital_algebra.require_identity()
    assert basis.support == e.support()
    # the band projection is the diagonal 0/1 mask of the support
    assert projection == la.diagonal_mask_operator(
        vec([1 if i in basis.support else 0 for i in range(unital_algebra.dim)])
    )
    assert basis.contains(e)


def test_in_identity_ideal_membership():
    alg = la.builtin("upper2")
    assert la.in_identity_ideal(alg, vec([5, 0, "-7/2"]))
    assert not la.in_identity_ideal(alg, vec([0, 1, 0]))
    assert la.norm_e(alg, vec([5, 0, "-7/2"])) == Fraction(5)
    with pytest.raises(InputError):
        la.norm_e(alg, vec([0, 1, 0]))


@given(st.lists(rationals, min_size=3, max_size=3).map(vec))
def test_band_decomposition_reconstructs(x):
    alg = la.builtin("upper2")
    _, projection = la.identity_ideal(alg)
    x_e = projection.apply(x)
    x_d = x - x_e
    assert x_e + x_d == x
    assert la.in_identity_ideal(alg, x_e)
    assert x_d.abs().is_disjoint(alg.require_identity())


def test_ck_representation_invariants(unital_algebra):
    rep = la.ck_representation(unital_algebra)
    e = unital_algebra.require_identity()
    total = unital_algebra.zero()
    for i, a in enumerate(rep.atoms):
        assert a.is_positive() and not a.is_zero()
        total = total + a
        for j, b in enumerate(rep.atoms):
            expected = a if i == j else unital_algebra.zero()
            assert unital_algebra.multiply(a, b) == expected
    assert total == e


def test_ck_coordinates_are_multiplicative():
    alg = la.builtin("ck3")
    rep = la.ck_representation(alg)
    x = vec([2, "1/3", -1])
    y = vec([5, 3, "1/2"])
    cx, cy = rep.coords(x), rep.coords(y)
    assert rep.coords(alg.multiply(x, y)) == tuple(a * b for a, b in zip(cx, cy))
    assert rep.from_coords(cx) == x
    assert rep.norm_e(x) == Fraction(2)


def test_ck_coordinates_on_non_ck_fixture():
    alg = la.builtin("m2-regular")
    rep = la.ck_representation(alg)
    assert rep.n_points == 2
    x = vec([3, 0, 0, "-1/2"])  # an element of A_e
    assert rep.coords(x) == (Fraction(3), Fraction(-1, 2))
    assert rep.norm_e(x) == Fraction(3)


def test_norm_e_is_submultiplicative_on_ideal(unital_algebra):
    rep = la.ck_representation(unital_algebra)
    xs = [
        rep.from_coords([Fraction(2)] + [Fraction(1, 3)] * (rep.n_points - 1)),
        rep.from_coords([Fraction(-1, 2)] * rep.n_points),
    ]
    for x in xs:
        for y in xs:
            lhs = rep.norm_e(unital_algebra.multiply(x, y))
            assert lhs <= rep.norm_e(x) * rep.norm_e(y)
            # multiplicative coordinates make this an equality coordinatewise
            assert lhs == max(
                abs(a * b) for a, b in zip(rep.coords(x), rep.coords(y))
            )


@settings(max_examples=40, deadline=None)
@given(st.lists(positives, min_size=3, max_size=3).map(vec))
def test_truncation_cauchy_on_upper2(a):
    report = la.truncation_cauchy_check(la.builtin("upper2"), a)
    assert report.ok, report.failures
    assert report.monotone and report.bound_holds
    assert report.stabilized_at is not None


def test_truncation_stabilizes_beyond_default_range():
    alg = la.builtin("ck2")
    report = la.truncation_cauchy_check(alg, vec([50, 1]), n_max=20)
    assert report.ok
    assert report.n_checked >= 51
    assert report.stabilized_at == 50
    assert report.projection == vec([50, 1])


def test_truncation_requires_positive():
    with pytest.raises(InputError):
        la.truncation_cauchy_check(la.builtin("upper2"), vec([1, 0, -1]))


def test_inverse_closed_check_cases():
    alg = la.builtin("upper2")
    report = la.inverse_closed_check(alg, vec([2, 0, 3]))
    assert report.ok and report.invertible
    assert report.inverse == vec(["1/2", 0, "1/3"])
    assert report.inverse_in_ideal and report.two_sided
    # non-invertible members are fine
    report = la.inverse_closed_check(alg, vec([1, 0, 0]))
    assert report.ok and not report.invertible
    # membership is a precondition
    with pytest.raises(InputError):
        la.inverse_closed_check(alg, vec([0, 1, 0]))


def test_identity_ideal_requires_identity():
    with pytest.raises(la.NoIdentityError):
        la.identity_ideal(la.builtin("noid3"))
