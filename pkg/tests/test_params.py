from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from drgwb.params import (
    INFINITY,
    AlphaZero,
    ClassicalParams,
    FamilyMismatch,
    IntersectionArray,
    InvalidParameters,
    NonPositiveIntersectionNumber,
    family1,
    family2,
    intersection_array,
    intersection_tensor,
    local_eig_candidates,
    multiplicity_closed_forms,
    p633_closed_form,
    p_hij,
    qbracket,
    spectrum,
    srg_from_local,
    thin_module_scalars,
    tilde,
)

PETERSEN = IntersectionArray.from_lists([3, 2], [1, 1])
Q4 = IntersectionArray.from_lists([4, 3, 2, 1], [1, 2, 3, 4])
CP4 = ClassicalParams(4, 2, 2, 60)


def test_qbracket():
    assert qbracket(0, 5) == 0
    assert all(qbracket(1, q) == 1 for q in (-3, 1, 2, 7))
    assert qbracket(4, 3) == 40
    assert qbracket(3, 1) == 3
    assert qbracket(3, -2) == 1 - 2 + 4


def test_classical_params_validation():
    with pytest.raises(InvalidParameters):
        ClassicalParams(4, 0, 2, 60)
    with pytest.raises(InvalidParameters):
        ClassicalParams(4, -1, 2, 60)
    with pytest.raises(InvalidParameters):
        ClassicalParams(0, 2, 2, 60)
    with pytest.raises(NonPositiveIntersectionNumber) as exc:
        intersection_array(ClassicalParams(3, 2, 1, 0))
    assert exc.value.name == "b"


def test_intersection_array_examples():
    assert intersection_array(ClassicalParams(6, 2, 2, 252)).b[0] == 15876
    assert intersection_array(CP4).c_(2) == 9
    assert str(intersection_array(ClassicalParams(2, 2, 2, 6))) == "{18,8;1,9}"


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 5), st.integers(1, 6), st.integers(0, 4), st.integers(1, 60))
def test_c1_is_one(q, D, a, extra):
    beta = a * qbracket(D, q) + extra
    assert intersection_array(ClassicalParams(D, q, a, beta)).c_(1) == 1


def test_p_hij_examples():
    assert p_hij(PETERSEN, 0, 1, 1) == 3
    assert p_hij(Q4, 2, 1, 1) == 2
    assert p_hij(PETERSEN, 0, 1, 2) == 0
    ia = intersection_array(family1(2, 6))
    assert p_hij(ia, 6, 3, 3) == p633_closed_form(2) == 3317589


def _feasible_arrays():
    return [PETERSEN, Q4, intersection_array(CP4), intersection_array(ClassicalParams(2, 2, 2, 6)),
            IntersectionArray.from_lists([5, 4], [1, 2]), IntersectionArray.from_lists([6, 4, 2], [1, 2, 3])]


@pytest.mark.parametrize("ia", _feasible_arrays(), ids=str)
def test_intersection_tensor_properties(ia):
    t = intersection_tensor(ia)
    k = ia.valencies
    d = ia.D
    for h in range(d + 1):
        for i in range(d + 1):
            assert sum(t[h][i]) == k[i]
            for j in range(d + 1):
                assert t[h][i][j] == t[h][j][i] == p_hij(ia, h, i, j)
                # k_h p^h_ij = k_i p^i_hj
                assert k[h] * t[h][i][j] == k[i] * t[i][h][j]
                if abs(i - j) > h or h > i + j:
                    assert t[h][i][j] == 0
    assert t[0][1][1] == ia.k


def test_p633_closed_form():
    assert p633_closed_form(2) == 3317589
    assert p633_closed_form(3).denominator != 1
    assert p633_closed_form(4).denominator == 1
    for q in (2, 3, 5):
        assert p633_closed_form(q) == p_hij(intersection_array(family1(q, 7)), 6, 3, 3)


def _spec(ia):
    return [(e.theta, e.multiplicity) for e in spectrum(ia)]


def test_spectrum_examples():
    assert _spec(PETERSEN) == [(3, 1), (1, 5), (-2, 4)]
    assert _spec(Q4) == [(4, 1), (2, 4), (0, 6), (-2, 4), (-4, 1)]
    c5 = spectrum(IntersectionArray.from_lists([2, 1], [1, 1]))
    assert c5[0].theta == 2 and c5[0].multiplicity == 1
    assert [e.rational for e in c5] == [True, False, False]
    assert [e.multiplicity for e in c5[1:]] == [2, 2]
    assert sum(e.multiplicity for e in c5) == 5


@pytest.mark.parametrize("ia", _feasible_arrays(), ids=str)
def test_multiplicities_sum_to_n(ia):
    entries = spectrum(ia)
    assert len(entries) == ia.D + 1
    assert sum(e.multiplicity for e in entries) == ia.n
    assert entries[0].theta == ia.k and entries[0].multiplicity == 1


def test_closed_forms():
    kd = multiplicity_closed_forms(family2(2, 6), "kD_family2")
    assert kd.denominator != 1
    f2 = multiplicity_closed_forms(family1(2, 4), "f2_family1_D4")
    assert f2 == Fraction(58604000, 1290) and f2.denominator != 1
    assert multiplicity_closed_forms(family2(3, 5), "f2_family2").denominator != 1
    with pytest.raises(FamilyMismatch):
        multiplicity_closed_forms(family2(2, 6), "f2_family1")
    with pytest.raises(FamilyMismatch):
        multiplicity_closed_forms(family1(2, 6), "f2_family1_D4")
    with pytest.raises(ValueError):
        multiplicity_closed_forms(family1(2, 4), "nope")


@pytest.mark.parametrize("q,D", [(2, 4), (3, 4), (2, 5), (3, 7)])
def test_closed_forms_match_generic_spectrum(q, D):
    """The printed multiplicities agree with the tridiagonal eigen-analysis."""
    cp1, cp2 = family1(q, D), family2(q, D)
    by_theta1 = spectrum(intersection_array(cp1))
    by_theta2 = spectrum(intersection_array(cp2))
    f1 = by_theta1[2].multiplicity
    if D == 4:
        assert f1 == multiplicity_closed_forms(cp1, "f2_family1_D4")
    assert f1 == multiplicity_closed_forms(cp1, "f2_family1")
    assert by_theta2[2].multiplicity == multiplicity_closed_forms(cp2, "f2_family2")
    assert by_theta2[3].multiplicity == multiplicity_closed_forms(cp2, "f3_family2")
    assert by_theta2[D].multiplicity == multiplicity_closed_forms(cp2, "fD_family2")
    assert intersection_array(cp2).valencies[D] == multiplicity_closed_forms(cp2, "kD_family2")
    if D == 5:
        assert intersection_array(cp1).valencies[2] == multiplicity_closed_forms(cp1, "k2_family1_D5")


def test_tilde():
    assert tilde(-1, 5) is INFINITY
    assert tilde(0, 2) == -3
    for ia in _feasible_arrays():
        thetas = [e.theta for e in spectrum(ia)]
        b1 = ia.b_(1)
        assert tilde(thetas[1], b1) < -1
        assert tilde(thetas[-1], b1) >= 0


def test_local_eig_candidates():
    le = local_eig_candidates(CP4)
    assert le.values == (-3, 57, -1, 27)
    assert not le.eta4_eq_eta2 and not le.eta4_eq_eta3
    le = local_eig_candidates(ClassicalParams(4, 2, 0, 5))
    assert le.eta4_eq_eta3 and le.values[3] == le.values[2] == -1
    le = local_eig_candidates(ClassicalParams(4, 2, 2, 2 * qbracket(4, 2)))
    assert le.eta4_eq_eta2 and le.values[3] == le.values[1]


def test_srg_from_local():
    cp = family2(2, 6)
    srg = srg_from_local(cp)
    assert srg.mu == 6
    assert srg.n == 63 * 252 == 15876 == intersection_array(cp).k
    assert srg.beta_matches
    cp1 = family1(2, 6)
    assert cp1.beta == 3 * 127 - 2 == 379
    assert srg_from_local(cp1).forced_beta == 379
    with pytest.raises(AlphaZero):
        srg_from_local(ClassicalParams(4, 2, 0, 5))


@pytest.mark.parametrize("q,D", [(2, 4), (3, 5), (5, 9)])
def test_srg_displays_match_intersection_numbers(q, D):
    for cp in (family1(q, D), family2(q, D)):
        ia, srg = intersection_array(cp), srg_from_local(cp)
        k, r, s = ia.a_(1), srg.r, srg.s
        assert srg.n == ia.k and srg.k == k
        assert srg.lambda_ == k + r + s + r * s
        assert srg.mu == k + r * s


def test_thin_module_scalars():
    for cp in (CP4, family1(3, 6)):
        s2 = thin_module_scalars(cp, "D-2")
        s1 = thin_module_scalars(cp, "D-1")
        assert s2.beta[1] == cp.b(2) and s1.beta[1] == cp.b(1)
        assert s1.gamma[0] == cp.c(1) == 1
        assert s2.diameter == cp.D - 2 and s1.diameter == cp.D - 1
    # beta'_1 for (4,2,2,60), class D-1: c_2/c_1 * (16-2)/(4-1) * 1 * (60 - 2*3)
    assert thin_module_scalars(CP4, "D-1").beta_prime[1] == Fraction(9) * Fraction(14, 3) * 54
    with pytest.raises(ValueError):
        thin_module_scalars(CP4, "D-3")
