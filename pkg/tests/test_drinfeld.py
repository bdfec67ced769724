import json

import pytest
from hypothesis import given, settings, strategies as st

from infbraid import associator as asc
from infbraid import constructions as co
from infbraid import drinfeld as dr
from infbraid import extvariety as ev
from infbraid import infrep as ir
from infbraid import linalg as la
from infbraid.scalars import Q
from infbraid.series import HMatrix, hexp

letters = st.lists(st.integers(1, 3).flatmap(lambda i: st.sampled_from([i, -i])), max_size=8)


@pytest.fixture(scope="module")
def phi4():
    return asc.solve(Q(1), 4, even=True)


@pytest.fixture(scope="module")
def burau3(assoc3):
    r = co.burau(3).rep
    return r, dr.lift(r, assoc3)


@given(letters)
def test_word_inverse(w):
    W = dr.BraidWord(w)
    assert (W * W.inverse()).free_reduce() == dr.BraidWord()
    assert dr.BraidWord.parse(",".join(map(str, w))) == W


def test_named_words():
    assert dr.xi(1, 3).letters == (2, 1, 1, -2)
    assert dr.delta(3).letters == (2, 1, 1, 2)
    assert dr.gamma(3).letters == (1, 2) * 3
    with pytest.raises(ValueError):
        dr.BraidWord([0])


@settings(max_examples=15, deadline=None)
@given(letters)
def test_eval_word_is_homomorphism(w):
    r = co.hecke_point((3, 1), Q(1, 2), 1).rep
    R = dr.lift(r, asc.taylor3(1, 0))
    W = dr.BraidWord(w)
    assert dr.eval_word(R, W * W.inverse()) == HMatrix.identity(R.N, R.D)
    assert dr.eval_word(R, W) == dr.eval_word(R, W.free_reduce())


def test_xi12_n2(assoc3):
    r = co.hecke_point((2,), 1, 1).rep
    r2 = co.hecke_point((1, 1), 1, 1).rep
    for x in (r, r2):
        R = dr.lift(x, assoc3)
        assert dr.eval_word(R, dr.xi(1, 2)) == hexp(x.tau, 3, 2)


def test_delta_identity_degree4(phi4):
    r = co.burau(3).rep
    R = dr.lift(r, phi4)
    assert R.D == 4
    assert dr.delta_identity(R, r, 1)[3].is_zero()


def test_invalid_tau_raises_lift_error(assoc3):
    M = ev.orthogonal_s3_plus_trivial()
    r = ir.InfRep(M, ev.fixture_tau(1, 1, 1, 0, 0))
    assert ev.residual_report(M, r.tau)[0] == "c_residual"
    with pytest.raises(dr.LiftError):
        dr.lift(r, assoc3)


def test_zero_lambda_lift_is_symmetric_group():
    r = co.burau(4).rep
    R = dr.lift(r, asc.trivial(3))
    for i, S in enumerate(R.sigmas, start=1):
        assert la.mat_equal(S.coeffs[0], r.s(i))
        assert all(la.is_zero_matrix(c) for c in S.coeffs[1:])


def test_braidrep_json(burau3):
    _, R = burau3
    back = dr.BraidRep.from_json(json.loads(json.dumps(R.to_json())))
    assert dr.same_lift(back, R)


def test_hensel_example():
    D = 3
    e = HMatrix([[[Q(1), Q(0)], [Q(0), Q(0)]], [[Q(0), Q(1)], [Q(0), Q(0)]]], D)
    P = dr.hensel_conjugate(e, [Q(0), Q(-1), Q(1)])
    ebar = HMatrix.constant(e.coeffs[0], D)
    assert (P * ebar - e * P).is_zero()
    assert la.mat_equal(P.coeffs[0], [[Q(1), Q(0)], [Q(0), Q(-1)]])


def test_hensel_rejects_non_root():
    a = HMatrix.constant([[Q(2), Q(0)], [Q(0), Q(1)]], 2)
    with pytest.raises(ValueError):
        dr.hensel_conjugate(a, [Q(-1), Q(0), Q(1)])


def test_hom_isotypic_square(assoc3):
    h = co.hecke_point((2, 1), 1, 2).rep
    s = ir.direct_sum(h, h)
    R = dr.lift(s, assoc3)
    prof = dr.hom_profile(R, R, s, s)
    assert prof.hom_inf == 4 and prof.free_rank == 4
    assert prof.total_dim == prof.expected


def test_hom_dimension_formula_when_sn_hom_larger(assoc3):
    # same S_3-module, different tau: Hom_Sn = 1, infinitesimal Hom = 0
    a = co.hecke_point((2, 1), 0, 1).rep
    b = co.hecke_point((2, 1), 1, 1).rep
    prof = dr.hom_profile(dr.lift(a, assoc3), dr.lift(b, assoc3), a, b)
    assert (prof.hom_inf, prof.hom_sn) == (0, 1)
    assert prof.total_dim == prof.expected == 1
    assert prof.free_rank is None


def test_abs_irreducible(burau3):
    r, R = burau3
    assert dr.abs_irreducible(R, r)
    s = ir.direct_sum(r, r)
    assert not dr.abs_irreducible(dr.lift(s, asc.taylor3(1, 0)), s)


def test_isometry_rejects_wrong_mode(burau3):
    r, R = burau3
    with pytest.raises(ValueError):
        dr.isometry_check(R, r.base.form, "symplectic", r)
    with pytest.raises(ValueError):
        dr.isometry_check(R, r.base.form, "hermitian")


def test_det_log_linear(burau3, assoc3):
    r, R = burau3
    assert dr.det_log_linear(R, 1) == assoc3.lam * la.trace(r.tau)


def test_word_index_guard(burau3):
    _, R = burau3
    with pytest.raises(ValueError):
        dr.eval_word(R, dr.sigma(3))
