import pytest
from hypothesis import given, settings, strategies as st

from infbraid import constructions as co
from infbraid import infrep as ir
from infbraid import linalg as la
from infbraid import symgroup as sg
from infbraid.scalars import Q

rats = st.fractions(max_denominator=6).map(Q)


def test_cubic_discriminant_value():
    assert co.cubic_discriminant(2, 3, 5) == -267912540


@settings(max_examples=25, deadline=None)
@given(st.tuples(rats, rats, rats).filter(
    lambda t: len(set(t)) == 3 and all(t) and co.cubic_discriminant(*t)))
def test_cubic_relations_property(abc):
    assert co.cubic_checks(co.cubic_hecke_matrices(*abc)).ok


@pytest.mark.parametrize("abc", [(1, 1, 2), (0, 1, 2)])
def test_cubic_rejects(abc):
    with pytest.raises(ValueError):
        co.cubic_hecke_matrices(*abc)


def test_random_triples_distinct_and_seeded():
    a = co.random_cubic_triples(10, seed=3)
    assert a == co.random_cubic_triples(10, seed=3)
    assert len(set(a)) == 10


def test_sl2_killing_form():
    g = co.sl2()
    assert g.form == [[0, 4, 0], [4, 0, 0], [0, 0, 8]]
    assert g.invariance_residual() == []
    assert la.mat_equal(g.dual_pairing(), la.identity(3))


@pytest.mark.parametrize("m", [3, 4, 5])
def test_so_forms(m):
    g = co.so(m)
    assert g.dim == m * (m - 1) // 2
    assert g.invariance_residual() == []
    assert la.mat_equal(g.dual_pairing(), la.identity(g.dim))


def test_so_range():
    with pytest.raises(ValueError):
        co.so(6)


def test_sl2_casimir_on_two_copies():
    g = co.sl2()
    V = co.sl2_module(2)
    c = co.casimir_two_tensor(g, V, V)
    roots, splits = la.roots_in_field(la.charpoly(c), None)
    assert splits and sorted(set(roots)) == [Q(-3, 4), Q(1, 4)]
    p = la.charpoly(c)
    # eigenvalue 1/4 three times (spin 1), -3/4 once (spin 0)
    assert p == la.poly_mul(la.poly_mul([Q(-1, 4), 1], [Q(-1, 4), 1]),
                            la.poly_mul([Q(-1, 4), 1], [Q(3, 4), 1]))


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_sl2_modules_are_representations(d):
    e, f, h = co.sl2_module(d)
    assert la.mat_equal(la.commutator(e, f), h)
    assert la.mat_equal(la.commutator(h, e), la.mat_scale(2, e))
    C = co.casimir_operator(co.sl2(), [e, f, h])
    assert la.is_scalar_matrix(C)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_so3_casimir_unitary(n):
    g = co.so(3)
    C = co.casimir_rep(g, g.basis, n, module_form=la.identity(3))
    assert C.self_adjoint()
    assert ir.form_type(C.rep, C.form) == "unitary"


@pytest.mark.parametrize("n,want", [(2, "unitary"), (3, "none"), (4, "unitary")])
def test_sl2_epsilon_form(n, want):
    g = co.sl2()
    eps = [[Q(0), Q(1)], [Q(-1), Q(0)]]
    C = co.casimir_rep(g, co.sl2_module(2), n, module_form=eps)
    assert C.self_adjoint()
    assert ir.form_type(C.rep, C.form) == want


def test_mixed_modules():
    g = co.sl2()
    C = co.casimir_rep(g, [co.sl2_module(2), co.sl2_module(3), co.sl2_module(2)], 3)
    assert C.rep is None and C.relations().ok and C.commutes_with_diagonal().ok


@pytest.mark.parametrize("dims,want", [([2, 2], 2), ([2, 2, 2], 3), ([3, 3], 3), ([2, 3, 4], 6)])
def test_highest_weight_dims(dims, want):
    t, dim = co.highest_weight_sub(dims)
    assert dim == want
    assert co.t_relation_report(t, len(dims)).ok
    assert ir.is_agregating(t, seed=0).status is True


def test_highest_weight_single_factor():
    assert co.highest_weight_sub([3]) == ({}, 1)


def test_long_from_hecke3():
    r = co.hecke_point((2, 1), 1, 2).rep
    L = co.artin_restriction(r)
    assert L.n == 2
    assert la.mat_equal(L.g[0], ir.t_image(r, 1, 3))
    assert L.check().ok
    rho, _ = co.long_plus(L, Q(5, 7))
    assert rho.N == 4 and ir.validate(rho).ok


def test_artin_restriction_needs_three_strands():
    with pytest.raises(ValueError):
        co.artin_restriction(co.hecke_point((1, 1), 0, 1).rep)


def test_long_twist_shifts_g():
    L, _ = co.burau_long(4)
    Lt = L.twist(Q(2))
    assert la.mat_equal(la.mat_sub(Lt.g[1], L.g[1]), la.scalar_matrix(2, L.N))
    assert Lt.check().ok      # scalars drop out of every bracket


def test_predicted_long_type_table():
    assert co.predicted_long_type("orthogonal", "antiselfadjoint") == "symplectic"
    assert co.predicted_long_type("symplectic", "antiselfadjoint") == "orthogonal"
    assert co.predicted_long_type("unitary", "selfadjoint") == "unitary"
    assert co.predicted_long_type("unitary", "mixed") is None


def test_burau_is_hecke():
    p = co.burau(4, 1, 2)
    assert dict(sg.decompose(p.base)) == {(3, 1): 1}
    assert co.hecke_is_unitary(p)
