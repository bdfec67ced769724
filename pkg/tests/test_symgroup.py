import json

import pytest
from hypothesis import given, strategies as st

from infbraid import linalg as la
from infbraid import symgroup as sg
from infbraid.scalars import Q

PARTS = [lam for n in range(1, 6) for lam in sg.partitions(n)]


def perms(n):
    return st.permutations(list(range(1, n + 1))).map(sg.Perm)


def hook_length_dim(lam):
    from math import factorial
    n = sum(lam)
    cols = [sum(1 for r in lam if r > j) for j in range(lam[0])]
    prod = 1
    for i, r in enumerate(lam):
        for j in range(r):
            prod *= (r - j - 1) + (cols[j] - i - 1) + 1
    return factorial(n) // prod


@pytest.mark.parametrize("lam", PARTS, ids=str)
def test_irrep_dimension_and_relations(lam):
    M = sg.irrep(lam)
    assert M.N == len(sg.standard_tableaux(lam)) == hook_length_dim(lam)
    assert all(la.is_zero_matrix(R) for _, R in sg.relation_residuals(M))
    assert all(la.is_zero_matrix(R) for _, R in sg.form_residuals(M))


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_partition_counts(n):
    assert len(list(sg.partitions(n))) == {2: 2, 3: 3, 4: 5, 5: 7}[n]


def test_seminormal_convention():
    M = sg.irrep((2, 1))
    assert la.mat_equal(M.gen(1), [[Q(1), Q(0)], [Q(0), Q(-1)]])


@pytest.mark.parametrize("lam", PARTS, ids=str)
def test_jucys_murphy_content_sum(lam):
    n = sum(lam)
    M = sg.irrep(lam)
    total = la.zeros(M.N)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            total = la.mat_add(total, sg.perm_matrix(M, sg.Perm.transposition(n, i, j)))
    assert la.mat_equal(total, la.scalar_matrix(sg.content_sum(lam), M.N))


@given(st.integers(2, 5).flatmap(lambda n: st.tuples(perms(n), perms(n))))
def test_perm_matrix_is_homomorphism(pq):
    p, q = pq
    M = sg.irrep((p.n - 1, 1)) if p.n > 1 else sg.trivial(1)
    assert la.mat_equal(sg.perm_matrix(M, p * q),
                        la.mat_mul(sg.perm_matrix(M, p), sg.perm_matrix(M, q)))


@given(st.integers(1, 6).flatmap(perms))
def test_reduced_word_reconstructs(p):
    q = sg.Perm.identity(p.n)
    for i in p.reduced_word():
        q = q * sg.simple(p.n, i)
    assert q == p
    assert p * p.inverse() == sg.Perm.identity(p.n)


@pytest.mark.parametrize("n", [3, 4])
def test_character_orthogonality(n):
    parts = list(sg.partitions(n))
    reps = {lam: sg.irrep(lam) for lam in parts}
    order = 1
    for k in range(2, n + 1):
        order *= k
    for a in parts:
        for b in parts:
            s = sum(sg.class_size(n, ct) * sg.character(reps[a], sg.class_representative(n, ct))
                    * sg.character(reps[b], sg.class_representative(n, ct)) for ct in parts)
            assert s == (order if a == b else 0)


def test_decompose_permutation_rep():
    d = sg.decompose(sg.permutation_rep(4))
    assert dict(d) == {(4,): 1, (3, 1): 1}


def test_symrep_json_roundtrip():
    for M in (sg.irrep((3, 1)), sg.tensor(sg.irrep((2, 1)), sg.irrep((2, 1))),
              sg.direct_sum(sg.irrep((2, 1)), sg.trivial(3))):
        back = sg.SymRep.from_json(json.loads(json.dumps(M.to_json())))
        assert all(la.mat_equal(a, b) for a, b in zip(back.gens, M.gens))


def test_hom_young_schur():
    a, b = sg.irrep((2, 1)), sg.irrep((3,))
    assert len(sg.hom_young(a, a, (3,))) == 1
    assert len(sg.hom_young(a, b, (3,))) == 0
    assert len(sg.commutant_basis(sg.irrep((3, 1)), (2, 2))) == \
        sg.young_endomorphism_dim_by_characters(sg.irrep((3, 1)), (2, 2))
