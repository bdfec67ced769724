import pytest
import sympy
from hypothesis import given, settings, strategies as st

from infbraid import linalg as la
from infbraid.scalars import Q, sqrt_of

small = st.integers(-4, 4).map(Q)


def square(n):
    return st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n)


def to_sympy(A):
    return sympy.Matrix([[sympy.Rational(int(x.numerator), int(x.denominator)) for x in r]
                         for r in A])


@given(st.integers(1, 4).flatmap(square))
def test_det_and_rank_match_sympy(A):
    S = to_sympy(A)
    assert la.det(A) == Q(int(S.det().p), int(S.det().q))
    assert la.rank(A) == S.rank()


@given(st.integers(1, 4).flatmap(square))
def test_inverse(A):
    if not la.det(A):
        with pytest.raises(ArithmeticError):
            la.inverse(A)
        return
    assert la.mat_equal(la.mat_mul(A, la.inverse(A)), la.identity(len(A)))


@given(st.integers(1, 4).flatmap(square))
def test_nullspace_is_kernel(A):
    K = la.nullspace(A)
    assert len(K) == len(A) - la.rank(A)
    for v in K:
        assert not any(la.mat_vec(A, v))


@given(st.integers(1, 4).flatmap(square))
def test_charpoly_cayley_hamilton(A):
    p = la.charpoly(A)
    assert p[-1] == 1 and len(p) == len(A) + 1
    assert la.is_zero_matrix(la.poly_eval_matrix(p, A))


@settings(max_examples=30)
@given(st.integers(1, 3).flatmap(lambda n: st.tuples(square(n), square(n))))
def test_kron_mixed_product(AB):
    A, B = AB
    lhs = la.mat_mul(la.kron(A, B), la.kron(B, A))
    rhs = la.kron(la.mat_mul(A, B), la.mat_mul(B, A))
    assert la.mat_equal(lhs, rhs)


def test_solve_inconsistent():
    with pytest.raises(la.InconsistentSystem):
        la.solve([[Q(1), Q(1)], [Q(2), Q(2)]], [Q(1), Q(3)])


def test_poly_division():
    p = la.poly_mul([Q(-1), Q(1)], [Q(2), Q(0), Q(1)])
    q, r = la.poly_divmod(p, [Q(-1), Q(1)])
    assert q == [Q(2), Q(0), Q(1)] and not la.poly_trim(r)
    assert not la.is_squarefree(la.poly_mul(p, [Q(-1), Q(1)]))


def test_roots_over_quadratic_field():
    roots, splits = la.roots_in_field([Q(-3), Q(0), Q(1)], 3)
    assert splits and sorted(roots, key=lambda z: z.y) == [-sqrt_of(3), sqrt_of(3)]
    _, splits = la.roots_in_field([Q(-2), Q(0), Q(1)], None)
    assert not splits


def test_algebra_closure_full_matrix_algebra():
    s = [[Q(0), Q(1)], [Q(1), Q(0)]]
    d = [[Q(1), Q(0)], [Q(0), Q(2)]]
    assert len(la.algebra_closure([s], 2)) == 2
    assert len(la.algebra_closure([s, d], 2)) == 4


def test_intertwiners_of_swap():
    s = [[Q(0), Q(1)], [Q(1), Q(0)]]
    assert len(la.intertwiners([(s, s)], 2, 2)) == 2
    assert la.intertwiners([(s, [[Q(-1)]]), ([[Q(1), Q(0)], [Q(0), Q(1)]], [[Q(1)]])], 2, 1)
