import pytest
from hypothesis import given, settings, strategies as st

from infbraid import extvariety as ev
from infbraid import infrep as ir
from infbraid import linalg as la
from infbraid import symgroup as sg
from infbraid.scalars import Q, QuadElem, sqrt_of

rats = st.integers(-4, 4).map(Q)
nonzero = st.integers(-4, 4).filter(bool).map(Q)


def test_verify_point_errors():
    M = sg.irrep((2, 1))
    with pytest.raises(ev.NotInCommutant):
        ev.verify_point(M, [[Q(0), Q(1)], [Q(0), Q(0)]])
    F = ev.orthogonal_s3_plus_trivial()
    with pytest.raises(ev.NotInVariety):
        ev.verify_point(F, ev.fixture_tau(1, 1, 1, 0, 0))
    assert ev.residual_report(F, ev.fixture_tau(1, 1, 1, 0, 2))[0] == "valid"


def test_fixture_base_is_orthogonal():
    F = ev.orthogonal_s3_plus_trivial()
    assert all(la.is_zero_matrix(R) for _, R in sg.relation_residuals(F))
    assert all(la.is_zero_matrix(R) for _, R in sg.form_residuals(F))
    assert len(sg.commutant_basis(F, (2, 1))) == 5


@settings(max_examples=30, deadline=None)
@given(rats, rats, rats, rats)
def test_fixture_points_on_hyperplane(a, b, c, d):
    p = ev.family_catalog("s3_std_plus_triv", a=a, b=b, c=c, d=d, l=2 * a - d)
    assert ir.validate(p.rep).ok
    assert ev.is_surjective(p) == bool(b * c)


def test_fixture_catalog_rejects_off_hyperplane():
    with pytest.raises(ev.NotInVariety):
        ev.family_catalog("s3_std_plus_triv", a=1, b=1, c=0, d=0, l=0)
    p = ev.family_catalog("s3_std_plus_triv", a=1, b=0, c=0, d=0, l=5)
    assert not ev.is_surjective(p)


def test_fixture_spectrum_example():
    assert ev.fixture_spectrum(3, 2, 2, 0) == [-1, 4, 6]
    with pytest.raises(ValueError):
        ev.fixture_spectrum(2, 3, 1, -1)


def test_fixture_commutant_coordinates():
    F = ev.orthogonal_s3_plus_trivial()
    tau = ev.fixture_tau(1, 2, 3, 4, 5)
    x, basis = ev.commutant_coordinates(F, tau)
    back = la.zeros(3)
    for c, B in zip(x, basis):
        back = la.mat_add(back, la.mat_scale(c, B))
    assert la.mat_equal(back, tau)


@settings(max_examples=20, deadline=None)
@given(rats, rats, nonzero, nonzero)
def test_s3_square_charpoly(x, y, u, v):
    p = ev.family_catalog("s3_square", x=x, y=y, u=u, v=v)
    assert ir.validate(p.rep).ok
    four_tau = la.mat_scale(Q(4), p.tau)
    assert la.charpoly(four_tau) == ev.s3_square_charpoly(x, y, u, v)


def test_s3_square_quadratic_point():
    x, y = QuadElem(1, 0, 3), 1 + sqrt_of(3)
    p = ev.family_catalog("s3_square", x=x, y=y, u=Q(1), v=Q(2))
    assert ir.validate(p.rep).ok and ev.is_surjective(p)
    pts = [ev.coordinates_on(e, [3, 5]) for e in ev.s3_square_spectrum(x, y, Q(1), Q(2))]
    assert sorted(pts) == sorted([[6, 1, 0], [2, 1, 0], [4, 3, 1], [4, 3, -1]])
    assert ir.spectrum_is_simplex(pts)
    assert la.rank(pts) == 3     # four vectors in Q^3: never linearly independent
    T = ir.t_total(p.rep)
    assert la.mat_equal(T, la.scalar_matrix(3 * (x + y) / 2, 4))


@pytest.mark.parametrize("n", [3, 4, 5])
@pytest.mark.parametrize("c", [1, Q(1, 2), -3])
def test_hooks_point(n, c):
    p = ev.hooks_point(n, c)
    assert ir.validate(p.rep).ok
    assert ev.is_surjective(p)


@pytest.mark.parametrize("n", [3, 4])
@pytest.mark.parametrize("lam,c", [(1, 1), (2, 1), (1, Q(1, 2)), (-1, 3)])
def test_hooks_extension_families(n, lam, c):
    pair, upper, lower = ev.hooks_extension(n, lam, c)
    alpha = Q(lam) * Q(c)
    assert all(la.mat_equal(a, b) for a, b in zip(upper, ev.f_family_p1(n, alpha)))
    assert all(la.mat_equal(a, b) for a, b in zip(lower, ev.hook_family(n, 1, alpha, "g")))
    assert not pair.upper_split() and not pair.lower_split()


def test_extension_pair_needs_block_structure():
    p = ev.hooks_point(3)
    with pytest.raises(ValueError):
        ev.extension_pair(p, 1, 1)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_d_squared(n):
    assert ev.d_squared_zero(n)


@pytest.mark.parametrize("n,p", [(3, 1), (3, 2), (4, 1), (4, 2), (4, 3), (5, 2)])
@pytest.mark.parametrize("kind", ["f", "g"])
def test_hook_families_braid(n, p, kind):
    assert ev.braid_check(ev.hook_family(n, p, Q(1), kind)) == []


@pytest.mark.parametrize("n,p", [(3, 1), (3, 2), (4, 2), (4, 3), (5, 2)])
def test_f_closed_form_is_exterior_power(n, p):
    want = ev.hook_family(n, p, Q(1), "f")
    got = ev.f_closed_form(n, p, Q(1))
    assert all(la.mat_equal(a, b) for a, b in zip(got, want))


@pytest.mark.parametrize("n,p", [(4, 2), (5, 3)])
def test_f_literal_formula_differs(n, p):
    lit = ev.f_closed_form(n, p, Q(1), literal=True)
    want = ev.hook_family(n, p, Q(1), "f")
    assert not all(la.mat_equal(a, b) for a, b in zip(lit, want))


def test_g_closed_form_not_exterior_power():
    n, p = 4, 2
    g1 = ev.g_closed_form(n, 1, Q(1))
    lifted = [ev.exterior_power(M, p) for M in g1]
    assert not all(la.mat_equal(a, b) for a, b in zip(lifted, ev.g_closed_form(n, p, Q(1))))


def test_exterior_power_multiplicative():
    A = [[Q(1), Q(2), Q(0)], [Q(0), Q(1), Q(3)], [Q(1), Q(0), Q(1)]]
    B = [[Q(0), Q(1), Q(0)], [Q(1), Q(0), Q(0)], [Q(0), Q(0), Q(2)]]
    lhs = ev.exterior_power(la.mat_mul(A, B), 2)
    assert la.mat_equal(lhs, la.mat_mul(ev.exterior_power(A, 2), ev.exterior_power(B, 2)))
    assert ev.exterior_power(A, 3) == [[la.det(A)]]


def test_guard_uncertified_when_hom_nonzero():
    hook = lambda k: sg.irrep((5 - k,) + (1,) * k)
    cert = ev.vsvide_guard(hook(1), hook(2))
    assert not cert.certified and cert.hom_dim > 0


def test_transvection_guard():
    r = ir.InfRep(sg.trivial(3, 2), [[Q(0), Q(1)], [Q(0), Q(0)]])
    assert ev.transvection_guard(r)
    assert not ev.transvection_guard(ev.hooks_point(3))


def test_random_search_finds_valid_points():
    M = sg.irrep((2, 1))
    found = ev.random_search(M, seed=1, trials=30)
    assert found
    assert all(ir.validate(ir.InfRep(M, t)).ok for t in found)


def test_tensor_point_valid():
    p = ev.family_catalog("hecke", partition=[2, 1], alpha=1, beta=2)
    q = ev.hooks_point(3)
    assert ir.validate(ev.tensor_point(p, q).rep).ok


def test_unknown_family():
    with pytest.raises(ValueError):
        ev.family_catalog("nope")
