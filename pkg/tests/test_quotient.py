import pytest

from infbraid import quotient as qt
from infbraid.scalars import Q
from infbraid.series import TruncSeries, bracket


def test_witt_numbers():
    assert [qt.witt(2, d) for d in range(1, 7)] == [2, 1, 2, 3, 6, 9]
    assert [qt.witt(3, d) for d in range(1, 5)] == [3, 3, 8, 18]


def test_ut4_graded_dims():
    U = qt.build_ut4(5)
    assert U.dims() == [1, 6, 25, 90, 301, 966]
    assert U.dims() == qt.pbw_dims(qt.t4_lie_dims(5), 5) == qt.ut4_dims_closed_form(5)


@pytest.mark.parametrize("m,want", [(2, [1, 1, 1, 1]), (3, [1, 3, 7, 15])])
def test_small_ut(m, want):
    assert qt.build_ut(m, 3).dims() == want


def test_relations_vanish():
    D = 3
    U = qt.build_ut4(D)
    t = {x: TruncSeries.gen(U.alphabet, D, x) for x in U.alphabet}
    assert U.is_zero(bracket(t["t12"], t["t34"]))
    assert U.is_zero(bracket(t["t12"], t["t13"] + t["t23"]))
    assert not U.is_zero(bracket(t["t12"], t["t13"]))
    T = t["t12"] + t["t13"] + t["t14"] + t["t23"] + t["t24"] + t["t34"]
    for x in U.alphabet:
        assert U.is_zero(bracket(T, t[x]))


def test_degree_guard():
    with pytest.raises(ValueError):
        qt.build_ut4(qt.MAX_UT4_DEGREE + 1)


def test_multiply_matches_reduce():
    U = qt.build_ut4(3)
    t = {x: TruncSeries.gen(U.alphabet, 3, x) for x in U.alphabet}
    a = t["t12"] + t["t34"].scale(Q(2))
    b = bracket(t["t13"], t["t23"])
    prod = U.multiply(U.reduce(a)[1], 1, U.reduce(b)[2], 2)
    assert prod == U.reduce(a * b)[3]


def test_central_quotient():
    C = qt.central_quotient(3)
    assert C.dims() == [1, 3, 7, 15]
