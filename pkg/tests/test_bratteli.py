import json

import pytest

from infbraid import bratteli as bt
from infbraid import constructions as co
from infbraid import drinfeld as dr
from infbraid import infrep as ir
from infbraid import linalg as la
from infbraid import symgroup as sg
from infbraid.scalars import Q

AB = (Q(1, 3), Q(2))
CHAINS = [(3, 1), (2, 2), (2, 1, 1), (2, 1), (3, 2)]


@pytest.fixture(scope="module", params=CHAINS, ids=str)
def chain(request):
    r = co.hecke_point(request.param, *AB).rep
    return r, bt.build_from_chain(r)


def test_young_lattice_shape(chain):
    r, d = chain
    assert d.n == r.n and d.multiplicity_free()
    for lvl in d.levels[1:]:
        for v in lvl:
            assert v.label is not None and sum(v.label) == v.level
            assert v.dim == len(sg.standard_tableaux(v.label))
            for p in d.parents(v):
                assert sum(a != b for a, b in zip(p.label + (0,), v.label)) == 1
    assert len(d.paths()) == r.N


def test_colorings_agree(chain):
    _, d = chain
    oracle = bt.content_sum_oracle(d, *AB)
    assert all(v.color == oracle[v.key] for lvl in d.levels for v in lvl)
    formal = bt.formal_coloring(d, {v.key: v.color for v in d.levels[1]})
    assert bt.same_coloring(formal, d)


def test_coordinate_coloring_specializes(chain):
    _, d = chain
    generic = bt.formal_coloring(d, bt.hecke_level2_coordinates(d))
    a, b = AB
    for l1, l2 in zip(generic.levels, d.levels):
        for g, v in zip(l1, l2):
            assert (a * g.color[0] + b * g.color[1],) == v.color


def test_json_roundtrip(chain):
    _, d = chain
    back = bt.BratteliDiagram.from_json(json.loads(d.dumps()))
    assert back.to_json() == d.to_json()
    assert back.edges == d.edges and bt.same_coloring(back, d)


def test_edge_colors_are_jucys_murphy(chain):
    _, d = chain
    b = AB[1]
    for (ka, kb), col in d.edge_colors.items():
        p, q = d.vertex(ka), d.vertex(kb)
        added = [i for i, (x, y) in enumerate(zip(p.label + (0,), q.label)) if x != y][0]
        content = q.label[added] - 1 - added
        assert col == (AB[0] * (q.level - 1) + b * content,)


def test_z_t_inverse():
    T = (Q(3), Q(-1, 2))
    assert bt.t_from_z(bt.z_from_t(T, 5), 5) == T


def test_z3_exponent_burau(assoc3):
    r = co.burau(3).rep
    d = bt.build_from_chain(r)
    e = bt.zn_exponents(d, 1)
    top = d.levels[-1][0]
    halves = {p.key: Q(p.dim, top.dim) for p in d.parents(top)}
    assert sorted(halves.values()) == [Q(1, 2), Q(1, 2)]
    rec = bt.zn_recovery(d, {k: e[k] for k in halves})
    assert rec[top.key] == e[top.key]
    R = dr.lift(r, assoc3)
    assert e[top.key][0] * top.dim == dr.det_log_linear(R, 1)


def test_not_pure_rejected():
    r = ir.InfRep(sg.irrep((2, 1)), la.identity(2))
    with pytest.raises(bt.ColoringError):
        bt.build_from_chain(r)


def test_direct_sum_multiplicities():
    h = co.hecke_point((2, 1), *AB).rep
    s = ir.direct_sum(h, h)
    d = bt.build_from_chain(s, check_pure=False)
    top = d.levels[-1]
    assert [v.mult for v in top] == [2]
    with pytest.raises(bt.ColoringError):
        bt.formal_coloring(bt.BratteliDiagram(d.levels, {k: 2 for k in d.edges}), {})


def test_burau_chain_not_injective_when_beta_zero():
    r = co.hecke_point((3, 1), 1, 0).rep
    d = bt.build_from_chain(r, check_pure=False)
    assert not bt.injectivity_agregation(d).injective
