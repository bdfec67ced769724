"""Bratteli diagrams of restriction chains B_1 < B_2 < ... < B_n and their colorings.

Vertex colors are T_r = sum_{i<j<=r} t_ij (central in B_r), normalized as
Z_r = 2 T_r / (r (r - 1)).  Edge colors are Y_r(p -> q) = T_r(q) - T_{r-1}(p).
Colors are stored as tuples of rationals so that generic parameters can be
carried as coordinates.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from . import infrep as ir
from . import linalg as la
from . import symgroup as sg
from .scalars import Q, format_scalar, parse_scalar


@dataclass
class Vertex:
    level: int
    index: int
    dim: int
    label: object = None
    color: tuple | None = None          # T_r
    mult: int = 1

    @property
    def key(self):
        return f"{self.level}:{self.index}"


@dataclass
class BratteliDiagram:
    levels: list                                    # list of lists of Vertex, level 1 first
    edges: dict = field(default_factory=dict)       # (key_from, key_to) -> multiplicity
    edge_colors: dict = field(default_factory=dict)

    @property
    def n(self):
        return len(self.levels)

    def vertex(self, key):
        lvl, idx = map(int, key.split(":"))
        return self.levels[lvl - 1][idx]

    def parents(self, v):
        return [self.vertex(a) for (a, b) in self.edges if b == v.key]

    def multiplicity_free(self):
        return all(m == 1 for m in self.edges.values())

    def paths(self, top=None):
        """All paths from the source to ``top`` (or to every top-level vertex)."""
        tops = [top] if top is not None else self.levels[-1]
        out = []

        def walk(v, tail):
            if v.level == 1:
                out.append([v] + tail)
                return
            for p in self.parents(v):
                walk(p, [v] + tail)
        for t in tops:
            walk(t, [])
        return out

    def to_json(self):
        def col(c):
            return None if c is None else [format_scalar(x) for x in c]
        return {
            "levels": [[{"key": v.key, "dim": v.dim, "mult": v.mult,
                         "label": list(v.label) if isinstance(v.label, tuple) else v.label,
                         "color": col(v.color)} for v in lvl] for lvl in self.levels],
            "edges": [[a, b, col(self.edge_colors.get((a, b)))] + ([m] if m != 1 else [])
                      for (a, b), m in sorted(self.edges.items())],
        }

    @classmethod
    def from_json(cls, obj):
        levels = []
        for r, lvl in enumerate(obj["levels"], start=1):
            row = []
            for k, v in enumerate(lvl):
                c = v.get("color")
                label = v.get("label")
                row.append(Vertex(r, k, int(v["dim"]),
                                  tuple(label) if isinstance(label, list) else label,
                                  None if c is None else tuple(parse_scalar(x) for x in c),
                                  int(v.get("mult", 1))))
            levels.append(row)
        d = cls(levels)
        for e in obj["edges"]:
            a, b = e[0], e[1]
            d.edges[(a, b)] = int(e[3]) if len(e) > 3 else 1
            if len(e) > 2 and e[2] is not None:
                d.edge_colors[(a, b)] = tuple(parse_scalar(x) for x in e[2])
        return d

    def dumps(self):
        return json.dumps(self.to_json(), indent=2, sort_keys=True)


class ColoringError(ValueError):
    pass


def _vec_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _vec_scale(c, a):
    return tuple(c * x for x in a)


def _as_vec(c):
    return tuple(c) if isinstance(c, (tuple, list)) else (Q(c),)


# -- diagram of an actual representation ------------------------------------------------------

def _restricted_generators(r: ir.InfRep, m):
    if m == 1:
        return []
    return [r.s(i) for i in range(1, m)] + [r.tau]


def _central_idempotents(center, N, seed=0, attempts=20):
    """Primitive idempotents of a split commutative semisimple algebra (given by a basis)."""
    k = len(center)
    if k == 1:
        return [la.identity(N)], [None]
    rng = random.Random(seed)
    for _ in range(attempts):
        z = la.zeros(N)
        for B in center:
            z = la.mat_add(z, la.mat_scale(Q(rng.randint(-50, 50)), B))
        roots, splits = la.roots_in_field(la.charpoly(z), None)
        if splits and len(roots) == k:
            vals = sorted(roots)
            out = []
            I = la.identity(N)
            for mu in vals:
                E = I
                for nu in vals:
                    if nu != mu:
                        E = la.mat_mul(E, la.mat_scale(1 / (mu - nu), la.mat_sub(z, la.mat_scale(nu, I))))
                out.append(E)
            return out, vals
    raise ColoringError("centre does not split over Q (or a generic element was not found)")


def _label_by_character(r: ir.InfRep, m, E, mult):
    """Partition of m whose S_m-character matches the component, if any."""
    if m == 1:
        return (1,)
    base = sg.restrict(r.base, m) if m < r.n else r.base
    comp_chars = {}
    for mu in sg.partitions(m):
        comp_chars[mu] = sg.irrep(mu)
    for mu, irr in comp_chars.items():
        good = True
        for ct in _cycle_types(m):
            p = sg.class_representative(m, ct)
            lhs = la.trace(la.mat_mul(sg.perm_matrix(base, p), E))
            if lhs != mult * sg.character(irr, p):
                good = False
                break
        if good:
            return tuple(mu)
    return None


def _cycle_types(m):
    return list(sg.partitions(m))


def t_sum(r: ir.InfRep, m):
    out = la.zeros(r.N)
    for i, j in combinations(range(1, m + 1), 2):
        out = la.mat_add(out, ir.t_image(r, i, j))
    return out


def build_from_chain(r: ir.InfRep, check_pure=True, seed=0):
    """Natural diagram and coloring from restrictions to B_1 < ... < B_n."""
    if check_pure and r.n >= 2 and not ir.is_essentially_pure(r)[0]:
        raise ColoringError("the representation is not essentially pure")
    N = r.N
    levels, idem = [], []
    for m in range(1, r.n + 1):
        gens = _restricted_generators(r, m)
        if not gens:
            levels.append([Vertex(1, 0, 1, (1,), (Q(0),), N)])
            idem.append([la.identity(N)])
            continue
        A = la.algebra_closure(gens, N)
        Es, _ = _central_idempotents(ir.center_of(A, N), N, seed)
        T = t_sum(r, m)
        row = []
        for k, E in enumerate(Es):
            rank = la.rank(E)
            d2 = len(la.column_basis([la.vec(la.mat_mul(a, E)) for a in A])) if A else 1
            d = int(round(d2 ** 0.5))
            if d * d != d2:
                raise ColoringError("component is not a full matrix algebra (not split)")
            TE = la.mat_mul(T, E)
            c = next((TE[i][j] / E[i][j] for i in range(N) for j in range(N) if E[i][j]), Q(0))
            if not la.mat_equal(TE, la.mat_scale(c, E)):
                raise ColoringError(f"T_{m} is not scalar on a component")
            mult = rank // d
            row.append(Vertex(m, k, d, _label_by_character(r, m, E, mult), (c,), mult))
        levels.append(row)
        idem.append(Es)
    d = BratteliDiagram(levels)
    for m in range(2, r.n + 1):
        for p, Ep in zip(levels[m - 2], idem[m - 2]):
            for q, Eq in zip(levels[m - 1], idem[m - 1]):
                rk = la.rank(la.mat_mul(Ep, Eq))
                if rk:
                    d.edges[(p.key, q.key)] = rk // (p.dim * q.mult)
                    d.edge_colors[(p.key, q.key)] = _vec_add(q.color, _vec_scale(-1, p.color))
    return d


# -- formal coloring --------------------------------------------------------------------

def z_from_t(T, r):
    return _vec_scale(Q(2, r * (r - 1)), T)


def t_from_z(Z, r):
    return _vec_scale(Q(r * (r - 1), 2), Z)


def formal_coloring(diagram: BratteliDiagram, level2_colors):
    """Propagate Z barycentrically from level 2; ``level2_colors`` maps vertex key -> T_2."""
    if not diagram.multiplicity_free():
        raise ColoringError("formal coloring needs a multiplicity-free diagram")
    lv = [[Vertex(v.level, v.index, v.dim, v.label, None, v.mult) for v in lvl]
          for lvl in diagram.levels]
    out = BratteliDiagram(lv, dict(diagram.edges))
    width = len(_as_vec(next(iter(level2_colors.values()))))
    out.levels[0][0].color = (Q(0),) * width
    if diagram.n < 2:
        return out
    Z = {}
    for v in out.levels[1]:
        if v.key not in level2_colors:
            raise ColoringError(f"missing level-2 color for {v.key}")
        v.color = _as_vec(level2_colors[v.key])
        Z[v.key] = z_from_t(v.color, 2)
    for m in range(3, diagram.n + 1):
        for q in out.levels[m - 1]:
            acc = (Q(0),) * width
            for p in out.parents(q):
                acc = _vec_add(acc, _vec_scale(p.dim, Z[p.key]))
            Z[q.key] = _vec_scale(Q(1, q.dim), acc)
            q.color = t_from_z(Z[q.key], m)
    for (a, b) in out.edges:
        out.edge_colors[(a, b)] = _vec_add(out.vertex(b).color, _vec_scale(-1, out.vertex(a).color))
    return out


def same_coloring(d1: BratteliDiagram, d2: BratteliDiagram):
    return all(a.color == b.color for l1, l2 in zip(d1.levels, d2.levels) for a, b in zip(l1, l2))


def z_values(diagram):
    return {v.key: (z_from_t(v.color, v.level) if v.level >= 2 else v.color)
            for lvl in diagram.levels for v in lvl}


# -- injectivity and agregation ------------------------------------------------------------

@dataclass
class InjectivityVerdict:
    injective: bool
    paths: int
    agregating: object = None            # AgregatingVerdict or None when abstaining


def path_colors(diagram, top=None):
    out = []
    for path in diagram.paths(top):
        out.append(tuple(diagram.edge_colors[(a.key, b.key)] for a, b in zip(path, path[1:])))
    return out


def injectivity_agregation(diagram, r: ir.InfRep | None = None, seed=0, trials=20):
    cols = path_colors(diagram)
    inj = len(set(cols)) == len(cols)
    verdict = InjectivityVerdict(inj, len(cols))
    if inj and r is not None:
        verdict.agregating = ir.is_agregating(r, seed=seed, trials=trials)
    return verdict


# -- z_n recovery --------------------------------------------------------------------------

def zn_exponents(diagram, lam=1):
    """Exponent of z_r at every vertex, in units of h: z_r = exp(lam h Z_r)."""
    lam = Q(lam)
    return {k: _vec_scale(lam, z) for k, z in z_values(diagram).items()}


def zn_recovery(diagram, child_exponents):
    """Top exponents from level-(n-1) exponents: sum (dim R_i / dim R) e(R_i)."""
    n = diagram.n
    out = {}
    for q in diagram.levels[n - 1]:
        acc = None
        for p in diagram.parents(q):
            e = _vec_scale(Fraction(p.dim, q.dim), _as_vec(child_exponents[p.key]))
            acc = e if acc is None else _vec_add(acc, e)
        out[q.key] = acc
    return out


def hecke_level2_coordinates(diagram):
    """T_2 on the level-2 vertices of a Hecke chain, in coordinates over (alpha, beta)."""
    out = {}
    for v in diagram.levels[1]:
        if v.label == (2,):
            out[v.key] = (Q(1), Q(1))
        elif v.label == (1, 1):
            out[v.key] = (Q(1), Q(-1))
        else:
            raise ColoringError("level-2 vertex without a partition label")
    return out


def content_sum_oracle(diagram, alpha, beta):
    """T_r(mu) = alpha r(r-1)/2 + beta * (sum of contents of mu) for Hecke chains."""
    out = {}
    for lvl in diagram.levels:
        for v in lvl:
            r = v.level
            out[v.key] = (Q(alpha) * Q(r * (r - 1), 2) + Q(beta) * sg.content_sum(v.label),)
    return out


__all__ = ["BratteliDiagram", "Vertex", "build_from_chain", "formal_coloring",
           "injectivity_agregation", "zn_recovery", "zn_exponents", "content_sum_oracle"]
