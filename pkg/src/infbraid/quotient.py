"""Graded quotients of free algebras by homogeneous quadratic relations.

Degree-d words over an alphabet of size m are encoded as base-m integers.
The ideal slice I_d is grown as F_1 I_{d-1} + R F_{d-2} and kept in sparse
echelon form, so reduction against it gives a unique normal form supported
on the non-pivot ("normal") words.
"""

from __future__ import annotations

from itertools import combinations

from . import linalg as la
from .series import TruncSeries

MAX_UT4_DEGREE = 6


def word_index(w, m):
    k = 0
    for x in w:
        k = k * m + x
    return k


def index_word(k, d, m):
    out = []
    for _ in range(d):
        k, r = divmod(k, m)
        out.append(r)
    return tuple(reversed(out))


def commutator_relation(a, b, coeff=1):
    """[a, b] as {word: coeff}, a and b being {letter: coeff} linear forms."""
    out = {}
    for x, p in a.items():
        for y, q in b.items():
            out[(x, y)] = out.get((x, y), 0) + coeff * p * q
            out[(y, x)] = out.get((y, x), 0) - coeff * p * q
    return {w: c for w, c in out.items() if c}


class GradedQuotient:
    """k<alphabet> / (relations), truncated at degree D."""

    def __init__(self, alphabet, relations, D):
        self.alphabet = tuple(alphabet)
        self.m = len(self.alphabet)
        self.D = int(D)
        self.relations = [{tuple(w): la.Q(c) for w, c in r.items()} for r in relations]
        if any(len(w) != 2 for r in self.relations for w in r):
            raise ValueError("only homogeneous quadratic relations are supported")
        self.ideal = [la.SparseEchelon() for _ in range(self.D + 1)]
        for d in range(2, self.D + 1):
            self._grow(d)

    def _grow(self, d):
        m = self.m
        E = self.ideal[d]
        shift = m ** (d - 1)
        for x in range(m):
            base = x * shift
            for row in list(self.ideal[d - 1].rows.values()):
                E.add({base + k: c for k, c in row.items()})
        tail = m ** (d - 2)
        for r in self.relations:
            head = {word_index(w, m): c for w, c in r.items()}
            for v in range(tail):
                E.add({h * tail + v: c for h, c in head.items()})
        E.fully_reduce()

    def dim(self, d):
        return self.m ** d - len(self.ideal[d])

    def dims(self):
        return [self.dim(d) for d in range(self.D + 1)]

    def normal_words(self, d):
        piv = self.ideal[d].rows
        return [index_word(k, d, self.m) for k in range(self.m ** d) if k not in piv]

    def reduce_homogeneous(self, d, coeffs):
        """Normal form of a degree-d element given as {word tuple: coeff}."""
        row = {}
        for w, c in coeffs.items():
            k = word_index(w, self.m)
            row[k] = row.get(k, la.ZERO) + c
        if d < 2:
            return {k: c for k, c in row.items() if c}
        return self.ideal[d].reduce(row)

    def reduce(self, S: TruncSeries):
        """Normal form of a truncated series, as {degree: {index: coeff}}."""
        if S.alphabet != self.alphabet:
            raise ValueError("series alphabet differs from the quotient alphabet")
        by_deg = {}
        for w, c in S.coeffs.items():
            if len(w) <= self.D:
                by_deg.setdefault(len(w), {})[w] = c
        out = {}
        for d, part in by_deg.items():
            nf = self.reduce_homogeneous(d, part)
            if nf:
                out[d] = nf
        return out

    def is_zero(self, S):
        return not self.reduce(S)

    def multiply(self, u, du, v, dv):
        """Product of normal forms u (degree du) and v (degree dv)."""
        d = du + dv
        shift = self.m ** dv
        row = {}
        for a, x in u.items():
            for b, y in v.items():
                k = a * shift + b
                row[k] = row.get(k, la.ZERO) + x * y
        return self.ideal[d].reduce(row) if d >= 2 else row

    def series(self, D=None):
        """Zero TruncSeries over this alphabet (convenience for callers)."""
        return TruncSeries.zero(self.alphabet, self.D if D is None else D)


# -- infinitesimal pure braid quotient ---------------------------------------

def t_alphabet(m):
    return tuple(f"t{i}{j}" for i, j in combinations(range(1, m + 1), 2))


def t_relations(m):
    names = t_alphabet(m)
    idx = {}
    for k, (i, j) in enumerate(combinations(range(1, m + 1), 2)):
        idx[(i, j)] = idx[(j, i)] = k
    rels = []
    for (i, j), (k, l) in combinations(list(combinations(range(1, m + 1), 2)), 2):
        if len({i, j, k, l}) == 4:
            rels.append(commutator_relation({idx[(i, j)]: 1}, {idx[(k, l)]: 1}))
    for a, b, c in combinations(range(1, m + 1), 3):
        # two independent relations per triple; the third is their sum
        rels.append(commutator_relation({idx[(a, b)]: 1}, {idx[(a, c)]: 1, idx[(b, c)]: 1}))
        rels.append(commutator_relation({idx[(a, c)]: 1}, {idx[(a, b)]: 1, idx[(b, c)]: 1}))
    return names, rels


def build_ut(m, D):
    if D > MAX_UT4_DEGREE:
        raise ValueError(f"degree {D} exceeds the resource guard {MAX_UT4_DEGREE}")
    names, rels = t_relations(m)
    return GradedQuotient(names, rels, D)


def build_ut4(D):
    return build_ut(4, D)


def central_quotient(D):
    """k<A,B,Z> with Z central."""
    return GradedQuotient(("A", "B", "Z"),
                          [commutator_relation({2: 1}, {0: 1}),
                           commutator_relation({2: 1}, {1: 1})], D)


# -- PBW oracle ---------------------------------------------------------------

def _mobius(n):
    out, k, x = 1, 2, n
    while k * k <= x:
        if x % k == 0:
            x //= k
            if x % k == 0:
                return 0
            out = -out
        k += 1
    return -out if x > 1 else out


def witt(q, d):
    """Dimension of the degree-d part of the free Lie algebra on q generators."""
    return sum(_mobius(d // e) * q ** e for e in range(1, d + 1) if d % e == 0) // d


def t4_lie_dims(D):
    """Graded dims of T_4 = F(3) x| (kZ + F(2)) as a vector space."""
    return [0] + [witt(3, d) + witt(2, d) + (1 if d == 1 else 0) for d in range(1, D + 1)]


def pbw_dims(lie_dims, D):
    """Graded dims of the enveloping algebra: prod_d (1 - t^d)^(-l_d)."""
    series = [1] + [0] * D
    for d in range(1, D + 1):
        for _ in range(lie_dims[d]):
            # multiply by 1/(1 - t^d)
            for k in range(d, D + 1):
                series[k] += series[k - d]
    return series


def ut4_dims_closed_form(D):
    """Coefficients of 1/((1-t)(1-2t)(1-3t)), i.e. h_d(1, 2, 3)."""
    return [sum(2 ** b * 3 ** c for b in range(d + 1) for c in range(d + 1 - b))
            for d in range(D + 1)]
