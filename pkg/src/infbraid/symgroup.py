"""Symmetric groups: permutations, Young seminormal irreducibles, characters.

Conventions: permutations act on {1..n}; ``(p*q)(x) = p(q(x))``; a
representation sends ``s_i = (i, i+1)`` to ``gens[i-1]`` and ``p*q`` to
``rho(p) rho(q)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations
from math import factorial

from . import linalg as la
from .scalars import Q, format_scalar, parse_scalar


# -- permutations ------------------------------------------------------------

class Perm:
    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"{images} is not a permutation of 1..{len(images)}")
        self.images = images

    @property
    def n(self):
        return len(self.images)

    @classmethod
    def identity(cls, n):
        return cls(range(1, n + 1))

    @classmethod
    def transposition(cls, n, i, j):
        im = list(range(1, n + 1))
        im[i - 1], im[j - 1] = j, i
        return cls(im)

    @classmethod
    def from_cycles(cls, n, *cycles):
        im = list(range(1, n + 1))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                im[a - 1] = b
        return cls(im)

    def __call__(self, x):
        return self.images[x - 1]

    def __mul__(self, other):
        if self.n != other.n:
            raise ValueError("permutations of different degrees")
        return Perm(self.images[other.images[x] - 1] for x in range(self.n))

    def inverse(self):
        inv = [0] * self.n
        for x, y in enumerate(self.images, start=1):
            inv[y - 1] = x
        return Perm(inv)

    def __eq__(self, other):
        return isinstance(other, Perm) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Perm{self.images}"

    def reduced_word(self):
        """Indices a_1..a_k with self = s_{a_1} ... s_{a_k}, k = number of inversions."""
        p = list(self.images)
        right = []
        changed = True
        while changed:
            changed = False
            for i in range(len(p) - 1):
                if p[i] > p[i + 1]:
                    p[i], p[i + 1] = p[i + 1], p[i]
                    right.append(i + 1)
                    changed = True
        return right[::-1]

    def cycle_type(self):
        seen = set()
        out = []
        for x in range(1, self.n + 1):
            if x in seen:
                continue
            k = 0
            y = x
            while y not in seen:
                seen.add(y)
                y = self(y)
                k += 1
            out.append(k)
        return tuple(sorted(out, reverse=True))


def simple(n, i):
    return Perm.transposition(n, i, i + 1)


# -- partitions and tableaux -------------------------------------------------

def parse_partition(obj):
    if isinstance(obj, str):
        obj = [int(x) for x in obj.replace("[", "").replace("]", "").split(",") if x.strip()]
    lam = tuple(int(x) for x in obj)
    if not lam or any(x <= 0 for x in lam) or any(a < b for a, b in zip(lam, lam[1:])):
        raise ValueError(f"{obj!r} is not a partition")
    return lam


def partitions(n, largest=None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in partitions(n - k, k):
            yield (k,) + rest


def standard_tableaux(lam):
    """Standard tableaux of shape lam, as tuples of rows; sorted by row word."""
    n = sum(lam)
    out = []

    def grow(rows, k):
        if k > n:
            out.append(tuple(tuple(r) for r in rows))
            return
        for i in range(len(lam)):
            if len(rows[i]) < lam[i] and (i == 0 or len(rows[i - 1]) > len(rows[i])):
                rows[i].append(k)
                grow(rows, k + 1)
                rows[i].pop()

    grow([[] for _ in lam], 1)

    def row_word(T):
        where = {}
        for r, row in enumerate(T):
            for x in row:
                where[x] = r
        return tuple(where[k] for k in range(1, n + 1))

    return sorted(out, key=row_word)


def position(T, k):
    for r, row in enumerate(T):
        for c, x in enumerate(row):
            if x == k:
                return r, c
    raise KeyError(k)


def content(T, k):
    r, c = position(T, k)
    return c - r


def swap_entries(T, a, b):
    return tuple(tuple(b if x == a else a if x == b else x for x in row) for row in T)


def content_sum(lam):
    return sum(c - r for r, length in enumerate(lam) for c in range(length))


# -- representations --------------------------------------------------------

def _label_key(lam):
    return ",".join(map(str, lam))


@dataclass(frozen=True)
class SymRep:
    """Matrix representation of S_n given on the simple transpositions.

    ``form`` is an invariant nondegenerate bilinear form (a matrix) or None.
    ``label`` is a formal sum [(partition, multiplicity), ...] or None.
    """

    n: int
    gens: tuple
    form: object = None
    label: tuple | None = None
    field_d: int | None = field(default=None, compare=False)

    @property
    def N(self):
        if self.gens:
            return len(self.gens[0])
        return len(self.form) if self.form is not None else 1

    def gen(self, i):
        return self.gens[i - 1]

    def to_json(self):
        out = {"n": self.n, "N": self.N,
               "label": [[_label_key(lam), m] for lam, m in self.label] if self.label else None,
               "gens": [[[format_scalar(x) for x in row] for row in g] for g in self.gens]}
        if self.form is not None:
            F = self.form
            diag = all(not F[i][j] for i in range(len(F)) for j in range(len(F)) if i != j)
            out["form"] = ([format_scalar(F[i][i]) for i in range(len(F))] if diag
                           else {"matrix": [[format_scalar(x) for x in row] for row in F]})
        else:
            out["form"] = None
        return out

    @classmethod
    def from_json(cls, obj, d=None):
        gens = tuple([[parse_scalar(x, d) for x in row] for row in g] for g in obj["gens"])
        form = obj.get("form")
        if isinstance(form, dict):
            form = [[parse_scalar(x, d) for x in row] for row in form["matrix"]]
        elif form is not None:
            form = _diag_form([parse_scalar(x, d) for x in form])
        label = obj.get("label")
        if label:
            label = tuple((parse_partition(k), int(m)) for k, m in label)
        n = int(obj["n"])
        if n == 1 and not gens:
            N = int(obj.get("N", len(form) if form is not None else 1))
            return cls(1, (), form if form is not None else la.identity(N), label, d)
        return cls(n, gens, form, label, d)


def _diag_form(values):
    F = la.zeros(len(values))
    for i, x in enumerate(values):
        F[i][i] = x
    return F


def irrep(lam):
    """Young seminormal form of the irreducible representation attached to lam."""
    lam = parse_partition(lam)
    n = sum(lam)
    tabs = standard_tableaux(lam)
    index = {T: k for k, T in enumerate(tabs)}
    N = len(tabs)
    gens = []
    for i in range(1, n):
        M = la.zeros(N)
        for T, k in index.items():
            (r1, c1), (r2, c2) = position(T, i), position(T, i + 1)
            if r1 == r2:
                M[k][k] = Q(1)
            elif c1 == c2:
                M[k][k] = Q(-1)
            else:
                r = (c2 - r2) - (c1 - r1)
                M[k][k] = Q(1, r)
                other = index[swap_entries(T, i, i + 1)]
                M[other][k] = Q(1) if r > 0 else 1 - Q(1, r * r)
        gens.append(M)
    # invariant diagonal form, propagated along the s_i-graph on tableaux
    beta = {tabs[0]: Q(1)}
    stack = [tabs[0]]
    while stack:
        T = stack.pop()
        for i in range(1, n):
            (r1, c1), (r2, c2) = position(T, i), position(T, i + 1)
            if r1 == r2 or c1 == c2:
                continue
            r = (c2 - r2) - (c1 - r1)
            T2 = swap_entries(T, i, i + 1)
            if T2 in beta:
                continue
            f = 1 - Q(1, r * r)
            beta[T2] = beta[T] * f if r > 0 else beta[T] / f
            stack.append(T2)
    form = _diag_form([beta[T] for T in tabs])
    if n == 1:
        return SymRep(1, (), form, ((lam, 1),))
    return SymRep(n, tuple(gens), form, ((lam, 1),))


def trivial(n, N=1):
    return SymRep(n, tuple(la.identity(N) for _ in range(n - 1)), la.identity(N), (((n,), N),))


def sign_rep(n):
    return irrep((1,) * n)


def permutation_rep(n):
    """Natural action on k^n: s.e_i = e_{s(i)}."""
    gens = []
    for i in range(1, n):
        s = simple(n, i)
        M = la.zeros(n)
        for x in range(1, n + 1):
            M[s(x) - 1][x - 1] = Q(1)
        gens.append(M)
    label = (((n,), 1), ((n - 1, 1), 1)) if n > 1 else (((1,), 1),)
    return SymRep(n, tuple(gens), la.identity(n), label)


def perm_matrix(rep, p):
    if p.n != rep.n:
        raise ValueError(f"permutation of {p.n} letters for a rep of S_{rep.n}")
    out = la.identity(rep.N)
    for i in p.reduced_word():
        out = la.mat_mul(out, rep.gen(i))
    return out


def act(rep, p, X):
    """p . X = rho(p) X rho(p)^-1."""
    return la.mat_mul(la.mat_mul(perm_matrix(rep, p), X), perm_matrix(rep, p.inverse()))


def relation_residuals(rep):
    """Residual matrices of the Coxeter presentation (empty list iff all vanish)."""
    out = []
    N = rep.N
    I = la.identity(N)
    g = rep.gens
    for i in range(len(g)):
        R = la.mat_sub(la.mat_mul(g[i], g[i]), I)
        if not la.is_zero_matrix(R):
            out.append((f"s{i + 1}^2 = 1", R))
        for j in range(i + 1, len(g)):
            if j == i + 1:
                R = la.mat_sub(la.mat_chain(g[i], g[j], g[i]), la.mat_chain(g[j], g[i], g[j]))
                name = f"s{i + 1}s{j + 1}s{i + 1} = s{j + 1}s{i + 1}s{j + 1}"
            else:
                R = la.commutator(g[i], g[j])
                name = f"[s{i + 1}, s{j + 1}] = 0"
            if not la.is_zero_matrix(R):
                out.append((name, R))
    return out


def form_residuals(rep):
    if rep.form is None:
        return []
    out = []
    B = rep.form
    for i, g in enumerate(rep.gens, start=1):
        R = la.mat_sub(la.mat_chain(la.transpose(g), B, g), B)
        if not la.is_zero_matrix(R):
            out.append((f"s{i} isometry", R))
    return out


def _merge_labels(*labels):
    if any(l is None for l in labels):
        return None
    acc = {}
    for lab in labels:
        for lam, m in lab:
            acc[lam] = acc.get(lam, 0) + m
    return tuple(sorted(acc.items(), key=lambda kv: kv[0], reverse=True))


def direct_sum(r1, r2):
    if r1.n != r2.n:
        raise ValueError("direct sum of representations of different S_n")
    gens = tuple(la.block_diag(a, b) for a, b in zip(r1.gens, r2.gens))
    form = (la.block_diag(r1.form, r2.form)
            if r1.form is not None and r2.form is not None else None)
    return SymRep(r1.n, gens, form, _merge_labels(r1.label, r2.label), r1.field_d or r2.field_d)


def tensor(r1, r2):
    if r1.n != r2.n:
        raise ValueError("tensor product of representations of different S_n")
    gens = tuple(la.kron(a, b) for a, b in zip(r1.gens, r2.gens))
    form = la.kron(r1.form, r2.form) if r1.form is not None and r2.form is not None else None
    rep = SymRep(r1.n, gens, form, None, r1.field_d or r2.field_d)
    try:
        lab = decompose(rep)
    except ValueError:
        lab = None
    return SymRep(r1.n, gens, form, lab, rep.field_d)


def dual(r):
    gens = tuple(la.transpose(la.inverse(g)) for g in r.gens)
    form = la.inverse(r.form) if r.form is not None else None
    return SymRep(r.n, gens, form, r.label, r.field_d)


def restrict(r, m):
    """Restriction to S_m (first m strands)."""
    if not 1 <= m <= r.n:
        raise ValueError("restriction degree out of range")
    return SymRep(m, tuple(r.gens[:m - 1]), r.form, None, r.field_d)


def young_generators(composition):
    comp = tuple(int(x) for x in composition)
    out = []
    start = 1
    for a in comp:
        out.extend(range(start, start + a - 1))
        start += a
    return out


def young_elements(composition):
    comp = tuple(int(x) for x in composition)
    n = sum(comp)
    blocks = []
    start = 1
    for a in comp:
        blocks.append(list(range(start, start + a)))
        start += a
    out = [Perm.identity(n)]
    for b in blocks:
        new = []
        for p in out:
            for q in permutations(b):
                im = list(p.images)
                for x, y in zip(b, q):
                    im[x - 1] = y
                new.append(Perm(im))
        out = new
    return out


def commutant_basis(rep, composition):
    comp = tuple(int(x) for x in composition)
    if sum(comp) != rep.n:
        raise ValueError(f"composition {comp} is not of {rep.n}")
    pairs = [(rep.gen(i), rep.gen(i)) for i in young_generators(comp)]
    if not pairs:
        return [la.unvec(v, rep.N) for v in la.nullspace([[0] * (rep.N ** 2)])] if rep.N else []
    return la.intertwiners(pairs, rep.N, rep.N)


def hom_young(r_src, r_dst, composition):
    """Basis of Hom over the Young subgroup from r_src to r_dst."""
    pairs = [(r_src.gen(i), r_dst.gen(i)) for i in young_generators(composition)]
    if not pairs:
        return la.intertwiners([(la.identity(r_src.N), la.identity(r_dst.N))], r_src.N, r_dst.N) \
            if r_src.N == r_dst.N else _all_matrices(r_dst.N, r_src.N)
    return la.intertwiners(pairs, r_src.N, r_dst.N)


def _all_matrices(n2, n1):
    out = []
    for i in range(n2):
        for j in range(n1):
            M = la.zeros(n2, n1)
            M[i][j] = Q(1)
            out.append(M)
    return out


def character(rep, p):
    return la.trace(perm_matrix(rep, p))


def class_representative(n, cycle_type):
    cycles = []
    start = 1
    for k in cycle_type:
        cycles.append(list(range(start, start + k)))
        start += k
    return Perm.from_cycles(n, *[c for c in cycles if len(c) > 1])


def class_size(n, cycle_type):
    z = 1
    counts = {}
    for k in cycle_type:
        counts[k] = counts.get(k, 0) + 1
    for k, m in counts.items():
        z *= k ** m * factorial(m)
    return factorial(n) // z


def decompose(rep):
    """Multiplicities of irreducibles, via character inner products."""
    n = rep.n
    classes = list(partitions(n))
    chi = {mu: character(rep, class_representative(n, mu)) for mu in classes}
    out = []
    for lam in partitions(n):
        irr = irrep(lam)
        s = 0
        for mu in classes:
            s = s + class_size(n, mu) * chi[mu] * character(irr, class_representative(n, mu))
        m = s / factorial(n)
        if m:
            if m != int(m):
                raise ValueError("non-integral multiplicity")
            out.append((lam, int(m)))
    return tuple(out)


def young_endomorphism_dim_by_characters(rep, composition):
    """(1/|G|) sum_g chi(g)^2 over the Young subgroup G = dim End_G(rep)."""
    elems = young_elements(composition)
    s = 0
    for p in elems:
        c = character(rep, p)
        s = s + c * c
    return s / len(elems)
