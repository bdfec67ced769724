"""Representations of the infinitesimal braid algebra B_n = kS_n x| U T_n.

A representation is fixed by its restriction to S_n and by ``tau``, the image
of t_12.  Every other t_ij is obtained by conjugation.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations, permutations

from . import linalg as la
from . import symgroup as sg
from .scalars import Q, format_scalar, parse_scalar


class InfRep:
    """Representation of B_n on k^N given by ``base`` (an S_n rep) and ``tau``."""

    def __init__(self, base: sg.SymRep, tau):
        if len(tau) != base.N or any(len(r) != base.N for r in tau):
            raise ValueError(f"tau must be {base.N}x{base.N}")
        self.base = base
        self.tau = [list(r) for r in tau]
        self._t = {}

    @property
    def n(self):
        return self.base.n

    @property
    def N(self):
        return self.base.N

    def s(self, i):
        return self.base.gen(i)

    def __eq__(self, other):
        return (isinstance(other, InfRep) and self.n == other.n
                and all(la.mat_equal(a, b) for a, b in zip(self.base.gens, other.base.gens))
                and la.mat_equal(self.tau, other.tau))

    __hash__ = None

    def __repr__(self):
        return f"InfRep(n={self.n}, N={self.N})"

    def to_json(self):
        out = self.base.to_json()
        out["tau"] = [[format_scalar(x) for x in row] for row in self.tau]
        return out

    @classmethod
    def from_json(cls, obj, d=None):
        base = sg.SymRep.from_json(obj, d)
        tau = [[parse_scalar(x, d) for x in row] for row in obj["tau"]]
        return cls(base, tau)


def _moving_perm(n, i, j):
    """A permutation w with w(1) = i and w(2) = j."""
    rest = [x for x in range(1, n + 1) if x not in (i, j)]
    return sg.Perm([i, j] + rest)


def t_image(r: InfRep, i, j):
    if i == j:
        raise ValueError("t_ii is not defined")
    if not (1 <= i <= r.n and 1 <= j <= r.n):
        raise ValueError(f"index out of range for n = {r.n}")
    key = (min(i, j), max(i, j))
    if key not in r._t:
        w = _moving_perm(r.n, *key)
        r._t[key] = la.mat_chain(sg.perm_matrix(r.base, w), r.tau,
                                 sg.perm_matrix(r.base, w.inverse()))
    return r._t[key]


def all_t(r: InfRep):
    return {(i, j): t_image(r, i, j) for i, j in combinations(range(1, r.n + 1), 2)}


def y_element(r: InfRep, k):
    """Y_k = sum_{i<k} t_ik (Y_1 = 0)."""
    if not 1 <= k <= r.n:
        raise ValueError(f"k = {k} out of range 1..{r.n}")
    out = la.zeros(r.N)
    for i in range(1, k):
        out = la.mat_add(out, t_image(r, i, k))
    return out


def t_total(r: InfRep):
    out = la.zeros(r.N)
    for t in all_t(r).values():
        out = la.mat_add(out, t)
    return out


# -- validity ----------------------------------------------------------------

def act(r: InfRep, p: sg.Perm, X):
    return sg.act(r.base, p, X)


def c1(r: InfRep, x):
    n = r.n
    a = act(r, sg.Perm.transposition(n, 1, 3), x)
    b = act(r, sg.Perm.transposition(n, 2, 3), x)
    return la.commutator(x, la.mat_add(a, b))


def c2(r: InfRep, x):
    p = sg.Perm.from_cycles(r.n, [1, 3], [2, 4])
    return la.commutator(x, act(r, p, x))


@dataclass
class Report:
    """Named residual matrices; ``ok`` iff every one of them is zero."""

    checks: list = field(default_factory=list)

    def add(self, name, residual):
        self.checks.append((name, residual))

    @property
    def failures(self):
        return [(n, R) for n, R in self.checks if not la.is_zero_matrix(R)]

    @property
    def ok(self):
        return not self.failures

    def extend(self, other):
        self.checks.extend(other.checks)
        return self

    def summary(self):
        return [{"check": n, "zero": la.is_zero_matrix(R)} for n, R in self.checks]


def commutant_residuals(r: InfRep):
    rep = Report()
    for i in sg.young_generators((2, r.n - 2) if r.n >= 2 else (1,)):
        rep.add(f"[tau, s{i}] = 0", la.commutator(r.tau, r.s(i)))
    return rep


def relation_residuals(r: InfRep):
    """All defining relations of T_n on the derived images."""
    rep = Report()
    t = all_t(r)
    idx = range(1, r.n + 1)

    def T(i, j):
        return t[(min(i, j), max(i, j))]

    for (i, j), (k, l) in combinations(sorted(t), 2):
        if len({i, j, k, l}) == 4:
            rep.add(f"[t{i}{j}, t{k}{l}] = 0", la.commutator(t[(i, j)], t[(k, l)]))
    for i, j, k in permutations(idx, 3):
        if i < j:
            rep.add(f"[t{i}{j}, t{i}{k} + t{k}{j}] = 0",
                    la.commutator(T(i, j), la.mat_add(T(i, k), T(k, j))))
    return rep


def validate(r: InfRep):
    rep = Report()
    rep.extend(sg_report(r.base))
    rep.extend(commutant_residuals(r))
    if r.n >= 3:
        rep.add("C1(tau) = 0", c1(r, r.tau))
    if r.n >= 4:
        rep.add("C2(tau) = 0", c2(r, r.tau))
    if rep.ok:
        rep.extend(relation_residuals(r))
    return rep


def sg_report(base):
    rep = Report()
    for name, R in sg.relation_residuals(base):
        rep.add(name, R)
    return rep


def is_valid(r: InfRep):
    return validate(r).ok


# -- constructions -----------------------------------------------------------

def tensor(r1: InfRep, r2: InfRep):
    if r1.n != r2.n:
        raise ValueError("tensor product needs equal n")
    I1, I2 = la.identity(r1.N), la.identity(r2.N)
    tau = la.mat_add(la.kron(r1.tau, I2), la.kron(I1, r2.tau))
    return InfRep(sg.tensor(r1.base, r2.base), tau)


def dual(r: InfRep):
    return InfRep(sg.dual(r.base), la.mat_neg(la.transpose(r.tau)))


def direct_sum(r1: InfRep, r2: InfRep):
    if r1.n != r2.n:
        raise ValueError("direct sum needs equal n")
    return InfRep(sg.direct_sum(r1.base, r2.base), la.block_diag(r1.tau, r2.tau))


def twist(r: InfRep, alpha):
    return InfRep(r.base, la.mat_scale(alpha, r.tau))


def restrict(r: InfRep, m):
    """Restriction to B_m on the first m strands."""
    if m < 2:
        raise ValueError("restriction needs m >= 2")
    return InfRep(sg.restrict(r.base, m), r.tau)


def conjugate(r: InfRep, P):
    """The isomorphic representation x -> P x P^-1."""
    Pi = la.inverse(P)
    gens = tuple(la.mat_chain(P, g, Pi) for g in r.base.gens)
    form = None
    if r.base.form is not None:
        form = la.mat_chain(la.transpose(Pi), r.base.form, Pi)
    base = sg.SymRep(r.n, gens, form, r.base.label, r.base.field_d)
    return InfRep(base, la.mat_chain(P, r.tau, Pi))


# -- predicates --------------------------------------------------------------

def is_essentially_pure(r: InfRep):
    """Is s_1 a polynomial in tau?  Returns (flag, coefficients low degree first)."""
    if r.n < 2:
        return True, [Q(1)]
    _, powers = la.minimal_power_relation(r.tau)
    cols = [la.vec(P) for P in powers]
    A = la.transpose(cols)
    try:
        c = la.solve(A, la.vec(r.s(1)))
    except la.InconsistentSystem:
        return False, None
    while len(c) > 1 and not c[-1]:
        c.pop()
    return True, c


def squarefree_part(p):
    g = la.poly_gcd(p, la.poly_deriv(p))
    q, rem = la.poly_divmod(p, g)
    assert not any(rem)
    return la.poly_trim(q)


def is_diagonalizable(M):
    """Over the algebraic closure: the squarefree part of charpoly kills M."""
    return la.is_zero_matrix(la.poly_eval_matrix(squarefree_part(la.charpoly(M)), M))


def spectrum_is_simplex(points):
    """Affine independence over Q of rational coordinate vectors."""
    pts = [list(map(Q, p)) for p in points]
    if len(pts) <= 1:
        return True
    base = pts[0]
    diffs = [[a - b for a, b in zip(p, base)] for p in pts[1:]]
    return la.rank(diffs) == len(diffs)


@dataclass
class SimplicialVerdict:
    status: str           # simplex | affinely_dependent | not_diagonalizable | not_split
    eigenvalues: list

    @property
    def value(self):
        return self.status == "simplex"


def eigen_coordinates(z, d=None):
    if d is None:
        return [Q(z)]
    from .scalars import QuadElem
    if isinstance(z, QuadElem):
        return [z.x, z.y]
    return [Q(z), Q(0)]


def is_simplicial(r: InfRep, d=None, coordinates=None):
    """Spectrum test for tau over Q or Q(sqrt d) with coordinates on (1, sqrt d).

    ``coordinates`` may instead supply the eigenvalues directly as rational
    coordinate vectors over a declared Q-basis.
    """
    if not is_diagonalizable(r.tau):
        return SimplicialVerdict("not_diagonalizable", [])
    if coordinates is not None:
        pts = [list(map(Q, c)) for c in coordinates]
    else:
        roots, splits = la.roots_in_field(la.charpoly(r.tau), d)
        if not splits:
            return SimplicialVerdict("not_split", list(roots))
        pts = [eigen_coordinates(z, d) for z in roots]
    status = "simplex" if spectrum_is_simplex(pts) else "affinely_dependent"
    return SimplicialVerdict(status, pts)


@dataclass
class AgregatingVerdict:
    status: object        # True or "unknown"
    witness: dict | None
    trials: int
    seed: int


def is_regular(M):
    return la.is_squarefree(la.charpoly(M))


def is_agregating(r, seed=0, trials=20, bound=10):
    """Randomized one-sided search for a regular element in span{t_ij}.

    ``r`` may be an InfRep or a dict {(i, j): matrix}.
    """
    mats = all_t(r) if isinstance(r, InfRep) else dict(r)
    N = len(next(iter(mats.values())))
    if N == 1:
        return AgregatingVerdict(True, {k: Q(1) if k == min(mats) else Q(0) for k in mats}, 0, seed)
    rng = random.Random(seed)
    keys = sorted(mats)
    for trial in range(1, trials + 1):
        coeffs = {k: Q(rng.randint(-bound, bound)) for k in keys}
        X = la.zeros(N)
        for k in keys:
            if coeffs[k]:
                X = la.mat_add(X, la.mat_scale(coeffs[k], mats[k]))
        if is_regular(X):
            return AgregatingVerdict(True, coeffs, trial, seed)
    return AgregatingVerdict("unknown", None, trials, seed)


def adjoint(M, B, Binv=None):
    """Transpose of M with respect to the bilinear form B: B(Mu, v) = B(u, M^+ v)."""
    Binv = la.inverse(B) if Binv is None else Binv
    return la.mat_chain(Binv, la.transpose(M), B)


def form_type(r: InfRep, B):
    """orthogonal | symplectic | unitary | none, by exact adjoints."""
    if not la.det(B):
        raise ValueError("degenerate bilinear form")
    Bt = la.transpose(B)
    sym = la.mat_equal(Bt, B)
    skew = la.mat_equal(Bt, la.mat_neg(B))
    Binv = la.inverse(B)
    isometric = all(la.mat_equal(la.mat_chain(la.transpose(g), B, g), B) for g in r.base.gens)
    if not isometric:
        return "none"
    ta = adjoint(r.tau, B, Binv)
    anti = la.mat_equal(ta, la.mat_neg(r.tau))
    selfadj = la.mat_equal(ta, r.tau)
    # tau = 0 is both; the orthogonal/symplectic reading is listed first
    if anti and sym:
        return "orthogonal"
    if anti and skew:
        return "symplectic"
    if selfadj and sym:
        return "unitary"
    return "none"


def form_type_all(r: InfRep, B):
    """Every applicable type (tau = 0 qualifies for several)."""
    out = []
    Bt = la.transpose(B)
    Binv = la.inverse(B)
    if not all(la.mat_equal(la.mat_chain(la.transpose(g), B, g), B) for g in r.base.gens):
        return out
    ta = adjoint(r.tau, B, Binv)
    if la.mat_equal(ta, la.mat_neg(r.tau)):
        if la.mat_equal(Bt, B):
            out.append("orthogonal")
        if la.mat_equal(Bt, la.mat_neg(B)):
            out.append("symplectic")
    if la.mat_equal(ta, r.tau) and la.mat_equal(Bt, B):
        out.append("unitary")
    return out


# -- Lie closure and quotient flags -----------------------------------------

@dataclass
class LieClosure:
    basis: list
    center_basis: list
    total_in_center: bool

    @property
    def dim(self):
        return len(self.basis)


def lie_closure(r: InfRep):
    N = r.N
    S = la.SpanBuilder(N)
    frontier = [t for t in all_t(r).values() if S.add(t)]
    while frontier:
        nxt = []
        current = list(S.basis)
        for a in frontier:
            for b in current:
                c = la.commutator(a, b)
                if S.add(c):
                    nxt.append(c)
        frontier = nxt
    basis = S.basis
    center = center_of(basis, N)
    T = t_total(r)
    total_in_center = all(la.is_zero_matrix(la.commutator(T, b)) for b in basis)
    return LieClosure(basis, center, total_in_center)


def center_of(basis, N):
    """Elements sum c_k basis[k] commuting with every basis element."""
    if not basis:
        return []
    m = len(basis)
    rows = []
    brackets = [[la.commutator(a, b) for b in basis] for a in basis]
    for j in range(m):
        for p in range(N):
            for q in range(N):
                row = {k: brackets[k][j][p][q] for k in range(m) if brackets[k][j][p][q]}
                if row:
                    rows.append(row)
    out = []
    for v in la.nullspace_from_rows(rows, m):
        M = la.zeros(N)
        for k, c in enumerate(v):
            if c:
                M = la.mat_add(M, la.mat_scale(c, basis[k]))
        out.append(M)
    return out


def quotient_flags(r: InfRep):
    n = r.n
    T = t_total(r)
    flags = {
        "center_kills": la.is_zero_matrix(T),
        "hurwitz": la.is_zero_matrix(y_element(r, n)),
        "z_times_sn": all(la.is_zero_matrix(la.commutator(r.tau, g)) for g in r.base.gens),
        "enhanced_sym": (n < 3 or la.is_zero_matrix(la.commutator(t_image(r, 1, 2),
                                                                 t_image(r, 2, 3)))),
    }
    return flags


def trace_tau(r: InfRep):
    return la.trace(r.tau)


def linear_independence_dim(r: InfRep):
    return la.rank([la.vec(t) for t in all_t(r).values()])


def is_surjective(r: InfRep):
    """Does the algebra generated by the s_i and tau fill all of M_N?"""
    gens = list(r.base.gens) + [r.tau]
    return len(la.algebra_closure(gens, r.N)) == r.N * r.N
