"""Classical sources of infinitesimal braid representations.

Hecke points, the 3-dimensional cubic Hecke model, Casimir (Yang-Baxter)
actions on tensor powers, and the infinitesimal Long induction built from
the infinitesimal Artin action.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations, permutations

from . import extvariety as ev
from . import infrep as ir
from . import linalg as la
from . import symgroup as sg
from .scalars import Q


# -- Hecke ---------------------------------------------------------------------------

def hecke_point(partition, alpha, beta):
    lam = sg.parse_partition(partition)
    M = sg.irrep(lam)
    p = ev.verify_point(M, ev.hecke_tau(M, Q(alpha), Q(beta)), name="hecke",
                        params={"partition": lam, "alpha": Q(alpha), "beta": Q(beta)})
    return p


def hecke_is_unitary(p):
    return ir.form_type(p.rep, p.base.form) == "unitary"


def burau(n, alpha=0, beta=1):
    return hecke_point((n - 1, 1), alpha, beta)


# -- cubic Hecke H_3(a, b, c) -------------------------------------------------------------

def cubic_discriminant(a, b, c):
    a, b, c = Q(a), Q(b), Q(c)
    return (a * b * c * (c - b) * (a - c) * (b - a) * (c * c - c * b + b * b)
            * (b * b - b * a + a * a) * (a * a + b * c) * (b * b + a * c) * (c * c + a * b))


@dataclass
class CubicHecke:
    a: object
    b: object
    c: object
    s1: list
    s2: list
    discriminant: object

    @property
    def semisimple(self):
        return bool(self.discriminant)


def cubic_hecke_matrices(a, b, c):
    a, b, c = Q(a), Q(b), Q(c)
    if a == b or b == c or a == c:
        raise ValueError("a, b, c must be distinct")
    if not (a and b and c):
        raise ValueError("a, b, c must be nonzero")
    s1 = [[a, Q(0), Q(0)], [Q(0), b, Q(0)], [Q(0), Q(0), c]]
    da, db, dc = (a - b) * (a - c), (b - a) * (b - c), (c - a) * (c - b)
    s2 = [
        [(b + c) * b * c / da, c * (a * c + b * b) / da, b * (a * b + c * c) / da],
        [c * (b * c + a * a) / db, (a + c) * a * c / db, a * (a * b + c * c) / db],
        [b * (b * c + a * a) / dc, a * (a * c + b * b) / dc, (a + b) * a * b / dc],
    ]
    return CubicHecke(a, b, c, s1, s2, cubic_discriminant(a, b, c))


def cubic_checks(H: CubicHecke):
    """Named residual matrices; all must vanish."""
    I = la.identity(3)

    def cubic(X):
        return la.mat_chain(la.mat_sub(X, la.mat_scale(H.a, I)),
                            la.mat_sub(X, la.mat_scale(H.b, I)),
                            la.mat_sub(X, la.mat_scale(H.c, I)))

    s1, s2 = H.s1, H.s2
    out = ir.Report()
    out.add("braid", la.mat_sub(la.mat_chain(s1, s2, s1), la.mat_chain(s2, s1, s2)))
    out.add("cubic s1", cubic(s1))
    out.add("cubic s2", cubic(s2))
    out.add("trace s2", [[la.trace(s2) - (H.a + H.b + H.c)]])
    out.add("det s2", [[la.det(s2) - H.a * H.b * H.c]])
    full = la.mat_pow(la.mat_mul(s1, s2), 3)
    out.add("(s1 s2)^3 = (abc)^2", la.mat_sub(full, la.scalar_matrix((H.a * H.b * H.c) ** 2, 3)))
    return out


def random_cubic_triples(k, seed=0, bound=20):
    rng = random.Random(seed)
    out = []
    while len(out) < k:
        t = tuple(Q(rng.randint(-bound, bound), rng.randint(1, bound)) for _ in range(3))
        if len(set(t)) == 3 and all(t) and cubic_discriminant(*t) and t not in out:
            out.append(t)
    return out


# -- Lie algebras and Casimir actions -------------------------------------------------

@dataclass
class LieAlgSpec:
    """A Lie algebra given by matrices of a faithful module, plus an invariant form."""

    name: str
    basis: list
    form: list = None          # Gram matrix; Killing by default
    dual: list = field(default=None)

    def __post_init__(self):
        self.dim = len(self.basis)
        self.N = len(self.basis[0])
        self._coords = la.transpose([la.vec(x) for x in self.basis])
        if self.form is None:
            self.form = self.killing()
        if not la.det(self.form):
            raise ValueError("the invariant form is degenerate")
        G = la.inverse(self.form)
        self.dual = [self.combination(row) for row in G]

    def coordinates(self, X):
        return la.solve(self._coords, la.vec(X))

    def combination(self, coeffs, mats=None):
        mats = self.basis if mats is None else mats
        out = la.zeros(len(mats[0]))
        for c, M in zip(coeffs, mats):
            if c:
                out = la.mat_add(out, la.mat_scale(c, M))
        return out

    def structure(self):
        """c[i][j] = coordinates of [x_i, x_j]."""
        return [[self.coordinates(la.commutator(x, y)) for y in self.basis] for x in self.basis]

    def ad(self, i):
        c = self.structure()
        return la.transpose([c[i][j] for j in range(self.dim)])

    def killing(self):
        ads = [self.ad(i) for i in range(self.dim)]
        return [[la.trace(la.mat_mul(a, b)) for b in ads] for a in ads]

    def invariance_residual(self):
        """<[x,y],z> + <y,[x,z]> on basis triples, as a list of nonzero values."""
        c = self.structure()
        F = self.form
        bad = []
        for i in range(self.dim):
            for j in range(self.dim):
                for k in range(self.dim):
                    v = sum((c[i][j][p] * F[p][k] + F[j][p] * c[i][k][p]
                             for p in range(self.dim)), la.ZERO)
                    if v:
                        bad.append(((i, j, k), v))
        return bad

    def dual_pairing(self):
        """form(x_i, dual_k); the identity matrix when the dual basis is right."""
        coords = [self.coordinates(d) for d in self.dual]
        return [[sum((self.form[i][p] * coords[k][p] for p in range(self.dim)), la.ZERO)
                 for k in range(self.dim)] for i in range(self.dim)]


def sl2():
    e = [[Q(0), Q(1)], [Q(0), Q(0)]]
    f = [[Q(0), Q(0)], [Q(1), Q(0)]]
    h = [[Q(1), Q(0)], [Q(0), Q(-1)]]
    return LieAlgSpec("sl2", [e, f, h])


def so(m):
    if m not in (3, 4, 5):
        raise ValueError("so_m is provided for m in {3, 4, 5}")
    basis = []
    for i, j in combinations(range(m), 2):
        L = la.zeros(m)
        L[i][j], L[j][i] = Q(1), Q(-1)
        basis.append(L)
    return LieAlgSpec(f"so{m}", basis)


def sl2_module(dim):
    """Irreducible sl2-module of dimension dim: f v_j = v_{j+1}, e v_j = j(m-j+1) v_{j-1}."""
    m = dim - 1
    e, f, h = la.zeros(dim), la.zeros(dim), la.zeros(dim)
    for j in range(dim):
        h[j][j] = Q(m - 2 * j)
        if j + 1 < dim:
            f[j + 1][j] = Q(1)
        if j:
            e[j - 1][j] = Q(j * (m - j + 1))
    return [e, f, h]


def casimir_two_tensor(g: LieAlgSpec, V1, V2):
    """c = Delta(C) - C(x)1 - 1(x)C on V1 (x) V2; V_k lists images of g.basis."""
    out = la.zeros(len(V1[0]) * len(V2[0]))
    for k in range(g.dim):
        dk = g.coordinates(g.dual[k])
        a1 = V1[k]
        b1 = g.combination(dk, V2)
        a2 = g.combination(dk, V1)
        b2 = V2[k]
        out = la.mat_add(out, la.mat_add(la.kron(a1, b1), la.kron(a2, b2)))
    return out


def casimir_operator(g: LieAlgSpec, V):
    out = la.zeros(len(V[0]))
    for k in range(g.dim):
        out = la.mat_add(out, la.mat_mul(V[k], g.combination(g.coordinates(g.dual[k]), V)))
    return out


def _slot_embedding(mats, slots, dims):
    """Operator acting as a Kronecker factor list: mats[k] in slot slots[k], identity elsewhere."""
    out = [[Q(1)]]
    place = dict(zip(slots, mats))
    for p, d in enumerate(dims):
        out = la.kron(out, place.get(p, la.identity(d)))
    return out


def tau_ij(g, modules, i, j):
    """c placed in tensor slots (i, j), 1-based."""
    dims = [len(V[0]) for V in modules]
    out = la.zeros(_prod(dims))
    for k in range(g.dim):
        dk = g.coordinates(g.dual[k])
        a = modules[i - 1][k]
        b = g.combination(dk, modules[j - 1])
        out = la.mat_add(out, _slot_embedding([a, b], [i - 1, j - 1], dims))
        a = g.combination(dk, modules[i - 1])
        b = modules[j - 1][k]
        out = la.mat_add(out, _slot_embedding([a, b], [i - 1, j - 1], dims))
    return out


def _prod(xs):
    out = 1
    for x in xs:
        out *= x
    return out


def factor_swap(d, n, i):
    """Permutation matrix exchanging tensor factors i and i+1 of (k^d)^{(x) n}."""
    N = d ** n
    P = la.zeros(N)
    for idx in range(N):
        digits = []
        x = idx
        for _ in range(n):
            x, r = divmod(x, d)
            digits.append(r)
        digits.reverse()
        digits[i - 1], digits[i] = digits[i], digits[i - 1]
        k = 0
        for dgt in digits:
            k = k * d + dgt
        P[k][idx] = Q(1)
    return P


def diagonal_action(g, modules, k):
    dims = [len(V[0]) for V in modules]
    out = la.zeros(_prod(dims))
    for p, V in enumerate(modules):
        out = la.mat_add(out, _slot_embedding([V[k]], [p], dims))
    return out


def t_relation_report(t, n):
    """Relations of T_n on a dict {(i, j): matrix} with i < j."""
    rep = ir.Report()

    def T(i, j):
        return t[(min(i, j), max(i, j))]
    for (i, j), (k, l) in combinations(sorted(t), 2):
        if len({i, j, k, l}) == 4:
            rep.add(f"[t{i}{j}, t{k}{l}] = 0", la.commutator(t[(i, j)], t[(k, l)]))
    for i, j, k in permutations(range(1, n + 1), 3):
        if i < j:
            rep.add(f"[t{i}{j}, t{i}{k} + t{k}{j}] = 0",
                    la.commutator(T(i, j), la.mat_add(T(i, k), T(k, j))))
    return rep


@dataclass
class CasimirRep:
    g: LieAlgSpec
    modules: list
    n: int
    t: dict
    rep: ir.InfRep = None       # set when all factors coincide
    form: list = None           # product of the module forms, when supplied

    def relations(self):
        return t_relation_report(self.t, self.n)

    def commutes_with_diagonal(self):
        rep = ir.Report()
        for k in range(self.g.dim):
            D = diagonal_action(self.g, self.modules, k)
            for key, T in self.t.items():
                rep.add(f"[t{key[0]}{key[1]}, Delta(x{k})] = 0", la.commutator(T, D))
        return rep

    def self_adjoint(self):
        if self.form is None:
            raise ValueError("no form supplied")
        Binv = la.inverse(self.form)
        return all(la.mat_equal(ir.adjoint(T, self.form, Binv), T) for T in self.t.values())


def casimir_rep(g: LieAlgSpec, V, n, module_form=None):
    """T_n acting on V^{(x) n} (or V_1 (x) ... (x) V_n when V is a list of modules).

    ``module_form``: invariant bilinear form on V, used to build the product form.
    """
    modules = V if isinstance(V[0], list) and isinstance(V[0][0], list) and \
        isinstance(V[0][0][0], list) else [V] * n
    if len(modules) != n:
        raise ValueError("need one module per strand")
    t = {(i, j): tau_ij(g, modules, i, j) for i, j in combinations(range(1, n + 1), 2)}
    same = all(m is modules[0] or all(la.mat_equal(a, b) for a, b in zip(m, modules[0]))
               for m in modules)
    rep = None
    form = None
    if module_form is not None:
        form = [[Q(1)]]
        for _ in range(n):
            form = la.kron(form, module_form)
    if same and n >= 2:
        d = len(modules[0][0])
        gens = tuple(factor_swap(d, n, i) for i in range(1, n))
        base = sg.SymRep(n, gens, form, None)
        rep = ir.InfRep(base, t[(1, 2)])
    out = CasimirRep(g, modules, n, t, rep, form)
    if not out.relations().ok:
        raise ValueError("Casimir images violate the T_n relations")
    return out


def highest_weight_sub(dims):
    """T_n on the highest-weight vectors of V_{d_1} (x) ... (x) V_{d_n} for sl2."""
    g = sl2()
    modules = [sl2_module(d) for d in dims]
    n = len(dims)
    E = diagonal_action(g, modules, 0)
    K = la.nullspace(E)
    if not K:
        raise ValueError("no highest-weight vectors")
    Kc = la.transpose(K)          # columns span ker e
    t = {}
    for i, j in combinations(range(1, n + 1), 2):
        T = la.mat_mul(tau_ij(g, modules, i, j), Kc)
        t[(i, j)] = la.solve_matrix_equation(Kc, T)
    if n == 1:
        t = {}
    return t, len(K)


# -- infinitesimal Artin action and Long induction ---------------------------------------

@dataclass
class LongRep:
    """A representation of B_n semidirect U L_n on V: S_n layer, t_12 and g_1..g_n."""

    n: int
    base: sg.SymRep
    tau: list
    g: list

    @property
    def N(self):
        return self.base.N

    @property
    def core(self):
        return ir.InfRep(self.base, self.tau)

    def check(self):
        r = self.core
        rep = ir.validate(r) if r.n >= 2 else ir.Report()
        n = self.n
        for i in range(1, n):
            s = r.s(i)
            for k in range(1, n + 1):
                sk = i + 1 if k == i else i if k == i + 1 else k
                rep.add(f"s{i} g{k} s{i}^-1 = g{sk}",
                        la.mat_sub(la.mat_chain(s, self.g[k - 1], la.inverse(s)), self.g[sk - 1]))
        for i, j in combinations(range(1, n + 1), 2):
            t = ir.t_image(r, i, j)
            for k in range(1, n + 1):
                gk = self.g[k - 1]
                if k == i:
                    want = la.commutator(gk, self.g[j - 1])
                elif k == j:
                    want = la.commutator(gk, self.g[i - 1])
                else:
                    want = la.zeros(self.N)
                rep.add(f"[t{i}{j}, g{k}] derivation", la.mat_sub(la.commutator(t, gk), want))
        return rep

    def twist(self, alpha):
        return LongRep(self.n, self.base, self.tau,
                       [la.mat_add(x, la.scalar_matrix(Q(alpha), self.N)) for x in self.g])


def artin_restriction(r: ir.InfRep):
    """g_k = t_{k, n+1} with B_n on the first n strands."""
    n = r.n - 1
    if n < 2:
        raise ValueError("need at least 3 strands")
    L = LongRep(n, sg.restrict(r.base, n), r.tau, [ir.t_image(r, k, n + 1) for k in range(1, n + 1)])
    rep = L.check()
    if not rep.ok:
        raise ValueError(f"Artin restriction fails: {rep.failures[0][0]}")
    return L


def _blocks_to_matrix(blocks, n, N):
    M = la.zeros(n * N)
    for (a, b), X in blocks.items():
        for p in range(N):
            for q in range(N):
                if X[p][q]:
                    M[a * N + p][b * N + q] += X[p][q]
    return M


def long_plus(L: LongRep, alpha=0):
    """The n dim V representation of B_n, after the twist g_i -> g_i + alpha."""
    Lt = L.twist(alpha) if alpha else L
    n, N = Lt.n, Lt.N
    gens = []
    for i in range(1, n):
        s = Lt.base.gen(i)
        blocks = {}
        for j in range(n):
            sj = i if j == i - 1 else i - 1 if j == i else j
            blocks[(sj, j)] = s
        gens.append(_blocks_to_matrix(blocks, n, N))
    d, m = long_split(Lt, 1, 2)
    base = sg.SymRep(n, tuple(gens), None, None, L.base.field_d)
    return ir.InfRep(base, la.mat_add(d, m)), Lt


def long_split(L: LongRep, i, j):
    """t_ij^+ = d_ij + m_ij."""
    n, N = L.n, L.N
    t = ir.t_image(L.core, i, j)
    d = _blocks_to_matrix({(k, k): t for k in range(n)}, n, N)
    gi, gj = L.g[i - 1], L.g[j - 1]
    m = _blocks_to_matrix({(i - 1, i - 1): gj, (i - 1, j - 1): la.mat_neg(gj),
                           (j - 1, j - 1): gi, (j - 1, i - 1): la.mat_neg(gi)}, n, N)
    return d, m


@dataclass
class LongForm:
    gram: list
    nondegenerate: bool
    adjointness: ir.Report
    classification: str
    input_classification: str
    g_adjointness: str


def long_gram(L: LongRep, inner):
    """(v, v') = sum_i (g_i v_i | v'_i): block diagonal with blocks g_i^T B."""
    return _blocks_to_matrix({(k, k): la.mat_mul(la.transpose(L.g[k]), inner)
                              for k in range(L.n)}, L.n, L.N)


def _defect(L, inner, i, j):
    """Gram matrix of ([g_i,g_j] v_j | v'_j) + ([g_j,g_i] v_i | v'_i)."""
    gi, gj = L.g[i - 1], L.g[j - 1]
    cij = la.commutator(gi, gj)
    return _blocks_to_matrix({(j - 1, j - 1): la.mat_mul(la.transpose(cij), inner),
                              (i - 1, i - 1): la.mat_mul(la.transpose(la.mat_neg(cij)), inner)},
                             L.n, L.N)


def _sign_of_adjoint(X, B):
    A = ir.adjoint(X, B)
    if la.mat_equal(A, X):
        return 1
    if la.mat_equal(A, la.mat_neg(X)):
        return -1
    return 0


def long_form(L: LongRep, inner, alpha=0):
    if not la.det(inner):
        raise ValueError("degenerate inner form")
    if not all(la.mat_equal(la.mat_chain(la.transpose(s), inner, s), inner) for s in L.base.gens):
        raise ValueError("the S_n action is not isometric for the inner form")
    rho, Lt = long_plus(L, alpha)
    G = long_gram(Lt, inner)
    adjointness = ir.Report()
    for s in rho.base.gens:
        adjointness.add("s^+ isometric", la.mat_sub(la.mat_chain(la.transpose(s), G, s), G))
    for i, j in combinations(range(1, Lt.n + 1), 2):
        d, m = long_split(Lt, i, j)
        Dl = _defect(Lt, inner, i, j)
        et = _sign_of_adjoint(ir.t_image(Lt.core, i, j), inner)
        eg = _sign_of_adjoint(Lt.g[i - 1], inner) if _sign_of_adjoint(Lt.g[i - 1], inner) == \
            _sign_of_adjoint(Lt.g[j - 1], inner) else 0
        # (Xv, v') - e (v, Xv') as a Gram matrix is X^T G - e G X
        if et:
            adjointness.add(f"d{i}{j} adjoint defect",
                      la.mat_sub(la.mat_sub(la.mat_mul(la.transpose(d), G),
                                            la.mat_scale(et, la.mat_mul(G, d))), Dl))
        if eg:
            adjointness.add(f"m{i}{j} adjoint defect",
                      la.mat_add(la.mat_sub(la.mat_mul(la.transpose(m), G),
                                            la.mat_scale(eg, la.mat_mul(G, m))), Dl))
    nondeg = bool(la.det(G))
    cls = ir.form_type(rho, G) if nondeg else "degenerate"
    in_cls = ir.form_type(Lt.core, inner)
    signs = {_sign_of_adjoint(x, inner) for x in Lt.g}
    g_adj = "selfadjoint" if signs == {1} else "antiselfadjoint" if signs == {-1} else "mixed"
    return LongForm(G, nondeg, adjointness, cls, in_cls, g_adj)


def predicted_long_type(input_type, g_adjointness):
    """Form type of rho^+ predicted from the restrictions to B_n and L_n."""
    table = {("symplectic", "antiselfadjoint"): "orthogonal",
             ("orthogonal", "antiselfadjoint"): "symplectic",
             ("unitary", "selfadjoint"): "unitary"}
    return table.get((input_type, g_adjointness))


def degenerate_alphas(L: LongRep):
    """The alpha with -alpha an eigenvalue (in Q) of some g_i."""
    out = set()
    for x in L.g:
        roots, _ = la.roots_in_field(la.charpoly(x), None)
        out.update(-z for z in roots)
    return sorted(out)


def hyperbolic_double(r: ir.InfRep, skew=False):
    """r + r^* with the hyperbolic form [[0, I], [+-I, 0]]: orthogonal (or symplectic)."""
    s = ir.direct_sum(r, ir.dual(r))
    N = r.N
    J = la.zeros(2 * N)
    for k in range(N):
        J[k][N + k] = Q(1)
        J[N + k][k] = Q(-1) if skew else Q(1)
    return s, J


def burau_long(n_plus_1=4, alpha=0):
    r = burau(n_plus_1).rep
    return artin_restriction(r), r


__all__ = ["hecke_point", "cubic_hecke_matrices", "cubic_checks", "LieAlgSpec", "sl2", "so",
           "casimir_rep", "highest_weight_sub", "LongRep", "artin_restriction", "long_plus",
           "long_form"]
