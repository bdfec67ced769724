"""Varieties of braided extensions V(M): membership, catalogued points, extensions.

A point of V(M) is a tau in End_{S_{2,n-2}}(M) with C1(tau) = C2(tau) = 0.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from . import infrep as ir
from . import linalg as la
from . import symgroup as sg
from .scalars import Q, QuadElem, sqrt_of


class NotInCommutant(ValueError):
    """tau does not commute with the Young subgroup S_{2,n-2}."""


class NotInVariety(ValueError):
    """tau is in the commutant but a C-residual is nonzero."""


@dataclass
class VarietyPoint:
    rep: ir.InfRep
    blocks: tuple = ()          # sizes of the declared decomposition M = M_1 + M_2 + ...
    name: str = ""
    params: dict = None

    @property
    def tau(self):
        return self.rep.tau

    @property
    def base(self):
        return self.rep.base


def verify_point(M: sg.SymRep, tau, blocks=(), name="", params=None):
    r = ir.InfRep(M, tau)
    comm = ir.commutant_residuals(r)
    if not comm.ok:
        raise NotInCommutant(comm.failures[0][0])
    rep = ir.Report()
    if r.n >= 3:
        rep.add("C1", ir.c1(r, tau))
    if r.n >= 4:
        rep.add("C2", ir.c2(r, tau))
    if not rep.ok:
        raise NotInVariety(", ".join(n for n, _ in rep.failures))
    return VarietyPoint(r, tuple(blocks), name, params or {})


def residual_report(M, tau):
    """Like verify_point but never raises: returns (kind, failures)."""
    try:
        verify_point(M, tau)
    except NotInCommutant as e:
        return "not_in_commutant", str(e)
    except NotInVariety as e:
        return "c_residual", str(e)
    return "valid", ""


def is_surjective(p):
    r = p.rep if isinstance(p, VarietyPoint) else p
    return ir.is_surjective(r)


def commutant_coordinates(M, tau, composition=None):
    comp = composition or ((2, M.n - 2) if M.n >= 2 else (1,))
    basis = sg.commutant_basis(M, comp)
    K = la.transpose([la.vec(B) for B in basis])
    x = la.solve(K, la.vec(tau))
    return x, basis


# -- C-residuals as quadratic polynomials (polarization) -------------------------

def quadratic_residual_polys(M, basis, which="C1"):
    """Entries of C(sum p_k B_k) as quadratic forms in the p_k.

    C(x) = [x, L(x)] with L linear, so the coefficient of p_i p_j is read off
    [B_i, L B_j] + [B_j, L B_i] (i < j) and [B_i, L B_i] (i = j).
    """
    r0 = ir.InfRep(M, basis[0])
    f = ir.c1 if which == "C1" else ir.c2
    m = len(basis)
    monos = [(i, j) for i in range(m) for j in range(i, m)]
    N = M.N
    polys = [[{} for _ in range(N)] for _ in range(N)]
    single = {}
    for i in range(m):
        single[i] = f(r0, basis[i])
    for i, j in monos:
        if i == j:
            val = single[i]
        else:
            val = la.mat_sub(la.mat_sub(f(r0, la.mat_add(basis[i], basis[j])), single[i]), single[j])
        for p in range(N):
            for q in range(N):
                if val[p][q]:
                    polys[p][q][(i, j)] = val[p][q]
    out = [polys[p][q] for p in range(N) for q in range(N) if polys[p][q]]
    return out, monos


def same_polynomial_span(polys_a, polys_b, monos):
    def vecs(ps):
        return [[p.get(m, la.ZERO) for m in monos] for p in ps]
    A, B = vecs(polys_a), vecs(polys_b)
    ra, rb = la.rank(A) if A else 0, la.rank(B) if B else 0
    rab = la.rank(A + B) if A + B else 0
    return ra == rb == rab


def poly_product(lin1, lin2):
    """Product of two linear forms {var: c} as a quadratic {(i, j): c} with i <= j."""
    out = {}
    for i, a in lin1.items():
        for j, b in lin2.items():
            key = (min(i, j), max(i, j))
            out[key] = out.get(key, la.ZERO) + a * b
    return {k: v for k, v in out.items() if v}


# -- the Q(sqrt 3) orthogonal fixture [2,1] + [3] ------------------------------------

SQRT3 = 3


def orthogonal_s3_plus_trivial():
    """Young orthogonal model of [3] + [2,1] for S_3 over Q(sqrt 3)."""
    r3 = sqrt_of(SQRT3)
    one, zero = QuadElem(1, 0, SQRT3), QuadElem(0, 0, SQRT3)
    half = Q(1, 2)
    s1 = [[one, zero, zero], [zero, one, zero], [zero, zero, -one]]
    s2 = [[one, zero, zero], [zero, -one * half, r3 * half], [zero, r3 * half, one * half]]
    I = [[one if i == j else zero for j in range(3)] for i in range(3)]
    return sg.SymRep(3, (s1, s2), I, (((3,), 1), ((2, 1), 1)), SQRT3)


def fixture_tau(a, b, c, d, l):
    z = QuadElem(0, 0, SQRT3)
    return [[z + a, z + b, z], [z + c, z + d, z], [z, z, z + l]]


def fixture_basis():
    """a, b, c, d, l as coordinates on the 5-dimensional commutant."""
    out = []
    for k in range(5):
        vals = [Q(0)] * 5
        vals[k] = Q(1)
        out.append(fixture_tau(*vals))
    return out


def fixture_validity_ideal():
    """Returns (C1 polys, expected polys, monomials, equal?)."""
    M = orthogonal_s3_plus_trivial()
    basis = fixture_basis()
    polys, monos = quadratic_residual_polys(M, basis, "C1")
    a, b, c, d, l = range(5)
    h = {a: Q(2), d: Q(-1), l: Q(-1)}
    expected = [poly_product(h, {b: Q(1)}), poly_product(h, {c: Q(1)})]
    return polys, expected, monos, same_polynomial_span(polys, expected, monos)


def fixture_spectrum(a, b, c, d):
    """{2a-d, (a+d)/2 +- sqrt((a-d)^2 + 4bc)/2} for rational-square discriminants."""
    a, b, c, d = map(Q, (a, b, c, d))
    disc = (a - d) ** 2 + 4 * b * c
    root = rational_sqrt(disc)
    if root is None:
        raise ValueError("discriminant is not a rational square")
    return sorted({2 * a - d, (a + d) / 2 + root / 2, (a + d) / 2 - root / 2})


def rational_sqrt(q):
    from gmpy2 import is_square, isqrt
    q = Q(q)
    if q < 0:
        return None
    n, dd = q.numerator, q.denominator
    if is_square(n) and is_square(dd):
        return Q(isqrt(n), isqrt(dd))
    return None


# -- catalogue -----------------------------------------------------------------------

def hecke_tau(M, alpha, beta):
    return la.mat_add(la.scalar_matrix(alpha, M.N), la.mat_scale(beta, M.gen(1)))


def s3_square_tau(x, y, u, v):
    """tau on [2,1] (x) [2,1] (seminormal, kron basis) with 4tau-spectrum
    {3x+y +- sqrt((x-y)^2+u), 3y+x +- sqrt((x-y)^2+v)}.

    The basis is ordered so that s_1 = diag(1,-1,-1,1); tau is supported on
    the two 2x2 blocks {0,3} and {1,2}.  A slice of the G(M)-orbits is fixed
    by the choices below.
    """
    h = Q(1, 4)
    delta = x - y
    A = (u + 1) / 2
    k = 3 * (u - 1) / 2
    B = (k - 3 * delta) * Q(4, 9)
    C = (-3 * delta - k) / 4
    Dd = (v + 1) / 2
    s = (v - 1) / 2
    E = -delta + s
    F = -delta - s
    z = x * 0
    tau = [[z] * 4 for _ in range(4)]
    tau[0][0] = (3 * x + y + A) * h
    tau[3][3] = (3 * x + y - A) * h
    tau[0][3] = B * h
    tau[3][0] = C * h
    tau[1][1] = (3 * y + x + Dd) * h
    tau[2][2] = (3 * y + x - Dd) * h
    tau[1][2] = E * h
    tau[2][1] = F * h
    return tau


def s3_square_charpoly(x, y, u, v):
    """prod ((X - c)^2 - r) for the two (center, radicand) pairs of 4 tau."""
    delta = x - y
    p1 = la.poly_add(la.poly_mul([-(3 * x + y), Q(1)], [-(3 * x + y), Q(1)]), [-(delta * delta + u)])
    p2 = la.poly_add(la.poly_mul([-(3 * y + x), Q(1)], [-(3 * y + x), Q(1)]), [-(delta * delta + v)])
    return la.poly_mul(p1, p2)


def s3_square_spectrum(x, y, u, v):
    """The four eigenvalues of 4 tau as (center, radicand, sign)."""
    delta = x - y
    out = []
    for c, r in ((3 * x + y, delta * delta + u), (3 * y + x, delta * delta + v)):
        out += [(c, r, 1), (c, r, -1)]
    return out


def coordinates_on(value_parts, basis_radicals):
    """Rational coordinates of center + sign*sqrt(radicand) over (1, sqrt r_1, ...).

    ``value_parts`` is (center, radicand, sign) with the center in Q or
    Q(sqrt r_1); every square root must be a rational multiple of 1 or of a
    declared sqrt r_k.
    """
    center, rad, sign = value_parts
    coords = [Q(0)] * (1 + len(basis_radicals))
    if isinstance(center, QuadElem):
        if center.d not in basis_radicals:
            raise ValueError(f"sqrt {center.d} not declared")
        coords[0] += center.x
        coords[1 + basis_radicals.index(center.d)] += center.y
    else:
        coords[0] += Q(center)
    if isinstance(rad, QuadElem):
        if rad.y:
            raise ValueError("nested radical")
        rad = rad.x
    rad = Q(rad)
    root = rational_sqrt(rad)
    if root is not None:
        coords[0] += sign * root
        return coords
    for k, dd in enumerate(basis_radicals):
        s = rational_sqrt(rad / dd)
        if s is not None:
            coords[1 + k] += sign * s
            return coords
    raise ValueError(f"sqrt({rad}) is not in the declared span")


def hooks_point(n, c=1):
    """The point c (E_11 + E_22) of V^s(E), E the permutation representation."""
    E = sg.permutation_rep(n)
    tau = la.zeros(n)
    tau[0][0] = tau[1][1] = Q(c)
    return verify_point(E, tau, name="hooks_chain", params={"n": n, "c": Q(c)})


def family_catalog(name, **params):
    if name == "hecke":
        lam = sg.parse_partition(params["partition"])
        M = sg.irrep(lam)
        tau = hecke_tau(M, Q(params.get("alpha", 0)), Q(params.get("beta", 1)))
        return verify_point(M, tau, name=name, params=params)
    if name == "s3_std":
        M = sg.irrep((2, 1))
        a, b = Q(params["a"]), Q(params["b"])
        return verify_point(M, [[a, Q(0)], [Q(0), b]], name=name, params=params)
    if name == "s3_std_plus_triv":
        a, b, c, d, l = (Q(params[k]) for k in "abcdl")
        if (b or c) and 2 * a - d - l:
            raise NotInVariety("2a - d - l must vanish when (b, c) != 0")
        return verify_point(orthogonal_s3_plus_trivial(), fixture_tau(a, b, c, d, l),
                            blocks=(2, 1), name=name, params=params)
    if name == "s3_square":
        x, y, u, v = (params[k] for k in ("x", "y", "u", "v"))
        if not u or not v:
            raise ValueError("u and v must be nonzero")
        d = next((z.d for z in (x, y, u, v) if isinstance(z, QuadElem)), None)
        M = sg.tensor(sg.irrep((2, 1)), sg.irrep((2, 1)))
        if d is not None:
            lift = lambda m: [[QuadElem(e, 0, d) for e in row] for row in m]
            M = sg.SymRep(3, tuple(lift(g) for g in M.gens), M.form, M.label, d)
        return verify_point(M, s3_square_tau(x, y, u, v), name=name, params=params)
    if name == "hooks_chain":
        return hooks_point(int(params["n"]), Q(params.get("c", 1)))
    raise ValueError(f"unknown family {name!r}")


def random_search(M, seed=0, trials=200, bound=2):
    """Random small-integer points of the commutant, kept when C1 = C2 = 0."""
    rng = random.Random(seed)
    basis = sg.commutant_basis(M, (2, M.n - 2))
    found = []
    for _ in range(trials):
        coeffs = [Q(rng.randint(-bound, bound)) for _ in basis]
        tau = la.zeros(M.N)
        for c, B in zip(coeffs, basis):
            if c:
                tau = la.mat_add(tau, la.mat_scale(c, B))
        if residual_report(M, tau)[0] == "valid":
            found.append(tau)
    return found


# -- guards ----------------------------------------------------------------------------

@dataclass
class GuardCertificate:
    hom_dim: int
    certified: bool
    statement: str


def vsvide_guard(B: sg.SymRep, C: sg.SymRep):
    if B.n != C.n:
        raise ValueError("modules of different S_n")
    n = B.n
    comp = (2, n - 2) if n >= 2 else (1,)
    dim = len(sg.hom_young(C, B, comp))
    if dim == 0:
        return GuardCertificate(0, True, "Hom_{S_2,n-2}(C,B) = 0: V^s(B+C) is empty and "
                                         "Ext(B,C) = Ext(C,B) = 0")
    return GuardCertificate(dim, False, "")


def transvection_guard(p):
    """If tau is a rank-one nilpotent, check [t12, t23] = 0.  Returns applied?"""
    r = p.rep if isinstance(p, VarietyPoint) else p
    if r.n < 3:
        raise ValueError("needs n >= 3")
    tau = r.tau
    if la.rank(tau) != 1 or not la.is_zero_matrix(la.mat_mul(tau, tau)):
        return False
    C = la.commutator(ir.t_image(r, 1, 2), ir.t_image(r, 2, 3))
    if not la.is_zero_matrix(C):
        raise AssertionError("rank-one nilpotent tau with [t12, t23] != 0")
    return True


# -- extensions ------------------------------------------------------------------------

@dataclass
class ExtensionPair:
    upper: list          # sigma_i matrices, M_1 is a subrepresentation
    lower: list          # sigma_i matrices, M_2 is a subrepresentation
    n1: int
    n2: int
    lam: object

    def upper_split(self):
        return _splits(self.upper, self.n1, self.n2, upper=True)

    def lower_split(self):
        return _splits(self.lower, self.n1, self.n2, upper=False)


def _blocks(M, n1):
    top = [row[:n1] for row in M[:n1]]
    tr = [row[n1:] for row in M[:n1]]
    bl = [row[:n1] for row in M[n1:]]
    br = [row[n1:] for row in M[n1:]]
    return top, tr, bl, br


def _is_irreducible_block(gens, N):
    if N == 1:
        return True
    return len(la.algebra_closure(gens, N)) == N * N


def extension_pair(p: VarietyPoint, lam, n1=None):
    r = p.rep
    n1 = p.blocks[0] if n1 is None else n1
    n2 = r.N - n1
    lam = Q(lam)
    for g in r.base.gens:
        _, tr, bl, _ = _blocks(g, n1)
        if not (la.is_zero_matrix(tr) and la.is_zero_matrix(bl)):
            raise ValueError("the S_n action is not block diagonal for this decomposition")
    b1 = [_blocks(g, n1)[0] for g in r.base.gens]
    b2 = [_blocks(g, n1)[3] for g in r.base.gens]
    if not (_is_irreducible_block(b1, n1) and _is_irreducible_block(b2, n2)):
        raise ValueError("blocks must be irreducible S_n-modules")
    upper, lower = [], []
    for i in range(1, r.n):
        s1, s2 = b1[i - 1], b2[i - 1]
        _, t12, t21, _ = _blocks(ir.t_image(r, i, i + 1), n1)
        x = la.mat_scale(lam, la.mat_mul(s1, t12))
        y = la.mat_scale(lam, la.mat_mul(s2, t21))
        U = [list(a) + list(b) for a, b in zip(s1, x)] + \
            [[Q(0)] * n1 + list(b) for b in s2]
        L = [list(a) + [Q(0)] * n2 for a in s1] + \
            [list(a) + list(b) for a, b in zip(y, s2)]
        upper.append(U)
        lower.append(L)
    return ExtensionPair(upper, lower, n1, n2, lam)


def _splits(mats, n1, n2, upper=True):
    """Is there phi with (1 phi; 0 1) (or its transpose) block-diagonalizing every matrix?

    Upper case: need A phi - phi B = -X for the blocks (A X; 0 B).
    Lower case: need B psi - psi A = -Y for (A 0; Y B), psi : M_1 -> M_2.
    """
    rows, rhs = [], []
    for M in mats:
        A, X, Y, B = _blocks(M, n1)
        if upper:
            P, Qm, R, p, q = A, B, X, n1, n2        # unknown p x q
        else:
            P, Qm, R, p, q = B, A, Y, n2, n1
        for i in range(p):
            for j in range(q):
                row = {}
                for k in range(p):
                    if P[i][k]:
                        row[k * q + j] = row.get(k * q + j, la.ZERO) + P[i][k]
                for k in range(q):
                    if Qm[k][j]:
                        row[i * q + k] = row.get(i * q + k, la.ZERO) - Qm[k][j]
                rows.append({c: x for c, x in row.items() if x})
                rhs.append(-R[i][j])
    try:
        la.solve_sparse(rows, rhs, n1 * n2)
    except la.InconsistentSystem:
        return False
    return True


def braid_check(mats):
    out = []
    for i in range(len(mats)):
        for j in range(i + 1, len(mats)):
            if j == i + 1:
                R = la.mat_sub(la.mat_chain(mats[i], mats[j], mats[i]),
                               la.mat_chain(mats[j], mats[i], mats[j]))
            else:
                R = la.commutator(mats[i], mats[j])
            if not la.is_zero_matrix(R):
                out.append((i + 1, j + 1))
    return out


def hooks_adapted_basis(n):
    """Columns: v0 = e_1 + ... + e_n, then u_r = e_r - v0/n for r < n."""
    P = la.zeros(n)
    for i in range(n):
        P[i][0] = Q(1)
    for r in range(n - 1):
        for i in range(n):
            P[i][r + 1] = (Q(1) if i == r else Q(0)) - Q(1, n)
    return P


def hooks_extension(n, lam=1, c=1):
    """Extension pair of 1 + U from the hooks point, written back in the e-basis."""
    pt = hooks_point(n, c)
    P = hooks_adapted_basis(n)
    adapted = ir.conjugate(pt.rep, la.inverse(P))
    vp = VarietyPoint(adapted, (1, n - 1), "hooks_adapted")
    pair = extension_pair(vp, lam)
    Pi = la.inverse(P)
    back = lambda mats: [la.mat_chain(P, M, Pi) for M in mats]
    return pair, back(pair.upper), back(pair.lower)


# -- exterior algebra and the hook families ---------------------------------------------

def ext_basis(n, p):
    return list(combinations(range(n), p))


def wedge_monomial(idx):
    """Sort a tuple of indices, returning (sign, sorted tuple) or (0, None)."""
    idx = list(idx)
    if len(set(idx)) != len(idx):
        return 0, None
    sign = 1
    for i in range(len(idx)):
        for j in range(len(idx) - 1 - i):
            if idx[j] > idx[j + 1]:
                idx[j], idx[j + 1] = idx[j + 1], idx[j]
                sign = -sign
    return sign, tuple(idx)


def wedge(x, y):
    out = {}
    for a, ca in x.items():
        for b, cb in y.items():
            s, m = wedge_monomial(a + b)
            if s:
                out[m] = out.get(m, la.ZERO) + s * ca * cb
    return {k: v for k, v in out.items() if v}


def koszul_d(x):
    out = {}
    for mono, c in x.items():
        for j in range(len(mono)):
            m = mono[:j] + mono[j + 1:]
            sgn = 1 if j % 2 == 0 else -1
            out[m] = out.get(m, la.ZERO) + sgn * c
    return {k: v for k, v in out.items() if v}


def vector_to_ext(v):
    return {(i,): c for i, c in enumerate(v) if c}


def exterior_power(M, p):
    n = len(M)
    basis = ext_basis(n, p)
    index = {b: k for k, b in enumerate(basis)}
    cols = [vector_to_ext([M[i][j] for i in range(n)]) for j in range(n)]
    out = la.zeros(len(basis))
    for k, S in enumerate(basis):
        img = {(): Q(1)}
        for j in S:
            img = wedge(img, cols[j])
        for m, c in img.items():
            out[index[m]][k] = c
    return out


def f_family_p1(n, alpha):
    """The displayed f-basis action on E (columns are images of f_r)."""
    alpha = Q(alpha)
    a = alpha * (n - 2) / (n * n)
    b = 2 * alpha / (n * n)
    mats = []
    for k in range(n - 1):
        M = la.zeros(n)
        for r in range(n):
            if r == k:
                M[k + 1][r] += 1
                for i in range(n):
                    M[i][r] += a
            elif r == k + 1:
                M[k][r] += 1
                for i in range(n):
                    M[i][r] += a
            else:
                M[r][r] += 1
                for i in range(n):
                    M[i][r] -= b
        mats.append(M)
    return mats


def g_shift(n, k, alpha):
    """alpha/n (g_k + g_{k+1}) - 2 alpha/n^2 w, with 0-based k."""
    alpha = Q(alpha)
    y = {}
    for i in range(n):
        c = -2 * alpha / (n * n) + (alpha / n if i in (k, k + 1) else 0)
        if c:
            y[(i,)] = c
    return y


def perm_on_ext(n, k, x):
    out = {}
    for mono, c in x.items():
        img = tuple(k + 1 if i == k else k if i == k + 1 else i for i in mono)
        s, m = wedge_monomial(img)
        out[m] = out.get(m, la.ZERO) + s * c
    return {kk: v for kk, v in out.items() if v}


def g_closed_form(n, p, alpha):
    """sigma_k g = s_k g + (alpha/n (g_k + g_{k+1}) - 2 alpha/n^2 w) ^ dg on Lambda^p E."""
    basis = ext_basis(n, p)
    index = {b: i for i, b in enumerate(basis)}
    mats = []
    for k in range(n - 1):
        M = la.zeros(len(basis))
        y = g_shift(n, k, alpha)
        for col, S in enumerate(basis):
            g = {S: Q(1)}
            img = perm_on_ext(n, k, g)
            for m, c in wedge(y, koszul_d(g)).items():
                img[m] = img.get(m, la.ZERO) + c
            for m, c in img.items():
                if c:
                    M[index[m]][col] += c
        mats.append(M)
    return mats


def f_closed_form(n, p, alpha, literal=False):
    """Closed formulas for the f-basis action on Lambda^p E.

    For f a wedge of f_r with r not in {k, k+1}, v = f_1 + ... + f_n,
    a = alpha (n-2)/n^2 and b = 2 alpha/n^2:

      s.f                 = f - b v^df
      s.(f_k ^ f)         = f_{k+1} ^ f - b f_{k+1} ^ v ^ df + a v ^ f
      s.(f_k ^ f_{k+1} ^ f) = f_{k+1} ^ f_k ^ f + a v ^ (f_k - f_{k+1}) ^ f
                              - b f_{k+1} ^ f_k ^ v ^ df

    ``literal`` evaluates the formulas as printed, which lack the factors
    f_{k+1} ^ (resp. ^ f); its off-degree terms are discarded.  That variant
    exists only to document the discrepancy.
    """
    alpha = Q(alpha)
    a = alpha * (n - 2) / (n * n)
    b = 2 * alpha / (n * n)
    v = {(i,): Q(1) for i in range(n)}
    basis = ext_basis(n, p)
    index = {S: i for i, S in enumerate(basis)}
    mats = []
    for k in range(n - 1):
        M = la.zeros(len(basis))
        fk, fk1 = {(k,): Q(1)}, {(k + 1,): Q(1)}
        for col, S in enumerate(basis):
            rest = tuple(i for i in S if i not in (k, k + 1))
            f = {rest: Q(1)}
            vdf = wedge(v, koszul_d(f))
            if k in S and k + 1 in S:
                sign, _ = wedge_monomial((k, k + 1) + rest)
                head = wedge(fk1, fk)
                diff = _add(fk, _scale(-1, fk1))
                if literal:
                    img = _add(wedge(head, f), _scale(a, wedge(v, diff)),
                               _scale(-b, wedge(wedge(_scale(-1, diff), v), koszul_d(f))))
                else:
                    img = _add(wedge(head, f), _scale(a, wedge(wedge(v, diff), f)),
                               _scale(-b, wedge(head, vdf)))
            elif k in S or k + 1 in S:
                mine, other = (fk, fk1) if k in S else (fk1, fk)
                sign, _ = wedge_monomial(next(iter(mine)) + rest)
                drop = vdf if literal else wedge(other, vdf)
                img = _add(wedge(other, f), _scale(-b, drop), _scale(a, wedge(v, f)))
            else:
                sign = 1
                img = _add(f, _scale(-b, vdf))
            for m, c in img.items():
                if m in index:      # the printed line 4 is not homogeneous
                    M[index[m]][col] += sign * c
        mats.append(M)
    return mats


def _add(*xs):
    out = {}
    for x in xs:
        for m, c in x.items():
            out[m] = out.get(m, la.ZERO) + c
    return {k: v for k, v in out.items() if v}


def _scale(c, x):
    return {m: c * v for m, v in x.items() if c * v}


def hook_family(n, p, alpha, kind="f"):
    """Matrices of sigma_1..sigma_{n-1} on Lambda^p E.

    kind "f": the p-th exterior power of the f-basis action on E;
    kind "g": the closed formula s_k g + y_k ^ dg applied to every basis vector.
    """
    if not 0 <= p <= n - 1:
        raise ValueError(f"p must lie in 0..{n - 1}")
    if kind == "f":
        return [exterior_power(M, p) for M in f_family_p1(n, alpha)]
    if kind == "g":
        return g_closed_form(n, p, alpha)
    raise ValueError("kind must be 'f' or 'g'")


def d_squared_zero(n):
    for p in range(n + 1):
        for S in ext_basis(n, p):
            if koszul_d(koszul_d({S: Q(1)})):
                return False
    return True


def tensor_point(p1: VarietyPoint, p2: VarietyPoint):
    return VarietyPoint(ir.tensor(p1.rep, p2.rep), name="tensor")


__all__ = ["VarietyPoint", "verify_point", "is_surjective", "vsvide_guard", "extension_pair",
           "hook_family", "transvection_guard", "family_catalog", "NotInCommutant",
           "NotInVariety"]
