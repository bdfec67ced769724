"""Exact linear algebra over Q or Q(sqrt d).

Matrices are plain lists of lists of scalars.  Large systems go through
:class:`SparseEchelon`, which stores rows as ``{column: value}`` dicts and
keeps them in semi-echelon form (the pivot of a row is its smallest column).
"""

from __future__ import annotations

import heapq
from itertools import product as iproduct

from gmpy2 import mpq

from .scalars import QuadElem, Q

ZERO = mpq(0)
ONE = mpq(1)


# -- basic matrix helpers ---------------------------------------------------

def zeros(n, m=None):
    m = n if m is None else m
    return [[ZERO] * m for _ in range(n)]


def identity(n):
    out = zeros(n)
    for i in range(n):
        out[i][i] = ONE
    return out


def scalar_matrix(c, n):
    out = zeros(n)
    for i in range(n):
        out[i][i] = c
    return out


def as_matrix(rows):
    """Copy a nested sequence into a list-of-lists of exact scalars."""
    return [[x if isinstance(x, QuadElem) else Q(x) for x in row] for row in rows]


def shape(A):
    return len(A), (len(A[0]) if A else 0)


def mat_mul(A, B):
    if not A:
        return []
    m = len(B[0]) if B else 0
    nz = [[(j, b) for j, b in enumerate(row) if b] for row in B]
    out = []
    for row in A:
        acc = [ZERO] * m
        for k, a in enumerate(row):
            if a:
                for j, b in nz[k]:
                    acc[j] = acc[j] + a * b
        out.append(acc)
    return out


def mat_chain(*mats):
    out = mats[0]
    for M in mats[1:]:
        out = mat_mul(out, M)
    return out


def mat_add(A, B):
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_sub(A, B):
    return [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_scale(c, A):
    return [[c * a for a in row] for row in A]


def mat_neg(A):
    return [[-a for a in row] for row in A]


def transpose(A):
    return [list(col) for col in zip(*A)]


def commutator(A, B):
    return mat_sub(mat_mul(A, B), mat_mul(B, A))


def trace(A):
    s = ZERO
    for i in range(len(A)):
        s = s + A[i][i]
    return s


def is_zero_matrix(A):
    return all(not x for row in A for x in row)


def mat_equal(A, B):
    return shape(A) == shape(B) and all(a == b for ra, rb in zip(A, B) for a, b in zip(ra, rb))


def is_scalar_matrix(A):
    n = len(A)
    if n == 0:
        return True
    c = A[0][0]
    return all(A[i][j] == (c if i == j else 0) for i in range(n) for j in range(n))


def kron(A, B):
    na, ma = shape(A)
    nb, mb = shape(B)
    out = zeros(na * nb, ma * mb)
    for i in range(na):
        for j in range(ma):
            a = A[i][j]
            if not a:
                continue
            for k in range(nb):
                rk = out[i * nb + k]
                Bk = B[k]
                for l in range(mb):
                    if Bk[l]:
                        rk[j * mb + l] = a * Bk[l]
    return out


def block_diag(*blocks):
    n = sum(len(b) for b in blocks)
    out = zeros(n)
    off = 0
    for b in blocks:
        k = len(b)
        for i in range(k):
            for j in range(k):
                out[off + i][off + j] = b[i][j]
        off += k
    return out


def submatrix(A, rows, cols):
    return [[A[i][j] for j in cols] for i in rows]


def mat_pow(A, k):
    out = identity(len(A))
    base = A
    while k:
        if k & 1:
            out = mat_mul(out, base)
        base = mat_mul(base, base)
        k >>= 1
    return out


def vec(A):
    return [x for row in A for x in row]


def unvec(v, n, m=None):
    m = n if m is None else m
    return [list(v[i * m:(i + 1) * m]) for i in range(n)]


def mat_vec(A, v):
    return [sum((a * x for a, x in zip(row, v) if a), ZERO) for row in A]


# -- sparse echelon ---------------------------------------------------------

class SparseEchelon:
    """Incremental row reduction with sparse dict rows keyed by integer columns.

    ``add(row)`` reduces the row against the stored pivots and stores the
    remainder (normalised to leading coefficient 1) if it is nonzero.
    ``reduce(row)`` returns the remainder without storing it.
    """

    def __init__(self):
        self.rows = {}          # pivot column -> row dict (row[pivot] == 1)

    def __len__(self):
        return len(self.rows)

    @property
    def pivots(self):
        return sorted(self.rows)

    def reduce(self, row):
        v = {c: x for c, x in row.items() if x}
        heap = [c for c in v if c in self.rows]
        heapq.heapify(heap)
        seen = set(heap)
        while heap:
            c = heapq.heappop(heap)
            seen.discard(c)
            a = v.get(c)
            if not a:
                continue
            for k, x in self.rows[c].items():
                y = v.get(k, ZERO) - a * x
                if y:
                    v[k] = y
                    if k in self.rows and k not in seen and k != c:
                        heapq.heappush(heap, k)
                        seen.add(k)
                else:
                    v.pop(k, None)
        return v

    def add(self, row):
        v = self.reduce(row)
        if not v:
            return None
        p = min(v)
        inv = 1 / v[p]
        v = {k: x * inv for k, x in v.items()}
        self.rows[p] = v
        return p

    def fully_reduce(self):
        """Clear every pivot column from all other rows (reduced echelon form)."""
        order = sorted(self.rows, reverse=True)
        for c in order:
            r = self.rows[c]
            for p, other in self.rows.items():
                if p < c and c in other:
                    a = other[c]
                    for k, x in r.items():
                        y = other.get(k, ZERO) - a * x
                        if y:
                            other[k] = y
                        else:
                            other.pop(k, None)
        return self


def echelon_from_matrix(A):
    E = SparseEchelon()
    for row in A:
        E.add({j: x for j, x in enumerate(row) if x})
    return E


def rank(A):
    return len(echelon_from_matrix(A))


def nullspace_from_rows(rows, ncols):
    """Basis of {x : r.x = 0 for every sparse row r} as dense vectors."""
    E = SparseEchelon()
    for r in rows:
        E.add(r)
    E.fully_reduce()
    piv = E.rows
    basis = []
    for f in range(ncols):
        if f in piv:
            continue
        x = [ZERO] * ncols
        x[f] = ONE
        for p, r in piv.items():
            if f in r:
                x[p] = -r[f]
        basis.append(x)
    return basis


def nullspace(A):
    ncols = len(A[0]) if A else 0
    return nullspace_from_rows(({j: x for j, x in enumerate(row) if x} for row in A), ncols)


class InconsistentSystem(ArithmeticError):
    pass


def solve_sparse(rows, rhs, ncols):
    """Particular solution of the sparse system rows . x = rhs, free variables 0.

    Raises :class:`InconsistentSystem` when there is no solution.
    """
    E = SparseEchelon()
    aug = ncols
    for r, b in zip(rows, rhs):
        rr = dict(r)
        if b:
            rr[aug] = b
        p = E.add(rr)
        if p == aug:
            raise InconsistentSystem("linear system has no solution")
    E.fully_reduce()
    x = [ZERO] * ncols
    for p, r in E.rows.items():
        x[p] = r.get(aug, ZERO)
    return x


def solve(A, b):
    ncols = len(A[0]) if A else 0
    rows = [{j: x for j, x in enumerate(row) if x} for row in A]
    return solve_sparse(rows, b, ncols)


def inverse(A):
    n = len(A)
    aug = [list(A[i]) + [ONE if i == j else ZERO for j in range(n)] for i in range(n)]
    E = SparseEchelon()
    for row in aug:
        E.add({j: x for j, x in enumerate(row) if x})
    if any(p not in E.rows for p in range(n)):
        raise ZeroDivisionError("singular matrix")
    E.fully_reduce()
    out = zeros(n)
    for i in range(n):
        r = E.rows[i]
        for j in range(n):
            out[i][j] = r.get(n + j, ZERO)
    return out


def det(A):
    n = len(A)
    M = [list(r) for r in A]
    d = ONE
    for c in range(n):
        p = next((i for i in range(c, n) if M[i][c]), None)
        if p is None:
            return ZERO
        if p != c:
            M[c], M[p] = M[p], M[c]
            d = -d
        piv = M[c][c]
        d = d * piv
        for i in range(c + 1, n):
            if M[i][c]:
                f = M[i][c] / piv
                M[i] = [a - f * b for a, b in zip(M[i], M[c])]
    return d


def solve_matrix_equation(K, B):
    """Return X with K X = B for a full column-rank K (columns = a subspace basis)."""
    X = transpose([solve(K, b) for b in transpose(B)])
    if not mat_equal(mat_mul(K, X), B):
        raise ValueError("B does not lie in the column span of K")
    return X


def column_basis(vectors):
    """Select a basis (as dense vectors) of the span of the given dense vectors."""
    E = SparseEchelon()
    out = []
    for v in vectors:
        if E.add({j: x for j, x in enumerate(v) if x}) is not None:
            out.append(list(v))
    return out


class SpanBuilder:
    """Incrementally grown subspace of matrices (vectorised), keeping originals."""

    def __init__(self, n, m=None):
        self.n = n
        self.m = n if m is None else m
        self.E = SparseEchelon()
        self.basis = []

    def add(self, A):
        v = {}
        m = self.m
        for i, row in enumerate(A):
            for j, x in enumerate(row):
                if x:
                    v[i * m + j] = x
        if self.E.add(v) is not None:
            self.basis.append(A)
            return True
        return False

    def contains(self, A):
        v = {i * self.m + j: x for i, row in enumerate(A) for j, x in enumerate(row) if x}
        return not self.E.reduce(v)

    def __len__(self):
        return len(self.basis)


def algebra_closure(gens, n):
    """Basis of the unital associative algebra generated by ``gens`` inside M_n."""
    S = SpanBuilder(n)
    S.add(identity(n))
    frontier = [identity(n)]
    while frontier:
        nxt = []
        for A in frontier:
            for g in gens:
                P = mat_mul(A, g)
                if S.add(P):
                    nxt.append(P)
        frontier = nxt
        if len(S) == n * n:
            break
    return S.basis


def intertwiners(pairs, n1, n2):
    """Basis of {X (n2 x n1) : X A = B X for every (A, B) in pairs}."""
    rows = []
    # unknown X[i][j] has index i*n1 + j
    for A, B in pairs:
        for i in range(n2):
            for j in range(n1):
                r = {}
                for k in range(n1):          # (X A)[i][j] = sum_k X[i][k] A[k][j]
                    a = A[k][j]
                    if a:
                        idx = i * n1 + k
                        r[idx] = r.get(idx, ZERO) + a
                for k in range(n2):          # (B X)[i][j] = sum_k B[i][k] X[k][j]
                    b = B[i][k]
                    if b:
                        idx = k * n1 + j
                        r[idx] = r.get(idx, ZERO) - b
                r = {c: x for c, x in r.items() if x}
                if r:
                    rows.append(r)
    return [unvec(v, n2, n1) for v in nullspace_from_rows(rows, n1 * n2)]


# -- polynomials (coefficient lists, lowest degree first) --------------------

def poly_trim(p):
    p = list(p)
    while p and not p[-1]:
        p.pop()
    return p


def poly_mul(p, q):
    if not p or not q:
        return []
    out = [ZERO] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] = out[i + j] + a * b
    return poly_trim(out)


def poly_add(p, q):
    n = max(len(p), len(q))
    out = [(p[i] if i < len(p) else ZERO) + (q[i] if i < len(q) else ZERO) for i in range(n)]
    return poly_trim(out)


def poly_scale(c, p):
    return poly_trim([c * a for a in p])


def poly_deriv(p):
    return poly_trim([k * p[k] for k in range(1, len(p))])


def poly_divmod(p, q):
    p = poly_trim(p)
    q = poly_trim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    quo = [ZERO] * max(len(p) - len(q) + 1, 0)
    r = list(p)
    lead = q[-1]
    while len(r) >= len(q) and r:
        c = r[-1] / lead
        k = len(r) - len(q)
        quo[k] = c
        for i, b in enumerate(q):
            r[k + i] = r[k + i] - c * b
        r = poly_trim(r)
    return poly_trim(quo), r


def poly_gcd(p, q):
    a, b = poly_trim(p), poly_trim(q)
    while b:
        a, b = b, poly_divmod(a, b)[1]
    if not a:
        return []
    lead = a[-1]
    return [x / lead for x in a]


def is_squarefree(p):
    return len(poly_gcd(p, poly_deriv(p))) == 1


def poly_eval_matrix(p, A):
    """p(A) by Horner's rule."""
    n = len(A)
    out = zeros(n)
    for c in reversed(p):
        out = mat_mul(out, A)
        for i in range(n):
            out[i][i] = out[i][i] + c
    return out


def charpoly(A):
    """Characteristic polynomial det(X - A), via Hessenberg reduction (O(n^3))."""
    n = len(A)
    H = [list(r) for r in A]
    for m in range(1, n - 1):
        i = next((i for i in range(m, n) if H[i][m - 1]), None)
        if i is None:
            continue
        if i != m:
            H[i], H[m] = H[m], H[i]
            for row in H:
                row[i], row[m] = row[m], row[i]
        t = H[m][m - 1]
        for i in range(m + 1, n):
            u = H[i][m - 1] / t
            if not u:
                continue
            H[i] = [a - u * b for a, b in zip(H[i], H[m])]
            for row in H:
                row[m] = row[m] + u * row[i]
    polys = [[ONE]]
    for m in range(1, n + 1):
        pm = poly_mul([-H[m - 1][m - 1], ONE], polys[m - 1])
        t = ONE
        for i in range(1, m):
            t = t * H[m - i][m - i - 1]
            c = t * H[m - i - 1][m - 1]
            if c:
                pm = poly_add(pm, poly_scale(-c, polys[m - i - 1]))
        polys.append(pm)
    p = polys[n]
    return p + [ZERO] * (n + 1 - len(p)) if len(p) < n + 1 else p


def minimal_power_relation(A):
    """Smallest m with I, A, ..., A^m linearly dependent; returns (m, powers)."""
    n = len(A)
    S = SpanBuilder(n)
    powers = [identity(n)]
    S.add(powers[0])
    while True:
        P = mat_mul(powers[-1], A)
        if not S.add(P):
            return len(powers), powers
        powers.append(P)


# -- roots in the ground field ----------------------------------------------

def _to_sympy(z):
    import sympy as sp
    if isinstance(z, QuadElem):
        return sp.Rational(int(z.x.numerator), int(z.x.denominator)) + \
            sp.Rational(int(z.y.numerator), int(z.y.denominator)) * sp.sqrt(z.d)
    z = Q(z)
    return sp.Rational(int(z.numerator), int(z.denominator))


def _from_sympy(e, d):
    import sympy as sp
    e = sp.radsimp(sp.expand(e))
    if e.is_Rational:
        return mpq(int(e.p), int(e.q))
    if d is None:
        raise ValueError(f"{e} is not rational")
    r = sp.sqrt(d)
    x = sp.expand(e).coeff(r, 0)
    y = sp.expand(e).coeff(r, 1)
    if not (x.is_Rational and y.is_Rational):
        raise ValueError(f"{e} is not in Q(sqrt {d})")
    return QuadElem(mpq(int(x.p), int(x.q)), mpq(int(y.p), int(y.q)), d)


def roots_in_field(p, d=None):
    """Roots of the polynomial p lying in Q or Q(sqrt d), with multiplicities.

    Returns (roots, splits) where roots maps root -> multiplicity and splits
    says whether p factors completely into linear factors over the field.
    """
    import sympy as sp
    X = sp.Symbol("X")
    expr = sum(_to_sympy(c) * X ** k for k, c in enumerate(p))
    kw = {"extension": sp.sqrt(d)} if d is not None else {}
    _, factors = sp.factor_list(sp.Poly(expr, X), **kw) if kw else sp.factor_list(sp.Poly(expr, X))
    roots = {}
    splits = True
    for f, mult in factors:
        f = sp.Poly(f, X)
        if f.degree() == 1:
            a, b = f.all_coeffs()
            r = _from_sympy(-b / a, d)
            roots[r] = roots.get(r, 0) + mult
        elif f.degree() > 1:
            splits = False
    return roots, splits


def kernel_basis(A):
    return nullspace(A)


def columns_to_matrix(cols):
    return transpose(cols)


def all_words(alphabet_size, length):
    return list(iproduct(range(alphabet_size), repeat=length))
