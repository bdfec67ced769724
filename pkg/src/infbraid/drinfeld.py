"""Lifting infinitesimal braid representations to B_n over k[[h]] / h^(D+1).

R(sigma_i) = Phi(h t, h Y) s_i exp(lam h t) Phi(h Y, h t),  t = t_{i,i+1},  Y = Y_i.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import infrep as ir
from . import linalg as la
from .associator import Associator, degree3_alpha
from .scalars import Q
from .series import HMatrix, hexp, substitute


class LiftError(ArithmeticError):
    """A braid relation failed after lifting (invalid tau or associator)."""


# -- braid words ---------------------------------------------------------------

class BraidWord:
    """Word in sigma_i^(+-1); letters are nonzero ints, -i meaning sigma_i^-1."""

    def __init__(self, letters=()):
        letters = tuple(int(x) for x in letters)
        if any(x == 0 for x in letters):
            raise ValueError("0 is not a braid generator index")
        self.letters = letters

    def __mul__(self, other):
        return BraidWord(self.letters + other.letters)

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        return BraidWord(self.letters * k)

    def inverse(self):
        return BraidWord(-x for x in reversed(self.letters))

    def free_reduce(self):
        out = []
        for x in self.letters:
            if out and out[-1] == -x:
                out.pop()
            else:
                out.append(x)
        return BraidWord(out)

    def __eq__(self, other):
        return isinstance(other, BraidWord) and self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def __len__(self):
        return len(self.letters)

    def __repr__(self):
        return "BraidWord(" + " ".join(f"s{x}" if x > 0 else f"s{-x}^-1" for x in self.letters) + ")"

    def max_index(self):
        return max((abs(x) for x in self.letters), default=0)

    @classmethod
    def parse(cls, text):
        """'1 2 -1' or '1,2,-1'."""
        return cls(int(x) for x in text.replace(",", " ").split())


def sigma(i):
    return BraidWord([i])


def xi(i, j):
    """sigma_{j-1} ... sigma_{i+1} sigma_i^2 sigma_{i+1}^-1 ... sigma_{j-1}^-1."""
    if not 1 <= i < j:
        raise ValueError("xi needs 1 <= i < j")
    outer = list(range(j - 1, i, -1))
    return BraidWord(outer + [i, i] + [-k for k in reversed(outer)])


def delta(r):
    """sigma_{r-1} ... sigma_2 sigma_1^2 sigma_2 ... sigma_{r-1}."""
    if r < 2:
        raise ValueError("delta needs r >= 2")
    down = list(range(r - 1, 1, -1))
    return BraidWord(down + [1, 1] + list(reversed(down)))


def gamma(r):
    """(sigma_1 ... sigma_{r-1})^r."""
    return BraidWord(list(range(1, r)) * r)


# -- lifted representation -----------------------------------------------------

@dataclass
class BraidRep:
    n: int
    sigmas: list
    provenance: dict = field(default_factory=dict)
    _inv: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def N(self):
        return self.sigmas[0].N if self.sigmas else 0

    @property
    def D(self):
        return self.sigmas[0].D

    def inv(self, i):
        if i not in self._inv:
            self._inv[i] = self.sigmas[i - 1].inverse()
        return self._inv[i]

    def to_json(self):
        return {"n": self.n, "N": self.N, "degree": self.D,
                "sigmas": [s.to_json() for s in self.sigmas], "provenance": self.provenance}

    @classmethod
    def from_json(cls, obj, d=None):
        return cls(int(obj["n"]), [HMatrix.from_json(s, d) for s in obj["sigmas"]],
                   dict(obj.get("provenance", {})))


def braid_residuals(R: BraidRep):
    out = []
    s = R.sigmas
    for i in range(len(s)):
        for j in range(i + 1, len(s)):
            if j == i + 1:
                res = s[i] * s[j] * s[i] - s[j] * s[i] * s[j]
                name = f"s{i + 1}s{j + 1}s{i + 1} = s{j + 1}s{i + 1}s{j + 1}"
            else:
                res = s[i] * s[j] - s[j] * s[i]
                name = f"s{i + 1}s{j + 1} = s{j + 1}s{i + 1}"
            if not res.is_zero():
                out.append((name, res))
    return out


def lift_sigma(r: ir.InfRep, assoc: Associator, i, D):
    t = HMatrix.constant(ir.t_image(r, i, i + 1), D)
    Y = HMatrix.constant(ir.y_element(r, i), D)
    phi = assoc.phi.truncate(min(assoc.phi.D, D))
    left = substitute(phi, {"A": t, "B": Y}, 1)
    right = substitute(phi, {"A": Y, "B": t}, 1)
    mid = HMatrix.constant(r.s(i), D) * hexp(ir.t_image(r, i, i + 1), D, assoc.lam)
    return left * mid * right


def lift(r: ir.InfRep, assoc: Associator, D=None, check=True):
    D = assoc.D if D is None else D
    sig = [lift_sigma(r, assoc, i, D) for i in range(1, r.n)]
    R = BraidRep(r.n, sig, {"lambda": str(assoc.lam), "associator_degree": assoc.D,
                             "even": bool(assoc.even)})
    if check:
        bad = braid_residuals(R)
        if bad:
            raise LiftError(f"braid relation fails after lifting: {bad[0][0]}")
    return R


def eval_word(R: BraidRep, w: BraidWord):
    if w.max_index() > R.n - 1:
        raise ValueError(f"generator index {w.max_index()} >= n = {R.n}")
    out = HMatrix.identity(R.N, R.D)
    for x in w.letters:
        out = out * (R.sigmas[x - 1] if x > 0 else R.inv(-x))
    return out


# -- identities ----------------------------------------------------------------

def delta_identity(R: BraidRep, r: ir.InfRep, lam):
    """delta_k - exp(2 lam h Y_k) for k = 2..n."""
    return {k: eval_word(R, delta(k)) - hexp(ir.y_element(r, k), R.D, 2 * Q(lam))
            for k in range(2, r.n + 1)}


def gamma_identity(R: BraidRep, r: ir.InfRep, lam):
    return eval_word(R, gamma(r.n)) - hexp(ir.t_total(r), R.D, 2 * Q(lam))


def xi_first_order(R: BraidRep, r: ir.InfRep, lam):
    """Residuals of R(xi_ij) = 1 + 2 lam h t_ij through order h^1."""
    out = {}
    I = la.identity(R.N)
    for i in range(1, r.n + 1):
        for j in range(i + 1, r.n + 1):
            X = eval_word(R, xi(i, j))
            r0 = la.mat_sub(X.coeffs[0], I)
            r1 = la.mat_sub(X.coeffs[1], la.mat_scale(2 * Q(lam), ir.t_image(r, i, j))) \
                if R.D >= 1 else la.zeros(R.N)
            out[(i, j)] = (r0, r1)
    return out


def order3_expansion(r: ir.InfRep, i, lam, alpha, D=3):
    """s (e^{lam t} + lam^2/3 [Y,t] - alpha [t,[t,Y]] + lam^3/6 (t[Y,t] + [Y,t]t)), h-graded."""
    lam, alpha = Q(lam), Q(alpha)
    t = ir.t_image(r, i, i + 1)
    Y = ir.y_element(r, i)
    Yt = la.commutator(Y, t)
    E = hexp(t, D, lam)
    c2 = la.mat_scale(lam ** 2 / 3, Yt)
    c3 = la.mat_add(la.mat_scale(-alpha, la.commutator(t, la.commutator(t, Y))),
                    la.mat_scale(lam ** 3 / 6, la.mat_add(la.mat_mul(t, Yt), la.mat_mul(Yt, t))))
    coeffs = list(E.coeffs)
    coeffs[2] = la.mat_add(coeffs[2], c2)
    coeffs[3] = la.mat_add(coeffs[3], c3)
    return HMatrix.constant(r.s(i), D) * HMatrix(coeffs, D)


@dataclass
class FirstOrderReport:
    xi: dict
    sigma_order3: list

    @property
    def ok(self):
        return (all(la.is_zero_matrix(a) and la.is_zero_matrix(b) for a, b in self.xi.values())
                and all(la.is_zero_matrix(M) for M in self.sigma_order3))


def first_order_checks(R: BraidRep, r: ir.InfRep, assoc: Associator, i=None):
    i = r.n - 1 if i is None else i
    xi_res = xi_first_order(R, r, assoc.lam)
    order3 = []
    if assoc.D >= 3 and R.D >= 3 and r.n >= 2:
        alpha = assoc.alpha if assoc.alpha is not None else degree3_alpha(assoc)
        exp3 = order3_expansion(r, i, assoc.lam, alpha, 3)
        got = R.sigmas[i - 1]
        order3 = [la.mat_sub(got.coeffs[k], exp3.coeffs[k]) for k in range(4)]
    return FirstOrderReport(xi_res, order3)


def isometry_check(R: BraidRep, B, mode, r: ir.InfRep | None = None):
    """Residuals R^T B R - B (orthogonal/symplectic) or R^T B eps(R) - B (unitary)."""
    if mode not in ("orthogonal", "symplectic", "unitary"):
        raise ValueError(f"unknown mode {mode}")
    if r is not None and mode not in ir.form_type_all(r, B):
        raise ValueError(f"the infinitesimal representation is not {mode} for this form")
    Bh = HMatrix.constant(B, R.D)
    out = []
    for S in R.sigmas:
        right = S.eps() if mode == "unitary" else S
        out.append(S.transpose() * Bh * right - Bh)
    return out


# -- Hensel conjugation --------------------------------------------------------

def poly_eval_h(p, a: HMatrix):
    out = HMatrix([la.zeros(a.N)], a.D)
    for c in reversed(p):
        out = out * a + HMatrix.identity(a.N, a.D).scale(c)
    return out


def hensel_conjugate(a: HMatrix, p):
    """P = sum_r c_{r+1} sum_s a^(r-s) abar^s, so that P abar = a P.

    ``p`` lists the coefficients of Q low degree first; Q(a) = 0 is required.
    """
    p = [Q(c) if not hasattr(c, "d") else c for c in p]
    if not poly_eval_h(p, a).is_zero():
        raise ValueError("Q(a) is not zero mod h^(D+1)")
    abar = HMatrix.constant(a.coeffs[0], a.D)
    dq = la.poly_deriv(p)
    if not la.det(la.poly_eval_matrix(dq, a.coeffs[0])):
        raise ValueError("Q'(abar) is singular")
    N, D = a.N, a.D
    apow = [HMatrix.identity(N, D)]
    bpow = [HMatrix.identity(N, D)]
    for _ in range(len(p)):
        apow.append(apow[-1] * a)
        bpow.append(bpow[-1] * abar)
    P = HMatrix([la.zeros(N)], D)
    for r in range(len(p) - 1):
        c = p[r + 1]
        if not c:
            continue
        I_r = HMatrix([la.zeros(N)], D)
        for s in range(r + 1):
            I_r = I_r + apow[r - s] * bpow[s]
        P = P + I_r.scale(c)
    return P


# -- Hom spaces ----------------------------------------------------------------

@dataclass
class HomProfile:
    total_dim: int           # dimension over k of the truncated solution space
    profile: list            # dims of leading coefficients by h-valuation
    hom_inf: int             # dim Hom over the infinitesimal braid algebra
    hom_sn: int              # dim Hom over S_n
    D: int

    @property
    def expected(self):
        return self.D * self.hom_inf + self.hom_sn

    @property
    def free_rank(self):
        """Rank r when the solution module is free mod h^(D+1), else None."""
        if self.total_dim == (self.D + 1) * self.hom_inf and all(x == self.hom_inf for x in self.profile):
            return self.hom_inf
        return None


def hom_space(R1: BraidRep, R2: BraidRep):
    """All X over k[h]/h^(D+1) with X R1(s) = R2(s) X.

    Returns a k-basis twice: as lists [X_0, ..., X_D] of coefficient
    matrices and as flat vectors.
    """
    if R1.n != R2.n or R1.D != R2.D:
        raise ValueError("representations must share n and D")
    n1, n2, D = R1.N, R2.N, R1.D
    blk = n1 * n2
    rows = []
    for S1, S2 in zip(R1.sigmas, R2.sigmas):
        for k in range(D + 1):
            for i in range(n2):
                for j in range(n1):
                    row = {}
                    for a in range(k + 1):
                        b = k - a
                        A1, A2 = S1.coeffs[b], S2.coeffs[b]
                        base = a * blk
                        for q in range(n1):
                            x = A1[q][j]
                            if x:
                                idx = base + i * n1 + q
                                row[idx] = row.get(idx, la.ZERO) + x
                        for q in range(n2):
                            x = A2[i][q]
                            if x:
                                idx = base + q * n1 + j
                                row[idx] = row.get(idx, la.ZERO) - x
                    row = {c: x for c, x in row.items() if x}
                    if row:
                        rows.append(row)
    basis = la.nullspace_from_rows(rows, blk * (D + 1))
    mats = [[la.unvec(v[k * blk:(k + 1) * blk], n2, n1) for k in range(D + 1)] for v in basis]
    return mats, basis


def _valuation_profile(vectors, blk, D):
    prof = []
    for k in range(D + 1):
        # combinations of basis solutions vanishing below order k,
        # projected on their h^k coefficient
        m = len(vectors)
        eqs = []
        for c in range(k * blk):
            row = {idx: vectors[idx][c] for idx in range(m) if vectors[idx][c]}
            if row:
                eqs.append(row)
        combos = la.nullspace_from_rows(eqs, m) if m else []
        lead = []
        for w in combos:
            lead.append([sum((w[idx] * vectors[idx][k * blk + c] for idx in range(m) if w[idx]),
                             la.ZERO) for c in range(blk)])
        prof.append(la.rank(lead) if lead else 0)
    return prof


def hom_infinitesimal(r1: ir.InfRep, r2: ir.InfRep):
    pairs = [(a, b) for a, b in zip(r1.base.gens, r2.base.gens)] + [(r1.tau, r2.tau)]
    return la.intertwiners(pairs, r1.N, r2.N)


def hom_sn(r1: ir.InfRep, r2: ir.InfRep):
    return la.intertwiners(list(zip(r1.base.gens, r2.base.gens)), r1.N, r2.N)


def hom_profile(R1: BraidRep, R2: BraidRep, r1: ir.InfRep, r2: ir.InfRep):
    _, vectors = hom_space(R1, R2)
    blk = R1.N * R2.N
    prof = _valuation_profile(vectors, blk, R1.D)
    return HomProfile(len(vectors), prof, len(hom_infinitesimal(r1, r2)),
                      len(hom_sn(r1, r2)), R1.D)


def abs_irreducible(R: BraidRep, r: ir.InfRep | None = None):
    """Constant terms of R(sigma_i) with h^1 terms of R(xi_ij) generate M_N?

    (R(xi) - 1)/h lies in the K-algebra spanned by R(B_n), and mod h it is
    2 lam t_ij; so for lam != 0 this is the surjectivity of rho.
    """
    N = R.N
    if N == 1:
        return True
    gens = [S.coeffs[0] for S in R.sigmas]
    if R.D >= 1:
        for i in range(1, R.n + 1):
            for j in range(i + 1, R.n + 1):
                gens.append(eval_word(R, xi(i, j)).coeffs[1])
    ok = len(la.algebra_closure(gens, N)) == N * N
    if r is not None and ok != ir.is_surjective(r):
        raise AssertionError("lifted and infinitesimal irreducibility disagree")
    return ok


# -- functoriality helpers -------------------------------------------------------

def tensor_lift(R1: BraidRep, R2: BraidRep):
    return BraidRep(R1.n, [a.kron(b) for a, b in zip(R1.sigmas, R2.sigmas)])


def dual_lift(R: BraidRep):
    return BraidRep(R.n, [S.inverse().transpose() for S in R.sigmas])


def sum_lift(R1: BraidRep, R2: BraidRep):
    return BraidRep(R1.n, [a.block_diag(b) for a, b in zip(R1.sigmas, R2.sigmas)])


def restrict_lift(R: BraidRep, m):
    return BraidRep(m, R.sigmas[:m - 1])


def subs_scale_lift(R: BraidRep, alpha):
    return BraidRep(R.n, [S.subs_scale(alpha) for S in R.sigmas])


def same_lift(R1: BraidRep, R2: BraidRep):
    return R1.n == R2.n and all(a == b for a, b in zip(R1.sigmas, R2.sigmas))


def det_log_linear(R: BraidRep, i=1):
    """h^1 coefficient of log det R(sigma_i) / det R(sigma_i)(0)."""
    d = R.sigmas[i - 1].det()
    d0 = d.coeffs[0]
    return (d * (1 / d0)).log().coeffs[1] if R.D >= 1 else la.ZERO


__all__ = ["BraidWord", "BraidRep", "LiftError", "lift", "eval_word", "xi", "delta", "gamma",
           "delta_identity", "gamma_identity", "first_order_checks", "isometry_check",
           "hensel_conjugate", "hom_space", "hom_profile", "abs_irreducible"]
