"""Rational Drinfeld associators, solved and verified degree by degree.

Phi = exp(Psi) with Psi a Lie series in A, B written in the Lyndon basis.
At each degree d the four defining equations are affine in the unknown
homogeneous part Psi_d, because every other factor starts with 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from . import linalg as la
from .quotient import build_ut4, central_quotient, t_alphabet
from .scalars import Q, format_scalar, parse_scalar
from .series import (TruncSeries, bracket, is_grouplike, series_exp, series_log,
                     shuffle_defects)

AB = ("A", "B")
SOLVER_VERSION = "lyndon-zero-free-1"


# -- Lyndon basis --------------------------------------------------------------

def lyndon_words(k, d):
    """Lyndon words of length d over range(k), by Duval's algorithm."""
    out = []
    w = [-1]
    while w:
        w[-1] += 1
        m = len(w)
        if m == d:
            out.append(tuple(w))
        while len(w) < d:
            w.append(w[len(w) - m])
        while w and w[-1] == k - 1:
            w.pop()
    return out


def standard_factorization(w):
    """w = u v with v the longest proper Lyndon suffix."""
    for i in range(1, len(w)):
        v = w[i:]
        if _is_lyndon(v):
            return w[:i], v
    raise ValueError(f"{w} has no proper Lyndon suffix")


def _is_lyndon(w):
    return all(w < w[i:] + w[:i] for i in range(1, len(w)))


def lyndon_bracket(w, alphabet, D):
    if len(w) == 1:
        return TruncSeries(alphabet, D, {w: la.ONE})
    u, v = standard_factorization(w)
    return bracket(lyndon_bracket(u, alphabet, D), lyndon_bracket(v, alphabet, D))


# -- the associator value type -------------------------------------------------

@dataclass
class Associator:
    lam: object
    D: int
    phi: TruncSeries
    even: bool = False
    alpha: object = None
    meta: dict = field(default_factory=dict)

    @property
    def psi(self):
        return series_log(self.phi)

    def to_json(self):
        out = self.phi.to_json()
        out.update({"lambda": format_scalar(self.lam), "even": bool(self.even),
                    "solver_version": SOLVER_VERSION})
        if self.alpha is not None:
            out["alpha"] = format_scalar(self.alpha)
        return out

    @classmethod
    def from_json(cls, obj, d=None):
        phi = TruncSeries.from_json(obj, d)
        if phi.alphabet != AB:
            raise ValueError("an associator lives on the alphabet (A, B)")
        alpha = parse_scalar(obj["alpha"], d) if "alpha" in obj else None
        return cls(parse_scalar(obj["lambda"], d), phi.D, phi, bool(obj.get("even", False)), alpha)

    def rescale(self, mu):
        """Phi(mu A, mu B), an associator for lambda * mu."""
        mu = Q(mu)
        phi = TruncSeries(AB, self.D, {w: c * mu ** len(w) for w, c in self.phi.coeffs.items()})
        return Associator(self.lam * mu, self.D, phi, self.even,
                          None if self.alpha is None else self.alpha * mu ** 3)


def taylor3(lam, alpha):
    """1 + lam^2/6 [A,B] + alpha([A,[A,B]] - [B,[B,A]]) at D = 3."""
    lam, alpha = Q(lam), Q(alpha)
    A = TruncSeries.gen(AB, 3, "A")
    B = TruncSeries.gen(AB, 3, "B")
    psi = bracket(A, B).scale(lam * lam / 6) + \
        (bracket(A, bracket(A, B)) - bracket(B, bracket(B, A))).scale(alpha)
    return Associator(lam, 3, series_exp(psi), even=not alpha, alpha=alpha)


def trivial(D, lam=0):
    return Associator(Q(lam), D, TruncSeries.one(AB, D), even=True)


# -- the four equations as functions of a candidate Phi -------------------------

def _gens(alphabet, D):
    return {x: TruncSeries.gen(alphabet, D, x) for x in alphabet}


def inverse_residual(phi):
    D = phi.D
    g = _gens(AB, D)
    swapped = phi.compose({"A": g["B"], "B": g["A"]})
    return swapped * phi - 1


def hexagon_residual(phi, lam, central=False):
    """e^{lam A} Phi(C,A) e^{lam C} Phi(B,C) e^{lam B} Phi(A,B) - 1 with C = -A-B.

    With ``central`` the computation runs on (A, B, Z) with C = Z - A - B and
    the right-hand side e^{lam Z}; the caller reduces modulo Z central.
    """
    D = phi.D
    alph = ("A", "B", "Z") if central else AB
    g = _gens(alph, D)
    A, B = g["A"], g["B"]
    C = -A - B + (g["Z"] if central else 0)
    lam = Q(lam) if not hasattr(lam, "d") else lam
    e = lambda X: series_exp(X.scale(lam)) if lam else TruncSeries.one(alph, D)
    ph = lambda X, Y: phi.compose({"A": X, "B": Y})
    lhs = e(A) * ph(C, A) * e(C) * ph(B, C) * e(B) * ph(A, B)
    rhs = e(g["Z"]) if central else TruncSeries.one(alph, D)
    return lhs - rhs


def pentagon_sides(phi, D=None):
    D = phi.D if D is None else D
    t = _gens(t_alphabet(4), D)
    ph = lambda X, Y: phi.truncate(D).compose({"A": X, "B": Y})
    lhs = ph(t["t12"], t["t23"] + t["t24"]) * ph(t["t13"] + t["t23"], t["t34"])
    rhs = ph(t["t23"], t["t34"]) * ph(t["t12"] + t["t13"], t["t24"] + t["t34"]) * ph(t["t12"], t["t23"])
    return lhs, rhs


def pentagon_residual(phi, U=None):
    lhs, rhs = pentagon_sides(phi)
    U = U or _ut4(phi.D)
    return U.reduce(lhs - rhs)


@lru_cache(maxsize=None)
def _ut4(D):
    return build_ut4(D)


@lru_cache(maxsize=None)
def _central(D):
    return central_quotient(D)


def central_shift_residual(phi):
    """Phi(A+Z, B) - Phi(A, B) and its two companions, modulo Z central."""
    D = phi.D
    g = _gens(("A", "B", "Z"), D)
    A, B, Z = g["A"], g["B"], g["Z"]
    base = phi.compose({"A": A, "B": B})
    Q3 = _central(D)
    out = {}
    for name, (X, Y) in {"A+Z,B": (A + Z, B), "A,B+Z": (A, B + Z),
                         "A+Z,B+Z": (A + Z, B + Z)}.items():
        r = Q3.reduce(phi.compose({"A": X, "B": Y}) - base)
        if r:
            out[name] = r
    return out


@dataclass
class VerifyReport:
    grouplike: list
    inverse: TruncSeries
    hexagon: TruncSeries
    pentagon: dict
    central_shift: dict

    @property
    def ok(self):
        return (not self.grouplike and self.inverse.is_zero() and self.hexagon.is_zero()
                and not self.pentagon and not self.central_shift)

    def summary(self):
        return {"grouplike": not self.grouplike, "inverse": self.inverse.is_zero(),
                "hexagon": self.hexagon.is_zero(), "pentagon": not self.pentagon,
                "central_shift": not self.central_shift}

    def first_failure(self):
        for name, zero in self.summary().items():
            if not zero:
                return name
        return None


def verify(assoc: Associator, D=None):
    phi = assoc.phi if D is None else assoc.phi.truncate(D)
    if phi.constant() != 1:
        raise ValueError("an associator has constant term 1")
    return VerifyReport(
        grouplike=shuffle_defects(phi),
        inverse=inverse_residual(phi),
        hexagon=hexagon_residual(phi, assoc.lam),
        pentagon=pentagon_residual(phi),
        central_shift=central_shift_residual(phi),
    )


# -- degree-by-degree solver -----------------------------------------------------

def _homog(S, d):
    return {w: c for w, c in S.coeffs.items() if len(w) == d}


def _add_equations(rows, rhs, lin_parts, const_part):
    """Append equations sum_k x_k lin_k[key] = -const[key] for every key."""
    keys = set(const_part)
    for lin in lin_parts:
        keys.update(lin)
    for key in sorted(keys):
        row = {k: lin[key] for k, lin in enumerate(lin_parts) if lin.get(key)}
        c = const_part.get(key, la.ZERO)
        if not row:
            if c:
                raise la.InconsistentSystem(f"equation at {key} has no unknowns but constant {c}")
            continue
        rows.append(row)
        rhs.append(-c)


def solve(lam, D, even=True):
    """Solve for Psi degree by degree; free parameters are set to 0."""
    lam = Q(lam)
    if D > 6:
        raise ValueError("solve supports D <= 6")
    psi = TruncSeries.zero(AB, D)
    for d in range(1, D + 1):
        U = _ut4(d) if d >= 1 else None
        basis = [lyndon_bracket(w, AB, d) for w in lyndon_words(2, d)]
        if even and d % 2 == 1:
            basis = []
        phi0 = series_exp(psi.truncate(d))
        rows, rhs = [], []
        # inverse relation
        lin = [_homog(inverse_linear(L), d) for L in basis]
        _add_equations(rows, rhs, lin, _homog(inverse_residual(phi0), d))
        # hexagon
        lin = [_homog(hexagon_linear(L), d) for L in basis]
        _add_equations(rows, rhs, lin, _homog(hexagon_residual(phi0, lam), d))
        # pentagon, in U T_4
        lin = [U.reduce_homogeneous(d, _homog(pentagon_linear(L), d)) for L in basis]
        lhs, rhs_side = pentagon_sides(phi0)
        const = U.reduce_homogeneous(d, _homog(lhs - rhs_side, d))
        _add_equations(rows, rhs, lin, const)
        if basis:
            x = la.solve_sparse(rows, rhs, len(basis))
            for c, L in zip(x, basis):
                if c:
                    psi = psi + TruncSeries(AB, D, L.coeffs).scale(c)
    return Associator(lam, D, series_exp(psi), even=even)


def inverse_linear(L):
    g = _gens(AB, L.D)
    return L.compose({"A": g["B"], "B": g["A"]}) + L


def hexagon_linear(L):
    g = _gens(AB, L.D)
    A, B = g["A"], g["B"]
    C = -A - B
    ph = lambda X, Y: L.compose({"A": X, "B": Y})
    return ph(C, A) + ph(B, C) + ph(A, B)


def pentagon_linear(L):
    t = _gens(t_alphabet(4), L.D)
    ph = lambda X, Y: L.compose({"A": X, "B": Y})
    return (ph(t["t12"], t["t23"] + t["t24"]) + ph(t["t13"] + t["t23"], t["t34"])
            - ph(t["t23"], t["t34"]) - ph(t["t12"] + t["t13"], t["t24"] + t["t34"])
            - ph(t["t12"], t["t23"]))


def degree3_alpha(assoc: Associator):
    """The alpha of the degree-3 expansion, read off as the coefficient of AAB."""
    return assoc.phi.coeff((0, 0, 1)) if assoc.D >= 3 else Q(0)


def is_even(assoc: Associator):
    return all(not c for w, c in assoc.phi.coeffs.items() if len(w) % 2)


__all__ = ["Associator", "taylor3", "trivial", "solve", "verify", "lyndon_words",
           "lyndon_bracket", "is_grouplike", "degree3_alpha", "is_even"]
