"""Truncated power series.

* :class:`TruncSeries` -- noncommutative series in a finite alphabet, cut off
  above a fixed degree ``D``.  Words are tuples of letter indices.
* :class:`HSeries` -- commutative series in one variable ``h`` mod ``h^(D+1)``.
* :class:`HMatrix` -- square matrices over that ring, stored as the list of
  their ``h^k`` coefficient matrices.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product as iproduct

from gmpy2 import mpq

from . import linalg as la
from .scalars import Q, format_scalar, parse_scalar

ZERO = la.ZERO
ONE = la.ONE


class DegreeMismatch(ValueError):
    pass


def _check_same(a, b):
    if a.alphabet != b.alphabet:
        raise ValueError(f"alphabets differ: {a.alphabet} vs {b.alphabet}")
    if a.D != b.D:
        raise DegreeMismatch(f"truncation degrees differ: {a.D} vs {b.D}")


def factorial(k):
    out = 1
    for i in range(2, k + 1):
        out *= i
    return out


class TruncSeries:
    """Element of the free algebra on ``alphabet`` modulo words longer than ``D``."""

    __slots__ = ("alphabet", "D", "coeffs")

    def __init__(self, alphabet, D, coeffs=None):
        self.alphabet = tuple(alphabet)
        self.D = int(D)
        if self.D < 0:
            raise ValueError("truncation degree must be >= 0")
        m = len(self.alphabet)
        out = {}
        for w, c in (coeffs or {}).items():
            w = tuple(w)
            if len(w) > self.D or not c:
                continue
            if any(not 0 <= x < m for x in w):
                raise ValueError(f"word {w} uses letters outside the alphabet")
            out[w] = c
        self.coeffs = out

    # constructors ---------------------------------------------------------
    @classmethod
    def one(cls, alphabet, D):
        return cls(alphabet, D, {(): ONE})

    @classmethod
    def zero(cls, alphabet, D):
        return cls(alphabet, D, {})

    @classmethod
    def gen(cls, alphabet, D, name):
        return cls(alphabet, D, {(tuple(alphabet).index(name),): ONE})

    @classmethod
    def from_words(cls, alphabet, D, table):
        """Build from ``{"A.B": c, ...}`` (dot-joined names, "" is the empty word)."""
        alphabet = tuple(alphabet)
        coeffs = {}
        for key, c in table.items():
            w = cls.parse_word(alphabet, key)
            c = c if hasattr(c, "d") else Q(c)
            coeffs[w] = coeffs.get(w, ZERO) + c
        return cls(alphabet, D, coeffs)

    @staticmethod
    def parse_word(alphabet, key):
        if key == "":
            return ()
        return tuple(alphabet.index(x) for x in key.split("."))

    def word_name(self, w):
        return ".".join(self.alphabet[x] for x in w)

    # access ---------------------------------------------------------------
    def coeff(self, word):
        if isinstance(word, str):
            word = self.parse_word(self.alphabet, word)
        return self.coeffs.get(tuple(word), ZERO)

    def constant(self):
        return self.coeffs.get((), ZERO)

    def homogeneous(self, d):
        return TruncSeries(self.alphabet, self.D, {w: c for w, c in self.coeffs.items() if len(w) == d})

    def truncate(self, D):
        return TruncSeries(self.alphabet, D, {w: c for w, c in self.coeffs.items() if len(w) <= D})

    def low_degree(self):
        """Smallest degree carrying a nonzero coefficient (None for 0)."""
        return min((len(w) for w in self.coeffs), default=None)

    def is_zero(self):
        return not self.coeffs

    # arithmetic -----------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, TruncSeries):
            other = TruncSeries.one(self.alphabet, self.D).scale(other)
        _check_same(self, other)
        out = dict(self.coeffs)
        for w, c in other.coeffs.items():
            out[w] = out.get(w, ZERO) + c
        return TruncSeries(self.alphabet, self.D, out)

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries(self.alphabet, self.D, {w: -c for w, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other if isinstance(other, TruncSeries) else -Q(other))

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        if not c:
            return TruncSeries(self.alphabet, self.D)
        return TruncSeries(self.alphabet, self.D, {w: c * x for w, x in self.coeffs.items()})

    def __mul__(self, other):
        if not isinstance(other, TruncSeries):
            return self.scale(other)
        _check_same(self, other)
        D = self.D
        out = {}
        right = sorted(other.coeffs.items(), key=lambda kv: len(kv[0]))
        for u, a in self.coeffs.items():
            room = D - len(u)
            for v, b in right:
                if len(v) > room:
                    break
                w = u + v
                out[w] = out.get(w, ZERO) + a * b
        return TruncSeries(self.alphabet, D, out)

    def __rmul__(self, c):
        return self.scale(c)

    def __pow__(self, k):
        out = TruncSeries.one(self.alphabet, self.D)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return (self.alphabet == other.alphabet and self.D == other.D
                and (self - other).is_zero())

    def __hash__(self):
        return hash((self.alphabet, self.D, frozenset(self.coeffs.items())))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for w in sorted(self.coeffs, key=lambda w: (len(w), w)):
            name = self.word_name(w) or "1"
            terms.append(f"{format_scalar(self.coeffs[w])}*{name}")
        return " + ".join(terms)

    # substitution into another free algebra -------------------------------
    def compose(self, images):
        """Substitute letters by series over a common target alphabet.

        ``images`` maps each letter name to a TruncSeries with zero constant
        term (so the result is well defined mod the target degree).
        """
        first = next(iter(images.values()))
        alph, D = first.alphabet, first.D
        imgs = []
        for name in self.alphabet:
            img = images[name]
            if img.alphabet != alph or img.D != D:
                raise ValueError("images must share alphabet and degree")
            if img.constant():
                raise ValueError(f"image of {name} must have zero constant term")
            imgs.append(img)
        result = {}
        cache = {(): TruncSeries.one(alph, D)}
        for w in sorted(self.coeffs, key=len):
            c = self.coeffs[w]
            P = _prefix_product(cache, w, imgs)
            for u, x in P.coeffs.items():
                result[u] = result.get(u, ZERO) + c * x
        return TruncSeries(alph, D, result)

    # serialisation ---------------------------------------------------------
    def to_json(self):
        return {"alphabet": list(self.alphabet), "degree": self.D,
                "coeffs": {self.word_name(w): format_scalar(c)
                           for w, c in sorted(self.coeffs.items(), key=lambda kv: (len(kv[0]), kv[0]))}}

    @classmethod
    def from_json(cls, obj, d=None):
        alphabet = tuple(obj["alphabet"])
        coeffs = {}
        for key, c in obj["coeffs"].items():
            coeffs[cls.parse_word(alphabet, key)] = parse_scalar(c, d)
        return cls(alphabet, int(obj["degree"]), coeffs)


def _prefix_product(cache, w, imgs):
    if w in cache:
        return cache[w]
    P = _prefix_product(cache, w[:-1], imgs) * imgs[w[-1]]
    cache[w] = P
    return P


def bracket(x, y):
    return x * y - y * x


def series_exp(S):
    """exp(S) truncated, for S with zero constant term."""
    if S.constant():
        raise ValueError("series_exp needs a zero constant term")
    out = TruncSeries.one(S.alphabet, S.D)
    term = TruncSeries.one(S.alphabet, S.D)
    for k in range(1, S.D + 1):
        term = (term * S).scale(Q(1, k))
        if term.is_zero():
            break
        out = out + term
    return out


def series_log(S):
    """log(S) truncated, for S with constant term 1."""
    if S.constant() != 1:
        raise ValueError("series_log needs constant term 1")
    X = S - 1
    out = TruncSeries.zero(S.alphabet, S.D)
    power = TruncSeries.one(S.alphabet, S.D)
    for k in range(1, S.D + 1):
        power = power * X
        if power.is_zero():
            break
        out = out + power.scale(Q((-1) ** (k + 1), k))
    return out


@lru_cache(maxsize=None)
def shuffle(u, v):
    """Shuffle product of two words as a dict word -> multiplicity."""
    if not u:
        return {v: 1}
    if not v:
        return {u: 1}
    out = {}
    for w, k in shuffle(u[1:], v).items():
        key = (u[0],) + w
        out[key] = out.get(key, 0) + k
    for w, k in shuffle(u, v[1:]).items():
        key = (v[0],) + w
        out[key] = out.get(key, 0) + k
    return out


def shuffle_defects(S):
    """Pairs (u, v) violating <S, u sh v> = <S,u><S,v>, with the defect value."""
    m = len(S.alphabet)
    words = [w for k in range(1, S.D) for w in iproduct(range(m), repeat=k)]
    out = []
    for i, u in enumerate(words):
        for v in words[i:]:
            if len(u) + len(v) > S.D:
                continue
            lhs = ZERO
            for w, k in shuffle(u, v).items():
                c = S.coeffs.get(w)
                if c:
                    lhs = lhs + k * c
            rhs = S.coeff(u) * S.coeff(v)
            if lhs != rhs:
                out.append((u, v, lhs - rhs))
    return out


def is_grouplike(S):
    if S.constant() != 1:
        raise ValueError("is_grouplike needs constant term 1")
    return not shuffle_defects(S)


# -- commutative series in h -------------------------------------------------

class HSeries:
    """c_0 + c_1 h + ... + c_D h^D."""

    __slots__ = ("coeffs", "D")

    def __init__(self, coeffs, D):
        c = list(coeffs)[:D + 1]
        self.coeffs = c + [ZERO] * (D + 1 - len(c))
        self.D = D

    @classmethod
    def const(cls, c, D):
        return cls([c], D)

    def _lift(self, other):
        if isinstance(other, HSeries):
            if other.D != self.D:
                raise DegreeMismatch(f"{self.D} vs {other.D}")
            return other
        return HSeries([other], self.D)

    def __add__(self, other):
        o = self._lift(other)
        return HSeries([a + b for a, b in zip(self.coeffs, o.coeffs)], self.D)

    __radd__ = __add__

    def __neg__(self):
        return HSeries([-a for a in self.coeffs], self.D)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        D = self.D
        out = [ZERO] * (D + 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j in range(D + 1 - i):
                    b = o.coeffs[j]
                    if b:
                        out[i + j] = out[i + j] + a * b
        return HSeries(out, D)

    __rmul__ = __mul__

    def inverse(self):
        a0 = self.coeffs[0]
        if not a0:
            raise ZeroDivisionError("constant term is zero")
        b = [1 / a0]
        for k in range(1, self.D + 1):
            s = ZERO
            for i in range(1, k + 1):
                s = s + self.coeffs[i] * b[k - i]
            b.append(-s / a0)
        return HSeries(b, self.D)

    def __truediv__(self, other):
        return self * self._lift(other).inverse()

    def eps(self):
        return HSeries([c if k % 2 == 0 else -c for k, c in enumerate(self.coeffs)], self.D)

    def exp(self):
        if self.coeffs[0]:
            raise ValueError("exp needs zero constant term")
        out = HSeries([ONE], self.D)
        term = HSeries([ONE], self.D)
        for k in range(1, self.D + 1):
            term = term * self * Q(1, k)
            out = out + term
        return out

    def log(self):
        if self.coeffs[0] != 1:
            raise ValueError("log needs constant term 1")
        x = self - 1
        out = HSeries([], self.D)
        p = HSeries([ONE], self.D)
        for k in range(1, self.D + 1):
            p = p * x
            out = out + p * Q((-1) ** (k + 1), k)
        return out

    def __eq__(self, other):
        o = self._lift(other)
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash(tuple(self.coeffs))

    def __repr__(self):
        return " + ".join(f"{format_scalar(c)}*h^{k}" for k, c in enumerate(self.coeffs) if c) or "0"


def exp_scalar_series(c, D):
    """exp(c h) as an HSeries."""
    return HSeries([c ** k / factorial(k) for k in range(D + 1)], D)


# -- matrices over the truncated ring -----------------------------------------

class HMatrix:
    """N x N matrix with entries in k[h]/(h^(D+1)); ``coeffs[k]`` is the h^k part."""

    __slots__ = ("N", "D", "coeffs")

    def __init__(self, coeffs, D=None):
        coeffs = list(coeffs)
        if D is None:
            D = len(coeffs) - 1
        self.D = D
        self.N = len(coeffs[0]) if coeffs else 0
        N = self.N
        for M in coeffs:
            if la.shape(M) != (N, N):
                raise ValueError("coefficient matrices must be N x N")
        self.coeffs = coeffs[:D + 1] + [la.zeros(N) for _ in range(D + 1 - len(coeffs))]

    @classmethod
    def constant(cls, M, D):
        return cls([M], D)

    @classmethod
    def identity(cls, N, D):
        return cls([la.identity(N)], D)

    def _check(self, other):
        if other.D != self.D:
            raise DegreeMismatch(f"truncation degrees differ: {self.D} vs {other.D}")
        if other.N != self.N:
            raise ValueError(f"dimensions differ: {self.N} vs {other.N}")

    def __add__(self, other):
        self._check(other)
        return HMatrix([la.mat_add(a, b) for a, b in zip(self.coeffs, other.coeffs)], self.D)

    def __sub__(self, other):
        self._check(other)
        return HMatrix([la.mat_sub(a, b) for a, b in zip(self.coeffs, other.coeffs)], self.D)

    def __neg__(self):
        return HMatrix([la.mat_neg(a) for a in self.coeffs], self.D)

    def scale(self, c):
        return HMatrix([la.mat_scale(c, a) for a in self.coeffs], self.D)

    def mul_shift(self, other, shift=0):
        """self * other * h^shift, truncated."""
        self._check(other)
        D = self.D
        out = [None] * (D + 1)
        for i, A in enumerate(self.coeffs):
            if la.is_zero_matrix(A):
                continue
            for j in range(D + 1 - i - shift):
                B = other.coeffs[j]
                if la.is_zero_matrix(B):
                    continue
                P = la.mat_mul(A, B)
                k = i + j + shift
                out[k] = P if out[k] is None else la.mat_add(out[k], P)
        N = self.N
        return HMatrix([M if M is not None else la.zeros(N) for M in out], D)

    def __mul__(self, other):
        if isinstance(other, HMatrix):
            return self.mul_shift(other)
        return self.scale(other)

    def __rmul__(self, c):
        return self.scale(c)

    def shift(self, k):
        """Multiply by h^k."""
        N = self.N
        return HMatrix([la.zeros(N)] * k + self.coeffs[:self.D + 1 - k], self.D)

    def inverse(self):
        A0inv = la.inverse(self.coeffs[0])
        B = [A0inv]
        for k in range(1, self.D + 1):
            S = la.zeros(self.N)
            for i in range(1, k + 1):
                if not la.is_zero_matrix(self.coeffs[i]):
                    S = la.mat_add(S, la.mat_mul(self.coeffs[i], B[k - i]))
            B.append(la.mat_neg(la.mat_mul(A0inv, S)))
        return HMatrix(B, self.D)

    def eps(self):
        return HMatrix([a if k % 2 == 0 else la.mat_neg(a) for k, a in enumerate(self.coeffs)], self.D)

    def subs_scale(self, alpha):
        """Apply h -> alpha h coefficientwise."""
        return HMatrix([la.mat_scale(alpha ** k, a) for k, a in enumerate(self.coeffs)], self.D)

    def transpose(self):
        return HMatrix([la.transpose(a) for a in self.coeffs], self.D)

    def kron(self, other):
        if other.D != self.D:
            raise DegreeMismatch(f"{self.D} vs {other.D}")
        D = self.D
        out = [None] * (D + 1)
        for i, A in enumerate(self.coeffs):
            if la.is_zero_matrix(A):
                continue
            for j in range(D + 1 - i):
                B = other.coeffs[j]
                if la.is_zero_matrix(B):
                    continue
                P = la.kron(A, B)
                out[i + j] = P if out[i + j] is None else la.mat_add(out[i + j], P)
        N = self.N * other.N
        return HMatrix([M if M is not None else la.zeros(N) for M in out], D)

    def block_diag(self, other):
        return HMatrix([la.block_diag(a, b) for a, b in zip(self.coeffs, other.coeffs)], self.D)

    def entry(self, i, j):
        return HSeries([a[i][j] for a in self.coeffs], self.D)

    def is_zero(self):
        return all(la.is_zero_matrix(a) for a in self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, HMatrix):
            return NotImplemented
        return self.D == other.D and self.N == other.N and all(
            la.mat_equal(a, b) for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash((self.N, self.D, tuple(tuple(map(tuple, a)) for a in self.coeffs)))

    def nonzero_orders(self):
        return [k for k, a in enumerate(self.coeffs) if not la.is_zero_matrix(a)]

    def det(self):
        """Determinant as an HSeries (Gaussian elimination with unit pivots)."""
        N, D = self.N, self.D
        M = [[self.entry(i, j) for j in range(N)] for i in range(N)]
        d = HSeries([ONE], D)
        for c in range(N):
            p = next((i for i in range(c, N) if M[i][c].coeffs[0]), None)
            if p is None:
                raise ZeroDivisionError("constant term is singular; det needs a unit pivot")
            if p != c:
                M[c], M[p] = M[p], M[c]
                d = -d
            piv = M[c][c]
            d = d * piv
            inv = piv.inverse()
            for i in range(c + 1, N):
                f = M[i][c] * inv
                if any(f.coeffs):
                    M[i] = [a - f * b for a, b in zip(M[i], M[c])]
        return d

    def to_json(self):
        return {"N": self.N, "degree": self.D,
                "coeffs": [[[format_scalar(x) for x in row] for row in a] for a in self.coeffs]}

    @classmethod
    def from_json(cls, obj, d=None):
        coeffs = [[[parse_scalar(x, d) for x in row] for row in a] for a in obj["coeffs"]]
        return cls(coeffs, int(obj["degree"]))


def hexp(X, D, c=ONE, order=1):
    """exp(c h^order X) for a constant matrix X, as an HMatrix mod h^(D+1)."""
    N = len(X)
    c = c if hasattr(c, "d") else Q(c)
    coeffs = [la.zeros(N) for _ in range(D + 1)]
    coeffs[0] = la.identity(N)
    P = la.identity(N)
    k = 1
    while k * order <= D:
        P = la.mat_scale(c / k, la.mat_mul(P, X))
        coeffs[k * order] = la.mat_add(coeffs[k * order], P)
        k += 1
    return HMatrix(coeffs, D)


def hmatrix_exp(M):
    """exp(M) for an HMatrix with zero constant term."""
    if not la.is_zero_matrix(M.coeffs[0]):
        raise ValueError("hmatrix_exp needs zero constant term")
    out = HMatrix.identity(M.N, M.D)
    term = HMatrix.identity(M.N, M.D)
    for k in range(1, M.D + 1):
        term = (term * M).scale(Q(1, k))
        out = out + term
    return out


def substitute(S, images, hgrade=None):
    """Evaluate the noncommutative series S on HMatrix images.

    Returns sum_w <S,w> h^(sum of hgrades along w) * (product of images along w).
    """
    names = S.alphabet
    imgs = [images[x] for x in names]
    if not imgs:
        raise ValueError("no images given")
    N, D = imgs[0].N, imgs[0].D
    for x, M in zip(names, imgs):
        if M.N != N:
            raise ValueError(f"image of {x} has dimension {M.N}, expected {N}")
        if M.D != D:
            raise DegreeMismatch(f"image of {x} has degree {M.D}, expected {D}")
    grades = [1] * len(names) if hgrade is None else [
        hgrade[x] if isinstance(hgrade, dict) else hgrade for x in names]
    for idx, (x, g, M) in enumerate(zip(names, grades, imgs)):
        if g < 0:
            raise ValueError("h-exponents must be non-negative")
        if g == 0 and not la.is_zero_matrix(M.coeffs[0]) and any(idx in w for w in S.coeffs):
            raise ValueError(f"generator {x} has h-exponent 0 and an invertible-order image; "
                             "the sum would depend on the truncation of S")
    result = HMatrix([la.zeros(N)], D)
    cache = {(): HMatrix.identity(N, D)}

    def prefix(w):
        if w not in cache:
            cache[w] = prefix(w[:-1]).mul_shift(imgs[w[-1]], grades[w[-1]])
        return cache[w]

    for w in sorted(S.coeffs, key=len):
        if sum(grades[x] for x in w) > D:
            continue
        result = result + prefix(w).scale(S.coeffs[w])
    return result
