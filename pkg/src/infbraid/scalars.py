"""Exact scalars: rationals (gmpy2.mpq) and elements of a quadratic field Q(sqrt d).

Everything downstream only needs ``+ - * /``, equality with 0 and hashing, so
rationals and quadratic elements can be mixed freely as long as a single ``d``
is used inside one computation.
"""

from __future__ import annotations

import re
from fractions import Fraction

from gmpy2 import mpq

__all__ = ["Q", "QuadElem", "sqrt_of", "parse_scalar", "format_scalar", "is_rational",
           "Field", "parse_field"]


def Q(x, y=None):
    """Coerce ``x`` (or ``x/y``) to an exact rational.

    Accepts ints, mpq, Fraction and strings such as ``"-3/4"`` or ``"7"``.
    Floats are refused: they would silently introduce rounding.
    """
    if isinstance(x, float) or isinstance(y, float):
        raise TypeError("floats are not exact scalars")
    if isinstance(x, Fraction):
        x = mpq(x.numerator, x.denominator)
    if isinstance(x, str):
        x = mpq(x.strip())
    if y is None:
        return mpq(x)
    return mpq(x) / mpq(y)


def _squarefree(d: int) -> bool:
    if d in (0, 1):
        return False
    d = abs(d)
    k = 2
    while k * k <= d:
        if d % (k * k) == 0:
            return False
        k += 1
    return True


class QuadElem:
    """The number x + y*sqrt(d) with x, y rational and d a square-free integer."""

    __slots__ = ("x", "y", "d")

    def __init__(self, x, y, d: int):
        if not _squarefree(d):
            raise ValueError(f"d = {d} is not a square-free integer != 0, 1")
        self.x = Q(x)
        self.y = Q(y)
        self.d = int(d)

    # coercion -------------------------------------------------------------
    def _lift(self, other):
        if isinstance(other, QuadElem):
            if other.d != self.d:
                raise ValueError(f"mixing Q(sqrt {self.d}) and Q(sqrt {other.d})")
            return other
        if isinstance(other, (int, type(mpq(0)), Fraction)):
            return QuadElem(other, 0, self.d)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return QuadElem(self.x + o.x, self.y + o.y, self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadElem(-self.x, -self.y, self.d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return QuadElem(self.x - o.x, self.y - o.y, self.d)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return QuadElem(self.x * o.x + self.d * self.y * o.y,
                        self.x * o.y + self.y * o.x, self.d)

    __rmul__ = __mul__

    def norm(self):
        return self.x * self.x - self.d * self.y * self.y

    def conj(self):
        return QuadElem(self.x, -self.y, self.d)

    def inverse(self):
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in quadratic field")
        return QuadElem(self.x / n, -self.y / n, self.d)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = QuadElem(1, 0, self.d)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, QuadElem):
            return (self.d == other.d and self.x == other.x and self.y == other.y)
        if isinstance(other, (int, type(mpq(0)), Fraction)):
            return self.y == 0 and self.x == other
        return NotImplemented

    def __hash__(self):
        if self.y == 0:
            return hash(self.x)
        return hash((self.x, self.y, self.d))

    def __bool__(self):
        return bool(self.x) or bool(self.y)

    def __repr__(self):
        return f"QuadElem({self.x}, {self.y}, {self.d})"

    def __str__(self):
        if self.y == 0:
            return str(self.x)
        return f"{self.x}+{self.y}*sqrt({self.d})"


def sqrt_of(d: int) -> QuadElem:
    return QuadElem(0, 1, d)


def is_rational(z) -> bool:
    return not isinstance(z, QuadElem) or z.y == 0


def rational_part(z):
    """Return z as an mpq, failing loudly if it has an irrational part."""
    if isinstance(z, QuadElem):
        if z.y != 0:
            raise ValueError(f"{z} is not rational")
        return z.x
    return Q(z)


# -- text/JSON encoding -----------------------------------------------------
#
# rationals:   "p/q"            quadratic:   ["x", "y"]   (meaning x + y sqrt d)

def format_scalar(z):
    if isinstance(z, QuadElem):
        if z.y == 0:
            return str(z.x)
        return [str(z.x), str(z.y)]
    return str(Q(z))


_RAT = re.compile(r"^\s*[+-]?\d+(\s*/\s*\d+)?\s*$")


def parse_scalar(obj, d: int | None = None):
    """Inverse of :func:`format_scalar`.  ``d`` is required for pair encodings."""
    if isinstance(obj, (list, tuple)):
        if d is None:
            raise ValueError("quadratic scalar found but no field q-sqrt:<d> declared")
        return QuadElem(parse_scalar(obj[0]), parse_scalar(obj[1]), d)
    if isinstance(obj, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(obj, int):
        return mpq(obj)
    if isinstance(obj, str):
        if not _RAT.match(obj):
            raise ValueError(f"not a rational literal: {obj!r}")
        return mpq(obj.replace(" ", ""))
    raise TypeError(f"cannot parse scalar from {obj!r}")


class Field:
    """Declared ground field: Q (d is None) or Q(sqrt d)."""

    def __init__(self, d: int | None = None):
        if d is not None and not _squarefree(d):
            raise ValueError(f"q-sqrt:{d} needs a square-free d")
        self.d = d

    def __call__(self, x, y=0):
        if self.d is None:
            if y != 0:
                raise ValueError("irrational part in the rational field")
            return Q(x)
        return QuadElem(x, y, self.d)

    def parse(self, obj):
        return parse_scalar(obj, self.d)

    def __eq__(self, other):
        return isinstance(other, Field) and other.d == self.d

    def __hash__(self):
        return hash(self.d)

    def __str__(self):
        return "q" if self.d is None else f"q-sqrt:{self.d}"


def parse_field(text: str) -> Field:
    text = text.strip()
    if text == "q":
        return Field()
    m = re.fullmatch(r"q-sqrt:(-?\d+)", text)
    if not m:
        raise ValueError(f"unknown field declaration {text!r} (use q or q-sqrt:<d>)")
    return Field(int(m.group(1)))
