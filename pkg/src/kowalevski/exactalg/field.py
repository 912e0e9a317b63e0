"""Exact scalars: arbitrary-precision rationals with one optional adjoined square root.

An element is ``rat + rad*sqrt(d)`` with ``rat``, ``rad`` rational and ``d`` a
squarefree integer >= 1 (``d == 1`` means the element is plain rational).
Elements sharing a radicand form a field; mixing two distinct radicands != 1
raises :class:`MixedRadicands` instead of silently building a biquadratic field.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Union

Rat = Union[int, Fraction]


class MixedRadicands(ValueError):
    """Arithmetic attempted between elements of Q(sqrt(d1)) and Q(sqrt(d2)), d1 != d2."""


class DivisionByZero(ZeroDivisionError):
    pass


def squarefree_decompose(n: int) -> tuple[int, int]:
    """Return ``(m, s)`` with ``n = m * s**2`` and ``m`` squarefree (n > 0)."""
    if n <= 0:
        raise ValueError("radicand must be positive")
    m, s, f = n, 1, 2
    while f * f <= m:
        while m % (f * f) == 0:
            m //= f * f
            s *= f
        f += 1
    return m, s


class FieldElem:
    """Element of Q or of a real quadratic field Q(sqrt(d))."""

    __slots__ = ("rat", "rad", "d")

    def __init__(self, rat: Rat = 0, rad: Rat = 0, d: int = 1):
        rat = Fraction(rat)
        rad = Fraction(rad)
        if d < 1:
            raise ValueError("radicand must be >= 1 (adjoin i etc. via rewrite variables)")
        if d != 1:
            m, s = squarefree_decompose(d)
            if m == 1:
                rat += rad * s
                rad = Fraction(0)
                d = 1
            else:
                rad *= s
                d = m
        if not rad:
            rad = Fraction(0)
            d = 1
        self.rat = rat
        self.rad = rad
        self.d = d

    # -- helpers -----------------------------------------------------------
    @staticmethod
    def coerce(x) -> "FieldElem":
        if isinstance(x, FieldElem):
            return x
        if isinstance(x, (int, Fraction)):
            return FieldElem(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to FieldElem")

    def _join(self, other: "FieldElem") -> int:
        """Common radicand of two operands, or raise MixedRadicands."""
        if self.d == other.d:
            return self.d
        if self.d == 1:
            return other.d
        if other.d == 1:
            return self.d
        raise MixedRadicands(f"sqrt({self.d}) vs sqrt({other.d})")

    # -- predicates --------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.rat and not self.rad

    def is_rational(self) -> bool:
        return not self.rad

    def is_integer(self) -> bool:
        return not self.rad and self.rat.denominator == 1

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- arithmetic --------------------------------------------------------
    def __add__(self, other):
        try:
            o = FieldElem.coerce(other)
        except TypeError:
            return NotImplemented
        d = self._join(o)
        return FieldElem(self.rat + o.rat, self.rad + o.rad, d)

    __radd__ = __add__

    def __neg__(self):
        return FieldElem(-self.rat, -self.rad, self.d)

    def __sub__(self, other):
        try:
            o = FieldElem.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return FieldElem.coerce(other) - self

    def __mul__(self, other):
        try:
            o = FieldElem.coerce(other)
        except TypeError:
            return NotImplemented
        d = self._join(o)
        return FieldElem(
            self.rat * o.rat + d * self.rad * o.rad,
            self.rat * o.rad + self.rad * o.rat,
            d,
        )

    __rmul__ = __mul__

    def inverse(self) -> "FieldElem":
        if self.is_zero():
            raise DivisionByZero("inverse of 0")
        n = self.rat * self.rat - self.d * self.rad * self.rad
        # n == 0 would mean sqrt(d) rational, impossible for squarefree d > 1
        return FieldElem(self.rat / n, -self.rad / n, self.d)

    def __truediv__(self, other):
        try:
            o = FieldElem.coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return FieldElem.coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = FieldElem(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conj(self) -> "FieldElem":
        """Galois conjugate a + b*sqrt(d) -> a - b*sqrt(d)."""
        return FieldElem(self.rat, -self.rad, self.d)

    def norm(self) -> Fraction:
        """Field norm to Q: self * self.conj()."""
        return self.rat * self.rat - self.d * self.rad * self.rad

    def sqrt(self) -> "FieldElem | None":
        """Exact square root within Q(sqrt(d)) (or an extension of Q), else None."""
        if self.is_zero():
            return FieldElem(0)
        if self.is_rational():
            r = self.rat
            if r < 0:
                return None
            m, s = squarefree_decompose(r.numerator * r.denominator)
            root = Fraction(s, r.denominator)
            if m == 1:
                return FieldElem(root)
            if self.d in (1, m):
                return FieldElem(0, root, m)
            return None
        # solve (x + y*sqrt(d))^2 = rat + rad*sqrt(d)
        t2 = self.norm()
        if t2 < 0:
            return None
        t = _rational_sqrt(t2)
        if t is None:
            return None
        for sign in (1, -1):
            x2 = (self.rat + sign * t) / 2
            if x2 < 0:
                continue
            x = _rational_sqrt(x2)
            if x is not None and x != 0:
                y = self.rad / (2 * x)
                cand = FieldElem(x, y, self.d)
                if cand * cand == self:
                    return cand
        return None

    # -- comparisons & misc --------------------------------------------------
    def __eq__(self, other):
        try:
            o = FieldElem.coerce(other)
        except TypeError:
            return NotImplemented
        if self.rad or o.rad:
            try:
                d = self._join(o)
            except MixedRadicands:
                return False
            return self.rat == o.rat and self.rad == o.rad and d == d
        return self.rat == o.rat

    def __hash__(self):
        if not self.rad:
            return hash(self.rat)
        return hash((self.rat, self.rad, self.d))

    def __float__(self) -> float:
        return float(self.rat) + float(self.rad) * self.d ** 0.5

    def sign_key(self) -> float:
        return float(self)

    # -- text form -----------------------------------------------------------
    def __repr__(self):
        return f"FieldElem({self})"

    def __str__(self):
        if not self.rad:
            return str(self.rat)
        parts = []
        if self.rat:
            parts.append(str(self.rat))
        coef = "" if self.rad == 1 else ("-" if self.rad == -1 else f"{self.rad}*")
        term = f"{coef}sqrt({self.d})"
        if parts and self.rad > 0:
            return f"{parts[0]} + {term}" if self.rad != 1 else f"{parts[0]} + sqrt({self.d})"
        if parts and self.rad < 0:
            mag = -self.rad
            t = f"sqrt({self.d})" if mag == 1 else f"{mag}*sqrt({self.d})"
            return f"{parts[0]} - {t}"
        return term

    _TOKEN = re.compile(
        r"^\s*(?P<sign>[+-]?)\s*(?:(?P<coef>\d+(?:/\d+)?)\s*\*?\s*)?"
        r"(?:(?P<sqrt>sqrt\((?P<d>\d+)\)))?\s*"
    )

    @staticmethod
    def parse(text: str) -> "FieldElem":
        """Parse ``"a/b"`` or ``"a/b + c/d*sqrt(D)"`` (signs and spaces optional)."""
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty FieldElem literal")
        out = FieldElem(0)
        pos = 0
        while pos < len(s):
            m = re.match(r"([+-]?)((\d+(?:/\d+)?)\*?)?(sqrt\((\d+)\))?", s[pos:])
            if not m or m.end() == 0:
                raise ValueError(f"cannot parse FieldElem from {text!r} at {s[pos:]!r}")
            sign = -1 if m.group(1) == "-" else 1
            coef = Fraction(m.group(3)) if m.group(3) else Fraction(1)
            if m.group(4):
                out = out + FieldElem(0, sign * coef, int(m.group(5)))
            else:
                if not m.group(3):
                    raise ValueError(f"cannot parse FieldElem from {text!r}")
                out = out + FieldElem(sign * coef)
            pos += m.end()
        return out


def _rational_sqrt(r: Fraction) -> Fraction | None:
    if r < 0:
        return None
    m, s = squarefree_decompose(r.numerator * r.denominator) if r else (1, 0)
    if r == 0:
        return Fraction(0)
    if m != 1:
        return None
    return Fraction(s, r.denominator)


ZERO = FieldElem(0)
ONE = FieldElem(1)
