"""Small exact matrices over FieldElem (or MPoly/RatFunc entries for parametric work)."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .field import FieldElem, ZERO, ONE
from .poly import MPoly, RatFunc


class SingularMatrix(ArithmeticError):
    pass


class SqMatrix:
    """Square matrix; entries FieldElem unless constructed with ring entries."""

    __slots__ = ("n", "rows")

    def __init__(self, rows: Sequence[Sequence]):
        self.rows = [list(r) for r in rows]
        self.n = len(self.rows)
        for r in self.rows:
            if len(r) != self.n:
                raise ValueError("matrix must be square")

    @classmethod
    def identity(cls, n: int) -> "SqMatrix":
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, entries: Sequence) -> "SqMatrix":
        n = len(entries)
        return cls([[entries[i] if i == j else ZERO for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __add__(self, other: "SqMatrix") -> "SqMatrix":
        return SqMatrix([[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)])

    def __sub__(self, other: "SqMatrix") -> "SqMatrix":
        return SqMatrix([[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)])

    def __neg__(self) -> "SqMatrix":
        return SqMatrix([[-a for a in r] for r in self.rows])

    def __mul__(self, other):
        if isinstance(other, SqMatrix):
            n = self.n
            return SqMatrix(
                [
                    [sum((self.rows[i][k] * other.rows[k][j] for k in range(n)), start=ZERO * self.rows[i][0]) for j in range(n)]
                    for i in range(n)
                ]
            )
        return SqMatrix([[a * other for a in r] for r in self.rows])

    def apply(self, vec: Sequence) -> list:
        return [sum((self.rows[i][j] * vec[j] for j in range(self.n)), start=self.rows[i][0] * 0) for i in range(self.n)]

    def trace(self):
        t = self.rows[0][0]
        for i in range(1, self.n):
            t = t + self.rows[i][i]
        return t

    def det(self):
        """Exact determinant by fraction-free elimination (field entries: plain Gauss)."""
        m = [row[:] for row in self.rows]
        n = self.n
        sign = 1
        det = None
        if n == 1:
            return m[0][0]
        if isinstance(m[0][0], (FieldElem, int, Fraction)):
            acc = ONE
            for k in range(n):
                piv = None
                for i in range(k, n):
                    if FieldElem.coerce(m[i][k]):
                        piv = i
                        break
                if piv is None:
                    return ZERO
                if piv != k:
                    m[k], m[piv] = m[piv], m[k]
                    sign = -sign
                pk = FieldElem.coerce(m[k][k])
                acc = acc * pk
                inv = pk.inverse()
                for i in range(k + 1, n):
                    f = FieldElem.coerce(m[i][k]) * inv
                    if f:
                        for j in range(k, n):
                            m[i][j] = FieldElem.coerce(m[i][j]) - f * FieldElem.coerce(m[k][j])
            return acc if sign > 0 else -acc
        from .poly import _bareiss_det
        det = _bareiss_det(m)
        return det if sign > 0 else -det

    def inverse(self) -> "SqMatrix":
        """Inverse over the field (FieldElem entries only)."""
        n = self.n
        m = [[FieldElem.coerce(v) for v in row] + [ONE if i == j else ZERO for j in range(n)] for i, row in enumerate(self.rows)]
        for k in range(n):
            piv = None
            for i in range(k, n):
                if m[i][k]:
                    piv = i
                    break
            if piv is None:
                raise SingularMatrix("matrix not invertible")
            m[k], m[piv] = m[piv], m[k]
            inv = m[k][k].inverse()
            m[k] = [v * inv for v in m[k]]
            for i in range(n):
                if i != k and m[i][k]:
                    f = m[i][k]
                    m[i] = [a - f * b for a, b in zip(m[i], m[k])]
        return SqMatrix([row[n:] for row in m])

    def char_poly(self, var: str = "lambda") -> MPoly:
        """Monic characteristic polynomial det(t*I - M) as a univariate MPoly."""
        entries_are_scalar = isinstance(self.rows[0][0], (FieldElem, int, Fraction))
        if entries_are_scalar:
            vars = (var,)
            lam = MPoly.var(vars, var)
            rows = [
                [
                    (lam if i == j else MPoly.zero(vars)) - MPoly.const(vars, self.rows[i][j])
                    for j in range(self.n)
                ]
                for i in range(self.n)
            ]
        else:
            base = self.rows[0][0]
            if isinstance(base, RatFunc):
                raise TypeError("char_poly needs polynomial entries; clear denominators first")
            vars = tuple(dict.fromkeys(base.vars + (var,)))
            lam = MPoly.var(vars, var)
            rows = [
                [
                    (lam if i == j else MPoly.zero(vars)) - self.rows[i][j].lift(vars)
                    for j in range(self.n)
                ]
                for i in range(self.n)
            ]
        from .poly import _bareiss_det
        return _bareiss_det(rows)


def char_poly(m: SqMatrix, var: str = "lambda") -> MPoly:
    return m.char_poly(var)


def nullspace_exact(rows: list[list[FieldElem]], ncols: int) -> list[list[FieldElem]]:
    """Kernel basis of a (sparse-ish) exact matrix by Gauss-Jordan over the field."""
    m = [row[:] for row in rows]
    nrows = len(m)
    pivots: dict[int, int] = {}
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, nrows):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = m[r][c].inverse()
        m[r] = [v * inv for v in m[r]]
        for i in range(nrows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots[c] = r
        r += 1
        if r == nrows:
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [ZERO] * ncols
        v[fc] = ONE
        for c, pr in pivots.items():
            v[c] = -m[pr][fc]
        basis.append(v)
    return basis
