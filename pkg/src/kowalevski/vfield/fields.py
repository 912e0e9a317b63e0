"""Polynomial vector fields, Lie brackets, linear changes of coordinates."""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence

from ..exactalg import FieldElem, MPoly, RatFunc, SqMatrix, SingularMatrix, ZERO, ONE

QUAD_BASIS = ((2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2))


class ContextMismatch(ValueError):
    pass


class PolyVF:
    """Vector field sum(comps[i] * d/d vars[i]); components MPoly or RatFunc.

    Components may involve extra symbols (parameters) beyond ``vars``; only the
    coordinates in ``vars`` are differentiated.
    """

    __slots__ = ("vars", "comps", "weights")

    def __init__(self, vars: Sequence[str], comps: Sequence, weights: Sequence[int] | None = None):
        self.vars = tuple(vars)
        if len(comps) != len(self.vars):
            raise ValueError("one component per coordinate")
        self.comps = tuple(comps)
        self.weights = tuple(weights) if weights is not None else None

    def is_polynomial(self) -> bool:
        return all(isinstance(c, MPoly) for c in self.comps)

    def apply(self, f):
        """Directional derivative sum(P_i * df/dx_i); f is MPoly or RatFunc."""
        if isinstance(f, MPoly):
            if self.is_polynomial():
                acc = MPoly.zero(f.vars)
                for v, P in zip(self.vars, self.comps):
                    if v in f.vars and f.involves(v):
                        acc = acc + P * f.diff(v)
                return acc
            f = RatFunc(f)
        if isinstance(f, RatFunc):
            acc = RatFunc(MPoly.zero(f.num.vars))
            for v, P in zip(self.vars, self.comps):
                if v in f.num.vars and (f.num.involves(v) or f.den.involves(v)):
                    term = f.diff(v)
                    term = term * (P if isinstance(P, RatFunc) else RatFunc(P))
                    acc = acc + term
            return acc
        raise TypeError(type(f))

    def __add__(self, other: "PolyVF") -> "PolyVF":
        if self.vars != other.vars:
            raise ContextMismatch("different coordinates")
        return PolyVF(self.vars, [a + b for a, b in zip(self.comps, other.comps)], self.weights)

    def __sub__(self, other: "PolyVF") -> "PolyVF":
        if self.vars != other.vars:
            raise ContextMismatch("different coordinates")
        return PolyVF(self.vars, [a - b for a, b in zip(self.comps, other.comps)], self.weights)

    def __mul__(self, s) -> "PolyVF":
        return PolyVF(self.vars, [c * s for c in self.comps], self.weights)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, PolyVF):
            return NotImplemented
        if self.vars != other.vars:
            return False
        return all((a - b).is_zero() if isinstance(a - b, MPoly) else (a - b).is_zero()
                   for a, b in zip(self.comps, other.comps))

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.comps)

    def __str__(self):
        parts = [f"({c}) d/d{v}" for v, c in zip(self.vars, self.comps) if not c.is_zero()]
        return " + ".join(parts) if parts else "0"

    __repr__ = __str__


def lie_bracket(X: PolyVF, Y: PolyVF) -> PolyVF:
    """[X, Y]_i = X(Y_i) - Y(X_i), exact."""
    if X.vars != Y.vars:
        raise ContextMismatch(f"{X.vars} vs {Y.vars}")
    return PolyVF(X.vars, [X.apply(c) - Y.apply(d) for c, d in zip(Y.comps, X.comps)], X.weights)


def euler_field(vars: Sequence[str]) -> PolyVF:
    vars = tuple(vars)
    return PolyVF(vars, [MPoly.var(vars, v) for v in vars])


def weight_field(vars: Sequence[str], weights: Sequence[int]) -> PolyVF:
    vars = tuple(vars)
    return PolyVF(vars, [MPoly.var(vars, v) * w for v, w in zip(vars, weights)], weights)


class QuadVF(PolyVF):
    """Quadratic homogeneous vector field on C^3 (components may carry parameter symbols)."""

    def __init__(self, comps: Sequence[MPoly], vars: Sequence[str] = ("x", "y", "z")):
        vars = tuple(vars)
        for c in comps:
            if not isinstance(c, MPoly):
                raise TypeError("QuadVF components must be polynomials")
            if not _is_quadratic_in(c, vars):
                raise ValueError(f"component not homogeneous quadratic in {vars}: {c}")
        super().__init__(vars, comps)

    def coefficient_rows(self) -> list[list[FieldElem]]:
        """Coefficients against the fixed monomial basis (x^2, xy, xz, y^2, yz, z^2)."""
        rows = []
        idx = [self_vars_index(self.vars, v) for v in self.vars]
        for c in self.comps:
            row = []
            for basis in QUAD_BASIS:
                target = {v: e for v, e in zip(self.vars, basis)}
                coef = ZERO
                for e, k in c.terms.items():
                    pattern = {v: e[c.vars.index(v)] if v in c.vars else 0 for v in self.vars}
                    if pattern == target:
                        extra = [x for v2, x in zip(c.vars, e) if v2 not in self.vars and x]
                        if extra:
                            raise ValueError("parametric field has no scalar coefficient rows")
                        coef = coef + k
                row.append(coef)
            rows.append(row)
        return rows

    def jacobian_at(self, point: Mapping[str, FieldElem]) -> SqMatrix:
        return SqMatrix(
            [[c.diff(v).eval(point) for v in self.vars] for c in self.comps]
        )

    def eval_comps(self, point: Mapping[str, FieldElem]) -> list[FieldElem]:
        return [c.eval(point) for c in self.comps]

    def radicand(self) -> int:
        for c in self.comps:
            for v in c.terms.values():
                if v.d != 1:
                    return v.d
        return 1

    def to_json(self, params: dict | None = None) -> dict:
        d = self.radicand()
        return {
            "field": "Q" if d == 1 else f"Q(sqrt({d}))",
            "params": params or {},
            "components": [[str(c) for c in row] for row in self.coefficient_rows()],
        }

    @staticmethod
    def from_json(data: dict, vars: Sequence[str] = ("x", "y", "z")) -> "QuadVF":
        vars = tuple(vars)
        comps = []
        for row in data["components"]:
            p = MPoly.zero(vars)
            for coef, basis in zip(row, QUAD_BASIS):
                c = FieldElem.parse(str(coef)) if not isinstance(coef, (int, float)) else FieldElem(Fraction(coef))
                p = p + MPoly(vars, {basis: c})
            comps.append(p)
        return QuadVF(comps, vars)


def self_vars_index(vars, v):
    return vars.index(v)


def _is_quadratic_in(c: MPoly, vars: tuple[str, ...]) -> bool:
    if c.is_zero():
        return True
    for e, _ in c.terms.items():
        deg = sum(k for v, k in zip(c.vars, e) if v in vars)
        if deg != 2:
            return False
    return True


def linear_change(X: QuadVF, A: SqMatrix) -> QuadVF:
    """Pushforward of X under w = A v, expressed in the new coordinates."""
    try:
        Ainv = A.inverse()
    except SingularMatrix:
        raise SingularMatrix("change of coordinates must be invertible")
    vars = X.vars
    n = len(vars)
    gens = [MPoly.var(vars, v) for v in vars]
    old_in_new = []
    for i in range(n):
        acc = MPoly.zero(vars)
        for j in range(n):
            acc = acc + gens[j] * Ainv.rows[i][j]
        old_in_new.append(acc)
    bindings = dict(zip(vars, old_in_new))
    pulled = [c.subs_poly(bindings) for c in X.comps]
    comps = []
    for i in range(n):
        acc = MPoly.zero(vars)
        for j in range(n):
            acc = acc + pulled[j] * A.rows[i][j]
        comps.append(acc)
    return QuadVF(comps, vars)
