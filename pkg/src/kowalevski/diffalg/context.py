"""Derivation contexts: variables, a derivation rule per variable, and
algebraic rewrite relations of the form (distinguished variable)^2 -> value.

The rewrite right-hand sides may be fractions (theta^2 -> c/Q); reduction
therefore works on lazy numerator/denominator pairs and never needs gcds --
zero testing is polynomial expansion after the rewrites.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Mapping, Sequence

import mpmath

from ..exactalg import FieldElem, MPoly, RatFunc, ZERO, ONE
from ..numcert import BigComplex


class Frac:
    """Unreduced fraction of MPolys; cheap arithmetic, exact zero tests."""

    __slots__ = ("num", "den")

    def __init__(self, num: MPoly, den: MPoly | None = None):
        self.num = num
        self.den = den if den is not None else MPoly.const(num.vars, 1)

    @staticmethod
    def of(x, vars: Sequence[str]) -> "Frac":
        if isinstance(x, Frac):
            return x
        if isinstance(x, MPoly):
            return Frac(x)
        if isinstance(x, RatFunc):
            return Frac(x.num, x.den)
        return Frac(MPoly.const(vars, x))

    def __add__(self, o: "Frac") -> "Frac":
        return Frac(self.num * o.den + o.num * self.den, self.den * o.den)

    def __sub__(self, o: "Frac") -> "Frac":
        return Frac(self.num * o.den - o.num * self.den, self.den * o.den)

    def __mul__(self, o: "Frac") -> "Frac":
        return Frac(self.num * o.num, self.den * o.den)

    def __truediv__(self, o: "Frac") -> "Frac":
        if o.num.is_zero():
            raise ZeroDivisionError
        return Frac(self.num * o.den, self.den * o.num)

    def __neg__(self) -> "Frac":
        return Frac(-self.num, self.den)

    def scale(self, c) -> "Frac":
        return Frac(self.num * c, self.den)

    def as_ratfunc(self) -> RatFunc:
        return RatFunc(self.num, self.den)

    def __repr__(self):
        return f"({self.num})/({self.den})"


class DerivationContext:
    """Variables with a derivation rule each plus square rewrite relations."""

    def __init__(
        self,
        vars: Sequence[str],
        derivations: Mapping[str, object],
        relations: Mapping[str, object] | None = None,
        check_compatibility: bool = True,
    ):
        self.vars = tuple(vars)
        self.derivations: dict[str, Frac] = {}
        for v in self.vars:
            d = derivations.get(v, 0)
            self.derivations[v] = Frac.of(d, self.vars)
        self.relations: dict[str, Frac] = {}
        for v, rhs in (relations or {}).items():
            if v not in self.vars:
                raise ValueError(f"relation variable {v} not in context")
            r = Frac.of(rhs, self.vars)
            for w in (v,) + tuple(self.relations):
                if r.num.involves(w) or r.den.involves(w):
                    raise ValueError("rewrite right sides must be free of distinguished variables")
            self.relations[v] = r
        if check_compatibility:
            for v, r in self.relations.items():
                # d(v^2 - rhs) must reduce to zero
                lhs = Frac(MPoly.var(self.vars, v) * 2) * self.derivations[v]
                resid = self._reduce_frac(lhs - self.d(r))
                if not resid.num.is_zero():
                    raise ValueError(f"derivation incompatible with the relation for {v}")

    # -- reduction -----------------------------------------------------------
    def reduce_poly(self, p: MPoly) -> Frac:
        """Rewrite every distinguished variable to exponent <= 1."""
        p = p.lift(self.vars) if p.vars != self.vars else p
        num = p
        den = MPoly.const(self.vars, 1)
        for v, rel in self.relations.items():
            if num.degree_in(v) < 2:
                continue
            coeffs = num.coeffs_in(v)
            m = (len(coeffs) - 1) // 2
            # num = sum_k c_k v^k; v^(2j+r) -> rel^j v^r; common denominator rel.den^m
            acc = MPoly.zero(self.vars)
            vvar = MPoly.var(self.vars, v)
            rn_pow = [MPoly.const(self.vars, 1)]
            rd_pow = [MPoly.const(self.vars, 1)]
            for _ in range(m):
                rn_pow.append(rn_pow[-1] * rel.num)
                rd_pow.append(rd_pow[-1] * rel.den)
            for k, c in enumerate(coeffs):
                j, r = divmod(k, 2)
                term = c * rn_pow[j] * rd_pow[m - j]
                if r:
                    term = term * vvar
                acc = acc + term
            num = acc
            den = den * rd_pow[m]
        return Frac(num, den)

    def _reduce_frac(self, f: Frac) -> Frac:
        rn = self.reduce_poly(f.num)
        rd = self.reduce_poly(f.den)
        return Frac(rn.num * rd.den, rn.den * rd.num)

    def reduce(self, f) -> Frac:
        return self._reduce_frac(Frac.of(f, self.vars))

    def is_zero(self, f) -> bool:
        return self.reduce(f).num.is_zero()

    def equal(self, f, g) -> bool:
        a = Frac.of(f, self.vars)
        b = Frac.of(g, self.vars)
        return self.is_zero(a - b)

    # -- derivation ----------------------------------------------------------
    def d_poly(self, p: MPoly) -> Frac:
        p = p.lift(self.vars) if p.vars != self.vars else p
        acc = Frac(MPoly.zero(self.vars))
        for v in self.vars:
            if p.involves(v):
                dv = self.derivations[v]
                if dv.num.is_zero():
                    continue
                acc = acc + Frac(p.diff(v)) * dv
        return acc

    def d(self, f) -> Frac:
        f = Frac.of(f, self.vars)
        dn = self.d_poly(f.num)
        dd = self.d_poly(f.den)
        # (n/d)' = (n' d - n d') / d^2
        out = Frac(dn.num * f.den, dn.den) - Frac(f.num, MPoly.const(self.vars, 1)) * Frac(dd.num, dd.den)
        return Frac(out.num, out.den * f.den * f.den)

    # -- numeric cross-check ---------------------------------------------------
    def sample_point(self, rng: random.Random, prec: int = 128) -> dict[str, BigComplex]:
        """Random point on the relation variety (square roots taken numerically)."""
        with mpmath.workprec(prec):
            point: dict[str, BigComplex] = {}
            for v in self.vars:
                if v in self.relations:
                    continue
                point[v] = BigComplex(mpmath.mpf(rng.randint(2, 19)) / rng.randint(1, 7))
            for v, rel in self.relations.items():
                nv = eval_ball_frac(rel, point)
                root = mpmath.sqrt(nv.mid)
                if rng.random() < 0.5:
                    root = -root
                point[v] = BigComplex(root, nv.rad)
            return point

    def numeric_zero(self, f, rng: random.Random, trials: int = 10, prec: int = 128,
                     tol: float = 1e-20) -> bool:
        f = Frac.of(f, self.vars)
        with mpmath.workprec(prec):
            for _ in range(trials):
                for _attempt in range(8):
                    pt = self.sample_point(rng, prec)
                    den = eval_ball(f.den, pt)
                    if not den.contains_zero() and abs(den.mid) > mpmath.mpf("1e-12"):
                        break
                else:
                    return False
                val = eval_ball(f.num, pt) / den
                if abs(val.mid) > tol:
                    return False
        return True


def eval_ball(p: MPoly, point: Mapping[str, BigComplex]) -> BigComplex:
    acc = BigComplex(0)
    for e, c in p.terms.items():
        t = BigComplex.from_field(c)
        for v, k in zip(p.vars, e):
            if k:
                b = point[v]
                for _ in range(k):
                    t = t * b
        acc = acc + t
    return acc


def eval_ball_frac(f: Frac, point: Mapping[str, BigComplex]) -> BigComplex:
    return eval_ball(f.num, point) / eval_ball(f.den, point)


# -- stock contexts -----------------------------------------------------------------


def weierstrass_context(g3_name: str = "g3") -> DerivationContext:
    """(p, q) jets of the Weierstrass function with (p')^2 = 4 p^3 - g3."""
    vars = ("wp", "wq", g3_name)
    wp, wq = MPoly.var(vars, "wp"), MPoly.var(vars, "wq")
    g3 = MPoly.var(vars, g3_name)
    return DerivationContext(
        vars,
        {"wp": wq, "wq": 6 * wp ** 2, g3_name: 0},
        {"wq": 4 * wp ** 3 - g3},
    )


def jacobi_sn_context() -> DerivationContext:
    """(s, w) jets of the lemniscatic sn with (sn')^2 = 1 - sn^4, plus i."""
    vars = ("sn", "sw", "ii")
    sn, sw = MPoly.var(vars, "sn"), MPoly.var(vars, "sw")
    one = MPoly.const(vars, 1)
    return DerivationContext(
        vars,
        {"sn": sw, "sw": -2 * sn ** 3, "ii": 0},
        {"sw": one - sn ** 4, "ii": -one},
    )


def jet_context(names: Sequence[str], top_rhs, extra: Mapping[str, object] | None = None,
                relations=None) -> DerivationContext:
    """Chain rule context: d names[i] = names[i+1], d names[-1] = top_rhs."""
    names = tuple(names)
    extra = dict(extra or {})
    vars = names + tuple(extra)
    der = {}
    for i, n in enumerate(names[:-1]):
        der[n] = MPoly.var(vars, names[i + 1])
    der[names[-1]] = top_rhs
    for n, v in extra.items():
        der[n] = v
    return DerivationContext(vars, der, relations)
