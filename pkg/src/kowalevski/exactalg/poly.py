"""Sparse multivariate polynomials and reduced rational functions over FieldElem.

Monomials are exponent tuples against a fixed, ordered variable tuple; the
canonical term order is graded lexicographic on that order.  Multivariate gcd
works recursively: univariate (primitive PRS) in a main variable over the
polynomial ring in the remaining ones, with content extraction.  That is
adequate for this problem size (few variables, moderate degree) and keeps
every operation exact.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence

from .field import FieldElem, ZERO, ONE, MixedRadicands


class InexactDivision(ArithmeticError):
    """exact_divide called with a non-divisor (the expected factor is absent)."""


class VarAbsent(ValueError):
    pass


def _grlex_key(e: tuple[int, ...]) -> tuple:
    return (sum(e), e)


class MPoly:
    """Sparse polynomial; ``terms`` maps exponent tuples to nonzero FieldElem."""

    __slots__ = ("vars", "terms")

    def __init__(self, vars: Sequence[str], terms: Mapping[tuple[int, ...], FieldElem] | None = None):
        self.vars = tuple(vars)
        t = {}
        if terms:
            for e, c in terms.items():
                c = FieldElem.coerce(c)
                if not c.is_zero():
                    t[tuple(e)] = c
        self.terms = t

    # -- constructors --------------------------------------------------------
    @classmethod
    def zero(cls, vars: Sequence[str]) -> "MPoly":
        return cls(vars, {})

    @classmethod
    def const(cls, vars: Sequence[str], c) -> "MPoly":
        c = FieldElem.coerce(c)
        n = len(vars)
        return cls(vars, {(0,) * n: c} if c else {})

    @classmethod
    def var(cls, vars: Sequence[str], name: str) -> "MPoly":
        vars = tuple(vars)
        if name not in vars:
            raise VarAbsent(name)
        e = tuple(1 if v == name else 0 for v in vars)
        return cls(vars, {e: ONE})

    def lift(self, vars: Sequence[str]) -> "MPoly":
        """Re-express over a variable tuple containing every *involved* variable."""
        vars = tuple(vars)
        if vars == self.vars:
            return self
        pos = []
        for v in self.vars:
            if v not in vars:
                if self.involves(v):
                    raise VarAbsent(f"{v} missing from target variables {vars}")
                pos.append(None)
            else:
                pos.append(vars.index(v))
        n = len(vars)
        out: dict[tuple[int, ...], FieldElem] = {}
        for e, c in self.terms.items():
            ne = [0] * n
            for p, k in zip(pos, e):
                if p is not None:
                    ne[p] = k
            out[tuple(ne)] = c
        return MPoly(vars, out)

    def _binop_align(self, other) -> tuple["MPoly", "MPoly"]:
        if isinstance(other, (int, Fraction, FieldElem)):
            other = MPoly.const(self.vars, other)
        if not isinstance(other, MPoly):
            raise TypeError(type(other))
        if self.vars == other.vars:
            return self, other
        merged = tuple(dict.fromkeys(self.vars + other.vars))
        return self.lift(merged), other.lift(merged)

    # -- predicates ----------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def constant_value(self) -> FieldElem:
        if self.is_zero():
            return ZERO
        (e, c), = self.terms.items()
        if any(e):
            raise ValueError("not a constant")
        return c

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, name: str) -> int:
        i = self.vars.index(name)
        if not self.terms:
            return -1
        return max(e[i] for e in self.terms)

    def involves(self, name: str) -> bool:
        if name not in self.vars:
            return False
        i = self.vars.index(name)
        return any(e[i] for e in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def weighted_degree(self, weights: Mapping[str, int]) -> int:
        w = [weights.get(v, 1) for v in self.vars]
        return max(sum(wi * ei for wi, ei in zip(w, e)) for e in self.terms) if self.terms else -1

    def is_weighted_homogeneous(self, weights: Mapping[str, int]) -> bool:
        w = [weights.get(v, 1) for v in self.vars]
        degs = {sum(wi * ei for wi, ei in zip(w, e)) for e in self.terms}
        return len(degs) <= 1

    # -- arithmetic ----------------------------------------------------------
    def __add__(self, other):
        a, b = self._binop_align(other)
        t = dict(a.terms)
        for e, c in b.terms.items():
            s = t.get(e)
            if s is None:
                t[e] = c
            else:
                s = s + c
                if s.is_zero():
                    del t[e]
                else:
                    t[e] = s
        out = MPoly(a.vars)
        out.terms = t
        return out

    __radd__ = __add__

    def __neg__(self):
        out = MPoly(self.vars)
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __sub__(self, other):
        a, b = self._binop_align(other)
        return a + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, FieldElem)):
            c = FieldElem.coerce(other)
            if c.is_zero():
                return MPoly.zero(self.vars)
            out = MPoly(self.vars)
            out.terms = {e: k * c for e, k in self.terms.items()}
            return out
        a, b = self._binop_align(other)
        if len(a.terms) > len(b.terms):
            a, b = b, a
        t: dict[tuple[int, ...], FieldElem] = {}
        bitems = list(b.terms.items())
        for ea, ca in a.terms.items():
            for eb, cb in bitems:
                e = tuple(x + y for x, y in zip(ea, eb))
                c = ca * cb
                s = t.get(e)
                if s is None:
                    t[e] = c
                else:
                    s = s + c
                    if s.is_zero():
                        del t[e]
                    else:
                        t[e] = s
        out = MPoly(a.vars)
        out.terms = t
        return out

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of MPoly")
        out = MPoly.const(self.vars, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, FieldElem)):
            other = MPoly.const(self.vars, other)
        if not isinstance(other, MPoly):
            return NotImplemented
        a, b = self._binop_align(other)
        return a.terms == b.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    # -- calculus ------------------------------------------------------------
    def diff(self, name: str) -> "MPoly":
        i = self.vars.index(name)
        t = {}
        for e, c in self.terms.items():
            if e[i]:
                ne = list(e)
                ne[i] -= 1
                key = tuple(ne)
                add = c * e[i]
                s = t.get(key)
                t[key] = add if s is None else s + add
        out = MPoly(self.vars)
        out.terms = {e: c for e, c in t.items() if not c.is_zero()}
        return out

    # -- evaluation / substitution --------------------------------------------
    def eval(self, point: Mapping[str, FieldElem]) -> FieldElem:
        vals = []
        for v in self.vars:
            w = point.get(v)
            if w is None:
                if self.involves(v):
                    raise KeyError(f"no value for {v}")
                w = ZERO
            vals.append(FieldElem.coerce(w))
        acc = ZERO
        for e, c in self.terms.items():
            term = c
            for val, k in zip(vals, e):
                if k:
                    term = term * val ** k
            acc = acc + term
        return acc

    def subs_scalar(self, name: str, value) -> "MPoly":
        """Substitute a scalar for one variable (variable stays in the tuple)."""
        value = FieldElem.coerce(value)
        i = self.vars.index(name)
        t: dict[tuple[int, ...], FieldElem] = {}
        for e, c in self.terms.items():
            ne = list(e)
            k = ne[i]
            ne[i] = 0
            key = tuple(ne)
            add = c * value ** k if k else c
            s = t.get(key)
            s = add if s is None else s + add
            if s.is_zero():
                t.pop(key, None)
            else:
                t[key] = s
        out = MPoly(self.vars)
        out.terms = t
        return out

    def subs_poly(self, bindings: Mapping[str, "MPoly"]) -> "MPoly":
        """Polynomial substitution; unbound variables map to themselves."""
        target_vars: tuple[str, ...] = ()
        for v in self.vars:
            img = bindings.get(v)
            names = img.vars if img is not None else (v,)
            target_vars = tuple(dict.fromkeys(target_vars + tuple(names)))
        imgs = []
        for v in self.vars:
            img = bindings.get(v)
            imgs.append(img.lift(target_vars) if img is not None else MPoly.var(target_vars, v))
        acc = MPoly.zero(target_vars)
        for e, c in self.terms.items():
            term = MPoly.const(target_vars, c)
            for img, k in zip(imgs, e):
                if k:
                    term = term * img ** k
            acc = acc + term
        return acc

    # -- structure -----------------------------------------------------------
    def leading(self) -> tuple[tuple[int, ...], FieldElem]:
        """Leading (exponent, coefficient) in graded lex order."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=_grlex_key)
        return e, self.terms[e]

    def coeffs_in(self, name: str) -> list["MPoly"]:
        """Coefficients [c0, c1, ...] of powers of ``name`` (MPolys free of it)."""
        i = self.vars.index(name)
        d = self.degree_in(name)
        out = [MPoly.zero(self.vars) for _ in range(max(d, 0) + 1)]
        for e, c in self.terms.items():
            ne = list(e)
            k = ne[i]
            ne[i] = 0
            out[k].terms[tuple(ne)] = out[k].terms.get(tuple(ne), ZERO) + c
        for p in out:
            p.terms = {e: c for e, c in p.terms.items() if not c.is_zero()}
        return out

    @staticmethod
    def from_coeffs(vars: Sequence[str], name: str, coeffs: Sequence["MPoly"]) -> "MPoly":
        vars = tuple(vars)
        i = vars.index(name)
        acc = MPoly.zero(vars)
        for k, c in enumerate(coeffs):
            c = c.lift(vars)
            t = {}
            for e, v in c.terms.items():
                ne = list(e)
                ne[i] += k
                t[tuple(ne)] = v
            p = MPoly(vars)
            p.terms = t
            acc = acc + p
        return acc

    def content(self) -> Fraction:
        """Positive rational content (gcd of all coefficient numerators/denominators)."""
        from math import gcd, lcm
        num = 0
        den = 1
        for c in self.terms.values():
            for part in (c.rat, c.rad):
                if part:
                    num = gcd(num, part.numerator)
                    den = lcm(den, part.denominator)
        if num == 0:
            return Fraction(1)
        return Fraction(num, den)

    def monic_scale(self) -> "MPoly":
        """Divide by content and make the graded-lex leading coefficient have
        positive rational part (positive radical part if the rational part is 0)."""
        if self.is_zero():
            return self
        p = self * (1 / self.content())
        _, lc = p.leading()
        key = lc.rat if lc.rat else lc.rad
        if key < 0:
            p = -p
        return p

    # -- text ------------------------------------------------------------------
    def __str__(self):
        if not self.terms:
            return "0"
        items = sorted(self.terms.items(), key=lambda kv: _grlex_key(kv[0]), reverse=True)
        parts = []
        for e, c in items:
            mono = "*".join(
                (f"{v}^{k}" if k > 1 else v) for v, k in zip(self.vars, e) if k
            )
            cs = str(c)
            if mono:
                if c == ONE:
                    term = mono
                elif c == -ONE:
                    term = f"-{mono}"
                elif c.is_rational() and c.rat > 0:
                    term = f"{cs}*{mono}"
                else:
                    term = f"({cs})*{mono}"
            else:
                term = cs if (c.is_rational() or "+" not in cs and "-" not in cs[1:]) else f"({cs})"
            parts.append(term)
        s = parts[0]
        for t in parts[1:]:
            s += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
        return s

    __repr__ = __str__

    def to_json(self) -> dict:
        return {
            "vars": list(self.vars),
            "terms": [
                {"exps": list(e), "coef": str(c)}
                for e, c in sorted(self.terms.items(), key=lambda kv: _grlex_key(kv[0]), reverse=True)
            ],
        }

    @staticmethod
    def from_json(data: dict) -> "MPoly":
        vars = tuple(data["vars"])
        terms = {tuple(t["exps"]): FieldElem.parse(str(t["coef"])) for t in data["terms"]}
        return MPoly(vars, terms)


# -- gcd / division machinery ---------------------------------------------------


def exact_divide(p: MPoly, q: MPoly) -> MPoly:
    """Quotient p/q when the division is exact; raises InexactDivision otherwise."""
    p, q = p._binop_align(q)
    if q.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if q.is_constant():
        return p * q.constant_value().inverse()
    quo = MPoly.zero(p.vars)
    eq, cq = q.leading()
    r = p
    while not r.is_zero():
        er, cr = r.leading()
        de = tuple(a - b for a, b in zip(er, eq))
        if any(x < 0 for x in de):
            raise InexactDivision(f"{q} does not divide exactly")
        c = cr / cq
        t = MPoly(p.vars, {de: c})
        quo = quo + t
        r = r - t * q
    return quo


def divides(q: MPoly, p: MPoly) -> bool:
    try:
        exact_divide(p, q)
        return True
    except InexactDivision:
        return False


def _univ_gcd_field(a: list[FieldElem], b: list[FieldElem]) -> list[FieldElem]:
    """Monic gcd of univariate polynomials given as coefficient lists over the field."""
    def norm(c):
        while c and c[-1].is_zero():
            c.pop()
        return c

    a, b = norm(list(a)), norm(list(b))
    while b:
        # a mod b
        inv = b[-1].inverse()
        r = list(a)
        while len(r) >= len(b):
            f = r[-1] * inv
            shift = len(r) - len(b)
            for i, cb in enumerate(b):
                r[shift + i] = r[shift + i] - f * cb
            norm(r)
            if not r:
                break
        a, b = b, r
    if not a:
        return []
    inv = a[-1].inverse()
    return [c * inv for c in a]


def _pseudo_rem(a: list[MPoly], b: list[MPoly], vars) -> list[MPoly]:
    """Pseudo-remainder of univariate polynomials with MPoly coefficients."""
    def norm(c):
        while c and c[-1].is_zero():
            c.pop()
        return c

    a = norm(list(a))
    b = norm(list(b))
    if not b:
        raise ZeroDivisionError("pseudo-division by zero")
    lb = b[-1]
    r = list(a)
    while len(r) >= len(b):
        lr = r[-1]
        shift = len(r) - len(b)
        r = [c * lb for c in r]
        for i, cb in enumerate(b):
            r[shift + i] = r[shift + i] - lr * cb
        norm(r)
        if not r:
            break
    return r


def mpoly_gcd(p: MPoly, q: MPoly) -> MPoly:
    """gcd up to normalization (content 1, positive leading rational part).

    Multivariate gcds run by evaluation-interpolation (gcd images at scalar
    values of one variable, Newton-interpolated back, certified by exact trial
    division), which stays polynomial-time where remainder sequences blow up.
    """
    p, q = p._binop_align(q)
    if p.is_zero():
        return q.monic_scale()
    if q.is_zero():
        return p.monic_scale()
    if p.is_constant() or q.is_constant():
        return MPoly.const(p.vars, 1)
    return _gcd_rec(p, q).monic_scale()


def _univariate_in(p: MPoly, name: str) -> bool:
    i = p.vars.index(name)
    return all(not e[j] for e, _ in p.terms.items() for j in range(len(p.vars)) if j != i)


def _gcd_univar(p: MPoly, q: MPoly, main: str) -> MPoly:
    i = p.vars.index(main)
    ca: dict[int, FieldElem] = {}
    for e, c in p.terms.items():
        ca[e[i]] = ca.get(e[i], ZERO) + c
    cb: dict[int, FieldElem] = {}
    for e, c in q.terms.items():
        cb[e[i]] = cb.get(e[i], ZERO) + c
    g = _univ_gcd_field(
        [ca.get(k, ZERO) for k in range(max(ca) + 1)],
        [cb.get(k, ZERO) for k in range(max(cb) + 1)],
    )
    out = MPoly(p.vars)
    for k, c in enumerate(g):
        if not c.is_zero():
            e = [0] * len(p.vars)
            e[i] = k
            out.terms[tuple(e)] = c
    return out


def _gcd_rec(p: MPoly, q: MPoly) -> MPoly:
    if p.is_zero():
        return q
    if q.is_zero():
        return p
    if p.is_constant() or q.is_constant():
        return MPoly.const(p.vars, 1)
    active = [v for v in p.vars if p.involves(v) or q.involves(v)]
    main = min(active, key=lambda v: max(p.degree_in(v), q.degree_in(v)))
    if len(active) == 1:
        return _gcd_univar(p, q, main)

    def content_of(u: MPoly) -> MPoly:
        cs = [c for c in u.coeffs_in(main) if not c.is_zero()]
        g = cs[0]
        for c in cs[1:]:
            if g.is_constant():
                break
            g = _gcd_rec(g, c)
        return g if not g.is_constant() else MPoly.const(p.vars, 1)

    cp, cq = content_of(p), content_of(q)
    pp = exact_divide(p, cp) if not cp.is_constant() else p
    qq = exact_divide(q, cq) if not cq.is_constant() else q
    cont = _gcd_rec(cp, cq) if not (cp.is_constant() or cq.is_constant()) else MPoly.const(p.vars, 1)

    interp = max((v for v in active if v != main),
                 key=lambda v: max(pp.degree_in(v), qq.degree_in(v)))
    lcp = pp.coeffs_in(main)[-1]
    lcq = qq.coeffs_in(main)[-1]
    gamma = _gcd_rec(lcp, lcq)
    dbound = min(pp.degree_in(interp) if pp.involves(interp) else 0,
                 qq.degree_in(interp) if qq.involves(interp) else 0) \
        + (gamma.degree_in(interp) if gamma.involves(interp) else 0)

    points: list[FieldElem] = []
    images: list[MPoly] = []
    best_deg = None
    t_int = 0
    attempts = 0
    while True:
        t = FieldElem(t_int)
        t_int += 1
        attempts += 1
        if attempts > 40 * (dbound + 2):
            raise ArithmeticError("gcd interpolation failed to stabilize")
        pv = pp.subs_scalar(interp, t)
        qv = qq.subs_scalar(interp, t)
        if pv.is_zero() or qv.is_zero():
            continue
        if (pv.degree_in(main) if pv.involves(main) else 0) != pp.degree_in(main):
            continue
        if (qv.degree_in(main) if qv.involves(main) else 0) != qq.degree_in(main):
            continue
        g_t = _gcd_rec(pv, qv)
        dg = g_t.degree_in(main) if g_t.involves(main) else 0
        if dg == 0:
            return cont  # primitive parts are coprime
        if best_deg is None or dg < best_deg:
            best_deg = dg
            points, images = [], []
        elif dg > best_deg:
            continue  # unlucky evaluation point
        # impose leading coefficient gamma(t)
        gam_t = gamma.subs_scalar(interp, t)
        lc_gt = g_t.coeffs_in(main)[-1]
        try:
            scale = exact_divide(gam_t, lc_gt)
        except InexactDivision:
            continue
        images.append(g_t * scale)
        points.append(t)
        if len(points) >= dbound + 1:
            H = _newton_interpolate(points, images, interp)
            hp = exact_divide(H, content_of(H)) if not content_of(H).is_constant() else H
            if divides(hp, pp) and divides(hp, qq):
                return cont * hp
            # not enough points or systematic bad luck; widen the bound
            dbound += 1


def _newton_interpolate(points: list[FieldElem], values: list[MPoly], var: str) -> MPoly:
    """Newton-form interpolation of polynomial-valued samples along one variable."""
    n = len(points)
    coeffs = list(values)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            dt = points[i] - points[i - j]
            coeffs[i] = (coeffs[i] - coeffs[i - 1]) * dt.inverse()
    vars = values[0].vars
    vp = MPoly.var(vars, var)
    out = coeffs[n - 1]
    for i in range(n - 2, -1, -1):
        out = out * (vp - MPoly.const(vars, points[i])) + coeffs[i]
    return out


def resultant(p: MPoly, q: MPoly, name: str) -> MPoly:
    """Sylvester resultant in ``name``, p's coefficient rows first.

    Sign convention: res_x(x - a, x - b) = a - b (equivalently
    lc(p)^deg(q) * prod q(root of p)); only vanishing matters downstream.
    """
    p, q = p._binop_align(q)
    if not p.involves(name) or not q.involves(name):
        raise VarAbsent(f"both polynomials must involve {name}")
    a = p.coeffs_in(name)
    b = q.coeffs_in(name)
    m, n = len(a) - 1, len(b) - 1
    size = m + n
    zero = MPoly.zero(p.vars)
    rows = []
    for i in range(n):
        row = [zero] * size
        for j, c in enumerate(reversed(a)):
            row[i + j] = c
        rows.append(row)
    for i in range(m):
        row = [zero] * size
        for j, c in enumerate(reversed(b)):
            row[i + j] = c
        rows.append(row)
    return _bareiss_det(rows)


def _bareiss_det(rows: list[list[MPoly]]) -> MPoly:
    """Fraction-free determinant of a square MPoly matrix."""
    n = len(rows)
    if n == 0:
        raise ValueError("empty matrix")
    vars = rows[0][0].vars
    m = [row[:] for row in rows]
    sign = 1
    prev = MPoly.const(vars, 1)
    for k in range(n - 1):
        if m[k][k].is_zero():
            for i in range(k + 1, n):
                if not m[i][k].is_zero():
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return MPoly.zero(vars)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                m[i][j] = exact_divide(num, prev)
            m[i][k] = MPoly.zero(vars)
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return det if sign > 0 else -det


# -- rational functions ----------------------------------------------------------


class RatFunc:
    """Reduced fraction of MPolys: gcd-free, content-normalized, canonical sign."""

    __slots__ = ("num", "den")

    def __init__(self, num: MPoly, den: MPoly | None = None, *, reduce: bool = True):
        if den is None:
            den = MPoly.const(num.vars, 1)
        num, den = num._binop_align(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if reduce and not num.is_zero():
            g = mpoly_gcd(num, den)
            if not g.is_constant():
                num = exact_divide(num, g)
                den = exact_divide(den, g)
        if num.is_zero():
            den = MPoly.const(num.vars, 1)
        # canonical: den content 1, leading coefficient positive rational part
        c = den.content()
        _, lc = den.leading()
        key = lc.rat if lc.rat else lc.rad
        scale = FieldElem(1 / c) if key > 0 else FieldElem(-1 / c)
        self.num = num * scale
        self.den = den * scale

    @classmethod
    def from_scalar(cls, vars: Sequence[str], c) -> "RatFunc":
        return cls(MPoly.const(vars, c))

    @classmethod
    def from_poly(cls, p: MPoly) -> "RatFunc":
        return cls(p)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def as_poly(self) -> MPoly:
        if not self.is_polynomial():
            raise ValueError("not a polynomial")
        return self.num * self.den.constant_value().inverse()

    def __bool__(self):
        return not self.is_zero()

    def _coerce(self, other) -> "RatFunc":
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, MPoly):
            return RatFunc(other)
        if isinstance(other, (int, Fraction, FieldElem)):
            return RatFunc(MPoly.const(self.num.vars, other))
        raise TypeError(type(other))

    def __add__(self, other):
        o = self._coerce(other)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        r = RatFunc.__new__(RatFunc)
        r.num = -self.num
        r.den = self.den
        return r

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return (1 / self) ** (-n)
        return RatFunc(self.num ** n, self.den ** n)

    def __eq__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return (self.num * o.den - o.num * self.den).is_zero()

    def __hash__(self):
        return hash((self.num, self.den))

    def diff(self, name: str) -> "RatFunc":
        return RatFunc(
            self.num.diff(name) * self.den - self.num * self.den.diff(name),
            self.den * self.den,
        )

    def eval(self, point: Mapping[str, FieldElem]) -> FieldElem:
        d = self.den.eval(point)
        if d.is_zero():
            raise ZeroDivisionError("denominator vanishes at the point")
        return self.num.eval(point) / d

    def subs(self, bindings: Mapping[str, "RatFunc"]) -> "RatFunc":
        """Composition: substitute rational functions for variables."""
        return _subs_ratfunc(self.num, bindings) / _subs_ratfunc(self.den, bindings)

    def __str__(self):
        if self.is_polynomial():
            return str(self.as_poly())
        return f"({self.num})/({self.den})"

    __repr__ = __str__


def _subs_ratfunc(p: MPoly, bindings: Mapping[str, RatFunc]) -> RatFunc:
    target_vars: tuple[str, ...] = ()
    for v in p.vars:
        img = bindings.get(v)
        names = img.num.vars if img is not None else (v,)
        target_vars = tuple(dict.fromkeys(target_vars + tuple(names)))
    nums: list[MPoly] = []
    dens: list[MPoly] = []
    for v in p.vars:
        img = bindings.get(v)
        if img is None:
            nums.append(MPoly.var(target_vars, v))
            dens.append(MPoly.const(target_vars, 1))
        else:
            nums.append(img.num.lift(target_vars))
            dens.append(img.den.lift(target_vars))
    # clear denominators: p(n1/d1, ...) = sum(c * prod n_i^e_i * prod d_i^(D_i - e_i)) / prod d_i^D_i
    degs = [p.degree_in(v) if p.involves(v) else 0 for v in p.vars]
    den_pows: list[list[MPoly]] = []
    num_pows: list[list[MPoly]] = []
    for d, nm, dn in zip(degs, nums, dens):
        num_pows.append([MPoly.const(target_vars, 1)])
        den_pows.append([MPoly.const(target_vars, 1)])
        for k in range(1, d + 1):
            num_pows[-1].append(num_pows[-1][-1] * nm)
            den_pows[-1].append(den_pows[-1][-1] * dn)
    acc = MPoly.zero(target_vars)
    for e, c in p.terms.items():
        term = MPoly.const(target_vars, c)
        for i, k in enumerate(e):
            term = term * num_pows[i][k]
            dd = degs[i] - k
            if dd:
                term = term * den_pows[i][dd]
        acc = acc + term
    big_den = MPoly.const(target_vars, 1)
    for i, d in enumerate(degs):
        if d:
            big_den = big_den * den_pows[i][d]
    return RatFunc(acc, big_den)


def poly_substitute(p: MPoly, bindings: Mapping[str, RatFunc]) -> RatFunc:
    """Exact composed rational function p(bindings), reduced."""
    for v in p.vars:
        if p.involves(v) and v not in bindings:
            raise VarAbsent(f"variable {v} unbound")
    return _subs_ratfunc(p, bindings)


def poly_ring(names: Sequence[str]) -> list[MPoly]:
    """Generators of a polynomial ring, e.g. ``x, y, z = poly_ring("xyz")``."""
    names = tuple(names)
    return [MPoly.var(names, v) for v in names]
