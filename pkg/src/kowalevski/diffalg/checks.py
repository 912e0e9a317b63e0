"""Differential-algebra verifications: first integrals, commutation, Halphen
structure, projective invariants, solution maps, equivariance."""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from typing import Mapping, Sequence

from ..exactalg import (
    FieldElem, MPoly, RatFunc, ZERO, ONE, exact_divide, mpoly_gcd,
    nullspace_field, InexactDivision,
)
from ..vfield import PolyVF, QuadVF, lie_bracket, euler_field
from .context import DerivationContext, Frac

DEFAULT_SEED = 20181111


class NotProportionalToEuler(ArithmeticError):
    pass


class NotAFunctionOfXi(ArithmeticError):
    pass


class DimensionMismatch(ValueError):
    pass


class NotSymmetric(ArithmeticError):
    pass


class NoSuchConstants(ArithmeticError):
    pass


class VerifyReport:
    """pass/fail with the failing residual and a numeric spot-check result."""

    __slots__ = ("ok", "residual", "crosscheck", "label")

    def __init__(self, ok: bool, residual=None, crosscheck: bool | None = None, label: str = ""):
        self.ok = ok
        self.residual = residual
        self.crosscheck = crosscheck
        self.label = label

    def __bool__(self):
        return self.ok and self.crosscheck is not False

    def __repr__(self):
        status = "pass" if self.ok else "FAIL"
        extra = "" if self.crosscheck is None else f", numeric={'ok' if self.crosscheck else 'FAIL'}"
        return f"VerifyReport({self.label or 'check'}: {status}{extra})"


def apply_field(X: PolyVF, f, ctx: DerivationContext | None = None):
    """Directional derivative of f along X, reduced in ctx when given."""
    if ctx is None:
        return X.apply(f)
    return ctx.d(f)


def verify_first_integral(X: PolyVF, Q: MPoly, label: str = "") -> VerifyReport:
    resid = X.apply(Q)
    if isinstance(resid, RatFunc):
        ok = resid.is_zero()
        return VerifyReport(ok, None if ok else resid, None, label)
    ok = resid.is_zero()
    return VerifyReport(ok, None if ok else resid, None, label)


# -- linear searches ----------------------------------------------------------------


def _monomials(vars: Sequence[str], degree: int, weights: Mapping[str, int] | None):
    w = [1 if weights is None else weights.get(v, 1) for v in vars]
    n = len(vars)
    out = []

    def rec(i, left, exp):
        if i == n - 1:
            if left % w[i] == 0 and left >= 0:
                out.append(tuple(exp + [left // w[i]]))
            return
        k = 0
        while k * w[i] <= left:
            rec(i + 1, left - k * w[i], exp + [k])
            k += 1

    rec(0, degree, [])
    return out


def _field_radicand(X: PolyVF) -> int:
    for c in X.comps:
        terms = c.terms if isinstance(c, MPoly) else {**c.num.terms, **c.den.terms}
        for v in terms.values():
            if v.d != 1:
                return v.d
    return 1


def find_polynomial_first_integrals(X: PolyVF, degree: int,
                                    weights: Mapping[str, int] | None = None) -> list[MPoly]:
    """Basis of (quasi)homogeneous degree-`degree` polynomials Q with X(Q) = 0."""
    if degree < 1:
        raise ValueError("degree must be >= 1")
    if weights is None and X.weights is not None:
        weights = dict(zip(X.vars, X.weights))
    vars = X.comps[0].vars
    monos = _monomials(vars, degree, weights)
    col_of = {m: i for i, m in enumerate(monos)}
    rows: dict[tuple, int] = {}
    entries = []
    for j, m in enumerate(monos):
        mono = MPoly(vars, {m: ONE})
        img = X.apply(mono)
        for e, c in img.terms.items():
            i = rows.setdefault(e, len(rows))
            entries.append((i, j, c))
    d = _field_radicand(X)

    def to_poly(vec) -> MPoly:
        return MPoly(vars, {m: v for m, v in zip(monos, vec)})

    def verify(vec) -> bool:
        return X.apply(to_poly(vec)).is_zero()

    basis = nullspace_field(entries, len(rows), len(monos), d, verify)
    return [to_poly(v).monic_scale() for v in basis]


def find_commuting_fields(X: PolyVF, degree: int,
                          weights: Mapping[str, int] | None = None) -> list[PolyVF]:
    """Basis of fields Y with [X, Y] = 0, components of the stated degree.

    With weights given, component i runs over monomials of weighted degree
    degree + w_i (the quasihomogeneous grading); otherwise plain degree.
    """
    if weights is None and X.weights is not None:
        weights = dict(zip(X.vars, X.weights))
    vars = X.comps[0].vars
    ncoords = len(X.vars)
    comp_monos = []
    for i, v in enumerate(X.vars):
        deg_i = degree if weights is None else degree + weights.get(v, 1) - 1
        comp_monos.append(_monomials(vars, deg_i, weights))
    offsets = [0]
    for monos in comp_monos:
        offsets.append(offsets[-1] + len(monos))
    ncols = offsets[-1]
    rows: dict[tuple, int] = {}
    entries = []
    gens = [MPoly.var(vars, v) for v in X.vars]
    for ci in range(ncoords):
        for j, m in enumerate(comp_monos[ci]):
            col = offsets[ci] + j
            mono = MPoly(vars, {m: ONE})
            # [X, Y] with Y = mono * d/d z_ci:
            #   comp ci gains X(mono); comp k loses mono * dX_k/dz_ci
            img = X.apply(mono)
            for e, c in img.terms.items():
                i = rows.setdefault((ci,) + e, len(rows))
                entries.append((i, col, c))
            for k in range(ncoords):
                loss = mono * X.comps[k].diff(X.vars[ci])
                for e, c in loss.terms.items():
                    i = rows.setdefault((k,) + e, len(rows))
                    entries.append((i, col, -c))
    d = _field_radicand(X)

    def to_field(vec) -> PolyVF:
        comps = []
        for ci in range(ncoords):
            comps.append(MPoly(vars, {
                m: vec[offsets[ci] + j] for j, m in enumerate(comp_monos[ci])
            }))
        return PolyVF(X.vars, comps, X.weights)

    def verify(vec) -> bool:
        return lie_bracket(X, to_field(vec)).is_zero()

    basis = nullspace_field(entries, len(rows), ncols, d, verify)
    return [to_field(v) for v in basis]


# -- Halphen structure -----------------------------------------------------------------


def verify_halphen_type(X: QuadVF, C: PolyVF) -> FieldElem:
    """The scalar c with [C, X] = c E; checks [E, C] = -C first."""
    E = euler_field(X.vars)
    EC = lie_bracket(E, C)
    for a, b in zip(EC.comps, C.comps):
        diff = (a + b) if isinstance(a, RatFunc) or isinstance(b, RatFunc) else (a + b)
        d = (RatFunc(diff) if isinstance(diff, MPoly) else diff)
        if not d.is_zero():
            raise NotProportionalToEuler("C is not homogeneous of degree 0 ([E,C] != -C)")
    B = lie_bracket(C, X)
    c_val = None
    for comp, v in zip(B.comps, X.vars):
        r = comp if isinstance(comp, RatFunc) else RatFunc(comp)
        ratio = r / RatFunc(MPoly.var(r.num.vars, v))
        if not ratio.is_polynomial() or not ratio.as_poly().is_constant():
            raise NotProportionalToEuler(f"[C,X] component along {v} is not a multiple of {v}")
        cv = ratio.as_poly().constant_value()
        if c_val is None:
            c_val = cv
        elif c_val != cv:
            raise NotProportionalToEuler("[C,X] has different scalars per component")
    return c_val


def triangle_invariant(vars: Sequence[str], m: Sequence, xi_name: str = "xi") -> RatFunc:
    """The triangle-data invariant
    (1/2) [ (1-1/m1^2)(xi-1)xi - (1-1/m2^2)(xi-1) + (1-1/m3^2)xi ] / (xi^2 (xi-1)^2),
    with 1 - 1/m_i^2 supplied exactly (m_i FieldElem or RatFunc)."""
    xv = (xi_name,)
    xi = MPoly.var(xv, xi_name)
    one = MPoly.const(xv, 1)
    coeffs = []
    for mi in m:
        if isinstance(mi, RatFunc):
            raise TypeError("pass numeric m_i or use triangle_invariant_symbolic")
        mi = FieldElem.coerce(mi)
        coeffs.append(FieldElem(1) - mi.inverse() ** 2)
    num = (xi - one) * xi * coeffs[0] - (xi - one) * coeffs[1] + xi * coeffs[2]
    den = 2 * xi ** 2 * (xi - one) ** 2
    return RatFunc(num, den)


class _Factored:
    """core * prod(factors[k][0] ** factors[k][1]) with integer exponents.

    Numerators stay small because every new core is shrunk by trial exact
    division against the known factor pool (the adapted function's pieces plus
    dynamically registered cores); no general multivariate gcd is needed.
    """

    __slots__ = ("core", "factors")

    def __init__(self, core: MPoly, factors: dict | None = None):
        self.core = core
        self.factors = dict(factors or {})

    def mul_factor(self, key, delta):
        f = dict(self.factors)
        f[key] = f.get(key, 0) + delta
        if f[key] == 0:
            del f[key]
        return _Factored(self.core, f)

    def expand_positive(self, pool) -> MPoly:
        out = self.core
        for k, e in self.factors.items():
            if e > 0:
                out = out * pool[k] ** e
        return out

    def den_dict(self):
        return {k: -e for k, e in self.factors.items() if e < 0}


def _shrink(core: MPoly, pool: dict) -> _Factored:
    factors: dict = {}
    changed = True
    while changed and not core.is_constant():
        changed = False
        for key, f in pool.items():
            try:
                q = exact_divide(core, f)
            except InexactDivision:
                continue
            core = q
            factors[key] = factors.get(key, 0) + 1
            changed = True
    return _Factored(core, factors)


def projective_invariant(X: PolyVF, xi: RatFunc, section: Sequence[RatFunc],
                         section_var: str = "s",
                         factor_base: Sequence[MPoly] | None = None) -> RatFunc:
    """S = -(1/xi'^2) { xi, t } as a function of xi alone.

    ``section`` is a rational curve sigma with xi(sigma(s)) = s (validated);
    the candidate R(s) = S(sigma(s)) is then certified by the exact identity
    S = R(xi) in coordinates.  Raises NotAFunctionOfXi when that fails.
    ``factor_base``: known polynomial factors of the adapted function, used
    to keep the derivative chain in factored lowest terms.
    """
    xi = xi if isinstance(xi, RatFunc) else RatFunc(xi)
    vars = xi.num.vars
    pool: dict = {}
    base = list(factor_base) if factor_base else [xi.num, xi.den]
    for f in base:
        f = f.lift(vars) if f.vars != vars else f
        if not f.is_constant():
            pool[len(pool)] = f
    def register(p: MPoly):
        if not p.is_constant() and all(not (p - q).is_zero() for q in pool.values()):
            pool[len(pool)] = p

    def derive(fr: _Factored) -> _Factored:
        # X(core * prod f^e) = [X(core) + core * sum e_i X(f_i)/f_i] * prod f^e
        num = X.apply(fr.core)
        extra = MPoly.zero(vars)
        F = MPoly.const(vars, 1)
        keys = list(fr.factors)
        for k in keys:
            F = F * pool[k]
        for k in keys:
            others = MPoly.const(vars, 1)
            for k2 in keys:
                if k2 != k:
                    others = others * pool[k2]
            extra = extra + X.apply(pool[k]) * others * fr.factors[k]
        total = num * F + fr.core * extra
        shr = _shrink(total, pool)
        out = _Factored(shr.core, shr.factors)
        for k in keys:
            out = out.mul_factor(k, fr.factors[k] - 1)
        return out

    xi0 = _shrink(xi.num, pool)
    for k, f in list(pool.items()):
        if (f - xi.den).is_zero():
            xi0 = xi0.mul_factor(k, -1)
            break
    else:
        den_sh = _shrink(xi.den, pool)
        for k, e in den_sh.factors.items():
            xi0 = xi0.mul_factor(k, -e)
        register(den_sh.core)
        if not den_sh.core.is_constant():
            xi0 = xi0.mul_factor(len(pool) - 1, -1)
    xi1 = derive(xi0)
    register(xi1.core)
    xi2 = derive(xi1)
    xi3 = derive(xi2)
    # S = -(xi3 * xi1 - (3/2) xi2^2) / xi1^4, assembled with factored cancellation
    t1 = _Factored(xi3.core * xi1.core, _merge(xi3.factors, xi1.factors))
    t2 = _Factored(xi2.core * xi2.core * Fraction(3, 2), _merge(xi2.factors, xi2.factors))
    common = {k: min(t1.factors.get(k, 0), t2.factors.get(k, 0))
              for k in set(t1.factors) | set(t2.factors)}
    r1 = {k: e - common.get(k, 0) for k, e in t1.factors.items() if e - common.get(k, 0)}
    r2 = {k: e - common.get(k, 0) for k, e in t2.factors.items() if e - common.get(k, 0)}
    if any(e < 0 for e in list(r1.values()) + list(r2.values())):
        neg = {k: min(r1.get(k, 0), r2.get(k, 0), 0) for k in set(r1) | set(r2)}
        r1 = {k: r1.get(k, 0) - neg.get(k, 0) for k in set(r1) | set(neg)}
        r2 = {k: r2.get(k, 0) - neg.get(k, 0) for k in set(r2) | set(neg)}
        common = {k: common.get(k, 0) + neg.get(k, 0) for k in set(common) | set(neg)}
        r1 = {k: e for k, e in r1.items() if e}
        r2 = {k: e for k, e in r2.items() if e}
    delta = _Factored(t1.core, r1).expand_positive(pool) - _Factored(t2.core, r2).expand_positive(pool)
    dsh = _shrink(delta, pool)
    num_f = _Factored(-dsh.core, _merge(dsh.factors, common))
    for k, e in _merge(xi1.factors, _merge(xi1.factors, _merge(xi1.factors, xi1.factors))).items():
        num_f = num_f.mul_factor(k, -e)
    den_core = xi1.core ** 4
    # S = num_f / den_core: split positive/negative exponents
    s_num = num_f.expand_positive(pool)
    s_den = den_core
    for k, e in num_f.den_dict().items():
        s_den = s_den * pool[k] ** e
    # validate the section and read off the candidate R
    bindings = dict(zip(X.vars, section))
    xi_on_sigma = xi.subs(bindings)
    svar = MPoly.var(xi_on_sigma.num.vars, section_var)
    if not (xi_on_sigma - RatFunc(svar)).is_zero():
        raise ValueError("section curve does not satisfy xi(sigma(s)) = s")
    from ..exactalg.poly import _subs_ratfunc
    R = _subs_ratfunc(s_num, bindings) / _subs_ratfunc(s_den, bindings)
    # certify S == R(xi) as an exact identity in coordinates
    comp_num = _subs_rat_back(R.num, section_var, xi)
    comp_den = _subs_rat_back(R.den, section_var, xi)
    lhs = s_num * comp_den[0] * comp_num[1]
    rhs = s_den * comp_num[0] * comp_den[1]
    if not (lhs - rhs).is_zero():
        raise NotAFunctionOfXi("the Schwarzian expression is not a function of xi alone")
    return R


def _merge(a: dict, b: dict) -> dict:
    out = dict(a)
    for k, e in b.items():
        out[k] = out.get(k, 0) + e
        if out[k] == 0:
            del out[k]
    return out


def _subs_rat_back(p: MPoly, var: str, xi: RatFunc) -> tuple[MPoly, MPoly]:
    """p with var -> xi, returned as (numerator, denominator) cleared exactly."""
    d = p.degree_in(var) if var in p.vars and p.involves(var) else 0
    coeffs = p.coeffs_in(var) if d else [p]
    num = MPoly.zero(xi.num.vars)
    for k, c in enumerate(coeffs):
        c2 = c.lift(tuple(dict.fromkeys(xi.num.vars + c.vars)))
        num = num + c2 * xi.num ** k * xi.den ** (d - k)
    return num, xi.den ** d


# -- maps -------------------------------------------------------------------------------


def verify_pushforward(phi: Sequence[RatFunc], X: PolyVF, Y: PolyVF, label: str = "") -> VerifyReport:
    """phi maps X's space to Y's: X(phi_j) = Y_j(phi) for each target coordinate."""
    if len(phi) != len(Y.vars):
        raise DimensionMismatch(f"{len(phi)} components vs {len(Y.vars)} target coordinates")
    bindings = dict(zip(Y.vars, phi))
    for j, w in enumerate(Y.vars):
        lhs = X.apply(phi[j])
        if isinstance(lhs, MPoly):
            lhs = RatFunc(lhs)
        comp = Y.comps[j]
        rhs = (comp if isinstance(comp, RatFunc) else RatFunc(comp)).subs(bindings)
        if not (lhs - rhs).is_zero():
            return VerifyReport(False, lhs - rhs, None, label or f"pushforward:{w}")
    return VerifyReport(True, None, None, label)


def verify_solution_map(ctx: DerivationContext, maps: Mapping[str, object], target: PolyVF,
                        label: str = "", rng: random.Random | None = None) -> VerifyReport:
    """d(map_i) = P_i(map) in ctx for every target coordinate i."""
    fr = {v: Frac.of(m, ctx.vars) for v, m in maps.items()}
    for v in target.vars:
        if v not in fr:
            raise DimensionMismatch(f"no map component for {v}")
    for i, v in enumerate(target.vars):
        lhs = ctx.d(fr[v])
        rhs = _compose_frac(target.comps[i], dict(fr), ctx.vars)
        resid = lhs - rhs
        if not ctx.is_zero(resid):
            return VerifyReport(False, resid, None, label or f"solution-map:{v}")
    rep = VerifyReport(True, None, None, label)
    if rng is not None:
        ok = True
        for i, v in enumerate(target.vars):
            lhs = ctx.d(fr[v])
            rhs = _compose_frac(target.comps[i], dict(fr), ctx.vars)
            ok = ok and ctx.numeric_zero(lhs - rhs, rng, trials=3)
        rep.crosscheck = ok
    return rep


def _compose_frac(comp, fr: Mapping[str, Frac], vars) -> Frac:
    """Evaluate a polynomial/rational component on Frac values, over `vars`."""
    if isinstance(comp, RatFunc):
        return _compose_frac(comp.num, fr, vars) / _compose_frac(comp.den, fr, vars)
    acc = Frac(MPoly.zero(vars))
    one = Frac(MPoly.const(vars, 1))
    degs = {v: comp.degree_in(v) if comp.involves(v) else 0 for v in comp.vars}
    pows: dict[str, list[Frac]] = {}
    for v in comp.vars:
        if v in fr:
            pows[v] = [one]
            for _ in range(degs[v]):
                pows[v].append(pows[v][-1] * fr[v])
    for e, c in comp.terms.items():
        term = Frac(MPoly.const(vars, c))
        for v, k in zip(comp.vars, e):
            if k:
                if v not in fr:
                    raise DimensionMismatch(f"component references unmapped variable {v}")
                term = term * pows[v][k]
        acc = acc + term
    return acc


def verify_birational_inverse(fwd: Mapping[str, object], bwd: Mapping[str, object],
                              ctx: DerivationContext, source_vars: Sequence[str],
                              label: str = "") -> VerifyReport:
    """bwd(fwd) = identity on the source, modulo the context relations.

    ``fwd`` maps target coordinates to source expressions, ``bwd`` the reverse;
    both compositions happen on the source side (ctx's variables).
    """
    fr_fwd = {v: Frac.of(m, ctx.vars) for v, m in fwd.items()}
    for v in source_vars:
        expr = bwd[v]
        composed = _compose_frac(expr if isinstance(expr, (MPoly, RatFunc)) else expr.as_ratfunc(),
                                 fr_fwd, ctx.vars)
        resid = composed - Frac(MPoly.var(ctx.vars, v))
        if not ctx.is_zero(resid):
            return VerifyReport(False, resid, None, label or f"inverse:{v}")
    return VerifyReport(True, None, None, label)


# -- equivariance -------------------------------------------------------------------------


def cyclotomic(d: int, var: str = "lam") -> MPoly:
    """The d-th cyclotomic polynomial (exact, by recursive division)."""
    lam = MPoly.var((var,), var)
    num = lam ** d - 1
    for e in range(1, d):
        if d % e == 0:
            num = exact_divide(num, cyclotomic(e, var))
    return num


def _cyc_reduce(p: MPoly, lam: str, d: int, phi: MPoly) -> MPoly:
    """Reduce lambda-powers mod lambda^d = 1, then take the remainder mod phi."""
    if lam not in p.vars:
        return p
    i = p.vars.index(lam)
    folded: dict = {}
    for e, c in p.terms.items():
        ne = list(e)
        ne[i] %= d
        key = tuple(ne)
        folded[key] = folded.get(key, ZERO) + c
    q = MPoly(p.vars, folded)
    phi = phi.lift(p.vars)
    # univariate remainder in lam (phi monic)
    while q.degree_in(lam) >= phi.degree_in(lam):
        k = q.degree_in(lam)
        coeffs = q.coeffs_in(lam)
        lead = coeffs[k]
        shift = k - phi.degree_in(lam)
        lamv = MPoly.var(p.vars, lam)
        q = q - lead * lamv ** shift * phi
    return q


class EquivarianceReport:
    __slots__ = ("scalars", "ok", "label")

    def __init__(self, scalars, ok, label=""):
        self.scalars = scalars
        self.ok = ok
        self.label = label

    def __repr__(self):
        return f"EquivarianceReport({self.label}: powers {self.scalars}, {'pass' if self.ok else 'FAIL'})"


def verify_equivariance(weights: Mapping[str, int], order: int, objects: Sequence,
                        expected_powers: Sequence[int | None], lam: str = "lam",
                        label: str = "") -> EquivarianceReport:
    """Diagonal map z_i -> lam^w_i z_i, lam a primitive `order`-th root of unity.

    For an MPoly Q, finds k with Q(lam^w z) = lam^k Q(z); for a PolyVF X, the
    pushforward scalar with l_* X = lam^k X.  Scalars are matched modulo the
    cyclotomic relation; expected None entries are skipped.
    """
    phi = cyclotomic(order, lam)
    found = []
    ok = True
    for obj, want in zip(objects, expected_powers):
        if isinstance(obj, MPoly):
            k = _pullback_power(obj, weights, order, lam, phi)
        elif isinstance(obj, PolyVF):
            k = _pushforward_power(obj, weights, order, lam, phi)
        else:
            raise TypeError(type(obj))
        found.append(k)
        if want is not None and (k is None or (k - want) % order != 0):
            ok = False
    return EquivarianceReport(found, ok, label)


def _scaled_subs(p: MPoly, weights, order, lam) -> MPoly:
    vars = tuple(dict.fromkeys(p.vars + (lam,)))
    lamv = MPoly.var(vars, lam)
    bindings = {}
    for v, w in weights.items():
        bindings[v] = MPoly.var(vars, v) * lamv ** (w % order)
    return p.lift(vars).subs_poly(bindings)


def _pullback_power(Q: MPoly, weights, order, lam, phi) -> int | None:
    img = _scaled_subs(Q, weights, order, lam)
    vars = img.vars
    lamv = MPoly.var(vars, lam)
    base = Q.lift(vars)
    for k in range(order):
        resid = _cyc_reduce(img - lamv ** k * base, lam, order, phi)
        if resid.is_zero():
            return k
    return None


def _pushforward_power(X: PolyVF, weights, order, lam, phi) -> int | None:
    # field transported by l: (l* X)_i (z) = lam^{-w_i} X_i(lam^{w} z)
    comps_img = []
    for v, comp in zip(X.vars, X.comps):
        if not isinstance(comp, MPoly):
            raise TypeError("field equivariance needs polynomial components")
        img = _scaled_subs(comp, weights, order, lam)
        vars = img.vars
        lamv = MPoly.var(vars, lam)
        comps_img.append(img * lamv ** ((-weights[v]) % order))
    for k in range(order):
        good = True
        for img, comp in zip(comps_img, X.comps):
            vars = img.vars
            lamv = MPoly.var(vars, lam)
            resid = _cyc_reduce(img - lamv ** k * comp.lift(vars), lam, order, phi)
            if not resid.is_zero():
                good = False
                break
        if good:
            return k
    return None


# -- symmetric quotient ----------------------------------------------------------------


def symmetric_chazy_quotient(X: QuadVF):
    """Constants (a, b, c, d) with phi''' = a phi^4 + b phi^2 phi' + c phi'^2 + d phi phi''
    for phi = x + y + z, when X is invariant under all coordinate permutations."""
    from ..exactalg import SqMatrix
    vars = X.vars
    perms = [(1, 0, 2), (0, 2, 1)]
    gens = [MPoly.var(vars, v) for v in vars]
    for p in perms:
        A = SqMatrix([[ONE if p[i] == j else ZERO for j in range(3)] for i in range(3)])
        from ..vfield import linear_change
        if not (linear_change(X, A) == X):
            raise NotSymmetric("field is not permutation invariant")
    phi = gens[0] + gens[1] + gens[2]
    d1 = X.apply(phi)
    d2 = X.apply(d1)
    d3 = X.apply(d2)
    basis = [phi ** 4, phi ** 2 * d1, d1 ** 2, phi * d2]
    monos = sorted(set(itertools.chain(*[b.terms.keys() for b in basis], d3.terms.keys())))
    rows = []
    rhs = []
    for m in monos:
        rows.append([b.terms.get(m, ZERO) for b in basis])
        rhs.append(d3.terms.get(m, ZERO))
    sol = _solve_exact(rows, rhs)
    if sol is None:
        raise NoSuchConstants("no quartic reduction exists")
    return tuple(sol)


def _solve_exact(rows, rhs):
    """Least-structure exact solve of an overdetermined consistent system."""
    m = [row[:] + [r] for row, r in zip(rows, rhs)]
    ncols = len(rows[0])
    piv = []
    r = 0
    for c in range(ncols):
        k = next((i for i in range(r, len(m)) if m[i][c]), None)
        if k is None:
            continue
        m[r], m[k] = m[k], m[r]
        inv = m[r][c].inverse()
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        piv.append(c)
        r += 1
    for i in range(r, len(m)):
        if m[i][ncols]:
            return None
    sol = [ZERO] * ncols
    for i, c in enumerate(piv):
        sol[c] = m[i][ncols]
    return sol


def verify_ode_solution(ctx: DerivationContext, candidate, ode_rhs: MPoly,
                        order: int, jet_names: Sequence[str], label: str = "") -> VerifyReport:
    """candidate satisfies w^(order) = ode_rhs(w, w', ..., w^(order-1)) in ctx."""
    jets = [Frac.of(candidate, ctx.vars)]
    for _ in range(order):
        jets.append(ctx.d(jets[-1]))
    rhs = _compose_frac(ode_rhs, dict(zip(jet_names, jets[:order])), ctx.vars)
    resid = jets[order] - rhs
    ok = ctx.is_zero(resid)
    return VerifyReport(ok, None if ok else resid, None, label)
