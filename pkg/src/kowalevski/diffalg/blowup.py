"""Resonant-node blowups and the linearizability obstruction.

A foliation 1-form A du + B dv with a 1:k node at the origin is blown up
k-1 times, each time recentering along the exponent-1 eigendirection; the
1:1 node at the end carries a single resonant coefficient whose vanishing is
the linearizability condition.  Everything is polynomial: eigendirection
slopes are rational in the parameters, and substitutions clear denominators
by harmless unit rescalings (forms are projective objects).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from ..exactalg import FieldElem, MPoly, RatFunc, ZERO, ONE, exact_divide, divides, InexactDivision
from ..vfield import QuadVF


class WrongResonance(ArithmeticError):
    pass


class FoliationForm:
    """A du + B dv; coefficients may carry parameter variables."""

    __slots__ = ("A", "B", "u", "v")

    def __init__(self, A: MPoly, B: MPoly, u: str, v: str):
        self.A = A
        self.B = B
        self.u = u
        self.v = v


def chart_form(X: QuadVF, u: str = "u", v: str = "v") -> FoliationForm:
    """The induced foliation in the affine chart [u : v : 1]:
    (P1 - u P3) dv - (P2 - v P3) du, all components evaluated at (u, v, 1)."""
    xv, yv, zv = X.vars
    comps = []
    for c in X.comps:
        c = c.subs_poly({xv: MPoly.var(_chart_vars(c, u, v), u),
                         yv: MPoly.var(_chart_vars(c, u, v), v),
                         zv: MPoly.const(_chart_vars(c, u, v), 1)})
        comps.append(c)
    P1, P2, P3 = comps
    uu = MPoly.var(P1.vars, u)
    vv = MPoly.var(P1.vars, v)
    B = P1 - uu * P3
    A = -(P2 - vv * P3)
    return FoliationForm(A, B, u, v)


def _chart_vars(c: MPoly, u: str, v: str):
    params = tuple(x for x in c.vars if x not in ("x", "y", "z"))
    return (u, v) + params


def _linear_part(form: FoliationForm):
    """2x2 linear part of the dual vector field B d/du - A d/dv at the origin."""
    Bu, Bv = _coeff_linear(form.B, form.u), _coeff_linear(form.B, form.v)
    Au, Av = _coeff_linear(form.A, form.u), _coeff_linear(form.A, form.v)
    return [[RatFunc(Bu), RatFunc(Bv)], [RatFunc(-Au), RatFunc(-Av)]]


def _coeff_linear(p: MPoly, w: str) -> MPoly:
    """Coefficient of w in the chart-degree-one part (chart vars sit first)."""
    iu = p.vars.index(w)
    out = MPoly.zero(p.vars)
    for e, c in p.terms.items():
        if e[iu] == 1 and e[0] + e[1] == 1:
            ne = list(e)
            ne[iu] = 0
            out = out + MPoly(p.vars, {tuple(ne): c})
    return out


def node_ratio_check(form: FoliationForm, k: int) -> RatFunc:
    """Verify the origin is a node with eigenvalue ratio 1:k; return the small
    eigenvalue s = trace/(k+1) (rational in the parameters)."""
    M = _linear_part(form)
    tr = M[0][0] + M[1][1]
    det = M[0][0] * M[1][1] - M[0][1] * M[1][0]
    if not (det * (k + 1) ** 2 - tr * tr * k).is_zero():
        raise WrongResonance(f"origin is not a 1:{k} node")
    return tr / Fraction(k + 1)


def _eigen_slope(form: FoliationForm, s: RatFunc) -> tuple[MPoly, MPoly]:
    """Direction (e_u, e_v) of the eigenvalue-s eigenvector, cleared to polynomials."""
    M = _linear_part(form)
    a, b = M[0][0] - s, M[0][1]
    c, d = M[1][0], M[1][1] - s
    # rows of (M - s) annihilate the eigenvector: (a b; c d) w = 0
    if not b.is_zero() or not a.is_zero():
        e_u, e_v = b, -a
    else:
        e_u, e_v = d, -c
    den = e_u.den * e_v.den
    pu = e_u.num * e_v.den
    pv = e_v.num * e_u.den
    return pu, pv


def blow_up_once(form: FoliationForm, k: int, new_var: str) -> FoliationForm:
    """One blowup along the exponent-1 direction of a 1:k node.

    Substitutes v = (cd*w + cn) u with cn/cd the eigendirection slope (cleared
    of denominators; the w-rescaling only changes the final obstruction by unit
    factors) and divides out the exceptional power of u.
    """
    s = node_ratio_check(form, k)
    e_u, e_v = _eigen_slope(form, s)
    if e_u.is_zero():
        raise WrongResonance("exponent-1 direction is vertical; swap chart axes first")
    cn, cd = e_v, e_u  # slope = cn/cd
    old_vars = form.A.vars
    params = tuple(x for x in old_vars if x not in (form.u, form.v))
    slope_var = "_slope"
    nv = (form.u, new_var) + params + (slope_var,)
    uu = MPoly.var(nv, form.u)
    ww = MPoly.var(nv, new_var)
    ss = MPoly.var(nv, slope_var)
    repl = {form.u: uu, form.v: (ww + ss) * uu}
    A_t = form.A.subs_poly(repl).lift(nv)
    B_t = form.B.subs_poly(repl).lift(nv)
    # dv = (w + slope) du + u dw
    A_new = A_t + (ww + ss) * B_t
    B_new = uu * B_t
    # clear the slope symbol: substitute slope -> cn/cd, homogenized by the same
    # cd power on both components (a global unit factor on the form)
    m = max(A_new.degree_in(slope_var), B_new.degree_in(slope_var))
    out_vars = (form.u, new_var) + params
    A_new = _slope_clear(A_new, slope_var, cn, cd, m, out_vars)
    B_new = _slope_clear(B_new, slope_var, cn, cd, m, out_vars)
    uu = MPoly.var(out_vars, form.u)
    mord = min(_u_order(A_new, form.u), _u_order(B_new, form.u))
    for _ in range(mord):
        A_new = exact_divide(A_new, uu)
        B_new = exact_divide(B_new, uu)
    return FoliationForm(A_new, B_new, form.u, new_var)


def _slope_clear(p: MPoly, slope_var: str, cn: MPoly, cd: MPoly, m: int, out_vars) -> MPoly:
    coeffs = p.coeffs_in(slope_var)
    cn = cn.lift(out_vars)
    cd = cd.lift(out_vars)
    acc = MPoly.zero(out_vars)
    for kk, c in enumerate(coeffs):
        acc = acc + c.lift(out_vars) * cn ** kk * cd ** (m - kk)
    return acc


def _u_order(p: MPoly, u: str) -> int:
    i = p.vars.index(u)
    return min((e[i] for e in p.terms), default=0)


def resonance_coefficient(form: FoliationForm) -> tuple[MPoly, MPoly]:
    """At a 1:1 resonant node u dt - (t + C u) du (up to a unit): returns
    (numerator, unit denominator) of C; C = 0 is linearizability."""
    node_ratio_check(form, 1)
    a_t = _coeff_linear(form.A, form.v)
    a_u = _coeff_linear(form.A, form.u)
    if a_t.is_zero():
        raise WrongResonance("degenerate 1:1 node normal form")
    return a_u, a_t


def blowup_obstruction(form: FoliationForm, k: int) -> tuple[MPoly, MPoly]:
    """Iterate blowups from a 1:k node down to 1:1 and return the resonant
    coefficient as (numerator, unit-denominator), polynomials in the parameters."""
    for step in range(k - 1):
        form = blow_up_once(form, k - step, f"w{step + 1}")
    return resonance_coefficient(form)


def factor_against(p: MPoly, factors: Sequence[MPoly]) -> tuple[dict, MPoly]:
    """Split p as prod(factors^e) * cofactor by trial exact division."""
    exps: dict[int, int] = {}
    for i, f in enumerate(factors):
        f = f.lift(p.vars) if f.vars != p.vars else f
        while True:
            try:
                p = exact_divide(p, f)
            except InexactDivision:
                break
            exps[i] = exps.get(i, 0) + 1
    return exps, p
