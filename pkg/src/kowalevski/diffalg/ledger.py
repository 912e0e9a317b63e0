"""The claim ledger: every symbolically checkable integration claim, tagged.

Each claim is a named callable returning True/False; `run_ledger` executes a
selection and reports one row per claim.  Tags are stable identifiers, usable
as a citation key for the statement each row certifies.
"""

from __future__ import annotations

import time
from fractions import Fraction
from typing import Callable, Iterable

from ..exactalg import FieldElem, MPoly, RatFunc, poly_ring, exact_divide, divides, poly_substitute
from ..vfield import PolyVF, QuadVF, make_equation, lie_bracket, euler_field
from .context import DerivationContext, Frac, weierstrass_context, jacobi_sn_context, jet_context
from .checks import (
    verify_first_integral, find_polynomial_first_integrals, find_commuting_fields,
    verify_halphen_type, projective_invariant, triangle_invariant, verify_pushforward,
    verify_solution_map, verify_birational_inverse, verify_equivariance,
    symmetric_chazy_quotient, verify_ode_solution, _compose_frac,
)
from .models import (
    JETS, chazy_map, chazy_ix_context, chazy_x_context,
    jacobian_polys, jacobian_fields, burnside_map, JAC_VARS,
    torus_polys, torus_fields, torus_map, xxvi_to_xxiv_map, TORUS_VARS,
    theta_context, quadvf_context, sqrt_of,
)
from .blowup import chart_form, blowup_obstruction, factor_against, FoliationForm


class ClaimResult:
    __slots__ = ("tag", "ok", "seconds", "detail")

    def __init__(self, tag: str, ok: bool, seconds: float, detail: str = ""):
        self.tag = tag
        self.ok = ok
        self.seconds = seconds
        self.detail = detail

    def to_json(self) -> dict:
        out = {"claim": self.tag, "status": "pass" if self.ok else "fail",
               "seconds": round(self.seconds, 3)}
        if self.detail:
            out["detail"] = self.detail
        return out


_CLAIMS: dict[str, Callable[[], bool]] = {}


def claim(tag: str):
    def reg(fn):
        _CLAIMS[tag] = fn
        return fn
    return reg


def claim_tags() -> list[str]:
    return sorted(_CLAIMS)


def run_ledger(tags: Iterable[str] | None = None) -> list[ClaimResult]:
    rows = []
    for tag in (sorted(tags) if tags is not None else claim_tags()):
        fn = _CLAIMS[tag]
        t0 = time.time()
        try:
            ok = bool(fn())
            detail = ""
        except Exception as e:  # a claim failing to even run is a failure with detail
            ok = False
            detail = f"{type(e).__name__}: {e}"
        rows.append(ClaimResult(tag, ok, time.time() - t0, detail))
    return rows


# -- first integrals and commutants -----------------------------------------------

INTEGRAL_COMMUTANT_DEGREES = {
    "XVII": (10, 4), "XVIII": (10, 14), "XXII": (10, 4),
    "XIX": (12, 6), "XX": (12, 6), "XXIII": (12, 6), "XXI": (12, 18),
}


def _integral_dimension(eq: str, degree: int) -> bool:
    X = make_equation(eq, {})
    basis = find_polynomial_first_integrals(X, degree)
    return len(basis) >= 1 and all(verify_first_integral(X, Q).ok for Q in basis)


def _commutant_dimension(eq: str, degree: int) -> bool:
    X = make_equation(eq, {})
    basis = find_commuting_fields(X, degree)
    return len(basis) >= 1 and all(lie_bracket(X, Y).is_zero() for Y in basis)


for _eq, (_di, _dc) in INTEGRAL_COMMUTANT_DEGREES.items():
    claim(f"first-integral:{_eq}:deg{_di}")(
        lambda eq=_eq, d=_di: _integral_dimension(eq, d))
    claim(f"commutant:{_eq}:deg{_dc}")(
        lambda eq=_eq, d=_dc: _commutant_dimension(eq, d))


@claim("first-integral:XVI:deg6")
def _xvi_integral():
    X = make_equation("XVI", {"beta": 2})
    basis = find_polynomial_first_integrals(X, 6)
    return len(basis) >= 1


@claim("commutation:XVI-family")
def _xvi_commute():
    # all members commute pairwise <=> the beta-linear pieces commute
    X0 = make_equation("XVI", {"beta": 0})
    X1 = make_equation("XVI", {"beta": 1})
    X5 = make_equation("XVI", {"beta": 5})
    return (lie_bracket(X0, X1).is_zero() and lie_bracket(X0, X5).is_zero()
            and lie_bracket(X1, X5).is_zero())


@claim("first-integral:XXVII:deg8-printed")
def _q27():
    data = burnside_map("XXVII")
    return verify_first_integral(make_equation("XXVII", {}), data["Q"]).ok


@claim("first-integral:XXVIII:deg8-printed")
def _q28():
    data = burnside_map("XXVIII")
    return verify_first_integral(make_equation("XXVIII", {}), data["Q"]).ok


@claim("first-integral:XXIV:deg12-printed")
def _q24():
    data = torus_map("XXIV")
    return verify_first_integral(make_equation("XXIV", {}), data["Q"]).ok


@claim("first-integral:XXV:deg12-printed")
def _q25():
    data = torus_map("XXV")
    return verify_first_integral(make_equation("XXV", {}), data["Q"]).ok


@claim("chazy:weighted-integrals")
def _chazy_weighted():
    w = {"x": 1, "y": 2, "z": 3}
    cix = make_equation("ChazyIX", {})
    cx = make_equation("ChazyX", {})
    return (len(find_polynomial_first_integrals(cix, 10, w)) >= 1
            and len(find_commuting_fields(cix, 4, w)) >= 1
            and len(find_polynomial_first_integrals(cx, 12, w)) >= 1
            and len(find_commuting_fields(cx, 6, w)) >= 1)


# -- Halphen structure --------------------------------------------------------------


def _c_field_for(eq: str):
    vars3 = ("x", "y", "z")
    x, y, z = poly_ring(vars3)
    one = MPoly.const(vars3, 1)
    if eq == "HalphenClassic":
        return PolyVF(vars3, [RatFunc(one), RatFunc(one), RatFunc(one)])
    if eq == "II":
        return PolyVF(vars3, [RatFunc(one), RatFunc(-y, x), RatFunc(MPoly.zero(vars3))])
    if eq == "III":
        return PolyVF(vars3, [RatFunc(3 * one), RatFunc(x - 3 * y, x), RatFunc(3 * y - z, y)])
    if eq == "IV":
        den = y ** 2 - x * z - y * z
        return PolyVF(vars3, [RatFunc(-(x ** 2 - x * z - y * z), den), RatFunc(one),
                              RatFunc(z * (x - y), den)])
    raise KeyError(eq)


@claim("halphen:classic")
def _halphen_classic():
    return verify_halphen_type(make_equation("HalphenClassic", {}), _c_field_for("HalphenClassic")) == FieldElem(2)


@claim("halphen:II")
def _halphen_ii():
    return verify_halphen_type(make_equation("II", {"n": 3, "m": 4}), _c_field_for("II")) == FieldElem(2)


@claim("halphen:III")
def _halphen_iii():
    C = _c_field_for("III")
    return all(
        verify_halphen_type(make_equation("III", {"k": k}), C) == FieldElem(6 - k)
        for k in (2, 5, 7)
    )


@claim("halphen:IV")
def _halphen_iv():
    C = _c_field_for("IV")
    return all(
        verify_halphen_type(make_equation("IV", {"m": m}), C) == FieldElem(2 * (m - 6))
        for m in (3, 4)
    )


ADAPTED = {}


def _adapted_data(eq: str, params=None):
    """Adapted function, section curve, factor base, triangle data."""
    vars3 = ("x", "y", "z")
    x, y, z = poly_ring(vars3)
    sv = ("s",)
    s = MPoly.var(sv, "s")
    one_s = MPoly.const(sv, 1)
    if eq == "I":
        xi = RatFunc(x - y, z - y)
        section = [RatFunc(s), RatFunc(MPoly.zero(sv)), RatFunc(one_s)]
        base = [x - y, z - y, x - z]
        return xi, section, base
    if eq == "II":
        from ..vfield import eq_ii_beta
        n, m = params["n"], params["m"]
        coef = FieldElem(2) * eq_ii_beta(n, m) / FieldElem(n)
        xi = RatFunc(MPoly.const(vars3, coef) * x * y, z ** 2)
        section = [RatFunc(s * coef.inverse().rat), RatFunc(one_s), RatFunc(one_s)]
        return xi, section, [x, y, z]
    if eq == "III":
        xi = RatFunc(x * (x - 6 * y) ** 3, (x ** 2 - 9 * x * y + 9 * y * z) ** 2)
        section = [RatFunc(one_s), RatFunc((one_s - s) * Fraction(1, 6)),
                   RatFunc(MPoly.const(sv, Fraction(1, 3)))]
        return xi, section, [x, x - 6 * y, x ** 2 - 9 * x * y + 9 * y * z]
    if eq == "IV":
        xi = RatFunc(z * (x + y) ** 3, (x * y + y * z + z * x) ** 2)
        section = [RatFunc(MPoly.zero(sv)), RatFunc(s), RatFunc(one_s)]
        return xi, section, [z, x + y, x * y + y * z + z * x]
    if eq == "ChazyXII":
        k = params["k"]
        C = (Fraction(36) - Fraction(k) ** 2) / Fraction(k) ** 2
        xi = RatFunc(MPoly.const(vars3, C) * (x ** 3 - 9 * x * y + 9 * z) ** 2,
                     (6 * y - x ** 2) ** 3)
        section = [RatFunc(MPoly.zero(sv)), RatFunc(s * Fraction(3, 2) * C),
                   RatFunc(3 * C * s ** 2)]
        return xi, section, [x ** 3 - 9 * x * y + 9 * z, 6 * y - x ** 2]
    raise KeyError(eq)


@claim("projective-invariant:I-symbolic")
def _proj_i():
    X = make_equation("I", None)
    xi, section, base = _adapted_data("I")
    R = projective_invariant(X, xi, section, factor_base=base)
    evars = ("s", "a1", "a2", "a3")
    se, a1e, a2e, a3e = (MPoly.var(evars, v) for v in evars)
    sig = a1e + a2e + a3e - 2
    c1 = RatFunc(sig ** 2 - a1e ** 2, sig ** 2)
    c2 = RatFunc(sig ** 2 - a3e ** 2, sig ** 2)
    c3 = RatFunc(sig ** 2 - a2e ** 2, sig ** 2)
    xiR = RatFunc(se)
    expected = (c1 * (xiR - 1) * xiR - c2 * (xiR - 1) + c3 * xiR) / (2 * xiR ** 2 * (xiR - 1) ** 2)
    return (R - expected).is_zero()


@claim("projective-invariant:III")
def _proj_iii():
    ok = True
    for k in (2, 5, 7):
        X = make_equation("III", {"k": k})
        xi, section, base = _adapted_data("III")
        R = projective_invariant(X, xi, section, factor_base=base)
        ok = ok and (R - triangle_invariant(("s",), (2, 3, k), "s")).is_zero()
    return ok


@claim("projective-invariant:IV")
def _proj_iv():
    ok = True
    for m in (3, 4):
        X = make_equation("IV", {"m": m})
        xi, section, base = _adapted_data("IV")
        R = projective_invariant(X, xi, section, factor_base=base)
        ok = ok and (R - triangle_invariant(("s",), (2, 3, m), "s")).is_zero()
    return ok


@claim("projective-invariant:II")
def _proj_ii():
    params = {"n": 3, "m": 4}
    X = make_equation("II", params)
    xi, section, base = _adapted_data("II", params)
    R = projective_invariant(X, xi, section, factor_base=base)
    return (R - triangle_invariant(("s",), (2, 3, 4), "s")).is_zero()


@claim("projective-invariant:ChazyXII")
def _proj_chazy_xii():
    ok = True
    for k in (5, 7):
        X = make_equation("ChazyXII", {"k": k})
        xi, section, base = _adapted_data("ChazyXII", {"k": k})
        R = projective_invariant(X, xi, section, factor_base=base)
        ok = ok and (R - triangle_invariant(("s",), (3, 2, k), "s")).is_zero()
    return ok


# -- solution maps ---------------------------------------------------------------------

CHAZY_RHS = {}


def _chazy_rhs(which: str) -> MPoly:
    f0, f1, f2 = poly_ring(JETS)
    if which == "IX":
        return 54 * f0 ** 4 + 72 * f0 ** 2 * f1 + 12 * f1 ** 2
    c = MPoly.const(JETS, Fraction(3, 11) * (9 + 7 * sqrt_of(3)))
    return 6 * f0 ** 2 * f1 + c * (f0 ** 2 + f1) ** 2


def _chazy_roundtrip(eq: str) -> bool:
    data = chazy_map(eq)
    X = make_equation(eq, {})
    if not verify_solution_map(data["ctx"], data["fwd"], X).ok:
        return False
    ctx = quadvf_context(eq)
    f0e, f1e, f2e = (data["bwd"][k] for k in JETS)
    if not (ctx.equal(ctx.d(f0e), f1e) and ctx.equal(ctx.d(f1e), f2e)):
        return False
    rhs = _compose_frac(_chazy_rhs(data["chazy"]),
                        {k: Frac.of(data["bwd"][k], ctx.vars) for k in JETS}, ctx.vars)
    if not ctx.is_zero(ctx.d(f2e) - rhs):
        return False
    return verify_birational_inverse(data["fwd"], data["bwd"], data["ctx"], JETS).ok


for _eq in ("XVII", "XVIII", "XIX", "XX", "XXI", "XXII", "XXIII"):
    claim(f"solution-map:{_eq}")(lambda eq=_eq: _chazy_roundtrip(eq))


def _burnside_case(eq: str) -> bool:
    data = burnside_map(eq)
    ctx = quadvf_context(eq)
    fr = {k: Frac.of(v, ctx.vars) for k, v in data["fwd"].items()}
    XJ, _ = jacobian_fields()
    H, K = jacobian_polys()
    if not verify_solution_map(ctx, fr, XJ).ok:
        return False
    if not ctx.is_zero(_compose_frac(H, fr, ctx.vars)):
        return False
    target = Frac.of(RatFunc(data["Q"] * data["K_scale"]), ctx.vars)
    if not ctx.is_zero(_compose_frac(K, fr, ctx.vars) - target):
        return False
    if eq == "XXVII":
        return verify_birational_inverse(data["fwd"], data["bwd"], ctx, ("x", "y", "z")).ok
    comp = _compose_frac(data["bwd"]["y"], fr, ctx.vars)
    return ctx.is_zero(comp - Frac(MPoly.var(ctx.vars, "y")))


claim("solution-map:XXVII")(lambda: _burnside_case("XXVII"))
claim("solution-map:XXVIII")(lambda: _burnside_case("XXVIII"))


def _torus_case(eq: str) -> bool:
    data = torus_map(eq)
    Xp, _ = torus_fields()
    delta, g3 = torus_polys()
    ctx = theta_context(eq)
    fr = {k: Frac.of(v, ctx.vars) for k, v in data["bwd"].items()}
    if not verify_solution_map(ctx, fr, Xp).ok:
        return False
    if not ctx.is_zero(_compose_frac(delta, fr, ctx.vars)):
        return False
    if eq == "XXIV":
        gval = _compose_frac(g3, fr, ctx.vars)
        g2 = Frac(gval.num * gval.num, gval.den * gval.den)
        target = Frac.of(RatFunc(data["Q"].lift(ctx.vars) * data["theta_sq_times_Q"]), ctx.vars)
        if not ctx.is_zero(g2 - target):
            return False
        ok = True
        for v in ("x", "y", "z"):
            compv = _compose_frac(data["fwd"][v], fr, ctx.vars)
            ok = ok and ctx.is_zero(compv - Frac(MPoly.var(ctx.vars, v)))
        if not ok:
            return False
        # forward direction holds on the Delta = 0 locus
        a, b, c, d = poly_ring(TORUS_VARS)
        ctxD = DerivationContext(TORUS_VARS, dict(zip(TORUS_VARS, Xp.comps)),
                                 {"c": 6 * a ** 2 * b + 2 * b ** 3 - d ** 2})
        frf = {k: Frac.of(v, ctxD.vars) for k, v in data["fwd"].items()}
        return verify_solution_map(ctxD, frf, make_equation("XXIV", {})).ok
    comp = _compose_frac(data["fwd"]["x"], fr, ctx.vars)
    return ctx.is_zero(comp - Frac(MPoly.var(ctx.vars, "x")))


claim("solution-map:XXIV")(lambda: _torus_case("XXIV"))
claim("solution-map:XXV")(lambda: _torus_case("XXV"))


@claim("solution-map:XXVI-to-XXIV")
def _xxvi():
    X26 = make_equation("XXVI", {})
    X24 = make_equation("XXIV", {})
    return verify_pushforward(xxvi_to_xxiv_map(), X26, X24).ok


# -- equivariance ------------------------------------------------------------------------


@claim("equivariance:burnside")
def _equi_burn():
    H, K = jacobian_polys()
    XJ, YJ = jacobian_fields()
    rep = verify_equivariance({"u1": 2, "u2": 4, "v1": 3, "v2": 5}, 8,
                              [H, K, XJ, YJ], [2, 0, 1, 3])
    return rep.ok


@claim("equivariance:torus")
def _equi_torus():
    delta, g3 = torus_polys()
    Xp, Xm = torus_fields()
    rep = verify_equivariance({"a": 8, "b": 2, "c": 9, "d": 3}, 12,
                              [delta, g3, Xp, Xm], [6, 0, 1, 7])
    return rep.ok


# -- planar reductions and explicit solutions ----------------------------------------------


@claim("reduction:genrtwod-to-plane")
def _genr():
    # (x,y,z) -> (xy, z) sends the two-plane family onto (2-kappa) w z dw + (z^2 + alpha w) dz
    X = make_equation("GenRTwoD", None)
    vars6 = X.comps[0].vars
    x, y, z = (MPoly.var(vars6, v) for v in ("x", "y", "z"))
    n, m, alpha = (MPoly.var(vars6, v) for v in ("n", "m", "alpha"))
    phi = [RatFunc(x * y), RatFunc(z)]
    tv = ("w", "z", "n", "m", "alpha")
    w, zz, nn, mm, aa = (MPoly.var(tv, v) for v in tv)
    kappa = nn + mm
    Y = PolyVF(("w", "z"), [(2 - kappa) * w * zz, zz ** 2 + aa * w])
    return verify_pushforward(phi, X, Y).ok


@claim("reduction:III-k6")
def _iii_k6():
    vars3 = ("x", "y", "z")
    x, y, z = poly_ring(vars3)
    X = make_equation("III", {"k": 6})
    phi = [RatFunc(4 * x * (x - 6 * y)), RatFunc(16 * x * (x ** 2 - 9 * x * y + 9 * y * z))]
    tv = ("u", "v")
    u, v = poly_ring(tv)
    Y = PolyVF(tv, [v, 6 * u ** 2])
    return verify_pushforward(phi, X, Y).ok


@claim("reduction:XIV")
def _xiv_red():
    vars3 = ("x", "y", "z")
    x, y, z = poly_ring(vars3)
    ok = True
    for q in (2, 4):
        X = make_equation("XIV", {"q": q})
        phi = [RatFunc(x * (x - 2 * y)),
               RatFunc(2 * x * (x ** 2 + (q + 3) * x * y + y * z))]
        u, v = poly_ring(("u", "v"))
        Y = PolyVF(("u", "v"), [v, 6 * u ** 2])
        ok = ok and verify_pushforward(phi, X, Y).ok
    return ok


@claim("reduction:XV")
def _xv_red():
    vars3 = ("x", "y", "z")
    x, y, z = poly_ring(vars3)
    ok = True
    for k in (2, 3):
        X = make_equation("XV", {"k": k})
        phi = [RatFunc(4 * z * (x + y)), RatFunc(-16 * z * (x * y + x * z + y * z))]
        u, v = poly_ring(("u", "v"))
        Y = PolyVF(("u", "v"), [v, 6 * u ** 2])
        ok = ok and verify_pushforward(phi, X, Y).ok
    return ok


@claim("ode-solution:weierstrass-kappa3")
def _ode_k3():
    # z = -wp'/wp solves z'' = (4-k) z z' - (2-k) z^3 at kappa = 3
    ctx = weierstrass_context()
    wp, wq = MPoly.var(ctx.vars, "wp"), MPoly.var(ctx.vars, "wq")
    cand = RatFunc(-wq, wp)
    jv = ("w0", "w1")
    w0, w1 = poly_ring(jv)
    rhs = w0 * w1 + w0 ** 3
    return verify_ode_solution(ctx, cand, rhs, 2, jv).ok


@claim("ode-solution:weierstrass-kappa6")
def _ode_k6():
    ctx = weierstrass_context()
    wp, wq = MPoly.var(ctx.vars, "wp"), MPoly.var(ctx.vars, "wq")
    cand = RatFunc(wq, 2 * wp)
    jv = ("w0", "w1")
    w0, w1 = poly_ring(jv)
    rhs = -2 * w0 * w1 + 4 * w0 ** 3
    return verify_ode_solution(ctx, cand, rhs, 2, jv).ok


@claim("ode-solution:jacobi-kappa4")
def _ode_k4():
    ctx = jacobi_sn_context()
    sn, ii = MPoly.var(ctx.vars, "sn"), MPoly.var(ctx.vars, "ii")
    cand = RatFunc(ii * sn)
    jv = ("w0", "w1")
    w0, w1 = poly_ring(jv)
    rhs = 2 * w0 ** 3
    return verify_ode_solution(ctx, cand, rhs, 2, jv).ok


@claim("ode-solution:quadratic-kappa1")
def _ode_k1():
    # z = -u'/u for any quadratic u: encode jets of u with u'' constant
    vars_ = ("u0", "u1", "cc")
    u0, u1, cc = poly_ring(vars_)
    ctx = DerivationContext(vars_, {"u0": u1, "u1": cc, "cc": 0})
    cand = RatFunc(-u1, u0)
    jv = ("w0", "w1")
    w0, w1 = poly_ring(jv)
    rhs = 3 * w0 * w1 - w0 ** 3
    return verify_ode_solution(ctx, cand, rhs, 2, jv).ok


@claim("riccati-substitution:A-formula")
def _riccati_sub():
    # jets (w, z) with dw = (2-kappa) w z, dz = z^2 + alpha w; then for
    # x' = x^2 + (1-n) z x - w, v = x + (1-n) z / 2 gives v' = v^2 + A
    vars_ = ("w", "z", "x", "alpha", "n", "m")
    w, z, x, alpha, n, m = poly_ring(vars_)
    kappa = n + m
    der = {
        "w": (2 - kappa) * w * z,
        "z": z ** 2 + alpha * w,
        "x": x ** 2 + (1 - n) * z * x - w,
        "alpha": 0, "n": 0, "m": 0,
    }
    ctx = DerivationContext(vars_, der)
    half = Fraction(1, 2)
    v = Frac.of(x + (1 - n) * z * half, vars_)
    A = (1 - n ** 2) * z ** 2 * Fraction(1, 4) + ((alpha * (1 - n)) * half - 1) * w
    resid = ctx.d(v) - (v * v + Frac.of(A, vars_))
    return ctx.is_zero(resid)


def _is_chazy_xii_member(consts):
    """Chazy-XII membership up to the scaling freedom of the quotient variable.

    The family expands to (a, b, c, d) = (f, -12f, 36f - 3, 2); rescaling the
    dependent variable by lambda maps that to (f/l^3, -12f/l^2, (36f-3)/l, 2/l).
    Returns the member parameter f, or None.
    """
    a, b, c, d = consts
    if d.is_zero():
        return None
    lam = FieldElem(2) / d
    f = a * lam ** 3
    if b == -12 * a * lam and c * lam == 36 * f - FieldElem(3):
        return f
    return None


@claim("symmetric-quotient:halphen-classic")
def _sym_classic():
    consts = symmetric_chazy_quotient(make_equation("HalphenClassic", {}))
    f = _is_chazy_xii_member(consts)
    return f is not None and f.is_zero()  # the f = 0 member


@claim("symmetric-quotient:I-symmetric-is-chazy-xii")
def _sym_i():
    # symmetric Halphen member (m_i all 7/2) lands on Chazy XII with
    # f = 4/(36 - k^2) = -4/13, that is k = 7
    X = make_equation("I", {"a1": -4, "a2": -4, "a3": -4})
    f = _is_chazy_xii_member(symmetric_chazy_quotient(X))
    return f == FieldElem(-4) / 13


# -- blowup obstructions -----------------------------------------------------------------


def resonant_node_form_13() -> FoliationForm:
    """The (1,3)-node family (two invariant-plane orbits fixed), beta-cleared."""
    vars6 = ("x", "y", "z", "al", "be")
    x, y, z, al, be = (MPoly.var(vars6, v) for v in vars6)
    P1 = (x ** 2) * be + al * be * x * z + be * be * y * z
    P2 = be * y ** 2 - al * (al + 2) * x * z - be * (al + 2) * y * z
    P3 = be * z * (z - x - y)
    return chart_form(QuadVF([P1, P2, P3], ("x", "y", "z")))


def second_family_residual_form() -> FoliationForm:
    """The (d,f,h) family of the residual second-family search, cleared by 2(2d+3f)."""
    vars7 = ("x", "y", "z", "d", "f", "h")
    x, y, z, d, f, h = (MPoly.var(vars7, v) for v in vars7)
    core = 9 * h - 3 * d - 2 * f
    M = 2 * (2 * d + 3 * f)
    Me, Mg = 2 * d * core, 2 * f * core
    Md_, Mf_, Mh_ = M * d, M * f, M * h
    Ma = Mh_ - Md_ - Me
    Mb = Mh_ - Mf_ - Mg
    Mc = Mh_ + Ma + Mb
    P1 = Ma * x ** 2 + Md_ * y * z + Me * z * x
    P2 = Mb * y ** 2 + Mf_ * y * z + Mg * z * x
    P3 = z * (Mc * z - Ma * x - Mb * y)
    return chart_form(QuadVF([P1, P2, P3], ("x", "y", "z")))


@claim("blowup:resonant-13")
def _blowup_13():
    form = resonant_node_form_13()
    num, unit = blowup_obstruction(form, 3)
    vars_ = num.vars
    al = MPoly.var(vars_, "al")
    be = MPoly.var(vars_, "be")
    expected = al * (al + be) * (2 * al ** 2 + al + 2 * al * be + 3 * be)
    exps, cof = factor_against(num, [expected])
    if exps.get(0, 0) != 1:
        return False
    exps2, cof2 = factor_against(cof, [al, be])
    if not cof2.is_constant():
        return False
    # the critical beta kills the obstruction
    a2, = poly_ring(("al",))
    bsub = RatFunc(-a2 * (2 * a2 + 1), 2 * a2 + 3)
    return poly_substitute(num, {"al": RatFunc(a2), "be": bsub}).is_zero()


@claim("blowup:second-family-septic")
def _blowup_septic():
    form = second_family_residual_form()
    num, unit = blowup_obstruction(form, 4)
    vars_ = num.vars
    d = MPoly.var(vars_, "d")
    f = MPoly.var(vars_, "f")
    h = MPoly.var(vars_, "h")
    factors = [
        d - 9 * h - f,
        3 * d + 2 * f - 9 * h,
        6 * h * d + d * f - f ** 2,
        d ** 2 - f ** 2 + 3 * h * f - h * d,
        (f ** 3 + 15 * f ** 2 * h - d * f ** 2 + 16 * d * f * h - 27 * f * h ** 2
         - d ** 2 * f - 6 * h * d ** 2 + d ** 3 + 9 * h ** 2 * d),
        d ** 2 - 3 * h * d + 9 * h * f - d * f,
        27 * h ** 2 * d - 16 * h * d ** 2 + d ** 3 - 9 * d * f * h - d ** 2 * f - d * f ** 2 + f ** 3,
    ]
    exps, cof = factor_against(num, factors)
    if any(exps.get(i, 0) != 1 for i in range(7)):
        return False
    units = [d, f, h, 2 * d + 3 * f, d ** 2 - 3 * h * d - f ** 2]
    _, cof2 = factor_against(cof, units)
    return cof2.is_constant()


@claim("quartic-transforms-to-quadric")
def _quartic():
    vars_dfh = ("d", "f", "h")
    d, f, h = poly_ring(vars_dfh)
    quartic = (36 * h * d ** 2 * f + 33 * h ** 2 * d ** 2 + 2 * f ** 2 * d ** 2
               - 30 * f ** 2 * d * h - 90 * h ** 2 * d * f - 2 * f ** 3 * d - 2 * f * d ** 3
               - 6 * h * d ** 3 + 54 * h ** 2 * f ** 2 + d ** 4 + f ** 4)
    p, q, r = poly_ring(("p", "q", "r"))
    sub = {"d": RatFunc(q * r + 27 * p * r), "f": RatFunc(q * r - 18 * p * r),
           "h": RatFunc(5 * p * r + p * q)}
    img = poly_substitute(quartic, sub)
    if not img.is_polynomial():
        return False
    quadric = 4050 * r * p - 350 * r * q + 324 * p * q - 3125 * r ** 2 + q ** 2 - 28431 * p ** 2
    return divides(quadric, img.as_poly())
