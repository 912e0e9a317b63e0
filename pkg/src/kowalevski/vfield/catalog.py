"""The parameterized equation catalog: I..XXVIII plus the named companions.

Each entry carries a constructor, the expected seven exponent pairs, and the
sufficient-univalence predicate.  Coefficients are transcribed literally; the
consistency tests rebuild several entries from their normal-form derivations
(sigma roots, Euler-field shears, rescalings) and compare exactly.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Mapping, Sequence

from ..exactalg import FieldElem, MPoly, RatFunc, ZERO, ONE
from .fields import PolyVF, QuadVF

CATALOG_IDS = [
    "I", "II", "III", "IV", "V", "VI", "VII", "VIII", "IX", "X",
    "XI", "XII", "XIII", "XIV", "XV", "XVI", "XVII", "XVIII", "XIX", "XX",
    "XXI", "XXII", "XXIII", "XXIV", "XXV", "XXVI", "XXVII", "XXVIII",
    "HalphenClassic", "ChazyIX", "ChazyX", "ChazyXI", "ChazyXII",
    "GenRTwoD", "TwoNegative", "YetAnother",
]

ROMAN = CATALOG_IDS[:28]


class DegenerateParameters(ValueError):
    pass


class UnknownEquation(KeyError):
    pass


def _F(v) -> FieldElem:
    return FieldElem.coerce(Fraction(v) if isinstance(v, (int, str)) else v)


class _Ring:
    """Coordinates x, y, z plus parameters, symbolic when a value is None."""

    def __init__(self, params: Mapping[str, object], names: Sequence[str], coords=("x", "y", "z")):
        self.symbolic = tuple(n for n in names if params.get(n) is None)
        self.vars = tuple(coords) + self.symbolic
        self.coords = tuple(coords)
        for c in coords:
            setattr(self, c, MPoly.var(self.vars, c))
        self.values: dict[str, object] = {}
        for n in names:
            v = params.get(n)
            if v is None:
                self.values[n] = MPoly.var(self.vars, n)
            else:
                self.values[n] = MPoly.const(self.vars, _F(v))

    def __getitem__(self, name: str):
        return self.values[name]

    def const(self, v) -> MPoly:
        return MPoly.const(self.vars, _F(v))

    def scalar(self, name: str) -> FieldElem:
        p = self.values[name]
        if not p.is_constant():
            raise DegenerateParameters(f"parameter {name} must be numeric here")
        return p.constant_value()


def _sqrt(d: int, params: Mapping) -> FieldElem:
    sign = int(params.get("sqrt_sign", 1))
    if sign not in (1, -1):
        raise DegenerateParameters("sqrt_sign must be +1 or -1")
    return FieldElem(0, sign, d)


# -- constructors -------------------------------------------------------------


def _mk_I(params):
    r = _Ring(params, ("a1", "a2", "a3"))
    x, y, z = r.x, r.y, r.z
    a1, a2, a3 = r["a1"], r["a2"], r["a3"]
    one = r.const(1)
    return QuadVF([
        a1 * x ** 2 + (one - a1) * (x * y - y * z + z * x),
        a2 * y ** 2 + (one - a2) * (x * y + y * z - z * x),
        a3 * z ** 2 + (one - a3) * (-x * y + y * z + z * x),
    ], r.coords)


def eq_ii_beta(n, m) -> FieldElem:
    n, m = _F(n), _F(m)
    den = (m * n + 2 * n + 2 * m) * (m * n - 2 * n + 2 * m)
    if den.is_zero() or n.is_zero():
        raise DegenerateParameters("equation II parameters give a vanishing denominator")
    return 8 * m * m * n / den


def _mk_II(params):
    r = _Ring(params, ("n", "m"))
    x, y, z = r.x, r.y, r.z
    n = r["n"]
    beta = r.const(eq_ii_beta(r.scalar("n"), r.scalar("m")))
    return QuadVF([
        x * (x - y),
        y * (y + 3 * x + (n + 2) * z),
        z ** 2 + beta * x * y + 2 * x * z,
    ], r.coords)


def _mk_III(params):
    r = _Ring(params, ("k",))
    x, y, z = r.x, r.y, r.z
    k = r["k"]
    if k.is_constant() and k.constant_value() == FieldElem(-6):
        raise DegenerateParameters("equation III with k = -6 is not realizable")
    return QuadVF([
        x * (2 * x - (k + 6) * y),
        y * ((k + 6) * y - k * z),
        k * z ** 2 + (k - 2) * (3 * y - 2 * z) * x,
    ], r.coords)


def _mk_IV(params):
    r = _Ring(params, ("m",))
    x, y, z = r.x, r.y, r.z
    m = r["m"]
    if m.is_constant() and m.constant_value() in (FieldElem(0), FieldElem(6)):
        raise DegenerateParameters("equation IV degenerates at m in {0, 6}")
    return QuadVF([
        (5 * m - 6) * x ** 2 + 2 * (m - 6) * x * y - (7 * m - 6) * (x + y) * z,
        (m - 6) * y ** 2 - (m + 6) * (x + y) * z,
        z * (4 * m * z - (5 * m - 6) * x + 3 * (m - 6) * y),
    ], r.coords)


def _mk_V(params):
    r = _Ring(params, ("m", "p", "q", "r"))
    x, y, z = r.x, r.y, r.z
    m, p, q, rr = r["m"], r["p"], r["q"], r["r"]
    one = r.const(1)
    quarter = r.const(Fraction(1, 4))
    R = quarter * (
        (one - p ** 2) * x ** 2
        - (rr ** 2 - p ** 2 + m ** 2 * (one - q ** 2)) * x * y
        + m ** 2 * (one - q ** 2) * y ** 2
    )
    return QuadVF([x ** 2, y * (m * y - (m - one) * x), z ** 2 + R], r.coords)


def _beta_inv_equation(params, shift_y: int, beta: FieldElem):
    """Common shape x(x-y+(1-n)z)dx + y(y-x+(n+shift)z)dy + (z^2+xy/beta)dz."""
    if beta.is_zero():
        raise DegenerateParameters("beta = 0")
    r = _Ring(params, ("n", "q"))
    x, y, z = r.x, r.y, r.z
    n = r["n"]
    one = r.const(1)
    return QuadVF([
        x * (x - y + (one - n) * z),
        y * (y - x + (n + shift_y) * z),
        z ** 2 + r.const(beta.inverse()) * x * y,
    ], r.coords)


def eq_vi_beta(n, q) -> FieldElem:
    n, q = _F(n), _F(q)
    return Fraction(1, 8) * (2 * n - 1 + q) * (2 * n - 1 - q)


def eq_vii_beta(n, q) -> FieldElem:
    n, q = _F(n), _F(q)
    return -Fraction(1, 4) * (n + 1 + 2 * q) * (n + 1 - 2 * q)


def eq_xi_beta(n, q) -> FieldElem:
    n, q = _F(n), _F(q)
    return Fraction(1, 24) * (2 * n - 3 + q) * (2 * n - 3 - q)


def eq_xii_beta(n, q) -> FieldElem:
    n, q = _F(n), _F(q)
    return Fraction(1, 12) * (n - 3 + 2 * q) * (n - 3 - 2 * q)


def eq_xiii_beta(n, q) -> FieldElem:
    n, q = _F(n), _F(q)
    return Fraction(1, 8) * (n - 2 + q) * (n - 2 - q)


def _mk_VI(params):
    return _beta_inv_equation(params, 0, eq_vi_beta(params["n"], params["q"]))


def _mk_VII(params):
    return _beta_inv_equation(params, 3, eq_vii_beta(params["n"], params["q"]))


def _mk_XI(params):
    return _beta_inv_equation(params, -2, eq_xi_beta(params["n"], params["q"]))


def _mk_XII(params):
    return _beta_inv_equation(params, -5, eq_xii_beta(params["n"], params["q"]))


def _mk_XIII(params):
    return _beta_inv_equation(params, -3, eq_xiii_beta(params["n"], params["q"]))


def _mk_VIII(params):
    r = _Ring(params, ("p", "q", "r"))
    x, y, z = r.x, r.y, r.z
    p, q, rr = r["p"], r["q"], r["r"]
    one = r.const(1)
    quarter = r.const(Fraction(1, 4))
    R = quarter * ((one - p ** 2) * x ** 2 + (p ** 2 + q ** 2 - one - rr ** 2) * x * y + (one - q ** 2) * y ** 2)
    return QuadVF([x * (x - 2 * y), y * (y - 2 * x), z ** 2 + R], r.coords)


def _mk_IX(params):
    r = _Ring(params, ("p", "q", "r"))
    x, y, z = r.x, r.y, r.z
    p, q, rr = r["p"], r["q"], r["r"]
    one = r.const(1)
    eighth = r.const(Fraction(1, 8))
    R = eighth * (2 * (one - p ** 2) * x ** 2 + (q ** 2 - rr ** 2) * x * y + (2 * p ** 2 - q ** 2 - rr ** 2) * y ** 2)
    return QuadVF([2 * y ** 2 - x ** 2, x * y, z ** 2 + R], r.coords)


def _mk_X(params):
    r = _Ring(params, ("p", "q", "r"))
    x, y, z = r.x, r.y, r.z
    p, q, rr = r["p"], r["q"], r["r"]
    one = r.const(1)
    quarter = r.const(Fraction(1, 4))
    R = quarter * (
        4 * (one - q ** 2) * x ** 2
        + (4 * one + 4 * q ** 2 + rr ** 2 - 9 * p ** 2) * x * y
        + (one - rr ** 2) * y ** 2
    )
    return QuadVF([x * (2 * x - 5 * y), y * (y - 4 * x), z ** 2 + R], r.coords)


def _mk_XIV(params):
    r = _Ring(params, ("q",))
    x, y, z = r.x, r.y, r.z
    q = r["q"]
    one = r.const(1)
    return QuadVF([
        x * (x - (one - q) * y),
        y * ((one - q) * y - 5 * x - z),
        z ** 2 - (q + 5) * (q - 3) * x * y + (7 * one + q) * x * z,
    ], r.coords)


def _mk_XV(params):
    r = _Ring(params, ("k",))
    x, y, z = r.x, r.y, r.z
    k = r["k"]
    if k.is_constant() and k.constant_value() in (FieldElem(1), FieldElem(-1), FieldElem(-5)):
        raise DegenerateParameters("equation XV degenerates at k in {1, -1, -5}")
    return QuadVF([
        (k - 1) * z * (x + y) - (k + 1) * x ** 2,
        (k + 5) * y ** 2 - (k + 7) * (x + y) * z,
        z * (4 * z + (k + 1) * x - (k + 5) * y),
    ], r.coords)


def _mk_XVI(params):
    r = _Ring(params, ("beta",))
    x, y, z = r.x, r.y, r.z
    b = r["beta"]
    return QuadVF([
        (3 * x ** 2 - y ** 2 - 2 * x * z) + 2 * b * y * (x - z),
        2 * y * (3 * x - 2 * z) + b * (y ** 2 - 3 * x ** 2),
        2 * ((z - 3 * x) - b * y) * z,
    ], r.coords)


def _chazy_alt(c_yx: int, xz_coef: int, xy_coef: FieldElem):
    """Shape x(x-y)dx + y(y - c_yx*x - z)dy + (z^2 + xy_coef*xy + xz_coef*xz)dz."""
    def mk(params):
        r = _Ring(params, ())
        x, y, z = r.x, r.y, r.z
        return QuadVF([
            x * (x - y),
            y * (y - c_yx * x - z),
            z ** 2 + r.const(xy_coef) * x * y + xz_coef * x * z,
        ], r.coords)
    return mk


def _mk_XVII(params):
    s5 = _sqrt(5, params)
    return _chazy_alt(4, 4, -(1 + 2 * s5))(params)


def _mk_XVIII(params):
    return _chazy_alt(9, 14, FieldElem(-6))(params)


def _mk_XIX(params):
    s3 = _sqrt(3, params)
    return _chazy_alt(4, 4, Fraction(1, 11) * (17 + 12 * s3))(params)


def _mk_XX(params):
    s3 = _sqrt(3, params)
    return _chazy_alt(3, 2, -Fraction(3, 11) * (9 + 7 * s3))(params)


def _mk_XXI(params):
    s3 = _sqrt(3, params)
    return _chazy_alt(11, 18, -(1 + 3 * s3))(params)


def _resonant_node_family(a: FieldElem):
    def mk(params):
        r = _Ring(params, ())
        x, y, z = r.x, r.y, r.z
        return QuadVF([
            x ** 2 + r.const(1 - a) * y * z,
            y * (2 * x + y - 2 * z),
            z * (z - 2 * x - y),
        ], r.coords)
    return mk


def _mk_XXII(params):
    s5 = _sqrt(5, params)
    return _resonant_node_family(Fraction(1, 2) * s5)(params)


def _mk_XXIII(params):
    s3 = _sqrt(3, params)
    return _resonant_node_family(-Fraction(3, 4) * s3)(params)


def _mk_XXIV(params):
    s = _sqrt(3, params)
    r = _Ring(params, ())
    x, y, z = r.x, r.y, r.z
    c = r.const
    half = c(Fraction(1, 2))
    return QuadVF([
        half * (2 * x ** 2 - c(3 * s + 9) * y * z + c(3 + 3 * s) * z * x),
        half * (c(2 * (4 + s)) * y ** 2 - c(21 + 9 * s) * y * z + c(7 * s + 9) * z * x),
        (c(3 + s) * z - x - c(4 + s) * y) * z,
    ], r.coords)


def _mk_XXV(params):
    s = _sqrt(3, params)
    r = _Ring(params, ())
    x, y, z = r.x, r.y, r.z
    c = r.const
    return QuadVF([
        c(3 * (1 + s)) * z * x - c(4 * s) * y * z - x ** 2,
        c(3 * s) * x * z + c(2 * s - 4) * y ** 2 + c(6 * (1 - s)) * y * z,
        (x + c(4 - 2 * s) * y + c(s - 3) * z) * z,
    ], r.coords)


def _mk_XXVI(params):
    s = _sqrt(3, params)
    r = _Ring(params, ())
    x, y, z = r.x, r.y, r.z
    c = r.const
    return QuadVF([
        2 * x ** 2 + c(s - 6) * y * z,
        (c(5 - 2 * s) * y + c(3 * s - 9) * z) * y,
        (c(3 - s) * z - 2 * x + c(2 * s - 5) * y) * z,
    ], r.coords)


def _mk_XXVII(params):
    s = _sqrt(2, params)
    r = _Ring(params, ())
    x, y, z = r.x, r.y, r.z
    c = r.const
    return QuadVF([
        c(2 * (2 - s)) * y * z + c(2 * (s - 1)) * z * x - x ** 2,
        c(8 - 5 * s) * y * z + c(4 * s - 5) * z * x + c(s - 2) * y ** 2,
        (x + c(2 - s) * (y - z)) * z,
    ], r.coords)


def _mk_XXVIII(params):
    s = _sqrt(2, params)
    r = _Ring(params, ())
    x, y, z = r.x, r.y, r.z
    c = r.const
    return QuadVF([
        c(2 * (2 + s)) * x ** 2 - c(6 + 5 * s) * z * x - c(2 - 3 * s) * z * y,
        c(2 * (2 - s)) * y ** 2 - c(2 + 3 * s) * z * x - c(6 - 5 * s) * z * y,
        4 * z ** 2 - c(2 * (2 + s)) * z * x - c(2 * (2 - s)) * z * y,
    ], r.coords)


def _mk_halphen_classic(params):
    r = _Ring(params, ())
    x, y, z = r.x, r.y, r.z
    return QuadVF([
        x * y - y * z + z * x,
        y * z - z * x + x * y,
        z * x - x * y + y * z,
    ], r.coords)


def _mk_chazy_ix(params):
    r = _Ring(params, ())
    x, y, z = r.x, r.y, r.z
    return PolyVF(r.coords, [y, z, 54 * x ** 4 + 72 * x ** 2 * y + 12 * y ** 2], weights=(1, 2, 3))


def _mk_chazy_x(params):
    s = _sqrt(3, params)
    r = _Ring(params, ())
    x, y, z = r.x, r.y, r.z
    c = r.const(Fraction(3, 11) * (9 + 7 * s))
    return PolyVF(r.coords, [y, z, 6 * x ** 2 * y + c * (x ** 2 + y) ** 2], weights=(1, 2, 3))


def _mk_chazy_xi(params):
    r = _Ring(params, ("p",))
    x, y, z = r.x, r.y, r.z
    p = r["p"]
    one = r.const(1)
    u = (one - p ** 2) * r.const(Fraction(1, 2))
    rhs = (
        u * x * z
        + (u + 6 * one) * y ** 2
        - 3 * (one - p ** 2) * x ** 2 * y
        + r.const(Fraction(3, 8)) * (one - p ** 2) ** 2 * x ** 4
    )
    return PolyVF(r.coords, [y, z, rhs], weights=(1, 2, 3))


def chazy_xii_coefficient(k) -> FieldElem:
    k = _F(k)
    den = 36 - k * k
    if den.is_zero():
        raise DegenerateParameters("Chazy XII needs k != +-6")
    return 4 / den


def _mk_chazy_xii(params):
    r = _Ring(params, ())
    x, y, z = r.x, r.y, r.z
    c = r.const(chazy_xii_coefficient(params["k"]))
    rhs = 2 * x * z - 3 * y ** 2 + c * (6 * y - x ** 2) ** 2
    return PolyVF(r.coords, [y, z, rhs], weights=(1, 2, 3))


def chazy_xii_scaled_symbolic() -> PolyVF:
    """(36-k^2) times Chazy XII with symbolic k: polynomial components; same
    adapted-function invariant since constant time rescaling cancels in it."""
    vars = ("x", "y", "z", "k")
    x, y, z, k = (MPoly.var(vars, v) for v in vars)
    scale = 36 - k ** 2
    rhs = scale * (2 * x * z - 3 * y ** 2) + 4 * (6 * y - x ** 2) ** 2
    return PolyVF(("x", "y", "z"), [scale * y, scale * z, rhs], weights=(1, 2, 3))


def _mk_genrtwod(params):
    r = _Ring(params, ("n", "m", "alpha"))
    x, y, z = r.x, r.y, r.z
    n, m, a = r["n"], r["m"], r["alpha"]
    one = r.const(1)
    return QuadVF([
        x * (x - y + (one - n) * z),
        y * (y - x + (one - m) * z),
        z ** 2 + a * x * y,
    ], r.coords)


def _mk_twonegative(params):
    r = _Ring(params, ("n", "m", "alpha"))
    x, y, z = r.x, r.y, r.z
    n, m, a = r["n"], r["m"], r["alpha"]
    return QuadVF([
        x * (x - y),
        y * (y + (n + 1) * x - z),
        z ** 2 + a * x * y + (m + 1) * x * z,
    ], r.coords)


def twonegative_alpha(n, m, sigma) -> FieldElem:
    """alpha making [1 : sigma : 2 sigma + n] a radial orbit of TwoNegative(n, m)."""
    n, m, s = _F(n), _F(m), _F(sigma)
    if s.is_zero():
        raise DegenerateParameters("sigma = 0 is degenerate")
    return -(6 * s * s + 2 * m * s + 5 * n * s + m * n + n * n) / s


def _mk_yetanother(params):
    r = _Ring(params, ("alpha", "beta", "gamma"))
    x, y, z = r.x, r.y, r.z
    a, b, g = r["alpha"], r["beta"], r["gamma"]
    return QuadVF([
        x ** 2 + a * x * z + b * y * z,
        y ** 2 + g * x * z - (a + 2) * y * z,
        z * (z - x - y),
    ], r.coords)


# -- expected exponent profiles ----------------------------------------------


def _pairs(*pairs):
    return [tuple(_F(v) for v in p) for p in pairs]


def _profile_I(params):
    a = [_F(params[k]) for k in ("a1", "a2", "a3")]
    s = a[0] + a[1] + a[2] - 2
    m = [s / ai for ai in a]
    return _pairs((-1, -1), (1, m[0]), (1, -m[0]), (1, m[1]), (1, -m[1]), (1, m[2]), (1, -m[2]))


def _profile_II(params):
    n, m = _F(params["n"]), _F(params["m"])
    return _pairs((-1, -2), (1, 2), (1, n), (1, -n - 1), (-n, n + 1), (1, m), (1, -m))


def _profile_III(params):
    k = _F(params["k"])
    return _pairs((1, 2), (1, 2), (-2, -3), (-2, 3), (1, k - 1), (k, 1 - k), (1, -k))


def _profile_IV(params):
    m = _F(params["m"])
    return _pairs((-1, -2), (1, 2), (1, 3), (1, -3), (1, -m), (1, m - 1), (1 - m, m))


def _profile_V(params):
    m, p, q, r = (_F(params[k]) for k in ("m", "p", "q", "r"))
    return _pairs((1, 1), (1, q), (1, -q), (m, p), (m, -p), (-m, r), (-m, -r))


def _profile_VI(params):
    n, q = _F(params["n"]), _F(params["q"])
    return _pairs((1, 2), (1, 2), (n, 1 - n), (1, -n), (1, n - 1), (-2, q), (-2, -q))


def _profile_VII(params):
    n, q = _F(params["n"]), _F(params["q"])
    return _pairs((1, 2), (1, 2), (n, -2 - n), (-2, -n), (-2, n + 2), (1, q), (1, -q))


def _profile_VIII(params):
    p, q, r = (_F(params[k]) for k in ("p", "q", "r"))
    return _pairs((1, 1), (3, p), (3, -p), (3, q), (3, -q), (3, r), (3, -r))


def _profile_IX(params):
    p, q, r = (_F(params[k]) for k in ("p", "q", "r"))
    return _pairs((1, 1), (2, p), (2, -p), (4, q), (4, -q), (4, r), (4, -r))


def _profile_X(params):
    p, q, r = (_F(params[k]) for k in ("p", "q", "r"))
    return _pairs((1, 1), (2, p), (2, -p), (3, q), (3, -q), (6, r), (6, -r))


def _profile_XI(params):
    n, q = _F(params["n"]), _F(params["q"])
    return _pairs((1, 2), (1, 2), (3, -n), (n, 3 - n), (3, n - 3), (6, q), (6, -q))


def _profile_XII(params):
    n, q = _F(params["n"]), _F(params["q"])
    return _pairs((1, 2), (1, 2), (6, -n), (n, 6 - n), (6, n - 6), (3, q), (3, -q))


def _profile_XIII(params):
    n, q = _F(params["n"]), _F(params["q"])
    return _pairs((1, 2), (1, 2), (4, -n), (n, 4 - n), (4, n - 4), (4, q), (4, -q))


def _profile_XIV(params):
    q = _F(params["q"])
    return _pairs((1, 2), (1, 2), (-2, 3), (2, 3), (6, q), (6, -6 - q), (6 + q, -q))


def _profile_XV(params):
    k = _F(params["k"])
    return _pairs((1, 2), (1, 2), (-1, 3), (1, 3), (6, k), (6, -6 - k), (6 + k, -k))


_FIXED_PROFILES = {
    "XVI": ((1, 2), (1, 2), (2, 3), (2, 3), (2, 3), (-1, 3), (-1, 6)),
    "XVII": ((1, 2), (1, 2), (-2, 3), (-3, 5), (3, 2), (2, 5), (-3, 10)),
    "XVIII": ((1, 2), (1, 2), (-2, 3), (-13, 10), (13, -3), (2, 5), (2, 5)),
    "XIX": ((1, 2), (1, 2), (-2, 3), (-3, 5), (3, 2), (3, 4), (-5, 12)),
    "XX": ((1, 2), (1, 2), (-2, 3), (-1, 4), (1, 3), (2, 5), (-5, 12)),
    "XXI": ((1, 2), (1, 2), (-2, 3), (-17, 12), (17, -5), (2, 5), (3, 4)),
    "XXII": ((1, 2), (1, 2), (-1, 3), (1, 3), (-3, 5), (2, 5), (-3, 10)),
    "XXIII": ((1, 2), (1, 2), (-1, 3), (1, 3), (-3, 5), (3, 4), (-5, 12)),
    "XXIV": ((1, 2), (1, 2), (-1, 3), (1, 4), (2, 3), (-2, 7), (-7, 12)),
    "XXV": ((1, 2), (1, 2), (-1, 3), (1, 4), (2, 3), (-2, 7), (-7, 12)),
    "XXVI": ((1, 2), (1, 2), (-1, 3), (1, 4), (2, 3), (-2, 7), (-7, 12)),
    "XXVII": ((1, 2), (1, 2), (-1, 3), (1, 4), (2, 3), (-3, 8), (-3, 8)),
    "XXVIII": ((1, 2), (1, 2), (-1, 3), (1, 4), (2, 3), (-3, 8), (-3, 8)),
}


# -- sufficient univalence (the conditions table) ------------------------------


def _ints(params, *names):
    out = []
    for n in names:
        v = _F(params[n])
        if not v.is_integer():
            return None
        out.append(int(v.rat))
    return out


def _univ_I(params):
    try:
        prof = _profile_I(params)
    except ZeroDivisionError:
        return False
    ms = [prof[i][1] for i in (1, 3, 5)]
    return all(m.is_integer() and int(m.rat) >= 2 for m in ms)


def _univ_II(params):
    v = _ints(params, "n", "m")
    return v is not None and v[0] >= 2 and v[1] >= 2


def _univ_III(params):
    v = _ints(params, "k")
    return v is not None and v[0] >= 2


def _univ_IV(params):
    v = _ints(params, "m")
    return v is not None and v[0] >= 2


def _univ_V(params):
    from ..riccati import check_first_riccati
    v = _ints(params, "m", "p", "q", "r")
    if v is None:
        return False
    m, p, q, r = v
    return m >= 1 and q >= 1 and r % m != 0 and check_first_riccati(m, p, q, r)


def _univ_VI(params):
    v = _ints(params, "n", "q")
    return v is not None and v[1] % 2 != 0 and v[1] < 2 * v[0]


def _univ_VII(params):
    v = _ints(params, "n", "q")
    return v is not None and v[0] % 2 != 0 and v[0] < 2 * v[1]


def _univ_VIII(params):
    v = _ints(params, "p", "q", "r")
    return v is not None and all(t % 3 != 0 for t in v)


def _univ_IX(params):
    v = _ints(params, "p")
    return v is not None and v[0] % 2 != 0


def _univ_X(params):
    v = _ints(params, "p", "q", "r")
    return v is not None and v[2] % 6 != 0 and v[1] % 3 != 0 and v[0] % 2 != 0


def _univ_XI(params):
    v = _ints(params, "n", "q")
    return v is not None and v[1] % 6 != 0 and v[0] % 3 != 0


def _univ_XII(params):
    v = _ints(params, "n", "q")
    return v is not None and v[0] % 6 != 0 and v[1] % 3 != 0


def _univ_XIII(params):
    v = _ints(params, "n", "q")
    return v is not None and v[0] % 2 != 0 and v[1] % 2 != 0


def _univ_XIV(params):
    v = _ints(params, "q")
    return v is not None and v[0] % 6 != 0


def _univ_XV(params):
    v = _ints(params, "k")
    return v is not None and v[0] % 6 != 0


def _always(_params):
    return True


class CatalogEntry:
    __slots__ = ("id", "param_names", "maker", "profile", "univalence", "notes")

    def __init__(self, id, param_names, maker, profile=None, univalence=None, notes=""):
        self.id = id
        self.param_names = tuple(param_names)
        self.maker = maker
        self.profile = profile
        self.univalence = univalence
        self.notes = notes


_ENTRIES = {
    "I": CatalogEntry("I", ("a1", "a2", "a3"), _mk_I, _profile_I, _univ_I,
                      "Halphen family; m_i = (a1+a2+a3-2)/a_i"),
    "II": CatalogEntry("II", ("n", "m"), _mk_II, _profile_II, _univ_II, "triangle group T(2,m,n)"),
    "III": CatalogEntry("III", ("k",), _mk_III, _profile_III, _univ_III, "triangle group T(2,3,k); k=6 has a first integral"),
    "IV": CatalogEntry("IV", ("m",), _mk_IV, _profile_IV, _univ_IV, "triangle group T(2,3,m)"),
    "V": CatalogEntry("V", ("m", "p", "q", "r"), _mk_V, _profile_V, _univ_V, "all solutions rational"),
    "VI": CatalogEntry("VI", ("n", "q"), _mk_VI, _profile_VI, _univ_VI, ""),
    "VII": CatalogEntry("VII", ("n", "q"), _mk_VII, _profile_VII, _univ_VII, ""),
    "VIII": CatalogEntry("VIII", ("p", "q", "r"), _mk_VIII, _profile_VIII, _univ_VIII, ""),
    "IX": CatalogEntry("IX", ("p", "q", "r"), _mk_IX, _profile_IX, _univ_IX, ""),
    "X": CatalogEntry("X", ("p", "q", "r"), _mk_X, _profile_X, _univ_X, ""),
    "XI": CatalogEntry("XI", ("n", "q"), _mk_XI, _profile_XI, _univ_XI, ""),
    "XII": CatalogEntry("XII", ("n", "q"), _mk_XII, _profile_XII, _univ_XII, ""),
    "XIII": CatalogEntry("XIII", ("n", "q"), _mk_XIII, _profile_XIII, _univ_XIII, ""),
    "XIV": CatalogEntry("XIV", ("q",), _mk_XIV, _profile_XIV, _univ_XIV, ""),
    "XV": CatalogEntry("XV", ("k",), _mk_XV, _profile_XV, _univ_XV, ""),
    "XVI": CatalogEntry("XVI", ("beta",), _mk_XVI, None, _always, "one-parameter family sharing one exponent profile"),
    "XVII": CatalogEntry("XVII", ("sqrt_sign",), _mk_XVII, None, _always, "birationally a third-order equation (order-10 torus symmetry)"),
    "XVIII": CatalogEntry("XVIII", ("sqrt_sign",), _mk_XVIII, None, _always, ""),
    "XIX": CatalogEntry("XIX", ("sqrt_sign",), _mk_XIX, None, _always, ""),
    "XX": CatalogEntry("XX", ("sqrt_sign",), _mk_XX, None, _always, ""),
    "XXI": CatalogEntry("XXI", ("sqrt_sign",), _mk_XXI, None, _always, ""),
    "XXII": CatalogEntry("XXII", ("sqrt_sign",), _mk_XXII, None, _always, ""),
    "XXIII": CatalogEntry("XXIII", ("sqrt_sign",), _mk_XXIII, None, _always, ""),
    "XXIV": CatalogEntry("XXIV", ("sqrt_sign",), _mk_XXIV, None, _always, ""),
    "XXV": CatalogEntry("XXV", ("sqrt_sign",), _mk_XXV, None, _always, ""),
    "XXVI": CatalogEntry("XXVI", ("sqrt_sign",), _mk_XXVI, None, _always, ""),
    "XXVII": CatalogEntry("XXVII", ("sqrt_sign",), _mk_XXVII, None, _always, ""),
    "XXVIII": CatalogEntry("XXVIII", ("sqrt_sign",), _mk_XXVIII, None, _always, ""),
    "HalphenClassic": CatalogEntry("HalphenClassic", (), _mk_halphen_classic, None, None,
                                   "degenerate limit of I; not under the isolated-singularity hypothesis"),
    "ChazyIX": CatalogEntry("ChazyIX", (), _mk_chazy_ix, None, None, "third-order equation in vector-field form"),
    "ChazyX": CatalogEntry("ChazyX", ("sqrt_sign",), _mk_chazy_x, None, None, ""),
    "ChazyXI": CatalogEntry("ChazyXI", ("p",), _mk_chazy_xi, None, None, ""),
    "ChazyXII": CatalogEntry("ChazyXII", ("k",), _mk_chazy_xii, None, None, ""),
    "GenRTwoD": CatalogEntry("GenRTwoD", ("n", "m", "alpha"), _mk_genrtwod, None, None,
                             "two invariant planes through the distinguished orbits"),
    "TwoNegative": CatalogEntry("TwoNegative", ("n", "m", "alpha"), _mk_twonegative, None, None,
                                "master family behind III, XIV, XVII..XXI"),
    "YetAnother": CatalogEntry("YetAnother", ("alpha", "beta", "gamma"), _mk_yetanother, None, None,
                               "resonant-node family behind XV"),
}


def catalog_entry(id: str) -> CatalogEntry:
    if id not in _ENTRIES:
        raise UnknownEquation(id)
    return _ENTRIES[id]


def make_equation(id: str, params: Mapping[str, object] | None = None):
    """Construct a catalog vector field; None parameter values stay symbolic."""
    entry = catalog_entry(id)
    params = dict(params or {})
    missing = [n for n in entry.param_names if n != "sqrt_sign" and n not in params]
    for n in missing:
        params[n] = None
    return entry.maker(params)


def expected_profile(id: str, params: Mapping[str, object] | None = None):
    """The seven exponent pairs the classification table assigns to the equation."""
    entry = catalog_entry(id)
    if entry.profile is not None:
        return entry.profile(params or {})
    if id in _FIXED_PROFILES:
        return _pairs(*_FIXED_PROFILES[id])
    raise UnknownEquation(f"no tabulated profile for {id}")


def sufficient_univalence(id: str, params: Mapping[str, object] | None = None) -> str:
    """"Sufficient" when the tabulated sufficient condition holds, else "Unknown"."""
    entry = catalog_entry(id)
    if entry.univalence is None:
        return "Unknown"
    return "Sufficient" if entry.univalence(params or {}) else "Unknown"
