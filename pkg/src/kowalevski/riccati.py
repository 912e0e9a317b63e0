"""Formal-series analysis of the rational-coefficient Riccati equations.

Covers the two equation families that decide rationality of solutions for the
catalog rows with exclusively rational solutions: a regular-singular shape
``s y' = y^2 + q y + s g(s)`` solved by Frobenius recursion, the equivalent
hypergeometric-recurrence criterion, the sufficiency predicates used by the
conditions table, the explicit double-root solution, and the exact coordinate
changes that move each equation to its chart at infinity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exactalg import FieldElem, MPoly, RatFunc, ZERO, ONE, poly_ring

DEFAULT_ORDER_MARGIN = 20


class Obstruction(Exception):
    """Frobenius recursion hit a vanishing divisor with nonzero right side."""

    def __init__(self, index: int):
        super().__init__(f"obstruction at series index {index}")
        self.index = index


@dataclass(frozen=True)
class RegularSingularRiccati:
    """Equation s dy/ds = y^2 + q y + s g(s); g with no pole at s = 0."""

    q: int
    g: RatFunc

    def __post_init__(self):
        if self.q == 0:
            raise ValueError("q must be nonzero")
        den0 = self.g.den.eval({v: ZERO for v in self.g.den.vars})
        if den0.is_zero():
            raise ValueError("g must be regular at 0")

    def g_series(self, order: int) -> list[FieldElem]:
        return taylor_coeffs(self.g, self.g.num.vars[0], order)


class FormalSeries:
    """Truncated power series sum(c[i] s^i); exact coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[FieldElem]):
        self.coeffs = [FieldElem.coerce(c) for c in coeffs]

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> FieldElem:
        return self.coeffs[i] if i < len(self.coeffs) else ZERO

    def __repr__(self):
        terms = [f"({c})*s^{i}" for i, c in enumerate(self.coeffs) if not c.is_zero()]
        return " + ".join(terms) if terms else "0"


def taylor_coeffs(f: RatFunc, var: str, order: int) -> list[FieldElem]:
    """Exact Taylor coefficients of f at var = 0 (f regular there)."""
    num = f.num.coeffs_in(var)
    den = f.den.coeffs_in(var)
    a = [c.constant_value() for c in num]
    b = [c.constant_value() for c in den]
    if b[0].is_zero():
        raise ZeroDivisionError("pole at 0")
    inv0 = b[0].inverse()
    out = []
    for i in range(order + 1):
        acc = a[i] if i < len(a) else ZERO
        for j in range(1, min(i, len(b) - 1) + 1):
            acc = acc - b[j] * out[i - j]
        out.append(acc * inv0)
    return out


def frobenius_formal_solution(eq: RegularSingularRiccati, order: int | None = None):
    """Formal solution vanishing at 0, or raise Obstruction(q).

    Coefficient recursion: (i - q) y_i = sum_{j=1}^{i-1} y_j y_{i-j} + g_{i-1}.
    At i = q the divisor vanishes; if the right side is nonzero there the
    obstruction index is returned, otherwise y_q is set to 0.
    """
    q = eq.q
    N = order if order is not None else abs(q) + DEFAULT_ORDER_MARGIN
    if N < abs(q):
        raise ValueError("order must reach the resonance index")
    g = eq.g_series(N)
    y = [ZERO]  # y_0 = 0: solution vanishes at the origin
    for i in range(1, N + 1):
        rhs = g[i - 1]
        for j in range(1, i):
            rhs = rhs + y[j] * y[i - j]
        if i == q:
            if not rhs.is_zero():
                raise Obstruction(i)
            y.append(ZERO)
        else:
            y.append(rhs / FieldElem(i - q))
    return FormalSeries(y)


def series_residual_valuation(eq: RegularSingularRiccati, series: FormalSeries) -> int:
    """Valuation of s y' - y^2 - q y - s g(s) for the truncated series."""
    N = series.order
    g = eq.g_series(N)
    resid_ok_to = 0
    for i in range(0, N + 1):
        lhs = series[i] * i
        rhs = FieldElem(eq.q) * series[i] + (g[i - 1] if i >= 1 else ZERO)
        for j in range(0, i + 1):
            rhs = rhs + series[j] * series[i - j]
        if (lhs - rhs).is_zero():
            resid_ok_to = i
        else:
            return i
    return resid_ok_to + 1


def second_kind_equation(P: Fraction, R: Fraction, q: int) -> RegularSingularRiccati:
    """The normalized quotient equation: g_i = -((q^2-R^2) + (P^2-1)(i+1))/4.

    (The scale parameter of the original family cancels after setting
    p = m P, r = m R.)
    """
    s_vars = ("s",)
    s = MPoly.var(s_vars, "s")
    one = MPoly.const(s_vars, 1)
    P, R = Fraction(P), Fraction(R)
    c1 = FieldElem(-(Fraction(q * q) - R * R) / 4)
    c2 = FieldElem(-(P * P - 1) / 4)
    # g(s) = c1/(1-s) + c2/(1-s)^2
    g = RatFunc(MPoly.const(s_vars, c1) * (one - s) + MPoly.const(s_vars, c2), (one - s) ** 2)
    return RegularSingularRiccati(q=q, g=g)


def hypergeometric_condition(P: Fraction, R: Fraction, q: int) -> bool:
    """Nonzero-formal-solution criterion: some j in 0..q-1 has q-1-P+R = 2j or q-1-P-R = 2j."""
    P, R = Fraction(P), Fraction(R)
    for j in range(q):
        if Fraction(q - 1) - P + R == 2 * j or Fraction(q - 1) - P - R == 2 * j:
            return True
    return False


def check_first_riccati(m: int, p: int, q: int, r: int) -> bool:
    """Rationality criterion for the first equation family.

    True iff m does not divide p and p-r or p+r equals (q-1-2j)m for some
    j in 0..q-1.  (Accepted parameters then automatically satisfy m∤r.)
    """
    if m < 1 or q < 1:
        raise ValueError("need m >= 1, q >= 1")
    if p % m == 0:
        return False
    return any(p - r == (q - 1 - 2 * j) * m or p + r == (q - 1 - 2 * j) * m for j in range(q))


def check_second_riccati(n: int, q: int) -> bool:
    """Meromorphy criterion for the second family: n odd and n < 2q."""
    if q * q == 1:
        raise ValueError("q^2 = 1 is outside this family")
    return n % 2 != 0 and n < 2 * q


def verify_double_root_solution(n: int) -> bool:
    """Check y = (1-n-c(1+n)t^n) / (2t(ct^n-1)) solves y' = y^2 + (1-n^2)/(4 t^2)."""
    if n < 0:
        raise ValueError("n must be a nonnegative integer here")
    vars = ("t", "c")
    t, c = poly_ring(vars)
    one = MPoly.const(vars, 1)
    num = one * (1 - n) - c * (1 + n) * t ** n
    den = 2 * t * (c * t ** n - one)
    y = RatFunc(num, den)
    rhs = y * y + RatFunc(one * (1 - n * n), 4 * t ** 2)
    return (y.diff("t") - rhs).is_zero()


@dataclass
class RiccatiAtInfinity:
    """dw/ds = w^2 + A(s) after an exact change of chart."""

    var: str
    A: RatFunc


def infinity_chart_first(F: RatFunc, tvar: str = "t") -> RiccatiAtInfinity:
    """Chart at infinity of z' = z^2 + t^-2 F(t): t = 1/tau, w = -t^2 z - t.

    Returns dw/dtau = w^2 + tau^-2 F(1/tau) (the shape is verified symbolically;
    the caller inspects A at tau = 0).
    """
    vars = ("tau", "zz") + tuple(v for v in F.num.vars if v != tvar)
    tau = MPoly.var(vars, "tau")
    zz = MPoly.var(vars, "zz")
    one = MPoly.const(vars, 1)
    t = RatFunc(one, tau)
    z = RatFunc(zz)
    Ft = F.subs({tvar: t})
    zdot = z * z + t ** -2 * Ft                      # dz/dt along solutions
    w = -(t ** 2) * z - t
    dw_dt = -2 * t * z - RatFunc(one) - t ** 2 * zdot  # dw/dt = w_t + w_z z'
    dw_dtau = dw_dt * RatFunc(-one, tau ** 2)          # dt/dtau = -1/tau^2
    A = dw_dtau - w * w
    if A.num.involves("zz"):
        raise ArithmeticError("transform did not stay of Riccati type")
    expected = RatFunc(one, tau ** 2) * Ft
    if not (A - expected).is_zero():
        raise ArithmeticError("infinity chart does not match the expected form")
    return RiccatiAtInfinity("tau", A)


def infinity_chart_second() -> RiccatiAtInfinity:
    """Chart at infinity of the second family: t = (s-1)/(2s), w = (1-2t)^2 y/2 + 2t - 1.

    Verified identity (symbolic n, q):
    dw/ds = w^2 + ((3-4q^2+n^2) s^2 + (1-n^2)) / (4 s^2 (1-s^2)^2).
    """
    vars = ("s", "yy", "n", "q")
    s, yy, n, q = poly_ring(vars)
    one = MPoly.const(vars, 1)
    t = RatFunc(s - one, 2 * s)
    y = RatFunc(yy)
    ydot = (
        y * y
        + RatFunc(one - q ** 2) / (4 * t ** 2 * (t - 1) ** 2)
        + RatFunc(one - n ** 2) / (4 * t * (t - 1))
    )                                               # dy/dt along solutions
    u = RatFunc(one) - 2 * t
    w = u ** 2 * y * Fraction(1, 2) + (2 * t - RatFunc(one))
    dt_ds = t.diff("s")
    # w_t = -2(1-2t) y + 2, w_y = (1-2t)^2 / 2; chain rule through t(s)
    dw_ds = ((-2) * u * y + 2 * RatFunc(one)) * dt_ds + u ** 2 * Fraction(1, 2) * ydot * dt_ds
    A = dw_ds - w * w
    if A.num.involves("yy"):
        raise ArithmeticError("transform did not stay of Riccati type")
    expected = RatFunc(
        (3 * one - 4 * q ** 2 + n ** 2) * s ** 2 + (one - n ** 2),
        4 * s ** 2 * (one - s ** 2) ** 2,
    )
    if not (A - expected).is_zero():
        raise ArithmeticError("infinity chart does not match the expected form")
    return RiccatiAtInfinity("s", A)
