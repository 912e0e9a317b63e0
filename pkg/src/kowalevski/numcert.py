"""High-precision complex ball arithmetic and certified root finding.

The exact layer handles everything that factors over Q or Q(sqrt(d)) into
pieces of degree <= 2 (every orbit in the equation catalog does).  What is
left -- radial orbits of random fields, mostly -- is isolated numerically at a
caller-chosen precision, with an error radius that is kept rigorous: Newton
disks of radius deg * |f/f'| around polished approximations, accepted only
when pairwise disjoint, so each disk contains exactly one root.
"""

from __future__ import annotations

import mpmath
from fractions import Fraction
from typing import Iterable, Sequence

from .exactalg import FieldElem, MPoly, RatFunc, ZERO, ONE, exact_divide, mpoly_gcd, resultant

DEFAULT_PRECISION_BITS = 256
MAX_PRECISION_BITS = 4096
INT_TOL = Fraction(1, 10 ** 20)


class PrecisionExhausted(ArithmeticError):
    pass


class Inconclusive(ArithmeticError):
    pass


class PositiveDimensional(ArithmeticError):
    """The system has a common factor (non-isolated solutions)."""


class BigComplex:
    """Complex ball: mpmath midpoint plus rigorous error radius.

    All operations propagate the radius conservatively (including a rounding
    bump of a few ulps), so the true value stays within ``rad`` of ``mid``.
    """

    __slots__ = ("mid", "rad")

    def __init__(self, mid, rad=0):
        if isinstance(mid, Fraction):
            mid = mpmath.mpf(mid.numerator) / mid.denominator
        # never re-round an existing mpmath value: that would silently break
        # the containment contract when the ambient precision is lower
        if isinstance(mid, mpmath.mpc):
            self.mid = mid
        elif isinstance(mid, mpmath.mpf):
            self.mid = mpmath.mp.make_mpc((mid._mpf_, mpmath.libmp.fzero))
        else:
            self.mid = mpmath.mpc(mid)
        self.rad = rad if isinstance(rad, mpmath.mpf) else mpmath.mpf(rad)

    @staticmethod
    def from_field(v: FieldElem, extra_rad: float = 0) -> "BigComplex":
        m = mpmath.mpf(v.rat.numerator) / v.rat.denominator
        if v.rad:
            m += mpmath.mpf(v.rad.numerator) / v.rad.denominator * mpmath.sqrt(v.d)
        b = BigComplex(m, extra_rad)
        return b._bump()

    def _bump(self) -> "BigComplex":
        self.rad += abs(self.mid) * mpmath.mpf(2) ** (4 - mpmath.mp.prec)
        return self

    def __add__(self, o):
        o = o if isinstance(o, BigComplex) else BigComplex(o)
        return BigComplex(self.mid + o.mid, self.rad + o.rad)._bump()

    __radd__ = __add__

    def __neg__(self):
        return BigComplex(-self.mid, self.rad)

    def __sub__(self, o):
        o = o if isinstance(o, BigComplex) else BigComplex(o)
        return BigComplex(self.mid - o.mid, self.rad + o.rad)._bump()

    def __rsub__(self, o):
        return (-self) + o

    def __mul__(self, o):
        o = o if isinstance(o, BigComplex) else BigComplex(o)
        rad = abs(self.mid) * o.rad + abs(o.mid) * self.rad + self.rad * o.rad
        return BigComplex(self.mid * o.mid, rad)._bump()

    __rmul__ = __mul__

    def inverse(self):
        a = abs(self.mid)
        if self.rad >= a:
            raise Inconclusive("ball contains zero; cannot invert")
        rad = self.rad / (a * (a - self.rad))
        return BigComplex(1 / self.mid, rad)._bump()

    def __truediv__(self, o):
        o = o if isinstance(o, BigComplex) else BigComplex(o)
        return self * o.inverse()

    def __rtruediv__(self, o):
        return BigComplex(o) * self.inverse()

    def contains_zero(self) -> bool:
        return abs(self.mid) <= self.rad

    def contains(self, value) -> bool:
        return abs(self.mid - mpmath.mpc(value)) <= self.rad

    def distinct_from(self, o: "BigComplex") -> bool:
        return abs(self.mid - o.mid) > self.rad + o.rad

    def __repr__(self):
        return f"BigComplex({mpmath.nstr(self.mid, 20)} ± {mpmath.nstr(self.rad, 3)})"

    def to_json(self) -> dict:
        return {
            "re": mpmath.nstr(self.mid.real, 30),
            "im": mpmath.nstr(self.mid.imag, 30),
            "rad": mpmath.nstr(self.rad, 5),
        }


class CertifiedRoot(BigComplex):
    """Root of an exact polynomial; ``exact`` is set on the quadratic-field fast path."""

    __slots__ = ("multiplicity", "exact", "min_poly")

    def __init__(self, mid, rad=0, multiplicity=1, exact: FieldElem | None = None, min_poly: MPoly | None = None):
        super().__init__(mid, rad)
        self.multiplicity = multiplicity
        self.exact = exact
        self.min_poly = min_poly


class CertifiedInt:
    __slots__ = ("value", "witness")

    def __init__(self, value: int, witness: float = 0.0):
        self.value = int(value)
        self.witness = float(witness)

    def __repr__(self):
        return f"CertifiedInt({self.value})"

    def __eq__(self, other):
        if isinstance(other, CertifiedInt):
            return self.value == other.value
        return self.value == other

    def __hash__(self):
        return hash(self.value)


# -- univariate helpers -----------------------------------------------------------


def _univar_coeffs(p: MPoly) -> tuple[str, list[FieldElem]]:
    active = [v for v in p.vars if p.involves(v)]
    if len(active) > 1:
        raise ValueError("polynomial is not univariate")
    name = active[0] if active else p.vars[0]
    i = p.vars.index(name)
    d = p.degree_in(name)
    out = [ZERO] * (d + 1)
    for e, c in p.terms.items():
        out[e[i]] = out[e[i]] + c
    return name, out


def _poly_from_coeffs(name: str, coeffs: Sequence[FieldElem]) -> MPoly:
    return MPoly((name,), {(k,): c for k, c in enumerate(coeffs) if not FieldElem.coerce(c).is_zero()})


def _squarefree_split(name: str, coeffs: list[FieldElem]) -> list[tuple[list[FieldElem], int]]:
    """Yun-style split: [(factor_coeffs, multiplicity)] with factors squarefree."""
    p = _poly_from_coeffs(name, coeffs)
    dp = p.diff(name)
    g = mpoly_gcd(p, dp)
    if g.is_constant():
        return [(coeffs, 1)]
    out = []
    rest = exact_divide(p, g)
    mult = 1
    while rest.degree_in(name) > 0:
        h = mpoly_gcd(rest, g)
        factor = exact_divide(rest, h)
        if factor.degree_in(name) > 0:
            out.append((_univar_coeffs(factor)[1], mult))
        rest = h
        if not g.is_constant():
            g = exact_divide(g, h) if not h.is_constant() else g
        mult += 1
        if h.is_constant():
            if rest.degree_in(name) > 0:
                out.append((_univar_coeffs(rest)[1], mult - 1))
            break
    return out


def _exact_linear_roots(name: str, coeffs: list[FieldElem], d: int) -> tuple[list[FieldElem], list[FieldElem]]:
    """Peel off exact roots in Q(sqrt(d)) found numerically and verified exactly."""
    roots: list[FieldElem] = []
    poly = _poly_from_coeffs(name, coeffs)
    deg = poly.degree_in(name)
    if deg <= 0:
        return [], coeffs
    with mpmath.workprec(300):
        cs = [BigComplex.from_field(c).mid for c in _univar_coeffs(poly)[1]]
        try:
            approx = mpmath.polyroots(list(reversed(cs)), maxsteps=300, extraprec=300)
        except mpmath.libmp.libhyper.NoConvergence:
            return [], coeffs
        for r in approx:
            if abs(mpmath.im(r)) > mpmath.mpf(2) ** -80:
                continue
            cand = _reconstruct_field_real(mpmath.re(r), d)
            if cand is None:
                continue
            if poly.eval({name: cand}).is_zero():
                while True:
                    roots.append(cand)
                    poly = exact_divide(poly, MPoly.var((name,), name).lift(poly.vars) - MPoly.const(poly.vars, cand))
                    if not poly.eval({name: cand}).is_zero() or poly.degree_in(name) == 0:
                        break
        return roots, _univar_coeffs(poly)[1]


def _reconstruct_field_real(x, d: int) -> FieldElem | None:
    """Guess a + b*sqrt(d) close to the real number x (verified by caller)."""
    try:
        if d == 1:
            fr = _rationalize(x)
            return FieldElem(fr) if fr is not None else None
        rel = mpmath.pslq([mpmath.mpf(1), x, mpmath.sqrt(d)], maxcoeff=10 ** 24, maxsteps=5000)
        if rel is None:
            fr = _rationalize(x)
            return FieldElem(fr) if fr is not None else None
        c0, c1, c2 = rel
        if c1 == 0:
            return None
        return FieldElem(Fraction(-c0, c1), Fraction(-c2, c1), d)
    except Exception:
        return None


def _rationalize(x) -> Fraction | None:
    rel = mpmath.pslq([mpmath.mpf(1), x], maxcoeff=10 ** 30, maxsteps=5000)
    if rel is None or rel[1] == 0:
        return None
    return Fraction(-rel[0], rel[1])


def _quadratic_exact_roots(name: str, coeffs: list[FieldElem]) -> list[FieldElem] | None:
    """Roots of a quadratic within its own coefficient field, if they exist there."""
    c0, c1, c2 = coeffs
    disc = c1 * c1 - 4 * c2 * c0
    s = disc.sqrt()
    if s is None:
        return None
    inv = (2 * c2).inverse()
    return [(-c1 + s) * inv, (-c1 - s) * inv]


def roots_univariate(p: MPoly, precision_bits: int = DEFAULT_PRECISION_BITS) -> list[CertifiedRoot]:
    """All complex roots with multiplicity, certified; deterministic ordering."""
    name, coeffs = _univar_coeffs(p)
    if len(coeffs) - 1 < 1 or all(c.is_zero() for c in coeffs):
        raise ValueError("need a nonzero polynomial of degree >= 1")
    d = 1
    for c in coeffs:
        if c.d != 1:
            d = c.d
            break
    out: list[CertifiedRoot] = []
    for fac_coeffs, mult in _squarefree_split(name, coeffs):
        exact, rest = _exact_linear_roots(name, fac_coeffs, d)
        for r in exact:
            with mpmath.workprec(precision_bits):
                b = BigComplex.from_field(r)
            out.append(CertifiedRoot(b.mid, 0, mult, exact=r))
        deg = len(rest) - 1
        if deg >= 2:
            ex = _quadratic_exact_roots(name, rest) if deg == 2 else None
            if ex is not None:
                for r in ex:
                    with mpmath.workprec(precision_bits):
                        b = BigComplex.from_field(r)
                    out.append(CertifiedRoot(b.mid, 0, mult, exact=r))
            else:
                min_poly = _poly_from_coeffs(name, rest)
                for ball in _certified_numeric_roots(rest, precision_bits):
                    out.append(CertifiedRoot(ball.mid, ball.rad, mult, min_poly=min_poly))
        elif deg == 1:
            r = -rest[0] / rest[1]
            with mpmath.workprec(precision_bits):
                b = BigComplex.from_field(r)
            out.append(CertifiedRoot(b.mid, 0, mult, exact=r))
    out.sort(key=_root_sort_key)
    return out


def _root_sort_key(r: BigComplex):
    return (mpmath.nstr(r.mid.real, 25), mpmath.nstr(r.mid.imag, 25))


def _certified_numeric_roots(coeffs: list[FieldElem], precision_bits: int) -> list[BigComplex]:
    """Newton-disk certified roots of a squarefree polynomial (exact coefficients)."""
    deg = len(coeffs) - 1
    bits = precision_bits
    while bits <= MAX_PRECISION_BITS:
        with mpmath.workprec(bits):
            cs = [BigComplex.from_field(c).mid for c in coeffs]
            try:
                approx = mpmath.polyroots(list(reversed(cs)), maxsteps=min(1000, bits), extraprec=bits)
            except mpmath.libmp.libhyper.NoConvergence:
                bits *= 2
                continue
            # Newton polish against the exact-coefficient evaluations
            der = [c * k for k, c in enumerate(cs)][1:]
            balls = []
            ok = True
            for z in approx:
                z = mpmath.mpc(z)
                for _ in range(6):
                    fz = _horner(cs, z)
                    fpz = _horner(der, z)
                    if fpz == 0:
                        break
                    z = z - fz / fpz
                fz = _horner(cs, z)
                fpz = _horner(der, z)
                if fpz == 0:
                    ok = False
                    break
                balls.append(BigComplex(z, deg * abs(fz / fpz) * mpmath.mpf("1.0000001")))
            if ok:
                for i in range(len(balls)):
                    for j in range(i + 1, len(balls)):
                        if not balls[i].distinct_from(balls[j]):
                            ok = False
            if ok:
                return balls
        bits *= 2
    raise PrecisionExhausted(f"could not isolate roots below {MAX_PRECISION_BITS} bits")


def _horner(coeffs, z):
    acc = mpmath.mpc(0)
    for c in reversed(coeffs):
        acc = acc * z + c
    return acc


def certify_integer(z, defining_poly: MPoly | None = None, tol: Fraction = INT_TOL) -> CertifiedInt | None:
    """Certified integer value of z, None if certifiably not an integer."""
    if isinstance(z, FieldElem):
        if z.is_integer():
            n = int(z.rat)
            if defining_poly is not None and not _divides_linear(defining_poly, n):
                return None
            return CertifiedInt(n, 0.0)
        return None
    if isinstance(z, BigComplex):
        if getattr(z, "exact", None) is not None:
            return certify_integer(z.exact, defining_poly, tol)
        with mpmath.workprec(max(mpmath.mp.prec, DEFAULT_PRECISION_BITS)):
            n = int(mpmath.nint(z.mid.real))
            dist = abs(z.mid - n)
            if dist + z.rad < mpmath.mpf(tol.numerator) / tol.denominator:
                if defining_poly is not None and not _divides_linear(defining_poly, n):
                    return None
                return CertifiedInt(n, float(dist + z.rad))
            if z.rad < dist:
                return None
        raise Inconclusive("error radius too large to decide integrality")
    raise TypeError(type(z))


def _divides_linear(p: MPoly, n: int) -> bool:
    name, _ = _univar_coeffs(p)
    return p.eval({name: FieldElem(n)}).is_zero()


# -- two-variable systems -----------------------------------------------------------


class SystemSolution:
    __slots__ = ("x", "y", "multiplicity")

    def __init__(self, x: CertifiedRoot, y: CertifiedRoot, multiplicity: int = 1):
        self.x = x
        self.y = y
        self.multiplicity = multiplicity

    def is_exact(self) -> bool:
        return self.x.exact is not None and self.y.exact is not None

    def __repr__(self):
        return f"SystemSolution({self.x}, {self.y}, mult={self.multiplicity})"


def solve_polynomial_system_2d(
    p: MPoly, q: MPoly, precision_bits: int = DEFAULT_PRECISION_BITS
) -> list[SystemSolution]:
    """Isolated common zeros of two bivariate polynomials via resultant elimination.

    Multiplicity is 1 wherever the system Jacobian is invertible; genuinely
    multiple points get the root multiplicity of a sheared eliminant in which
    distinct solutions no longer collide.
    """
    xs = [v for v in p.vars if p.involves(v) or q.lift(p.vars).involves(v)]
    if len(xs) > 2:
        raise ValueError("system must involve at most two variables")
    if len(xs) < 2:
        xs = list(p.vars[:2])
    xn, yn = xs[0], xs[1]
    q = q.lift(p.vars)
    g = mpoly_gcd(p, q)
    if not g.is_constant():
        raise PositiveDimensional(str(g))
    if not (p.involves(yn) or q.involves(yn)):
        raise ValueError("degenerate system")
    if p.involves(yn) and q.involves(yn):
        elim_x = resultant(p, q, yn)
    else:
        elim_x = p if not p.involves(yn) else q
    if elim_x.is_zero():
        raise PositiveDimensional("resultant vanishes identically")
    sols: list[SystemSolution] = []
    if not elim_x.involves(xn):
        x_roots = []
    else:
        x_roots = roots_univariate(elim_x, precision_bits)
    seen = []
    for xr in x_roots:
        if any(not xr.distinct_from(prev) and (xr.exact is None or xr.exact == prev.exact) for prev in seen):
            continue
        seen.append(xr)
        if xr.exact is not None:
            py = p.subs_scalar(xn, xr.exact)
            qy = q.subs_scalar(xn, xr.exact)
            if py.is_zero() and qy.is_zero():
                raise PositiveDimensional(f"line {xn} = {xr.exact}")
            h = py if qy.is_zero() else (qy if py.is_zero() else mpoly_gcd(py, qy))
            if h.is_constant():
                continue
            for yr in roots_univariate(h, precision_bits):
                sols.append(SystemSolution(xr, yr, 1))
        else:
            with mpmath.workprec(precision_bits):
                sols.extend(_numeric_fiber(p, q, xn, yn, xr, precision_bits))
    _assign_multiplicities(p, q, xn, yn, sols, precision_bits)
    return sols


def _assign_multiplicities(p, q, xn, yn, sols, precision_bits):
    for s in sols:
        x0 = s.x.exact if s.x.exact is not None else s.x
        y0 = s.y.exact if s.y.exact is not None else s.y
        s.multiplicity = point_multiplicity(p, q, xn, yn, x0, y0, precision_bits)


def point_multiplicity(p, q, xn, yn, x0, y0, precision_bits: int = DEFAULT_PRECISION_BITS) -> int:
    """Intersection multiplicity of a common zero: 1 on an invertible Jacobian,
    otherwise the root multiplicity of a sheared eliminant that separates it."""
    q = q.lift(p.vars)
    px, py = p.diff(xn), p.diff(yn)
    qx, qy = q.diff(xn), q.diff(yn)
    exact_pt = isinstance(x0, FieldElem) and isinstance(y0, FieldElem)
    if exact_pt:
        pt = {xn: x0, yn: y0}
        det = px.eval(pt) * qy.eval(pt) - py.eval(pt) * qx.eval(pt)
        if not det.is_zero():
            return 1
    else:
        with mpmath.workprec(precision_bits):
            xb = x0 if isinstance(x0, BigComplex) else BigComplex.from_field(x0)
            yb = y0 if isinstance(y0, BigComplex) else BigComplex.from_field(y0)
            pt = {xn: xb.mid, yn: yb.mid}
            det = _eval_mp(px, pt) * _eval_mp(qy, pt) - _eval_mp(py, pt) * _eval_mp(qx, pt)
            if abs(det) > 4 * (xb.rad + yb.rad) + mpmath.mpf(2) ** (32 - precision_bits):
                return 1
    # shear u = x + c*y (u reuses the x name) until the point separates
    for c in range(1, 40):
        u_poly = MPoly.var(p.vars, xn) - MPoly.var(p.vars, yn) * c
        pc = p.subs_poly({xn: u_poly})
        qc = q.subs_poly({xn: u_poly})
        try:
            elim = resultant(pc, qc, yn)
        except Exception:
            continue
        if elim.is_zero() or not elim.involves(xn):
            continue
        roots = roots_univariate(elim, precision_bits)
        with mpmath.workprec(precision_bits):
            xb = x0 if isinstance(x0, BigComplex) else BigComplex.from_field(x0)
            yb = y0 if isinstance(y0, BigComplex) else BigComplex.from_field(y0)
            target = BigComplex(xb.mid + c * yb.mid, xb.rad + c * yb.rad)
            matches = [r for r in roots if not BigComplex(r.mid, r.rad).distinct_from(target)]
            if len(matches) == 1:
                return matches[0].multiplicity
    raise Inconclusive("could not separate the multiple point by shearing")


def _numeric_fiber(p, q, xn, yn, xr, precision_bits):
    """Solutions above a numeric x-root: match y-roots of both fibers, Newton-refine."""
    out = []
    py = _fiber_coeffs(p, xn, yn, xr.mid)
    qy = _fiber_coeffs(q, xn, yn, xr.mid)
    if len(py) - 1 < 1:
        py, qy = qy, py
    if len(py) - 1 < 1:
        return out
    try:
        ys = mpmath.polyroots(list(reversed(py)), maxsteps=200, extraprec=precision_bits)
    except mpmath.libmp.libhyper.NoConvergence:
        return out
    for y0 in ys:
        x1, y1 = _newton2(p, q, xn, yn, xr.mid, mpmath.mpc(y0))
        if x1 is None:
            continue
        if abs(x1 - xr.mid) > max(xr.rad * 100, mpmath.mpf(2) ** (-precision_bits // 2)):
            continue
        resid = max(abs(_eval_mp(p, {xn: x1, yn: y1})), abs(_eval_mp(q, {xn: x1, yn: y1})))
        rad = _newton2_radius(p, q, xn, yn, x1, y1, resid)
        if rad is None:
            continue
        ball = CertifiedRoot(y1, rad, xr.multiplicity)
        if any(abs(prev.y.mid - y1) < prev.y.rad + rad for prev in out):
            continue
        out.append(SystemSolution(CertifiedRoot(x1, rad, xr.multiplicity), ball, xr.multiplicity))
    return out


def _fiber_coeffs(p, xn, yn, xval):
    cs = p.coeffs_in(yn)
    return [_eval_mp(c, {xn: xval}) for c in cs]


def _eval_mp(p: MPoly, point: dict):
    full = {}
    for v in p.vars:
        full[v] = point.get(v, mpmath.mpc(0))
    acc = mpmath.mpc(0)
    for e, c in p.terms.items():
        t = BigComplex.from_field(c).mid
        for v, k in zip(p.vars, e):
            if k:
                t *= full[v] ** k
        acc += t
    return acc


def _newton2(p, q, xn, yn, x0, y0, steps: int = 30):
    px, py = p.diff(xn), p.diff(yn)
    qx, qy = q.diff(xn), q.diff(yn)
    x, y = mpmath.mpc(x0), mpmath.mpc(y0)
    for _ in range(steps):
        f1 = _eval_mp(p, {xn: x, yn: y})
        f2 = _eval_mp(q, {xn: x, yn: y})
        a, b = _eval_mp(px, {xn: x, yn: y}), _eval_mp(py, {xn: x, yn: y})
        c, d = _eval_mp(qx, {xn: x, yn: y}), _eval_mp(qy, {xn: x, yn: y})
        det = a * d - b * c
        if det == 0:
            return None, None
        dx = (f1 * d - f2 * b) / det
        dy = (a * f2 - c * f1) / det
        x, y = x - dx, y - dy
        if abs(dx) + abs(dy) < mpmath.mpf(2) ** (8 - mpmath.mp.prec):
            break
    return x, y


def _newton2_radius(p, q, xn, yn, x, y, resid):
    px, py = p.diff(xn), p.diff(yn)
    qx, qy = q.diff(xn), q.diff(yn)
    a, b = _eval_mp(px, {xn: x, yn: y}), _eval_mp(py, {xn: x, yn: y})
    c, d = _eval_mp(qx, {xn: x, yn: y}), _eval_mp(qy, {xn: x, yn: y})
    det = a * d - b * c
    if det == 0:
        return None
    inv_norm = (abs(a) + abs(b) + abs(c) + abs(d)) / abs(det)
    return 4 * inv_norm * resid + mpmath.mpf(2) ** (16 - mpmath.mp.prec)
