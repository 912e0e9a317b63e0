"""Radial orbits, Kowalevski exponents, and the relations binding them.

An orbit direction v has P(v) parallel to v; the normalized representative a
(unique, P(a) = a) feeds the variational matrix M = dP/dz(a), and the two
exponents of the orbit are the roots of charpoly(I - M) after removing the
forced eigenvalue -1.  Everything is exact when the orbit direction lies in
the working field; otherwise certified ball arithmetic takes over.
"""

from __future__ import annotations

import itertools
import mpmath
from fractions import Fraction
from typing import Mapping, Sequence

from .exactalg import (
    FieldElem, MPoly, RatFunc, SqMatrix, ZERO, ONE,
    exact_divide, mpoly_gcd, InexactDivision,
)
from .numcert import (
    point_multiplicity,
    BigComplex, CertifiedRoot, CertifiedInt, certify_integer, Inconclusive,
    PositiveDimensional, solve_polynomial_system_2d, roots_univariate,
    DEFAULT_PRECISION_BITS,
)
from .vfield import QuadVF, PolyVF, euler_field


class NonIsolatedSingularity(ArithmeticError):
    pass


class MissingMinusOneEigenvalue(ArithmeticError):
    pass


class Degenerate(ArithmeticError):
    pass


class ZeroExponent(ArithmeticError):
    pass


class OrbitNotSimple(ArithmeticError):
    pass


class NoSubsetSumsToOne(ArithmeticError):
    pass


class RadialOrbit:
    """Invariant line through the origin; ``rep`` is the point with P(a) = a."""

    __slots__ = ("direction", "rep", "degenerate", "multiplicity")

    def __init__(self, direction, rep, degenerate: bool, multiplicity: int = 1):
        self.direction = tuple(direction)
        self.rep = tuple(rep) if rep is not None else None
        self.degenerate = degenerate
        self.multiplicity = multiplicity

    def is_exact(self) -> bool:
        return all(isinstance(c, FieldElem) for c in self.direction)

    def sort_key(self):
        out = []
        for c in self.direction:
            if isinstance(c, FieldElem):
                with mpmath.workprec(64):
                    b = BigComplex.from_field(c)
                out.append((mpmath.nstr(b.mid.real, 18), "0.0"))
            else:
                out.append((mpmath.nstr(c.mid.real, 18), mpmath.nstr(c.mid.imag, 18)))
        return out

    def __repr__(self):
        def s(c):
            return str(c) if isinstance(c, FieldElem) else mpmath.nstr(c.mid, 12)
        return "[" + " : ".join(s(c) for c in self.direction) + "]"


class KowalevskiPair:
    """Unordered exponent pair, stored with its exact quadratic when available."""

    __slots__ = ("u", "v", "sum", "prod", "exact")

    def __init__(self, u, v, sum_, prod_, exact: bool):
        self.u = u
        self.v = v
        self.sum = sum_
        self.prod = prod_
        self.exact = exact

    def char_factor(self, var: str = "lambda") -> MPoly | None:
        if not self.exact or not isinstance(self.sum, FieldElem):
            return None
        lam = MPoly.var((var,), var)
        return lam ** 2 - lam * self.sum + MPoly.const((var,), self.prod)

    def integer_pair(self) -> tuple[int, int] | None:
        """Certified integer exponents, sorted, or None."""
        vals = []
        for w in (self.u, self.v):
            if isinstance(w, FieldElem):
                if not w.is_integer():
                    return None
                vals.append(int(w.rat))
            elif isinstance(w, BigComplex):
                try:
                    ci = certify_integer(w)
                except Inconclusive:
                    return None
                if ci is None:
                    return None
                vals.append(ci.value)
            else:
                return None
        return tuple(sorted(vals))

    def __repr__(self):
        def s(w):
            if isinstance(w, FieldElem):
                return str(w)
            if isinstance(w, BigComplex):
                return mpmath.nstr(w.mid, 12)
            return "?"
        return f"({s(self.u)}, {s(self.v)})"


class KowalevskiProfile:
    """Seven (orbit, pair) entries of a nondegenerate field."""

    def __init__(self, entries: Sequence[tuple[RadialOrbit, KowalevskiPair]]):
        self.entries = sorted(entries, key=lambda e: e[0].sort_key())

    def pairs(self) -> list[KowalevskiPair]:
        out = []
        for orbit, pair in self.entries:
            out.extend([pair] * orbit.multiplicity)
        return out

    def integer_multiset(self) -> list[tuple[int, int]] | None:
        out = []
        for p in self.pairs():
            ip = p.integer_pair()
            if ip is None:
                return None
            out.append(ip)
        return sorted(out)

    def __len__(self):
        return sum(o.multiplicity for o, _ in self.entries)

    def __repr__(self):
        return "; ".join(f"{o} -> {p}" for o, p in self.entries)


# -- radial orbits -----------------------------------------------------------------


def radial_orbits(X: QuadVF, precision_bits: int = DEFAULT_PRECISION_BITS) -> list[RadialOrbit]:
    """All projective directions where X is radial, charted and deduplicated."""
    if X.is_zero():
        raise ValueError("zero field")
    vx, vy, vz = X.vars
    P1, P2, P3 = X.comps
    orbits: list[RadialOrbit] = []

    # chart z = 1 (all orbits with nonzero last coordinate)
    one = FieldElem(1)
    F = _subs_two(P1, vz, one) - MPoly.var(P1.vars, vx) * _subs_two(P3, vz, one)
    G = _subs_two(P2, vz, one) - MPoly.var(P1.vars, vy) * _subs_two(P3, vz, one)
    if F.is_zero() and G.is_zero():
        raise NonIsolatedSingularity("field is radial along a surface")
    try:
        sols = solve_polynomial_system_2d(F, G, precision_bits)
    except PositiveDimensional as e:
        raise NonIsolatedSingularity(str(e))
    for s in sols:
        xv = s.x.exact if s.x.exact is not None else s.x
        yv = s.y.exact if s.y.exact is not None else s.y
        orbits.append(_orbit_from_direction(X, (xv, yv, one), s.multiplicity, precision_bits))

    # chart y = 1, z = 0 (multiplicity read in the chart y = 1 system)
    Fy = _subs_two(P1, vy, one) - MPoly.var(P1.vars, vx) * _subs_two(P2, vy, one)
    Gy = _subs_two(P3, vy, one) - MPoly.var(P1.vars, vz) * _subs_two(P2, vy, one)
    A = _subs_two(Fy, vz, ZERO)
    B = _subs_two(Gy, vz, ZERO)
    for root, _ in _common_univariate_roots(A, B, vx, precision_bits):
        xv = root.exact if isinstance(root, CertifiedRoot) and root.exact is not None else root
        mult = point_multiplicity(Fy, Gy, vx, vz, xv, ZERO, precision_bits)
        orbits.append(_orbit_from_direction(X, (xv, one, ZERO), mult, precision_bits))

    # the point [1:0:0] (multiplicity read in the chart x = 1 system)
    e1 = {vx: one, vy: ZERO, vz: ZERO}
    if P2.eval(e1).is_zero() and P3.eval(e1).is_zero():
        Fx = _subs_two(P2, vx, one) - MPoly.var(P1.vars, vy) * _subs_two(P1, vx, one)
        Gx = _subs_two(P3, vx, one) - MPoly.var(P1.vars, vz) * _subs_two(P1, vx, one)
        mult = point_multiplicity(Fx, Gx, vy, vz, ZERO, ZERO, precision_bits)
        orbits.append(_orbit_from_direction(X, (one, ZERO, ZERO), mult, precision_bits))

    orbits.sort(key=lambda o: o.sort_key())
    return orbits


def _subs_two(p: MPoly, var: str, val: FieldElem) -> MPoly:
    return p.subs_scalar(var, val)


def _common_univariate_roots(A: MPoly, B: MPoly, var: str, precision_bits):
    """Common roots (with multiplicity) of two univariate polynomials."""
    if A.is_zero() and B.is_zero():
        raise NonIsolatedSingularity("a full line of radial directions")
    if A.is_zero() or B.is_zero():
        h = B if A.is_zero() else A
    else:
        h = mpoly_gcd(A, B)
    if h.is_constant():
        return []
    out = []
    for r in roots_univariate(h, precision_bits):
        out.append((r, r.multiplicity))
    return out


def _orbit_from_direction(X: QuadVF, direction, multiplicity: int,
                          precision_bits: int = DEFAULT_PRECISION_BITS) -> RadialOrbit:
    if all(isinstance(c, FieldElem) for c in direction):
        vals = {v: c for v, c in zip(X.vars, direction)}
        Pv = [c.eval(vals) for c in X.comps]
        if all(p.is_zero() for p in Pv):
            return RadialOrbit(direction, None, True, multiplicity)
        for vi, pi in zip(direction, Pv):
            if not vi.is_zero():
                if pi.is_zero():
                    return RadialOrbit(direction, None, True, multiplicity)
                c = vi / pi
                break
        rep = tuple(c * vi for vi in direction)
        return RadialOrbit(direction, rep, False, multiplicity)
    # ball direction
    with mpmath.workprec(precision_bits):
        balls = [c if isinstance(c, BigComplex) else BigComplex.from_field(c) for c in direction]
        Pv = [eval_ball(c, dict(zip(X.vars, balls))) for c in X.comps]
        best = None
        for vi, pi in zip(balls, Pv):
            if not vi.contains_zero() and not pi.contains_zero():
                best = vi * pi.inverse()
                break
        if best is None:
            return RadialOrbit(balls, None, True, multiplicity)
        rep = tuple(best * vi for vi in balls)
        return RadialOrbit(balls, rep, False, multiplicity)


def eval_ball(p: MPoly, point: Mapping[str, BigComplex]) -> BigComplex:
    acc = BigComplex(0)
    for e, c in p.terms.items():
        t = BigComplex.from_field(c)
        for v, k in zip(p.vars, e):
            for _ in range(k):
                t = t * point[v]
        acc = acc + t
    return acc


# -- exponents ----------------------------------------------------------------------


def kowalevski_exponents(X: QuadVF, orbit: RadialOrbit,
                         precision_bits: int = DEFAULT_PRECISION_BITS) -> KowalevskiPair:
    """Exponent pair of a nondegenerate radial orbit."""
    if orbit.degenerate or orbit.rep is None:
        raise Degenerate("orbit is degenerate; exponents undefined")
    if all(isinstance(c, FieldElem) for c in orbit.rep):
        point = dict(zip(X.vars, orbit.rep))
        M = X.jacobian_at(point)
        IM = SqMatrix.identity(3) - M
        cp = IM.char_poly("lam")
        lam = MPoly.var(cp.vars, "lam")
        try:
            quad = exact_divide(cp, lam + MPoly.const(cp.vars, 1))
        except InexactDivision:
            raise MissingMinusOneEigenvalue(str(cp))
        cs = quad.coeffs_in("lam")
        s = -cs[1].constant_value()
        p = cs[0].constant_value()
        disc = s * s - 4 * p
        root = disc.sqrt()
        if root is not None:
            u = (s + root) / 2
            v = (s - root) / 2
            return KowalevskiPair(*_sorted_exact(u, v), s, p, True)
        with mpmath.workprec(DEFAULT_PRECISION_BITS):
            sb, pb = BigComplex.from_field(s), BigComplex.from_field(p)
            u, v = _ball_quadratic_roots(sb, pb)
        return KowalevskiPair(u, v, s, p, True)
    # ball path
    with mpmath.workprec(precision_bits):
        balls = list(orbit.rep)
        point = dict(zip(X.vars, balls))
        Mb = [[eval_ball(c.diff(v), point) for v in X.vars] for c in X.comps]
        IM = [[(BigComplex(1) if i == j else BigComplex(0)) - Mb[i][j] for j in range(3)] for i in range(3)]
        c2 = -(IM[0][0] + IM[1][1] + IM[2][2])
        c1 = (IM[0][0] * IM[1][1] - IM[0][1] * IM[1][0]) + (IM[0][0] * IM[2][2] - IM[0][2] * IM[2][0]) + (IM[1][1] * IM[2][2] - IM[1][2] * IM[2][1])
        c0 = -_det3_ball(IM)
        rem = c0 - c1 + c2 - BigComplex(1)  # charpoly(-1) up to sign
        if not rem.contains_zero():
            raise MissingMinusOneEigenvalue("certified nonzero remainder at -1")
        A = c2 - BigComplex(1)
        B = c1 - c2 + BigComplex(1)
        s, p = -A, B
        u, v = _ball_quadratic_roots(s, p)
        return KowalevskiPair(u, v, s, p, False)


def _det3_ball(m):
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def _ball_quadratic_roots(s: BigComplex, p: BigComplex) -> tuple[BigComplex, BigComplex]:
    disc = s * s - BigComplex(4) * p
    root = _ball_sqrt(disc)
    u = (s + root) * BigComplex(Fraction(1, 2))
    v = (s - root) * BigComplex(Fraction(1, 2))
    if _root_key(u) > _root_key(v):
        u, v = v, u
    return u, v


def _ball_sqrt(b: BigComplex) -> BigComplex:
    a = abs(b.mid)
    if a <= b.rad:
        return BigComplex(mpmath.sqrt(b.mid), mpmath.sqrt(a + b.rad))
    m = mpmath.sqrt(b.mid)
    rad = b.rad / (2 * mpmath.sqrt(a - b.rad))
    return BigComplex(m, rad)._bump()


def _root_key(b: BigComplex):
    return (mpmath.nstr(b.mid.real, 20), mpmath.nstr(b.mid.imag, 20))


def _sorted_exact(u: FieldElem, v: FieldElem) -> tuple[FieldElem, FieldElem]:
    if (float(u), 0.0) > (float(v), 0.0):
        u, v = v, u
    return u, v


def symbolic_char_factor(X: QuadVF, rep: Sequence[RatFunc], var: str = "zeta") -> tuple[RatFunc, RatFunc]:
    """(sum, product) of the exponents at a parametric normalized point.

    ``rep`` must satisfy P(rep) = rep identically; entries are RatFuncs in the
    parameters.  Returns the coefficients of zeta^2 - sum*zeta + product.
    """
    vars = X.vars
    Ms = [[(c.diff(v) if isinstance(c, RatFunc) else RatFunc(c.diff(v))).subs(dict(zip(vars, rep)))
           for v in vars] for c in X.comps]
    one = RatFunc.from_scalar(Ms[0][0].num.vars, 1)
    IM = [[(one if i == j else one * 0) - Ms[i][j] for j in range(3)] for i in range(3)]
    tr = IM[0][0] + IM[1][1] + IM[2][2]
    min2 = (
        IM[0][0] * IM[1][1] - IM[0][1] * IM[1][0]
        + IM[0][0] * IM[2][2] - IM[0][2] * IM[2][0]
        + IM[1][1] * IM[2][2] - IM[1][2] * IM[2][1]
    )
    det = (
        IM[0][0] * (IM[1][1] * IM[2][2] - IM[1][2] * IM[2][1])
        - IM[0][1] * (IM[1][0] * IM[2][2] - IM[1][2] * IM[2][0])
        + IM[0][2] * (IM[1][0] * IM[2][1] - IM[1][1] * IM[2][0])
    )
    # charpoly(t) = t^3 - tr t^2 + min2 t - det, with the factor (t + 1) removed:
    # t^2 + A t + B where A = -tr - ... do the synthetic division at t = -1
    # quotient: t^2 + ( -tr + (-1) )? use: t^3 - tr t^2 + min2 t - det = (t+1)(t^2 + a t + b) + r
    a = -tr - one
    b = min2 - a
    r = -det - b
    if not r.is_zero():
        raise MissingMinusOneEigenvalue("parametric charpoly has no (t+1) factor")
    return -a, b  # sum, product


def kowalevski_profile(X: QuadVF, precision_bits: int = DEFAULT_PRECISION_BITS) -> KowalevskiProfile:
    orbits = radial_orbits(X, precision_bits)
    total = sum(o.multiplicity for o in orbits)
    if total != 7:
        raise NonIsolatedSingularity(f"found {total} radial orbits counted with multiplicity")
    entries = []
    for o in orbits:
        if o.degenerate:
            raise Degenerate(f"degenerate radial orbit at {o}")
        entries.append((o, kowalevski_exponents(X, o, precision_bits)))
    return KowalevskiProfile(entries)


def orbits_with_flags(X: QuadVF, precision_bits: int = DEFAULT_PRECISION_BITS):
    """Orbit list with degenerate entries flagged rather than raised (for reports)."""
    out = []
    for o in radial_orbits(X, precision_bits):
        pair = None
        if not o.degenerate:
            pair = kowalevski_exponents(X, o, precision_bits)
        out.append((o, pair))
    return out


# -- relations ------------------------------------------------------------------------


class RelationReport:
    __slots__ = ("exact", "values", "residuals", "passed")

    TARGETS = (Fraction(1), Fraction(4), Fraction(16))

    def __init__(self, exact, values, residuals, passed):
        self.exact = exact
        self.values = values
        self.residuals = residuals
        self.passed = passed

    def all_pass(self) -> bool:
        return all(self.passed)

    def __repr__(self):
        names = ("R0", "R1", "R2")
        return ", ".join(f"{n}={'pass' if p else 'FAIL'}" for n, p in zip(names, self.passed))


def check_relations(profile: KowalevskiProfile, tol: Fraction = Fraction(1, 10 ** 20)) -> RelationReport:
    """R0 = sum 1/(uv), R1 = sum (u+v)/(uv), R2 = sum (u+v)^2/(uv) against 1, 4, 16."""
    pairs = profile.pairs()
    exact = all(p.exact and isinstance(p.sum, FieldElem) for p in pairs)
    if exact:
        for p in pairs:
            if p.prod.is_zero():
                raise ZeroExponent("an exponent vanishes")
        sums = [ZERO, ZERO, ZERO]
        for p in pairs:
            inv = p.prod.inverse()
            sums[0] = sums[0] + inv
            sums[1] = sums[1] + p.sum * inv
            sums[2] = sums[2] + p.sum * p.sum * inv
        residuals = [s - FieldElem(t) for s, t in zip(sums, RelationReport.TARGETS)]
        passed = [r.is_zero() for r in residuals]
        return RelationReport(True, sums, residuals, passed)
    with mpmath.workprec(DEFAULT_PRECISION_BITS):
        sums = [BigComplex(0), BigComplex(0), BigComplex(0)]
        for p in pairs:
            sb = p.sum if isinstance(p.sum, BigComplex) else BigComplex.from_field(p.sum)
            pb = p.prod if isinstance(p.prod, BigComplex) else BigComplex.from_field(p.prod)
            if pb.contains_zero():
                raise ZeroExponent("product of exponents not certifiably nonzero")
            inv = pb.inverse()
            sums[0] = sums[0] + inv
            sums[1] = sums[1] + sb * inv
            sums[2] = sums[2] + sb * sb * inv
        tolv = mpmath.mpf(tol.numerator) / tol.denominator
        residuals = [s - BigComplex(t) for s, t in zip(sums, RelationReport.TARGETS)]
        passed = [abs(r.mid) + r.rad < tolv for r in residuals]
        return RelationReport(False, sums, residuals, passed)


def classify_family(profile: KowalevskiProfile) -> int:
    """Smallest cardinality of a subset J with sum over J of 1/(u_i v_i) = 1."""
    pairs = profile.pairs()
    xis = []
    for p in pairs:
        if isinstance(p.prod, FieldElem):
            if p.prod.is_zero():
                raise ZeroExponent("zero exponent product")
            xis.append(p.prod)
        else:
            ci = certify_integer(p.prod)
            if ci is None or ci.value == 0:
                raise ZeroExponent("product not a certified nonzero integer")
            xis.append(FieldElem(ci.value))
    for size in range(1, len(xis) + 1):
        for J in itertools.combinations(range(len(xis)), size):
            s = ZERO
            for i in J:
                s = s + xis[i].inverse()
            if s == FieldElem(1):
                return size
    raise NoSubsetSumsToOne("no reciprocal subset sums to 1 (is R0 violated?)")


# -- invariant planes --------------------------------------------------------------------


def invariant_planes(X: QuadVF, orbits: list[RadialOrbit] | None = None) -> list[tuple[MPoly, MPoly]]:
    """All invariant planes (linear form, cofactor with X(l) = l * cofactor)."""
    if orbits is None:
        orbits = radial_orbits(X)
    exact_dirs = [o.direction for o in orbits if o.is_exact()]
    seen: set = set()
    out = []
    vars = X.vars
    for v1, v2 in itertools.combinations(exact_dirs, 2):
        n = _cross(v1, v2)
        if all(c.is_zero() for c in n):
            continue
        ell = MPoly.zero(vars)
        for coef, v in zip(n, vars):
            ell = ell + MPoly.var(vars, v) * coef
        ell = ell.monic_scale()
        key = str(ell)
        if key in seen:
            continue
        seen.add(key)
        cof = plane_cofactor(X, ell)
        if cof is not None:
            out.append((ell, cof))
    out.sort(key=lambda t: str(t[0]))
    return out


def plane_cofactor(X: QuadVF, ell: MPoly) -> MPoly | None:
    """Linear cofactor L with X(ell) = ell * L, or None when the plane is not invariant."""
    der = X.apply(ell)
    if der.is_zero():
        return MPoly.zero(ell.vars)
    try:
        q = exact_divide(der, ell)
    except InexactDivision:
        return None
    return q


def _cross(v1, v2):
    a1, a2, a3 = v1
    b1, b2, b3 = v2
    return (a2 * b3 - a3 * b2, a3 * b1 - a1 * b3, a1 * b2 - a2 * b1)


class PlaneReport:
    __slots__ = ("triples", "tangency_sum", "camacho_sad", "passed")

    def __init__(self, triples, tangency_sum, camacho_sad):
        self.triples = triples
        self.tangency_sum = tangency_sum
        self.camacho_sad = camacho_sad
        self.passed = tangency_sum == FieldElem(1) and camacho_sad == FieldElem(1)

    def __repr__(self):
        return f"plane relations: sum 1/u = {self.tangency_sum}, sum v/u = {self.camacho_sad}"


def check_plane_relations(X: QuadVF, ell: MPoly) -> PlaneReport:
    """sum 1/u_i = 1 and sum v_i/u_i = 1 over the three in-plane orbits."""
    if plane_cofactor(X, ell) is None:
        raise ValueError("plane is not invariant")
    orbits = [o for o in radial_orbits(X) if o.is_exact() and ell.eval(dict(zip(X.vars, o.direction))).is_zero()]
    if len(orbits) != 3:
        raise OrbitNotSimple(f"expected 3 in-plane orbits, found {len(orbits)}")
    triples = []
    s_inv = ZERO
    s_cs = ZERO
    for o in orbits:
        if o.degenerate:
            raise Degenerate("in-plane orbit is degenerate")
        u, v = in_plane_split(X, o, ell)
        if u.is_zero():
            raise ZeroExponent("tangent exponent vanishes")
        triples.append((u, v))
        s_inv = s_inv + u.inverse()
        s_cs = s_cs + v / u
    return PlaneReport(triples, s_inv, s_cs)


def in_plane_split(X: QuadVF, orbit: RadialOrbit, ell: MPoly) -> tuple[FieldElem, FieldElem]:
    """(tangent exponent u, transverse exponent v) at an orbit inside the plane ell."""
    a = orbit.rep
    point = dict(zip(X.vars, a))
    M = X.jacobian_at(point)
    IM = SqMatrix.identity(3) - M
    coefs = [ell.diff(v).constant_value() for v in X.vars]
    # basis vector of ker(ell) independent of a
    cands = [
        (coefs[1], -coefs[0], ZERO),
        (coefs[2], ZERO, -coefs[0]),
        (ZERO, coefs[2], -coefs[1]),
    ]
    w = None
    for c in cands:
        if all(x.is_zero() for x in c):
            continue
        if not _independent(a, c):
            continue
        w = c
        break
    if w is None:
        raise Degenerate("orbit direction spans the plane kernel")
    img = IM.apply(list(w))
    # solve img = c1 * a + c2 * w  -> c2 is the tangent eigen-part
    c2 = _solve_two(a, w, img)
    pair = kowalevski_exponents(X, orbit)
    u = c2
    v = pair.sum - u
    return u, v


def _independent(a, b) -> bool:
    c = _cross(a, b)
    return not all(x.is_zero() for x in c)


def _solve_two(a, w, img) -> FieldElem:
    # pick two rows with invertible 2x2 minor
    for i, j in itertools.combinations(range(3), 2):
        det = a[i] * w[j] - a[j] * w[i]
        if not det.is_zero():
            c2 = (a[i] * img[j] - a[j] * img[i]) / det
            return c2
    raise Degenerate("degenerate plane basis")


# -- Euler-field perturbations -----------------------------------------------------------


class PerturbationReport:
    __slots__ = ("pair_before", "pair_after", "ell_vanishes", "pairs_equal")

    def __init__(self, pair_before, pair_after, ell_vanishes, pairs_equal):
        self.pair_before = pair_before
        self.pair_after = pair_after
        self.ell_vanishes = ell_vanishes
        self.pairs_equal = pairs_equal

    def consistent(self) -> bool:
        return self.ell_vanishes == self.pairs_equal


def euler_perturbation_invariance(X: QuadVF, ell: MPoly, orbit: RadialOrbit) -> PerturbationReport:
    """Compare exponents of X and X + ell*E along the same radial direction."""
    if orbit.degenerate:
        raise Degenerate("need a nondegenerate orbit")
    vars = X.vars
    gens = [MPoly.var(vars, v) for v in vars]
    ell = ell.lift(vars) if ell.vars != vars else ell
    Xp = QuadVF([c + ell * g for c, g in zip(X.comps, gens)], vars)
    pair1 = kowalevski_exponents(X, orbit)
    lv = ell.eval(dict(zip(vars, orbit.rep)))
    scale = FieldElem(1) + lv
    if scale.is_zero():
        raise Degenerate("direction degenerate for the perturbed field")
    rep2 = tuple(c / scale for c in orbit.rep)
    orbit2 = RadialOrbit(orbit.direction, rep2, False, orbit.multiplicity)
    pair2 = kowalevski_exponents(Xp, orbit2)
    equal = pair1.sum == pair2.sum and pair1.prod == pair2.prod
    return PerturbationReport(pair1, pair2, lv.is_zero(), equal)
