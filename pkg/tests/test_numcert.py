import random
from fractions import Fraction

import mpmath
import pytest

from kowalevski.exactalg import FieldElem, MPoly, poly_ring
from kowalevski.numcert import (
    BigComplex, CertifiedInt, Inconclusive, PositiveDimensional,
    certify_integer, roots_univariate, solve_polynomial_system_2d,
)


def upoly(coeffs):
    t, = poly_ring(("t",))
    acc = MPoly.zero(("t",))
    for k, c in enumerate(coeffs):
        acc = acc + t ** k * MPoly.const(("t",), c)
    return acc


class TestRoots:
    def test_factorable_quadratic(self):
        rs = roots_univariate(upoly([10, -7, 1]))
        assert [r.exact for r in rs] == [FieldElem(2), FieldElem(5)]

    def test_nonsquare_discriminant(self):
        # t^2 - 7 t + 35/4: roots (7 +- sqrt14)/2, exact in a new quadratic field
        rs = roots_univariate(upoly([Fraction(35, 4), -7, 1]))
        assert all(r.exact is not None and r.exact.d == 14 for r in rs)
        assert all(certify_integer(r.exact) is None for r in rs)

    def test_triple_root(self):
        rs = roots_univariate(upoly([1, 3, 3, 1]))
        assert len(rs) == 1 and rs[0].multiplicity == 3 and rs[0].exact == FieldElem(-1)

    def test_root_sum_matches_trace(self):
        rng = random.Random(5)
        for _ in range(5):
            coeffs = [FieldElem(rng.randint(-6, 6)) for _ in range(5)] + [FieldElem(1)]
            p = upoly(coeffs)
            rs = roots_univariate(p)
            assert sum(r.multiplicity for r in rs) == 5
            with mpmath.workprec(256):
                total = BigComplex(0)
                for r in rs:
                    for _ in range(r.multiplicity):
                        total = total + BigComplex(r.mid, r.rad)
                assert abs(total.mid + coeffs[4].rat) <= total.rad + mpmath.mpf("1e-60")

    def test_precision_doubling_shrinks_radius(self):
        p = upoly([-1, -1, 0, 0, 0, 1])  # irreducible quintic
        lo = roots_univariate(p, 128)
        hi = roots_univariate(p, 512)
        assert max(r.rad for r in hi) < max(r.rad for r in lo)
        # certified values do not change
        for a, b in zip(lo, hi):
            assert abs(a.mid - b.mid) < a.rad + b.rad + mpmath.mpf("1e-30")


class TestCertifyInteger:
    def test_exact_with_polynomial(self):
        p = upoly([-6, 1, 1])  # (t-2)(t+3)
        assert certify_integer(FieldElem(2), p) == 2
        assert certify_integer(FieldElem(5), p) is None

    def test_half_is_not_integer(self):
        assert certify_integer(BigComplex(2.5, 1e-30)) is None

    def test_sqrt97_not_integer(self):
        p = upoly([-97, 0, 1])
        for r in roots_univariate(p):
            assert certify_integer(r, p) is None

    def test_inconclusive_on_large_radius(self):
        with pytest.raises(Inconclusive):
            certify_integer(BigComplex(3.0, 0.4))

    def test_ball_integer(self):
        with mpmath.workprec(256):
            b = BigComplex(mpmath.mpf(3), mpmath.mpf("1e-40"))
        assert certify_integer(b, upoly([-6, 1, 1])) is None  # 3 is not a root
        assert certify_integer(b, upoly([-3, 1])) == 3


class TestSystems:
    def test_simple(self):
        x, y = poly_ring(("x", "y"))
        sols = solve_polynomial_system_2d(x ** 2 - 1, y - x)
        got = sorted((str(s.x.exact), str(s.y.exact)) for s in sols)
        assert got == [("-1", "-1"), ("1", "1")]

    def test_positive_dimensional(self):
        x, y = poly_ring(("x", "y"))
        with pytest.raises(PositiveDimensional):
            solve_polynomial_system_2d((x - y) * (x + y), (x - y) * x)

    def test_chart_minors_of_diagonal_field(self):
        # minors of x^2 dx + y^2 dy + z^2 dz on the chart z = 1
        x, y = poly_ring(("x", "y"))
        F = x ** 2 - x  # P1 - x P3 at z = 1
        G = y ** 2 - y
        sols = solve_polynomial_system_2d(F, G)
        pts = sorted((str(s.x.exact), str(s.y.exact)) for s in sols)
        assert pts == [("0", "0"), ("0", "1"), ("1", "0"), ("1", "1")]
        assert all(s.multiplicity == 1 for s in sols)

    def test_exact_back_substitution_for_rational_solutions(self):
        x, y = poly_ring(("x", "y"))
        p = (x - 2) * (x + y)
        q = (y - 3) * (x + 2 * y)
        sols = solve_polynomial_system_2d(p, q)
        for s in sols:
            if s.is_exact():
                pt = {"x": s.x.exact, "y": s.y.exact}
                assert p.eval(pt).is_zero() and q.eval(pt).is_zero()
