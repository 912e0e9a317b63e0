import random
from fractions import Fraction

import pytest

from kowalevski.exactalg import (
    FieldElem, MixedRadicands, DivisionByZero, MPoly, RatFunc, InexactDivision,
    VarAbsent, exact_divide, mpoly_gcd, poly_ring, poly_substitute, resultant,
    SqMatrix, char_poly,
)


def F(*args):
    return FieldElem(*args)


class TestFieldElem:
    def test_conjugate_product(self):
        assert F(1, 1, 5) * F(1, -1, 5) == F(-4)

    def test_galois_homomorphism_random(self):
        rng = random.Random(7)
        for _ in range(50):
            a = F(Fraction(rng.randint(-9, 9), rng.randint(1, 7)),
                  Fraction(rng.randint(-9, 9), rng.randint(1, 7)), 3)
            b = F(Fraction(rng.randint(-9, 9), rng.randint(1, 7)),
                  Fraction(rng.randint(-9, 9), rng.randint(1, 7)), 3)
            assert (a * b).conj() == a.conj() * b.conj()
            assert (a + b).conj() == a.conj() + b.conj()

    def test_rationalize_inverse(self):
        x = F(2, 1, 2)
        assert x.inverse() == F(1, Fraction(-1, 2), 2)
        assert x * x.inverse() == F(1)

    def test_mixed_radicands_rejected(self):
        with pytest.raises(MixedRadicands):
            F(0, 1, 2) * F(0, 1, 3)

    def test_division_by_zero(self):
        with pytest.raises(DivisionByZero):
            F(1) / F(0)

    def test_normalization_squarefree(self):
        assert F(0, 1, 8) == F(0, 2, 2)
        assert F(0, 1, 9) == F(3)

    def test_parse_roundtrip(self):
        for s in ["3/2", "-5", "1/2+3/4*sqrt(5)", "-sqrt(2)", "2-sqrt(3)"]:
            v = FieldElem.parse(s)
            assert FieldElem.parse(str(v)) == v

    def test_sqrt_in_field(self):
        assert F(9, 4, 5).sqrt() == F(2, 1, 5)
        assert F(Fraction(9, 4)).sqrt() == F(Fraction(3, 2))
        assert F(2).sqrt() == F(0, 1, 2)
        assert F(-1).sqrt() is None


class TestMPoly:
    def setup_method(self):
        self.x, self.y, self.z = poly_ring(("x", "y", "z"))

    def test_ring_axioms_random(self):
        rng = random.Random(3)
        vars = ("x", "y")
        def rand_poly():
            return MPoly(vars, {
                (rng.randint(0, 2), rng.randint(0, 2)): F(rng.randint(-4, 4))
                for _ in range(4)
            })
        for _ in range(30):
            a, b, c = rand_poly(), rand_poly(), rand_poly()
            assert (a + b) * c == a * c + b * c
            assert a * b == b * a
            assert a * (b * c) == (a * b) * c

    def test_exact_divide(self):
        x, y = self.x, self.y
        assert exact_divide(x ** 2 - y ** 2, x - y) == x + y
        with pytest.raises(InexactDivision):
            exact_divide(x ** 2 + y ** 2, x - y)

    def test_substitute_restriction_to_plane(self):
        x, y, z = self.x, self.y, self.z
        p = x ** 3 + x * y * z + z ** 3
        r = poly_substitute(p, {"x": RatFunc(x), "y": RatFunc(y), "z": RatFunc(MPoly.zero(p.vars))})
        assert r == RatFunc(x ** 3)

    def test_substitute_identity(self):
        x, y, z = self.x, self.y, self.z
        p = x ** 2 * y - 3 * z * y ** 2
        r = poly_substitute(p, {"x": RatFunc(x), "y": RatFunc(y), "z": RatFunc(z)})
        assert r == RatFunc(p)

    def test_substitution_unbound_variable(self):
        with pytest.raises(VarAbsent):
            poly_substitute(self.x * self.z, {"x": RatFunc(self.y)})

    def test_gcd_and_ratfunc_reduction(self):
        x, y = self.x, self.y
        g = mpoly_gcd((x ** 2 - y ** 2) * (x + 2 * y), (x + y) ** 2 * (x + 2 * y))
        assert g == (x + y) * (x + 2 * y)
        r = RatFunc(x ** 2 - y ** 2, x - y)
        assert r == RatFunc(x + y)

    def test_ratfunc_equality_cross_multiplication(self):
        x, y = self.x, self.y
        a = RatFunc(x ** 2 - y ** 2, (x - y) ** 2)
        b = RatFunc(x + y, x - y)
        assert a == b

    def test_homogeneity_queries(self):
        x, y, z = self.x, self.y, self.z
        assert (x * y + z ** 2).is_homogeneous()
        assert not (x * y + z).is_homogeneous()
        assert (x * y ** 2).weighted_degree({"x": 1, "y": 2}) == 5

    def test_json_roundtrip(self):
        x, y, z = self.x, self.y, self.z
        p = x ** 2 * y - F(0, 1, 5) * z ** 3 + MPoly.const(("x", "y", "z"), Fraction(1, 2))
        assert MPoly.from_json(p.to_json()) == p


class TestResultant:
    def setup_method(self):
        self.x, self.y = poly_ring(("x", "y"))

    def test_linear_difference(self):
        # sign convention (p rows first): res_x(x-a, x-b) = a - b
        x, y = self.x, self.y
        r = resultant(x - 2, x - 5, "x")
        assert r.constant_value() == F(-3)

    def test_common_factor_vanishes(self):
        x, y = self.x, self.y
        assert resultant(x ** 2 - 2, x ** 2 - 2, "x").is_zero()

    def test_circle_line(self):
        x, y = self.x, self.y
        r = resultant(x ** 2 + y ** 2 - 1, x - y, "x")
        assert r == 2 * y ** 2 - 1

    def test_evaluation_commutes_random(self):
        rng = random.Random(11)
        x, y = self.x, self.y
        p = x ** 2 * y + 2 * x - y ** 2 + 1
        q = x ** 2 - 3 * x * y + 2
        r = resultant(p, q, "x")
        for _ in range(10):
            y0 = F(Fraction(rng.randint(-8, 8), rng.randint(1, 5)))
            pv = [c.eval({"y": y0}) for c in p.coeffs_in("x")]
            qv = [c.eval({"y": y0}) for c in q.coeffs_in("x")]
            rows = []
            m, n = len(pv) - 1, len(qv) - 1
            for i in range(n):
                row = [F(0)] * (m + n)
                for j, c in enumerate(reversed(pv)):
                    row[i + j] = c
                rows.append(row)
            for i in range(m):
                row = [F(0)] * (m + n)
                for j, c in enumerate(reversed(qv)):
                    row[i + j] = c
                rows.append(row)
            assert SqMatrix(rows).det() == r.eval({"y": y0})


class TestCharPoly:
    def test_diagonal(self):
        m = SqMatrix.diagonal([F(-1), F(1), F(1)])
        t, = poly_ring(("t",))
        assert m.char_poly("t") == (t + 1) * (t - 1) ** 2

    def test_zero_matrix(self):
        m = SqMatrix([[F(0), F(0)], [F(0), F(0)]])
        t, = poly_ring(("t",))
        assert m.char_poly("t") == t ** 2

    def test_companion(self):
        m = SqMatrix([[F(0), F(0), F(2)], [F(1), F(0), F(0)], [F(0), F(1), F(0)]])
        t, = poly_ring(("t",))
        assert m.char_poly("t") == t ** 3 - 2

    def test_similarity_invariance_random(self):
        rng = random.Random(23)
        for _ in range(10):
            m = SqMatrix([[F(rng.randint(-3, 3)) for _ in range(3)] for _ in range(3)])
            while True:
                p = SqMatrix([[F(rng.randint(-3, 3)) for _ in range(3)] for _ in range(3)])
                if not p.det().is_zero():
                    break
            conj = p * m * p.inverse()
            assert conj.char_poly("t") == m.char_poly("t")
