import random
from fractions import Fraction

import pytest

from kowalevski.exactalg import FieldElem, MPoly, RatFunc, poly_ring
from kowalevski.vfield import QuadVF, make_equation, expected_profile, twonegative_alpha
from kowalevski.exponents import (
    radial_orbits, kowalevski_exponents, kowalevski_profile, check_relations,
    classify_family, invariant_planes, check_plane_relations, plane_cofactor,
    euler_perturbation_invariance, symbolic_char_factor, ZeroExponent,
    Degenerate, KowalevskiProfile, RadialOrbit,
)
from conftest import random_quadvf, random_nondegenerate_field, VARS3


def ints(pairs):
    return sorted(tuple(sorted((int(u.rat), int(v.rat)))) for u, v in pairs)


class TestRadialOrbits:
    def test_diagonal_field(self):
        x, y, z = poly_ring(VARS3)
        X = QuadVF([x ** 2, y ** 2, z ** 2], VARS3)
        orbits = radial_orbits(X)
        dirs = sorted(tuple(str(c) for c in o.direction) for o in orbits)
        assert len(orbits) == 7
        assert ("1", "1", "1") in dirs and ("1", "0", "0") in dirs

    def test_equation_I_corner_orbits(self):
        X = make_equation("I", {"a1": 2, "a2": 2, "a3": 2})
        dirs = {tuple(str(c) for c in o.direction) for o in radial_orbits(X)}
        for corner in (("1", "0", "0"), ("0", "1", "0"), ("0", "0", "1"), ("1", "1", "1")):
            assert corner in dirs

    def test_sigma_parameterized_orbit(self):
        # the second-family master shape has an orbit at [1 : sigma : 2 sigma + n]
        n, m, sigma = -5, 3, Fraction(7, 2)
        X = make_equation("TwoNegative", {"n": n, "m": m, "alpha": twonegative_alpha(n, m, sigma)})
        dirs = radial_orbits(X)
        target = (FieldElem(1), FieldElem(sigma), FieldElem(2 * sigma + n))
        found = False
        for o in dirs:
            if o.is_exact():
                # compare projectively against (1, sigma, 2 sigma + n)
                a, b, c = o.direction
                if not a.is_zero() and b / a == FieldElem(sigma) and c / a == FieldElem(2 * sigma + n):
                    found = True
        assert found

    def test_degenerate_orbit_flagged(self):
        # no z^2 term: the z-axis direction is a degenerate radial orbit
        x, y, z = poly_ring(VARS3)
        X = QuadVF([x ** 2, y ** 2, x * y], VARS3)
        orbits = radial_orbits(X)
        assert any(o.degenerate for o in orbits)


class TestExponents:
    def test_diagonal_resonant_family(self):
        # x^2 dx + l2 x y dy + l3 x z dz at [1:0:0]: exponents 1 - l_i by the
        # variational definition (charpoly of I - M with the forced -1 removed);
        # the field itself is degenerate away from that orbit, so build it directly
        x, y, z = poly_ring(VARS3)
        one = FieldElem(1)
        zero = FieldElem(0)
        for l2, l3 in ((2, 3), (-1, 4), (5, 5)):
            X = QuadVF([x ** 2, l2 * x * y, l3 * x * z], VARS3)
            orbit = RadialOrbit((one, zero, zero), (one, zero, zero), False)
            pair = kowalevski_exponents(X, orbit)
            assert sorted((int(pair.u.rat), int(pair.v.rat))) == sorted((1 - l2, 1 - l3))

    def test_diagonal_center_orbit(self):
        x, y, z = poly_ring(VARS3)
        X = QuadVF([x ** 2, y ** 2, z ** 2], VARS3)
        orbit = [o for o in radial_orbits(X)
                 if tuple(str(c) for c in o.direction) == ("1", "1", "1")][0]
        pair = kowalevski_exponents(X, orbit)
        assert (int(pair.u.rat), int(pair.v.rat)) == (-1, -1)

    def test_equation_iii_full_profile(self):
        X = make_equation("III", {"k": 5})
        got = kowalevski_profile(X).integer_multiset()
        assert got == ints(expected_profile("III", {"k": 5}))

    def test_symbolic_char_factor_47a(self):
        # the sixth-orbit characteristic polynomial of the master family:
        # zeta^2 - (7 + (7+m+2n)/(sigma-1)) zeta + (6 sigma^2 - n^2 - mn)/(sigma-1)^2
        X = make_equation("TwoNegative", None)
        pv = ("n", "m", "alpha")
        # with alpha symbolic the orbit is [1 : sigma : 2 sigma + n] only when
        # alpha = twonegative_alpha(n, m, sigma); substitute alpha and keep sigma
        sv = ("n", "m", "sigma")
        n, m, sigma = (MPoly.var(sv, v) for v in sv)
        alpha = RatFunc(-(6 * sigma ** 2 + 2 * m * sigma + 5 * n * sigma + m * n + n ** 2), sigma)
        from kowalevski.vfield import PolyVF
        comps = [RatFunc(c).subs({"alpha": alpha}) for c in X.comps]
        Xs = PolyVF(VARS3, comps)
        # normalized representative: P1(v) = 1 - sigma at v = (1, sigma, 2s+n)
        scale = RatFunc(MPoly.const(sv, 1), MPoly.const(sv, 1) - sigma)
        rep = [scale, scale * RatFunc(sigma), scale * RatFunc(2 * sigma + n)]
        s_sum, s_prod = symbolic_char_factor(Xs, rep)
        one = MPoly.const(sv, 1)
        want_sum = RatFunc(7 * (sigma - one) + (7 * one + m + 2 * n), sigma - one)
        want_prod = RatFunc(6 * sigma ** 2 - n ** 2 - m * n, (sigma - one) ** 2)
        assert (s_sum - want_sum).is_zero()
        assert (s_prod - want_prod).is_zero()

    def test_symbolic_char_factor_47b(self):
        # seventh orbit at [6 sigma : n(n+m) : 2n(n+m+3 sigma)]
        sv = ("n", "m", "sigma")
        n, m, sigma = (MPoly.var(sv, v) for v in sv)
        one = MPoly.const(sv, 1)
        alpha = RatFunc(-(6 * sigma ** 2 + 2 * m * sigma + 5 * n * sigma + m * n + n ** 2), sigma)
        X = make_equation("TwoNegative", None)
        from kowalevski.vfield import PolyVF
        comps = [RatFunc(c).subs({"alpha": alpha}) for c in X.comps]
        Xs = PolyVF(VARS3, comps)
        v1 = RatFunc(6 * sigma)
        v2 = RatFunc(n * (n + m))
        v3 = RatFunc(2 * n * (n + m + 3 * sigma))
        # normalization: P1(v) = c * v1 with P1 = x(x - y): P1(v)/v1 = v1 - v2
        lam = (v1 - v2)  # P(t v) = t v requires t = 1/lambda
        rep = [v1 / lam, v2 / lam, v3 / lam]
        s_sum, s_prod = symbolic_char_factor(Xs, rep)
        den = n ** 2 + m * n - 6 * sigma
        want_sum = RatFunc(7 * den + 6 * sigma * (7 * one + m + 2 * n), den)
        want_prod = RatFunc(6 * n * (n + m) * (n ** 2 + m * n - 6 * sigma ** 2), den ** 2)
        assert (s_sum - want_sum).is_zero()
        assert (s_prod - want_prod).is_zero()


class TestRelations:
    def test_diagonal_field_sums(self):
        x, y, z = poly_ring(VARS3)
        X = QuadVF([x ** 2, y ** 2, z ** 2], VARS3)
        rel = check_relations(kowalevski_profile(X))
        assert rel.exact and rel.all_pass()

    def test_table_row_xvi(self):
        X = make_equation("XVI", {"beta": 2})
        rel = check_relations(kowalevski_profile(X))
        assert rel.all_pass()

    def test_zero_exponent_rejected(self):
        prof = kowalevski_profile(make_equation("III", {"k": 5}))
        bad = prof.pairs()[0]
        bad.prod = FieldElem(0)
        with pytest.raises(ZeroExponent):
            check_relations(prof)

    def test_certified_random_field(self):
        rng = random.Random(41)
        X, _ = random_nondegenerate_field(rng)
        rel = check_relations(kowalevski_profile(X))
        assert rel.all_pass()


class TestFamilies:
    def test_first_family(self):
        X = make_equation("I", {"a1": -42, "a2": -28, "a3": -12})
        assert classify_family(kowalevski_profile(X)) == 1

    def test_second_family(self):
        X = make_equation("XVI", {"beta": 2})
        assert classify_family(kowalevski_profile(X)) == 2

    def test_synthetic_seventh_family(self):
        pairs = []
        for _ in range(7):
            class P:  # minimal stand-in with exact integer pair (1, 7)
                exact = True
                u, v = FieldElem(1), FieldElem(7)
                sum = FieldElem(8)
                prod = FieldElem(7)
            pairs.append((RadialOrbit((FieldElem(1), FieldElem(0), FieldElem(0)),
                                      (FieldElem(1), FieldElem(0), FieldElem(0)), False), P()))
        prof = KowalevskiProfile.__new__(KowalevskiProfile)
        prof.entries = pairs
        assert classify_family(prof) == 7


class TestInvariantPlanes:
    def test_genrtwod_planes(self):
        X = make_equation("GenRTwoD", {"n": 3, "m": -2, "alpha": 8})
        planes = [str(ell) for ell, _ in invariant_planes(X)]
        assert "x" in planes and "y" in planes

    def test_yetanother_plane_z(self):
        X = make_equation("YetAnother", {"alpha": 1, "beta": 2, "gamma": 3})
        planes = [str(ell) for ell, _ in invariant_planes(X)]
        assert "z" in planes

    def test_generic_field_has_no_plane(self):
        rng = random.Random(12)
        X, _ = random_nondegenerate_field(rng)
        # brute-force oracle: a symbolic linear form must divide its own derivative
        assert invariant_planes(X) == [] or all(
            plane_cofactor(X, ell) is not None for ell, _ in invariant_planes(X))

    def test_plane_relations_on_xiv(self):
        X = make_equation("XIV", {"q": 2})
        x, y, z = poly_ring(VARS3)
        planes = invariant_planes(X)
        assert planes, "equation XIV has an invariant plane"
        for ell, _ in planes:
            rep = check_plane_relations(X, ell)
            assert rep.passed

    def test_planar_triples_satisfy_tangency_relation(self):
        for triple in ((2, 3, 6), (2, 4, 4), (3, 3, 3), (1, 5, -5)):
            total = sum(Fraction(1, t) for t in triple)
            assert total == 1

    def test_third_in_plane_orbit_determined(self):
        # solving 1/u3 = 1 - 1/u1 - 1/u2 and v3/u3 = 1 - v1/u1 - v2/u2
        u1, v1, u2, v2 = 1, 2, 2, 1
        u3 = Fraction(1) / (1 - Fraction(1, u1) - Fraction(1, u2))
        v3 = u3 * (1 - Fraction(v1, u1) - Fraction(v2, u2))
        assert u3 == -2 and v3 == 3


class TestEulerPerturbation:
    def test_zero_form_is_identity(self):
        X = make_equation("III", {"k": 5})
        orbit = radial_orbits(X)[0]
        rep = euler_perturbation_invariance(X, MPoly.zero(VARS3), orbit)
        assert rep.pairs_equal and rep.ell_vanishes and rep.consistent()

    def test_form_vanishing_on_orbit_preserves_pair(self):
        rng = random.Random(3)
        while True:
            X, orbits = random_nondegenerate_field(rng)
            exact = [o for o in orbits if o.is_exact()]
            if exact:
                break
        orbit = exact[0]
        a = orbit.direction
        x, y, z = poly_ring(VARS3)
        # build a linear form vanishing on the direction
        if not a[0].is_zero():
            ell = x * a[1] - y * a[0]
        else:
            ell = y * a[2] - z * a[1]
        rep = euler_perturbation_invariance(X, ell, orbit)
        assert rep.ell_vanishes and rep.pairs_equal and rep.consistent()

    def test_form_not_vanishing_changes_pair(self):
        X = make_equation("IV", {"m": 3})
        x, y, z = poly_ring(VARS3)
        changed = 0
        for orbit in radial_orbits(X):
            if not orbit.is_exact() or orbit.degenerate:
                continue
            val = (2 * y).eval(dict(zip(VARS3, orbit.direction)))
            try:
                rep = euler_perturbation_invariance(X, 2 * y, orbit)
            except Degenerate:
                continue
            assert rep.consistent()
            if not val.is_zero():
                changed += 1
                assert not rep.pairs_equal
        assert changed > 0
