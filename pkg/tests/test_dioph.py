import random
from fractions import Fraction

import pytest

from kowalevski.dioph import (
    UnitFractionProblem, SolutionRecord, ParametricFamily, UnboundedWithoutCap,
    solve_unit_fractions, planar_triples, enumerate_section_421, count_triples_sixth,
    whichkappa, ProfileSkeleton, complete_profile, lemma_42_search,
    skeleton_case_a_one, skeleton_case_b_first, skeleton_case_b_second,
    skeleton_remaining_case, verify_unit_fraction_solution,
)

# the printed second-family enumeration, frozen row by row
PRINTED_421 = {
    4: [(3, -4), (4, -6), (8, -24), (9, -36), (10, -60), (11, -132), (13, 156),
        (14, 84), (15, 60), (16, 48), (18, 36), (20, 30), (21, 28), (24, 24)],
    5: [(5, -12), (8, -120), (9, 180), (10, 60), (12, 30), (15, 20)],
    6: [(3, -5), (5, -15), (7, -105), (8, 120), (9, 45), (10, 30), (12, 20), (15, 15)],
    7: [(8, 56), (14, 14)],
    8: [(7, 168), (8, 42)],
    9: [(8, 36), (9, 24)],
    10: [(10, 18)],
    11: [(11, 15)],
    12: [(4, -11)],
    13: [(12, 13)],
    16: [(10, 16)],
    19: [(9, 19)],
    21: [(5, -28)],
    25: [(8, 25)],
    30: [(5, -29)],
    43: [(7, 43)],
}


class TestSection421:
    def test_full_printed_list(self):
        got = {}
        for n, a, b in enumerate_section_421(4, 100):
            got.setdefault(n, []).append((a, b))
        assert got == PRINTED_421

    def test_empty_beyond_43(self):
        assert enumerate_section_421(44, 1000) == []

    def test_solutions_verify(self):
        for n, a, b in enumerate_section_421(4, 50):
            assert Fraction(1, a) + Fraction(1, b) + Fraction(1, n * (n - 1)) == Fraction(1, 6)
            assert a != 6 and b != 6


class TestPlanarTriples:
    def test_sporadic_and_family(self):
        recs, fams = planar_triples()
        sporadic = {r.values for r in recs}
        assert {(2, 3, 6), (2, 4, 4), (3, 3, 3)} <= sporadic
        assert len(fams) == 1 and fams[0].prefix == (1,)
        # family instances solve the equation
        for m in (2, 5, -7):
            vals = fams[0].instance(m)
            assert sum(Fraction(1, v) for v in vals) == 1

    def test_single_term(self):
        recs, fams = solve_unit_fractions(UnitFractionProblem(1, Fraction(1)))
        assert [r.values for r in recs] == [(1,)] and not fams


class TestTriplesSixth:
    def test_complete_enumeration_is_141(self):
        # two independent routes agree: the recursion and a brute-force box that
        # provably contains every solution (|n2| <= 84, n3 determined)
        count, triples = count_triples_sixth()
        brute = set()
        N = 2000
        for a in range(-19, 20):
            if a in (0, 6):
                continue
            t1 = Fraction(1, 6) - Fraction(1, a)
            if t1 == 0:
                continue
            for b in range(-N, N + 1):
                if b == 0 or b == 6 or abs(b) < abs(a):
                    continue
                r = t1 - Fraction(1, b)
                if r == 0 or r.numerator not in (1, -1):
                    continue
                c = r.denominator * r.numerator
                if c != 6 and abs(c) >= abs(b):
                    brute.add(tuple(sorted((a, b, c))))
        assert set(triples) == brute
        assert count == 141

    def test_excludes_six(self):
        _, triples = count_triples_sixth()
        assert all(6 not in t for t in triples)

    def test_contains_search_solutions(self):
        # each solution of the residual second-family search embeds in the list
        _, triples = count_triples_sixth()
        tset = set(triples)
        for xi6, xi7, k in ((-30, 10, 10), (10, 10, -30), (-60, 12, 10), (-60, 10, 12)):
            assert tuple(sorted((xi6, xi7, k))) in tset

    def test_target_parameter(self):
        count5, triples5 = count_triples_sixth(Fraction(1, 5), forbidden=(5,))
        assert all(sum(Fraction(1, v) for v in t) == Fraction(1, 5) for t in triples5)

    def test_unbounded_without_forbidden_head(self):
        with pytest.raises(UnboundedWithoutCap):
            count_triples_sixth(Fraction(1, 6), forbidden=())


class TestWhichKappa:
    def test_exact_set(self):
        assert set(whichkappa()) == {(1, -2), (-2, 1), (4, 4), (3, 6), (6, 3)}

    def test_symmetry(self):
        pairs = set(whichkappa())
        assert all((p, k) in pairs for k, p in pairs)

    def test_brute_force_oracle(self):
        brute = {(k, p) for k in range(-100, 101) for p in range(-100, 101)
                 if k and p and Fraction(1, k) + Fraction(1, p) == Fraction(1, 2)}
        assert brute == set(whichkappa())


class TestProfileCompletion:
    def test_case_a_skeletons_empty(self):
        for shape in (1, 2, 3):
            assert complete_profile(skeleton_case_a_one(shape)) == []

    def test_case_b_first_empty(self):
        assert complete_profile(skeleton_case_b_first()) == []

    def test_case_b_second_two_solutions(self):
        recs = complete_profile(skeleton_case_b_second())
        got = {r.pairs for r in recs}
        assert got == {((-3, 10), (2, 5)), ((-5, 12), (3, 4))}

    def test_residual_search_seven_solutions(self):
        a = complete_profile(skeleton_remaining_case("A"))
        b = complete_profile(skeleton_remaining_case("B"))
        got_a = {r.pairs for r in a}
        got_b = {r.pairs for r in b}
        assert got_a == {((1, 6), (1, -10), (2, 2), (6, 10))}
        assert got_b == {
            tuple(sorted(map(tuple, map(sorted, sol))))
            for sol in (
                [(2, 2), (3, 5), (2, 12), (-2, 20)],
                [(2, 2), (4, 4), (4, 8), (-4, 24)],
                [(2, 2), (2, 4), (-6, 8), (-6, 8)],
                [(1, 4), (1, 20), (-4, -7), (-4, 105)],
                [(1, 4), (2, 3), (-3, 8), (-3, 8)],
                [(1, 4), (2, 3), (-2, 7), (-7, 12)],
            )
        }

    def test_independent_reverification(self):
        # the verifier shares no code with the enumerator; spot-check by hand too
        recs = complete_profile(skeleton_case_b_second())
        for rec in recs:
            pairs = list(skeleton_case_b_second().fixed_pairs) + list(rec.pairs)
            assert sum(Fraction(1, u * v) for u, v in pairs) == 1
            assert sum(Fraction(u + v, u * v) for u, v in pairs) == 4
            assert sum(Fraction((u + v) ** 2, u * v) for u, v in pairs) == 16

    def test_cap_doubling_changes_nothing(self):
        base = {r.pairs for r in complete_profile(skeleton_case_b_second(), cap=60)}
        double = {r.pairs for r in complete_profile(skeleton_case_b_second(), cap=120)}
        assert base == double == {r.pairs for r in complete_profile(skeleton_case_b_second())}


class TestLemma42:
    def test_no_counterexample_and_bounds(self):
        rep = lemma_42_search(500)
        assert rep.conclusion_holds()
        assert rep.max_pair_contribution == Fraction(4, 3)
        assert all(4 * n1 + n2 >= 22 for n1, n2 in rep.counting_pairs)
        assert all(n1 >= 4 for n1, n2 in rep.counting_pairs)

    def test_hand_built_violation_breaks_r1(self):
        # five (1,3)-pairs maximize the sum but cannot reach 7
        assert 5 * (Fraction(1) + Fraction(1, 3)) < 7


class TestGeneralEnumeration:
    def test_unbounded_needs_cap(self):
        with pytest.raises(UnboundedWithoutCap):
            solve_unit_fractions(UnitFractionProblem(4, Fraction(1, 3)))

    def test_cap_makes_it_finite(self):
        recs, fams = solve_unit_fractions(UnitFractionProblem(4, Fraction(1, 3), cap=20))
        assert recs and not fams
        for r in recs:
            assert verify_unit_fraction_solution(
                UnitFractionProblem(4, Fraction(1, 3), cap=20), r.values)

    def test_chazy_relations_satisfied_by_chazy_xii_data(self):
        # the three similarity pairs of the third-order family satisfy
        # sum 1/(uv) = 1/6, sum (u+v)/(uv) = -7/6, sum (u+v)^2/(uv) = 49/6;
        # exponents computed from the weighted variational matrix at the
        # similarity points t in {6, (6+k)/2, (6-k)/2} of the k-member
        from kowalevski.exactalg import FieldElem, MPoly, SqMatrix, poly_ring
        from kowalevski.vfield import make_equation
        k = 5
        X = make_equation("ChazyXII", {"k": k})
        VARS3 = ("x", "y", "z")
        sums = [Fraction(0)] * 3
        for t in (Fraction(6), Fraction(6 + k, 2), Fraction(6 - k, 2)):
            a = {"x": FieldElem(t), "y": FieldElem(t), "z": FieldElem(2 * t)}
            # similarity point: X(a) = L(a)
            vals = [c.eval(a) for c in X.comps]
            assert vals[0] == FieldElem(t) and vals[1] == FieldElem(2 * t) and vals[2] == FieldElem(6 * t)
            M = SqMatrix([[c.diff(v).eval(a) for v in VARS3] for c in X.comps])
            W = SqMatrix.diagonal([FieldElem(1), FieldElem(2), FieldElem(3)])
            cp = (W - M).char_poly("lam")
            lam = MPoly.var(("lam",), "lam")
            from kowalevski.exactalg import exact_divide
            quad = exact_divide(cp, lam + MPoly.const(("lam",), 1))
            cs = quad.coeffs_in("lam")
            s = -cs[1].constant_value().rat
            p = cs[0].constant_value().rat
            sums[0] += 1 / p
            sums[1] += s / p
            sums[2] += s * s / p
        assert sums == [Fraction(1, 6), Fraction(-7, 6), Fraction(49, 6)]

    def test_dedup_order_independent(self):
        problem = UnitFractionProblem(3, Fraction(1, 2), cap=30)
        recs, _ = solve_unit_fractions(problem)
        vals = [r.values for r in recs]
        assert vals == sorted(vals) and len(set(vals)) == len(vals)
