"""Complete bounded Diophantine searches behind the classification.

Every enumeration here is either provably finite (the remaining-target bound
propagates: with k reciprocals left summing to t != 0, the smallest remaining
magnitude is at most k/|t|) or runs under an explicit cap that is recorded in
the result.  Solutions re-verify through an independent checker that shares no
code with the enumerators.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt
from typing import Iterable, Sequence


class UnboundedWithoutCap(ArithmeticError):
    """Negative terms allow a zero remaining target; supply a cap."""


@dataclass(frozen=True)
class UnitFractionProblem:
    """sum of term_count reciprocals equals target, under the given constraints."""

    term_count: int
    target: Fraction
    allow_negative: bool = True
    forbidden_values: frozenset[int] = frozenset()
    cap: int | None = None

    def admits(self, x: int) -> bool:
        if x == 0 or x in self.forbidden_values:
            return False
        if not self.allow_negative and x < 0:
            return False
        if self.cap is not None and abs(x) > self.cap:
            return False
        return True


@dataclass(frozen=True)
class SolutionRecord:
    values: tuple[int, ...]
    provenance: str = ""


@dataclass(frozen=True)
class ParametricFamily:
    """prefix + (m, -m): one free nonzero integer magnitude."""

    prefix: tuple[int, ...]

    def instance(self, m: int) -> tuple[int, ...]:
        return tuple(sorted(self.prefix + (m, -m)))

    def __str__(self):
        inner = ", ".join(str(v) for v in self.prefix)
        return f"({inner}, m, -m), m a nonzero integer"


def verify_unit_fraction_solution(problem: UnitFractionProblem, values: Sequence[int]) -> bool:
    """Independent checker: no code shared with the enumerators."""
    if len(values) != problem.term_count:
        return False
    total = Fraction(0)
    for v in values:
        if v == 0 or v in problem.forbidden_values:
            return False
        if v < 0 and not problem.allow_negative:
            return False
        total += Fraction(1, v)
    return total == problem.target


def solve_unit_fractions(problem: UnitFractionProblem):
    """Complete enumeration of unordered solutions, plus (m, -m)-tail families.

    Returns (solutions, families).  A zero remaining target with two slots
    left becomes a ParametricFamily when no cap is given; with three or more
    slots left it raises UnboundedWithoutCap unless a cap bounds the search.
    """
    solutions: set[tuple[int, ...]] = set()
    families: list[ParametricFamily] = []

    def extend(prefix: list[int], k: int, t: Fraction):
        if k == 0:
            if t == 0:
                solutions.add(tuple(sorted(prefix)))
            return
        lo = abs(prefix[-1]) if prefix else 1
        if t == 0:
            if k == 1:
                return  # a single reciprocal is never zero
            if problem.cap is None:
                if k == 2:
                    families.append(ParametricFamily(tuple(sorted(prefix))))
                    return
                raise UnboundedWithoutCap(
                    f"zero remaining target with {k} slots and no cap"
                )
            hi = problem.cap
        else:
            hi = int(Fraction(k, abs(t)))
            if problem.cap is not None:
                hi = min(hi, problem.cap)
        for mag in range(max(lo, 1), hi + 1):
            for x in ((mag, -mag) if problem.allow_negative else (mag,)):
                if not problem.admits(x):
                    continue
                if prefix and abs(x) == abs(prefix[-1]) and x < prefix[-1]:
                    # fix an order among equal magnitudes to avoid duplicates
                    continue
                if k == 1:
                    if t != 0 and Fraction(1, x) == t:
                        solutions.add(tuple(sorted(prefix + [x])))
                    continue
                extend(prefix + [x], k - 1, t - Fraction(1, x))

    extend([], problem.term_count, problem.target)
    recs = [SolutionRecord(v) for v in sorted(solutions)]
    for r in recs:
        assert verify_unit_fraction_solution(problem, r.values)
    return recs, families


def planar_triples():
    """Solutions of 1/u1 + 1/u2 + 1/u3 = 1: the three sporadic triples plus (1, m, -m)."""
    problem = UnitFractionProblem(term_count=3, target=Fraction(1))
    recs, fams = solve_unit_fractions(problem)
    return recs, fams


# -- printed enumerations ---------------------------------------------------------


def enumerate_section_421(n_min: int = 4, n_max: int = 100) -> list[tuple[int, int, int]]:
    """All (n, a, b) with 1/a + 1/b + 1/(n(n-1)) = 1/6, a, b != 6, n_min <= n <= n_max.

    Complete without any cap: n > 3 makes t = 1/6 - 1/(n(n-1)) positive, so the
    smaller-magnitude member of the pair is a positive a <= 2/t, and b is then
    determined.  Pairs are printed (a, b) with |a| <= |b|, rows sorted by (n, a).
    """
    if n_min <= 3:
        raise ValueError("the bound argument needs n > 3")
    out = []
    for n in range(n_min, n_max + 1):
        t = Fraction(1, 6) - Fraction(1, n * (n - 1))
        hi = int(Fraction(2) / t)
        for a in range(1, hi + 1):
            if a == 6:
                continue
            r = t - Fraction(1, a)
            if r == 0:
                continue
            if r.numerator not in (1, -1):
                continue
            b = r.denominator * r.numerator
            if b == 6 or abs(b) < a:
                continue
            out.append((n, a, b))
    return out


def count_triples_sixth(target: Fraction = Fraction(1, 6), forbidden: Iterable[int] = (6,)):
    """Unordered integer triples with 1/n1 + 1/n2 + 1/n3 = target, n_i not forbidden.

    Finite without a cap whenever target != 0 and no forbidden-value gap allows
    a cancelling pair: a (m, -m) tail forces the head to equal 1/target, which
    the forbidden set excludes (6 for the classification's target 1/6).
    """
    if target == 0:
        raise UnboundedWithoutCap("target 0 is a family, not a finite set")
    head = Fraction(1) / target
    if head.denominator == 1 and int(head) not in set(forbidden):
        raise UnboundedWithoutCap(
            f"value {int(head)} must be forbidden for the triple count to be finite"
        )
    problem = UnitFractionProblem(term_count=3, target=target,
                                  forbidden_values=frozenset(forbidden))
    recs, fams = solve_unit_fractions(problem)
    assert not fams
    return len(recs), [r.values for r in recs]


def whichkappa() -> list[tuple[int, int]]:
    """All integer pairs with 1/kappa + 1/p = 1/2, via (kappa-2)(p-2) = 4."""
    out = []
    for d in (-4, -2, -1, 1, 2, 4):
        k = 2 + d
        p = 2 + 4 // d
        if k != 0 and p != 0 and Fraction(1, k) + Fraction(1, p) == Fraction(1, 2):
            out.append((k, p))
    return sorted(out)


# -- profile completion ---------------------------------------------------------------


@dataclass(frozen=True)
class ProfileSkeleton:
    """Fixed exponent pairs plus unknown slots, to be completed under R0, R1, R2."""

    fixed_pairs: tuple[tuple[int, int], ...]
    unknown_count: int
    forbid_xi: frozenset[int] = frozenset()
    forbid_subset_target: Fraction | None = None

    def __post_init__(self):
        for u, v in self.fixed_pairs:
            if u == 0 or v == 0:
                raise ValueError("fixed exponents must be nonzero integers")

    def remainders(self) -> tuple[Fraction, Fraction, Fraction]:
        r0, r1, r2 = Fraction(1), Fraction(4), Fraction(16)
        for u, v in self.fixed_pairs:
            xi = Fraction(u * v)
            s = u + v
            r0 -= 1 / xi
            r1 -= s / xi
            r2 -= s * s / xi
        return r0, r1, r2

    @staticmethod
    def from_json(data: dict) -> "ProfileSkeleton":
        return ProfileSkeleton(
            fixed_pairs=tuple(tuple(p) for p in data["fixed_pairs"]),
            unknown_count=int(data["unknown_count"]),
            forbid_xi=frozenset(data.get("forbid_xi", [])),
            forbid_subset_target=(Fraction(data["forbid_subset_target"])
                                  if data.get("forbid_subset_target") else None),
        )

    def to_json(self) -> dict:
        out = {
            "fixed_pairs": [list(p) for p in self.fixed_pairs],
            "unknown_count": self.unknown_count,
        }
        if self.forbid_xi:
            out["forbid_xi"] = sorted(self.forbid_xi)
        if self.forbid_subset_target is not None:
            out["forbid_subset_target"] = str(self.forbid_subset_target)
        return out


@dataclass(frozen=True)
class CompletionRecord:
    pairs: tuple[tuple[int, int], ...]
    cap_used: int | None


def _xi_tuples(skeleton: ProfileSkeleton, r0: Fraction, cap: int | None):
    """All unordered unknown-product tuples summing reciprocals to r0."""
    k = skeleton.unknown_count
    tgt = skeleton.forbid_subset_target
    out: list[tuple[int, ...]] = []

    def subset_hits_target(prefix: list[int], proper_only: bool = False) -> bool:
        """Forbidden-subset test; the *full* solution always sums to the target,
        so complete tuples only test their proper subsets."""
        if tgt is None:
            return False
        top = len(prefix) - 1 if proper_only else len(prefix)
        for size in range(1, top + 1):
            for comb in itertools.combinations(prefix, size):
                if sum(Fraction(1, x) for x in comb) == tgt:
                    return True
        return False

    def extend(prefix: list[int], left: int, t: Fraction):
        if left == 0:
            if t == 0 and not subset_hits_target(prefix, proper_only=True):
                out.append(tuple(prefix))
            return
        if left == 1:
            if t != 0 and t.numerator in (1, -1):
                xi = t.denominator * t.numerator
                if xi not in skeleton.forbid_xi and (not prefix or abs(xi) >= abs(prefix[-1])):
                    if cap is None or abs(xi) <= cap:
                        cand = prefix + [xi]
                        if not subset_hits_target(cand, proper_only=True):
                            out.append(tuple(cand))
            return
        lo = abs(prefix[-1]) if prefix else 1
        if t == 0:
            if cap is None:
                raise UnboundedWithoutCap(
                    "zero remaining reciprocal target in the product search; "
                    "supply a cap or subset exclusions"
                )
            hi = cap
        else:
            hi = int(Fraction(left, abs(t)))
            if cap is not None:
                hi = min(hi, cap)
        for mag in range(lo, hi + 1):
            for xi in (mag, -mag):
                if xi in skeleton.forbid_xi:
                    continue
                if prefix and abs(xi) == abs(prefix[-1]) and xi < prefix[-1]:
                    continue
                nxt = prefix + [xi]
                if subset_hits_target(nxt):
                    continue
                extend(nxt, left - 1, t - Fraction(1, xi))

    extend([], k, r0)
    return out


def _divisor_pairs(xi: int) -> list[tuple[int, int]]:
    """Unordered integer factorizations u*v = xi, u, v nonzero."""
    out = []
    n = abs(xi)
    for d in range(1, isqrt(n) + 1):
        if n % d:
            continue
        e = n // d
        if xi > 0:
            out.append((d, e))
            out.append((-d, -e))
        else:
            out.append((-d, e))
            if d != e:
                out.append((d, -e))
    return out


def complete_profile(skeleton: ProfileSkeleton, cap: int | None = None) -> list[CompletionRecord]:
    """All integer pair completions satisfying R0, R1 and R2 exactly.

    One product is derived from R0 and one pair sum from R1, so the search
    enumerates divisor pairs for the remaining slots only.  Results are
    canonicalized (pairs sorted, lists sorted) and deduplicated.
    """
    r0, r1, r2 = skeleton.remainders()
    found: set[tuple[tuple[int, int], ...]] = set()
    for xis in _xi_tuples(skeleton, r0, cap):
        k = len(xis)
        from itertools import permutations
        # distinct orderings of the multiset: the R1-derived slot is the last one
        for perm in set(permutations(xis)):
            head, last_xi = perm[:-1], perm[-1]
            pools = [_divisor_pairs(x) for x in head]
            for choice in itertools.product(*pools):
                s_part = sum(Fraction(u + v, u * v) for u, v in choice)
                s_last_frac = (r1 - s_part) * last_xi
                if s_last_frac.denominator != 1:
                    continue
                s_last = int(s_last_frac)
                disc = s_last * s_last - 4 * last_xi
                if disc < 0:
                    continue
                rt = isqrt(disc)
                if rt * rt != disc or (s_last + rt) % 2:
                    continue
                u7 = (s_last + rt) // 2
                v7 = (s_last - rt) // 2
                if u7 == 0 or v7 == 0:
                    continue
                pairs = list(choice) + [(u7, v7)]
                r2_val = sum(Fraction((u + v) ** 2, u * v) for u, v in pairs)
                if r2_val != r2:
                    continue
                canon = tuple(sorted(tuple(sorted(p)) for p in pairs))
                found.add(canon)
    out = [CompletionRecord(p, cap) for p in sorted(found)]
    for rec in out:
        _verify_completion(skeleton, rec)
    return out


def _verify_completion(skeleton: ProfileSkeleton, rec: CompletionRecord) -> None:
    """Independent re-check of R0, R1, R2 on the full profile."""
    pairs = list(skeleton.fixed_pairs) + list(rec.pairs)
    sums = [Fraction(0)] * 3
    for u, v in pairs:
        if u == 0 or v == 0:
            raise AssertionError("zero exponent in completion")
        sums[0] += Fraction(1, u * v)
        sums[1] += Fraction(u + v, u * v)
        sums[2] += Fraction((u + v) ** 2, u * v)
    if sums != [Fraction(1), Fraction(4), Fraction(16)]:
        raise AssertionError(f"completion fails the relations: {rec}")


# -- the stock skeletons -----------------------------------------------------------


def skeleton_case_a_one(shape: int) -> ProfileSkeleton:
    """The three same-plane case-A configurations (no completions exist)."""
    fixed = {
        1: ((-1, -2), (1, 2), (1, -3), (-2, 5), (1, 3)),
        2: ((1, 2), (-1, -2), (1, -3), (2, -5), (1, 3)),
        3: ((1, 2), (1, -3), (-1, -2), (3, -5), (1, 3)),
    }[shape]
    return ProfileSkeleton(fixed_pairs=fixed, unknown_count=2)


def skeleton_case_b_first() -> ProfileSkeleton:
    """Case B, first configuration (no completions exist)."""
    return ProfileSkeleton(fixed_pairs=((1, 2), (1, 2), (-1, 3), (-2, 5), (1, 3)),
                           unknown_count=2)


def skeleton_case_b_second() -> ProfileSkeleton:
    """Case B, second configuration: completions are (2,5),(-3,10) and (3,4),(-5,12)."""
    return ProfileSkeleton(fixed_pairs=((1, 2), (-1, 3), (1, 2), (-3, 5), (1, 3)),
                           unknown_count=2)


def skeleton_remaining_case(case: str) -> ProfileSkeleton:
    """The residual same-plane search with four unknown pairs (cases "A"/"B")."""
    if case == "A":
        fixed = ((1, 2), (-1, -2), (1, -3))
    elif case == "B":
        fixed = ((1, 2), (1, 2), (-1, 3))
    else:
        raise ValueError("case must be 'A' or 'B'")
    return ProfileSkeleton(
        fixed_pairs=fixed,
        unknown_count=4,
        forbid_xi=frozenset({3}),
        forbid_subset_target=Fraction(1, 3),
    )


# -- the bound confirmation for the two-(-1,-2) lemma -------------------------------


@dataclass
class LemmaReport:
    max_pair_contribution: Fraction
    bound_confirmed: bool
    counting_pairs: list[tuple[int, int]]
    counting_bound_holds: bool
    counterexamples: list
    cap: int

    def conclusion_holds(self) -> bool:
        return self.bound_confirmed and self.counting_bound_holds and not self.counterexamples


def lemma_42_search(cap: int = 500) -> LemmaReport:
    """Confirm that two (-1,-2) orbits force a (1,2) or (1,1) orbit, at search scale.

    With both distinguished pairs (-1,-2), the first relation forces the other
    five pairs to satisfy sum(1/u + 1/v) = 7.  Excluding (1,1) and (1,2), the
    largest reciprocal sum a pair can contribute (within |exponent| <= cap) is
    computed by scanning; five such pairs cannot reach 7, and no assignment of
    counts of 1's and 2's escapes 4*n1 + n2 >= 22.
    """
    # the maximum of 1/u + 1/v over admissible pairs is attained with small |u|,|v|;
    # scan |u|,|v| <= 12 and verify nothing within the cap can beat 1/1 + 1/3
    best = Fraction(-10)
    for u in range(-12, 13):
        for v in range(-12, 13):
            if u == 0 or v == 0:
                continue
            if tuple(sorted((u, v))) in ((1, 1), (1, 2)):
                continue
            c = Fraction(1, u) + Fraction(1, v)
            if c > best:
                best = c
    # any pair outside the scan window has contribution <= 1 + 1/13 < 4/3
    bound_confirmed = 5 * max(best, Fraction(1) + Fraction(1, 13)) < 7
    counting = []
    counting_ok = True
    for n1 in range(0, 11):
        for n2 in range(0, 11 - n1):
            feasible = Fraction(n1) + Fraction(n2, 2) + Fraction(10 - n1 - n2, 3) >= 7
            if feasible:
                counting.append((n1, n2))
                if 4 * n1 + n2 < 22:
                    counting_ok = False
    counterexamples = _lemma_42_exhaustive(cap)
    return LemmaReport(best, bound_confirmed, counting, counting_ok, counterexamples, cap)


def _lemma_42_exhaustive(cap: int) -> list:
    """Branch-and-bound over five pairs without (1,1)/(1,2) reaching sum 7.

    Complete despite the cap-sized nominal space: every admissible pair
    contributes at most 4/3 (only (1,3) attains it), so the potential bound
    target <= left * 4/3 prunes the whole tree at the root for target 7.
    Kept as a search so a wrong bound would surface counterexamples.
    """
    max_contrib = Fraction(4, 3)
    found = []
    pool = []
    for u in range(-12, 13):
        for v in range(u if u != 0 else 1, 13):
            if u == 0 or v == 0 or tuple(sorted((u, v))) in ((1, 1), (1, 2)):
                continue
            pool.append((Fraction(1, u) + Fraction(1, v), (u, v)))
    pool.sort(reverse=True)

    def extend(chosen, left, target):
        if left == 0:
            if target == 0:
                found.append(tuple(chosen))
            return
        if target > left * max_contrib:
            return
        for c, pair in pool:
            if target - c > (left - 1) * max_contrib:
                break  # pool is sorted by contribution, nothing later helps
            extend(chosen + [pair], left - 1, target - c)

    extend([], 5, Fraction(7))
    return found
