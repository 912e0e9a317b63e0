import random
from fractions import Fraction

import pytest

from kowalevski.exactalg import FieldElem, MPoly, SqMatrix, poly_ring
from kowalevski.vfield import QuadVF

VARS3 = ("x", "y", "z")


def random_quadvf(rng: random.Random, span: int = 4) -> QuadVF:
    comps = []
    for _ in range(3):
        terms = {}
        for basis in ((2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2)):
            c = rng.randint(-span, span)
            if c:
                terms[basis] = FieldElem(c)
        comps.append(MPoly(VARS3, terms))
    return QuadVF(comps, VARS3)


def random_nondegenerate_field(rng: random.Random):
    """A random rational field with seven simple orbits (retry until found)."""
    from kowalevski.exponents import radial_orbits, NonIsolatedSingularity
    from kowalevski.numcert import Inconclusive, PositiveDimensional
    while True:
        X = random_quadvf(rng)
        try:
            orbits = radial_orbits(X)
        except (NonIsolatedSingularity, PositiveDimensional, Inconclusive):
            continue
        if len(orbits) == 7 and all(not o.degenerate and o.multiplicity == 1 for o in orbits):
            return X, orbits


def random_invertible_matrix(rng: random.Random, span: int = 3) -> SqMatrix:
    while True:
        A = SqMatrix([[FieldElem(rng.randint(-span, span)) for _ in range(3)] for _ in range(3)])
        if not A.det().is_zero():
            return A


@pytest.fixture(scope="session")
def ledger_results():
    """Run every claim in the verification ledger once per session."""
    from kowalevski.diffalg import run_ledger
    rows = run_ledger()
    return {r.tag: r for r in rows}
