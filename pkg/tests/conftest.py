import itertools
import random

import pytest

from dunwoody.admissibility import check_conditions
from dunwoody.diagram import SixTuple, build_diagram


def box_tuples(limit=3, n_max=4):
    """Every tuple with a, b, c <= limit, n <= n_max and all residues r, s."""
    for a, b, c in itertools.product(range(limit + 1), repeat=3):
        if a + b + c == 0:
            continue
        d = 2 * a + b + c
        for n in range(1, n_max + 1):
            for r in range(d):
                for s in range(n):
                    yield SixTuple(a, b, c, n, r, s)


def random_tuples(count=500, seed=20261016):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        a, b, c = (rng.randint(0, 6) for _ in range(3))
        if a + b + c == 0:
            continue
        n = rng.randint(1, 10)
        d = 2 * a + b + c
        out.append(SixTuple(a, b, c, n, rng.randrange(d), rng.randrange(n)))
    return out


@pytest.fixture(scope="session")
def box():
    """``(sigma, diagram, curves, report)`` for the small exhaustive box.

    The report comes from ``check_conditions`` so nothing is asserted yet.
    """
    rows = []
    for sigma in box_tuples():
        diagram, curves = build_diagram(sigma)
        rows.append((sigma, diagram, curves, check_conditions(diagram, curves)))
    return rows


@pytest.fixture(scope="session")
def random_box():
    rows = []
    for sigma in random_tuples():
        diagram, curves = build_diagram(sigma)
        rows.append((sigma, diagram, curves, check_conditions(diagram, curves)))
    return rows
