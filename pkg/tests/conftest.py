"""Shared helpers: seeded random arrangements and an independent profiler."""

import itertools
import random

import pytest

from triplelines.field import make_field
from triplelines.incidence import Arrangement
from triplelines.projective import enumerate_lines, enumerate_points, incident


def random_arrangement(F, s, rng):
    lines = rng.sample(enumerate_lines(F), s)
    return Arrangement(F, lines)


def brute_force_tvec(A):
    """Oracle profile: scan every plane point and count incident lines."""
    tvec = {}
    for P in enumerate_points(A.field):
        m = sum(1 for L in A.lines if incident(P, L))
        if m >= 2:
            tvec[m] = tvec.get(m, 0) + 1
    return tvec


def brute_force_best_triples(F, s, metric="exact3"):
    """Oracle maximum: enumerate every s-subset of plane lines."""
    lines = enumerate_lines(F)
    best = -1
    for combo in itertools.combinations(range(len(lines)), s):
        tvec = brute_force_tvec(Arrangement(F, [lines[i] for i in combo]))
        if metric == "exact3":
            count = tvec.get(3, 0)
        else:
            count = sum(t for k, t in tvec.items() if k >= 3)
        if count > best:
            best = count
    return best


@pytest.fixture(scope="session")
def gf2():
    return make_field(2)


@pytest.fixture(scope="session")
def gf3():
    return make_field(3)


@pytest.fixture(scope="session")
def gf4():
    return make_field(2, 2)


@pytest.fixture(scope="session")
def gf5():
    return make_field(5)


@pytest.fixture()
def rng():
    return random.Random(20140423)
