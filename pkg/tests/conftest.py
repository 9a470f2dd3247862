from fractions import Fraction

import pytest

from toricmj.multiplier import build_context
from toricmj.semigroup import normalize_coordinates

# name -> (semigroup generators, ideal generators), all in normalized coordinates
VARIETIES = {
    "cusp": ([(2,), (3,)], [(2,), (3,)]),
    "plane": ([(1, 0), (0, 1)], [(2, 0), (0, 3)]),
    "quadric": ([(1, 0), (1, 1), (1, 2)], [(1, 0), (1, 1), (1, 2)]),
    "s25": ([(2,), (5,)], [(4,), (5,)]),
    "s345": ([(3,), (4,), (5,)], [(3,), (4,), (5,)]),
}

EXTRA_VARIETIES = {
    "twisted_cubic": ([(1, 0), (1, 1), (1, 2), (1, 3)], [(1, 1), (2, 0)]),
    "gap_cone": ([(1, 0), (1, 1), (1, 3)], [(2, 0), (3, 6)]),
    "cusp_times_plane": ([(0, 0, 2), (0, 0, 3), (1, 0, 0), (0, 1, 0)], [(1, 0, 2), (0, 1, 3)]),
    "square_cone": ([(1, 0, 0), (1, 1, 0), (1, 0, 1), (1, 1, 1)], [(2, 1, 1), (1, 0, 0)]),
}

LAMBDAS = [Fraction(0), Fraction(1, 3), Fraction(1, 2), Fraction(5, 6), Fraction(1),
           Fraction(4, 3), Fraction(7, 4), Fraction(2)]


def make_context(name):
    gens, ideal = {**VARIETIES, **EXTRA_VARIETIES}[name]
    return build_context(normalize_coordinates(gens), ideal)


@pytest.fixture(scope="session")
def contexts():
    return {name: make_context(name) for name in {**VARIETIES, **EXTRA_VARIETIES}}


@pytest.fixture
def cusp():
    return normalize_coordinates([(2,), (3,)])


@pytest.fixture
def quadric():
    return normalize_coordinates([(1, 0), (1, 1), (1, 2)])


@pytest.fixture
def plane():
    return normalize_coordinates([(1, 0), (0, 1)])
