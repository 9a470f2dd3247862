import random
from dataclasses import replace
from fractions import Fraction
from itertools import product

import pytest

from toricmj.errors import NotInSemigroup, RefinementBudgetExceeded
from toricmj.linalg import det
from toricmj.multiplier import mj_membership
from toricmj.resolution import (RayData, build_resolution, multiplicity, oracle_membership,
                                parallelepiped_point, stellar_subdivide, verify_resolution,
                                _pulling_triangulation)
from toricmj.semigroup import elements_up_to

from conftest import EXTRA_VARIETIES, LAMBDAS, VARIETIES

ALL = sorted({**VARIETIES, **EXTRA_VARIETIES})


@pytest.fixture(scope="module")
def fans(contexts):
    return {name: build_resolution(ctx) for name, ctx in contexts.items()}


def test_cusp_fan(fans):
    fan = fans["cusp"]
    assert fan.rays == ((1,),)
    assert fan.ray_data((1,)) == RayData(a=2, khat=1, j=3)
    assert verify_resolution(fan).passed


def test_cusp_oracle_examples(fans):
    assert oracle_membership(fans["cusp"], (3,), Fraction(1, 2))
    assert not oracle_membership(fans["cusp"], (2,), Fraction(1, 2))


def test_plane_fan_contains_howald_ray(fans):
    fan = fans["plane"]
    assert {(1, 0), (0, 1), (1, 1), (2, 1), (3, 2)} == set(fan.rays)
    assert fan.ray_data((3, 2)) == RayData(a=6, khat=4, j=0)
    assert oracle_membership(fan, (0, 0), 0)


def test_quadric_fan(fans):
    fan = fans["quadric"]
    assert fan.rays == ((0, 1), (1, 0), (2, -1))
    assert fan.ray_data((1, 0)) == RayData(a=1, khat=1, j=1)
    assert oracle_membership(fan, (1, 1), Fraction(3, 4))


@pytest.mark.parametrize("name", ALL)
def test_every_fan_verifies(fans, name):
    rep = verify_resolution(fans[name])
    assert rep.passed, rep.failures
    assert all(abs(det(list(c))) == 1 for c in fans[name].cones)


@pytest.mark.parametrize("name", ALL)
def test_mather_discrepancy_nonnegative(fans, name):
    fan = fans[name]
    assert all(fan.ray_data(n).khat >= 0 for n in fan.rays)


def test_unsmoothed_plane_fails(contexts):
    fan = build_resolution(contexts["plane"], smooth=False)
    rep = verify_resolution(fan)
    assert not rep.smooth and rep.principal
    assert any("multiplicity" in f for f in rep.failures)


def test_quadric_without_middle_ray_fails(fans):
    broken = replace(fans["quadric"], cones=(((0, 1), (2, -1)),), data={})
    rep = verify_resolution(broken)
    assert not rep.principal
    assert any("ideal is not principal" in f for f in rep.failures)


def test_gap_in_fan_is_detected(fans):
    fan = fans["plane"]
    broken = replace(fan, cones=fan.cones[1:], data={})
    assert not verify_resolution(broken).covers


def test_pulling_triangulation_of_square_cone():
    cone = ((0, 0, 1), (0, 1, 1), (1, 0, 1), (1, 1, 1))
    simplices = _pulling_triangulation(cone, 3)
    assert len(simplices) == 2
    assert all(all(r in cone for r in s) for s in simplices)
    assert sum(multiplicity(s) for s in simplices) == 2


def test_parallelepiped_point():
    assert parallelepiped_point(((1, 0), (1, 2))) == (1, 1)
    assert parallelepiped_point(((0, 1), (3, 1))) in {(1, 1), (2, 1)}


def test_budget():
    from conftest import make_context
    with pytest.raises(RefinementBudgetExceeded):
        build_resolution(make_context("plane"), budget=0)


def test_oracle_rejects_gaps(fans):
    with pytest.raises(NotInSemigroup):
        oracle_membership(fans["cusp"], (1,), 0)


@pytest.mark.parametrize("name", ALL)
def test_oracle_matches_formula(contexts, fans, name):
    ctx, fan = contexts[name], fans[name]
    for m in elements_up_to(ctx.S, 8):
        for lam in LAMBDAS:
            assert oracle_membership(fan, m, lam) == mj_membership(ctx, m, lam), (m, lam)


@pytest.mark.parametrize("name", ["plane", "quadric", "gap_cone", "square_cone"])
def test_refinement_stability(contexts, fans, name):
    ctx, fan = contexts[name], fans[name]
    rng = random.Random(5)
    elems = sorted(elements_up_to(ctx.S, 6))
    for _ in range(3):
        cone = rng.choice(fan.cones)
        finer = stellar_subdivide(fan, tuple(sum(c) for c in zip(*cone)))
        assert verify_resolution(finer).passed
        for m, lam in product(elems, LAMBDAS):
            assert oracle_membership(finer, m, lam) == oracle_membership(fan, m, lam)
        fan = finer
