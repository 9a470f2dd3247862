"""Mather-Jacobian multiplier ideals of monomial ideals on affine toric varieties.

A monomial ``chi^m`` of ``k[S]`` lies in the multiplier ideal with exponent
``lam`` exactly when ``m`` is in the interior of ``Q + lam * P``, where ``P``
is the Newton polyhedron of the ideal and ``Q = conv(jprime + S)``.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

from .errors import ExponentNotInSemigroup, NegativeLambda, NotInSemigroup
from .jacobian import JacobianData, jacobian_data, q_polyhedron
from .linalg import Vector, dot, vsub
from .polyhedra import NormalRay, VRep, common_normal_rays, newton_polyhedron
from .semigroup import (AffineSemigroup, MonomialSIdeal, contains, elements_up_to,
                        frobenius_degree)
from .toric_ideal import MarkovBasis

EXACT = "EXACT"
BOUNDED = "BOUNDED"


def as_lambda(lam) -> Fraction:
    lam = Fraction(lam)
    if lam < 0:
        raise NegativeLambda(f"lambda must be nonnegative, got {lam}")
    return lam


@dataclass(frozen=True)
class MJContext:
    S: AffineSemigroup
    jd: JacobianData
    ideal: MonomialSIdeal
    P: VRep
    Q: VRep
    rays: Tuple[NormalRay, ...]


def build_context(S: AffineSemigroup, ideal_exponents: Iterable[Sequence[int]],
                  markov: Optional[MarkovBasis] = None) -> MJContext:
    exps = [tuple(int(x) for x in e) for e in ideal_exponents]
    if not exps:
        raise ExponentNotInSemigroup(())
    for e in exps:
        if len(e) != S.d or not contains(S, e):
            raise ExponentNotInSemigroup(e)
    ideal = MonomialSIdeal.from_exponents(S, exps)
    jd = jacobian_data(S, markov)
    P = newton_polyhedron(ideal.exponents, S)
    Q = q_polyhedron(jd)
    rays = tuple(common_normal_rays(Q, P))
    assert all(r.min_p >= 0 for r in rays)
    return MJContext(S, jd, ideal, P, Q, rays)


def _require_member_of_S(ctx: MJContext, m: Sequence[int]) -> Vector:
    m = tuple(int(x) for x in m)
    if len(m) != ctx.S.d or not contains(ctx.S, m):
        raise NotInSemigroup(m)
    return m


def in_interior(ctx: MJContext, m: Sequence, lam) -> bool:
    """Strict interiority of ``m`` in ``Q + lam P`` for any lattice point ``m``."""
    lam = as_lambda(lam)
    return all(dot(m, r.normal) > r.min_q + lam * r.min_p for r in ctx.rays)


def mj_membership(ctx: MJContext, m: Sequence[int], lam) -> bool:
    m = _require_member_of_S(ctx, m)
    return in_interior(ctx, m, lam)


@dataclass(frozen=True)
class Threshold:
    """``sup{lam >= 0 : chi^m in the multiplier ideal}``; ``value is None`` means infinity."""

    value: Optional[Fraction]
    never_member: bool = False

    def admits(self, lam) -> bool:
        if self.never_member:
            return False
        return self.value is None or Fraction(lam) < self.value


def mj_threshold(ctx: MJContext, m: Sequence[int]) -> Threshold:
    m = _require_member_of_S(ctx, m)
    for r in ctx.rays:
        if r.min_p == 0 and dot(m, r.normal) <= r.min_q:
            return Threshold(Fraction(0), True)
    vals = [(dot(m, r.normal) - r.min_q) / r.min_p for r in ctx.rays if r.min_p > 0]
    if not vals:
        return Threshold(None)
    xi = min(vals)
    if xi <= 0:
        return Threshold(Fraction(0), True)
    return Threshold(xi)


def _exact_degree_bound(ctx: MJContext, lam: Fraction) -> Optional[Fraction]:
    """Degree past which no minimal generator can occur (rank one only)."""
    F = frobenius_degree(ctx.S)
    if F is None:
        return None
    (ray,) = ctx.rays
    vertex = ray.min_q + lam * ray.min_p
    # the single ray is +/- the grading, so <vertex, w> is its bound
    assert tuple(ray.normal) == tuple(ctx.S.grading)
    return vertex + F + max(ctx.S.degree(g) for g in ctx.S.generators)


def completeness(ctx: MJContext, lam: Fraction, degree_bound: int) -> str:
    bound = _exact_degree_bound(ctx, lam)
    return EXACT if bound is not None and degree_bound > bound else BOUNDED


def mj_generators(ctx: MJContext, lam, degree_bound: int) -> Tuple[List[Vector], str]:
    lam = as_lambda(lam)
    if degree_bound < 1:
        raise ValueError("degree_bound must be positive")
    elems = elements_up_to(ctx.S, degree_bound)
    members = {m for m in elems if in_interior(ctx, m, lam)}
    gens = [m for m in members
            if not any(vsub(m, g) in members for g in ctx.S.generators)]
    gens.sort(key=lambda m: (ctx.S.degree(m), m))
    return gens, completeness(ctx, lam, degree_bound)


def jumping_candidates(ctx: MJContext, Lambda, degree_bound: int) -> Tuple[List[Fraction], str]:
    Lambda = Fraction(Lambda)
    if Lambda <= 0:
        raise NegativeLambda("jumping-number range must be positive")
    vals = set()
    for m in elements_up_to(ctx.S, degree_bound):
        t = mj_threshold(ctx, m)
        if t.never_member or t.value is None:
            continue
        if 0 < t.value <= Lambda:
            vals.add(t.value)
    return sorted(vals), completeness(ctx, Lambda, degree_bound)


def lattice_points_outside_semigroup(ctx: MJContext, lam, box: Iterable[Sequence[int]]) -> List[Vector]:
    """Points of ``box`` interior to ``Q + lam P`` that are not in ``S``."""
    return [tuple(m) for m in box if in_interior(ctx, m, lam) and not contains(ctx.S, m)]
