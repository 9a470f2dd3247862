"""Definitional evaluation of the multiplier ideal on a toric log resolution.

The fan is the normal fan of ``P + Newt(Jac) + Newt(Jac^log) + Q`` inside
the dual cone, pulled into a triangulation and then made smooth by star
subdivisions.  Membership is decided ray by ray from the divisor
``K_hat - J - floor(lam Z)``.
"""

import math
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Dict, List, NamedTuple, Sequence, Tuple

from . import linalg
from .errors import NotInSemigroup, RefinementBudgetExceeded
from .linalg import Vector, dot
from .multiplier import MJContext, as_lambda
from .polyhedra import (VRep, dual_cone, hrep_to_vrep, minkowski_scale_sum, newton_polyhedron,
                        reduce_vrep, vrep_to_hrep)
from .semigroup import AffineSemigroup, contains

DEFAULT_BUDGET = 10_000

Cone = Tuple[Vector, ...]


class RayData(NamedTuple):
    a: int       # coefficient of Z: min over the ideal exponents
    khat: int    # Mather discrepancy: min over jlog, minus one
    j: int       # Jacobian divisor: min over the Jacobian exponents


@dataclass(frozen=True)
class ResolutionFan:
    S: AffineSemigroup
    cones: Tuple[Cone, ...]
    ideal_points: Tuple[Vector, ...]
    jlog: Tuple[Vector, ...]
    j: Tuple[Vector, ...]
    jprime: Tuple[Vector, ...]
    data: Dict[Vector, RayData] = field(compare=False, repr=False, default_factory=dict)

    @property
    def rays(self) -> Tuple[Vector, ...]:
        return tuple(sorted({r for c in self.cones for r in c}))

    def ray_data(self, n: Sequence[int]) -> RayData:
        n = tuple(n)
        if n not in self.data:
            self.data[n] = RayData(
                min(dot(m, n) for m in self.ideal_points),
                min(dot(m, n) for m in self.jlog) - 1,
                min(dot(m, n) for m in self.j))
        return self.data[n]

    def point_sets(self) -> Dict[str, Tuple[Vector, ...]]:
        return {"ideal": self.ideal_points, "jacobian": self.j,
                "log_jacobian": self.jlog, "jprime": self.jprime}


def _sorted_cone(rays) -> Cone:
    return tuple(sorted(set(rays)))


def _normal_fan(S: AffineSemigroup, polys: Sequence[VRep]) -> List[Cone]:
    total = reduce_vrep(polys[0])
    for V in polys[1:]:
        total = reduce_vrep(minkowski_scale_sum(total, reduce_vrep(V), 1))
    H = vrep_to_hrep(total)
    cones = []
    for v in hrep_to_vrep(H, S.d).points:
        cones.append(_sorted_cone(n for n, b in H.inequalities if dot(v, n) == b))
    return sorted(set(cones))


def _pulling_triangulation(cone: Cone, d: int) -> List[Cone]:
    """Triangulate a full-dimensional cone without new rays.

    Always pulling the lexicographically smallest ray makes the
    triangulations of neighbouring cones agree on shared faces.
    """
    if len(cone) == d:
        return [cone]
    facet_normals = dual_cone(cone)

    def tri(face: Cone, dim: int) -> List[Cone]:
        if len(face) == dim:
            return [face]
        v = face[0]
        subfaces = set()
        for h in facet_normals:
            if all(dot(r, h) == 0 for r in face):
                continue
            sub = tuple(r for r in face if dot(r, h) == 0)
            if v not in sub and linalg.rank(sub) == dim - 1:
                subfaces.add(sub)
        out = []
        for sub in sorted(subfaces):
            for simplex in tri(sub, dim - 1):
                out.append(_sorted_cone(simplex + (v,)))
        return out

    return tri(cone, d)


def _cone_matrix(cone: Cone):
    return linalg.transpose(cone)  # rays as columns


def multiplicity(cone: Cone) -> int:
    return abs(linalg.det(_cone_matrix(cone)))


def parallelepiped_point(cone: Cone) -> Vector:
    """Nonzero lattice point ``sum t_i r_i`` with ``0 <= t_i < 1`` and least ``sum t_i``."""
    Binv = linalg.inverse(_cone_matrix(cone))
    d = len(cone)
    cols = [tuple(Binv[i][j] % 1 for i in range(d)) for j in range(d)]
    zero = (Fraction(0),) * d
    group = {zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for x in frontier:
            for c in cols:
                y = tuple((a + b) % 1 for a, b in zip(x, c))
                if y not in group:
                    group.add(y)
                    nxt.append(y)
        frontier = nxt
    best = None
    for t in group:
        if t == zero:
            continue
        v = tuple(int(sum(t[i] * cone[i][k] for i in range(d))) for k in range(d))
        key = (sum(t), v)
        if best is None or key < best[0]:
            best = (key, v)
    return best[1]


def _coefficients(cone: Cone, v: Sequence[int]):
    return linalg.solve(_cone_matrix(cone), v)


def stellar_subdivide(fan: ResolutionFan, v: Sequence[int]) -> ResolutionFan:
    """Star subdivision of every (simplicial) cone containing ``v``."""
    v = tuple(v)
    cones = []
    for cone in fan.cones:
        t = _coefficients(cone, v)
        if all(x >= 0 for x in t) and v not in cone:
            for i, ti in enumerate(t):
                if ti > 0:
                    cones.append(_sorted_cone(cone[:i] + (v,) + cone[i + 1:]))
        else:
            cones.append(cone)
    return replace(fan, cones=tuple(sorted(set(cones))), data={})


def build_resolution(ctx: MJContext, budget: int = DEFAULT_BUDGET,
                     smooth: bool = True) -> ResolutionFan:
    S, jd = ctx.S, ctx.jd
    polys = [ctx.P, newton_polyhedron(jd.j, S), newton_polyhedron(jd.jlog, S), ctx.Q]
    cones = []
    for cone in _normal_fan(S, polys):
        cones.extend(_pulling_triangulation(cone, S.d))
    fan = ResolutionFan(S, tuple(sorted(set(cones))), ctx.ideal.exponents,
                        jd.jlog, jd.j, jd.jprime)
    steps = 0
    while smooth:
        bad = [c for c in fan.cones if multiplicity(c) != 1]
        if not bad:
            break
        steps += 1
        if steps > budget:
            raise RefinementBudgetExceeded(f"fan still singular after {budget} subdivisions")
        fan = stellar_subdivide(fan, parallelepiped_point(bad[0]))
    return fan


def oracle_membership(fan: ResolutionFan, m: Sequence[int], lam) -> bool:
    lam = as_lambda(lam)
    m = tuple(int(x) for x in m)
    if len(m) != fan.S.d or not contains(fan.S, m):
        raise NotInSemigroup(m)
    for n in fan.rays:
        a, khat, j = fan.ray_data(n)
        if dot(m, n) < 1 - (khat + 1) + j + math.floor(lam * a):
            return False
    return True


@dataclass
class ResolutionReport:
    smooth: bool = True
    covers: bool = True
    principal: bool = True
    failures: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.smooth and self.covers and self.principal


def verify_resolution(fan: ResolutionFan) -> ResolutionReport:
    rep = ResolutionReport()
    S, d = fan.S, fan.S.d

    for cone in fan.cones:
        if len(cone) != d or linalg.rank(cone) != d:
            rep.smooth = rep.covers = False
            rep.failures.append(f"cone {list(map(list, cone))} is not simplicial of full dimension")
        elif multiplicity(cone) != 1:
            rep.smooth = False
            rep.failures.append(f"cone {list(map(list, cone))} has multiplicity {multiplicity(cone)}")
    if not rep.covers:
        return rep

    for n in fan.rays:
        if any(dot(g, n) < 0 for g in S.generators):
            rep.covers = False
            rep.failures.append(f"ray {list(n)} lies outside the dual cone")

    walls: Dict[Cone, List[Tuple[Cone, Vector]]] = {}
    for cone in fan.cones:
        for i in range(d):
            walls.setdefault(cone[:i] + cone[i + 1:], []).append((cone, cone[i]))
    for wall, owners in walls.items():
        on_boundary = any(all(dot(r, g) == 0 for r in wall) for g in S.generators)
        if len(owners) == 1 and on_boundary:
            continue
        if len(owners) == 2:
            h = _wall_normal(wall, d)
            s1, s2 = dot(owners[0][1], h), dot(owners[1][1], h)
            if s1 * s2 < 0:
                continue
        rep.covers = False
        rep.failures.append(f"wall {list(map(list, wall))} has {len(owners)} adjacent cones")

    for cone in fan.cones:
        p = tuple(sum(col) for col in zip(*cone))
        for other in fan.cones:
            if other != cone and all(t >= 0 for t in _coefficients(other, p)):
                rep.covers = False
                rep.failures.append(f"cones {list(map(list, cone))} and {list(map(list, other))} overlap")

    for cone in fan.cones:
        for name, pts in fan.point_sets().items():
            mins = [min(dot(m, r) for m in pts) for r in cone]
            if not any(all(dot(m, r) == mn for r, mn in zip(cone, mins)) for m in pts):
                rep.principal = False
                rep.failures.append(f"{name} is not principal on cone {list(map(list, cone))}")
    return rep


def _wall_normal(wall: Cone, d: int) -> Vector:
    if d == 1:
        return (1,)
    # the generalized cross product: cofactors of the (d-1) x d matrix
    return tuple((-1) ** k * linalg.det([r[:k] + r[k + 1:] for r in wall]) for k in range(d))
