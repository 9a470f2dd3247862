"""Exact rational polyhedra with recession cone inside a pointed cone.

Facet enumeration uses the double description method on the homogenization
``cone({(p, 1)} + {(r, 0)})``; all arithmetic is on ints and Fractions.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import FrozenSet, Iterable, List, NamedTuple, Optional, Sequence, Tuple

from . import linalg
from .errors import EmptySet, NegativeLambda, NotFullDimensional
from .linalg import Vector, dot, primitive

QVector = Tuple[Fraction, ...]


def _qvec(v: Iterable) -> QVector:
    return tuple(Fraction(x) for x in v)


def extreme_rays(rows: Sequence[Sequence], dim: int) -> List[Vector]:
    """Extreme rays of the pointed cone ``{y : a.y >= 0 for a in rows}``.

    Double description: start from a simplicial cone cut out by ``dim``
    independent rows and add the remaining rows one at a time.  Adjacency of
    two rays is decided combinatorially from their sets of tight rows.
    """
    A: List[Vector] = []
    for a in rows:
        if any(a):
            p = primitive(a)
            if p not in A:
                A.append(p)
    if linalg.rank(A) < dim:
        raise NotFullDimensional("inequality system does not define a pointed cone")

    basis_idx: List[int] = []
    for i in range(len(A)):
        if linalg.rank([A[j] for j in basis_idx + [i]]) == len(basis_idx) + 1:
            basis_idx.append(i)
            if len(basis_idx) == dim:
                break
    Binv = linalg.inverse([A[i] for i in basis_idx])
    processed = list(basis_idx)
    rays = []
    for j in range(dim):
        v = primitive([Binv[i][j] for i in range(dim)])
        rays.append((v, frozenset(k for k in processed if dot(A[k], v) == 0)))

    for i in range(len(A)):
        if i in basis_idx:
            continue
        a = A[i]
        vals = [dot(a, v) for v, _ in rays]
        pos = [(v, z) for (v, z), s in zip(rays, vals) if s > 0]
        neg = [(v, z) for (v, z), s in zip(rays, vals) if s < 0]
        zero = [(v, z | {i}) for (v, z), s in zip(rays, vals) if s == 0]
        new = []
        if neg:
            for (p, zp), (q, zq) in product(pos, neg):
                common = zp & zq
                if len(common) < dim - 2:
                    continue
                if any(common <= z for v, z in rays if v != p and v != q):
                    continue
                ap, aq = dot(a, p), dot(a, q)
                w = primitive([ap * y - aq * x for x, y in zip(p, q)])
                new.append((w, common | {i}))
        processed.append(i)
        rays = pos + zero + new
    return sorted({v for v, _ in rays})


def dual_cone(rays: Sequence[Sequence[int]]) -> List[Vector]:
    """Primitive ray generators of ``{n : <g, n> >= 0 for all g in rays}``."""
    rays = [tuple(int(x) for x in g) for g in rays]
    if not rays:
        raise NotFullDimensional("no rays given")
    d = len(rays[0])
    if linalg.rank(rays) < d:
        raise NotFullDimensional("rays do not span the ambient space")
    return extreme_rays(rays, d)


@dataclass(frozen=True)
class VRep:
    points: Tuple[QVector, ...]
    rays: Tuple[Vector, ...]

    @classmethod
    def make(cls, points: Iterable[Sequence], rays: Iterable[Sequence[int]]) -> "VRep":
        pts = tuple(sorted({_qvec(p) for p in points}))
        rs = tuple(sorted({primitive(r) for r in rays if any(r)}))
        return cls(pts, rs)

    @property
    def dim(self) -> int:
        return len(self.points[0])

    def support_min(self, n: Sequence) -> Fraction:
        """Minimum of ``<., n>``; assumes ``n`` is nonnegative on the rays."""
        return min(dot(p, n) for p in self.points)


class Inequality(NamedTuple):
    normal: Vector
    bound: Fraction

    def holds(self, m: Sequence) -> bool:
        return dot(m, self.normal) >= self.bound


@dataclass(frozen=True)
class HRep:
    """Inequalities ``<m, n> >= b`` with primitive integer normals."""

    inequalities: Tuple[Inequality, ...]

    def contains(self, m: Sequence) -> bool:
        return all(ineq.holds(m) for ineq in self.inequalities)

    def normals(self) -> FrozenSet[Vector]:
        return frozenset(i.normal for i in self.inequalities)


def vrep_to_hrep(V: VRep) -> HRep:
    if not V.points:
        raise EmptySet("polyhedron has no points")
    d = V.dim
    gens = [primitive(tuple(p) + (1,)) for p in V.points]
    gens += [tuple(r) + (0,) for r in V.rays]
    ineqs = {}
    for y in extreme_rays(gens, d + 1):
        n = y[:d]
        if not any(n):
            continue
        n = primitive(n)
        ineqs[n] = V.support_min(n)
    return HRep(tuple(Inequality(n, b) for n, b in sorted(ineqs.items())))


def hrep_to_vrep(H: HRep, d: int) -> VRep:
    """Vertices and extreme rays of a polyhedron with pointed recession cone."""
    rows = []
    for n, b in H.inequalities:
        b = Fraction(b)
        rows.append(tuple(x * b.denominator for x in n) + (-b.numerator,))
    rows.append((0,) * d + (1,))
    points, rays = [], []
    for y in extreme_rays(rows, d + 1):
        t = y[d]
        if t > 0:
            points.append(tuple(Fraction(x, t) for x in y[:d]))
        else:
            rays.append(y[:d])
    return VRep.make(points, rays)


def reduce_vrep(V: VRep) -> VRep:
    """Drop non-vertex points and redundant rays."""
    return hrep_to_vrep(vrep_to_hrep(V), V.dim)


def minkowski_scale_sum(A: VRep, B: VRep, lam) -> VRep:
    """``A + lam * B``; for ``lam = 0`` this is ``A`` itself."""
    lam = Fraction(lam)
    if lam < 0:
        raise NegativeLambda(f"lambda must be nonnegative, got {lam}")
    if lam == 0:
        return A
    points = [tuple(a + lam * b for a, b in zip(p, q)) for p in A.points for q in B.points]
    return VRep.make(points, A.rays + B.rays)


def strict_interior_contains(H: HRep, m: Sequence) -> bool:
    return all(dot(m, n) > b for n, b in H.inequalities)


def newton_polyhedron(exponents: Iterable[Sequence[int]], S) -> VRep:
    """``conv(exponents + S)`` as points plus the cone over the generators."""
    exps = [tuple(e) for e in exponents]
    if not exps:
        raise EmptySet("Newton polyhedron of an empty set")
    return VRep.make(exps, S.generators)


def same_polyhedron(A: VRep, B: VRep) -> bool:
    return vrep_to_hrep(A) == vrep_to_hrep(B)


class NormalRay(NamedTuple):
    normal: Vector
    min_q: Fraction
    min_p: Fraction


def common_normal_rays(Q: VRep, P: VRep) -> List[NormalRay]:
    """Facet normals of ``Q + P`` with the separate minima over ``Q`` and ``P``.

    The normal fan of ``Q + lam * P`` does not depend on ``lam > 0``, so
    ``<m, n> >= min_q + lam * min_p`` over these normals describes every
    such sum (possibly with redundant rows).
    """
    H = vrep_to_hrep(minkowski_scale_sum(reduce_vrep(Q), reduce_vrep(P), 1))
    return [NormalRay(n, Q.support_min(n), P.support_min(n)) for n, _ in H.inequalities]


def in_recession_dual(n: Sequence[int], V: VRep) -> bool:
    return all(dot(r, n) >= 0 for r in V.rays)


def polyhedron_contains(V: VRep, m: Sequence, H: Optional[HRep] = None) -> bool:
    return (H or vrep_to_hrep(V)).contains(m)
