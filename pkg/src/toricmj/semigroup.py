"""Affine semigroups, their lattice coordinates, and monomial ideals."""

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, Optional, Sequence, Tuple

from . import linalg
from .errors import EmptyGenerators, InputError, NonPointedCone, NotInSemigroup
from .linalg import Vector, dot, vsub


@dataclass(frozen=True)
class AffineSemigroup:
    """``S`` generated by ``generators`` inside ``M = Z^d``.

    ``generators[i]`` is the image of the i-th standard basis vector under the
    surjection ``N^r -> S``.  ``basis`` holds the rows expressing the
    normalized coordinates in the caller's original coordinates:
    ``raw = coords * basis``.
    """

    generators: Tuple[Vector, ...]
    grading: Vector
    dual_rays: Tuple[Vector, ...]
    basis: Tuple[Vector, ...]
    _cache: Dict[Vector, bool] = field(default_factory=dict, compare=False, repr=False)

    @property
    def d(self) -> int:
        return len(self.grading)

    @property
    def r(self) -> int:
        return len(self.generators)

    @property
    def normalization_trivial(self) -> bool:
        return self.basis == linalg.identity(self.d)

    def degree(self, m: Sequence[int]) -> int:
        return dot(m, self.grading)

    def in_cone(self, m: Sequence) -> bool:
        """Is ``m`` in the real cone spanned by the generators?"""
        return all(dot(m, n) >= 0 for n in self.dual_rays)

    def contains(self, m: Sequence[int]) -> bool:
        return contains(self, m)

    def to_raw(self, m: Sequence[int]) -> Vector:
        return linalg.matvec(linalg.transpose(self.basis), m)

    def from_raw(self, raw: Sequence[int]) -> Vector:
        """Normalized coordinates of a caller-coordinate vector in ``Z S``."""
        raw = tuple(int(x) for x in raw)
        if len(raw) != len(self.basis[0]):
            raise InputError(f"vector {list(raw)} should have {len(self.basis[0])} entries")
        pivots = [next(j for j in range(len(raw)) if row[j]) for row in self.basis]
        coords = linalg.solve([[self.basis[i][j] for i in range(self.d)] for j in pivots],
                              [raw[j] for j in pivots]) if self.d else ()
        if any(c.denominator != 1 for c in coords) or self.to_raw([int(c) for c in coords]) != raw:
            raise InputError(f"vector {list(raw)} is not in the lattice spanned by the generators")
        return tuple(int(c) for c in coords)


def normalize_coordinates(raw_generators: Iterable[Sequence[int]]) -> AffineSemigroup:
    """Re-express generators in a basis of the lattice they span."""
    from .polyhedra import dual_cone

    raw = [tuple(int(x) for x in g) for g in raw_generators]
    if not raw:
        raise EmptyGenerators("semigroup needs at least one generator")
    if len({len(g) for g in raw}) != 1:
        raise EmptyGenerators("generators have inconsistent lengths")
    if any(not any(g) for g in raw):
        raise EmptyGenerators("zero generator is not allowed")

    H, T = linalg.hnf(raw)
    basis = tuple(row for row in H if any(row))
    d = len(basis)
    # G = T^{-1} H and only the first d rows of H are nonzero
    Tinv = linalg.inverse(T)
    gens = tuple(tuple(int(Tinv[i][k]) for k in range(d)) for i in range(len(raw)))
    assert all(linalg.matvec(linalg.transpose(basis), g) == raw[i] for i, g in enumerate(gens))

    rays = dual_cone(gens)
    if not rays or linalg.rank(rays) < d:
        raise NonPointedCone("cone over the generators contains a line (semigroup has units)")
    w = [0] * d
    for n in rays:
        w = [a + b for a, b in zip(w, n)]
    w = tuple(w)
    assert all(dot(g, w) >= 1 for g in gens)
    return AffineSemigroup(gens, w, tuple(rays), basis)


def contains(S: AffineSemigroup, m: Sequence[int]) -> bool:
    """Is ``m`` a nonnegative integer combination of the generators?

    Depth-first search on the residual, pruning residuals outside the cone;
    every step lowers the grading degree so the search is finite.
    """
    m = tuple(int(x) for x in m)
    memo = S._cache
    if m in memo:
        return memo[m]
    stack = [m]
    while stack:
        x = stack[-1]
        if x in memo:
            stack.pop()
            continue
        if not any(x):
            memo[x] = True
            stack.pop()
            continue
        if not S.in_cone(x):
            memo[x] = False
            stack.pop()
            continue
        children = []
        for g in S.generators:
            y = vsub(x, g)
            if S.in_cone(y):
                children.append(y)
        if any(memo.get(y) for y in children):
            memo[x] = True
            stack.pop()
            continue
        pending = [y for y in children if y not in memo]
        if pending:
            stack.extend(pending)
        else:
            memo[x] = False
            stack.pop()
    return memo[m]


def phi_gp(S: AffineSemigroup, u: Sequence[int]) -> Vector:
    if len(u) != S.r:
        raise ValueError(f"expected {S.r} components, got {len(u)}")
    out = [0] * S.d
    for c, g in zip(u, S.generators):
        if c:
            for k in range(S.d):
                out[k] += c * g[k]
    return tuple(out)


def elements_up_to(S: AffineSemigroup, degree_bound: int) -> FrozenSet[Vector]:
    """All elements of ``S`` with grading degree at most ``degree_bound``."""
    seen = {(0,) * S.d}
    frontier = [(0,) * S.d]
    while frontier:
        nxt = []
        for x in frontier:
            for g in S.generators:
                y = linalg.vadd(x, g)
                if y not in seen and S.degree(y) <= degree_bound:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(seen)


def frobenius_degree(S: AffineSemigroup) -> Optional[int]:
    """Largest degree missing from a rank-one semigroup (-1 when ``S = N``).

    Returns None for ``d > 1``.
    """
    if S.d != 1:
        return None
    degs = sorted({S.degree(g) for g in S.generators})
    smallest = degs[0]
    member = {0: True}
    run = 0
    last_gap = -1
    n = 0
    while run < smallest:
        n += 1
        member[n] = any(n - a >= 0 and member[n - a] for a in degs)
        if member[n]:
            run += 1
        else:
            run = 0
            last_gap = n
    return last_gap


@dataclass(frozen=True)
class MonomialSIdeal:
    semigroup: AffineSemigroup
    exponents: Tuple[Vector, ...]
    fractional: bool = False

    @classmethod
    def from_exponents(cls, S: AffineSemigroup, exponents: Iterable[Sequence[int]],
                       fractional: bool = False) -> "MonomialSIdeal":
        exps = tuple(sorted({tuple(int(x) for x in e) for e in exponents}))
        if not fractional:
            for e in exps:
                if not contains(S, e):
                    raise NotInSemigroup(e)
        return cls(S, exps, fractional)

    def contains(self, m: Sequence[int]) -> bool:
        return ideal_contains(self, m)


def ideal_contains(I: MonomialSIdeal, m: Sequence[int]) -> bool:
    return any(contains(I.semigroup, vsub(m, g)) for g in I.exponents)
