"""Monomial generator sets of the logarithmic and ordinary Jacobian ideals.

``jlog``   sums of ``d`` generators with nonzero determinant,
``jprime`` ``phi(u_1^+ + ... + u_c^+ - 1)`` over rank-``c`` subsets of the
           Markov basis,
``j``      their pairwise sums: exponents of generators of ``Jac_X``.
"""

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from typing import Dict, List, Optional, Sequence, Tuple

from . import linalg
from .errors import ElementOutsideSemigroup, InsufficientBasis
from .linalg import Vector, vadd
from .polyhedra import HRep, Inequality, hrep_to_vrep, newton_polyhedron, vrep_to_hrep
from .semigroup import AffineSemigroup, MonomialSIdeal, contains, phi_gp
from .toric_ideal import MarkovBasis, markov_basis

Poly = Dict[Tuple[int, ...], int]


@dataclass(frozen=True)
class JacobianData:
    S: AffineSemigroup
    markov: MarkovBasis
    jlog: Tuple[Vector, ...]
    jprime: Tuple[Vector, ...]
    j: Tuple[Vector, ...]
    phi_one: Vector

    @property
    def c(self) -> int:
        return self.S.r - self.S.d


def log_jacobian(S: AffineSemigroup) -> Tuple[Vector, ...]:
    out = set()
    for idx in combinations(range(S.r), S.d):
        cols = [S.generators[i] for i in idx]
        if linalg.det(cols) != 0:
            out.add(phi_gp(S, [int(i in idx) for i in range(S.r)]))
    return tuple(sorted(out))


def qualifying_subsets(S: AffineSemigroup, markov: MarkovBasis) -> List[Tuple[int, ...]]:
    """Index sets of ``c`` Markov vectors whose wedge is nonzero."""
    c = S.r - S.d
    us = markov.vectors
    if c == 0:
        return [()]
    return [L for L in combinations(range(len(us)), c)
            if linalg.rank([us[j] for j in L]) == c]


def jprime(S: AffineSemigroup, markov: MarkovBasis) -> Tuple[Vector, ...]:
    subsets = qualifying_subsets(S, markov)
    if not subsets:
        raise InsufficientBasis(
            f"no {S.r - S.d} Markov vectors are linearly independent; "
            "the basis cannot generate the toric ideal")
    one = phi_gp(S, [1] * S.r)
    out = set()
    for L in subsets:
        plus = [0] * S.r
        for j in L:
            plus = [a + b for a, b in zip(plus, markov.binomials[j].plus)]
        out.add(linalg.vsub(phi_gp(S, plus), one))
    return tuple(sorted(out))


def jacobian(jd: JacobianData) -> Tuple[Vector, ...]:
    """Exponents generating ``Jac_X``; each must lie in ``S``."""
    out = tuple(sorted({vadd(a, b) for a in jd.jlog for b in jd.jprime}))
    for m in out:
        if not contains(jd.S, m):
            raise ElementOutsideSemigroup(
                f"Jacobian exponent {list(m)} is not in the semigroup; "
                "the Markov basis is probably incomplete")
    return out


def jacobian_data(S: AffineSemigroup, markov: Optional[MarkovBasis] = None) -> JacobianData:
    if markov is None:
        markov = markov_basis(S)
    jl = log_jacobian(S)
    jp = jprime(S, markov)
    partial = JacobianData(S, markov, jl, jp, (), phi_gp(S, [1] * S.r))
    return JacobianData(S, markov, jl, jp, jacobian(partial), partial.phi_one)


# -- x^{e_K} J_KL == x^{u_L^+} U_KL on the torus -------------------

def _monomial_value(point: Sequence[Fraction], a: Sequence[int]) -> Fraction:
    v = Fraction(1)
    for x, k in zip(point, a):
        if k:
            v *= x ** k
    return v


def _partial_value(point, a: Sequence[int], i: int) -> Fraction:
    if a[i] == 0:
        return Fraction(0)
    b = list(a)
    b[i] -= 1
    return a[i] * _monomial_value(point, b)


def torus_point(S: AffineSemigroup, t: Sequence[int]) -> Tuple[Fraction, ...]:
    """``x_i = t^{g_i}``; every element of the toric ideal vanishes here."""
    out = []
    for g in S.generators:
        v = Fraction(1)
        for tk, gk in zip(t, g):
            v *= Fraction(tk) ** gk
        out.append(v)
    return tuple(out)


def check_minor_congruence(jd: JacobianData, K: Sequence[int], Lset: Sequence[int],
                           trials: int = 10, seed: int = 0) -> bool:
    if len(K) != len(Lset):
        raise ValueError("K and L must have the same size")
    rng = random.Random(seed)
    bins = jd.markov.binomials
    for _ in range(trials):
        t = [rng.randint(1, 9) for _ in range(jd.S.d)]
        x = torus_point(jd.S, t)
        Jm = [[_partial_value(x, bins[j].plus, i) - _partial_value(x, bins[j].minus, i)
               for j in Lset] for i in K]
        Um = [[bins[j].u[i] for j in Lset] for i in K]
        e_K = [int(i in K) for i in range(jd.S.r)]
        u_plus = [0] * jd.S.r
        for j in Lset:
            u_plus = [a + b for a, b in zip(u_plus, bins[j].plus)]
        lhs = _monomial_value(x, e_K) * linalg.det(Jm)
        rhs = _monomial_value(x, u_plus) * linalg.det(Um)
        if lhs != rhs:
            return False
    return True


def check_all_minor_congruences(jd: JacobianData, trials: int = 10, seed: int = 0) -> bool:
    c = jd.c
    return all(check_minor_congruence(jd, K, L, trials, seed + 7919 * n)
               for n, (K, L) in enumerate(
                   (K, L) for K in combinations(range(jd.S.r), c)
                   for L in combinations(range(len(jd.markov.binomials)), c)))


# -- Jacobian ideal straight from the Fitting ideal definition ---------------

def _poly_mul(p: Poly, q: Poly) -> Poly:
    out: Poly = {}
    for a, x in p.items():
        for b, y in q.items():
            k = vadd(a, b)
            out[k] = out.get(k, 0) + x * y
    return {k: v for k, v in out.items() if v}


def _poly_det(M: List[List[Poly]], r: int) -> Poly:
    n = len(M)
    if n == 0:
        return {(0,) * r: 1}
    out: Poly = {}
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term: Poly = {(0,) * r: -1 if inv % 2 else 1}
        for i, p in enumerate(perm):
            term = _poly_mul(term, M[i][p])
            if not term:
                break
        for k, v in term.items():
            out[k] = out.get(k, 0) + v
    return {k: v for k, v in out.items() if v}


def _partial_poly(a: Sequence[int], i: int) -> Poly:
    if a[i] == 0:
        return {}
    b = list(a)
    b[i] -= 1
    return {tuple(b): a[i]}


def jacobian_from_minors(jd: JacobianData) -> Tuple[Vector, ...]:
    """Exponents of the torus-graded pieces of all ``c x c`` Jacobian minors on X."""
    S, bins, c = jd.S, jd.markov.binomials, jd.c
    gens = set()
    for K in combinations(range(S.r), c):
        for L in combinations(range(len(bins)), c):
            M = []
            for i in K:
                row = []
                for j in L:
                    p = dict(_partial_poly(bins[j].plus, i))
                    for k, v in _partial_poly(bins[j].minus, i).items():
                        p[k] = p.get(k, 0) - v
                    row.append({k: v for k, v in p.items() if v})
                M.append(row)
            restricted: Dict[Vector, int] = {}
            for a, v in _poly_det(M, S.r).items():
                m = phi_gp(S, a)
                restricted[m] = restricted.get(m, 0) + v
            gens.update(m for m, v in restricted.items() if v)
    return tuple(sorted(gens))


def _same_ideal(S: AffineSemigroup, A, B) -> bool:
    IA = MonomialSIdeal.from_exponents(S, A)
    IB = MonomialSIdeal.from_exponents(S, B)
    return all(IB.contains(a) for a in IA.exponents) and all(IA.contains(b) for b in IB.exponents)


def check_lemma_identity(jd: JacobianData) -> bool:
    """``chi^{phi(1)} Jac_X == Jac^log_X * (chi^{phi(u_L^+)})`` as ideals of k[S].

    The left side uses the Jacobian computed from the minors of the partial
    derivative matrix, not the ``jlog + jprime`` recipe.
    """
    S = jd.S
    lhs = [vadd(jd.phi_one, m) for m in jacobian_from_minors(jd)]
    rhs = []
    for L in qualifying_subsets(S, jd.markov):
        plus = [0] * S.r
        for j in L:
            plus = [a + b for a, b in zip(plus, jd.markov.binomials[j].plus)]
        shift = phi_gp(S, plus)
        rhs.extend(vadd(a, shift) for a in jd.jlog)
    if not lhs or not rhs:
        return False
    if not all(contains(S, m) for m in lhs + rhs):
        return False
    return _same_ideal(S, lhs, rhs) and _same_ideal(S, lhs, [vadd(jd.phi_one, m) for m in jd.j])


def intrinsic_q_hrep(jd: JacobianData) -> HRep:
    """``{m : m + Newt(Jac^log) in Newt(Jac)}`` from the facets of ``Newt(Jac)``."""
    n_log = newton_polyhedron(jd.jlog, jd.S)
    n_jac = newton_polyhedron(jd.j, jd.S)
    ineqs = [Inequality(n, b - n_log.support_min(n)) for n, b in vrep_to_hrep(n_jac).inequalities]
    return HRep(tuple(ineqs))


def q_polyhedron(jd: JacobianData):
    return newton_polyhedron(jd.jprime, jd.S)


def check_intrinsic_q(jd: JacobianData) -> bool:
    intrinsic = hrep_to_vrep(intrinsic_q_hrep(jd), jd.S.d)
    return vrep_to_hrep(intrinsic) == vrep_to_hrep(q_polyhedron(jd))
