"""Lattice of relations and a binomial generating set of the toric ideal.

The toric ideal is obtained from the lattice basis ideal by saturating with
respect to each variable in turn.  Every intermediate polynomial is a pure
difference binomial ``x^a - x^b``, so Buchberger's algorithm is run on pairs
of exponent vectors and normal forms of monomials.
"""

from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence, Tuple

from . import linalg
from .errors import LimitExceeded, NotInKernel
from .linalg import Vector, sign_canonical
from .semigroup import AffineSemigroup, phi_gp

DEFAULT_PAIR_CAP = 100_000

Monomial = Tuple[int, ...]


@dataclass(frozen=True)
class Binomial:
    u: Vector

    def __post_init__(self):
        if not any(self.u):
            raise ValueError("zero vector does not define a binomial")

    @classmethod
    def canonical(cls, u: Sequence[int]) -> "Binomial":
        return cls(sign_canonical(tuple(int(x) for x in u)))

    @property
    def plus(self) -> Vector:
        return tuple(max(x, 0) for x in self.u)

    @property
    def minus(self) -> Vector:
        return tuple(max(-x, 0) for x in self.u)


@dataclass(frozen=True)
class MarkovBasis:
    binomials: Tuple[Binomial, ...]
    lattice_basis: Tuple[Vector, ...]
    verified: bool = True

    @property
    def vectors(self) -> List[Vector]:
        return [b.u for b in self.binomials]


def lattice(S: AffineSemigroup) -> List[Vector]:
    """Basis of the kernel of ``phi^gp : Z^r -> Z^d``."""
    return linalg.integer_kernel(linalg.transpose(S.generators))


def _canonical_sort(S: AffineSemigroup, vectors) -> Tuple[Binomial, ...]:
    bins = {Binomial.canonical(u) for u in vectors}
    return tuple(sorted(bins, key=lambda b: (S.degree(phi_gp(S, b.plus)), b.u)))


def _order_key(weights: Sequence[int], last: int) -> Callable[[Monomial], tuple]:
    """Weighted graded reverse lexicographic key with variable ``last`` smallest."""
    r = len(weights)
    rev = [last] + [i for i in reversed(range(r)) if i != last]

    def key(a: Monomial) -> tuple:
        return (sum(w * x for w, x in zip(weights, a)), tuple(-a[i] for i in rev))

    return key


def _divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


class _BinomialGB:
    """Buchberger's algorithm specialised to pure difference binomials."""

    def __init__(self, key, cap: int):
        self.key = key
        self.cap = cap
        self.basis: List[Tuple[Monomial, Monomial]] = []
        self.pairs_seen = 0

    def normal_form(self, a: Monomial) -> Monomial:
        changed = True
        while changed:
            changed = False
            for lead, tail in self.basis:
                if _divides(lead, a):
                    a = tuple(x - l + t for x, l, t in zip(a, lead, tail))
                    changed = True
                    break
        return a

    def orient(self, a: Monomial, b: Monomial) -> Optional[Tuple[Monomial, Monomial]]:
        if a == b:
            return None
        return (a, b) if self.key(a) > self.key(b) else (b, a)

    def run(self, generators) -> List[Tuple[Monomial, Monomial]]:
        queue = []
        for a, b in generators:
            f = self.orient(a, b)
            if f is not None:
                self._add(f, queue)
        while queue:
            i, j = queue.pop(0)
            self.pairs_seen += 1
            if self.pairs_seen > self.cap:
                raise LimitExceeded(f"S-pair count exceeded {self.cap}")
            (l1, t1), (l2, t2) = self.basis[i], self.basis[j]
            if all(x == 0 or y == 0 for x, y in zip(l1, l2)):
                continue  # coprime leading terms
            lcm = tuple(max(x, y) for x, y in zip(l1, l2))
            s1 = tuple(m - l + t for m, l, t in zip(lcm, l1, t1))
            s2 = tuple(m - l + t for m, l, t in zip(lcm, l2, t2))
            f = self.orient(self.normal_form(s1), self.normal_form(s2))
            if f is not None:
                self._add(f, queue)
        return self._minimal()

    def _add(self, f, queue):
        f = self.orient(self.normal_form(f[0]), self.normal_form(f[1]))
        if f is None:
            return
        k = len(self.basis)
        self.basis.append(f)
        queue.extend((i, k) for i in range(k))

    def _minimal(self):
        out = []
        for i, (lead, tail) in enumerate(self.basis):
            if any(_divides(l2, lead) and (l2 != lead or j < i)
                   for j, (l2, _) in enumerate(self.basis) if j != i):
                continue
            out.append((lead, tail))
        return out


def _split(u: Sequence[int]) -> Tuple[Monomial, Monomial]:
    return tuple(max(x, 0) for x in u), tuple(max(-x, 0) for x in u)


def markov_basis(S: AffineSemigroup, pair_cap: int = DEFAULT_PAIR_CAP) -> MarkovBasis:
    """Binomial generators of the toric ideal of ``S``."""
    L = lattice(S)
    if not L:
        return MarkovBasis((), (), True)
    weights = [S.degree(g) for g in S.generators]
    gens = [_split(u) for u in L]
    for i in range(S.r):
        gb = _BinomialGB(_order_key(weights, i), pair_cap)
        basis = gb.run(gens)
        gens = []
        for lead, tail in basis:
            k = min(lead[i], tail[i])
            if k:
                lead = lead[:i] + (lead[i] - k,) + lead[i + 1:]
                tail = tail[:i] + (tail[i] - k,) + tail[i + 1:]
            gens.append((lead, tail))

    # the ideal is now prime, so common monomial factors can be stripped
    vectors = {sign_canonical(linalg.vsub(a, b)) for a, b in gens if a != b}
    binomials = _minimalize(S, sorted(vectors, key=lambda u: (S.degree(phi_gp(S, _split(u)[0])), u)),
                            weights, pair_cap)
    for b in binomials:
        assert not any(phi_gp(S, b.u))
    return MarkovBasis(_canonical_sort(S, [b.u for b in binomials]), tuple(L), True)


def _minimalize(S, vectors, weights, pair_cap) -> List[Binomial]:
    """Greedy minimal generating subset, processed in increasing degree."""
    kept: List[Vector] = []
    key = _order_key(weights, S.r - 1)
    for u in vectors:
        if kept:
            gb = _BinomialGB(key, pair_cap)
            gb.run([_split(v) for v in kept])
            a, b = _split(u)
            if gb.normal_form(a) == gb.normal_form(b):
                continue
        kept.append(u)
    return [Binomial(u) for u in kept]


def accept_user_basis(S: AffineSemigroup, vectors) -> MarkovBasis:
    """Validate caller-supplied binomials; ideal generation is not checked."""
    us = []
    for v in vectors:
        v = tuple(int(x) for x in v)
        if len(v) != S.r:
            raise NotInKernel(v)
        if not any(v) or any(phi_gp(S, v)):
            raise NotInKernel(v)
        us.append(v)
    return MarkovBasis(_canonical_sort(S, us), tuple(lattice(S)), False)


def in_ideal(S: AffineSemigroup, markov: MarkovBasis, u: Sequence[int],
             pair_cap: int = DEFAULT_PAIR_CAP) -> bool:
    """Does ``x^{u+} - x^{u-}`` lie in the ideal generated by ``markov``?"""
    weights = [S.degree(g) for g in S.generators]
    gb = _BinomialGB(_order_key(weights, S.r - 1), pair_cap)
    gb.run([_split(b.u) for b in markov.binomials])
    a, b = _split(u)
    return gb.normal_form(a) == gb.normal_form(b)
