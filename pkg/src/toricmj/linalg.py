"""Exact integer and rational linear algebra.

Matrices are tuples of row tuples holding Python ints (or Fractions where
noted).  Nothing here ever touches floating point.
"""

from fractions import Fraction
from math import gcd
from typing import List, Sequence, Tuple

Vector = Tuple[int, ...]
Matrix = Tuple[Vector, ...]


def as_matrix(rows) -> Matrix:
    return tuple(tuple(int(x) for x in row) for row in rows)


def identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def transpose(A: Sequence[Sequence]) -> tuple:
    if not A:
        return ()
    return tuple(zip(*A))


def matmul(A: Sequence[Sequence], B: Sequence[Sequence]) -> tuple:
    Bt = transpose(B)
    return tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in Bt) for row in A)


def matvec(A: Sequence[Sequence], v: Sequence) -> tuple:
    return tuple(sum(a * x for a, x in zip(row, v)) for row in A)


def dot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v))


def vadd(u: Sequence, v: Sequence) -> tuple:
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Sequence, v: Sequence) -> tuple:
    return tuple(a - b for a, b in zip(u, v))


def vscale(c, v: Sequence) -> tuple:
    return tuple(c * a for a in v)


def primitive(v: Sequence) -> Vector:
    """Scale a nonzero rational vector to the primitive integer vector on its ray."""
    fr = [Fraction(x) for x in v]
    den = 1
    for x in fr:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in fr]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        raise ValueError("zero vector has no primitive representative")
    return tuple(x // g for x in ints)


def sign_canonical(v: Sequence[int]) -> Vector:
    """Flip ``v`` so its first nonzero entry is positive."""
    for x in v:
        if x:
            return tuple(v) if x > 0 else tuple(-y for y in v)
    return tuple(v)


def hnf(A: Sequence[Sequence[int]]) -> Tuple[Matrix, Matrix]:
    """Row Hermite normal form.

    Returns ``(H, T)`` with ``H = T * A``, ``T`` unimodular, ``H`` in
    row-echelon form with positive pivots and the entries above each pivot
    reduced into ``[0, pivot)``.
    """
    H = [list(map(int, row)) for row in A]
    if not H:
        raise ValueError("hnf of an empty matrix")
    m, n = len(H), len(H[0])
    T = [list(row) for row in identity(m)]
    pivot_row = 0
    for col in range(n):
        if pivot_row == m:
            break
        # Euclid on the column below pivot_row until one nonzero entry remains
        while True:
            nz = [i for i in range(pivot_row, m) if H[i][col] != 0]
            if not nz:
                break
            k = min(nz, key=lambda i: (abs(H[i][col]), i))
            if k != pivot_row:
                H[k], H[pivot_row] = H[pivot_row], H[k]
                T[k], T[pivot_row] = T[pivot_row], T[k]
            p = H[pivot_row][col]
            done = True
            for i in range(pivot_row + 1, m):
                if H[i][col]:
                    q = H[i][col] // p
                    H[i] = [a - q * b for a, b in zip(H[i], H[pivot_row])]
                    T[i] = [a - q * b for a, b in zip(T[i], T[pivot_row])]
                    if H[i][col]:
                        done = False
            if done:
                break
        if H[pivot_row][col] == 0:
            continue
        if H[pivot_row][col] < 0:
            H[pivot_row] = [-a for a in H[pivot_row]]
            T[pivot_row] = [-a for a in T[pivot_row]]
        p = H[pivot_row][col]
        for i in range(pivot_row):
            q = H[i][col] // p
            if q:
                H[i] = [a - q * b for a, b in zip(H[i], H[pivot_row])]
                T[i] = [a - q * b for a, b in zip(T[i], T[pivot_row])]
        pivot_row += 1
    return as_matrix(H), as_matrix(T)


def det(A: Sequence[Sequence]) -> int:
    """Exact determinant (Bareiss fraction-free elimination for ints)."""
    n = len(A)
    if n == 0:
        return 1
    if any(isinstance(x, Fraction) for row in A for x in row):
        return _det_fraction(A)
    M = [list(row) for row in A]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if M[i][k] != 0), None)
            if swap is None:
                return 0
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def _det_fraction(A) -> Fraction:
    M = [[Fraction(x) for x in row] for row in A]
    n = len(M)
    result = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if M[i][k] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            M[k], M[piv] = M[piv], M[k]
            result = -result
        result *= M[k][k]
        for i in range(k + 1, n):
            f = M[i][k] / M[k][k]
            if f:
                M[i] = [a - f * b for a, b in zip(M[i], M[k])]
    return result


def minor(A: Sequence[Sequence], rows: Sequence[int], cols: Sequence[int]):
    if len(rows) != len(cols):
        raise ValueError("minor needs as many rows as columns")
    nr = len(A)
    nc = len(A[0]) if nr else 0
    for i in rows:
        if not 0 <= i < nr:
            raise IndexError(f"row index {i} out of range")
    for j in cols:
        if not 0 <= j < nc:
            raise IndexError(f"column index {j} out of range")
    return det([[A[i][j] for j in cols] for i in rows])


def row_echelon(A: Sequence[Sequence]) -> Tuple[List[List[Fraction]], List[int]]:
    """Reduced row echelon form over Q; returns (rows, pivot columns)."""
    M = [[Fraction(x) for x in row] for row in A]
    pivots = []
    r = 0
    ncols = len(M[0]) if M else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        p = M[r][c]
        M[r] = [x / p for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return M[:r], pivots


def rank(A: Sequence[Sequence]) -> int:
    if not A or not A[0]:
        return 0
    return len(row_echelon(A)[1])


def solve(A: Sequence[Sequence], b: Sequence):
    """Solve ``A x = b`` over Q for square invertible ``A``."""
    n = len(A)
    aug = [list(row) + [b[i]] for i, row in enumerate(A)]
    R, piv = row_echelon(aug)
    if piv != list(range(n)):
        raise ValueError("singular system")
    return tuple(R[i][n] for i in range(n))


def inverse(A: Sequence[Sequence]) -> Tuple[Tuple[Fraction, ...], ...]:
    n = len(A)
    aug = [list(row) + [int(i == j) for j in range(n)] for i, row in enumerate(A)]
    R, piv = row_echelon(aug)
    if piv[:n] != list(range(n)) or len(piv) < n:
        raise ValueError("singular matrix")
    return tuple(tuple(R[i][n:]) for i in range(n))


def integer_kernel(A: Sequence[Sequence[int]]) -> List[Vector]:
    """Lattice basis of ``{u in Z^cols : A u = 0}``, in row Hermite normal form."""
    if not A:
        raise ValueError("integer_kernel needs at least one row")
    cols = len(A[0])
    H, T = hnf(transpose(A))
    kernel = [T[i] for i in range(cols) if not any(H[i])]
    if not kernel:
        return []
    K, _ = hnf(kernel)
    return [row for row in K if any(row)]
