"""Circulant relation matrices and exact Smith normal form over Z.

The abelianization of G_n(x_0 x_k x_l) is the cokernel of the n x n matrix
whose row i has +1 in columns i, i+k, i+l (mod n, accumulating).  All
arithmetic is arbitrary-precision; determinants reach 2^24-scale at n = 24.

Two independently coded elimination strategies are provided: "min_pivot"
pivots on a minimal-absolute-value entry with balanced remainders (this
controls coefficient growth), and "gcd_rows" zeroes entries with extended
Euclid 2x2 unimodular blocks.  They must agree; the min_pivot route also
returns the unimodular transforms U, V for replay verification.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd


Matrix = list[list[int]]


@dataclass(frozen=True)
class AbelianInvariants:
    torsion: tuple[int, ...]  # invariant factors d1 | d2 | ..., each > 1
    free_rank: int

    def torsion_order(self) -> int:
        order = 1
        for d in self.torsion:
            order *= d
        return order

    def __str__(self) -> str:
        parts = [f"Z_{d}" for d in self.torsion] + ["Z"] * self.free_rank
        return " + ".join(parts) if parts else "0"


def relation_matrix(n: int, k: int, l: int) -> Matrix:
    if n < 1:
        raise ValueError("n must be >= 1")
    mat = [[0] * n for _ in range(n)]
    for i in range(n):
        for col in (i, (i + k) % n, (i + l) % n):
            mat[i][col] += 1
    return mat


def _identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def _mat_mul(a: Matrix, b: Matrix) -> Matrix:
    rows, inner, cols = len(a), len(b), len(b[0])
    out = [[0] * cols for _ in range(rows)]
    for i in range(rows):
        ai = a[i]
        for t in range(inner):
            coeff = ai[t]
            if coeff:
                bt = b[t]
                oi = out[i]
                for j in range(cols):
                    oi[j] += coeff * bt[j]
    return out


def determinant(mat: Matrix) -> int:
    """Fraction-free Bareiss determinant (exact)."""
    n = len(mat)
    if n == 0:
        return 1
    a = [row[:] for row in mat]
    sign = 1
    prev = 1
    for j in range(n - 1):
        if a[j][j] == 0:
            for i in range(j + 1, n):
                if a[i][j]:
                    a[i], a[j] = a[j], a[i]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(j + 1, n):
            for col in range(j + 1, n):
                a[i][col] = (a[i][col] * a[j][j] - a[i][j] * a[j][col]) // prev
            a[i][j] = 0
        prev = a[j][j]
    return sign * a[-1][-1]


def _diagonal_to_invariants(diag: list[int], cols: int) -> AbelianInvariants:
    """Repair the divisibility chain and read off cokernel invariants."""
    diag = [abs(d) for d in diag if d != 0]
    changed = True
    while changed:
        changed = False
        for i in range(len(diag) - 1):
            a, b = diag[i], diag[i + 1]
            if b % a:
                g = gcd(a, b)
                diag[i], diag[i + 1] = g, a * b // g
                changed = True
    diag.sort()
    torsion = tuple(d for d in diag if d > 1)
    return AbelianInvariants(torsion=torsion, free_rank=cols - len(diag))


def _balanced_quotient(value: int, pivot: int) -> int:
    """q with |value - q*pivot| <= |pivot| / 2.

    Python's floor remainder carries the divisor's sign, so when it is too
    large the corrective step is always q + 1 (r - pivot flips it past 0).
    """
    q, r = divmod(value, pivot)
    if 2 * abs(r) > abs(pivot):
        q += 1
    return q


def smith_normal_form(
    mat: Matrix, strategy: str = "min_pivot", with_transforms: bool = False
):
    """Diagonalise an integer matrix by unimodular row/column operations.

    Returns ``(invariants, diagonal)`` or, with transforms, additionally
    ``(U, V)`` with U * mat * V = diag(diagonal) and det U, det V = +-1.
    """
    if strategy == "sweep":
        if with_transforms:
            raise ValueError("transforms are only tracked by the min_pivot strategy")
        return _snf_sweep(mat)
    if strategy != "min_pivot":
        raise ValueError(f"unknown strategy {strategy!r}")
    rows = len(mat)
    cols = len(mat[0]) if rows else 0
    a = [row[:] for row in mat]
    u = _identity(rows)
    v = _identity(cols)

    for top in range(min(rows, cols)):
        while True:
            # move a minimal-absolute-value nonzero entry to the pivot seat
            pivot = None
            best = None
            for i in range(top, rows):
                for j in range(top, cols):
                    val = abs(a[i][j])
                    if val and (best is None or val < best):
                        best, pivot = val, (i, j)
            if pivot is None:
                break
            pi, pj = pivot
            if pi != top:
                a[pi], a[top] = a[top], a[pi]
                u[pi], u[top] = u[top], u[pi]
            if pj != top:
                for r in range(rows):
                    a[r][pj], a[r][top] = a[r][top], a[r][pj]
                for r in range(cols):
                    v[r][pj], v[r][top] = v[r][top], v[r][pj]
            p = a[top][top]
            # balanced reduction of the pivot column and row; any nonzero
            # remainder is strictly smaller than the pivot, so restarting
            # the pivot search terminates quickly
            clean = True
            for i in range(top + 1, rows):
                if a[i][top]:
                    q = _balanced_quotient(a[i][top], p)
                    if q:
                        for j in range(cols):
                            a[i][j] -= q * a[top][j]
                        for j in range(rows):
                            u[i][j] -= q * u[top][j]
                    if a[i][top]:
                        clean = False
            if not clean:
                continue
            for j in range(top + 1, cols):
                if a[top][j]:
                    q = _balanced_quotient(a[top][j], p)
                    if q:
                        for i in range(rows):
                            a[i][j] -= q * a[i][top]
                        for i in range(cols):
                            v[i][j] -= q * v[i][top]
                    if a[top][j]:
                        clean = False
            if clean:
                break

    diag = [a[i][i] for i in range(min(rows, cols))]
    invariants = _diagonal_to_invariants(diag, cols)
    if with_transforms:
        return invariants, diag, u, v
    return invariants, diag


def _snf_sweep(mat: Matrix):
    """Second strategy: alternating column/row Euclidean sweeps with
    column-local (not global) pivot selection and balanced remainders."""
    rows = len(mat)
    cols = len(mat[0]) if rows else 0
    a = [row[:] for row in mat]

    for top in range(min(rows, cols)):
        while True:
            # column-local pivot: smallest nonzero entry in column top,
            # falling back to a column swap when the column is empty
            rows_nz = [i for i in range(top, rows) if a[i][top]]
            if not rows_nz:
                for j in range(top + 1, cols):
                    if any(a[i][j] for i in range(top, rows)):
                        for r in range(rows):
                            a[r][top], a[r][j] = a[r][j], a[r][top]
                        break
                else:
                    break  # block is zero
                continue
            i0 = min(rows_nz, key=lambda i: abs(a[i][top]))
            if i0 != top:
                a[top], a[i0] = a[i0], a[top]
            p = a[top][top]
            progress = False
            for i in range(top + 1, rows):
                if a[i][top]:
                    q = _balanced_quotient(a[i][top], p)
                    if q:
                        for j in range(top, cols):
                            a[i][j] -= q * a[top][j]
                    progress = progress or a[i][top] != 0
            if progress:
                continue  # smaller residues appeared; re-pick the pivot
            # column is clear; sweep the pivot row with column ops
            row_dirty = False
            for j in range(top + 1, cols):
                if a[top][j]:
                    q = _balanced_quotient(a[top][j], p)
                    if q:
                        for i in range(top, rows):
                            a[i][j] -= q * a[i][top]
                    if a[top][j]:
                        for i in range(top, rows):
                            a[i][top], a[i][j] = a[i][j], a[i][top]
                        row_dirty = True
                        break
            if not row_dirty:
                break
        # next top

    diag = [a[i][i] for i in range(min(rows, cols))]
    return _diagonal_to_invariants(diag, cols), diag


def verify_transforms(mat: Matrix) -> bool:
    """Replay check: U * mat * V equals the diagonal and both transforms are
    unimodular."""
    _, diag, u, v = smith_normal_form(mat, with_transforms=True)
    prod = _mat_mul(_mat_mul(u, mat), v)
    rows, cols = len(mat), len(mat[0])
    for i in range(rows):
        for j in range(cols):
            expected = diag[i] if i == j and i < len(diag) else 0
            if prod[i][j] != expected:
                return False
    return abs(determinant(u)) == 1 and abs(determinant(v)) == 1


def abelian_invariants(n: int, k: int, l: int) -> AbelianInvariants:
    invariants, _ = smith_normal_form(relation_matrix(n, k, l))
    return invariants
