"""Dense exact linear algebra over Fraction.

Matrices are lists of rows acting on column vectors: M[r][c].  A mod-p rank
is also provided as a sound prescreen: rank mod p never exceeds the rational
rank, so cohomology dimensions computed mod p bound the rational ones from
above.  Callers may therefore trust "zero mod p" verdicts outright and must
confirm nonzero ones exactly.
"""

from __future__ import annotations

from fractions import Fraction

FILTER_PRIME = 2_147_483_647


def rank(rows: list[list[Fraction]]) -> int:
    if not rows or not rows[0]:
        return 0
    mat = [row[:] for row in rows]
    nrows, ncols = len(mat), len(mat[0])
    rk = 0
    for c in range(ncols):
        pivot_row = None
        for r in range(rk, nrows):
            if mat[r][c] != 0:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        mat[rk], mat[pivot_row] = mat[pivot_row], mat[rk]
        pivot = mat[rk][c]
        for r in range(rk + 1, nrows):
            if mat[r][c] != 0:
                factor = mat[r][c] / pivot
                row, top = mat[r], mat[rk]
                for j in range(c, ncols):
                    row[j] -= factor * top[j]
        rk += 1
        if rk == nrows:
            break
    return rk


def rank_mod_p(rows: list[list[Fraction]], p: int = FILTER_PRIME) -> int:
    """Rank of the matrix reduced mod p; raises ZeroDivisionError on a bad prime."""
    if not rows or not rows[0]:
        return 0
    mat = []
    for row in rows:
        red = []
        for x in row:
            num, den = x.numerator % p, x.denominator % p
            if den == 0:
                raise ZeroDivisionError("denominator divisible by the filter prime")
            red.append(num * pow(den, -1, p) % p)
        mat.append(red)
    nrows, ncols = len(mat), len(mat[0])
    rk = 0
    for c in range(ncols):
        pivot_row = None
        for r in range(rk, nrows):
            if mat[r][c]:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        mat[rk], mat[pivot_row] = mat[pivot_row], mat[rk]
        inv = pow(mat[rk][c], -1, p)
        for r in range(rk + 1, nrows):
            if mat[r][c]:
                factor = mat[r][c] * inv % p
                row, top = mat[r], mat[rk]
                for j in range(c, ncols):
                    row[j] = (row[j] - factor * top[j]) % p
        rk += 1
        if rk == nrows:
            break
    return rk


def _rref(rows: list[list[Fraction]], ncols: int):
    """Reduced row echelon form; returns (matrix, pivot column list)."""
    mat = [row[:] for row in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(mat)):
            if mat[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                factor = mat[i][c]
                mat[i] = [x - factor * y for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
    return mat, pivots


def nullspace(rows: list[list[Fraction]], ncols: int) -> list[list[Fraction]]:
    """Basis of the kernel of the column action x -> M x."""
    if ncols == 0:
        return []
    if not rows:
        return [[Fraction(1 if j == c else 0) for j in range(ncols)] for c in range(ncols)]
    mat, pivots = _rref(rows, ncols)
    free_cols = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free_cols:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -mat[r][fc]
        basis.append(vec)
    return basis


class _Echelon:
    """Incremental echelon used to pick vectors independent of a subspace."""

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.rows: list[tuple[int, list[Fraction]]] = []

    def _reduce(self, vec: list[Fraction]) -> list[Fraction]:
        vec = vec[:]
        for pivot_col, row in self.rows:
            if vec[pivot_col] != 0:
                factor = vec[pivot_col]
                vec = [x - factor * y for x, y in zip(vec, row)]
        return vec

    def insert(self, vec: list[Fraction]) -> bool:
        """Add vec to the span; True when it was independent."""
        red = self._reduce(vec)
        for c in range(self.ncols):
            if red[c] != 0:
                inv = 1 / red[c]
                self.rows.append((c, [x * inv for x in red]))
                return True
        return False


def complement_reps(
    space: list[list[Fraction]], subspace: list[list[Fraction]], ncols: int
) -> list[list[Fraction]]:
    """Vectors from `space` completing `subspace` to a basis of their joint span."""
    ech = _Echelon(ncols)
    for vec in subspace:
        ech.insert(vec)
    return [vec for vec in space if ech.insert(vec)]
