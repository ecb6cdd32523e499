"""Exact matrix arithmetic over the integers and rationals.

Matrices are tuples (or lists) of row sequences.  Everything runs on
Python ints and fractions.Fraction, so no result is ever rounded; these
helpers back all lattice computations in the package.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

Matrix = tuple[tuple[int, ...], ...]


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with g = gcd(a, b) >= 0 and x*a + y*b = g."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def freeze(mat) -> Matrix:
    """Copy a matrix into nested tuples."""
    return tuple(tuple(row) for row in mat)


def identity(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def transpose(mat):
    return [list(col) for col in zip(*mat)]


def matmul(a, b):
    """Product of two matrices given as row sequences."""
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def matvec(mat, vec):
    return [sum(x * y for x, y in zip(row, vec)) for row in mat]


def det(mat) -> int:
    """Determinant of a square integer matrix (fraction-free Bareiss)."""
    n = len(mat)
    if n == 0:
        return 1
    a = [list(row) for row in mat]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _swap_rows(a, u, i, j):
    a[i], a[j] = a[j], a[i]
    u[i], u[j] = u[j], u[i]


def _swap_cols(a, v, i, j):
    for row in a:
        row[i], row[j] = row[j], row[i]
    for row in v:
        row[i], row[j] = row[j], row[i]


def _add_row(a, u, dst, src, mult):
    # row dst += mult * row src, mirrored in the left transform
    a[dst] = [x + mult * y for x, y in zip(a[dst], a[src])]
    u[dst] = [x + mult * y for x, y in zip(u[dst], u[src])]


def _add_col(a, v, dst, src, mult):
    for row in a:
        row[dst] += mult * row[src]
    for row in v:
        row[dst] += mult * row[src]


def smith_normal_form(mat) -> tuple[Matrix, Matrix, Matrix]:
    """Smith normal form with transforms: returns (d, u, v), u*mat*v = d.

    d is diagonal with nonnegative entries d[i] | d[i+1] (zeros trailing);
    u and v are unimodular.  Works for any rectangular integer matrix.
    """
    a = [list(row) for row in mat]
    m = len(a)
    n = len(a[0]) if m else 0
    u = identity(m)
    v = identity(n)
    t = 0
    while t < min(m, n):
        # locate a pivot of minimal absolute value in the trailing block
        pivot = None
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if a[i][j] and (best is None or abs(a[i][j]) < best):
                    best = abs(a[i][j])
                    pivot = (i, j)
        if pivot is None:
            break
        _swap_rows(a, u, t, pivot[0])
        _swap_cols(a, v, t, pivot[1])
        while True:
            # clear the pivot row and column
            dirty = False
            for i in range(t + 1, m):
                q = a[i][t] // a[t][t]
                if q:
                    _add_row(a, u, i, t, -q)
                if a[i][t]:
                    # remainder smaller than the pivot: make it the new pivot
                    _swap_rows(a, u, t, i)
                    dirty = True
            for j in range(t + 1, n):
                q = a[t][j] // a[t][t]
                if q:
                    _add_col(a, v, j, t, -q)
                if a[t][j]:
                    _swap_cols(a, v, t, j)
                    dirty = True
            if dirty:
                continue
            # pivot must divide every entry of the trailing block
            offender = None
            p = a[t][t]
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if a[i][j] % p:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            _add_row(a, u, t, offender, 1)
        if a[t][t] < 0:
            for j in range(n):
                a[t][j] = -a[t][j]
            u[t] = [-x for x in u[t]]
        t += 1
    return freeze(a), freeze(u), freeze(v)


def snf_diagonal(mat) -> tuple[int, ...]:
    """Just the diagonal entries of the Smith normal form."""
    d, _, _ = smith_normal_form(mat)
    return tuple(d[i][i] for i in range(min(len(d), len(d[0]) if d else 0)))


def hermite_normal_form(rows, n: int) -> list[list[int]]:
    """Row-style Hermite normal form of the lattice spanned by `rows` in Z^n.

    Returns the canonical basis: echelon rows with positive pivots and the
    entries above each pivot reduced into [0, pivot).
    """
    mat = [list(r) for r in rows if any(r)]
    r = 0
    for j in range(n):
        piv = None
        for i in range(r, len(mat)):
            if mat[i][j] == 0:
                continue
            if piv is None:
                piv = i
                continue
            g, x, y = xgcd(mat[piv][j], mat[i][j])
            a, b = mat[piv][j] // g, mat[i][j] // g
            rp, ri = mat[piv], mat[i]
            for col in range(n):
                vp, vi = rp[col], ri[col]
                rp[col] = x * vp + y * vi
                ri[col] = a * vi - b * vp
        if piv is None:
            continue
        mat[piv], mat[r] = mat[r], mat[piv]
        if mat[r][j] < 0:
            mat[r] = [-x for x in mat[r]]
        p = mat[r][j]
        for i in range(r):
            q = mat[i][j] // p
            if q:
                mat[i] = [a - q * b for a, b in zip(mat[i], mat[r])]
        r += 1
    return mat[:r]


def congruent_diagonal(gram) -> list[Fraction]:
    """Diagonal of a rational matrix congruent to the symmetric `gram`.

    Symmetric Gaussian elimination over Q; when a diagonal pivot vanishes
    the row with a nonzero off-diagonal entry is folded in first, which
    keeps the transform a congruence.  The sign pattern of the result is
    the signature of the form.
    """
    n = len(gram)
    a = [[Fraction(x) for x in row] for row in gram]
    diag = []
    for i in range(n):
        if a[i][i] == 0:
            repaired = False
            for j in range(i + 1, n):
                if a[j][j] != 0:
                    # congruence: swap basis vectors i and j
                    a[i], a[j] = a[j], a[i]
                    for row in a:
                        row[i], row[j] = row[j], row[i]
                    repaired = True
                    break
            if not repaired:
                for j in range(i + 1, n):
                    if a[i][j] != 0:
                        # congruence: basis vector i += basis vector j
                        a[i] = [x + y for x, y in zip(a[i], a[j])]
                        for row in a:
                            row[i] += row[j]
                        repaired = True
                        break
            if not repaired:
                diag.append(Fraction(0))
                continue
        p = a[i][i]
        for j in range(i + 1, n):
            f = a[j][i] / p
            if f:
                a[j] = [x - f * y for x, y in zip(a[j], a[i])]
                for row in a:
                    row[j] -= f * row[i]
        diag.append(p)
    return diag


def floor_sqrt(value: Fraction) -> int:
    """Exact floor of the square root of a nonnegative rational."""
    if value < 0:
        raise ValueError("negative value has no real square root")
    p, q = value.numerator, value.denominator
    return isqrt(p * q) // q


def fraction_matrix(mat) -> list[list[Fraction]]:
    return [[Fraction(x) for x in row] for row in mat]


def invert_rational(mat) -> list[list[Fraction]]:
    """Inverse of a nonsingular matrix, computed exactly over Q."""
    n = len(mat)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(mat)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise ValueError("matrix is singular")
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]
