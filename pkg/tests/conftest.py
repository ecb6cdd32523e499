"""Shared oracles for the test suite.

Each oracle recomputes a quantity by a route independent of the library
implementation, so expected values in the tests are never produced by
the code under test.
"""

from __future__ import annotations

import itertools
from math import gcd

import sympy


def det_oracle(mat) -> int:
    """Determinant by full permutation expansion (small matrices only)."""
    n = len(mat)
    total = 0
    for perm in itertools.permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if perm[i] > perm[j]:
                    sign = -sign
        term = sign
        for i in range(n):
            term *= mat[i][perm[i]]
        total += term
    return total


def invariant_factors_oracle(mat) -> list[int]:
    """Invariant factors via gcds of k x k minors (determinantal divisors)."""
    m, n = len(mat), len(mat[0])
    previous = 1
    factors = []
    for k in range(1, min(m, n) + 1):
        g = 0
        for rows in itertools.combinations(range(m), k):
            for cols in itertools.combinations(range(n), k):
                minor = det_oracle([[mat[i][j] for j in cols] for i in rows])
                g = gcd(g, minor)
        if g == 0:
            factors.append(0)
        else:
            factors.append(g // previous)
            previous = g
    return factors


def _sign_changes(coeffs) -> int:
    signs = [c for c in coeffs if c != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if (a > 0) != (b > 0))


def signature_oracle(gram) -> tuple[int, int]:
    """Signature from the characteristic polynomial.

    A symmetric matrix has real spectrum, so Descartes' rule counts the
    positive roots exactly; substituting -x counts the negative ones.
    """
    x = sympy.symbols("x")
    poly = sympy.Matrix(gram).charpoly(x)
    coeffs = [sympy.Integer(c) for c in poly.all_coeffs()]
    pos = _sign_changes(coeffs)
    neg_coeffs = [c if (len(coeffs) - 1 - i) % 2 == 0 else -c
                  for i, c in enumerate(coeffs)]
    neg = _sign_changes(neg_coeffs)
    return pos, neg


def random_symmetric(rng, n: int, spread: int = 6, even: bool = False):
    """Random nondegenerate symmetric integer matrix as nested tuples."""
    while True:
        rows = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                v = rng.randint(-spread, spread)
                if even and i == j and v % 2:
                    v += 1
                rows[i][j] = rows[j][i] = v
        if det_oracle(rows) != 0:
            return tuple(tuple(r) for r in rows)


def random_unimodular(rng, n: int, steps: int = 8):
    """Random determinant +-1 matrix as a product of elementary moves."""
    mat = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(steps):
        kind = rng.randrange(3)
        i, j = rng.sample(range(n), 2) if n > 1 else (0, 0)
        if kind == 0 and i != j:
            mult = rng.randint(-2, 2)
            for c in range(n):
                mat[i][c] += mult * mat[j][c]
        elif kind == 1 and i != j:
            mat[i], mat[j] = mat[j], mat[i]
        else:
            mat[i] = [-x for x in mat[i]]
    return tuple(tuple(r) for r in mat)


def partner_count_oracle(lam: int) -> int:
    """Orbits of negation on units mod lam, counted by brute force."""
    if lam == 1:
        return 1
    units = [b for b in range(1, lam) if gcd(b, lam) == 1]
    orbits = set()
    for b in units:
        orbits.add(frozenset({b, (-b) % lam}))
    return len(orbits)
