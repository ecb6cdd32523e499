"""Relative Jacobians of elliptic surfaces and their partner candidates.

An elliptic surface over a curve carries a numerical invariant: the
smallest positive degree of a horizontal divisor on the fibres (the gcd
of all fibre degrees).  Derived partners of such a surface, when its
Kodaira dimension is nonzero, are relative Jacobians J(b) indexed by
residues b prime to that invariant, and J(b) only depends on b up to
sign and translation by the invariant.  This module implements the
induced arithmetic on (rank, fibre degree) pairs, the normal form of a
Jacobian label, and the enumeration of candidate partners.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import CoprimalityViolated, HypothesisViolated, NotSL2


@dataclass(frozen=True)
class EllipticSurfaceData:
    """Minimal numerical data of an elliptic surface over a curve."""

    fibre_degree_gcd: int
    kodaira_nonzero: bool = True

    def __post_init__(self):
        if self.fibre_degree_gcd < 1:
            raise ValueError("fibre degree gcd must be a positive integer")

    def to_dict(self) -> dict:
        return {"lambda": self.fibre_degree_gcd,
                "kodaira_nonzero": self.kodaira_nonzero}

    @classmethod
    def from_dict(cls, data: dict) -> "EllipticSurfaceData":
        return cls(int(data["lambda"]),
                   bool(data.get("kodaira_nonzero", True)))


@dataclass(frozen=True)
class RankDegree:
    """Rank and fibre degree of a class on an elliptic surface."""

    rank: int
    degree: int


@dataclass(frozen=True)
class TransformMatrix:
    """Integer 2x2 matrix acting on (rank, degree) pairs.

    Stored row-major: ((c, a), (d, b)).  Determinant one is not enforced
    at construction; validate_transform rejects anything else.
    """

    rows: tuple[tuple[int, int], tuple[int, int]]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        if len(rows) != 2 or any(len(r) != 2 for r in rows):
            raise ValueError("transform must be a 2x2 matrix")
        object.__setattr__(self, "rows", rows)

    @property
    def det(self) -> int:
        (c, a), (d, b) = self.rows
        return c * b - a * d

    def inverse(self) -> "TransformMatrix":
        if self.det != 1:
            raise NotSL2(f"matrix has determinant {self.det}, expected 1")
        (c, a), (d, b) = self.rows
        return TransformMatrix(((b, -a), (-d, c)))

    def __matmul__(self, other: "TransformMatrix") -> "TransformMatrix":
        (c, a), (d, b) = self.rows
        (c2, a2), (d2, b2) = other.rows
        return TransformMatrix(((c * c2 + a * d2, c * a2 + a * b2),
                                (d * c2 + b * d2, d * a2 + b * b2)))


def validate_transform(m: TransformMatrix, surface: EllipticSurfaceData) -> bool:
    """True when the matrix is realized by a derived equivalence.

    Requires determinant one (else NotSL2 is raised); the realizability
    conditions are that the fibre-degree gcd divides the lower-left entry
    and the upper-right entry is positive.
    """
    if m.det != 1:
        raise NotSL2(f"matrix has determinant {m.det}, expected 1")
    (c, a), (d, b) = m.rows
    return d % surface.fibre_degree_gcd == 0 and a > 0


def fm_action(m: TransformMatrix, v: RankDegree) -> RankDegree:
    """Image of a (rank, degree) pair under the matrix."""
    (c, a), (d, b) = m.rows
    return RankDegree(c * v.rank + a * v.degree, d * v.rank + b * v.degree)


def normalize_jacobian(a: int, b: int, surface: EllipticSurfaceData) -> int:
    """Canonical label of the relative Jacobian J(a, b).

    J(a, b) only depends on b, modulo the fibre-degree gcd and up to
    sign; the canonical representative is min(b, gcd - b) taken in
    [1, gcd].  Requires a > 0 and gcd(b, a * gcd) = 1.
    """
    if a <= 0:
        raise ValueError("the twisting degree a must be positive")
    lam = surface.fibre_degree_gcd
    if gcd(b, a * lam) != 1:
        raise CoprimalityViolated(
            f"gcd({b}, {a}*{lam}) != 1: J({a}, {b}) is not defined")
    if lam == 1:
        return 1
    r = b % lam
    return min(r, lam - r)


def enumerate_partners(surface: EllipticSurfaceData) -> tuple[tuple[int, ...], int]:
    """Canonical Jacobian labels that can carry a derived partner.

    Returns (residues, count): one representative per orbit of negation
    on the units modulo the fibre-degree gcd.  The count is an upper
    bound for the number of partners; distinct labels are not proved to
    give non-isomorphic surfaces.  Only available when the Kodaira
    dimension is nonzero.
    """
    if not surface.kodaira_nonzero:
        raise HypothesisViolated(
            "partner enumeration requires nonzero Kodaira dimension; "
            "no classification is provided otherwise")
    lam = surface.fibre_degree_gcd
    if lam == 1:
        return (1,), 1
    reps = sorted({min(b, lam - b) for b in range(1, lam)
                   if gcd(b, lam) == 1})
    return tuple(reps), len(reps)
