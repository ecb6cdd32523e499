"""Numerical sheaf classes on bielliptic surfaces and rank reduction.

A bielliptic surface is the quotient of a product of two elliptic curves
by a finite translation-type action.  Its numerical invariants are a
pair (n, k): n is the order of the canonical bundle and k the exponent
of the second factor of the translation group; only seven pairs occur.
The numerical Chow group has a basis of two primitive fibre-type classes
that square to zero and pair to one, with the divisor classes of the
surface cut out by divisibility conditions along the two axes.

The main computation is the reduction step used to move an arbitrary
positive-rank class to a torsion class by a fibre-side equivalence: an
extended-Euclid matrix sends (r, k*a) to (0, h), and a bounded shift of
the Bezout pair makes its lower-left entry divisible by k so that the
negated matrix satisfies the realizability conditions of the elliptic
module.  A brute-force verifier for the divisibility fact this relies
on is included.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import NoValidShift
from .exactmat import xgcd

# (canonical bundle order, translation exponent) pairs that occur
ALLOWED_TYPES = ((2, 1), (3, 1), (4, 1), (6, 1), (2, 2), (3, 3), (4, 2))


def validate_type(n: int, k: int) -> bool:
    """True when (n, k) is one of the seven bielliptic types."""
    return (n, k) in ALLOWED_TYPES


@dataclass(frozen=True)
class BiellipticType:
    canonical_order: int
    translation_exponent: int

    def __post_init__(self):
        if not validate_type(self.canonical_order, self.translation_exponent):
            raise ValueError(
                f"({self.canonical_order}, {self.translation_exponent}) "
                f"is not a bielliptic type; allowed: {ALLOWED_TYPES}")


@dataclass(frozen=True)
class NumClass:
    """Coordinates against the two primitive fibre-type generators."""

    a: int
    b: int


def num_pairing(x: NumClass, y: NumClass) -> int:
    """Intersection pairing: both generators are isotropic and meet in 1."""
    return x.a * y.b + x.b * y.a


def delta_member_pure(d: int, axis: str, t: BiellipticType) -> bool:
    """Whether d times a primitive generator is an actual divisor class.

    Divisor classes along the first axis are the multiples of the
    canonical-order n; along the second axis, multiples of the
    translation exponent k.
    """
    if axis == "A":
        return d % t.canonical_order == 0
    if axis == "B":
        return d % t.translation_exponent == 0
    raise ValueError('axis must be "A" or "B"')


@dataclass(frozen=True)
class SheafClass:
    """Numerical class (rank, c1, ch2) of a sheaf on a bielliptic surface."""

    rank: int
    c1: NumClass
    ch2: int

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError("rank must be nonnegative")


def admissible(v: SheafClass, t: BiellipticType) -> bool:
    """Whether v can be the class of the image of a point sheaf.

    Encodes the constraints forced on such classes: isotropy
    r*ch2 = a*b, divisibility n | r, for k > 1 also k | a, k | b and
    k does not divide ch2, and primitivity gcd(r, a, b, ch2) = 1.
    """
    r, a, b, s = v.rank, v.c1.a, v.c1.b, v.ch2
    n, k = t.canonical_order, t.translation_exponent
    if r * s != a * b:
        return False
    if r % n:
        return False
    if k > 1 and (a % k or b % k or s % k == 0):
        return False
    return gcd(gcd(r, a), gcd(b, s)) == 1


def euler_bielliptic(v: SheafClass, w: SheafClass) -> int:
    """chi of two classes: r1*s2 + r2*s1 - c1.c1' (trivial K, chi(O) = 0)."""
    return (v.rank * w.ch2 + w.rank * v.ch2
            - num_pairing(v.c1, w.c1))


def rank_reduction(r: int, k: int, a: int) -> tuple[tuple[tuple[int, int], tuple[int, int]], int]:
    """Determinant-one matrix sending (r, k*a) to (0, h), h = gcd(r, k*a).

    Returns (m, h) with m = ((k*a/h, -r/h), (x, y)) where x*r + y*k*a = h
    and k | x.  The Bezout pair from the extended Euclid algorithm is
    shifted by (k*a/h, -r/h) at most k times; if no shift lands on
    k | x the input violates the divisibility hypothesis and NoValidShift
    is raised.  When a = 0 the only solution is x = 1, so k must be 1.
    """
    if r <= 0:
        raise ValueError("rank must be positive")
    if k <= 0:
        raise ValueError("translation exponent must be positive")
    ka = k * a
    h, x, y = xgcd(r, ka)
    shift, reduced_rank = ka // h, r // h
    for _ in range(k):
        if x % k == 0:
            break
        x += shift
        y -= reduced_rank
    else:
        raise NoValidShift(
            f"no x with {k} | x and x*{r} + y*{ka} = {h}: "
            "the divisibility hypothesis fails for this input")
    return ((ka // h, -(r // h)), (x, y)), h


def valuation(base: int, value: int) -> int:
    """Exponent of the largest power of `base` dividing `value` (> 0)."""
    if base < 2:
        raise ValueError("valuation base must be at least 2")
    if value == 0:
        raise ValueError("valuation of zero is infinite")
    count = 0
    while value % base == 0:
        value //= base
        count += 1
    return count


@dataclass(frozen=True)
class DivisibilityReport:
    """Result of brute-forcing the reduction's divisibility hypothesis."""

    checked: int
    counterexamples: tuple[SheafClass, ...]

    @property
    def holds(self) -> bool:
        return not self.counterexamples


def verify_divisibility_claim(t: BiellipticType, bound: int) -> DivisibilityReport:
    """Check that v_k(k*a) <= v_k(r) on every admissible class in a box.

    Enumerates admissible classes with 0 < r <= bound and |a|, |b|,
    |ch2| <= bound; ch2 is determined by r, a, b through the isotropy
    relation.  For k = 1 the claim is vacuous and nothing is checked.
    """
    n, k = t.canonical_order, t.translation_exponent
    if k == 1:
        return DivisibilityReport(0, ())
    checked = 0
    bad = []
    for r in range(n, bound + 1, n):
        for a in range(-bound, bound + 1):
            if a % k:
                continue
            for b in range(-bound, bound + 1):
                if b % k:
                    continue
                ab = a * b
                if ab % r:
                    continue
                s = ab // r
                if abs(s) > bound or s % k == 0:
                    continue
                if gcd(gcd(r, a), gcd(b, s)) != 1:
                    continue
                checked += 1
                if valuation(k, k * a) > valuation(k, r):
                    bad.append(SheafClass(r, NumClass(a, b), s))
    return DivisibilityReport(checked, tuple(bad))
