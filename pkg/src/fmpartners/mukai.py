"""Mukai vectors, the Mukai pairing, and the surface Euler pairing.

The Euler characteristic chi(E, F) of a pair of sheaf classes on a
smooth projective surface is computed two ways: directly from
Riemann-Roch, and (for surfaces with numerically trivial canonical
class) as minus the Mukai pairing of the associated vectors.  Keeping
both routes lets each one validate the other exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NonIntegralResult
from .lattices import Lattice


@dataclass(frozen=True)
class ChernData:
    """Rank, first Chern class, and second Chern character of a class.

    `c1` is given in coordinates against a basis of the Neron-Severi
    lattice; `ch2` may be a half-integer, never anything finer.
    """

    rank: int
    c1: tuple[int, ...]
    ch2: Fraction

    def __post_init__(self):
        object.__setattr__(self, "c1", tuple(int(x) for x in self.c1))
        ch2 = Fraction(self.ch2)
        if ch2.denominator not in (1, 2):
            raise ValueError("ch2 must have denominator 1 or 2")
        object.__setattr__(self, "ch2", ch2)

    def to_dict(self) -> dict:
        return {"r": self.rank, "c1": list(self.c1), "ch2": str(self.ch2)}

    @classmethod
    def from_dict(cls, data: dict) -> "ChernData":
        return cls(int(data["r"]),
                   tuple(int(x) for x in data["c1"]),
                   Fraction(str(data["ch2"])))


@dataclass(frozen=True)
class IntersectionData:
    """Ambient surface data needed by Riemann-Roch.

    `canonical_class` holds the coordinates of the canonical divisor in
    the same basis as every c1; `chi_structure` is the Euler
    characteristic of the structure sheaf.
    """

    ns: Lattice
    canonical_class: tuple[int, ...]
    chi_structure: int

    def __post_init__(self):
        object.__setattr__(self, "canonical_class",
                           tuple(int(x) for x in self.canonical_class))
        if len(self.canonical_class) != self.ns.rank:
            raise ValueError("canonical class has wrong dimension")

    def to_dict(self) -> dict:
        return {"ns_gram": [list(r) for r in self.ns.gram],
                "K": list(self.canonical_class),
                "chiO": self.chi_structure}

    @classmethod
    def from_dict(cls, data: dict) -> "IntersectionData":
        return cls(Lattice(tuple(tuple(int(x) for x in row)
                                 for row in data["ns_gram"])),
                   tuple(int(x) for x in data["K"]),
                   int(data["chiO"]))


@dataclass(frozen=True)
class MukaiVector:
    """Triple (rank, c1, s) graded by cohomological degree.

    `epsilon` records the ambient type: 1 when the structure sheaf has
    chi = 2, 0 when it has chi = 0.
    """

    rank: int
    c1: tuple[int, ...]
    s: int
    epsilon: int

    def __post_init__(self):
        object.__setattr__(self, "c1", tuple(int(x) for x in self.c1))
        if self.epsilon not in (0, 1):
            raise ValueError("epsilon must be 0 or 1")


def mukai_pairing(v1: MukaiVector, v2: MukaiVector, ns: Lattice) -> int:
    """<(r1, D1, s1), (r2, D2, s2)> = D1.D2 - r1*s2 - r2*s1."""
    if len(v1.c1) != ns.rank or len(v2.c1) != ns.rank:
        raise ValueError("c1 dimension does not match the lattice rank")
    return ns.inner(v1.c1, v2.c1) - v1.rank * v2.s - v2.rank * v1.s


def mukai_vector(cd: ChernData, epsilon: int,
                 epsilon_sign: int = 1) -> MukaiVector:
    """Mukai vector (r, c1, ch2 + epsilon*r) of a sheaf class.

    With the default sign the self-pairing satisfies
    chi(E, E) = -<v, v> on surfaces with trivial canonical class.
    `epsilon_sign=-1` uses ch2 - epsilon*r instead; that variant breaks
    the chi identity (see the regression tests) and is kept only so the
    two conventions can be compared side by side.
    """
    if epsilon not in (0, 1):
        raise ValueError("epsilon must be 0 or 1")
    if epsilon_sign not in (1, -1):
        raise ValueError("epsilon_sign must be +1 or -1")
    s = cd.ch2 + epsilon_sign * epsilon * cd.rank
    if s.denominator != 1:
        raise NonIntegralResult(f"Mukai vector entry {s} is not an integer")
    return MukaiVector(cd.rank, cd.c1, int(s), epsilon)


def euler_pairing_surface(e: ChernData, f: ChernData,
                          amb: IntersectionData) -> int:
    """chi(E, F) by surface Riemann-Roch.

    chi = r(E) ch2(F) - c1(E).c1(F) + r(F) ch2(E)
          + (r(F) c1(E) - r(E) c1(F)).K / 2 + r(E) r(F) chi(O).
    Symmetric exactly when K pairs to zero against every difference term.
    """
    ns = amb.ns
    if len(e.c1) != ns.rank or len(f.c1) != ns.rank:
        raise ValueError("c1 dimension does not match the lattice rank")
    mixed = tuple(f.rank * a - e.rank * b for a, b in zip(e.c1, f.c1))
    total = (Fraction(e.rank) * f.ch2
             - ns.inner(e.c1, f.c1)
             + Fraction(f.rank) * e.ch2
             + Fraction(ns.inner(mixed, amb.canonical_class), 2)
             + e.rank * f.rank * amb.chi_structure)
    if total.denominator != 1:
        raise NonIntegralResult(f"chi(E, F) = {total} is not an integer")
    return int(total)


def euler_pairing_torsion(e: ChernData, f: ChernData, ns: Lattice) -> int:
    """chi for a pair of torsion classes (both ranks zero): -c1(E).c1(F)."""
    if e.rank or f.rank:
        raise ValueError("torsion pairing requires both ranks zero")
    return -ns.inner(e.c1, f.c1)


def rr_consistency(e: ChernData, f: ChernData, epsilon: int,
                   ns: Lattice) -> bool:
    """Check chi(E, F) = -<v(E), v(F)> on a trivial-canonical surface.

    The ambient data is forced to K = 0 and chi(O) = 2*epsilon, the only
    cases where the identity is asserted.
    """
    amb = IntersectionData(ns, (0,) * ns.rank, 2 * epsilon)
    chi = euler_pairing_surface(e, f, amb)
    pairing = mukai_pairing(mukai_vector(e, epsilon),
                            mukai_vector(f, epsilon), ns)
    return chi == -pairing
