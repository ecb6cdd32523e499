"""Integral quadratic lattices: invariants, discriminant forms, genus
comparison, isometry testing, and overlattice enumeration.

A lattice here is a free abelian group of finite rank carrying a
nondegenerate integer-valued symmetric bilinear form, represented by its
Gram matrix.  Every computation is exact; floats never appear.  Searches
that cannot be made exhaustive (isometry of indefinite lattices) return a
three-valued verdict instead of guessing, and enumerations over
discriminant groups refuse to run past a configurable size cap rather
than silently truncate.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import lcm, prod

from .errors import GroupTooLarge, OddLatticeUnsupported
from . import exactmat

DEFAULT_CAP = 10_000
DEFAULT_RADIUS = 10


@dataclass(frozen=True)
class Lattice:
    """A nondegenerate integral lattice, given by its Gram matrix."""

    gram: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.gram)
        object.__setattr__(self, "gram", rows)
        n = len(rows)
        if n == 0 or any(len(row) != n for row in rows):
            raise ValueError("Gram matrix must be square and nonempty")
        for i in range(n):
            for j in range(i):
                if rows[i][j] != rows[j][i]:
                    raise ValueError("Gram matrix must be symmetric")
        if exactmat.det(rows) == 0:
            raise ValueError("Gram matrix must be nondegenerate")

    @property
    def rank(self) -> int:
        return len(self.gram)

    @cached_property
    def det(self) -> int:
        return exactmat.det(self.gram)

    @property
    def is_even(self) -> bool:
        """True when every vector has even self-pairing."""
        return all(self.gram[i][i] % 2 == 0 for i in range(self.rank))

    def inner(self, v, w) -> int:
        """Pairing of two integer coordinate vectors."""
        return sum(v[i] * self.gram[i][j] * w[j]
                   for i in range(self.rank) for j in range(self.rank))

    def to_dict(self) -> dict:
        return {"gram": [list(row) for row in self.gram]}

    @classmethod
    def from_dict(cls, data: dict) -> "Lattice":
        if not isinstance(data, dict) or "gram" not in data:
            raise ValueError('lattice JSON must be an object with a "gram" key')
        return cls(tuple(tuple(int(x) for x in row) for row in data["gram"]))


def hyperbolic_plane() -> Lattice:
    """Rank-2 unimodular even lattice pairing the two generators to -1.

    This is the Gram matrix of the degree-0/degree-4 part of the cohomology
    of a surface under the Mukai pairing, where both generators are
    isotropic and their cross pairing is -1.
    """
    return Lattice(((0, -1), (-1, 0)))


def determinant(lat: Lattice) -> int:
    return lat.det


def signature(lat: Lattice) -> tuple[int, int]:
    """(positive, negative) inertia indices, by exact diagonalization."""
    diag = exactmat.congruent_diagonal(lat.gram)
    pos = sum(1 for d in diag if d > 0)
    neg = sum(1 for d in diag if d < 0)
    return pos, neg


def smith_normal_form(mat):
    """Smith normal form with unimodular transforms; see exactmat."""
    return exactmat.smith_normal_form(mat)


def discriminant_group(lat: Lattice) -> tuple[int, ...]:
    """Invariant factors (> 1) of the dual quotient group."""
    d, _, _ = exactmat.smith_normal_form(lat.gram)
    factors = [d[i][i] for i in range(lat.rank)]
    return tuple(f for f in factors if f > 1)


def is_two_elementary(lat: Lattice) -> bool:
    """True when the dual quotient is a direct sum of copies of Z/2."""
    return all(f == 2 for f in discriminant_group(lat))


@dataclass(frozen=True)
class DiscriminantForm:
    """The dual quotient group of a lattice with its torsion pairing.

    Elements are exponent tuples against `orders`; each generator comes
    with a rational lift (coordinates in the source basis).  The bilinear
    pairing takes values in Q/Z, canonically reduced into [0, 1); for an
    even source lattice the quadratic form takes values in Q/2Z, reduced
    into [0, 2).
    """

    orders: tuple[int, ...]
    generators: tuple[tuple[Fraction, ...], ...]
    gram: tuple[tuple[int, ...], ...]
    even: bool

    @property
    def order(self) -> int:
        return prod(self.orders) if self.orders else 1

    def zero(self) -> tuple[int, ...]:
        return (0,) * len(self.orders)

    def elements(self):
        return itertools.product(*(range(d) for d in self.orders))

    def add(self, x, y):
        return tuple((a + b) % d for a, b, d in zip(x, y, self.orders))

    def neg(self, x):
        return tuple((-a) % d for a, d in zip(x, self.orders))

    def scale(self, m, x):
        return tuple((m * a) % d for a, d in zip(x, self.orders))

    def element_order(self, x) -> int:
        return lcm(*(d // _gcd(d, a) for a, d in zip(x, self.orders))) if x else 1

    def lift(self, x) -> tuple[Fraction, ...]:
        n = len(self.gram)
        out = [Fraction(0)] * n
        for coeff, gen in zip(x, self.generators):
            for i in range(n):
                out[i] += coeff * gen[i]
        return tuple(out)

    @cached_property
    def _pair_table(self) -> tuple[tuple[Fraction, ...], ...]:
        # unreduced pairings of the generator lifts
        vals = []
        for g in self.generators:
            gv = [sum(self.gram[i][j] * g[j] for j in range(len(g)))
                  for i in range(len(g))]
            vals.append(tuple(gv))
        return tuple(
            tuple(sum(a * b for a, b in zip(h, gv)) for gv in vals)
            for h in self.generators
        )

    def bilinear(self, x, y) -> Fraction:
        total = Fraction(0)
        for i, a in enumerate(x):
            if not a:
                continue
            row = self._pair_table[i]
            for j, b in enumerate(y):
                if b:
                    total += a * b * row[j]
        return total % 1

    def quadratic(self, x) -> Fraction:
        if not self.even:
            raise OddLatticeUnsupported(
                "quadratic discriminant form requires an even lattice")
        total = Fraction(0)
        for i, a in enumerate(x):
            if not a:
                continue
            row = self._pair_table[i]
            for j, b in enumerate(x):
                if b:
                    total += a * b * row[j]
        return total % 2


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return abs(a)


def discriminant_form(lat: Lattice) -> DiscriminantForm:
    """Dual quotient with generator lifts read off the Smith transforms.

    If u * gram * v = d, the columns of v divided by the diagonal entries
    of d descend to independent generators of the quotient with exactly
    those orders.
    """
    d, _, v = exactmat.smith_normal_form(lat.gram)
    n = lat.rank
    orders = []
    gens = []
    for i in range(n):
        di = d[i][i]
        if di > 1:
            orders.append(di)
            gens.append(tuple(Fraction(v[r][i], di) for r in range(n)))
    return DiscriminantForm(tuple(orders), tuple(gens), lat.gram, lat.is_even)


# ---------------------------------------------------------------------------
# genus comparison


def same_genus(l1: Lattice, l2: Lattice, cap: int = DEFAULT_CAP) -> bool:
    """Decide whether two even lattices lie in the same genus.

    Uses the signature together with an exhaustive search for an
    isomorphism of the quadratic discriminant forms, which classifies the
    genus for even lattices.  Raises OddLatticeUnsupported on odd input
    and GroupTooLarge when the discriminant group exceeds `cap`.
    """
    if not l1.is_even or not l2.is_even:
        raise OddLatticeUnsupported("genus comparison requires even lattices")
    if signature(l1) != signature(l2):
        return False
    f1 = discriminant_group(l1)
    f2 = discriminant_group(l2)
    if f1 != f2:
        return False
    order = prod(f1) if f1 else 1
    if order > cap:
        raise GroupTooLarge(
            f"discriminant group of order {order} exceeds cap {cap}")
    return _forms_isomorphic(discriminant_form(l1), discriminant_form(l2))


def _forms_isomorphic(fa: DiscriminantForm, fb: DiscriminantForm) -> bool:
    """Exhaustive generator-image search for a quadratic-form isomorphism."""
    if fa.orders != fb.orders:
        return False
    if not fa.orders:
        return True
    k = len(fa.orders)
    q_targets = [fa.quadratic(_unit(k, i)) for i in range(k)]
    b_targets = [[fa.bilinear(_unit(k, i), _unit(k, j)) for j in range(k)]
                 for i in range(k)]
    candidates = []
    for i in range(k):
        cand = [e for e in fb.elements()
                if fb.element_order(e) == fa.orders[i]
                and fb.quadratic(e) == q_targets[i]]
        if not cand:
            return False
        candidates.append(cand)

    chosen: list[tuple[int, ...]] = []

    def extend(i: int) -> bool:
        if i == k:
            return _generates(fb, chosen)
        for e in candidates[i]:
            if all(fb.bilinear(e, chosen[j]) == b_targets[i][j]
                   for j in range(i)):
                chosen.append(e)
                if extend(i + 1):
                    return True
                chosen.pop()
        return False

    return extend(0)


def _unit(k, i):
    return tuple(1 if j == i else 0 for j in range(k))


def _generates(form: DiscriminantForm, elements) -> bool:
    """True when the given elements generate the whole group."""
    seen = {form.zero()}
    frontier = [form.zero()]
    while frontier:
        x = frontier.pop()
        for e in elements:
            y = form.add(x, e)
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    return len(seen) == form.order


# ---------------------------------------------------------------------------
# isometry


@dataclass(frozen=True)
class IsometryVerdict:
    """Outcome of an isometry test: decided yes, decided no, or unknown.

    `witness` (present for "isometric") is a unimodular matrix taking the
    first Gram matrix to the second: witness^T * g1 * witness = g2.  For
    "not_isometric", `reason` names a separating invariant or the failed
    exhaustive search; for "inconclusive" it names the exhausted bound.
    """

    kind: str
    witness: tuple[tuple[int, ...], ...] | None = None
    reason: str | None = None

    @property
    def is_isometric(self) -> bool:
        return self.kind == "isometric"

    @property
    def decided(self) -> bool:
        return self.kind != "inconclusive"

    @classmethod
    def found(cls, witness) -> "IsometryVerdict":
        return cls("isometric", witness=exactmat.freeze(witness))

    @classmethod
    def ruled_out(cls, reason: str) -> "IsometryVerdict":
        return cls("not_isometric", reason=reason)

    @classmethod
    def undecided(cls, reason: str) -> "IsometryVerdict":
        return cls("inconclusive", reason=reason)


def isometric(l1: Lattice, l2: Lattice,
              radius: int = DEFAULT_RADIUS) -> IsometryVerdict:
    """Test whether two lattices are isometric.

    Definite lattices are decided exactly by enumerating vectors of the
    required norms and back-tracking over basis images.  For indefinite
    lattices the search runs over coordinate boxes of the given `radius`
    and honestly reports "inconclusive" when the box is exhausted without
    a witness and no invariant separates the two forms.
    """
    if l1.rank != l2.rank:
        return IsometryVerdict.ruled_out("rank")
    if l1.gram == l2.gram:
        return IsometryVerdict.found(exactmat.identity(l1.rank))
    if l1.det != l2.det:
        return IsometryVerdict.ruled_out("determinant")
    sig = signature(l1)
    if sig != signature(l2):
        return IsometryVerdict.ruled_out("signature")
    if l1.is_even != l2.is_even:
        return IsometryVerdict.ruled_out("even versus odd")
    if discriminant_group(l1) != discriminant_group(l2):
        return IsometryVerdict.ruled_out("discriminant group")
    pos, neg = sig
    if neg == 0:
        return _isometric_definite(l1.gram, l2.gram)
    if pos == 0:
        flip1 = tuple(tuple(-x for x in row) for row in l1.gram)
        flip2 = tuple(tuple(-x for x in row) for row in l2.gram)
        return _isometric_definite(flip1, flip2)
    if l1.is_even:
        try:
            if not same_genus(l1, l2):
                return IsometryVerdict.ruled_out("discriminant form")
        except GroupTooLarge:
            pass
    return _isometric_bounded(l1.gram, l2.gram, radius)


def short_vectors(gram, norm: int) -> list[tuple[int, ...]]:
    """All vectors of the given norm in a positive definite lattice."""
    n = len(gram)
    if norm < 0:
        return []
    if norm == 0:
        return [(0,) * n]
    q, u = _ldl(gram)
    results: list[tuple[int, ...]] = []
    coords = [0] * n

    def descend(i: int, budget: Fraction):
        shift = sum((u[i][j] * coords[j] for j in range(i + 1, n)),
                    Fraction(0))
        bound = budget / q[i]
        top = exactmat.floor_sqrt(bound)
        base = -shift
        lo = int(base) - top - 2
        hi = int(base) + top + 2
        for x in range(lo, hi + 1):
            used = q[i] * (x + shift) ** 2
            if used > budget:
                continue
            coords[i] = x
            if i == 0:
                if used == budget:
                    results.append(tuple(coords))
            else:
                descend(i - 1, budget - used)
        coords[i] = 0

    descend(n - 1, Fraction(norm))
    return sorted(results)


def _ldl(gram):
    """Exact Cholesky-style data: norms q[i] and mixing u[i][j] (j > i)."""
    n = len(gram)
    a = exactmat.fraction_matrix(gram)
    q = [Fraction(0)] * n
    u = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        q[i] = a[i][i]
        if q[i] <= 0:
            raise ValueError("matrix is not positive definite")
        for j in range(i + 1, n):
            u[i][j] = a[i][j] / q[i]
        for r in range(i + 1, n):
            for c in range(i + 1, n):
                a[r][c] -= a[r][i] * a[i][c] / q[i]
    return q, u


def _assemble(gram1, gram2, pools):
    """Back-track over column choices until the pairing table matches."""
    n = len(gram1)
    cols: list[tuple[int, ...]] = []

    def pair(v, w):
        return sum(v[i] * gram1[i][j] * w[j]
                   for i in range(n) for j in range(n))

    def extend(j: int):
        if j == n:
            return [list(c) for c in cols]
        for v in pools[j]:
            if all(pair(cols[i], v) == gram2[i][j] for i in range(j)):
                cols.append(v)
                got = extend(j + 1)
                if got is not None:
                    return got
                cols.pop()
        return None

    return extend(0)


def _isometric_definite(gram1, gram2) -> IsometryVerdict:
    n = len(gram1)
    pools = []
    for j in range(n):
        target = gram2[j][j]
        vecs = short_vectors(gram1, target)
        if not vecs:
            return IsometryVerdict.ruled_out(f"norm {target} not represented")
        pools.append(vecs)
    columns = _assemble(gram1, gram2, pools)
    if columns is None:
        return IsometryVerdict.ruled_out("no basis image assignment exists")
    witness = [[columns[j][i] for j in range(n)] for i in range(n)]
    return IsometryVerdict.found(witness)


def _isometric_bounded(gram1, gram2, radius: int) -> IsometryVerdict:
    n = len(gram1)

    def norm(v):
        return sum(v[i] * gram1[i][j] * v[j]
                   for i in range(n) for j in range(n))

    box = list(itertools.product(range(-radius, radius + 1), repeat=n))
    by_norm: dict[int, list] = {}
    pools = []
    for j in range(n):
        target = gram2[j][j]
        if target not in by_norm:
            by_norm[target] = [v for v in box if norm(v) == target]
        if not by_norm[target]:
            return IsometryVerdict.undecided(
                f"no vector of norm {target} within radius {radius}")
        pools.append(by_norm[target])
    columns = _assemble(gram1, gram2, pools)
    if columns is None:
        return IsometryVerdict.undecided(
            f"coordinate search radius {radius} exhausted")
    witness = [[columns[j][i] for j in range(n)] for i in range(n)]
    return IsometryVerdict.found(witness)


# ---------------------------------------------------------------------------
# overlattices


def overlattices(lat: Lattice, even_only: bool = False,
                 cap: int = DEFAULT_CAP) -> list[tuple[Lattice, int]]:
    """All finite-index integral (or even) overlattices, with their indices.

    Overlattices correspond to subgroups of the discriminant group on
    which the torsion bilinear form vanishes; requiring the quadratic form
    to vanish as well yields exactly the even overlattices.  Output is
    sorted by (index, Gram rows) and always contains the lattice itself.
    """
    form = discriminant_form(lat)
    if form.order > cap:
        raise GroupTooLarge(
            f"discriminant group of order {form.order} exceeds cap {cap}")
    if even_only and not lat.is_even:
        raise OddLatticeUnsupported(
            "even overlattices require an even starting lattice")

    def admissible(x, subgroup) -> bool:
        if even_only:
            if form.quadratic(x) != 0:
                return False
        elif form.bilinear(x, x) != 0:
            return False
        return all(form.bilinear(x, h) == 0 for h in subgroup)

    zero = form.zero()
    seen = {frozenset([zero])}
    frontier = [frozenset([zero])]
    while frontier:
        sub = frontier.pop()
        for x in form.elements():
            if x in sub or not admissible(x, sub):
                continue
            # sub is a subgroup, so <sub, x> is the union of cosets sub + kx
            grown = set(sub)
            step = x
            while step != zero:
                grown.update(form.add(h, step) for h in sub)
                step = form.add(step, x)
            grown = frozenset(grown)
            if grown not in seen:
                seen.add(grown)
                frontier.append(grown)

    results = []
    for sub in seen:
        results.append((_overlattice_from_subgroup(lat, form, sub), len(sub)))
    results.sort(key=lambda pair: (pair[1], pair[0].gram))
    return results


def _overlattice_from_subgroup(lat: Lattice, form: DiscriminantForm,
                               subgroup) -> Lattice:
    n = lat.rank
    lifts = [form.lift(x) for x in sorted(subgroup)]
    denom = lcm(*(fr.denominator for lift in lifts for fr in lift), 1)
    rows = [[denom if i == j else 0 for j in range(n)] for i in range(n)]
    for lift in lifts:
        row = [int(fr * denom) for fr in lift]
        if any(row):
            rows.append(row)
    basis = exactmat.hermite_normal_form(rows, n)
    gram = []
    for bi in basis:
        gram_row = []
        for bj in basis:
            val = sum(Fraction(bi[i] * lat.gram[i][j] * bj[j], denom * denom)
                      for i in range(n) for j in range(n))
            if val.denominator != 1:
                raise AssertionError("overlattice Gram failed to be integral")
            gram_row.append(int(val))
        gram.append(tuple(gram_row))
    return Lattice(tuple(gram))


# ---------------------------------------------------------------------------
# constructions


def direct_sum(l1: Lattice, l2: Lattice) -> Lattice:
    n1, n2 = l1.rank, l2.rank
    rows = []
    for i in range(n1):
        rows.append(tuple(l1.gram[i]) + (0,) * n2)
    for i in range(n2):
        rows.append((0,) * n1 + tuple(l2.gram[i]))
    return Lattice(tuple(rows))


def rescale(lat: Lattice, m: int) -> Lattice:
    if m == 0:
        raise ValueError("rescaling by zero destroys nondegeneracy")
    return Lattice(tuple(tuple(m * x for x in row) for row in lat.gram))
