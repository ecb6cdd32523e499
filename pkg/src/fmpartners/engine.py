"""Partner reports for minimal complex surfaces.

Dispatches a surface described by its class and numerical invariants to
the matching branch of the classification of derived-equivalent minimal
surfaces, and emits a report: either the surface is its own only
partner, or the candidate partners are enumerable (elliptic case), or
partnership reduces to lattice-level obstructions (K3 and abelian
cases).  Every report line carries the anchor of the classification
result that justifies it.

The lattice-level checks are necessary conditions only.  The full
criterion in the K3/abelian cases needs Hodge-theoretic data that a
Gram matrix does not determine, so a candidate that survives every
check is reported as a possible partner, never a confirmed one.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import elliptic, lattices
from .bielliptic import BiellipticType
from .errors import (GroupTooLarge, HypothesisViolated, MissingField,
                     OddLatticeUnsupported)
from .lattices import (DEFAULT_CAP, DEFAULT_RADIUS, Lattice, direct_sum,
                       discriminant_group, isometric, overlattices,
                       same_genus, signature)

SURFACE_CLASSES = ("general_type", "ruled_non_elliptic", "enriques",
                   "bielliptic", "elliptic_nonzero_kodaira", "k3", "abelian")

# citation anchors into the classification of derived-equivalent surfaces
CITE_CASE_SPLIT = "Thm. 1.1 (case split by surface class)"
CITE_FINITENESS = "Cor. 1.2 (every surface has finitely many partners)"
CITE_OMEGA_ORDER = "Lemma 2.1 (partners share the canonical-bundle order)"
CITE_TOPOLOGY = "Prop. 2.2 (partners share Picard and Euler numbers)"
CITE_GENERAL_TYPE = "Prop. 3.1 (general type: only the surface itself)"
CITE_RULED = "Prop. 3.2 (non-elliptic ruled: only the surface itself)"
CITE_JACOBIAN_IDENT = "Remark 4.4 (Jacobian labels coincide up to shift and sign)"
CITE_ELLIPTIC = "Prop. 4.5 (partners of a nonzero-Kodaira elliptic surface are relative Jacobians)"
CITE_HODGE = "Thm. 5.2(b) (partnership needs a Hodge isometry of transcendental lattices)"
CITE_NS_GENUS = "Prop. 5.3 (partners have Neron-Severi lattices in the same genus)"
CITE_ABELIAN_DUAL = "Thm. 5.2 proof (an abelian surface and its dual are partners)"
CITE_ENRIQUES = "Prop. 6.1 (Enriques: only the surface itself)"
CITE_BIELLIPTIC = "Prop. 6.2 (bielliptic: only the surface itself)"

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped"
INCONCLUSIVE = "inconclusive"

# canonical-bundle order by class, 0 meaning infinite order
_OMEGA_DEFAULT = {"general_type": 0, "ruled_non_elliptic": 0,
                  "elliptic_nonzero_kodaira": 0, "enriques": 2,
                  "k3": 1, "abelian": 1}
_EULER_DEFAULT = {"enriques": 12, "k3": 24, "abelian": 0, "bielliptic": 0}


@dataclass(frozen=True)
class SurfaceDescriptor:
    """Numerical identity card of a minimal complex surface."""

    surface_class: str
    omega_order: int | None = None
    picard_number: int | None = None
    euler_number: int | None = None
    fibre_degree_gcd: int | None = None
    kodaira_nonzero: bool = True
    bielliptic_type: BiellipticType | None = None
    ns: Lattice | None = None
    transcendental: Lattice | None = None

    def __post_init__(self):
        if self.surface_class not in SURFACE_CLASSES:
            raise ValueError(f"unknown surface class {self.surface_class!r}; "
                             f"expected one of {SURFACE_CLASSES}")

    def resolved_omega_order(self) -> int | None:
        if self.omega_order is not None:
            return self.omega_order
        if self.surface_class == "bielliptic" and self.bielliptic_type:
            return self.bielliptic_type.canonical_order
        return _OMEGA_DEFAULT.get(self.surface_class)

    def resolved_euler_number(self) -> int | None:
        if self.euler_number is not None:
            return self.euler_number
        return _EULER_DEFAULT.get(self.surface_class)

    @classmethod
    def from_dict(cls, data: dict) -> "SurfaceDescriptor":
        if "class" not in data:
            raise MissingField('surface descriptor needs a "class" field')
        bt = data.get("bielliptic_type")
        if bt is not None:
            bt = BiellipticType(int(bt[0]), int(bt[1]))
        return cls(
            surface_class=data["class"],
            omega_order=_opt_int(data.get("omega_order")),
            picard_number=_opt_int(data.get("picard_number")),
            euler_number=_opt_int(data.get("euler_number")),
            fibre_degree_gcd=_opt_int(data.get("lambda")),
            kodaira_nonzero=bool(data.get("kodaira_nonzero", True)),
            bielliptic_type=bt,
            ns=_opt_lattice(data.get("ns")),
            transcendental=_opt_lattice(data.get("t")),
        )


def _opt_int(value):
    return None if value is None else int(value)


def _opt_lattice(value):
    if value is None:
        return None
    if isinstance(value, dict):
        return Lattice.from_dict(value)
    return Lattice(tuple(tuple(int(x) for x in row) for row in value))


@dataclass(frozen=True)
class Check:
    name: str
    outcome: str
    detail: str = ""

    def to_dict(self) -> dict:
        return {"name": self.name, "outcome": self.outcome,
                "detail": self.detail}


@dataclass(frozen=True)
class PartnerReport:
    """Single-surface report: who could the partners possibly be."""

    verdict: str
    citations: tuple[str, ...]
    residues: tuple[int, ...] = ()
    count: int | None = None
    count_is_upper_bound: bool = False
    notes: tuple[str, ...] = ()

    def to_dict(self) -> dict:
        out = {"verdict": self.verdict, "citations": list(self.citations),
               "notes": list(self.notes)}
        if self.verdict == "elliptic_candidates":
            out["residues"] = list(self.residues)
            out["count"] = self.count
            out["count_is_upper_bound"] = self.count_is_upper_bound
        return out


@dataclass(frozen=True)
class ComparisonReport:
    """Pairwise report: can Y be ruled out as a partner of X."""

    conclusion: str
    checks: tuple[Check, ...]
    citations: tuple[str, ...]
    notes: tuple[str, ...] = ()

    @property
    def has_inconclusive(self) -> bool:
        return any(c.outcome == INCONCLUSIVE for c in self.checks)

    def to_dict(self) -> dict:
        return {"conclusion": self.conclusion,
                "checks": [c.to_dict() for c in self.checks],
                "citations": list(self.citations),
                "notes": list(self.notes)}


@dataclass(frozen=True)
class FinitenessReport:
    """Size of the lattice-level search space behind the finiteness proof."""

    rank: int
    det: int
    disc_order: int
    disc_factors: tuple[int, ...]
    overlattice_count: int
    citations: tuple[str, ...] = field(default=(CITE_NS_GENUS, CITE_FINITENESS))

    def to_dict(self) -> dict:
        return {"rank": self.rank, "det": self.det,
                "disc_order": self.disc_order,
                "disc_factors": list(self.disc_factors),
                "overlattice_count": self.overlattice_count,
                "citations": list(self.citations)}


def necessary_invariants(x: SurfaceDescriptor,
                         y: SurfaceDescriptor) -> list[Check]:
    """Invariants any pair of partners must share; skipped when unknown."""
    pairs = [
        ("omega_order", x.resolved_omega_order(), y.resolved_omega_order(),
         CITE_OMEGA_ORDER),
        ("picard_number", x.picard_number, y.picard_number, CITE_TOPOLOGY),
        ("euler_number", x.resolved_euler_number(), y.resolved_euler_number(),
         CITE_TOPOLOGY),
    ]
    checks = []
    for name, a, b, cite in pairs:
        if a is None or b is None:
            checks.append(Check(name, SKIPPED, "value not supplied"))
        elif a == b:
            checks.append(Check(name, PASS, f"{a} = {b}; {cite}"))
        else:
            checks.append(Check(name, FAIL, f"{a} != {b}; {cite}"))
    return checks


def fm_partner_report(x: SurfaceDescriptor) -> PartnerReport:
    """Partner candidates of a single surface, by classification branch."""
    cls = x.surface_class
    if cls == "general_type":
        return _self_only(CITE_GENERAL_TYPE)
    if cls == "ruled_non_elliptic":
        return _self_only(CITE_RULED)
    if cls == "enriques":
        return _self_only(CITE_ENRIQUES)
    if cls == "bielliptic":
        return _self_only(CITE_BIELLIPTIC)
    if cls == "elliptic_nonzero_kodaira":
        if x.fibre_degree_gcd is None:
            raise MissingField(
                'elliptic surfaces need a "lambda" (fibre degree gcd) field')
        surface = elliptic.EllipticSurfaceData(x.fibre_degree_gcd,
                                               x.kodaira_nonzero)
        try:
            residues, count = elliptic.enumerate_partners(surface)
        except HypothesisViolated as exc:
            return PartnerReport(
                verdict="hypothesis_out_of_scope",
                citations=(CITE_CASE_SPLIT,),
                notes=(str(exc),))
        return PartnerReport(
            verdict="elliptic_candidates",
            citations=(CITE_CASE_SPLIT, CITE_ELLIPTIC, CITE_JACOBIAN_IDENT),
            residues=residues,
            count=count,
            count_is_upper_bound=True,
            notes=("count is an upper bound: distinct Jacobian labels are "
                   "not proved to give non-isomorphic surfaces",))
    # k3 / abelian
    notes = ["partners carry lattice-level obstructions only: compare "
             "against an explicit candidate to rule it out or keep it",
             "a full decision needs Hodge/period data, which a Gram "
             "matrix does not determine"]
    citations = [CITE_CASE_SPLIT, CITE_HODGE, CITE_NS_GENUS, CITE_FINITENESS]
    if cls == "abelian":
        notes.append("the dual abelian surface is always a partner")
        citations.append(CITE_ABELIAN_DUAL)
    return PartnerReport(
        verdict="lattice_obstruction",
        citations=tuple(citations),
        notes=tuple(notes))


def _self_only(cite: str) -> PartnerReport:
    return PartnerReport(verdict="self_only",
                         citations=(CITE_CASE_SPLIT, cite),
                         notes=("derived category determines the surface "
                                "in this class",))


def k3_abelian_obstruction(x: SurfaceDescriptor, y: SurfaceDescriptor,
                           cap: int = DEFAULT_CAP,
                           radius: int = DEFAULT_RADIUS) -> ComparisonReport:
    """Lattice-level partnership checks between two K3/abelian surfaces.

    Any hard failure rules the pair out; with no failure the pair stays a
    possible partner at the lattice level.  Checks that hit a search or
    size bound are reported as inconclusive, never silently dropped.
    """
    for d in (x, y):
        if d.surface_class not in ("k3", "abelian"):
            raise ValueError("obstruction checks apply to K3/abelian only")
        if d.ns is None or d.transcendental is None:
            raise MissingField(
                'obstruction checks need both "ns" and "t" lattices')
    checks = necessary_invariants(x, y)
    tx, ty = x.transcendental, y.transcendental
    checks.append(_equality_check("t_rank", tx.rank, ty.rank))
    checks.append(_equality_check("t_signature", signature(tx), signature(ty)))
    checks.append(_equality_check("t_determinant", tx.det, ty.det))
    verdict = isometric(tx, ty, radius=radius)
    if verdict.is_isometric:
        checks.append(Check("t_isometric", PASS, f"witness found; {CITE_HODGE}"))
    elif verdict.kind == "not_isometric":
        checks.append(Check("t_isometric", FAIL,
                            f"separated by {verdict.reason}; {CITE_HODGE}"))
    else:
        checks.append(Check("t_isometric", INCONCLUSIVE, verdict.reason or ""))
    try:
        genus = same_genus(x.ns, y.ns, cap=cap)
        checks.append(Check("ns_same_genus", PASS if genus else FAIL,
                            f"derived necessary condition; {CITE_NS_GENUS}"))
    except GroupTooLarge as exc:
        checks.append(Check("ns_same_genus", INCONCLUSIVE, str(exc)))
    except OddLatticeUnsupported as exc:
        checks.append(Check("ns_same_genus", INCONCLUSIVE, str(exc)))
    conclusion = ("ruled_out" if any(c.outcome == FAIL for c in checks)
                  else "possible_partner")
    return ComparisonReport(
        conclusion=conclusion,
        checks=tuple(checks),
        citations=(CITE_HODGE, CITE_NS_GENUS, CITE_OMEGA_ORDER, CITE_TOPOLOGY),
        notes=("lattice-level screen only: partnership is never confirmed "
               "here, only ruled out or left possible",))


def _equality_check(name: str, a, b) -> Check:
    if a == b:
        return Check(name, PASS, f"{a} = {b}")
    return Check(name, FAIL, f"{a} != {b}")


def finiteness_budget(x: SurfaceDescriptor,
                      cap: int = DEFAULT_CAP) -> FinitenessReport:
    """Size of the overlattice search space for the finiteness argument.

    Builds the orthogonal sum of the Neron-Severi and transcendental
    lattices and counts its (even, when the sum is even) overlattices;
    partners embed their sum in the same finite family.
    """
    if x.ns is None or x.transcendental is None:
        raise MissingField('finiteness budget needs both "ns" and "t" lattices')
    w = direct_sum(x.ns, x.transcendental)
    factors = discriminant_group(w)
    order = 1
    for f in factors:
        order *= f
    covers = overlattices(w, even_only=w.is_even, cap=cap)
    return FinitenessReport(
        rank=w.rank,
        det=w.det,
        disc_order=order,
        disc_factors=factors,
        overlattice_count=len(covers))
