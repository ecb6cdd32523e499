"""Exact lattice arithmetic and partner enumeration for derived
equivalences of minimal complex surfaces.

The classification of minimal complex surfaces with equivalent bounded
derived categories splits by surface class: most classes admit no
partner besides the surface itself, elliptic surfaces of nonzero
Kodaira dimension have an explicit finite list of relative-Jacobian
candidates, and the K3/abelian cases reduce to lattice-theoretic
conditions.  This package computes the lattice invariants and
obstructions involved, enumerates the candidate partners, and reports
them with the anchors of the classification results that justify each
step.  All arithmetic is exact.
"""

from .bielliptic import (ALLOWED_TYPES, BiellipticType, DivisibilityReport,
                         NumClass, SheafClass, admissible, delta_member_pure,
                         euler_bielliptic, num_pairing, rank_reduction,
                         validate_type, verify_divisibility_claim)
from .elliptic import (EllipticSurfaceData, RankDegree, TransformMatrix,
                       enumerate_partners, fm_action, normalize_jacobian,
                       validate_transform)
from .engine import (ComparisonReport, FinitenessReport, PartnerReport,
                     SurfaceDescriptor, finiteness_budget, fm_partner_report,
                     k3_abelian_obstruction, necessary_invariants)
from .errors import (CoprimalityViolated, FMPartnersError, GroupTooLarge,
                     HypothesisViolated, MissingField, NonIntegralResult,
                     NoValidShift, NotSL2, OddLatticeUnsupported)
from .lattices import (DiscriminantForm, IsometryVerdict, Lattice,
                       determinant, direct_sum, discriminant_form,
                       discriminant_group, hyperbolic_plane, is_two_elementary,
                       isometric, overlattices, rescale, same_genus, signature,
                       smith_normal_form)
from .mukai import (ChernData, IntersectionData, MukaiVector,
                    euler_pairing_surface, euler_pairing_torsion, mukai_pairing,
                    mukai_vector, rr_consistency)

__version__ = "0.1.0"
