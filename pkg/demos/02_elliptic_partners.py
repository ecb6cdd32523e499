"""Partner candidates of elliptic surfaces with nonzero Kodaira dimension.

The only derived partners of such a surface are relative Jacobians
J(b), with b prime to the fibre-degree gcd, and the label b only
matters modulo that gcd and up to sign.  This demo enumerates the
candidate labels for a range of gcds and shows the induced action on
(rank, fibre degree) pairs.
"""

from fmpartners import (EllipticSurfaceData, RankDegree, TransformMatrix,
                        enumerate_partners, fm_action, normalize_jacobian,
                        validate_transform)

print("candidate Jacobian labels by fibre-degree gcd:")
for lam in range(1, 16):
    residues, count = enumerate_partners(EllipticSurfaceData(lam))
    tag = "  <- count 1, the surface is its only candidate" if count == 1 else ""
    print(f"  gcd {lam:2d}: residues {list(residues)} (count {count}){tag}")

print()
print("the count collapses to 1 exactly for gcd in {1, 2, 3, 4, 6},")
print("where +/-1 are the only units.")

print()
surface = EllipticSurfaceData(5)
print("normal forms of Jacobian labels for gcd 5:")
for b in (1, 2, 3, 4, 6, 7):
    print(f"  J(1, {b}) -> label {normalize_jacobian(1, b, surface)}")

print()
print("matrices acting on (rank, fibre degree):")
m = TransformMatrix(((2, 1), (5, 3)))
print("  matrix", m.rows, "det", m.det)
for surface in (EllipticSurfaceData(1), EllipticSurfaceData(5),
                EllipticSurfaceData(3)):
    ok = validate_transform(m, surface)
    print(f"  realizable over gcd {surface.fibre_degree_gcd}? {ok}")
v = RankDegree(1, 0)
print("  action on", v, "->", fm_action(m, v))
print("  inverse undoes it:", fm_action(m.inverse(), fm_action(m, v)))
