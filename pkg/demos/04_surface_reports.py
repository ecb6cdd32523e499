"""Partner reports across the classification of minimal surfaces.

One descriptor per surface class, dispatched to the matching branch:
most classes admit no partner besides the surface itself, elliptic
surfaces with nonzero Kodaira dimension get an explicit candidate list,
and the K3/abelian classes reduce to lattice obstructions that can rule
a candidate out but never confirm one.
"""

import json

from fmpartners import (Lattice, SurfaceDescriptor, finiteness_budget,
                        fm_partner_report, hyperbolic_plane,
                        k3_abelian_obstruction)

h = hyperbolic_plane()

print("single-surface verdicts:")
descriptors = [
    SurfaceDescriptor("general_type"),
    SurfaceDescriptor("ruled_non_elliptic"),
    SurfaceDescriptor("enriques"),
    SurfaceDescriptor("bielliptic"),
    SurfaceDescriptor("elliptic_nonzero_kodaira", fibre_degree_gcd=7),
    SurfaceDescriptor("k3"),
    SurfaceDescriptor("abelian"),
]
for d in descriptors:
    report = fm_partner_report(d)
    extra = ""
    if report.verdict == "elliptic_candidates":
        extra = f"  residues {list(report.residues)}, count {report.count}"
    print(f"  {d.surface_class:26s} -> {report.verdict}{extra}")

print()
print("pairwise screen: same-genus divisor lattices, identical")
print("transcendental lattices; nothing here can tell them apart:")
x = SurfaceDescriptor("k3", ns=Lattice(((2, 1), (1, 12))), transcendental=h)
y = SurfaceDescriptor("k3", ns=Lattice(((4, 1), (1, 6))), transcendental=h)
report = k3_abelian_obstruction(x, y)
print(" ", report.conclusion)
for check in report.checks:
    print(f"    {check.name:15s} {check.outcome}")

print()
print("a K3 against an abelian surface falls at the Euler number:")
z = SurfaceDescriptor("abelian", ns=h, transcendental=h)
report = k3_abelian_obstruction(SurfaceDescriptor("k3", ns=h,
                                                  transcendental=h), z)
print(" ", report.conclusion)
for check in report.checks:
    if check.outcome == "fail":
        print(f"    {check.name}: {check.detail}")

print()
print("finiteness budget: overlattices the partner search lives inside")
w = SurfaceDescriptor("k3", ns=Lattice(((0, 2), (2, 0))), transcendental=h)
print(json.dumps(finiteness_budget(w).to_dict(), indent=2, sort_keys=True))
