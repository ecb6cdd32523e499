"""Tour of the exact lattice toolkit.

Walks through the invariants the partner checks are built from:
determinant, signature, discriminant group, torsion quadratic form,
genus comparison, and the isometry tester with its three-way verdict.
Run as a script; every number printed here is exact.
"""

from fmpartners import (Lattice, discriminant_form, discriminant_group,
                        determinant, hyperbolic_plane, isometric,
                        same_genus, signature)

h = hyperbolic_plane()
print("hyperbolic plane, Gram", h.gram)
print("  determinant", determinant(h), " signature", signature(h))
print("  discriminant group", discriminant_group(h) or "(trivial)")

print()
a = Lattice(((2, 1), (1, 12)))
b = Lattice(((4, 1), (1, 6)))
print("two positive definite forms with the same invariants:")
for name, lat in (("A", a), ("B", b)):
    print(f"  {name}: gram {lat.gram}, det {determinant(lat)}, "
          f"signature {signature(lat)}, disc {discriminant_group(lat)}")

print()
print("same genus?", same_genus(a, b))
verdict = isometric(a, b)
print("isometric?", verdict.kind, "-", verdict.reason)
print("so the genus does not determine the isometry class: this is the")
print("smallest kind of example behind partner candidates that share")
print("every numerical invariant without being the same surface.")

print()
print("minimum norms tell them apart by brute force:")
for name, lat in (("A", a), ("B", b)):
    best = min(lat.inner((x, y), (x, y))
               for x in range(-6, 7) for y in range(-6, 7)
               if (x, y) != (0, 0))
    print(f"  min norm of {name} = {best}")

print()
twisted = Lattice(((2, -1), (-1, 2)))
root = Lattice(((2, 1), (1, 2)))
verdict = isometric(root, twisted)
print("definite forms are decided exactly; a witness is returned:")
print("  ", root.gram, "~", twisted.gram, "->", verdict.kind,
      "witness", verdict.witness)

print()
print("torsion quadratic form of [[2]]:")
form = discriminant_form(Lattice(((2,),)))
print("  orders", form.orders)
for x in form.elements():
    if any(x):
        print(f"  q{x} =", form.quadratic(x), " (mod 2)")
