"""Burnside rings, tables of marks, the pi_0 count, and nerves.

Run: python demos/03_burnside_and_nerves.py
"""
from eqcat import burnside
from eqcat.fincat import chaotic, group_as_category
from eqcat.groups import preset, subgroup_classes
from eqcat.gsets import point
from eqcat.nerve import homology, nerve_truncated

S3 = preset("S3")
print("Table of marks of S3 (rows G/H, columns fixed points of K):")
print(burnside.marks_text(S3))

idx = {c.order: i for i, c in enumerate(subgroup_classes(S3))}
prod = burnside.basis(S3, idx[2]) * burnside.basis(S3, idx[3])
print("\n[G/C2] * [G/C3] =", prod.coefficients, "(the free orbit)")

print("\nGenerators of the monoid of G-sets over a point, one per subgroup class:")
for name in ("C2", "C3", "C4", "C2xC2", "S3", "Q8"):
    G = preset(name)
    ranks, total, rep = burnside.tom_dieck_pi0(G, point(G))
    print(f"  {name}: {total} ({'cross-checked' if rep.ok else 'MISMATCH'})")

print("\n" + burnside.q8_obstruction().to_text())

print("\nNerves: BZ/2 has 1, 2, 4, 8 simplices in degrees 0..3.")
print("  sizes", nerve_truncated(group_as_category(preset("C2")), 3).sizes())
print("  H_* (BZ/2) =", [str(h) for h in homology(group_as_category(preset("C2")), 3)])
print("  H_* (chaotic on 3 objects) =", [str(h) for h in homology(chaotic(range(3)), 3)])
