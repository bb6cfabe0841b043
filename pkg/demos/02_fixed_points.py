"""Fixed points of the free genuine permutative category are G-sets over X,
and fixed points of Cat(G~, B Pi) are classified by homomorphisms.

Run: python demos/02_fixed_points.py
"""
from eqcat.fincat import skeleton
from eqcat.freeperm import catone_check, cattwo_check, fixed_free, free_og, wreath_skeleton
from eqcat.groups import preset, symmetric_group
from eqcat.gsets import point, regular
from eqcat.nerve import bgpi_fixed_check

G = preset("C2")
F = free_og(G, point(G), 3)
for j in range(4):
    C = fixed_free(F, G.whole(), j)
    sk = sorted(s[2] for s in skeleton(C))
    print(f"arity {j}: {C.n_objects} fixed objects, {len(sk)} iso classes, automorphism orders {sk}")

print("\nThe comparison functor to G-sets over X is an isomorphism:")
for j in range(4):
    print(" ", catone_check(G, regular(G), j).summary())

print("\nIso classes from orbit data, with true and |WH|-formula automorphism orders:")
for sig, aut, formula in wreath_skeleton(G, regular(G), 2):
    print(f"  {sig}: {aut} (formula {formula})")
print(cattwo_check(G, regular(G), 2).summary())

print("\nCat(G~, B Sigma_3)^G for G = C2: components are conjugacy classes of")
print("homomorphisms C2 -> Sigma_3, vertex groups their centralizers.")
print(bgpi_fixed_check(G, symmetric_group(3), G.whole()).to_text())
