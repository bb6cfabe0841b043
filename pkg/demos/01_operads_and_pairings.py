"""The Barratt-Eccles operad, its genuine version, and the pairing.

Run: python demos/01_operads_and_pairings.py
"""
from eqcat import operads, perms
from eqcat.groups import preset

swap = perms.from_cycles(2, (1, 2))

print("Objects of O(j) are permutations; composition substitutes blocks.")
print("  gamma((12); id_1, id_2) =", perms.cycle_str(operads.block_gamma(swap, [perms.identity(1), perms.identity(2)])))

print("\nThe tensor of permutations orders pairs lexicographically.")
print("  (12) (x) id_2 =", perms.cycle_str(operads.tensor_perm(swap, perms.identity(2))))
print("  tau(2,2) =", perms.cycle_str(operads.tau_perm(2, 2)))
print("  delta((2), (1,1)) =", perms.cycle_str(operads.delta_perm([2], [1, 1])))

print("\nThe operad laws hold for O up to arity 4:")
print(operads.verify_operad(operads.barratt_eccles(4), 4).summary())

G = preset("C2")
print(f"\nO_G for G = {G.name}: arity 2 has {operads.og_operad(G, 3).n_objects(2)} objects (functions G -> Sigma_2).")
print(operads.verify_operad(operads.og_operad(G, 3), 3).summary())

print("\nThe pairing O x O -> O. Equivariance and unit hold on the nose;")
print("distributivity and permutativity hold after conjugating by the comparison")
print("permutations, which are the unique isomorphisms of the chaotic target.")
rep = operads.verify_pairing(operads.pairing_BE(3), jmax=3)
for c in rep.checks:
    print(" ", c.line())
