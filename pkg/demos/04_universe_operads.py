"""Injection operads on a G-universe, evaluated extensionally.

Run: python demos/04_universe_operads.py
"""
import numpy as np

from eqcat.groups import preset
from eqcat.gsets import point
from eqcat.pqr import CanonicalPower, Interleaver, lambda_action, omega_check, pg_gamma, pg_unit, universe

G = preset("C2")
U = universe(G, 2)
print("Prefix of the universe (class, copy, coset):", U.prefix())

psi = CanonicalPower(U, 2)
y = (U.prefix()[0], U.prefix()[4])
print(f"\nThe based equivariant bijection U^2 -> U sends {y} to {psi(y)} and back to {psi.inverse(psi(y))}.")

f = pg_gamma(Interleaver(2), [Interleaver(2), pg_unit()])
print("gamma(interleave; interleave, id) on copies 0, 1, 2 of", U.prefix()[0], "->",
      [f((i, U.prefix()[0])) for i in range(3)])

lam = lambda_action(psi, [Interleaver(2), pg_unit()])
rng = np.random.default_rng(0)
x = (1, U.sample(rng))
print(f"lambda(psi; interleave, id) at {x} = {lam(x)}")

print("\nThe comparison with finite subsets of the universe, H-fixed skeleta:")
print(omega_check(G, point(G), 2).summary())
