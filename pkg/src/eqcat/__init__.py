"""Finite, executable models of equivariant permutative categories.

Modules: ``groups`` (finite groups), ``gsets`` (finite G-sets), ``fincat``
(finite G-categories), ``operads`` and ``opcheck`` (chaotic operads and their
laws), ``freeperm`` (free genuine permutative categories), ``pqr`` (the
operads P_G, Q_G, R_G on a truncated universe), ``nerve`` (nerves and
homology), ``burnside`` (Burnside ring and tom Dieck at pi_0) and ``cli``.
"""
__version__ = "0.1.0"
