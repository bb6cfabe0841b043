"""Finite G-sets ``(j, alpha)``: a homomorphism from G into Sigma_j.

Points are ``0..j-1`` in the Python API; the JSON file format is 1-based.
"""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from itertools import permutations

from . import perms
from .errors import GroupMismatch, NotAHomomorphism, NotASubgroup, ParseError
from .groups import (Subgroup, class_index, homomorphisms, subgroup_classes,
                     symmetric_group)


@dataclass(frozen=True)
class FinGSet:
    group: object = field(compare=False, repr=False)
    size: int
    action: tuple  # action[g] is a permutation tuple of range(size)

    def act(self, g, x):
        return self.action[g][x]

    def __len__(self):
        return self.size

    @cached_property
    def orbits(self):
        """Orbits as sorted tuples, ordered by least point."""
        seen, out = set(), []
        for x in range(self.size):
            if x in seen:
                continue
            orb = tuple(sorted({p[x] for p in self.action}))
            seen.update(orb)
            out.append(orb)
        return tuple(out)

    def stabilizer(self, x):
        G = self.group
        return Subgroup(G, tuple(g for g in G if self.action[g][x] == x))

    def to_dict(self):
        G = self.group
        return {"group": G.name, "size": self.size,
                "action": {G.elements[g]: [i + 1 for i in self.action[g]] for g in G}}

    def __repr__(self):
        return f"FinGSet({self.group.name}, size={self.size})"


@dataclass(frozen=True)
class GMap:
    source: FinGSet
    target: FinGSet
    values: tuple

    def __call__(self, x):
        return self.values[x]

    def is_equivariant(self):
        G = self.source.group
        return all(self.values[self.source.act(g, x)] == self.target.act(g, self.values[x])
                   for g in G for x in range(self.source.size))

    def is_bijective(self):
        return self.source.size == self.target.size and len(set(self.values)) == self.source.size


@dataclass(frozen=True)
class OrbitTypeDecomposition:
    """Multiset of orbit types as ``((class index, count), ...)`` in canonical class order."""

    group: object = field(compare=False, repr=False)
    entries: tuple

    def counts(self):
        return dict(self.entries)

    def total_size(self):
        classes = subgroup_classes(self.group)
        return sum(n * (self.group.order // classes[i].order) for i, n in self.entries)


def make_gset(G, j, action):
    """Validate an action given as ``{element (name or index): permutation}``.

    Missing elements are filled in multiplicatively from the given ones; any
    inconsistency raises NotAHomomorphism with a witness pair.
    """
    images = {}
    for g, p in dict(action).items():
        gi = G.index(g) if isinstance(g, str) else int(g)
        p = tuple(p)
        if not perms.is_permutation(p, j):
            raise ParseError(f"image of {G.elements[gi]} is not a permutation of degree {j}")
        images[gi] = p
    images.setdefault(G.identity_index, perms.identity(j))
    if j <= 1:
        # Sigma_0 and Sigma_1 are trivial, so the action is forced
        images.update({g: perms.identity(j) for g in G if g not in images})
    if images[G.identity_index] != perms.identity(j):
        raise NotAHomomorphism((G.identity_index, G.identity_index))
    table = dict(images)
    frontier = list(table)
    while frontier:
        x = frontier.pop()
        for g in list(images):
            y = G.mul(x, g)
            v = perms.compose(table[x], images[g])
            if y in table:
                if table[y] != v:
                    raise NotAHomomorphism((x, g))
            else:
                table[y] = v
                frontier.append(y)
    if len(table) != G.order:
        missing = [G.elements[g] for g in G if g not in table]
        raise ParseError(f"action does not determine elements {missing}")
    act = tuple(table[g] for g in G)
    for a in G:
        for b in G:
            if act[G.mul(a, b)] != perms.compose(act[a], act[b]):
                raise NotAHomomorphism((a, b))
    return FinGSet(G, j, act)


def from_hom(G, j, alpha):
    """G-set from a homomorphism given as Sigma_j element indices."""
    S = symmetric_group(j)
    return FinGSet(G, j, tuple(S.perms[a] for a in alpha))


def load_gset(spec, groups):
    """Parse the JSON G-set format; ``groups`` maps names to FiniteGroup."""
    if isinstance(spec, str):
        try:
            spec = json.loads(spec)
        except json.JSONDecodeError as exc:
            raise ParseError(f"G-set file is not valid JSON: {exc}") from None
    try:
        G = groups[spec["group"]] if not hasattr(groups, "order") else groups
        j = int(spec["size"])
        action = {g: [int(i) - 1 for i in p] for g, p in spec["action"].items()}
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad G-set spec: {exc}") from None
    return make_gset(G, j, action)


def empty(G):
    return FinGSet(G, 0, tuple(() for _ in G))


def trivial(G, n=1):
    return FinGSet(G, n, tuple(perms.identity(n) for _ in G))


def point(G):
    return trivial(G, 1)


def coset_space(H):
    """``G/H`` with points the left cosets in the order of ``H.left_cosets()``."""
    G = H.parent
    cosets = H.left_cosets()
    where = {x: i for i, c in enumerate(cosets) for x in c}
    return FinGSet(G, len(cosets),
                   tuple(tuple(where[G.mul(g, c[0])] for c in cosets) for g in G))


def regular(G):
    return coset_space(G.trivial_subgroup())


def _same_group(A, B):
    if A.group is not B.group:
        raise GroupMismatch(f"{A.group.name} vs {B.group.name}")


def isotropy_class(A, x):
    return class_index(A.group, A.stabilizer(x))


def orbit_type(A):
    c = Counter(isotropy_class(A, orb[0]) for orb in A.orbits)
    return OrbitTypeDecomposition(A.group, tuple(sorted(c.items())))


def disjoint_union(A, B):
    _same_group(A, B)
    j = A.size
    return FinGSet(A.group, A.size + B.size,
                   tuple(A.action[g] + tuple(j + x for x in B.action[g]) for g in A.group))


def product_gset(A, B):
    """Diagonal action on pairs ``(a, b)`` numbered ``a * |B| + b``."""
    _same_group(A, B)
    k = B.size
    return FinGSet(A.group, A.size * k,
                   tuple(tuple(pa[a] * k + pb[b] for a in range(A.size) for b in range(k))
                         for pa, pb in zip(A.action, B.action)))


def _check_sub(A, H):
    if not isinstance(H, Subgroup) or H.parent is not A.group:
        raise NotASubgroup("subgroup must belong to the acting group")


def fixed_points(A, H):
    _check_sub(A, H)
    return frozenset(x for x in range(A.size) if all(A.action[h][x] == x for h in H))


def restrict(A, H):
    """The underlying ``H``-set, over ``H.as_group``."""
    _check_sub(A, H)
    return FinGSet(H.as_group, A.size, tuple(A.action[h] for h in H.member_indices))


def gset_iso(A, B):
    """An equivariant bijection ``A -> B`` or None.

    Orbits of ``A`` are matched greedily to unused orbits of ``B`` containing a
    point with exactly the same stabilizer.
    """
    _same_group(A, B)
    if A.size != B.size:
        return None
    if A.action == B.action:
        return GMap(A, B, tuple(range(A.size)))
    G = A.group
    used = set()
    values = [None] * A.size
    for orb in A.orbits:
        a = orb[0]
        S = A.stabilizer(a)
        hit = None
        for bi, borb in enumerate(B.orbits):
            if bi in used or len(borb) != len(orb):
                continue
            for b in borb:
                if B.stabilizer(b) == S:
                    hit = (bi, b)
                    break
            if hit:
                break
        if hit is None:
            return None
        used.add(hit[0])
        b = hit[1]
        for g in G:
            values[A.action[g][a]] = B.action[g][b]
    return GMap(A, B, tuple(values))


def equivariant_bijections(A, B):
    """All equivariant bijections, by brute force over Sigma_n (small sizes only)."""
    out = []
    for p in permutations(range(B.size)):
        f = GMap(A, B, p)
        if A.size == B.size and f.is_equivariant():
            out.append(f)
    return out


def all_gsets(G, j):
    """Every ``j``-point G-set, one per homomorphism ``G -> Sigma_j``."""
    return [from_hom(G, j, a) for a in homomorphisms(G, symmetric_group(j))]


def hom_classes(H, Pi):
    """Homomorphisms ``H -> Pi`` up to conjugation in ``Pi``.

    Returns ``(representative, class size, centralizer order)`` triples, the
    representative being the least hom in the class.
    """
    homs = homomorphisms(H, Pi)
    seen = set()
    out = []
    for a in homs:
        if a in seen:
            continue
        cls = {tuple(Pi.conj(s, x) for x in a) for s in Pi}
        seen |= cls
        cent = sum(1 for s in Pi if all(Pi.mul(s, x) == Pi.mul(x, s) for x in set(a)))
        out.append((min(cls), len(cls), cent))
    return out


def weyl_orbits_on_fixed(A, cls):
    """Orbits of ``N(H)`` (equivalently ``WH``) on ``A^H`` for the class representative."""
    H = cls.representative
    fixed = fixed_points(A, H)
    seen, out = set(), []
    for x in sorted(fixed):
        if x in seen:
            continue
        orb = tuple(sorted({A.action[n][x] for n in cls.normalizer}))
        seen.update(orb)
        out.append(orb)
    return out
