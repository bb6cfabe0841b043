"""Finite groups as validated Cayley tables, with brute-force subgroup machinery.

Everything here is exhaustive: groups of interest have order at most 24,
so subgroups are found by closing small generating sets and conjugacy is
decided by direct conjugation.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import product

from . import perms
from .errors import NotAGroup, NotAHomomorphism, NotASubgroup, ParseError

MAX_ORDER = 64


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """A group on ``range(n)`` with identity 0; ``table[a][b]`` is the product ``ab``."""

    name: str
    elements: tuple
    table: tuple
    identity_index: int = 0

    def __post_init__(self):
        _validate(self)

    # frozen + eq=False: identity semantics, but cached_property needs __dict__
    def __hash__(self):
        return id(self)

    def __repr__(self):
        return f"FiniteGroup({self.name!r}, order={self.order})"

    @property
    def order(self):
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(range(len(self.elements)))

    def mul(self, a, b):
        return self.table[a][b]

    @cached_property
    def _inverses(self):
        e = self.identity_index
        return tuple(row.index(e) for row in self.table)

    def inv(self, a):
        return self._inverses[a]

    def conj(self, g, x):
        """``g x g^-1``."""
        return self.table[self.table[g][x]][self._inverses[g]]

    def index(self, name):
        try:
            return self.elements.index(name)
        except ValueError:
            raise ParseError(f"{name!r} is not an element of {self.name}") from None

    def element_order(self, a):
        n, x = 1, a
        while x != self.identity_index:
            x = self.table[x][a]
            n += 1
        return n

    def closure(self, gens):
        """Subgroup generated by ``gens`` as a sorted tuple of indices."""
        members = {self.identity_index}
        frontier = list(gens)
        while frontier:
            x = frontier.pop()
            if x in members:
                continue
            members.add(x)
            frontier.extend(self.table[m][x] for m in list(members))
            frontier.extend(self.table[x][m] for m in list(members))
        return tuple(sorted(members))

    @cached_property
    def generators(self):
        """A small generating set picked greedily by element index."""
        gens, span = [], (self.identity_index,)
        for a in range(self.order):
            if a not in span:
                gens.append(a)
                span = self.closure(gens)
                if len(span) == self.order:
                    break
        return tuple(gens)

    @cached_property
    def is_abelian(self):
        t = self.table
        return all(t[a][b] == t[b][a] for a in self for b in self)

    def whole(self):
        return Subgroup(self, tuple(range(self.order)))

    def trivial_subgroup(self):
        return Subgroup(self, (self.identity_index,))

    def subgroup(self, members):
        return Subgroup.of(self, members)

    def to_dict(self):
        return {"name": self.name, "elements": list(self.elements),
                "table": [list(r) for r in self.table]}


def _validate(G):
    n = len(G.elements)
    if n == 0 or n > MAX_ORDER:
        raise ParseError(f"group order {n} outside 1..{MAX_ORDER}")
    if len(set(G.elements)) != n:
        raise ParseError("element names are not unique")
    t = G.table
    if len(t) != n or any(len(r) != n for r in t):
        raise ParseError("table dimensions do not match the element count")
    if any(not (isinstance(x, int) and 0 <= x < n) for r in t for x in r):
        raise ParseError("table entries must be element indices")
    e = G.identity_index
    for a in range(n):
        if t[e][a] != a or t[a][e] != a:
            raise NotAGroup("identity", (e, a))
    for a in range(n):
        if e not in t[a]:
            raise NotAGroup("inverses", (a,))
        b = t[a].index(e)
        if t[b][a] != e:
            raise NotAGroup("inverses", (a, b))
    for a in range(n):
        ra = t[a]
        for b in range(n):
            rab = t[ra[b]]
            rb = t[b]
            for c in range(n):
                if rab[c] != ra[rb[c]]:
                    raise NotAGroup("associativity", (a, b, c))


def group_from_table(name, elements, table):
    return FiniteGroup(name, tuple(elements), tuple(tuple(int(x) for x in r) for r in table))


def group_from_perms(name, gens_or_elements, names=None, close=True):
    """Group of permutations, identity first, elements sorted lexicographically."""
    if close:
        elems = {perms.identity(len(gens_or_elements[0]))}
        frontier = list(gens_or_elements)
        while frontier:
            x = frontier.pop()
            if x in elems:
                continue
            elems.add(x)
            frontier.extend(perms.compose(x, y) for y in list(elems))
            frontier.extend(perms.compose(y, x) for y in list(elems))
        elems = sorted(elems)
    else:
        elems = sorted(gens_or_elements)
    pos = {p: i for i, p in enumerate(elems)}
    table = tuple(tuple(pos[perms.compose(p, q)] for q in elems) for p in elems)
    if names is None:
        names = [perms.cycle_str(p) for p in elems]
    G = FiniteGroup(name, tuple(names), table)
    object.__setattr__(G, "perms", tuple(elems))
    return G


@lru_cache(maxsize=None)
def symmetric_group(n):
    """Sigma_n; element ``i`` is ``perms.all_perms(n)[i]``."""
    G = group_from_perms(f"Sigma{n}", list(perms.all_perms(n)), close=False)
    return G


def cyclic_group(n, name=None):
    return FiniteGroup(name or f"C{n}", tuple(f"a^{i}" if i else "e" for i in range(n)),
                       tuple(tuple((a + b) % n for b in range(n)) for a in range(n)))


def direct_product(G, H, name=None):
    n, m = G.order, H.order
    elements = tuple(f"({a},{b})" for a in G.elements for b in H.elements)
    table = tuple(
        tuple(G.table[a // m][b // m] * m + H.table[a % m][b % m] for b in range(n * m))
        for a in range(n * m))
    return FiniteGroup(name or f"{G.name}x{H.name}", elements, table)


def _quaternion():
    names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    # unit -> (sign, letter); letter product table for i, j, k
    basis = {"1": (1, "1"), "-1": (-1, "1"), "i": (1, "i"), "-i": (-1, "i"),
             "j": (1, "j"), "-j": (-1, "j"), "k": (1, "k"), "-k": (-1, "k")}
    mult = {("1", x): (1, x) for x in "1ijk"}
    mult.update({(x, "1"): (1, x) for x in "1ijk"})
    mult.update({("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"), ("k", "k"): (-1, "1"),
                 ("i", "j"): (1, "k"), ("j", "k"): (1, "i"), ("k", "i"): (1, "j"),
                 ("j", "i"): (-1, "k"), ("k", "j"): (-1, "i"), ("i", "k"): (-1, "j")})

    def name(sign, letter):
        return ("" if sign > 0 else "-") + letter

    table = []
    for a in names:
        sa, la = basis[a]
        row = []
        for b in names:
            sb, lb = basis[b]
            s, l = mult[(la, lb)]
            row.append(names.index(name(sa * sb * s, l)))
        table.append(row)
    return group_from_table("Q8", names, table)


def _klein():
    return group_from_table("C2xC2", ["e", "a", "b", "ab"],
                            [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]])


_PRESETS = {
    "trivial": lambda: cyclic_group(1, "trivial"),
    "C2": lambda: cyclic_group(2),
    "C3": lambda: cyclic_group(3),
    "C4": lambda: cyclic_group(4),
    "C5": lambda: cyclic_group(5),
    "C6": lambda: cyclic_group(6),
    "S3": lambda: group_from_perms("S3", [(1, 0, 2), (1, 2, 0)]),
    "Q8": _quaternion,
    "C2xC2": _klein,
}

PRESET_NAMES = tuple(_PRESETS)


@lru_cache(maxsize=None)
def preset(name):
    try:
        return _PRESETS[name]()
    except KeyError:
        raise ParseError(f"unknown group preset {name!r}") from None


def load_group(spec):
    """Parse a group from JSON text, a dict, or a preset name."""
    if isinstance(spec, str):
        if spec in _PRESETS:
            return preset(spec)
        try:
            spec = json.loads(spec)
        except json.JSONDecodeError as exc:
            raise ParseError(f"group file is not valid JSON: {exc}") from None
    if not isinstance(spec, dict):
        raise ParseError("group spec must be a JSON object")
    try:
        name = spec.get("name", "G")
        elements = spec["elements"]
        table = spec["table"]
    except KeyError as exc:
        raise ParseError(f"group spec is missing {exc}") from None
    if not isinstance(table, list) or not all(isinstance(r, list) for r in table):
        raise ParseError("table must be a list of lists")
    return group_from_table(name, elements, table)


# --------------------------------------------------------------------------
# subgroups


@dataclass(frozen=True)
class Subgroup:
    parent: FiniteGroup = field(compare=False, repr=False)
    member_indices: tuple

    @classmethod
    def of(cls, G, members):
        members = tuple(sorted(set(members)))
        if G.identity_index not in members:
            raise NotASubgroup("subgroup must contain the identity")
        s = set(members)
        for a in members:
            if G.inv(a) not in s:
                raise NotASubgroup(f"not closed under inverse at {a}")
            for b in members:
                if G.mul(a, b) not in s:
                    raise NotASubgroup(f"not closed under products at {(a, b)}")
        return cls(G, members)

    @property
    def order(self):
        return len(self.member_indices)

    def __contains__(self, a):
        return a in self._set

    @cached_property
    def _set(self):
        return frozenset(self.member_indices)

    def __iter__(self):
        return iter(self.member_indices)

    def conjugate(self, g):
        G = self.parent
        return Subgroup(G, tuple(sorted(G.conj(g, h) for h in self.member_indices)))

    def is_subgroup_of(self, other):
        return self._set <= other._set

    @cached_property
    def as_group(self):
        """The subgroup as a standalone group; element ``i`` is parent element ``member_indices[i]``."""
        G = self.parent
        pos = {a: i for i, a in enumerate(self.member_indices)}
        table = tuple(tuple(pos[G.mul(a, b)] for b in self.member_indices)
                      for a in self.member_indices)
        return FiniteGroup(f"{G.name}<{','.join(G.elements[a] for a in self.member_indices)}>",
                           tuple(G.elements[a] for a in self.member_indices), table)

    def normalizer(self):
        G = self.parent
        return Subgroup(G, tuple(g for g in G if self.conjugate(g) == self))

    def left_cosets(self):
        """Left cosets ``gH`` as sorted tuples, ordered by least element."""
        G = self.parent
        seen, out = set(), []
        for g in G:
            if g in seen:
                continue
            c = tuple(sorted(G.mul(g, h) for h in self.member_indices))
            seen.update(c)
            out.append(c)
        return out


def quotient_group(N, H):
    """``N/H`` for ``H`` normal in ``N`` (both subgroups of one parent)."""
    G = N.parent
    cosets = []
    where = {}
    for g in N.member_indices:
        if g in where:
            continue
        c = tuple(sorted(G.mul(g, h) for h in H.member_indices))
        for x in c:
            where[x] = len(cosets)
        cosets.append(c)
    table = tuple(tuple(where[G.mul(a[0], b[0])] for b in cosets) for a in cosets)
    names = tuple("{" + ",".join(G.elements[x] for x in c) + "}" for c in cosets)
    return FiniteGroup(f"W({G.name})", names, table)


@dataclass(frozen=True, eq=False)
class SubgroupClass:
    representative: Subgroup
    members: tuple
    normalizer: Subgroup
    weyl: FiniteGroup

    @property
    def order(self):
        return self.representative.order

    def __contains__(self, H):
        return H in self.members


def all_subgroups(G):
    """Every subgroup, by closing all subsets of at most two generators, then
    joining pairs until nothing new appears."""
    found = {G.closure(())}
    for a in G:
        found.add(G.closure((a,)))
        for b in range(a + 1, G.order):
            found.add(G.closure((a, b)))
    while True:
        cur = list(found)
        new = set()
        for i, A in enumerate(cur):
            for B in cur[i + 1:]:
                J = G.closure(A + B)
                if J not in found:
                    new.add(J)
        if not new:
            break
        found |= new
    return [Subgroup(G, s) for s in sorted(found, key=lambda s: (len(s), s))]


_CLASS_CACHE = {}


def subgroup_classes(G):
    """Conjugacy classes of subgroups in canonical order: by order, then by the
    lexicographically least member (the representative)."""
    if id(G) in _CLASS_CACHE and _CLASS_CACHE[id(G)][0] is G:
        return _CLASS_CACHE[id(G)][1]
    remaining = all_subgroups(G)
    classes = []
    assigned = set()
    for H in remaining:
        if H.member_indices in assigned:
            continue
        conj = sorted({H.conjugate(g).member_indices for g in G})
        assigned.update(conj)
        members = tuple(Subgroup(G, c) for c in conj)
        rep = members[0]
        N = rep.normalizer()
        classes.append(SubgroupClass(rep, members, N, quotient_group(N, rep)))
    classes.sort(key=lambda c: (c.order, c.representative.member_indices))
    classes = tuple(classes)
    _CLASS_CACHE[id(G)] = (G, classes)
    return classes


def class_index(G, H):
    """Position of ``H``'s conjugacy class in ``subgroup_classes(G)``."""
    for i, c in enumerate(subgroup_classes(G)):
        if H.order == c.order and H in c.members:
            return i
    raise NotASubgroup(f"{H.member_indices} is not a subgroup of {G.name}")


def subconjugate(G, K, H):
    """Is some conjugate of ``K`` contained in ``H``?"""
    return any(K.conjugate(g).is_subgroup_of(H) for g in G)


# --------------------------------------------------------------------------
# homomorphisms


def hom_witness(H, Pi, alpha):
    """First pair ``(a, b)`` with ``alpha(ab) != alpha(a)alpha(b)``, or None."""
    for a in H:
        for b in H:
            if alpha[H.mul(a, b)] != Pi.mul(alpha[a], alpha[b]):
                return (a, b)
    return None


def check_hom(H, Pi, alpha):
    alpha = tuple(alpha)
    if len(alpha) != H.order:
        raise NotAHomomorphism(("length", len(alpha)))
    w = hom_witness(H, Pi, alpha)
    if w is not None:
        raise NotAHomomorphism(w)
    return alpha


def extend_from_generators(H, Pi, images):
    """Extend ``images`` (dict element -> element) multiplicatively; returns a full
    table or None when the assignment is inconsistent or not a homomorphism."""
    alpha = {H.identity_index: Pi.identity_index}
    frontier = [H.identity_index]
    gens = list(images)
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = H.mul(x, g)
            v = Pi.mul(alpha[x], images[g])
            if y in alpha:
                if alpha[y] != v:
                    return None
            else:
                alpha[y] = v
                frontier.append(y)
    if len(alpha) != H.order:
        return None
    alpha = tuple(alpha[a] for a in H)
    return alpha if hom_witness(H, Pi, alpha) is None else None


@lru_cache(maxsize=None)
def _homs_cached(H, Pi):
    gens = H.generators
    out = []
    for imgs in product(range(Pi.order), repeat=len(gens)):
        alpha = extend_from_generators(H, Pi, dict(zip(gens, imgs)))
        if alpha is not None:
            out.append(alpha)
    return tuple(sorted(set(out)))


def homomorphisms(H, Pi):
    """All homomorphisms ``H -> Pi`` as tuples indexed by ``H``'s elements."""
    return _homs_cached(H, Pi)


def anti_homomorphisms(H, Pi):
    """``alpha(ab) = alpha(b)alpha(a)``; these are pointwise inverses of homomorphisms."""
    return tuple(sorted(tuple(Pi.inv(x) for x in a) for a in homomorphisms(H, Pi)))


def centralizer_of_hom(Pi, H, alpha):
    """``{s in Pi : s alpha(h) = alpha(h) s for all h}``."""
    alpha = check_hom(H, Pi, alpha)
    image = set(alpha)
    return Subgroup(Pi, tuple(s for s in Pi
                              if all(Pi.mul(s, x) == Pi.mul(x, s) for x in image)))
