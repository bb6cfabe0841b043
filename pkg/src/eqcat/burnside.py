"""The Burnside ring, the table of marks, and the pi_0 shadow of the tom Dieck
splitting, each with an independent brute-force cross-check."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .errors import CheckFailure, GroupMismatch
from .groups import subgroup_classes
from .gsets import coset_space, fixed_points, orbit_type, product_gset
from .report import Report


@dataclass(frozen=True)
class BurnsideElement:
    group: object = field(compare=False, repr=False)
    coefficients: tuple

    def __post_init__(self):
        n = len(subgroup_classes(self.group))
        if len(self.coefficients) != n:
            raise ValueError(f"expected {n} coefficients, got {len(self.coefficients)}")

    def __add__(self, other):
        _same(self, other)
        return BurnsideElement(self.group, tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

    def __mul__(self, other):
        return burnside_mul(self, other)

    def __eq__(self, other):
        return (isinstance(other, BurnsideElement) and self.group is other.group
                and self.coefficients == other.coefficients)

    def __hash__(self):
        return hash(self.coefficients)


def _same(a, b):
    if a.group is not b.group:
        raise GroupMismatch(f"{a.group.name} vs {b.group.name}")


def basis(G, i):
    """``[G/H]`` for the ``i``-th subgroup class."""
    n = len(subgroup_classes(G))
    return BurnsideElement(G, tuple(int(k == i) for k in range(n)))


def burnside_class(A):
    n = len(subgroup_classes(A.group))
    counts = orbit_type(A).counts()
    return BurnsideElement(A.group, tuple(counts.get(i, 0) for i in range(n)))


def _orbit(G, i):
    return coset_space(subgroup_classes(G)[i].representative)


def burnside_mul(a, b):
    _same(a, b)
    G = a.group
    n = len(a.coefficients)
    out = [0] * n
    for i, x in enumerate(a.coefficients):
        for j, y in enumerate(b.coefficients):
            if x and y:
                c = burnside_class(product_gset(_orbit(G, i), _orbit(G, j))).coefficients
                for k in range(n):
                    out[k] += x * y * c[k]
    return BurnsideElement(G, tuple(out))


def table_of_marks(G):
    """``m[i][k] = |(G/H_i)^(H_k)|`` in canonical class order."""
    cls = subgroup_classes(G)
    return [[len(fixed_points(coset_space(ci.representative), ck.representative)) for ck in cls]
            for ci in cls]


def marks(a):
    """Mark homomorphism ``A(G) -> Z^classes``."""
    T = table_of_marks(a.group)
    return tuple(sum(c * T[i][k] for i, c in enumerate(a.coefficients)) for k in range(len(T)))


def class_labels(G):
    out = []
    for c in subgroup_classes(G):
        m = c.representative.member_indices
        out.append("{" + ",".join(G.elements[x] for x in m) + "}" if len(m) < G.order else G.name)
    return out


def marks_text(G):
    T = table_of_marks(G)
    labels = class_labels(G)
    w = max(len(s) for s in labels)
    cw = max(len(str(x)) for row in T for x in row)
    return "\n".join(labels[i].ljust(w) + "  " + " ".join(str(x).rjust(cw) for x in row)
                     for i, row in enumerate(T))


def marks_csv(G):
    T = table_of_marks(G)
    labels = class_labels(G)
    lines = ["," + ",".join(f'"{s}"' for s in labels)]
    lines += [f'"{labels[i]}",' + ",".join(map(str, row)) for i, row in enumerate(T)]
    return "\n".join(lines)


def check_marks(G):
    """Lower triangular with diagonal ``|WH|`` and multiplicative on basis pairs."""
    T = table_of_marks(G)
    cls = subgroup_classes(G)
    n = len(T)
    rep = Report("burnside marks", {"group": G.name})
    rep.new("lower triangular", f"{n} classes").record(
        all(T[i][k] == 0 for i in range(n) for k in range(i + 1, n)), None)
    rep.new("diagonal = |WH|", f"{n} classes").record(
        [T[i][i] for i in range(n)] == [c.weyl.order for c in cls], [T[i][i] for i in range(n)])
    c = rep.new("marks(a b) = marks(a) marks(b)", "basis pairs")
    for i in range(n):
        for j in range(n):
            a, b = basis(G, i), basis(G, j)
            c.record(marks(a * b) == tuple(x * y for x, y in zip(marks(a), marks(b))), (i, j))
    return rep


# --------------------------------------------------------------------------
# tom Dieck at pi_0


def tom_dieck_pi0(G, X, strict=False):
    """Ranks ``|X^H / WH|`` per subgroup class, their total, and a report
    comparing the total with a brute-force count of orbits over ``X``."""
    cls = subgroup_classes(G)
    ranks = []
    for c in cls:
        fixed = fixed_points(X, c.representative)
        seen, k = set(), 0
        for x in sorted(fixed):
            if x not in seen:
                seen |= {X.action[g][x] for g in c.normalizer}
                k += 1
        ranks.append(k)
    total = sum(ranks)
    oracle = orbits_over(G, X)
    rep = Report("burnside tomdieck", {"group": G.name, "|X|": X.size})
    rep.new("total rank = generators of the monoid of G-sets over X",
            "orbits G/H -> X, classified by brute force").record(total == sum(oracle), (ranks, oracle))
    rep.new("rank per class = brute-force count", f"{len(cls)} classes").record(ranks == oracle, (ranks, oracle))
    if X.size == 1:
        subs = brute_force_subgroup_classes(G)
        rep.new("X = * : total = number of subgroup classes", "brute-force subgroup oracle").record(
            total == len(subs), (total, len(subs)))
    if strict and not rep.ok:
        raise CheckFailure(rep)
    return ranks, total, rep


def orbits_over(G, X):
    """Per subgroup class, the isomorphism classes of orbits ``G/H -> X`` over ``X``:
    every equivariant map, modulo every equivariant automorphism of ``G/H``."""
    out = []
    for c in subgroup_classes(G):
        O = coset_space(c.representative)
        maps = _equivariant_maps(G, O, X)
        autos = _equivariant_maps(G, O, O)
        seen, k = set(), 0
        for f in maps:
            if f not in seen:
                seen |= {tuple(f[s[x]] for x in range(O.size)) for s in autos}
                k += 1
        out.append(k)
    return out


def _equivariant_maps(G, O, X):
    """Equivariant maps from a transitive ``O`` (base point 0): each candidate
    ``g . 0 -> g . y`` is built and then checked on every pair ``(g, x)``."""
    out = []
    for y in range(X.size):
        f = [None] * O.size
        ok = True
        for g in G:
            x, v = O.action[g][0], X.action[g][y]
            if f[x] is None:
                f[x] = v
            elif f[x] != v:
                ok = False
                break
        if ok and all(f[O.action[g][x]] == X.action[g][f[x]] for g in G for x in range(O.size)):
            out.append(tuple(f))
    return out


def brute_force_subgroup_classes(G):
    """Subgroup classes by exhausting every subset containing the identity
    (feasible for ``|G| <= 16``)."""
    e = G.identity_index
    rest = [g for g in G if g != e]
    subs = []
    for r in range(len(rest) + 1):
        for c in combinations(rest, r):
            S = frozenset((e,) + c)
            if all(G.mul(a, b) in S for a in S for b in S):
                subs.append(S)
    classes = set()
    for S in subs:
        classes.add(min(tuple(sorted(G.conj(g, x) for x in S)) for g in G))
    return sorted(classes, key=lambda s: (len(s), s))


# --------------------------------------------------------------------------
# restriction obstruction


def restriction_obstruction(G, H, target, what="the given H-set"):
    """Report whether any ``|target|``-point G-set restricts to the H-set ``target``
    (given over ``H.as_group``), by exhausting every homomorphism into the symmetric group."""
    from .groups import homomorphisms, symmetric_group
    S = symmetric_group(target.size)
    want = target.action
    found = []
    homs = homomorphisms(G, S)
    for a in homs:
        if tuple(S.perms[a[h]] for h in H.member_indices) == tuple(want):
            found.append(a)
    rep = Report("verify obstruction", {"group": G.name, "H": list(H.member_indices), "size": target.size})
    rep.new(f"no {target.size}-point {G.name}-set restricts to {what}",
            f"all {len(homs)} homomorphisms {G.name} -> Sigma_{target.size}").record(not found, found[:1])
    return rep


def q8_obstruction():
    """No 2-point Q8-set restricts to the free 2-point set of the center."""
    from .groups import preset
    from .gsets import regular
    G = preset("Q8")
    Z = next(c.representative for c in subgroup_classes(G) if c.order == 2)
    return restriction_obstruction(G, Z, regular(Z.as_group), "the free 2-point set of the center")


__all__ = ["BurnsideElement", "basis", "burnside_class", "burnside_mul", "table_of_marks", "marks",
           "marks_text", "marks_csv", "check_marks", "tom_dieck_pi0", "orbits_over",
           "brute_force_subgroup_classes", "restriction_obstruction", "q8_obstruction"]
