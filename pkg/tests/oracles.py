"""Independent brute-force oracles used by the tests."""
from itertools import combinations, permutations


def subgroups_by_subsets(G):
    """Every subset containing the identity and closed under products."""
    e = G.identity_index
    rest = [g for g in G if g != e]
    out = []
    for r in range(len(rest) + 1):
        for c in combinations(rest, r):
            S = frozenset((e,) + c)
            if all(G.mul(a, b) in S for a in S for b in S):
                out.append(S)
    return out


def conjugacy_classes_of_subgroups(G):
    subs = subgroups_by_subsets(G)
    seen, classes = set(), []
    for S in subs:
        if S in seen:
            continue
        cls = {frozenset(G.conj(g, x) for x in S) for g in G}
        seen |= cls
        classes.append(cls)
    return classes


def normalizer_order(G, S):
    return sum(1 for g in G if frozenset(G.conj(g, x) for x in S) == S)


def is_equivariant_bijection(A, B, f):
    return sorted(f) == list(range(B.size)) and all(
        f[A.action[g][x]] == B.action[g][f[x]] for g in A.group for x in range(A.size))


def iso_by_search(A, B):
    if A.size != B.size:
        return None
    for p in permutations(range(B.size)):
        if is_equivariant_bijection(A, B, p):
            return p
    return None


def hom_classes_by_search(H, Pi):
    """(class size, centralizer order) of every conjugacy class of homomorphisms,
    enumerating all functions H -> Pi."""
    from itertools import product
    homs = [a for a in product(range(Pi.order), repeat=H.order)
            if all(a[H.mul(x, y)] == Pi.mul(a[x], a[y]) for x in H for y in H)]
    seen, out = set(), []
    for a in homs:
        if a in seen:
            continue
        cls = {tuple(Pi.conj(s, x) for x in a) for s in Pi}
        seen |= cls
        cent = sum(1 for s in Pi if all(Pi.mul(s, x) == Pi.mul(x, s) for x in a))
        out.append((len(cls), cent))
    return sorted(out)
