"""Truncated nerves of finite categories, components and vertex groups, small
integral homology, and the fixed points of ``B(G, Pi)``.

The nerve stores, for ``q <= qmax``, the composable chains
``x_0 -f_1-> x_1 -> ... -f_q-> x_q`` as tuples ``(f_1, ..., f_q)`` (level 0
stores ``(x,)``).  ``d_i`` deletes ``x_i``; ``s_i`` repeats it.
"""
from __future__ import annotations

import csv
import os
from dataclasses import dataclass, field

import numpy as np
import sympy
from sympy.matrices.normalforms import invariant_factors as _sympy_invariant_factors

from .errors import CheckFailure, NotAGroupoid, SizeBudgetExceeded
from .fincat import GFinCat, fixed_subcategory, group_as_category, twisted_hom
from .report import Report

DEFAULT_QMAX = 3
DEFAULT_BUDGET = 200_000
MODEL_BUDGET = 20_000_000
GENERIC_LIMIT = 200


# --------------------------------------------------------------------------
# nerve


@dataclass
class SimplicialTruncation:
    category: GFinCat
    qmax: int
    levels: list
    faces: list = field(default_factory=list)    # faces[q][i]: level q -> level q-1
    degens: list = field(default_factory=list)   # degens[q][i]: level q -> level q+1

    def sizes(self):
        return [len(L) for L in self.levels]

    def is_degenerate(self, q, x):
        if q == 0:
            return False
        ids = set(self.category.identities)
        return any(f in ids for f in self.levels[q][x])


def chain_counts(C, qmax):
    """Number of composable ``q``-chains for ``q <= qmax``, without enumerating."""
    n = C.n_objects
    M = [[len(C.hom(a, b)) for b in range(n)] for a in range(n)]
    row = [1] * n        # chains ending at each object
    out = [n]
    for _ in range(qmax):
        row = [sum(row[a] * M[a][b] for a in range(n)) for b in range(n)]
        out.append(sum(row))
    return out


def nerve_truncated(C, qmax=DEFAULT_QMAX, budget=DEFAULT_BUDGET):
    counts = chain_counts(C, qmax)
    if max(counts) > budget:
        raise SizeBudgetExceeded(f"nerve level of {C.name or 'category'}", max(counts), budget)
    out_of = {}
    for m, s in enumerate(C.mor_src):
        out_of.setdefault(s, []).append(m)
    levels = [[(x,) for x in range(C.n_objects)]]
    if qmax >= 1:
        levels.append([(m,) for m in range(C.n_morphisms)])
    for q in range(2, qmax + 1):
        levels.append([ch + (m,) for ch in levels[-1] for m in out_of.get(C.mor_tgt[ch[-1]], ())])
    index = [{s: i for i, s in enumerate(L)} for L in levels]
    N = SimplicialTruncation(C, qmax, levels)
    N.faces = [None] + [[np.array([index[q - 1][_face(C, q, i, s)] for s in levels[q]], dtype=np.int64)
                         for i in range(q + 1)] for q in range(1, qmax + 1)]
    N.degens = [[np.array([index[q + 1][_degen(C, q, i, s)] for s in levels[q]], dtype=np.int64)
                 for i in range(q + 1)] for q in range(qmax)]
    return N


def _face(C, q, i, s):
    if q == 1:
        return (C.mor_tgt[s[0]],) if i == 0 else (C.mor_src[s[0]],)
    if i == 0:
        return s[1:]
    if i == q:
        return s[:-1]
    return s[:i - 1] + (C.compose[(s[i], s[i - 1])],) + s[i + 1:]


def _degen(C, q, i, s):
    if q == 0:
        return (C.identities[s[0]],)
    x = C.mor_src[s[i]] if i < q else C.mor_tgt[s[q - 1]]
    return s[:i] + (C.identities[x],) + s[i:]


def check_simplicial_identities(N):
    """Exhaustive check of the simplicial identities on the stored range."""
    rep = Report("simplicial identities", {"category": N.category.name, "qmax": N.qmax})
    d, s = N.faces, N.degens
    c = rep.new("d_i d_j = d_(j-1) d_i (i < j)", f"q <= {N.qmax}")
    for q in range(2, N.qmax + 1):
        for j in range(q + 1):
            for i in range(j):
                c.record(bool(np.array_equal(d[q - 1][i][d[q][j]], d[q - 1][j - 1][d[q][i]])), (q, i, j))
    c = rep.new("d_i s_j: s_(j-1) d_i, id, s_j d_(i-1)", f"q <= {N.qmax - 1}")
    for q in range(N.qmax):
        ident = np.arange(len(N.levels[q]))
        for j in range(q + 1):
            for i in range(q + 2):
                lhs = d[q + 1][i][s[q][j]]
                if i < j:
                    rhs = s[q - 1][j - 1][d[q][i]]
                elif i in (j, j + 1):
                    rhs = ident
                else:
                    rhs = s[q - 1][j][d[q][i - 1]]
                c.record(bool(np.array_equal(lhs, rhs)), (q, i, j))
    c = rep.new("s_i s_j = s_(j+1) s_i (i <= j)", f"q <= {N.qmax - 2}")
    for q in range(N.qmax - 1):
        for j in range(q + 1):
            for i in range(j + 1):
                c.record(bool(np.array_equal(s[q + 1][i][s[q][j]], s[q + 1][j + 1][s[q][i]])), (q, i, j))
    return rep


# --------------------------------------------------------------------------
# components and vertex groups


def check_groupoid(C):
    for f in range(C.n_morphisms):
        a, b = C.mor_src[f], C.mor_tgt[f]
        if not any(C.compose[(g, f)] == C.identities[a] and C.compose[(f, g)] == C.identities[b]
                   for g in C.hom(b, a)):
            raise NotAGroupoid(C.mor_labels[f])


def pi0_and_vertex(C):
    """``[(component objects, |Aut(least object)|)]`` ordered by least object."""
    check_groupoid(C)
    parent = list(range(C.n_objects))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in zip(C.mor_src, C.mor_tgt):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    comps = {}
    for x in range(C.n_objects):
        comps.setdefault(find(x), []).append(x)
    return [(tuple(xs), len(C.hom(xs[0], xs[0]))) for xs in sorted(comps.values())]


# --------------------------------------------------------------------------
# homology


@dataclass(frozen=True)
class AbelianGroup:
    rank: int
    torsion: tuple = ()

    def __str__(self):
        parts = ([f"Z^{self.rank}" if self.rank > 1 else "Z"] if self.rank else []) + \
            [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) if parts else "0"


def invariant_factors(M):
    """Nonzero diagonal of the Smith normal form of an integer matrix."""
    rows = [list(map(int, r)) for r in M]
    if not rows or not rows[0]:
        return []
    facs = _sympy_invariant_factors(sympy.Matrix(rows), domain=sympy.ZZ)
    return [abs(int(d)) for d in facs if d != 0]


def normalized_chains(N):
    """Nondegenerate simplices per level and the boundary matrices ``d_q``
    (rows: level ``q-1``, columns: level ``q``) for ``1 <= q <= qmax``."""
    keep = [[x for x in range(len(N.levels[q])) if not N.is_degenerate(q, x)] for q in range(N.qmax + 1)]
    pos = [{x: i for i, x in enumerate(k)} for k in keep]
    mats = [None]
    for q in range(1, N.qmax + 1):
        D = np.zeros((len(keep[q - 1]), len(keep[q])), dtype=np.int64)
        for col, x in enumerate(keep[q]):
            for i in range(q + 1):
                y = int(N.faces[q][i][x])
                if y in pos[q - 1]:
                    D[pos[q - 1][y], col] += (-1) ** i
        mats.append(D)
    return keep, mats


def homology(C, qmax=DEFAULT_QMAX, budget=DEFAULT_BUDGET, nerve=None):
    """``H_q`` of the normalized chains of the truncated nerve for ``q <= qmax - 1``,
    the range unaffected by truncation."""
    N = nerve or nerve_truncated(C, qmax, budget)
    keep, mats = normalized_chains(N)
    facs = [None] + [invariant_factors(D.tolist()) if D.size else [] for D in mats[1:]]
    out = []
    for q in range(qmax):
        r_in = len(facs[q]) if q else 0
        r_out = len(facs[q + 1])
        out.append(AbelianGroup(len(keep[q]) - r_in - r_out,
                                tuple(sorted(d for d in facs[q + 1] if d > 1))))
    return out


def dump_chains(C, qmax, directory, budget=DEFAULT_BUDGET):
    """Write ``boundary_q.csv`` (integer entries) for ``1 <= q <= qmax``; return the paths."""
    N = nerve_truncated(C, qmax, budget)
    _, mats = normalized_chains(N)
    os.makedirs(directory, exist_ok=True)
    paths = []
    for q in range(1, qmax + 1):
        p = os.path.join(directory, f"boundary_{q}.csv")
        with open(p, "w", newline="") as fh:
            csv.writer(fh).writerows(mats[q].tolist())
        paths.append(p)
    return paths


def euler_check(C, qmax=DEFAULT_QMAX, budget=DEFAULT_BUDGET):
    """Alternating sums of nondegenerate simplex counts and of homology ranks,
    for categories whose nerve has no nondegenerate simplices above ``qmax - 1``."""
    N = nerve_truncated(C, qmax, budget)
    keep, _ = normalized_chains(N)
    H = homology(C, qmax, nerve=N)
    simp = sum((-1) ** q * len(keep[q]) for q in range(qmax))
    ranks = sum((-1) ** q * h.rank for q, h in enumerate(H))
    return simp, ranks, len(keep[qmax]) == 0


def action_groupoid(X):
    """The translation groupoid of a G-set: objects ``X``, morphisms ``(g, x): x -> gx``."""
    G = X.group
    mors = [(g, x) for x in range(X.size) for g in G]
    mi = {m: i for i, m in enumerate(mors)}
    compose = {}
    for (g, x) in mors:
        y = X.action[g][x]
        for h in G:
            compose[(mi[(h, y)], mi[(g, x)])] = mi[(G.mul(h, g), x)]
    return GFinCat(tuple(range(X.size)), [x for _, x in mors], [X.action[g][x] for g, x in mors],
                   [mi[(G.identity_index, x)] for x in range(X.size)], compose, tuple(mors),
                   None, None, f"{G.name} // X")


# --------------------------------------------------------------------------
# fixed points of B(G, Pi)


class TwistedModel:
    """``Cat(G~, B Pi)`` with trivial action on ``Pi``, in normalized coordinates.

    A functor is ``F(x -> y) = a(y) a(x)^-1`` for a unique ``a : G -> Pi`` with
    ``a(e) = 1``; every hom-set is ``{eta_x = a'(x) c a(x)^-1 : c in Pi}``.  The
    conjugation action is ``(g a)(x) = a(g^-1 x) a(g^-1)^-1`` on objects and
    ``(g eta)_x = eta_(g^-1 x)`` on morphisms.  A morphism between ``H``-fixed
    objects is fixed iff ``kappa_a' = c kappa_a c^-1`` where
    ``kappa_a(h, x) = a(x)^-1 a(h^-1 x)``.
    """

    def __init__(self, G, Pi, budget=MODEL_BUDGET):
        self.G, self.Pi = G, Pi
        self.others = [g for g in G if g != G.identity_index]
        self.n = Pi.order ** len(self.others)
        if self.n > budget:
            raise SizeBudgetExceeded("functors G~ -> B Pi", self.n, budget)
        self.mul = np.array(Pi.table, dtype=np.int64)
        self.inv = np.array([Pi.inv(a) for a in Pi], dtype=np.int64)

    def objects(self, start, stop):
        """Rows ``a`` (columns indexed by ``G``) for object codes in ``[start, stop)``."""
        return self.decode(np.arange(start, stop, dtype=np.int64))

    def decode(self, codes):
        code = np.array(codes, dtype=np.int64)
        A = np.full((len(code), self.G.order), self.Pi.identity_index, dtype=np.int64)
        for g in reversed(self.others):
            A[:, g] = code % self.Pi.order
            code //= self.Pi.order
        return A

    def act(self, g, A):
        G = self.G
        gi = G.inv(g)
        cols = [G.mul(gi, x) for x in G]
        return self.mul[A[:, cols], self.inv[A[:, [gi]]]]

    def kappa(self, hs, A):
        G = self.G
        out = []
        for h in hs:
            hi = G.inv(h)
            cols = [G.mul(hi, x) for x in G]
            out.append(self.mul[self.inv[A], A[:, cols]])
        return np.concatenate(out, axis=1) if out else np.zeros((len(A), 0), dtype=np.int64)

    def _fixed_mask(self, g, chunk=1 << 20):
        cache = self.__dict__.setdefault("_masks", {})
        if g not in cache:
            parts = []
            for start in range(0, self.n, chunk):
                A = self.objects(start, min(self.n, start + chunk))
                parts.append(np.all(self.act(g, A) == A, axis=1))
            cache[g] = np.concatenate(parts)
        return cache[g]

    def fixed_objects(self, hs):
        ok = np.ones(self.n, dtype=bool)
        for h in hs:
            if h != self.G.identity_index:
                ok &= self._fixed_mask(h)
        return self.decode(np.flatnonzero(ok))

    def pi0_and_vertex(self, H):
        """Components and vertex orders of the ``H``-fixed subcategory."""
        hs = list(H.member_indices)
        Pi = self.Pi
        A = self.fixed_objects(hs)
        K, first = np.unique(self.kappa(hs, A), axis=0, return_index=True)
        conj = [self.mul[self.mul[c][K], self.inv[c]] for c in Pi]
        canon = {}
        for r in range(len(K)):
            key = min(tuple(conj[c][r].tolist()) for c in Pi)
            canon.setdefault(key, []).append(r)
        comps = []
        for rows in canon.values():
            r = rows[0]
            vertex = sum(1 for c in Pi if np.array_equal(conj[c][r], K[r]))
            comps.append((min(int(first[x]) for x in rows), vertex))
        return [v for _, v in sorted(comps)], len(A)


def bgpi_fixed_check(G, Pi, H, generic=None, budget=MODEL_BUDGET, model=None):
    """Components and vertex orders of ``Cat(G~, B Pi)^H`` against conjugacy
    classes of homomorphisms ``H -> Pi`` and their centralizers.

    The vectorized model handles every case; the generic construction through
    ``twisted_hom`` runs too when the functor count times ``|Pi|`` is at most
    ``GENERIC_LIMIT`` (or when ``generic`` is forced).
    """
    from .gsets import hom_classes
    rep = Report("verify fixedcat", {"group": G.name, "Pi": Pi.name, "H": list(H.member_indices)})
    model = model or TwistedModel(G, Pi, budget)
    verts, nfix = model.pi0_and_vertex(H)
    classes = hom_classes(H.as_group, Pi)
    expect = sorted(c for _, _, c in classes)
    dom = f"G = {G.name}, Pi = {Pi.name}, |H| = {H.order}, {nfix} fixed functors"
    rep.new("components = |H^1(H; Pi)|", dom).record(len(verts) == len(classes),
                                                     (len(verts), len(classes)))
    rep.new("vertex orders = centralizer orders", dom,
            note=f"vertex orders {sorted(verts)}").record(sorted(verts) == expect,
                                                              (sorted(verts), expect))
    if generic is None:
        generic = model.n * Pi.order <= GENERIC_LIMIT
    if generic:
        C, _ = twisted_hom(G, group_as_category(Pi))
        F = fixed_subcategory(C, H)
        pv = pi0_and_vertex(F)
        rep.new("generic twisted_hom agrees with the model",
                f"{C.n_objects} functors, {F.n_objects} fixed").record(
            sorted(v for _, v in pv) == sorted(verts) and F.n_objects == nfix,
            (sorted(v for _, v in pv), sorted(verts), F.n_objects, nfix))
    return rep


def fixedcat_check(G, Pi, strict=False, budget=MODEL_BUDGET):
    """``bgpi_fixed_check`` for every subgroup of ``G``."""
    from .groups import all_subgroups
    rep = Report("verify fixedcat", {"group": G.name, "Pi": Pi.name})
    model = TwistedModel(G, Pi, budget)
    for H in all_subgroups(G):
        rep.extend(bgpi_fixed_check(G, Pi, H, model=model))
    if strict and not rep.ok:
        raise CheckFailure(rep)
    return rep


__all__ = ["SimplicialTruncation", "nerve_truncated", "chain_counts", "check_simplicial_identities",
           "check_groupoid", "pi0_and_vertex", "AbelianGroup", "invariant_factors", "normalized_chains",
           "homology", "dump_chains", "euler_check", "action_groupoid", "TwistedModel",
           "bgpi_fixed_check", "fixedcat_check"]
