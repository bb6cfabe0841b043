"""Operads of chaotic categories: Barratt-Eccles and its genuine G-version.

Every component here is chaotic, so an operad is determined by its objects:
structure maps on morphisms are the unique ones.  Objects of the
Barratt-Eccles operad in arity ``j`` are permutations of ``range(j)``;
objects of the genuine version are functions ``G -> Sigma_j``, stored as
tuples of permutations indexed by group element.
"""
from __future__ import annotations

import random
from functools import reduce
from itertools import product
from math import prod

import numpy as np

from . import opcheck, perms
from .errors import SizeBudgetExceeded
from .fincat import GFinCat, chaotic
from .groups import symmetric_group
from .report import Report

DEFAULT_VERIFY_BUDGET = 50_000
DEFAULT_SAMPLES = 2_000
COMPONENT_BUDGET = 10**5
TABLE_LIMIT = 4_000_000


# --------------------------------------------------------------------------
# permutation calculus


def tensor_perm(s, t):
    """``s (x) t``: pair ``(q, r)`` at lexicographic position ``q*k + r`` goes to ``(s q, t r)``."""
    k = len(t)
    return tuple(s[q] * k + t[r] for q in range(len(s)) for r in range(k))


def tau_perm(j, k):
    """Send the lexicographic position of ``(q, r)`` in ``j x k`` to that of ``(r, q)`` in ``k x j``."""
    return tuple(r * j + q for q in range(j) for r in range(k))


def delta_perm(h, i):
    """Distributivity permutation for block sizes ``h`` (length j) and ``i`` (length k).

    Position ``p`` in the concatenation of the blocks ``h_q x i_r`` (blocks in
    lexicographic ``(q, r)`` order, each block lexicographic) is sent to the
    lexicographic position of the same pair in ``(sum h) x (sum i)``.
    """
    H, I = sum(h), sum(i)
    hoff = [sum(h[:q]) for q in range(len(h))]
    ioff = [sum(i[:r]) for r in range(len(i))]
    out = []
    for q in range(len(h)):
        for r in range(len(i)):
            for a in range(h[q]):
                for b in range(i[r]):
                    out.append((hoff[q] + a) * I + (ioff[r] + b))
    assert len(out) == H * I
    return tuple(out)


def block_gamma(s, ds):
    """Operad composition of permutations: permute the blocks by ``s`` after acting inside them."""
    return perms.compose(perms.block_perm(s, [len(d) for d in ds]), perms.block_sum(ds))


# --------------------------------------------------------------------------
# operads


class CatOperad:
    """Operad of chaotic categories, described by its objects.

    Subclasses provide scalar maps on objects (``gamma``, ``act`` for the right
    Sigma_j action, ``left`` for left translation by a permutation and, when a
    group acts, ``gact``) and their batch versions on object indices
    (``gamma_idx``, ``act_idx``, ``gact_idx``) used by verification.
    """

    group = None
    jmax = 0
    name = "operad"

    def objects(self, j):
        return (self.decode(j, i) for i in range(self.n_objects(j)))

    def component(self, j, budget=COMPONENT_BUDGET):
        """Component ``j`` as a chaotic category with its G action (if any).

        The Sigma_j action is attached as ``sigma_action``, written as a left
        action ``x -> x s^-1`` indexed like ``perms.all_perms(j)``.
        """
        n = self.n_objects(j)
        if n * n > budget:
            raise SizeBudgetExceeded(f"{self.name} component {j}", n * n, budget)
        objs = list(self.objects(j))
        idx = {x: i for i, x in enumerate(objs)}
        gact = None
        if self.group is not None:
            gact = [tuple(idx[self.gact(g, x)] for x in objs) for g in self.group]
        C = chaotic(objs, self.group, gact)
        C.name = f"{self.name}({j})"
        C.sigma_action = tuple(tuple(idx[self.act(x, perms.inverse(s))] for x in objs)
                               for s in perms.all_perms(j))
        return C


class BarrattEccles(CatOperad):
    def __init__(self, jmax=4):
        self.jmax = jmax
        self.name = "O"
        self._gtab = {}
        self._atab = {}

    def n_objects(self, j):
        return len(perms.all_perms(j))

    def decode(self, j, i):
        return perms.all_perms(j)[i]

    def encode(self, x):
        return perms.perm_index(len(x))[x]

    def random_object(self, j, rng):
        p = list(range(j))
        rng.shuffle(p)
        return tuple(p)

    def arity(self, x):
        return len(x)

    @property
    def unit(self):
        return (0,)

    def identity_object(self, j):
        return perms.identity(j)

    def act(self, x, s):
        return perms.compose(x, s)

    def left(self, s, x):
        return perms.compose(s, x)

    def gamma(self, c, ds):
        return block_gamma(c, ds)

    # batch maps on indices

    def gamma_table(self, k, js):
        key = (k, tuple(js))
        T = self._gtab.get(key)
        if T is None:
            shape = (self.n_objects(k),) + tuple(self.n_objects(a) for a in js)
            T = np.zeros(shape, dtype=np.int64)
            for t in np.ndindex(*shape):
                c = self.decode(k, t[0])
                ds = [self.decode(a, x) for a, x in zip(js, t[1:])]
                T[t] = self.encode(self.gamma(c, ds))
            self._gtab[key] = T
        return T

    def act_table(self, j):
        T = self._atab.get(j)
        if T is None:
            ps = perms.all_perms(j)
            pidx = perms.perm_index(j)
            T = np.array([[pidx[perms.compose(x, s)] for s in ps] for x in ps], dtype=np.int64)
            T = T.reshape(len(ps), len(ps))
            self._atab[j] = T
        return T

    def gamma_idx(self, k, js, C, Ds):
        return self.gamma_table(k, js)[(C,) + tuple(Ds)]

    def act_idx(self, j, X, S):
        return self.act_table(j)[X, S]


class GenuineOperad(CatOperad):
    """Objects in arity ``j`` are functions ``G -> Sigma_j``; ``G`` acts by
    ``(g phi)(h) = phi(g^-1 h)`` and Sigma_j by pointwise right multiplication.

    Object indices are base-``j!`` numerals whose digit ``h`` is the index of
    ``phi(h)``.
    """

    def __init__(self, G, jmax=3):
        self.group = G
        self.jmax = jmax
        self.name = f"O_{G.name}"
        self.base = BarrattEccles(jmax)
        self._gtab = {}

    def n_objects(self, j):
        return len(perms.all_perms(j)) ** self.group.order

    def _powers(self, j):
        return len(perms.all_perms(j)) ** np.arange(self.group.order, dtype=np.int64)

    def decode(self, j, i):
        F = len(perms.all_perms(j))
        out = []
        for _ in self.group:
            i, r = divmod(i, F)
            out.append(perms.all_perms(j)[r])
        return tuple(out)

    def encode(self, x):
        j = len(x[0])
        F = len(perms.all_perms(j))
        pidx = perms.perm_index(j)
        return sum(pidx[p] * F ** h for h, p in enumerate(x))

    def random_object(self, j, rng):
        ps = perms.all_perms(j)
        return tuple(rng.choice(ps) for _ in self.group)

    def arity(self, x):
        return len(x[0])

    @property
    def unit(self):
        return ((0,),) * self.group.order

    def identity_object(self, j):
        return (perms.identity(j),) * self.group.order

    def constant(self, s):
        return (tuple(s),) * self.group.order

    iota = constant

    def act(self, x, s):
        return tuple(perms.compose(p, s) for p in x)

    def left(self, s, x):
        return tuple(perms.compose(s, p) for p in x)

    def gact(self, g, x):
        G = self.group
        gi = G.inv(g)
        return tuple(x[G.mul(gi, h)] for h in G)

    def gamma(self, c, ds):
        return tuple(block_gamma(c[h], [d[h] for d in ds]) for h in self.group)

    # batch maps on indices

    def _coords(self, j, X):
        F = len(perms.all_perms(j))
        return (np.asarray(X, dtype=np.int64)[..., None] // self._powers(j)) % F

    def _enc(self, j, coords):
        return (coords * self._powers(j)).sum(axis=-1)

    def _gamma_coords(self, k, js, C, Ds):
        T = self.base.gamma_table(k, js)
        out = T[(self._coords(k, C),) + tuple(self._coords(a, d) for a, d in zip(js, Ds))]
        return self._enc(sum(js), out)

    def gamma_table(self, k, js):
        """Full index table for one arity pattern, or None past ``TABLE_LIMIT`` entries."""
        key = (k, tuple(js))
        if key not in self._gtab:
            shape = (self.n_objects(k),) + tuple(self.n_objects(a) for a in js)
            T = None
            if prod(shape) <= TABLE_LIMIT:
                grids = np.indices(shape, dtype=np.int64).reshape(len(shape), -1)
                T = self._gamma_coords(k, js, grids[0], list(grids[1:])).reshape(shape)
            self._gtab[key] = T
        return self._gtab[key]

    def gamma_idx(self, k, js, C, Ds):
        T = self.gamma_table(k, js)
        if T is not None:
            return T[(C,) + tuple(Ds)]
        return self._gamma_coords(k, js, C, Ds)

    def act_table(self, j):
        key = ("act", j)
        if key not in self._gtab:
            X = np.arange(self.n_objects(j), dtype=np.int64)
            S = np.arange(len(perms.all_perms(j)), dtype=np.int64)
            T = self.base.act_table(j)[self._coords(j, X)[:, None, :], S[None, :, None]]
            self._gtab[key] = self._enc(j, T)
        return self._gtab[key]

    def gact_table(self, j):
        key = ("gact", j)
        if key not in self._gtab:
            G = self.group
            X = self._coords(j, np.arange(self.n_objects(j), dtype=np.int64))
            rows = []
            for g in G:
                gi = G.inv(g)
                rows.append(self._enc(j, X[:, [G.mul(gi, h) for h in G]]))
            self._gtab[key] = np.stack(rows)
        return self._gtab[key]

    def act_idx(self, j, X, S):
        return self.act_table(j)[X, S]

    def gact_idx(self, j, g, X):
        return self.gact_table(j)[g][X]


def barratt_eccles(jmax=4):
    return BarrattEccles(jmax)


def og_operad(G, jmax=3, budget=None):
    op = GenuineOperad(G, jmax)
    if budget is not None and op.n_objects(jmax) > budget:
        raise SizeBudgetExceeded(f"O_{G.name}({jmax}) objects", op.n_objects(jmax), budget)
    return op


class MutatedOperad(CatOperad):
    """``base`` with the value of gamma on one input replaced; for exercising failure reports."""

    def __init__(self, base, c, ds, value=None):
        self.base_op = base
        self.key = (c, tuple(ds))
        if value is None:
            out = base.gamma(c, ds)
            n = base.arity(out)
            swap = perms.from_cycles(n, (1, 2)) if n >= 2 else perms.identity(n)
            value = base.act(out, swap)
        self.value = value
        self.group, self.jmax, self.name = base.group, base.jmax, base.name + "*"

    def __getattr__(self, item):
        return getattr(self.base_op, item)

    def gamma(self, c, ds):
        if (c, tuple(ds)) == self.key:
            return self.value
        return self.base_op.gamma(c, ds)

    def gamma_idx(self, k, js, C, Ds):
        out = np.array(self.base_op.gamma_idx(k, js, C, Ds))
        c, ds = self.key
        b = self.base_op
        if b.arity(c) == k and tuple(b.arity(d) for d in ds) == tuple(js):
            mask = np.asarray(C) == b.encode(c)
            for D, d in zip(Ds, ds):
                mask &= np.asarray(D) == b.encode(d)
            out[mask] = b.encode(self.value)
        return out


def corrupt_gamma(op, c, ds, value=None):
    return MutatedOperad(op, c, ds, value)


def verify_operad(op, jmax=None, budget=None, samples=None, seed=0):
    """Check the operad axioms; see ``opcheck.verify_operad_batch``."""
    return opcheck.verify_operad_batch(op, jmax, budget or opcheck.DEFAULT_BUDGET,
                                       samples or opcheck.DEFAULT_SAMPLES, seed)


# --------------------------------------------------------------------------
# scalar domains, used for pairings


def compositions(total_max, parts):
    """All tuples of ``parts`` non-negative integers with sum at most ``total_max``."""
    if parts == 0:
        yield ()
        return
    for first in range(total_max + 1):
        for rest in compositions(total_max - first, parts - 1):
            yield (first,) + rest


class _Domain:
    """Iterate a product of object/permutation factors exhaustively or by sampling."""

    def __init__(self, factors, budget, samples, rng):
        # factors: list of (count, enumerate(), sample(rng))
        self.factors = factors
        self.size = reduce(lambda a, f: a * f[0], factors, 1)
        self.exhaustive = self.size <= budget
        self.samples = samples
        self.rng = rng

    def __iter__(self):
        if self.exhaustive:
            yield from product(*[list(f[1]()) for f in self.factors])
        else:
            for _ in range(self.samples):
                yield tuple(f[2](self.rng) for f in self.factors)


def _obj_factor(op, j):
    return (op.n_objects(j), lambda: op.objects(j), lambda rng: op.random_object(j, rng))


def _perm_factor(j):
    ps = perms.all_perms(j)
    return (len(ps), lambda: ps, lambda rng: rng.choice(ps))


def _group_factor(G):
    return (G.order, lambda: range(G.order), lambda rng: rng.randrange(G.order))


class _LawAccumulator:
    def __init__(self, report, law, domain):
        self.check = report.new(law, domain)
        self.sampled = False

    def run(self, dom, test):
        if not dom.exhaustive:
            self.sampled = True
            self.check.mode = "sampled"
        for t in dom:
            ok, w = test(t)
            self.check.record(ok, w)


# --------------------------------------------------------------------------
# Lambda-fixed objects and the orbit model


def lambda_fixed_objects(op, j, Lam):
    """Objects of ``op(j)`` fixed by ``Lam``, a subgroup of ``Sigma_j x G``
    (element ``s * |G| + g``) acting by ``(s, g) phi = g phi s^-1``."""
    G = op.group
    S = symmetric_group(j)
    elts = [(S.perms[e // G.order], e % G.order) for e in Lam.member_indices]
    return [x for x in op.objects(j)
            if all(op.gact(g, op.act(x, perms.inverse(s))) == x for s, g in elts)]


def _norm_act(G, alpha, g):
    """``(g alpha)(h) = alpha(g^-1 h) alpha(g^-1)^-1`` on normalized functions."""
    gi = G.inv(g)
    a = perms.inverse(alpha[gi])
    return tuple(perms.compose(alpha[G.mul(gi, h)], a) for h in G)


def _label_act(G, alpha, beta, s, g):
    gi = G.inv(g)
    return perms.compose(perms.compose(beta[gi], s), perms.inverse(alpha[gi]))


def normalized_functions(G, j):
    """Functions ``alpha: G -> Sigma_j`` with ``alpha(e) = e``, in lexicographic order."""
    e = G.identity_index
    ps = perms.all_perms(j)
    for rest in product(ps, repeat=G.order - 1):
        yield rest[:e] + (perms.identity(j),) + rest[e:]


def og_quotient(G, j, budget=COMPONENT_BUDGET):
    """The orbit category ``O_G(j)/Sigma_j`` in normalized form.

    Objects are the functions ``alpha`` with ``alpha(e) = e``; every ``s`` in
    Sigma_j is a morphism ``alpha -> beta`` and composition multiplies labels.
    ``g`` acts on labels by ``s -> beta(g^-1) s alpha(g^-1)^-1``.
    Morphism labels are ``(alpha index, beta index, s)``.
    """
    objs = list(normalized_functions(G, j))
    n, f = len(objs), len(perms.all_perms(j))
    if n * n * f > budget:
        raise SizeBudgetExceeded(f"O_{G.name}({j})/Sigma_{j}", n * n * f, budget)
    oidx = {a: i for i, a in enumerate(objs)}
    pidx = perms.perm_index(j)
    ps = perms.all_perms(j)
    # morphism (a, b, s) has index (b * n + a) * f + s
    mid = lambda a, b, s: (b * n + a) * f + s
    src, tgt, labels = [], [], []
    for b in range(n):
        for a in range(n):
            for s in range(f):
                src.append(a)
                tgt.append(b)
                labels.append((a, b, ps[s]))
    compose = {}
    for a in range(n):
        for b in range(n):
            for c in range(n):
                for s in range(f):
                    for t in range(f):
                        compose[(mid(b, c, t), mid(a, b, s))] = mid(a, c, pidx[perms.compose(ps[t], ps[s])])
    ids = [mid(a, a, 0) for a in range(n)]
    action = []
    for g in G:
        op = tuple(oidx[_norm_act(G, objs[a], g)] for a in range(n))
        mp = [0] * (n * n * f)
        for b in range(n):
            for a in range(n):
                for s in range(f):
                    s2 = pidx[_label_act(G, objs[a], objs[b], ps[s], g)]
                    mp[mid(a, b, s)] = mid(op[a], op[b], s2)
        action.append((op, tuple(mp)))
    return GFinCat(tuple(objs), src, tgt, ids, compose, tuple(labels), G, tuple(action),
                   f"O_{G.name}({j})/Sigma_{j}")


def og_quotient_fixed(G, j, H):
    """The ``H``-fixed subcategory of ``O_G(j)/Sigma_j`` built directly.

    Fixed objects are the normalized ``alpha`` with ``h alpha = alpha`` for
    ``h`` in ``H``; a label ``s: alpha -> beta`` between fixed objects is fixed
    when ``beta(h^-1) s alpha(h^-1)^-1 = s``.
    """
    hs = H.member_indices
    objs = [a for a in normalized_functions(G, j) if all(_norm_act(G, a, h) == a for h in hs)]
    ps = perms.all_perms(j)
    mors = []
    for ai, a in enumerate(objs):
        for bi, b in enumerate(objs):
            for s in ps:
                if all(_label_act(G, a, b, s, h) == s for h in hs):
                    mors.append((ai, bi, s))
    mi = {m: i for i, m in enumerate(mors)}
    out = {}
    for m in mors:
        out.setdefault(m[0], []).append(m)
    compose = {}
    for f_ in mors:
        for g_ in out.get(f_[1], ()):
            compose[(mi[g_], mi[f_])] = mi[(f_[0], g_[1], perms.compose(g_[2], f_[2]))]
    ids = [mi[(a, a, perms.identity(j))] for a in range(len(objs))]
    return GFinCat(tuple(objs), [m[0] for m in mors], [m[1] for m in mors], ids, compose,
                   tuple(mors), name=f"(O_{G.name}({j})/Sigma_{j})^{H.order}")


def og_quotient_and_fixed(G, j, H, budget=COMPONENT_BUDGET):
    """The normalized quotient and its ``H``-fixed subcategory.

    When ``H`` is the whole group the fixed objects are checked to be exactly
    the anti-homomorphisms ``G -> Sigma_j``; this raises CheckFailure otherwise.
    """
    from .errors import CheckFailure
    from .groups import anti_homomorphisms
    Q = og_quotient(G, j, budget)
    F = og_quotient_fixed(G, j, H)
    if H.order == G.order:
        S = symmetric_group(j)
        anti = {tuple(S.perms[x] for x in a) for a in anti_homomorphisms(G, S)}
        if set(F.objects) != anti:
            rep = Report("og quotient fixed objects")
            rep.new("fixed objects are anti-homomorphisms", f"{G.name}, j={j}").record(
                False, sorted(set(F.objects) ^ anti)[:3])
            raise CheckFailure(rep)
    return Q, F


# --------------------------------------------------------------------------
# pairings


class PairingVal:
    """A pairing ``(left, right) -> target`` given on objects by ``box``."""

    def __init__(self, left, right, target, box, name="pairing"):
        self.left, self.right, self.target = left, right, target
        self.box = box
        self.name = name

    def __call__(self, c, d):
        return self.box(c, d)


def pairing_BE(jmax=3):
    O = barratt_eccles(jmax * jmax)
    return PairingVal(O, O, O, tensor_perm, "O x O -> O")


def pairing_OG(G, jmax=3):
    O = og_operad(G, jmax * jmax)
    return PairingVal(O, O, O, lambda c, d: tuple(tensor_perm(a, b) for a, b in zip(c, d)),
                      f"O_{G.name} x O_{G.name} -> O_{G.name}")


def corrupt_pairing(P, c, d):
    """``P`` with the image of ``(c, d)`` changed by swapping its first two points."""
    base = P.box
    T = P.target

    def box(x, y):
        out = base(x, y)
        if (x, y) == (c, d):
            return T.act(out, perms.from_cycles(T.arity(out), (1, 2)))
        return out

    return PairingVal(P.left, P.right, P.target, box, P.name + "*")


def verify_pairing(P, jmax=3, cap=6, budget=DEFAULT_VERIFY_BUDGET, samples=DEFAULT_SAMPLES,
                   seed=0, perm_jmax=3):
    """Check the pairing axioms.

    Equivariance uses arities ``j, k <= jmax``; distributivity uses ``j, k <= jmax``
    and block sizes with ``(sum h)(sum i) <= cap``; permutativity (when the three
    operads coincide) uses ``j, k <= perm_jmax``.
    """
    L, R, T = P.left, P.right, P.target
    rng = random.Random(seed)
    rep = Report("verify pairing", {"pairing": P.name, "jmax": jmax, "cap": cap,
                                    "perm_jmax": perm_jmax, "budget": budget,
                                    "samples": samples, "seed": seed})
    dom = lambda fs: _Domain(fs, budget, samples, rng)

    acc = _LawAccumulator(rep, "(i) c mu [x] d nu = (c [x] d)(mu (x) nu)", f"j, k <= {jmax}")
    for j in range(jmax + 1):
        for k in range(jmax + 1):
            fs = [_obj_factor(L, j), _obj_factor(R, k), _perm_factor(j), _perm_factor(k)]
            acc.run(dom(fs), lambda t: (P(L.act(t[0], t[2]), R.act(t[1], t[3]))
                                        == T.act(P(t[0], t[1]), tensor_perm(t[2], t[3])), t))

    ok = P(L.unit, R.unit) == T.unit
    rep.new("(ii) id [x] id = id", "j = k = 1").record(ok, (L.unit, R.unit))

    if P.box is tensor_perm and all(isinstance(O, BarrattEccles) for O in (L, R, T)):
        opcheck.distributivity_batch(rep, jmax, cap, delta_perm, tensor_perm)
        return _pairing_monoidal_laws(rep, P, jmax, perm_jmax, dom)
    acc = _LawAccumulator(rep, "(iii) gamma(c [x] d; c_q [x] d_r) delta = gamma(c; c_q) [x] gamma(d; d_r)",
                          f"j, k <= {jmax}, (sum h)(sum i) <= {cap}")
    for j in range(jmax + 1):
        for k in range(jmax + 1):
            for hs in compositions(cap, j):
                for is_ in compositions(cap, k):
                    if sum(hs) * sum(is_) > cap:
                        continue
                    dl = delta_perm(hs, is_)
                    fs = ([_obj_factor(L, j), _obj_factor(R, k)] + [_obj_factor(L, a) for a in hs]
                          + [_obj_factor(R, b) for b in is_])

                    def test(t, j=j, k=k, dl=dl):
                        c, d, cs, ds = t[0], t[1], t[2:2 + j], t[2 + j:]
                        inner = [P(cq, dr) for cq in cs for dr in ds]
                        lhs = T.act(T.gamma(P(c, d), inner), dl)
                        rhs = P(L.gamma(c, cs), R.gamma(d, ds))
                        return lhs == rhs, t

                    acc.run(dom(fs), test)

    return _pairing_monoidal_laws(rep, P, jmax, perm_jmax, dom)


def _pairing_monoidal_laws(rep, P, jmax, perm_jmax, dom):
    L, T = P.left, P.target
    if L is P.right is T:
        acc = _LawAccumulator(rep, "unital: id_1 [x] d = d = d [x] id_1", f"arity <= {perm_jmax}")
        for j in range(perm_jmax + 1):
            acc.run(dom([_obj_factor(L, j)]),
                    lambda t: (P(L.unit, t[0]) == t[0] and P(t[0], L.unit) == t[0], t))

        acc = _LawAccumulator(rep, "associative: (a [x] b) [x] c = a [x] (b [x] c)", f"arities <= {jmax}")
        for i in range(jmax + 1):
            for j in range(jmax + 1):
                for k in range(jmax + 1):
                    fs = [_obj_factor(L, i), _obj_factor(L, j), _obj_factor(L, k)]
                    acc.run(dom(fs), lambda t: (P(P(t[0], t[1]), t[2]) == P(t[0], P(t[1], t[2])), t))

        acc = _LawAccumulator(rep, "permutative: c [x] d = (d [x] c) tau(j,k)", f"j, k <= {perm_jmax}")
        for j in range(perm_jmax + 1):
            for k in range(perm_jmax + 1):
                tau = tau_perm(j, k)
                fs = [_obj_factor(L, j), _obj_factor(L, k)]
                acc.run(dom(fs), lambda t, tau=tau: (P(t[0], t[1]) == T.act(P(t[1], t[0]), tau),
                                                     (t[0], t[1])))
        acc.check.note = ("holds only up to the unique isomorphism in the chaotic target; "
                          "see the conjugation form")

        acc = _LawAccumulator(rep, "permutative up to conjugation: tau(j,k) (c [x] d) = (d [x] c) tau(j,k)",
                              f"j, k <= {perm_jmax}")
        for j in range(perm_jmax + 1):
            for k in range(perm_jmax + 1):
                tau = tau_perm(j, k)
                fs = [_obj_factor(L, j), _obj_factor(L, k)]
                acc.run(dom(fs), lambda t, tau=tau: (T.left(tau, P(t[0], t[1])) == T.act(P(t[1], t[0]), tau),
                                                     (t[0], t[1])))
    return rep
