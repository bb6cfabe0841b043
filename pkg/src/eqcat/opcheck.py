"""Vectorized verification of operad laws on integer-indexed objects.

Object ``i`` of arity ``j`` is ``op.decode(j, i)``.  The batch structure maps
(``gamma_idx``, ``act_idx``, ``gact_idx``) are lookup tables filled from the
scalar maps, and one of the checked laws confirms the two agree.
"""
from __future__ import annotations

from math import prod

import numpy as np

from . import perms
from .report import FAIL, Report

DEFAULT_BUDGET = 2_000_000
DEFAULT_SAMPLES = 2_000
CHUNK = 1 << 19


def compositions(total_max, parts):
    """All tuples of ``parts`` non-negative integers with sum at most ``total_max``."""
    if parts == 0:
        yield ()
        return
    for first in range(total_max + 1):
        for rest in compositions(total_max - first, parts - 1):
            yield (first,) + rest


class _Law:
    def __init__(self, report, law, domain):
        self.check = report.new(law, domain)
        self.sampled_patterns = 0
        self.patterns = 0

    def run(self, sizes, budget, samples, rng, test, describe):
        """``test(cols)`` returns a boolean array (True = law holds) for the rows
        given by the factor index arrays ``cols``; ``describe(row)`` decodes a row."""
        self.patterns += 1
        total = prod(sizes)
        c = self.check
        if total <= budget:
            for start in range(0, total, CHUNK):
                idx = np.arange(start, min(total, start + CHUNK), dtype=np.int64)
                cols = []
                for s in reversed(sizes):
                    cols.append(idx % s)
                    idx = idx // s
                self._consume(cols[::-1], test, describe)
        else:
            self.sampled_patterns += 1
            c.mode = "sampled"
            cols = [rng.integers(0, s, samples, dtype=np.int64) for s in sizes]
            self._consume(cols, test, describe)
        if self.sampled_patterns:
            c.note = (f"{self.sampled_patterns} of {self.patterns} arity patterns "
                      f"exceed the budget and were sampled")

    def _consume(self, cols, test, describe):
        c = self.check
        ok = np.asarray(test(cols), dtype=bool)
        n = len(ok) if ok.ndim else 1
        c.checked += n
        bad = np.flatnonzero(~ok)
        if len(bad):
            c.status = FAIL
            c.failures += len(bad)
            for b in bad[:max(0, 10 - len(c.witnesses))]:
                w = describe([int(col[b]) for col in cols])
                if c.witness is None:
                    c.witness = w
                c.witnesses.append(w)


def verify_operad_batch(op, jmax=None, budget=DEFAULT_BUDGET, samples=DEFAULT_SAMPLES, seed=0):
    """Check unit, associativity, Sigma- and G-equivariance and freeness.

    Each arity pattern is checked on every object tuple when the tuple count
    is at most ``budget`` and on ``samples`` seeded random tuples otherwise;
    the report says which.
    """
    jmax = op.jmax if jmax is None else jmax
    rng = np.random.default_rng(seed)
    rep = Report("verify operad", {"operad": op.name, "jmax": jmax, "budget": budget,
                                   "samples": samples, "seed": seed})
    n = op.n_objects
    dec = op.decode
    run = lambda law, sizes, test, describe: law.run(sizes, budget, samples, rng, test, describe)

    law = _Law(rep, "unit: gamma(1; c) = c", f"arity <= {jmax}")
    for j in range(jmax + 1):
        run(law, [n(j)],
            lambda cols, j=j: op.gamma_idx(1, (j,), np.zeros_like(cols[0]), [cols[0]]) == cols[0],
            lambda row, j=j: dec(j, row[0]))

    law = _Law(rep, "unit: gamma(c; 1,...,1) = c", f"arity <= {jmax}")
    for j in range(jmax + 1):
        run(law, [n(j)],
            lambda cols, j=j: op.gamma_idx(j, (1,) * j, cols[0], [np.zeros_like(cols[0])] * j) == cols[0],
            lambda row, j=j: dec(j, row[0]))

    law = _Law(rep, "associativity", f"arity sums <= {jmax}")
    for k in range(jmax + 1):
        for js in compositions(jmax, k):
            m = sum(js)
            for is_ in compositions(jmax, m):
                sizes = [n(k)] + [n(a) for a in js] + [n(b) for b in is_]

                def test(cols, k=k, js=js, is_=is_, m=m):
                    C, D, E = cols[0], cols[1:1 + k], cols[1 + k:]
                    lhs = op.gamma_idx(m, is_, op.gamma_idx(k, js, C, D), E)
                    F, fa, pos = [], [], 0
                    for s in range(k):
                        sl = is_[pos:pos + js[s]]
                        F.append(op.gamma_idx(js[s], sl, D[s], E[pos:pos + js[s]]))
                        fa.append(sum(sl))
                        pos += js[s]
                    return lhs == op.gamma_idx(k, tuple(fa), C, F)

                def describe(row, k=k, js=js, is_=is_):
                    ar = [k] + list(js) + list(is_)
                    return [dec(a, x) for a, x in zip(ar, row)]

                run(law, sizes, test, describe)

    law = _Law(rep, "equivariance: gamma(c s; d) = gamma(c; d_{s^-1}) s(j_1..j_k)", f"arities <= {jmax}")
    for k in range(jmax + 1):
        for js in compositions(jmax, k):
            sizes = [n(k), len(perms.all_perms(k))] + [n(a) for a in js]
            m = sum(js)
            pidx = perms.perm_index(m)

            def test(cols, k=k, js=js, m=m, pidx=pidx):
                C, S, D = cols[0], cols[1], cols[2:]
                out = np.ones(len(C), dtype=bool)
                for si_, s in enumerate(perms.all_perms(k)):
                    rows = np.flatnonzero(S == si_)
                    if not len(rows):
                        continue
                    inv = perms.inverse(s)
                    Dr = [d[rows] for d in D]
                    lhs = op.gamma_idx(k, js, op.act_idx(k, C[rows], si_), Dr)
                    js2 = tuple(js[inv[x]] for x in range(k))
                    inner = op.gamma_idx(k, js2, C[rows], [Dr[inv[x]] for x in range(k)])
                    rhs = op.act_idx(m, inner, pidx[perms.block_perm(s, js)])
                    out[rows] = lhs == rhs
                return out

            run(law, sizes, test,
                lambda row, k=k, js=js: [dec(k, row[0]), perms.all_perms(k)[row[1]]]
                + [dec(a, x) for a, x in zip(js, row[2:])])

    law = _Law(rep, "equivariance: gamma(c; d_1 t_1, ...) = gamma(c; d)(t_1 + ... + t_k)", f"arities <= {jmax}")
    for k in range(jmax + 1):
        for js in compositions(jmax, k):
            m = sum(js)
            sizes = [n(k)] + [n(a) for a in js] + [len(perms.all_perms(a)) for a in js]
            bs = _block_sum_table(js)

            def test(cols, k=k, js=js, m=m, bs=bs):
                C, D, T = cols[0], cols[1:1 + k], cols[1 + k:]
                lhs = op.gamma_idx(k, js, C, [op.act_idx(a, d, t) for a, d, t in zip(js, D, T)])
                tsum = bs[tuple(T)] if k else np.zeros_like(C)
                return lhs == op.act_idx(m, op.gamma_idx(k, js, C, D), tsum)

            run(law, sizes, test,
                lambda row, k=k, js=js: [dec(k, row[0])] + [dec(a, x) for a, x in zip(js, row[1:1 + k])]
                + [perms.all_perms(a)[x] for a, x in zip(js, row[1 + k:])])

    if op.group is not None:
        G = op.group
        law = _Law(rep, "G-equivariance: gamma(g c; g d) = g gamma(c; d)", f"arities <= {jmax}")
        for k in range(jmax + 1):
            for js in compositions(jmax, k):
                m = sum(js)
                sizes = [G.order, n(k)] + [n(a) for a in js]

                def test(cols, k=k, js=js, m=m):
                    Gc, C, D = cols[0], cols[1], cols[2:]
                    out = np.ones(len(C), dtype=bool)
                    for g in G:
                        rows = np.flatnonzero(Gc == g)
                        if not len(rows):
                            continue
                        Dr = [d[rows] for d in D]
                        lhs = op.gamma_idx(k, js, op.gact_idx(k, g, C[rows]),
                                           [op.gact_idx(a, g, d) for a, d in zip(js, Dr)])
                        out[rows] = lhs == op.gact_idx(m, g, op.gamma_idx(k, js, C[rows], Dr))
                    return out

                run(law, sizes, test,
                    lambda row, k=k, js=js: [G.elements[row[0]], dec(k, row[1])]
                    + [dec(a, x) for a, x in zip(js, row[2:])])

        law = _Law(rep, "G commutes with Sigma: g(c s) = (g c) s", f"arity <= {jmax}")
        for j in range(jmax + 1):
            sizes = [G.order, n(j), len(perms.all_perms(j))]

            def test(cols, j=j):
                Gc, X, S = cols
                out = np.ones(len(X), dtype=bool)
                for g in G:
                    rows = np.flatnonzero(Gc == g)
                    lhs = op.gact_idx(j, g, op.act_idx(j, X[rows], S[rows]))
                    out[rows] = lhs == op.act_idx(j, op.gact_idx(j, g, X[rows]), S[rows])
                return out

            run(law, sizes, test, lambda row, j=j: [G.elements[row[0]], dec(j, row[1]), perms.all_perms(j)[row[2]]])

    law = _Law(rep, "Sigma_j acts freely on objects", f"arity <= {jmax}")
    for j in range(jmax + 1):
        run(law, [n(j), len(perms.all_perms(j))],
            lambda cols, j=j: (op.act_idx(j, cols[0], cols[1]) == cols[0]) == (cols[1] == 0),
            lambda row, j=j: [dec(j, row[0]), perms.all_perms(j)[row[1]]])

    law = _Law(rep, "batch tables agree with scalar composition", f"arity sums <= {jmax}")
    srng = np.random.default_rng(seed + 1)
    for k in range(jmax + 1):
        for js in compositions(jmax, k):
            sizes = [n(k)] + [n(a) for a in js]
            cols = [srng.integers(0, s, 16, dtype=np.int64) for s in sizes]
            batch = op.gamma_idx(k, js, cols[0], cols[1:])
            for r in range(16):
                c = dec(k, int(cols[0][r]))
                ds = [dec(a, int(col[r])) for a, col in zip(js, cols[1:])]
                law.check.record(op.encode(op.gamma(c, ds)) == int(batch[r]), [c] + ds)
    law.check.mode = "sampled"
    law.check.note = "16 random tuples per arity pattern"
    return rep


def _block_sum_table(js):
    """``T[t_1, ..., t_k]`` = index of ``t_1 + ... + t_k`` in Sigma_{sum js}."""
    if not js:
        return None
    shape = tuple(len(perms.all_perms(a)) for a in js)
    pidx = perms.perm_index(sum(js))
    T = np.zeros(shape, dtype=np.int64)
    for t in np.ndindex(*shape):
        T[t] = pidx[perms.block_sum([perms.all_perms(a)[x] for a, x in zip(js, t)])]
    return T


# --------------------------------------------------------------------------
# pairing distributivity on permutations, vectorized


def _perm_rows(n):
    return np.array(perms.all_perms(n), dtype=np.int64).reshape(len(perms.all_perms(n)), n)


def _compose_rows(p, q):
    """Row-wise ``p o q`` for a single permutation ``p``."""
    return p[q]


def _tensor_rows(s, t):
    k = t.shape[1]
    return (s[:, :, None] * k + t[:, None, :]).reshape(len(s), -1)


def _block_sum_rows(blocks, n):
    out, off = [], 0
    for b in blocks:
        out.append(b + off)
        off += b.shape[1]
    return np.concatenate(out, axis=1) if out else np.zeros((n, 0), dtype=np.int64)


def _product_rows(factors):
    """Row-aligned arrays enumerating the product of the given row tables."""
    sizes = [len(f) for f in factors]
    total = prod(sizes)
    idx = np.arange(total, dtype=np.int64)
    cols = []
    for s in reversed(sizes):
        cols.append(idx % s)
        idx = idx // s
    return [f[c] for f, c in zip(factors, cols[::-1])], total


def distributivity_batch(rep, jmax, cap, delta_perm, tensor_perm):
    """Pairing distributivity for permutations ``c [x] d = c (x) d``, literal and
    conjugated forms, exhaustive over all ``j, k <= jmax`` and block sizes with
    ``(sum h)(sum i) <= cap``."""
    dom = f"j, k <= {jmax}, (sum h)(sum i) <= {cap}"
    lit = _Law(rep, "(iii) gamma(c [x] d; c_q [x] d_r) delta = gamma(c; c_q) [x] gamma(d; d_r)", dom)
    con = _Law(rep, "(iii) up to conjugation: delta(h', i') gamma(c [x] d; c_q [x] d_r) "
                    "delta(h, i)^-1 = gamma(c; c_q) [x] gamma(d; d_r)", dom)
    for j in range(jmax + 1):
        for k in range(jmax + 1):
            for hs in compositions(cap, j):
                for is_ in compositions(cap, k):
                    if sum(hs) * sum(is_) > cap:
                        continue
                    _distributivity_pattern(lit, con, j, k, hs, is_, delta_perm, tensor_perm)
    lit.check.note = "holds only up to conjugation; see the conjugation form"


def _distributivity_pattern(lit, con, j, k, hs, is_, delta_perm, tensor_perm):
    inner, n = _product_rows([_perm_rows(a) for a in hs] + [_perm_rows(b) for b in is_])
    cs, ds = inner[:j], inner[j:]
    dl = np.array(delta_perm(hs, is_), dtype=np.int64)
    dinv = np.array(perms.inverse(tuple(dl)), dtype=np.int64)
    pairs = [_tensor_rows(a, b) for a in cs for b in ds]
    psizes = [a * b for a in hs for b in is_]
    for c in perms.all_perms(j):
        left = np.array(perms.block_perm(c, list(hs)), dtype=np.int64)
        gc = _compose_rows(left, _block_sum_rows(cs, n)) if j else np.zeros((n, 0), dtype=np.int64)
        ci = perms.inverse(c)
        for d in perms.all_perms(k):
            gd = _compose_rows(np.array(perms.block_perm(d, list(is_)), dtype=np.int64),
                               _block_sum_rows(ds, n)) if k else np.zeros((n, 0), dtype=np.int64)
            rhs = _tensor_rows(gc, gd)
            cd = np.array(perms.block_perm(tensor_perm(c, d), psizes), dtype=np.int64)
            x = _compose_rows(cd, _block_sum_rows(pairs, n)) if pairs else np.zeros((n, 0), dtype=np.int64)
            di = perms.inverse(d)
            dl2 = np.array(delta_perm([hs[ci[q]] for q in range(j)], [is_[di[r]] for r in range(k)]),
                           dtype=np.int64)

            def describe(row, c=c, d=d, cs=cs, ds=ds):
                r = row[0]
                return [list(c), list(d)] + [a[r].tolist() for a in cs] + [b[r].tolist() for b in ds]

            lit.run([n], n, 0, None,
                    lambda cols, x=x, rhs=rhs: np.all(x[:, dl][cols[0]] == rhs[cols[0]], axis=1),
                    describe)
            conj = dl2[x][:, dinv] if x.shape[1] else x
            con.run([n], n, 0, None,
                    lambda cols, conj=conj, rhs=rhs: np.all(conj[cols[0]] == rhs[cols[0]], axis=1),
                    describe)
