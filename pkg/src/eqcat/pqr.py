"""Injection operads on a countable G-universe, the finite-sets category
and its comparison with the free algebra.

The universe ``U`` is the disjoint union of countably many copies of every
orbit ``G/H`` (one ``H`` per conjugacy class).  A point is a triple
``(class index, copy, coset index)``.  Points are well-ordered copy-major, so
the order has type omega and ``rank`` is a bijection ``U -> N``.

Operad objects are expression trees (``Expr``) evaluated pointwise, and every
law is checked extensionally on finite samples.  Copower points (``^jU``) are
pairs ``(i, u)``, power points (``U^j``) are tuples.
"""
from __future__ import annotations

from itertools import product
from math import comb

import numpy as np

from . import perms
from .errors import ShapeMismatch
from .groups import subgroup_classes
from .gsets import coset_space

DEFAULT_DEPTH = 3
DEFAULT_SAMPLES = 500


# --------------------------------------------------------------------------
# the universe


class Universe:
    """Lazily enumerable ``U = coprod_(H) G/H x N`` for one group ``G``.

    Holds the memo tables of every orbit matcher built on it, so a handle
    should be used from one thread at a time.
    """

    def __init__(self, G, depth=DEFAULT_DEPTH):
        if depth < 1:
            raise ValueError("depth must be at least 1")
        self.group = G
        self.depth = depth
        self.classes = subgroup_classes(G)
        self.cosets = [coset_space(c.representative) for c in self.classes]
        self.sizes = [c.size for c in self.cosets]
        self.offsets = [sum(self.sizes[:i]) for i in range(len(self.sizes))]
        self.period = sum(self.sizes)
        self.basepoint = (len(self.classes) - 1, 0, 0)
        self._matchers = {}

    # points
    def act(self, g, u):
        c, n, k = u
        return (c, n, self.cosets[c].action[g][k])

    def rank(self, u):
        c, n, k = u
        return n * self.period + self.offsets[c] + k

    def point(self, r):
        n, r = divmod(r, self.period)
        for c in range(len(self.sizes) - 1, -1, -1):
            if r >= self.offsets[c]:
                return (c, n, r - self.offsets[c])

    def prefix(self, depth=None):
        """Copies ``0 .. depth-1`` of every orbit, in rank order."""
        d = self.depth if depth is None else depth
        return [self.point(r) for r in range(d * self.period)]

    def stabilizer(self, u):
        return tuple(g for g in self.group if self.act(g, u) == u)

    def sample(self, rng, depth=None):
        d = self.depth if depth is None else depth
        return self.point(int(rng.integers(0, d * self.period)))

    # derived G-sets
    def act_co(self, g, x):
        return (x[0], self.act(g, x[1]))

    def act_pow(self, g, y):
        return tuple(self.act(g, u) for u in y)

    def act_shape(self, shape, g, x):
        kind = shape[0]
        if kind == "U":
            return self.act(g, x)
        if kind == "co":
            return self.act_co(g, x)
        return self.act_pow(g, x)

    def sample_shape(self, shape, rng, depth=None):
        kind = shape[0]
        if kind == "U":
            return self.sample(rng, depth)
        if kind == "co":
            return (int(rng.integers(0, shape[1])), self.sample(rng, depth))
        return tuple(self.sample(rng, depth) for _ in range(shape[1]))

    def __repr__(self):
        return f"Universe({self.group.name}, depth={self.depth})"


def universe(G, depth=DEFAULT_DEPTH):
    return Universe(G, depth)


U_SHAPE = ("U",)


def co(j):
    return ("co", j)


def pw(j):
    return ("pow", j)


# --------------------------------------------------------------------------
# orbit matching


def combinadic(v):
    """Bijection from strictly increasing ``d``-tuples of naturals to ``N``."""
    return sum(comb(x, i + 1) for i, x in enumerate(v))


def uncombinadic(z, d):
    out = []
    for i in range(d, 0, -1):
        x = i - 1
        while comb(x + 1, i) <= z:
            x += 1
        out.append(x)
        z -= comb(x, i)
    return tuple(reversed(out))


def _surjections(j):
    """Patterns ``pi : [j] -> [d]`` onto ``[d]`` whose values first appear in order."""
    out = []
    for d in range(1, j + 1):
        for pi in product(range(d), repeat=j):
            if set(pi) == set(range(d)):
                out.append(pi)
    return out


class _FiniteOrbits:
    """Orbits of a finite ``H``-set grouped by isotropy type.

    ``first`` (an ``H``-fixed point) is listed first within its type.
    """

    def __init__(self, G, hs, points, act, first=None):
        self.G, self.hs, self.act = G, hs, act
        self.by_type = {}
        self.where = {}  # point -> (type, orbit index, h with point = h rep)
        self.stab = {}
        order = sorted(points, key=lambda p: (p != first, points.index(p)))
        for x in order:
            if x in self.where:
                continue
            K = frozenset(h for h in hs if act(h, x) == x)
            typ = min(tuple(sorted(G.conj(t, k) for k in K)) for t in hs)
            lst = self.by_type.setdefault(typ, [])
            self.stab[x] = K
            for h in hs:
                self.where.setdefault(act(h, x), (typ, len(lst), h))
            lst.append(x)


class OrbitMatcher:
    """An equivariant bijection ``T x N -> S x N`` of ``H``-sets.

    ``T`` and ``S`` are finite ``H``-sets and ``H`` acts trivially on the copy
    number.  Orbits of each isotropy type ``(K)`` are numbered ``o`` in the
    order of the point lists, and the pair (copy ``N``, orbit ``o``) of
    ``T x N`` goes to position ``N a + o`` of the same type, ``a`` being the
    number of type ``(K)`` orbits in ``T``; the target reads positions the same
    way.  Within an orbit the least source point goes to ``t`` times the least
    target point, for the least ``t`` in ``H`` conjugating the isotropy
    groups.  ``pin`` names ``H``-fixed points listed first on each side.
    """

    def __init__(self, G, hs, src_points, src_act, tgt_points, tgt_act, pin=(None, None)):
        self.G = G
        self.hs = tuple(hs)
        self.src = _FiniteOrbits(G, self.hs, list(src_points), src_act, pin[0])
        self.tgt = _FiniteOrbits(G, self.hs, list(tgt_points), tgt_act, pin[1])
        for typ in self.src.by_type:
            if typ not in self.tgt.by_type:
                raise ShapeMismatch(f"no target orbit of isotropy type {typ}")

    def _conj(self, Kx, Ky):
        G = self.G
        for t in self.hs:
            if frozenset(G.conj(t, k) for k in Ky) == Kx:
                return t
        raise AssertionError("isotropy types differ")

    def __call__(self, z, n):
        typ, o, h = self.src.where[z]
        x = self.src.by_type[typ][o]
        ys = self.tgt.by_type[typ]
        n2, o2 = divmod(n * len(self.src.by_type[typ]) + o, len(ys))
        y = ys[o2]
        t = self._conj(self.src.stab[x], self.tgt.stab[y])
        return self.tgt.act(self.G.mul(h, t), y), n2

    def inverse(self, w, n):
        typ, o, h = self.tgt.where[w]
        y = self.tgt.by_type[typ][o]
        xs = self.src.by_type.get(typ)
        if not xs:
            raise ShapeMismatch(f"no source orbit of type {typ}: the map is not onto")
        n2, o2 = divmod(n * len(self.tgt.by_type[typ]) + o, len(xs))
        x = xs[o2]
        t = self._conj(self.src.stab[x], self.tgt.stab[y])
        return self.src.act(self.G.mul(h, self.G.inv(t)), x), n2


def _slice_points(U):
    """``S``: the copy-0 slice of ``U`` as pairs ``(class, coset)``."""
    return [(c, k) for c in range(len(U.sizes)) for k in range(U.sizes[c])]


def _slice_act(U):
    return lambda g, s: (s[0], U.cosets[s[0]].action[g][s[1]])


def power_matcher(U, j, hs=None, rho=None):
    """Orbit matcher for ``U^j -> U``.

    A tuple ``y`` splits into its slice part ``z`` in ``S^j``, the pattern
    ``pi`` of its copy numbers (``n_i = v[pi_i]`` for increasing ``v``) and
    ``v`` itself; ``h`` permutes ``(z, pi)`` by ``rho(h)`` after translating
    ``z``, and ``v`` is the copy number.  The basepoint tuple is pinned to the
    basepoint.
    """
    key = ("pow", j, hs, rho and tuple(sorted(rho.items())))
    if key not in U._matchers:
        G = U.group
        hs = tuple(G) if hs is None else tuple(hs)
        sa = _slice_act(U)
        ident = perms.identity(j)
        r = (lambda h: ident) if rho is None else (lambda h: rho[h])

        def act(h, x):
            z, pi = x
            s = r(h)
            return (perms.act_on_tuple(s, tuple(sa(h, c) for c in z)), perms.act_on_tuple(s, pi))

        S = _slice_points(U)
        b = (U.basepoint[0], U.basepoint[2])
        src = [(z, pi) for z in product(S, repeat=j) for pi in _surjections(j)]
        U._matchers[key] = OrbitMatcher(G, hs, src, act, S, sa, pin=(((b,) * j, (0,) * j), b))
    return U._matchers[key]


def copower_matcher(U, j, hs, rho):
    """Orbit matcher for ``[j] x S -> S`` with ``h (i, s) = (rho(h)(i), h s)``."""
    key = ("co", j, tuple(hs), tuple(sorted(rho.items())))
    if key not in U._matchers:
        sa = _slice_act(U)
        S = _slice_points(U)
        U._matchers[key] = OrbitMatcher(U.group, hs, [(i, s) for i in range(j) for s in S],
                                        lambda h, x: (rho[h][x[0]], sa(h, x[1])), S, sa)
    return U._matchers[key]


def _split(u):
    return (u[0], u[2]), u[1]


def _join(s, n):
    return (s[0], n, s[1])


# --------------------------------------------------------------------------
# expressions


class Expr:
    """An injective map between shapes ``("U",)``, ``("co", j)``, ``("pow", j)``."""

    dom = cod = U_SHAPE
    equivariant = False
    bijective = False

    def __call__(self, x):
        raise NotImplementedError

    def inverse(self, y):
        """Preimage of ``y``; only for bijective expressions."""
        raise ShapeMismatch(f"{self!r} has no inverse")

    def __repr__(self):
        return type(self).__name__


class Identity(Expr):
    equivariant = bijective = True

    def __init__(self, shape=U_SHAPE):
        self.dom = self.cod = shape

    def __call__(self, x):
        return x

    def inverse(self, y):
        return y


class CanonicalInterleaver(Expr):
    """Slot ``i`` of ``j``: ``(c, n, k) -> (c, j n + i, k)``."""
    equivariant = True

    def __init__(self, j, i):
        if not 0 <= i < j:
            raise ShapeMismatch(f"slot {i} out of range for {j}")
        self.j, self.i = j, i

    def __call__(self, u):
        c, n, k = u
        return (c, self.j * n + self.i, k)

    def __repr__(self):
        return f"CanonicalInterleaver({self.j},{self.i})"


class Interleaver(Expr):
    """The equivariant bijection ``^jU -> U`` made of the ``j`` slot maps."""
    equivariant = bijective = True

    def __init__(self, j):
        self.j = j
        self.dom = co(j)

    def __call__(self, x):
        i, (c, n, k) = x
        return (c, self.j * n + i, k)

    def inverse(self, u):
        c, m, k = u
        n, i = divmod(m, self.j)
        return (i, (c, n, k))

    def __repr__(self):
        return f"Interleaver({self.j})"


class Shift(Expr):
    """``(c, n, k) -> (c, n + s, k)``: equivariant, not surjective for ``s > 0``."""
    equivariant = True

    def __init__(self, s=1):
        self.s = s

    def __call__(self, u):
        c, n, k = u
        return (c, n + self.s, k)

    def __repr__(self):
        return f"Shift({self.s})"


class Swap(Expr):
    """Exchange two points of ``U``; generally not equivariant."""
    bijective = True

    def __init__(self, a, b):
        self.a, self.b = a, b

    def __call__(self, u):
        return self.b if u == self.a else self.a if u == self.b else u

    inverse = __call__

    def __repr__(self):
        return f"Swap({self.a},{self.b})"


class SigmaAct(Expr):
    """The left action of ``s`` on ``^jU`` (``(i, u) -> (s(i), u)``) or on ``U^j``."""
    equivariant = bijective = True

    def __init__(self, s, kind="co"):
        self.s, self.kind = tuple(s), kind
        self.dom = self.cod = (kind, len(s))

    def __call__(self, x):
        if self.kind == "co":
            return (self.s[x[0]], x[1])
        return perms.act_on_tuple(self.s, x)

    def inverse(self, y):
        return SigmaAct(perms.inverse(self.s), self.kind)(y)

    def __repr__(self):
        return f"SigmaAct({self.s},{self.kind})"


class Compose(Expr):
    """``f o g``."""

    def __init__(self, f, g):
        if f.dom != g.cod:
            raise ShapeMismatch(f"cannot compose {f!r} after {g!r}: {g.cod} vs {f.dom}")
        self.f, self.g = f, g
        self.dom, self.cod = g.dom, f.cod
        self.equivariant = f.equivariant and g.equivariant
        self.bijective = f.bijective and g.bijective

    def __call__(self, x):
        return self.f(self.g(x))

    def inverse(self, y):
        return self.g.inverse(self.f.inverse(y))

    def __repr__(self):
        return f"({self.f!r} o {self.g!r})"


class Conjugate(Expr):
    """``g . f = g o f o g^-1``, the action of ``G`` on maps."""

    def __init__(self, U, g, f):
        self.U, self.g, self.f = U, g, f
        self.dom, self.cod = f.dom, f.cod
        self.equivariant, self.bijective = f.equivariant, f.bijective

    def __call__(self, x):
        U, g = self.U, self.g
        return U.act_shape(self.cod, g, self.f(U.act_shape(self.dom, U.group.inv(g), x)))

    def inverse(self, y):
        U, g = self.U, self.g
        return U.act_shape(self.dom, g, self.f.inverse(U.act_shape(self.cod, U.group.inv(g), y)))

    def __repr__(self):
        return f"{self.U.group.elements[self.g]}.{self.f!r}"


class CoproductOf(Expr):
    """``f_1 + ... + f_k : ^jU -> ^kU`` for ``f_r : ^{j_r}U -> U``."""

    def __init__(self, fs):
        for f in fs:
            if f.dom[0] != "co" or f.cod != U_SHAPE:
                raise ShapeMismatch(f"{f!r} is not a map ^jU -> U")
        self.fs = list(fs)
        self.js = [f.dom[1] for f in fs]
        self.dom, self.cod = co(sum(self.js)), co(len(fs))
        self._where = [(r, i) for r, a in enumerate(self.js) for i in range(a)]
        self.equivariant = all(f.equivariant for f in fs)

    def __call__(self, x):
        r, i = self._where[x[0]]
        return (r, self.fs[r]((i, x[1])))

    def __repr__(self):
        return "(" + " + ".join(map(repr, self.fs)) + ")"


class ProductOf(Expr):
    """``f_1 x ... x f_k : U^j -> U^k`` for ``f_r : U^{j_r} -> U``."""

    def __init__(self, fs):
        for f in fs:
            if f.dom[0] != "pow" or f.cod != U_SHAPE:
                raise ShapeMismatch(f"{f!r} is not a map U^j -> U")
        self.fs = list(fs)
        self.js = [f.dom[1] for f in fs]
        self.dom, self.cod = pw(sum(self.js)), pw(len(fs))
        self.equivariant = all(f.equivariant for f in fs)
        self.bijective = all(f.bijective for f in fs)

    def __call__(self, y):
        out, pos = [], 0
        for f, a in zip(self.fs, self.js):
            out.append(f(tuple(y[pos:pos + a])))
            pos += a
        return tuple(out)

    def inverse(self, z):
        out = []
        for f, u in zip(self.fs, z):
            out.extend(f.inverse(u))
        return tuple(out)

    def __repr__(self):
        return "(" + " x ".join(map(repr, self.fs)) + ")"


class OnCopy(Expr):
    """Restriction ``^1U -> U`` of a copower map to its ``i``-th copy."""

    def __init__(self, f, i):
        self.f, self.i = f, i
        self.dom = co(1)
        self.equivariant = f.equivariant

    def __call__(self, x):
        return self.f((self.i, x[1]))


class FromU(Expr):
    """View a map ``U -> U`` as ``^1U -> U`` or ``U^1 -> U``."""

    def __init__(self, f, kind="co"):
        self.f, self.kind = f, kind
        self.dom = (kind, 1)
        self.equivariant, self.bijective = f.equivariant, f.bijective

    def __call__(self, x):
        return self.f(x[1] if self.kind == "co" else x[0])

    def inverse(self, u):
        v = self.f.inverse(u)
        return (0, v) if self.kind == "co" else (v,)


class CanonicalPower(Expr):
    """The based equivariant bijection ``U^j -> U`` by orbit matching."""
    equivariant = bijective = True

    def __init__(self, U, j, hs=None, rho=None):
        self.U, self.j = U, j
        self.dom = pw(j)
        self._m = power_matcher(U, j, hs, rho) if j else None
        self.label = f"CanonicalPower({j})" if rho is None else f"PowerMatch({j},{rho})"

    def __call__(self, y):
        if self.j == 0:
            return self.U.basepoint
        parts = [_split(u) for u in y]
        v = sorted({p[1] for p in parts})
        pi = tuple(v.index(p[1]) for p in parts)
        s, n = self._m((tuple(p[0] for p in parts), pi), combinadic(v))
        return _join(s, n)

    def inverse(self, u):
        if self.j == 0:
            return ()
        (z, pi), n = self._m.inverse(*_split(u))
        v = uncombinadic(n, max(pi) + 1)
        return tuple(_join(s, v[p]) for s, p in zip(z, pi))

    def __repr__(self):
        return self.label


class CopowerMatch(Expr):
    """A bijection ``^jU -> U``, equivariant for ``h (i, u) = (rho(h)(i), h u)``."""
    bijective = True

    def __init__(self, U, j, hs, rho):
        self.U, self.j, self.rho = U, j, rho
        self.dom = co(j)
        self._m = copower_matcher(U, j, hs, rho)

    def __call__(self, x):
        s, n = _split(x[1])
        w, m = self._m((x[0], s), n)
        return _join(w, m)

    def inverse(self, u):
        (i, s), m = self._m.inverse(*_split(u))
        return (i, _join(s, m))

    def __repr__(self):
        return f"CopowerMatch({self.j},{self.rho})"


def evaluate(f, x):
    return f(x)


# --------------------------------------------------------------------------
# the operads P_G, Q_G, R_G


def arity(f):
    return f.dom[1]


def pg_gamma(psi, phis):
    """``gamma(psi; phi_1..phi_k) = psi o (phi_1 + ... + phi_k)``."""
    if psi.dom != co(len(phis)) or psi.cod != U_SHAPE:
        raise ShapeMismatch(f"{psi!r} does not have arity {len(phis)}")
    return Compose(psi, CoproductOf(phis))


def qg_gamma(psi, phis):
    """``gamma(psi; phi_1..phi_k) = psi o (phi_1 x ... x phi_k)``."""
    if psi.dom != pw(len(phis)) or psi.cod != U_SHAPE:
        raise ShapeMismatch(f"{psi!r} does not have arity {len(phis)}")
    return Compose(psi, ProductOf(phis))


def sigma_right(f, s):
    """The right action ``f s = f o s`` induced by the left action on the domain."""
    return Compose(f, SigmaAct(s, f.dom[0]))


def g_left(U, g, f):
    return Conjugate(U, g, f)


def pg_unit():
    return FromU(Identity(), "co")


def qg_unit():
    return FromU(Identity(), "pow")


def rg_bijection(U, j):
    """The canonical based equivariant bijection ``U^j -> U``."""
    if j == 1:
        return qg_unit()
    return CanonicalPower(U, j)


def is_based(U, f, j):
    return f((U.basepoint,) * j) == U.basepoint


def random_pg(U, j, rng):
    """A random injection ``^jU -> U``: interleave, permute, then shuffle or shift."""
    f = Compose(Interleaver(j), SigmaAct(perms.all_perms(j)[rng.integers(len(perms.all_perms(j)))]))
    pts = U.prefix()
    a, b = (pts[int(i)] for i in rng.choice(len(pts), 2, replace=False))
    tail = Swap(a, b) if rng.integers(2) else Shift(int(rng.integers(1, 3)))
    f = Compose(tail, f)
    g = int(rng.integers(U.group.order))
    return Conjugate(U, g, f) if g else f


def random_qg(U, j, rng, bijective=False):
    """A random based injection ``U^j -> U``."""
    s = perms.all_perms(j)[rng.integers(len(perms.all_perms(j)))]
    f = Compose(rg_bijection(U, j), SigmaAct(s, "pow")) if j else rg_bijection(U, 0)
    pts = [p for p in U.prefix() if p != U.basepoint]
    if len(pts) >= 2:
        a, b = (pts[int(i)] for i in rng.choice(len(pts), 2, replace=False))
        f = Compose(Swap(a, b), f)
    if not bijective and rng.integers(2):
        f = Compose(CanonicalInterleaver(2, 0), f)
    return f


def lambda_action(psi, phis):
    """``lambda(psi; phi_1..phi_k)``: on copy ``I`` it is ``psi o phi_I o psi^-1``."""
    return LambdaExpr(psi, phis)


class LambdaExpr(Expr):
    def __init__(self, psi, phis):
        if psi.dom != pw(len(phis)) or not psi.bijective:
            raise ShapeMismatch("lambda needs a bijection U^k -> U with k = number of inputs")
        for f in phis:
            if f.dom[0] != "co":
                raise ShapeMismatch(f"{f!r} is not a map ^jU -> U")
        self.psi, self.phis = psi, list(phis)
        self.js = [arity(f) for f in phis]
        self.index = list(product(*[range(a) for a in self.js]))
        self.dom = co(len(self.index))

    def __call__(self, x):
        I = self.index[x[0]]
        y = self.psi.inverse(x[1])
        return self.psi(tuple(f((i, u)) for f, i, u in zip(self.phis, I, y)))

    def __repr__(self):
        return f"lambda({self.psi!r}; {', '.join(map(repr, self.phis))})"


# --------------------------------------------------------------------------
# extensional law checks


def _sampled(rep, law, domain, samples, rng, trial):
    """Run ``trial(rng)`` ``samples`` times; it returns ``(ok, witness)``."""
    c = rep.new(law, domain, mode="sampled", note=f"{samples} random trials")
    for _ in range(samples):
        ok, w = trial(rng)
        c.record(ok, w)
    return c


def _rand_perm(j, rng):
    ps = perms.all_perms(j)
    return ps[int(rng.integers(len(ps)))]


def _arities(rng, k, amax):
    return [int(rng.integers(0, amax + 1)) for _ in range(k)]


def _pt(U, shape, rng):
    return U.sample_shape(shape, rng)


def _agree(U, f, g, rng):
    """Compare ``f`` and ``g`` at one random domain point (``None`` if the domain is empty)."""
    if f.dom != g.dom or f.cod != g.cod:
        return False, ("shape", f.dom, g.dom, f.cod, g.cod)
    if f.dom[1] == 0 and f.dom[0] == "co":
        return True, None
    x = _pt(U, f.dom, rng)
    a, b = f(x), g(x)
    return a == b, (repr(f), repr(g), x, a, b)


def _operad_laws(rep, U, kind, samples, rng, kmax=2, amax=2):
    """Unit, associativity and equivariance laws for ``kind`` in ``{"P", "Q"}``."""
    G = U.group
    if kind == "P":
        gamma, rand, unit, shape = pg_gamma, (lambda j: random_pg(U, j, rng)), pg_unit, co
    else:
        gamma, rand, unit, shape = qg_gamma, (lambda j: random_qg(U, j, rng)), qg_unit, pw
    lo = 0
    name = {"P": "P_G", "Q": "Q_G"}[kind]
    dom = f"arities <= {kmax}, inputs <= {amax}, depth {U.depth}"

    def t_unit_l(rng):
        f = rand(int(rng.integers(lo, amax + 1)))
        return _agree(U, gamma(unit(), [f]), f, rng)

    def t_unit_r(rng):
        k = int(rng.integers(lo, kmax + 1))
        f = rand(k)
        return _agree(U, gamma(f, [unit()] * k), f, rng)

    def t_assoc(rng):
        k = int(rng.integers(lo, kmax + 1))
        js = [int(rng.integers(lo, amax + 1)) for _ in range(k)]
        is_ = [int(rng.integers(lo, amax + 1)) for _ in range(sum(js))]
        c, ds, es = rand(k), [rand(a) for a in js], [rand(b) for b in is_]
        lhs = gamma(gamma(c, ds), es)
        inner, pos = [], 0
        for d, a in zip(ds, js):
            inner.append(gamma(d, es[pos:pos + a]))
            pos += a
        return _agree(U, lhs, gamma(c, inner), rng)

    def t_sigma_top(rng):
        k = int(rng.integers(max(lo, 1), kmax + 1))
        js = [int(rng.integers(lo, amax + 1)) for _ in range(k)]
        c, ds, s = rand(k), [rand(a) for a in js], _rand_perm(k, rng)
        inv = perms.inverse(s)
        lhs = gamma(sigma_right(c, s), ds)
        rhs = sigma_right(gamma(c, [ds[inv[m]] for m in range(k)]), perms.block_perm(s, js))
        return _agree(U, lhs, rhs, rng)

    def t_sigma_inputs(rng):
        k = int(rng.integers(lo, kmax + 1))
        js = [int(rng.integers(lo, amax + 1)) for _ in range(k)]
        c, ds = rand(k), [rand(a) for a in js]
        ts = [_rand_perm(a, rng) for a in js]
        lhs = gamma(c, [sigma_right(d, t) for d, t in zip(ds, ts)])
        return _agree(U, lhs, sigma_right(gamma(c, ds), perms.block_sum(ts)), rng)

    def t_g(rng):
        k = int(rng.integers(lo, kmax + 1))
        js = [int(rng.integers(lo, amax + 1)) for _ in range(k)]
        c, ds, g = rand(k), [rand(a) for a in js], int(rng.integers(G.order))
        lhs = gamma(Conjugate(U, g, c), [Conjugate(U, g, d) for d in ds])
        return _agree(U, lhs, Conjugate(U, g, gamma(c, ds)), rng)

    def t_inj(rng):
        j = int(rng.integers(max(lo, 1), amax + 2))
        f = rand(j)
        x, y = _pt(U, shape(j), rng), _pt(U, shape(j), rng)
        return (x == y) or f(x) != f(y), (repr(f), x, y)

    _sampled(rep, f"{name}: gamma(id; f) = f", dom, samples, rng, t_unit_l)
    _sampled(rep, f"{name}: gamma(f; id, ..., id) = f", dom, samples, rng, t_unit_r)
    _sampled(rep, f"{name}: associativity", dom, samples, rng, t_assoc)
    _sampled(rep, f"{name}: gamma(c s; d) = gamma(c; d_(s^-1)) s(j_1..j_k)", dom, samples, rng, t_sigma_top)
    _sampled(rep, f"{name}: gamma(c; d_1 t_1, ...) = gamma(c; d)(t_1 + ... + t_k)", dom, samples, rng,
             t_sigma_inputs)
    _sampled(rep, f"{name}: gamma(g c; g d) = g gamma(c; d)", dom, samples, rng, t_g)
    _sampled(rep, f"{name}: objects are injective", dom, samples, rng, t_inj)
    if kind == "Q":
        def t_based(rng):
            k = int(rng.integers(1, kmax + 1))
            js = [int(rng.integers(0, amax + 1)) for _ in range(k)]
            f = gamma(rand(k), [rand(a) for a in js])
            return is_based(U, f, sum(js)), repr(f)
        _sampled(rep, "Q_G: composites of based maps are based", dom, samples, rng, t_based)


def _bijection_laws(rep, U, samples, rng, jmax=3):
    G = U.group
    dom = f"1 <= j <= {jmax}, depth {U.depth}"

    def t_round(rng):
        j = int(rng.integers(1, jmax + 1))
        f, y = rg_bijection(U, j), _pt(U, pw(j), rng)
        return f.inverse(f(y)) == y, (j, y)

    def t_equi(rng):
        j = int(rng.integers(1, jmax + 1))
        f, y, g = rg_bijection(U, j), _pt(U, pw(j), rng), int(rng.integers(G.order))
        return f(U.act_pow(g, y)) == U.act(g, f(y)), (j, G.elements[g], y)

    def t_iso(rng):
        j = int(rng.integers(1, jmax + 1))
        f, y = rg_bijection(U, j), _pt(U, pw(j), rng)
        K = frozenset(g for g in G if U.act_pow(g, y) == y)
        return K == frozenset(U.stabilizer(f(y))), (j, y)

    _sampled(rep, "R_G: psi^-1(psi(y)) = y", dom, samples, rng, t_round)
    _sampled(rep, "R_G: psi(g y) = g psi(y)", dom, samples, rng, t_equi)
    _sampled(rep, "R_G: psi preserves isotropy", dom, samples, rng, t_iso)
    c = rep.new("R_G: psi is based and hits every prefix point", dom)
    for j in range(1, jmax + 1):
        f = rg_bijection(U, j)
        c.record(is_based(U, f, j), ("based", j))
        for p in U.prefix():
            c.record(f(f.inverse(p)) == p, (j, p))


def _lambda_laws(rep, U, samples, rng, kmax=2, amax=2):
    G = U.group
    dom = f"k <= {kmax}, inputs <= {amax}, depth {U.depth}"
    rand_p = lambda j: random_pg(U, j, rng)
    rand_r = lambda k: random_qg(U, k, rng, bijective=True)

    def t_unit_r(rng):
        f = rand_p(int(rng.integers(0, amax + 1)))
        return _agree(U, lambda_action(qg_unit(), [f]), f, rng)

    def t_unit_p(rng):
        k = int(rng.integers(1, kmax + 1))
        return _agree(U, lambda_action(rand_r(k), [pg_unit()] * k), pg_unit(), rng)

    def t_assoc(rng):
        k = int(rng.integers(1, kmax + 1))
        ms = [int(rng.integers(1, kmax + 1)) for _ in range(k)]
        psi, psis = rand_r(k), [rand_r(m) for m in ms]
        phis = [rand_p(int(rng.integers(0, amax + 1))) for _ in range(sum(ms))]
        lhs = lambda_action(qg_gamma(psi, psis), phis)
        inner, pos = [], 0
        for p, m in zip(psis, ms):
            inner.append(lambda_action(p, phis[pos:pos + m]))
            pos += m
        return _agree(U, lhs, lambda_action(psi, inner), rng)

    def t_sigma_r(rng):
        k = int(rng.integers(1, kmax + 1))
        psi, s = rand_r(k), _rand_perm(k, rng)
        phis = [rand_p(int(rng.integers(1, amax + 1))) for _ in range(k)]
        inv = perms.inverse(s)
        lhs = lambda_action(sigma_right(psi, s), phis)
        rhs = lambda_action(psi, [phis[inv[m]] for m in range(k)])
        I = tuple(int(rng.integers(a)) for a in lhs.js)
        u = U.sample(rng)
        a = lhs((lhs.index.index(I), u))
        b = rhs((rhs.index.index(perms.act_on_tuple(s, I)), u))
        return a == b, (repr(lhs), I, u)

    def t_sigma_p(rng):
        k = int(rng.integers(1, kmax + 1))
        psi = rand_r(k)
        phis = [rand_p(int(rng.integers(1, amax + 1))) for _ in range(k)]
        ts = [_rand_perm(arity(f), rng) for f in phis]
        lhs = lambda_action(psi, [sigma_right(f, t) for f, t in zip(phis, ts)])
        rhs = lambda_action(psi, phis)
        I = tuple(int(rng.integers(a)) for a in lhs.js)
        u = U.sample(rng)
        a = lhs((lhs.index.index(I), u))
        b = rhs((rhs.index.index(tuple(t[i] for t, i in zip(ts, I))), u))
        return a == b, (repr(lhs), I, u)

    def t_dist(rng):
        k = int(rng.integers(1, kmax + 1))
        psi = rand_r(k)
        phis = [rand_p(int(rng.integers(1, amax + 1))) for _ in range(k)]
        m = arity(phis[-1])
        chis = [rand_p(int(rng.integers(0, amax + 1))) for _ in range(m)]
        lhs = lambda_action(psi, phis[:-1] + [pg_gamma(phis[-1], chis)])
        outer = lambda_action(psi, phis)
        inner = [lambda_action(psi, [pg_unit()] * (k - 1) + [chis[I[-1]]]) for I in outer.index]
        return _agree(U, lhs, pg_gamma(outer, inner), rng)

    def t_g(rng):
        k = int(rng.integers(1, kmax + 1))
        psi, g = rand_r(k), int(rng.integers(G.order))
        phis = [rand_p(int(rng.integers(0, amax + 1))) for _ in range(k)]
        lhs = lambda_action(Conjugate(U, g, psi), [Conjugate(U, g, f) for f in phis])
        return _agree(U, lhs, Conjugate(U, g, lambda_action(psi, phis)), rng)

    def t_inj(rng):
        k = int(rng.integers(1, kmax + 1))
        phis = [rand_p(int(rng.integers(1, amax + 1))) for _ in range(k)]
        f = lambda_action(rand_r(k), phis)
        x, y = _pt(U, f.dom, rng), _pt(U, f.dom, rng)
        return x == y or f(x) != f(y), (repr(f), x, y)

    note = ("the clause lambda(1) = id is not checked: R_G(0) is empty")
    _sampled(rep, "lambda(id; f) = f", dom, samples, rng, t_unit_r)
    _sampled(rep, "lambda(psi; id, ..., id) = id", dom, samples, rng, t_unit_p)
    _sampled(rep, "lambda(gamma(psi; psi_r); phi) = lambda(psi; lambda(psi_r; phi))", dom, samples, rng,
             t_assoc)
    _sampled(rep, "lambda(psi s; phi) = lambda(psi; phi_(s^-1)) on permuted copies", dom, samples, rng,
             t_sigma_r)
    _sampled(rep, "lambda(psi; phi_r t_r) = lambda(psi; phi) on permuted copies", dom, samples, rng,
             t_sigma_p)
    _sampled(rep, "lambda(psi; .., gamma(phi_k; chi)) = gamma(lambda(psi; phi); lambda(psi; 1, .., chi))",
             dom, samples, rng, t_dist)
    _sampled(rep, "lambda(g psi; g phi) = g lambda(psi; phi)", dom, samples, rng, t_g)
    c = _sampled(rep, "lambda values are injective", dom, samples, rng, t_inj)
    c.note += "; " + note


def verify_lambda(G, depth=DEFAULT_DEPTH, samples=DEFAULT_SAMPLES, seed=0):
    """Extensional checks of P_G, Q_G, R_G and the action of R_G on P_G."""
    from .report import Report
    U = universe(G, depth)
    rng = np.random.default_rng(seed)
    rep = Report("verify lambda", {"group": G.name, "depth": depth, "samples": samples, "seed": seed})
    _operad_laws(rep, U, "P", samples, rng)
    _operad_laws(rep, U, "Q", samples, rng)
    _bijection_laws(rep, U, samples, rng)
    _lambda_laws(rep, U, samples, rng)
    _equivariance_laws(rep, U, samples, rng)
    return rep


def _equivariance_laws(rep, U, samples, rng):
    G = U.group
    gens = [("Interleaver(2)", Interleaver(2)), ("Interleaver(3)", Interleaver(3)),
            ("CanonicalInterleaver(3,1)", CanonicalInterleaver(3, 1)), ("Shift(1)", Shift(1)),
            ("CanonicalPower(2)", CanonicalPower(U, 2)), ("CanonicalPower(3)", CanonicalPower(U, 3))]

    def trial(rng):
        name, f = gens[int(rng.integers(len(gens)))]
        x, g = _pt(U, f.dom, rng), int(rng.integers(G.order))
        return f(U.act_shape(f.dom, g, x)) == U.act_shape(f.cod, g, f(x)), (name, G.elements[g], x)

    _sampled(rep, "equivariant generators: f(g x) = g f(x)", f"depth {U.depth}", samples, rng, trial)


# --------------------------------------------------------------------------
# the category E_G of finite subsets and E_G(X) of finite sets over X


def _sub_act(U, g, A):
    return tuple(sorted(U.act(g, a) for a in A))


def _label_act(U, g, A, B, r):
    """Label of ``g f : gA -> gB`` where ``f`` sends ``A[i]`` to ``B[r[i]]``."""
    gA, gB = _sub_act(U, g, A), _sub_act(U, g, B)
    pa = [gA.index(U.act(g, a)) for a in A]
    pb = [gB.index(U.act(g, b)) for b in B]
    out = [None] * len(A)
    for i in range(len(A)):
        out[pa[i]] = pb[r[i]]
    return tuple(out)


def _over_groupoid(U, objs, name, X=None):
    """Groupoid on objects ``(A, p)`` (``A`` a sorted tuple of points, ``p`` labels
    aligned with ``A``); morphisms are the bijections ``f`` with ``p_B f = p_A``,
    labelled ``(src, tgt, r)`` with ``f(A[i]) = B[r[i]]``.  ``G`` translates
    subsets, acts on labels through ``X`` and conjugates bijections."""
    from .fincat import GFinCat
    G = U.group
    oidx = {o: i for i, o in enumerate(objs)}
    by_key = {}
    for i, (A, p) in enumerate(objs):
        by_key.setdefault(tuple(sorted(p)), []).append(i)
    mors = []
    for group_ in by_key.values():
        for s in group_:
            A, p = objs[s]
            n = len(A)
            for t in group_:
                B, q = objs[t]
                for r in perms.all_perms(n):
                    if all(q[r[i]] == p[i] for i in range(n)):
                        mors.append((s, t, r))
    mi = {m: i for i, m in enumerate(mors)}
    out = {}
    for m in mors:
        out.setdefault(m[0], []).append(m)
    compose = {}
    for f in mors:
        for g in out.get(f[1], ()):
            compose[(mi[g], mi[f])] = mi[(f[0], g[1], perms.compose(g[2], f[2]))]
    ids = [mi[(a, a, perms.identity(len(objs[a][0])))] for a in range(len(objs))]
    xact = (lambda g, v: v) if X is None else (lambda g, v: X.action[g][v])
    action = []
    for g in G:
        op = []
        for A, p in objs:
            gA = _sub_act(U, g, A)
            lab = [None] * len(A)
            for a, v in zip(A, p):
                lab[gA.index(U.act(g, a))] = xact(g, v)
            op.append(oidx[(gA, tuple(lab))])
        mp = tuple(mi[(op[s], op[t], _label_act(U, g, objs[s][0], objs[t][0], r))] for s, t, r in mors)
        action.append((tuple(op), mp))
    return GFinCat(tuple(objs), [m[0] for m in mors], [m[1] for m in mors], ids, compose,
                   tuple(mors), G, tuple(action), name)


def _stable_points(U, points):
    pts = set(points)
    for g in U.group:
        pts |= {U.act(g, p) for p in points}
    return sorted(pts, key=U.rank)


def e_category(G, U, nmax, points=None):
    """Finite subsets of ``points`` (default the prefix) of size at most ``nmax``, all bijections."""
    pts = _stable_points(U, U.prefix() if points is None else points)
    objs = [(A, (0,) * len(A)) for n in range(nmax + 1) for A in _subsets(pts, n)]
    return _over_groupoid(U, objs, f"E_G(n <= {nmax})")


def egx_category(G, U, X, nmax, points=None):
    """Functions ``p : A -> X`` from subsets of ``points``; bijections over ``X``."""
    pts = _stable_points(U, U.prefix() if points is None else points)
    objs = [(A, p) for n in range(nmax + 1) for A in _subsets(pts, n)
            for p in product(range(X.size), repeat=n)]
    return _over_groupoid(U, objs, f"E_G(X)(n <= {nmax})", X)


def egx_fixed(U, X, H, n, points=None):
    """The ``H``-fixed part of ``E_G(n, X)`` built directly: ``H``-stable subsets,
    ``H``-equivariant labels and ``H``-equivariant bijections over ``X``."""
    from .fincat import fixed_subcategory
    pts = _stable_points(U, U.prefix() if points is None else points)
    hs = H.member_indices
    objs = []
    for A in _subsets(pts, n):
        if any(_sub_act(U, h, A) != A for h in hs):
            continue
        for p in product(range(X.size), repeat=n):
            lab = dict(zip(A, p))
            if all(lab[U.act(h, a)] == X.action[h][lab[a]] for h in hs for a in A):
                objs.append((A, p))
    # close under G so the ambient groupoid carries the full action
    objs = sorted({_gobj(U, X, g, o) for g in U.group for o in objs})
    C = _over_groupoid(U, objs, f"E_G({n},X)^H", X)
    return fixed_subcategory(C, H)


def _subsets(pts, n):
    from itertools import combinations
    return [tuple(sorted(c, key=lambda u: u)) for c in combinations(pts, n)]


def theta_E(phi, As):
    """``theta(phi; A_1..A_j) = phi(A_1 + ... + A_j)`` as a sorted tuple."""
    if arity(phi) != len(As):
        raise ShapeMismatch("arity mismatch")
    return tuple(sorted(phi((i, a)) for i, A in enumerate(As) for a in A))


def theta_E_mor(phi, psi, As, alphas):
    """The bijection ``phi(+A_i) -> psi(+B_i)`` induced by ``alpha_i : A_i -> B_i`` (dicts)."""
    return {phi((i, a)): psi((i, al[a])) for i, (A, al) in enumerate(zip(As, alphas)) for a in A}


def xi_E(phi, As):
    """``xi(phi; A_1..A_j) = phi(A_1 x ... x A_j)`` as a sorted tuple."""
    if arity(phi) != len(As):
        raise ShapeMismatch("arity mismatch")
    return tuple(sorted(phi(y) for y in product(*As)))


def xi_E_mor(phi, psi, As, alphas):
    return {phi(y): psi(tuple(al[a] for al, a in zip(alphas, y))) for y in product(*As)}


def theta_X(phi, objs):
    """``theta`` on ``E_G(X)``: image set labelled by ``fold o (+p_i) o phi^-1``."""
    lab = {}
    for i, (A, p) in enumerate(objs):
        for a, v in zip(A, p):
            lab[phi((i, a))] = v
    A = tuple(sorted(lab))
    return (A, tuple(lab[a] for a in A))


# --------------------------------------------------------------------------
# a finite slice of P_G(j), the dichotomy for fixed objects and the map omega


def lambda_seeds(U, j):
    """For every subgroup class representative ``H`` and hom ``rho : H -> Sigma_j``,
    the injection ``^jU -> U`` fixed by the graph of ``rho``."""
    from .groups import homomorphisms, symmetric_group
    S = symmetric_group(j)
    Sp = perms.all_perms(j)
    out = []
    for cls in U.classes:
        H = cls.representative
        hs = H.member_indices
        for a in homomorphisms(H.as_group, S):
            rho = {h: Sp[a[i]] for i, h in enumerate(hs)}
            out.append(((hs, rho), CopowerMatch(U, j, hs, rho)))
    return out


class PGSlice:
    """Injections ``^jU -> U`` up to agreement on ``D = [j] x (copy 0 of U)``.

    ``D`` is stable under ``G`` and ``Sigma_j``, so both act on fingerprints
    (the tuples of values on ``D``).  The slice is the closure of the
    fingerprints of ``lambda_seeds`` under both actions.
    """

    def __init__(self, U, j, extra=()):
        self.U, self.j = U, j
        self.D = [(i, u) for i in range(j) for u in U.prefix(1)]
        self.dpos = {d: n for n, d in enumerate(self.D)}
        self.seeds = lambda_seeds(U, j)
        start = [self.fingerprint(f) for _, f in self.seeds] + [self.fingerprint(f) for f in extra]
        seen = set(start)
        todo = list(start)
        while todo:
            fp = todo.pop()
            for g in U.group:
                for s in perms.all_perms(j):
                    y = self.act(s, g, fp)
                    if y not in seen:
                        seen.add(y)
                        todo.append(y)
        self.items = sorted(seen)
        self.index = {fp: i for i, fp in enumerate(self.items)}

    def fingerprint(self, f):
        return tuple(f(d) for d in self.D)

    def act(self, s, g, fp):
        """``(s, g) . phi = g o phi o s^-1``."""
        U, G = self.U, self.U.group
        si, gi = perms.inverse(s), G.inv(g)
        return tuple(U.act(g, fp[self.dpos[(si[i], U.act(gi, u))]]) for i, u in self.D)

    def at_base(self, fp):
        b = self.U.basepoint
        return tuple(fp[self.dpos[(i, b)]] for i in range(self.j))


def _graph_subgroups(G, j):
    """Subgroups of ``Sigma_j x G`` as lists of pairs ``(s, g)``."""
    from .groups import all_subgroups, direct_product, symmetric_group
    S = symmetric_group(j)
    P = direct_product(S, G)
    Sp = perms.all_perms(j)
    return [[(Sp[x // G.order], x % G.order) for x in L.member_indices] for L in all_subgroups(P)]


def unipq_check(G, jmax=2, depth=DEFAULT_DEPTH, samples=DEFAULT_SAMPLES, seed=0):
    """Fixed objects of ``P_G(j)`` and ``Q_G(j)`` under ``Lambda <= Sigma_j x G``:
    none when ``Lambda`` meets ``Sigma_j``, a constructed one otherwise."""
    from .report import Report
    U = universe(G, depth)
    rng = np.random.default_rng(seed)
    rep = Report("verify unipq", {"group": G.name, "jmax": jmax, "depth": depth, "seed": seed})
    for j in range(1, jmax + 1):
        sl = PGSlice(U, j)
        ident = perms.identity(j)
        none_c = rep.new("Lambda meeting Sigma_j fixes no object of the slice", f"arity {j}",
                         note=f"slice of {len(sl.items)} injections")
        some_c = rep.new("Lambda with trivial Sigma_j part fixes a slice object", f"arity {j}")
        p_c = rep.new("constructed P_G object is Lambda-fixed and injective", f"arity {j}", mode="sampled")
        q_c = rep.new("constructed based Q_G bijection is Lambda-fixed", f"arity {j}", mode="sampled")
        for L in _graph_subgroups(G, j):
            fixed = [fp for fp in sl.items if all(sl.act(s, g, fp) == fp for s, g in L)]
            meets = any(s != ident for s, g in L if g == G.identity_index)
            if meets:
                none_c.record(not fixed, (L, fixed[:1]))
                continue
            some_c.record(bool(fixed), L)
            hs = tuple(sorted(g for _, g in L))
            rho = {g: s for s, g in L}
            phi = CopowerMatch(U, j, hs, rho)
            psi = CanonicalPower(U, j, hs, rho)
            for _ in range(max(1, samples // 10)):
                h = hs[int(rng.integers(len(hs)))]
                x = _pt(U, co(j), rng)
                p_c.record(phi((rho[h][x[0]], U.act(h, x[1]))) == U.act(h, phi(x)), (L, h, x))
                x2 = _pt(U, co(j), rng)
                p_c.record(x == x2 or phi(x) != phi(x2), ("injective", L, x, x2))
                y = _pt(U, pw(j), rng)
                hy = perms.act_on_tuple(rho[h], U.act_pow(h, y))
                q_c.record(psi(hy) == U.act(h, psi(y)), (L, h, y))
                q_c.record(psi.inverse(psi(y)) == y, ("bijective", L, y))
            q_c.record(is_based(U, psi, j), ("based", L))
    return rep


def free_pg_truncation(U, X, j, sl=None):
    """``P_G(j) x_{Sigma_j} X^j`` with ``P_G(j)`` replaced by a ``PGSlice``.

    Objects are orbit representatives ``(fp, x)``; the morphism
    ``((fp, x) -> (psi, x))`` is labelled ``(source index, psi index)``.
    """
    from .fincat import GFinCat
    G = U.group
    sl = sl or PGSlice(U, j)
    e = G.identity_index
    Sp = perms.all_perms(j)

    def norm(fp, x):
        return min(((sl.act(s, e, fp), perms.act_on_tuple(s, x)), s) for s in Sp)

    reps = sorted({norm(fp, x)[0] for fp in sl.items for x in product(range(X.size), repeat=j)})
    oidx = {o: i for i, o in enumerate(reps)}
    n_fp = len(sl.items)
    mors, tgt_s = [], []
    for a, (fp, x) in enumerate(reps):
        for p, psi in enumerate(sl.items):
            t, s = norm(psi, x)
            mors.append((a, p))
            tgt_s.append((oidx[t], s))
    mi = {m: i for i, m in enumerate(mors)}
    compose = {}
    for f, (a, p) in enumerate(mors):
        b, s = tgt_s[f]
        sinv = perms.inverse(s)
        for q in range(n_fp):
            chi_s = sl.index[sl.act(sinv, e, sl.items[q])]
            compose[(mi[(b, q)], f)] = mi[(a, chi_s)]
    ids = [mi[(a, sl.index[fp])] for a, (fp, x) in enumerate(reps)]
    action = []
    for g in G:
        op, mp = [], []
        for fp, x in reps:
            op.append(oidx[norm(sl.act(perms.identity(j), g, fp), tuple(X.action[g][v] for v in x))[0]])
        for a, p in mors:
            fp, x = reps[a]
            gfp = sl.act(perms.identity(j), g, fp)
            (_, _), s = norm(gfp, tuple(X.action[g][v] for v in x))
            gpsi = sl.act(s, e, sl.act(perms.identity(j), g, sl.items[p]))
            mp.append(mi[(op[a], sl.index[gpsi])])
        action.append((tuple(op), tuple(mp)))
    return GFinCat(tuple(reps), [m[0] for m in mors], [t for t, _ in tgt_s], ids, compose,
                   tuple(mors), G, tuple(action), f"P_G({j}) x X^{j} / Sigma_{j}")


def omega_map(U, sl, C, T):
    """``omega`` from a truncation ``C`` to a category ``T`` of sets over ``X``:
    ``(phi, x)`` goes to ``phi(1 + ... + 1)`` labelled by ``x``."""
    from .fincat import FunctorVal
    tidx = {o: i for i, o in enumerate(T.objects)}
    tm = {m: i for i, m in enumerate(T.mor_labels)}
    omap = []
    for fp, x in C.objects:
        base = sl.at_base(fp)
        A = tuple(sorted(base))
        omap.append(tidx[(A, tuple(x[base.index(a)] for a in A))])
    mmap = []
    for (a, p), t in zip(C.mor_labels, C.mor_tgt):
        src = sl.at_base(C.objects[a][0])
        dst = sl.at_base(sl.items[p])
        A, B = T.objects[omap[a]][0], T.objects[omap[t]][0]
        r = [None] * len(A)
        for i in range(len(src)):
            r[A.index(src[i])] = B.index(dst[i])
        mmap.append(tm[(omap[a], omap[t], tuple(r))])
    return FunctorVal(C, T, tuple(omap), tuple(mmap))


def _fixed_with_map(C, H):
    """``fixed_subcategory`` plus the kept object and morphism indices."""
    from .fincat import full_subcategory
    hs = H.member_indices
    objs = [a for a in range(C.n_objects) if all(C.action[h][0][a] == a for h in hs)]
    fm = {m for m in range(C.n_morphisms) if all(C.action[h][1][m] == m for h in hs)}
    sub = full_subcategory(C, objs, lambda m: m in fm)
    oset = set(objs)
    mors = [m for m in range(C.n_morphisms)
            if C.mor_src[m] in oset and C.mor_tgt[m] in oset and m in fm]
    return sub, objs, mors


def omega_check(G, X, jmax=2, depth=None):
    """For each arity ``j`` and subgroup ``H``: ``omega`` is an equivariant functor
    and the ``H``-fixed skeleta of the truncated free algebra, of ``E_G(j, X)`` and of
    ``H``-sets over ``X`` agree, with ``omega^H`` an equivalence."""
    from .fincat import FunctorVal, check_equivalence, skeleton
    from .freeperm import fgx_component
    from .groups import all_subgroups
    from .gsets import restrict
    from .report import Report
    rep = Report("verify omega", {"group": G.name, "|X|": X.size, "jmax": jmax})
    U = universe(G, depth or max(1, jmax))
    for j in range(jmax + 1):
        sl = PGSlice(U, j)
        C = free_pg_truncation(U, X, j, sl)
        pts = set(U.prefix())
        for fp in sl.items:
            pts |= set(sl.at_base(fp))
        pts = _stable_points(U, sorted(pts))
        dom = f"arity {j}, slice of {len(sl.items)} injections, {len(pts)} points"
        T = egx_fixed(U, X, G.trivial_subgroup(), j, pts)
        T = _over_groupoid(U, list(T.objects), f"E_G({j},X)", X)
        c = rep.new("omega is an equivariant functor", dom)
        try:
            F = omega_map(U, sl, C, T).validate()
            c.record(F.is_equivariant(), "not equivariant")
        except Exception as exc:  # noqa: BLE001 - reported as a witness
            c.record(False, repr(exc))
            continue
        for H in all_subgroups(G):
            hname = "{" + ",".join(G.elements[h] for h in H.member_indices) + "}"
            Cs, objs, mors = _fixed_with_map(C, H)
            Ts, tobjs, tmors = _fixed_with_map(T, H)
            to, tmm = {a: i for i, a in enumerate(tobjs)}, {m: i for i, m in enumerate(tmors)}
            FH = FunctorVal(Cs, Ts, tuple(to[F.object_map[a]] for a in objs),
                            tuple(tmm[F.morphism_map[m]] for m in mors))
            a = sorted(s[2] for s in skeleton(Cs))
            b = sorted(s[2] for s in skeleton(Ts))
            o = sorted(s[2] for s in skeleton(fgx_component(H.as_group, restrict(X, H), j)))
            d = f"arity {j}, H = {hname}"
            rep.new("H-fixed skeleta: free truncation = E_G(j,X)", d,
                    note=f"{len(a)} classes").record(a == b, (a, b))
            rep.new("H-fixed skeleta: E_G(j,X) = H-sets over X", d).record(b == o, (b, o))
            v = check_equivalence(FH)
            rep.new("omega^H is an equivalence", d).record(v.is_equivalence, v.witness)
    return rep


# --------------------------------------------------------------------------
# operad actions on E_G and E_G(X)


def _all_subsets(pts):
    return [A for n in range(len(pts) + 1) for A in _subsets(pts, n)]


def _action_laws(rep, U, kind, rng, samples, npts=4, per_arity=2, X=None):
    """Action laws of ``P_G`` (``kind="theta"``), ``Q_G`` (``"xi"``) or ``P_G`` on
    ``E_G(X)`` (``"thetaX"``), exhaustive over subsets of the first ``npts``
    points and operad arities at most 2."""
    G = U.group
    pts = U.prefix()[:npts]
    if kind == "xi":
        gamma, unit, act = qg_gamma, qg_unit(), xi_E
        elems = {j: [random_qg(U, j, rng) for _ in range(per_arity)] for j in range(3)}
        name = "xi"
    else:
        gamma, unit = pg_gamma, pg_unit()
        elems = {j: [random_pg(U, j, rng) for _ in range(per_arity)] for j in range(3)}
        name = "theta"
    if kind == "thetaX":
        objs = [(A, p) for A in _all_subsets(pts) for p in product(range(X.size), repeat=len(A))]
        act = theta_X
        gobj = lambda g, o: _gobj(U, X, g, o)
        name = "theta_X"
    else:
        objs = _all_subsets(pts)
        if kind == "theta":
            act = theta_E
        gobj = lambda g, A: _sub_act(U, g, A)
    dom = f"subsets of {npts} points, arities <= 2, {per_arity} operad elements per arity"
    c_unit = rep.new(f"{name}(id; A) = A", dom)
    for A in objs:
        c_unit.record(act(unit, [A]) == A, A)
    c_assoc = rep.new(f"{name}(gamma(c; d); A) = {name}(c; {name}(d_r; A_r))", dom)
    c_sig = rep.new(f"{name}(c s; A) = {name}(c; A_(s^-1))", dom)
    c_g = rep.new(f"{name}(g c; g A) = g {name}(c; A)", dom)
    for k in range(3):
        for js in product(range(3), repeat=k):
            if sum(js) > 2:
                continue
            m = sum(js)
            for c in elems[k]:
                for ds in product(*[elems[a] for a in js]):
                    g_ = gamma(c, list(ds))
                    for As in product(objs, repeat=m):
                        inner, pos = [], 0
                        for d, a in zip(ds, js):
                            inner.append(act(d, list(As[pos:pos + a])))
                            pos += a
                        c_assoc.record(act(g_, list(As)) == act(c, inner), (repr(g_), As))
        if k == 0:
            continue
        for c in elems[k]:
            for As in product(objs, repeat=k):
                for s in perms.all_perms(k):
                    inv = perms.inverse(s)
                    lhs = act(sigma_right(c, s), list(As))
                    c_sig.record(lhs == act(c, [As[inv[i]] for i in range(k)]), (repr(c), s, As))
                for g in G:
                    lhs = act(Conjugate(U, g, c), [gobj(g, A) for A in As])
                    c_g.record(lhs == gobj(g, act(c, list(As))), (repr(c), G.elements[g], As))
    if kind == "thetaX":
        return
    mor = theta_E_mor if kind == "theta" else xi_E_mor
    c_f = rep.new(f"{name} on morphisms preserves identities and composition", dom,
                  mode="sampled", note=f"{samples} random composable pairs")
    for _ in range(samples):
        j = int(rng.integers(1, 3))
        phi, psi, chi = (elems[j][int(rng.integers(per_arity))] for _ in range(3))
        As = [objs[int(rng.integers(len(objs)))] for _ in range(j)]
        al = [_rand_bij(A, pts, rng) for A in As]
        Bs = [tuple(sorted(a.values())) for a in al]
        be = [_rand_bij(B, pts, rng) for B in Bs]
        ident = mor(phi, phi, As, [{a: a for a in A} for A in As])
        ok = all(k == v for k, v in ident.items())
        f1, f2 = mor(phi, psi, As, al), mor(psi, chi, Bs, be)
        comp = mor(phi, chi, As, [{a: b[x[a]] for a in A} for A, x, b in zip(As, al, be)])
        ok = ok and comp == {a: f2[f1[a]] for a in f1}
        c_f.record(ok, (repr(phi), As))


def _gobj(U, X, g, o):
    A, p = o
    gA = _sub_act(U, g, A)
    lab = [None] * len(A)
    for a, v in zip(A, p):
        lab[gA.index(U.act(g, a))] = X.action[g][v]
    return (gA, tuple(lab))


def _rand_bij(A, pts, rng):
    B = [pts[int(i)] for i in rng.choice(len(pts), len(A), replace=False)]
    return dict(zip(A, B))


def verify_theta(G, X=None, depth=DEFAULT_DEPTH, samples=DEFAULT_SAMPLES, seed=0):
    """Action laws of ``P_G`` and ``Q_G`` on ``E_G`` and of ``P_G`` on ``E_G(X)``,
    plus the fixed objects of ``E_G(X)``."""
    from .gsets import regular
    from .report import Report
    X = regular(G) if X is None else X
    U = universe(G, depth)
    rng = np.random.default_rng(seed)
    rep = Report("verify theta", {"group": G.name, "|X|": X.size, "depth": depth, "seed": seed})
    _action_laws(rep, U, "theta", rng, samples)
    _action_laws(rep, U, "xi", rng, samples)
    _action_laws(rep, U, "thetaX", rng, samples, npts=2, X=X)
    egx_fixed_check(rep, U, X)
    return rep


def egx_fixed_check(rep, U, X, nmax=2):
    """``H``-fixed objects of ``E_G(X)`` by sweeping the action equal the
    equivariant labellings of ``H``-stable subsets."""
    from .fincat import fixed_subcategory
    from .groups import all_subgroups
    G = U.group
    # copy 0 of the orbits of the two largest subgroup classes keeps this small
    pts = [p for p in U.prefix(1) if p[0] >= len(U.classes) - 2]
    full = egx_category(G, U, X, nmax, pts)
    for H in all_subgroups(G):
        swept = sorted(fixed_subcategory(full, H).objects)
        direct = sorted(o for n in range(nmax + 1) for o in egx_fixed(U, X, H, n, pts).objects)
        rep.new("E_G(X)^H objects: sweep = equivariant labellings",
                f"n <= {nmax}, {len(pts)} points, H of order {H.order}").record(swept == direct, (H.member_indices,))
