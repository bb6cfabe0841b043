"""Finite categories with optional strict group actions.

Objects and morphisms are referred to by index; ``objects`` and
``mor_labels`` only carry display/identity data.  ``compose[(g, f)]`` is the
composite "g after f" and is defined exactly when ``tgt(f) == src(g)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product

from . import perms
from .errors import ActionNotFree, NotACategory, NotAGroupoid, ParseError, SizeBudgetExceeded

DEFAULT_FUNCTOR_BUDGET = 10**5


@dataclass(eq=False)
class GFinCat:
    objects: tuple
    mor_src: tuple
    mor_tgt: tuple
    identities: tuple
    compose: dict
    mor_labels: tuple = None
    group: object = None
    # action[g] = (object permutation, morphism permutation)
    action: tuple = None
    name: str = ""

    def __post_init__(self):
        self.objects = tuple(self.objects)
        self.mor_src = tuple(self.mor_src)
        self.mor_tgt = tuple(self.mor_tgt)
        self.identities = tuple(self.identities)
        if self.mor_labels is None:
            self.mor_labels = tuple(range(len(self.mor_src)))
        else:
            self.mor_labels = tuple(self.mor_labels)

    @property
    def n_objects(self):
        return len(self.objects)

    @property
    def n_morphisms(self):
        return len(self.mor_src)

    @cached_property
    def _hom(self):
        h = {}
        for m, (s, t) in enumerate(zip(self.mor_src, self.mor_tgt)):
            h.setdefault((s, t), []).append(m)
        return {k: tuple(v) for k, v in h.items()}

    def hom(self, a, b):
        return self._hom.get((a, b), ())

    @cached_property
    def obj_index(self):
        return {o: i for i, o in enumerate(self.objects)}

    @cached_property
    def mor_index(self):
        return {m: i for i, m in enumerate(self.mor_labels)}

    def comp(self, g, f):
        return self.compose[(g, f)]

    def act_obj(self, g, a):
        return self.action[g][0][a] if self.action is not None else a

    def act_mor(self, g, m):
        return self.action[g][1][m] if self.action is not None else m

    @cached_property
    def inverses(self):
        """Inverse of each morphism, or None."""
        out = []
        for m in range(self.n_morphisms):
            s, t = self.mor_src[m], self.mor_tgt[m]
            inv = None
            for k in self.hom(t, s):
                if (self.compose[(k, m)] == self.identities[s]
                        and self.compose[(m, k)] == self.identities[t]):
                    inv = k
                    break
            out.append(inv)
        return tuple(out)

    def is_groupoid(self):
        return all(i is not None for i in self.inverses)

    def validate(self):
        validate_category(self)
        if self.action is not None:
            validate_action(self)
        return self

    def to_dict(self):
        lab = [str(m) for m in self.mor_labels]
        obj = [str(o) for o in self.objects]
        d = {"objects": obj,
             "morphisms": [{"id": lab[m], "src": obj[self.mor_src[m]], "tgt": obj[self.mor_tgt[m]]}
                           for m in range(self.n_morphisms)],
             "identities": {obj[a]: lab[self.identities[a]] for a in range(self.n_objects)},
             "compose": [[lab[g], lab[f], lab[gf]] for (g, f), gf in sorted(self.compose.items())]}
        if self.action is not None:
            G = self.group
            d["action"] = {G.elements[g]: {
                "objects": {obj[a]: obj[op[a]] for a in range(self.n_objects)},
                "morphisms": {lab[m]: lab[mp[m]] for m in range(self.n_morphisms)}}
                for g, (op, mp) in enumerate(self.action)}
        return d

    def __repr__(self):
        return f"GFinCat({self.name or '?'}: {self.n_objects} objects, {self.n_morphisms} morphisms)"


def validate_category(C):
    n, m = C.n_objects, C.n_morphisms
    for a, i in enumerate(C.identities):
        if not (0 <= i < m) or C.mor_src[i] != a or C.mor_tgt[i] != a:
            raise NotACategory("identity", (a, i))
    for f in range(m):
        for g_tgt in range(n):
            for g in C.hom(C.mor_tgt[f], g_tgt):
                gf = C.compose.get((g, f))
                if gf is None:
                    raise NotACategory("composition defined", (g, f))
                if C.mor_src[gf] != C.mor_src[f] or C.mor_tgt[gf] != g_tgt:
                    raise NotACategory("composite endpoints", (g, f, gf))
    for f in range(m):
        s, t = C.mor_src[f], C.mor_tgt[f]
        if C.compose[(C.identities[t], f)] != f or C.compose[(f, C.identities[s])] != f:
            raise NotACategory("unit", (f,))
    # associativity: h(gf) = (hg)f
    out = {}
    for f in range(m):
        out.setdefault(C.mor_src[f], []).append(f)
    for f in range(m):
        for g in out.get(C.mor_tgt[f], ()):
            gf = C.compose[(g, f)]
            for h in out.get(C.mor_tgt[g], ()):
                if C.compose[(h, gf)] != C.compose[(C.compose[(h, g)], f)]:
                    raise NotACategory("associativity", (h, g, f))


def validate_action(C):
    G = C.group
    for g in G:
        op, mp = C.action[g]
        if sorted(op) != list(range(C.n_objects)) or sorted(mp) != list(range(C.n_morphisms)):
            raise NotACategory("action by bijections", (g,))
        for f in range(C.n_morphisms):
            if C.mor_src[mp[f]] != op[C.mor_src[f]] or C.mor_tgt[mp[f]] != op[C.mor_tgt[f]]:
                raise NotACategory("action preserves source/target", (g, f))
        for a in range(C.n_objects):
            if mp[C.identities[a]] != C.identities[op[a]]:
                raise NotACategory("action preserves identities", (g, a))
        for (x, y), xy in C.compose.items():
            if C.compose[(mp[x], mp[y])] != mp[xy]:
                raise NotACategory("action preserves composition", (g, x, y))
    for a in G:
        for b in G:
            ab = G.mul(a, b)
            for k in (0, 1):
                if C.action[ab][k] != perms.compose(C.action[a][k], C.action[b][k]):
                    raise NotACategory("group action law", (a, b))


# --------------------------------------------------------------------------
# constructors


def from_dict(spec, group=None):
    """Build (and validate) a category from the JSON category format."""
    try:
        objects = list(spec["objects"])
        mors = spec["morphisms"]
        labels = [m["id"] for m in mors]
        oi = {o: i for i, o in enumerate(objects)}
        mi = {m: i for i, m in enumerate(labels)}
        src = [oi[m["src"]] for m in mors]
        tgt = [oi[m["tgt"]] for m in mors]
        ids = [mi[spec["identities"][o]] for o in objects]
        compose = {(mi[g], mi[f]): mi[gf] for g, f, gf in spec["compose"]}
    except (KeyError, TypeError) as exc:
        raise ParseError(f"bad category spec: {exc}") from None
    action = None
    if spec.get("action") is not None:
        if group is None:
            raise ParseError("category has an action but no group was given")
        action = []
        for g in group:
            a = spec["action"].get(group.elements[g])
            if a is None:
                if g != group.identity_index:
                    raise ParseError(f"no action given for {group.elements[g]}")
                action.append((perms.identity(len(objects)), perms.identity(len(labels))))
                continue
            action.append((tuple(oi[a["objects"][o]] for o in objects),
                           tuple(mi[a["morphisms"][m]] for m in labels)))
        action = tuple(action)
    return GFinCat(objects, src, tgt, ids, compose, labels, group, action).validate()


def _trivial_action(group, n_obj, n_mor):
    if group is None:
        return None
    idn = (perms.identity(n_obj), perms.identity(n_mor))
    return tuple(idn for _ in group)


def terminal(group=None):
    return GFinCat(("*",), (0,), (0,), (0,), {(0, 0): 0}, ("id*",), group,
                   _trivial_action(group, 1, 1), "*")


def discrete(labels, group=None, action=None):
    """Discrete category; ``action[g]`` permutes the labels (optional)."""
    n = len(labels)
    act = None
    if group is not None:
        act = tuple((p, p) for p in action) if action is not None else _trivial_action(group, n, n)
    return GFinCat(tuple(labels), range(n), range(n), range(n),
                   {(i, i): i for i in range(n)}, tuple(("id", o) for o in labels),
                   group, act, "discrete")


def group_as_category(G):
    """One object, morphisms the elements of ``G``, composition the group law."""
    return GFinCat(("*",), (0,) * G.order, (0,) * G.order, (G.identity_index,),
                   {(a, b): G.mul(a, b) for a in G for b in G}, G.elements, None, None,
                   f"B{G.name}")


def chaotic(labels, group=None, action=None):
    """Exactly one morphism ``x -> y`` for every ordered pair; ``action[g]`` permutes
    the labels and acts diagonally on morphisms."""
    n = len(labels)
    src = [x for y in range(n) for x in range(n)]
    tgt = [y for y in range(n) for x in range(n)]
    # morphism x -> y has index y * n + x
    compose = {(z * n + y, y * n + x): z * n + x
               for x in range(n) for y in range(n) for z in range(n)}
    ids = [x * n + x for x in range(n)]
    mlab = [(labels[y], labels[x]) for y in range(n) for x in range(n)]
    act = None
    if group is not None:
        if action is None:
            act = _trivial_action(group, n, n * n)
        else:
            act = tuple((tuple(p), tuple(p[y] * n + p[x] for y in range(n) for x in range(n)))
                        for p in action)
    return GFinCat(tuple(labels), src, tgt, ids, compose, mlab, group, act, "chaotic")


def chaotic_group(G):
    """``G~``: chaotic on the elements of ``G``, with ``G`` translating from the left."""
    return chaotic(tuple(range(G.order)), G, [tuple(G.mul(g, x) for x in G) for g in G])


def product_category(C, D):
    nC, nD = C.n_objects, D.n_objects
    mC, mD = C.n_morphisms, D.n_morphisms
    objects = tuple((a, b) for a in C.objects for b in D.objects)
    src = [C.mor_src[f] * nD + D.mor_src[g] for f in range(mC) for g in range(mD)]
    tgt = [C.mor_tgt[f] * nD + D.mor_tgt[g] for f in range(mC) for g in range(mD)]
    ids = [C.identities[a] * mD + D.identities[b] for a in range(nC) for b in range(nD)]
    compose = {}
    for (f2, f1), f in C.compose.items():
        for (g2, g1), g in D.compose.items():
            compose[(f2 * mD + g2, f1 * mD + g1)] = f * mD + g
    labels = tuple((x, y) for x in C.mor_labels for y in D.mor_labels)
    group = C.group or D.group
    act = None
    if C.action is not None or D.action is not None:
        act = []
        for g in group:
            co, cm = C.action[g] if C.action else (perms.identity(nC), perms.identity(mC))
            do, dm = D.action[g] if D.action else (perms.identity(nD), perms.identity(mD))
            act.append((tuple(co[a] * nD + do[b] for a in range(nC) for b in range(nD)),
                        tuple(cm[f] * mD + dm[h] for f in range(mC) for h in range(mD))))
        act = tuple(act)
    return GFinCat(objects, src, tgt, ids, compose, labels, group, act,
                   f"{C.name}x{D.name}")


def coproduct_category(C, D):
    nC, mC = C.n_objects, C.n_morphisms
    objects = tuple((0, o) for o in C.objects) + tuple((1, o) for o in D.objects)
    src = C.mor_src + tuple(nC + s for s in D.mor_src)
    tgt = C.mor_tgt + tuple(nC + t for t in D.mor_tgt)
    ids = C.identities + tuple(mC + i for i in D.identities)
    compose = dict(C.compose)
    compose.update({(g + mC, f + mC): gf + mC for (g, f), gf in D.compose.items()})
    labels = tuple((0, m) for m in C.mor_labels) + tuple((1, m) for m in D.mor_labels)
    group = C.group or D.group
    act = None
    if C.action is not None or D.action is not None:
        act = []
        for g in group:
            co, cm = C.action[g] if C.action else (perms.identity(nC), perms.identity(mC))
            do, dm = (D.action[g] if D.action
                      else (perms.identity(D.n_objects), perms.identity(D.n_morphisms)))
            act.append((co + tuple(nC + x for x in do), cm + tuple(mC + x for x in dm)))
        act = tuple(act)
    return GFinCat(objects, src, tgt, ids, compose, labels, group, act,
                   f"{C.name}+{D.name}")


def full_subcategory(C, objs, mor_filter=None):
    """Full subcategory on ``objs`` (indices); ``mor_filter`` optionally drops morphisms.

    The result carries no group action.
    """
    objs = sorted(objs)
    opos = {a: i for i, a in enumerate(objs)}
    keep = [m for m in range(C.n_morphisms)
            if C.mor_src[m] in opos and C.mor_tgt[m] in opos
            and (mor_filter is None or mor_filter(m))]
    mpos = {m: i for i, m in enumerate(keep)}
    compose = {(mpos[g], mpos[f]): mpos[gf] for (g, f), gf in C.compose.items()
               if g in mpos and f in mpos}
    return GFinCat(tuple(C.objects[a] for a in objs),
                   tuple(opos[C.mor_src[m]] for m in keep),
                   tuple(opos[C.mor_tgt[m]] for m in keep),
                   tuple(mpos[C.identities[a]] for a in objs),
                   compose, tuple(C.mor_labels[m] for m in keep), name=C.name + "|sub")


# --------------------------------------------------------------------------
# functors


@dataclass(eq=False)
class FunctorVal:
    source: GFinCat
    target: GFinCat
    object_map: tuple
    morphism_map: tuple

    def validate(self):
        S, T = self.source, self.target
        for f in range(S.n_morphisms):
            Ff = self.morphism_map[f]
            if (T.mor_src[Ff] != self.object_map[S.mor_src[f]]
                    or T.mor_tgt[Ff] != self.object_map[S.mor_tgt[f]]):
                raise NotACategory("functor preserves source/target", (f,))
        for a in range(S.n_objects):
            if self.morphism_map[S.identities[a]] != T.identities[self.object_map[a]]:
                raise NotACategory("functor preserves identities", (a,))
        for (g, f), gf in S.compose.items():
            if T.compose[(self.morphism_map[g], self.morphism_map[f])] != self.morphism_map[gf]:
                raise NotACategory("functor preserves composition", (g, f))
        return self

    def is_equivariant(self):
        S, T = self.source, self.target
        if S.action is None or T.action is None:
            return True
        for g in S.group:
            for a in range(S.n_objects):
                if self.object_map[S.act_obj(g, a)] != T.act_obj(g, self.object_map[a]):
                    return False
            for f in range(S.n_morphisms):
                if self.morphism_map[S.act_mor(g, f)] != T.act_mor(g, self.morphism_map[f]):
                    return False
        return True

    def is_isomorphism(self):
        return (sorted(self.object_map) == list(range(self.target.n_objects))
                and sorted(self.morphism_map) == list(range(self.target.n_morphisms)))


def identity_functor(C):
    return FunctorVal(C, C, tuple(range(C.n_objects)), tuple(range(C.n_morphisms)))


def compose_functors(F2, F1):
    return FunctorVal(F1.source, F2.target,
                      tuple(F2.object_map[x] for x in F1.object_map),
                      tuple(F2.morphism_map[x] for x in F1.morphism_map))


def constant_functor(C, D, obj):
    return FunctorVal(C, D, (obj,) * C.n_objects, (D.identities[obj],) * C.n_morphisms)


def inclusion_functor(C, sub, objs, mors):
    """``sub`` built by full_subcategory(C, objs, ...) back into ``C``."""
    return FunctorVal(sub, C, tuple(sorted(objs)), tuple(mors))


def _enumerate_functors(A, B, budget):
    """All functors ``A -> B`` as ``(object_map, morphism_map)``."""
    out = []
    nA = A.n_objects
    # order morphisms so identities come first; they are forced
    non_id = [m for m in range(A.n_morphisms) if m not in set(A.identities)]
    rel = {}
    for (g, f), gf in A.compose.items():
        rel.setdefault(max(non_id.index(x) if x in non_id else -1 for x in (g, f, gf)), []).append((g, f, gf))
    for omap in product(range(B.n_objects), repeat=nA):
        mmap = [None] * A.n_morphisms
        for a in range(nA):
            mmap[A.identities[a]] = B.identities[omap[a]]

        def ok(level):
            for g, f, gf in rel.get(level, ()):
                if B.compose[(mmap[g], mmap[f])] != mmap[gf]:
                    return False
            return True

        if not ok(-1):
            continue

        def rec(k):
            if k == len(non_id):
                out.append((omap, tuple(mmap)))
                if len(out) > budget:
                    raise SizeBudgetExceeded("functor enumeration", len(out), budget)
                return
            m = non_id[k]
            for cand in B.hom(omap[A.mor_src[m]], omap[A.mor_tgt[m]]):
                mmap[m] = cand
                if ok(k):
                    rec(k + 1)
            mmap[m] = None

        rec(0)
    return out


def functor_category(A, B, budget=DEFAULT_FUNCTOR_BUDGET):
    """``Cat(A, B)``: functors and natural transformations.

    When either side carries a group action the result carries the conjugation
    action ``(gF)(x) = g F(g^-1 x)``.
    """
    count = B.n_objects ** A.n_objects
    if count > budget * 100:
        raise SizeBudgetExceeded("functor object maps", count, budget * 100)
    functors = _enumerate_functors(A, B, budget)
    fidx = {F: i for i, F in enumerate(functors)}
    nA = A.n_objects
    mors, src, tgt = [], [], []
    for i, (Fo, Fm) in enumerate(functors):
        for k, (Go, Gm) in enumerate(functors):
            choices = [B.hom(Fo[a], Go[a]) for a in range(nA)]
            for eta in product(*choices):
                if all(B.compose[(Gm[f], eta[A.mor_src[f]])] == B.compose[(eta[A.mor_tgt[f]], Fm[f])]
                       for f in range(A.n_morphisms)):
                    mors.append(eta)
                    src.append(i)
                    tgt.append(k)
    midx = {}
    for m, (eta, s) in enumerate(zip(mors, src)):
        midx[(s, eta)] = m
    ids = [midx[(i, tuple(B.identities[Fo[a]] for a in range(nA)))]
           for i, (Fo, _) in enumerate(functors)]
    out_of = {}
    for m, s in enumerate(src):
        out_of.setdefault(s, []).append(m)
    compose = {}
    for f in range(len(mors)):
        for g in out_of.get(tgt[f], ()):
            eta = tuple(B.compose[(mors[g][a], mors[f][a])] for a in range(nA))
            compose[(g, f)] = midx[(src[f], eta)]
    group = A.group or B.group
    act = None
    if A.action is not None or B.action is not None:
        act = []
        for g in group:
            gi = group.inv(g)
            op, mp = [], []
            for Fo, Fm in functors:
                go = tuple(B.act_obj(g, Fo[A.act_obj(gi, a)]) for a in range(nA))
                gm = tuple(B.act_mor(g, Fm[A.act_mor(gi, f)]) for f in range(A.n_morphisms))
                op.append(fidx[(go, gm)])
            for eta, s in zip(mors, src):
                geta = tuple(B.act_mor(g, eta[A.act_obj(gi, a)]) for a in range(nA))
                mp.append(midx[(op[s], geta)])
            act.append((tuple(op), tuple(mp)))
        act = tuple(act)
    C = GFinCat(tuple(functors), src, tgt, ids, compose, tuple(mors), group, act,
                f"Cat({A.name},{B.name})")
    return C


def twisted_hom(G, A, budget=DEFAULT_FUNCTOR_BUDGET):
    """``Cat(G~, A)`` with the conjugation action, and ``iota: A -> Cat(G~, A)``
    sending objects and morphisms to constant functors and transformations."""
    Gt = chaotic_group(G)
    if A.group is None:
        A = GFinCat(A.objects, A.mor_src, A.mor_tgt, A.identities, A.compose, A.mor_labels,
                    G, _trivial_action(G, A.n_objects, A.n_morphisms), A.name)
    C = functor_category(Gt, A, budget)
    n = Gt.n_objects
    oi = {F: i for i, F in enumerate(C.objects)}
    om = []
    for a in range(A.n_objects):
        om.append(oi[((a,) * n, (A.identities[a],) * Gt.n_morphisms)])
    mm = []
    mi = {(C.mor_src[m], C.mor_labels[m]): m for m in range(C.n_morphisms)}
    for f in range(A.n_morphisms):
        mm.append(mi[(om[A.mor_src[f]], (f,) * n)])
    return C, FunctorVal(A, C, tuple(om), tuple(mm))


def postcompose(F, A, source_cat=None, target_cat=None, budget=DEFAULT_FUNCTOR_BUDGET):
    """``F_*: Cat(A, B) -> Cat(A, C)`` for ``F: B -> C``."""
    S = source_cat or functor_category(A, F.source, budget)
    T = target_cat or functor_category(A, F.target, budget)
    oi = {o: i for i, o in enumerate(T.objects)}
    mi = {(T.mor_src[m], T.mor_labels[m]): m for m in range(T.n_morphisms)}
    om = tuple(oi[(tuple(F.object_map[x] for x in Fo), tuple(F.morphism_map[x] for x in Fm))]
               for Fo, Fm in S.objects)
    mm = tuple(mi[(om[S.mor_src[m]], tuple(F.morphism_map[x] for x in S.mor_labels[m]))]
               for m in range(S.n_morphisms))
    return FunctorVal(S, T, om, mm)


def fixed_subcategory(C, H):
    """Objects and morphisms fixed by every element of ``H`` (a Subgroup of ``C.group``)."""
    if C.action is None:
        return C
    hs = [h for h in H.member_indices]
    objs = [a for a in range(C.n_objects) if all(C.action[h][0][a] == a for h in hs)]
    fixed_m = {m for m in range(C.n_morphisms) if all(C.action[h][1][m] == m for h in hs)}
    return full_subcategory(C, objs, lambda m: m in fixed_m)


def orbit_category(C, Pi, action):
    """Quotient by a free action; ``action[p] = (object perm, morphism perm)``.

    Returns the quotient category and the projection functor.
    """
    nO, nM = C.n_objects, C.n_morphisms
    for a in range(nO):
        for p in Pi:
            if p != Pi.identity_index and action[p][0][a] == a:
                raise ActionNotFree(C.objects[a])
    oorb, morb = {}, {}
    orep, mrep = [], []
    for a in range(nO):
        if a not in oorb:
            for p in Pi:
                oorb[action[p][0][a]] = len(orep)
            orep.append(a)
    for m in range(nM):
        if m not in morb:
            for p in Pi:
                morb[action[p][1][m]] = len(mrep)
            mrep.append(m)
    src = [oorb[C.mor_src[m]] for m in mrep]
    tgt = [oorb[C.mor_tgt[m]] for m in mrep]
    ids = [morb[C.identities[a]] for a in orep]
    compose = {}
    for (g, f), gf in C.compose.items():
        key = (morb[g], morb[f])
        val = morb[gf]
        if compose.setdefault(key, val) != val:
            raise NotACategory("quotient composition well defined", (g, f))
    Q = GFinCat(tuple(C.objects[a] for a in orep), src, tgt, ids, compose,
                tuple(C.mor_labels[m] for m in mrep), name=f"{C.name}/{Pi.name}")
    proj = FunctorVal(C, Q, tuple(oorb[a] for a in range(nO)), tuple(morb[m] for m in range(nM)))
    return Q, proj


def right_translation_action(C, Pi):
    """Right multiplication of ``Pi`` on ``chaotic_group``-style categories whose
    objects are ``Pi``'s element indices; written as a left action via inverses."""
    n = C.n_objects
    act = []
    for p in Pi:
        pi = Pi.inv(p)
        op = tuple(C.obj_index[Pi.mul(C.objects[a], pi)] for a in range(n))
        mp = tuple(op[C.mor_tgt[m]] * n + op[C.mor_src[m]] for m in range(C.n_morphisms))
        act.append((op, mp))
    return tuple(act)


# --------------------------------------------------------------------------
# groupoid invariants and equivalence


def components(C):
    """Connected components (by morphisms in either direction) as sorted lists."""
    parent = list(range(C.n_objects))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for s, t in zip(C.mor_src, C.mor_tgt):
        a, b = find(s), find(t)
        if a != b:
            parent[max(a, b)] = min(a, b)
    comp = {}
    for a in range(C.n_objects):
        comp.setdefault(find(a), []).append(a)
    return sorted(comp.values())


def skeleton(C):
    """Iso classes of a groupoid: ``(representative, class size, automorphism order)``."""
    for m, inv in enumerate(C.inverses):
        if inv is None:
            raise NotAGroupoid(C.mor_labels[m])
    return [(C.objects[c[0]], len(c), len(C.hom(c[0], c[0]))) for c in components(C)]


def skeleton_signature(C):
    """Sorted automorphism orders, one per iso class."""
    return sorted(s[2] for s in skeleton(C))


def skeleton_category(C):
    """The full subcategory on the least object of each component, with its inclusion."""
    reps = [c[0] for c in components(C)]
    S = full_subcategory(C, reps)
    rset = set(reps)
    mors = [m for m in range(C.n_morphisms) if C.mor_src[m] in rset and C.mor_tgt[m] in rset]
    return S, FunctorVal(S, C, tuple(sorted(reps)), tuple(mors))


@dataclass
class Verdict:
    essentially_surjective: bool
    fully_faithful: bool
    witness: object = None

    @property
    def is_equivalence(self):
        return self.essentially_surjective and self.fully_faithful

    def __bool__(self):
        return self.is_equivalence


def _isomorphic_objects(C, a, b):
    inv = C.inverses
    return any(inv[m] is not None for m in C.hom(a, b))


def check_equivalence(F):
    """Decide whether ``F`` is an equivalence: essentially surjective and fully faithful."""
    T = F.target
    image = set(F.object_map)
    for b in range(T.n_objects):
        if b not in image and not any(_isomorphic_objects(T, a, b) for a in image):
            return Verdict(False, _fully_faithful(F)[0], ("not essentially surjective", T.objects[b]))
    ff, w = _fully_faithful(F)
    return Verdict(True, ff, w)


def _fully_faithful(F):
    S, T = F.source, F.target
    for a in range(S.n_objects):
        for b in range(S.n_objects):
            hs = S.hom(a, b)
            img = [F.morphism_map[m] for m in hs]
            th = T.hom(F.object_map[a], F.object_map[b])
            if len(set(img)) != len(img):
                return False, ("not faithful", S.objects[a], S.objects[b])
            if len(img) != len(th):
                return False, ("not full", S.objects[a], S.objects[b])
    return True, None


def find_isomorphism(C, D):
    """A functor ``C -> D`` that is bijective on objects and morphisms, or None.

    Backtracking over object bijections, then morphism bijections per hom-set;
    meant for categories with a handful of objects.
    """
    if C.n_objects != D.n_objects or C.n_morphisms != D.n_morphisms:
        return None
    n = C.n_objects
    sig_c = [(len(C.hom(a, a)), sum(len(C.hom(a, b)) for b in range(n))) for a in range(n)]
    sig_d = [(len(D.hom(a, a)), sum(len(D.hom(a, b)) for b in range(n))) for a in range(n)]
    omap = [None] * n
    used = set()

    def try_mors(omap):
        pairs = [(a, b) for a in range(n) for b in range(n) if C.hom(a, b)]
        mmap = [None] * C.n_morphisms
        for a in range(n):
            mmap[C.identities[a]] = D.identities[omap[a]]
        pairs_opts = []
        for a, b in pairs:
            cs = [m for m in C.hom(a, b) if mmap[m] is None]
            ds = [m for m in D.hom(omap[a], omap[b]) if m not in set(D.identities)]
            if len(C.hom(a, b)) != len(D.hom(omap[a], omap[b])):
                return None
            pairs_opts.append((cs, ds))
        flat = [(cs, ds) for cs, ds in pairs_opts if cs]

        def rec(i):
            if i == len(flat):
                F = FunctorVal(C, D, tuple(omap), tuple(mmap))
                try:
                    F.validate()
                except NotACategory:
                    return None
                return F
            cs, ds = flat[i]
            for p in perms.all_perms(len(ds)) if len(ds) <= 7 else ():
                for c, k in zip(cs, p):
                    mmap[c] = ds[k]
                r = rec(i + 1)
                if r is not None:
                    return r
            return None

        return rec(0)

    def rec_obj(a):
        if a == n:
            return try_mors(omap)
        for b in range(n):
            if b not in used and sig_c[a] == sig_d[b]:
                omap[a] = b
                used.add(b)
                r = rec_obj(a + 1)
                if r is not None:
                    return r
                used.discard(b)
        omap[a] = None
        return None

    return rec_obj(0)
