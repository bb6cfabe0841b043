import numpy as np
import pytest
from hypothesis import given, strategies as st

from eqcat import perms
from eqcat.errors import ShapeMismatch
from eqcat.groups import preset
from eqcat.gsets import point, regular
from eqcat.pqr import (CanonicalInterleaver, CanonicalPower, Compose, Identity, Interleaver, Shift, SigmaAct,
                       Swap, combinadic, e_category, egx_category, egx_fixed, evaluate, is_based,
                       lambda_action, omega_check, pg_gamma, pg_unit, qg_gamma, qg_unit, random_pg,
                       random_qg, rg_bijection, theta_E, theta_X, uncombinadic, unipq_check, universe,
                       verify_lambda, verify_theta, xi_E)

C2 = preset("C2")
GROUPS = ["trivial", "C2", "C3", "S3"]


def test_universe_examples():
    U = universe(preset("trivial"), 3)
    assert U.prefix() == [(0, n, 0) for n in range(3)]
    assert [U.rank(U.point(r)) for r in range(50)] == list(range(50))
    U = universe(C2, 2)
    P = U.prefix()
    assert len(P) == 6
    assert all(U.act(g, U.basepoint) == U.basepoint for g in C2)
    with pytest.raises(ValueError):
        universe(C2, 0)


def test_evaluate_examples():
    U = universe(C2, 3)
    assert all(evaluate(Identity(), u) == u for u in U.prefix())
    c = U.prefix()[0][0]
    assert evaluate(CanonicalInterleaver(2, 1), (c, 0, 1)) == (c, 1, 1)
    rng = np.random.default_rng(0)
    f = random_pg(U, 2, rng)
    pts = {(i, u) for i in range(2) for u in U.prefix(250 // U.period + 1)}
    pts = sorted(pts)[:500]
    assert len({f(x) for x in pts}) == len(pts)
    with pytest.raises(ShapeMismatch):
        CanonicalInterleaver(2, 2)


@given(st.lists(st.integers(0, 60), min_size=1, max_size=4, unique=True))
def test_combinadic_roundtrip(v):
    v = tuple(sorted(v))
    assert uncombinadic(combinadic(v), len(v)) == v


def test_combinadic_is_bijection_on_small_range():
    from itertools import combinations
    for d in range(1, 4):
        vals = sorted(combinadic(c) for c in combinations(range(10), d))
        assert vals[: len(vals)] == list(range(len(vals)))


def test_pg_gamma_examples():
    U = universe(C2, 3)
    rng = np.random.default_rng(1)
    unit = pg_unit()
    for _ in range(100):
        x = (0, U.sample(rng))
        assert pg_gamma(unit, [unit])(x) == x[1]
    a = Interleaver(2)
    nested = pg_gamma(a, [pg_gamma(a, [unit, unit]), unit])
    flat = pg_gamma(a, [a, unit])
    for _ in range(100):
        x = (int(rng.integers(3)), U.sample(rng))
        assert nested(x) == flat(x)
    s = perms.from_cycles(2, (1, 2))
    for _ in range(100):
        x = (int(rng.integers(3)), U.sample(rng))
        lhs = pg_gamma(Compose(a, SigmaAct(s)), [a, unit])
        # inputs permuted by s, then the block permutation of sizes (2, 1)
        rhs = Compose(pg_gamma(a, [unit, a]), SigmaAct(perms.block_perm(s, [2, 1])))
        assert lhs(x) == rhs(x)


def test_qg_gamma_examples():
    U = universe(C2, 3)
    rng = np.random.default_rng(2)
    unit = qg_unit()
    p2 = rg_bijection(U, 2)
    for _ in range(100):
        y = (U.sample(rng),)
        assert qg_gamma(unit, [unit])(y) == y[0]
    nested = qg_gamma(p2, [qg_gamma(p2, [unit, unit]), unit])
    flat = qg_gamma(p2, [p2, unit])
    for _ in range(100):
        y = tuple(U.sample(rng) for _ in range(3))
        assert nested(y) == flat(y)
    for j in range(4):
        f = random_qg(U, j, rng)
        g = qg_gamma(f, [random_qg(U, 1, rng) for _ in range(j)])
        assert is_based(U, g, j)


@pytest.mark.parametrize("G", GROUPS)
def test_rg_bijection(G):
    G = preset(G)
    U = universe(G, 3)
    assert isinstance(rg_bijection(U, 1).f, Identity)
    b = rg_bijection(U, 2)
    assert b((U.basepoint, U.basepoint)) == U.basepoint
    rng = np.random.default_rng(3)
    for _ in range(100):
        y = tuple(U.sample(rng) for _ in range(2))
        u = b(y)
        assert b.inverse(u) == y
        sy = frozenset(g for g in G if U.act_pow(g, y) == y)
        su = frozenset(U.stabilizer(u))
        assert any(frozenset(G.conj(t, k) for k in sy) == su for t in G)


def test_canonical_power_prefix_surjective():
    U = universe(C2, 2)
    for j in (2, 3):
        b = CanonicalPower(U, j)
        for u in U.prefix():
            assert b(b.inverse(u)) == u


def test_lambda_action_examples():
    U = universe(C2, 3)
    rng = np.random.default_rng(4)
    unit = pg_unit()
    lam = lambda_action(rg_bijection(U, 2), [unit, unit])
    for _ in range(100):
        x = (0, U.sample(rng))
        assert lam(x) == x[1]
    psi = rg_bijection(U, 1)
    phi = random_pg(U, 2, rng)
    lam = lambda_action(psi, [phi])
    seen = {}
    for i in range(2):
        for u in U.prefix():
            v = lam((i, u))
            assert v == phi((i, u))
            assert v not in seen
            seen[v] = (i, u)
    with pytest.raises(ShapeMismatch):
        lambda_action(Compose(CanonicalInterleaver(2, 0), rg_bijection(U, 2)), [unit, unit])


@pytest.mark.parametrize("G", GROUPS)
def test_verify_lambda(G):
    rep = verify_lambda(preset(G), samples=60)
    assert rep.ok, rep.summary()


def test_e_category_examples():
    U = universe(C2, 1)
    E = e_category(C2, U, 2)
    empty = E.objects.index(((), ()))
    assert len(E.hom(empty, empty)) == 1
    for i, (A, _) in enumerate(E.objects):
        assert len(E.hom(i, i)) == [1, 1, 2][len(A)]
    X = point(C2)
    assert E.n_objects == egx_category(C2, U, X, 2).n_objects


def test_theta_xi_examples():
    U = universe(C2, 2)
    a = Interleaver(2)
    assert theta_E(Interleaver(0), []) == ()
    p, q = U.prefix()[0], U.prefix()[1]
    assert len(theta_E(a, [(p,), (q,)])) == 2
    assert xi_E(rg_bijection(U, 2), [(p,), ()]) == ()
    assert len(xi_E(rg_bijection(U, 2), [(p,), (q,)])) == 1
    obj = theta_X(a, [((p,), (0,)), ((q,), (1,))])
    assert sorted(obj[1]) == [0, 1]


@pytest.mark.parametrize("G", ["C2", "C3"])
def test_theta_action_laws(G):
    G = preset(G)
    rep = verify_theta(G, regular(G), samples=20)
    assert rep.ok, rep.summary()


def test_egx_fixed_objects():
    U = universe(C2, 1)
    X = regular(C2)
    F = egx_fixed(U, X, C2.whole(), 2)
    # C2-stable 2-subsets labelled equivariantly by the free orbit
    for A, p in F.objects:
        lab = dict(zip(A, p))
        assert all(lab[U.act(g, a)] == X.action[g][lab[a]] for g in C2 for a in A)


def test_omega_examples():
    rep = omega_check(C2, point(C2), 2)
    assert rep.ok
    c = rep.checks[[i for i, c in enumerate(rep.checks)
                    if c.law.startswith("H-fixed skeleta: free") and c.domain == "arity 2, H = {e,a^1}"][0]]
    assert c.note == "2 classes"
    zero = [c for c in rep.checks if c.law.startswith("H-fixed skeleta: free") and "arity 0" in c.domain]
    assert all(c.note == "1 classes" for c in zero)
    ident = [c for c in rep.checks if c.law.startswith("H-fixed skeleta: free") and "H = {e}" in c.domain]
    assert all(c.note == "1 classes" for c in ident)


def test_omega_regular():
    assert omega_check(C2, regular(C2), 2).ok


@pytest.mark.parametrize("G", ["C2", "C3", "C4", "C2xC2"])
def test_unipq_dichotomy(G):
    rep = unipq_check(preset(G), 2, samples=40)
    assert rep.ok, rep.summary()


def test_non_equivariant_swap_detected():
    U = universe(C2, 2)
    pts = U.prefix()
    free = [u for u in pts if len(U.stabilizer(u)) == 1]
    f = Swap(free[0], pts[-1])
    assert any(f(U.act(g, u)) != U.act(g, f(u)) for g in C2 for u in pts)
    assert Shift(1)((0, 0, 0)) == (0, 1, 0)
