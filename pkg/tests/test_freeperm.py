import pytest

from eqcat import perms
from eqcat.errors import NotInjective
from eqcat.fincat import skeleton
from eqcat.freeperm import (catone_check, cattwo_check, f_shriek, fgx_component, fgx_over, fixed_free,
                            free_og, free_pairing, i_star, i_star_map, span_check, span_compose, unit_span,
                            wreath_skeleton)
from eqcat.groups import preset
from eqcat.gsets import GMap, all_gsets, orbit_type, disjoint_union, empty, point, product_gset, regular, trivial

C2, C3, S3 = preset("C2"), preset("C3"), preset("S3")


def test_free_og_examples():
    F = free_og(C2, point(C2), 2)
    assert F.component(0).n_objects == 1
    X = trivial(C2, 3)
    C1 = free_og(C2, X, 1).component(1)
    assert C1.n_objects == 3 and C1.n_morphisms == 3
    assert F.n_objects(2) == 2 == F.component(2).n_objects


def test_fixed_free_examples():
    F = free_og(C2, point(C2), 2)
    whole = F.component(2)
    T = fixed_free(F, C2.trivial_subgroup(), 2)
    assert (T.n_objects, T.n_morphisms) == (whole.n_objects, whole.n_morphisms)
    Fx = fixed_free(F, C2.whole(), 2)
    assert Fx.n_objects == 2
    assert all(len(Fx.hom(a, a)) == 2 for a in range(2))
    F3 = free_og(C3, point(C3), 3)
    assert len(skeleton(fixed_free(F3, C3.whole(), 3))) == 2


def test_fgx_examples():
    E = fgx_over(C2, empty(C2), 3)
    assert E.n_objects == 1
    assert len(skeleton(fgx_over(C2, point(C2), 2))) == 4
    assert fgx_component(C2, regular(C2), 1).n_objects == 0


def test_catone_examples():
    for j in range(3):
        assert catone_check(C2, point(C2), j).ok
    rep = catone_check(C2, point(C2), 2)
    assert "2 objects" in rep.get("bijective on objects").note
    assert "4 morphisms" in rep.get("bijective on morphisms").note
    rep = catone_check(S3, point(S3), 3)
    assert rep.ok
    # three fixed points, G/C2, or a fixed point plus G/C3; compared with the G-set classification
    n = len(skeleton(fgx_component(S3, point(S3), 3)))
    assert n == len(skeleton(fixed_free(free_og(S3, point(S3), 3), S3.whole(), 3))) == 3
    assert n == len({orbit_type(A) for A in all_gsets(S3, 3)})


@pytest.mark.parametrize("G", ["C2", "C3", "C4", "C2xC2"])
@pytest.mark.parametrize("xs", ["point", "regular", "two"])
def test_catone_isomorphism(G, xs):
    G = preset(G)
    X = {"point": point, "regular": regular, "two": lambda G: trivial(G, 2)}[xs](G)
    for j in range(3):
        assert catone_check(G, X, j).ok


def test_cattwo_examples():
    P = point(C2)
    by_j = {j: sorted(w[1] for w in wreath_skeleton(C2, P, j)) for j in range(4)}
    assert by_j[2] == [2, 2]
    assert by_j[3] == [2, 6]
    assert [w[0] for w in wreath_skeleton(C2, empty(C2), 0)] == [()]
    assert wreath_skeleton(C2, empty(C2), 2) == []
    assert cattwo_check(C2, P, 3).ok


def test_cattwo_literal_formula_with_stabilizers():
    rep = cattwo_check(C2, regular(C2), 2)
    agree = [c for c in rep.checks if not c.law.startswith("automorphism")]
    assert all(c.status == "PASS" for c in agree)
    lit = [c for c in rep.checks if c.law.startswith("automorphism")]
    assert any(c.status == "FAIL" for c in lit)


def test_f_shriek_examples():
    X = trivial(C2, 2)
    F = free_og(C2, X, 3)
    ident = GMap(X, X, (0, 1))
    objs = [o for j in range(4) for o in F.objects(j)]
    assert all(f_shriek(ident, o) == o for o in objs)
    collapse = GMap(X, point(C2), (0, 0))
    swap = GMap(X, X, (1, 0))
    for o in objs:
        assert f_shriek(collapse, f_shriek(swap, o)) == f_shriek(
            GMap(X, point(C2), tuple(collapse.values[swap.values[p]] for p in range(2))), o)
        im = f_shriek(collapse, o)
        assert im[0] == o[0] and set(im[1]) <= {0}


def test_i_star_examples():
    A = point(C2)
    B = disjoint_union(A, regular(C2))
    inc = GMap(A, B, (0,))
    t = i_star_map(A, B, inc)
    assert t == (0, None, None)
    a = (perms.identity(2), perms.identity(2))
    assert i_star(t, (a, (0, 1))) == (((0,), (0,)), (0,))
    same = i_star_map(A, A, GMap(A, A, (0,)))
    F = free_og(C2, A, 2)
    for j in range(3):
        for o in F.objects(j):
            assert i_star(same, o) == o
            assert i_star(t, f_shriek(inc, o)) == o
    with pytest.raises(NotInjective):
        i_star_map(trivial(C2, 2), A, GMap(trivial(C2, 2), A, (0, 0)))


def test_free_pairing_examples():
    X, Y, Z = trivial(C2, 2), point(C2), regular(C2)
    o0 = ((perms.identity(0),) * 2, ())
    o1 = ((perms.identity(1),) * 2, (1,))
    assert free_pairing(X, Y, o0, o1)[1] == ()
    assert free_pairing(X, Y, o1, o0)[1] == ()
    assert free_pairing(X, Y, o1, ((perms.identity(1),) * 2, (0,))) == (((0,), (0,)), (1,))
    F2 = free_og(C2, Z, 2)
    XY = product_gset(X, Y)
    YZ = product_gset(Y, Z)
    for c in F2.objects(2):
        a, b = o1, ((perms.identity(1),) * 2, (0,))
        lhs = free_pairing(XY, Z, free_pairing(X, Y, a, b), c)
        rhs = free_pairing(X, YZ, a, free_pairing(Y, Z, b, c))
        assert lhs == rhs


def test_span_examples():
    assert span_check(C2, [point(C2)], 2).ok
    B = regular(C2)
    beta, entries = unit_span(B)
    sign = perms.from_cycles(2, (1, 2))
    assert beta == (perms.identity(2), sign)
    assert entries == (0, 3)


def test_span_associativity_through_free_orbit():
    P, R = point(C2), regular(C2)
    sets = (P, R, P, P)  # D, C, B, A with B = free orbit
    D, C, B, A = (P, P, R, P)
    cnt = 0
    for s1 in [o for j in range(3) for o in free_og(C2, product_gset(B, A), 2).objects(j)]:
        for s2 in [o for j in range(2) for o in free_og(C2, product_gset(C, B), 1).objects(j)]:
            for s3 in [o for j in range(3) for o in free_og(C2, product_gset(D, C), 2).objects(j)]:
                lhs = span_compose(D, B, A, span_compose(D, C, B, s3, s2), s1)
                rhs = span_compose(D, C, A, s3, span_compose(C, B, A, s2, s1))
                assert lhs == rhs
                cnt += 1
    assert cnt and sets
