import json

import pytest
from hypothesis import given, strategies as st

from eqcat.errors import GroupMismatch, NotAHomomorphism, NotASubgroup, ParseError
from eqcat.groups import homomorphisms, preset, subgroup_classes, symmetric_group
from eqcat.gsets import (all_gsets, coset_space, disjoint_union, empty, fixed_points, gset_iso, hom_classes,
                         load_gset, make_gset, orbit_type, point, product_gset, regular, restrict, trivial)

from oracles import hom_classes_by_search, iso_by_search

C2 = preset("C2")
S3 = preset("S3")
SMALL = ["trivial", "C2", "C3", "C4", "S3", "C2xC2"]


def free_c2():
    return make_gset(C2, 2, {1: (1, 0)})


def test_make_gset_examples():
    assert make_gset(C2, 0, {}).size == 0
    A = free_c2()
    assert A.action[1] == (1, 0) and orbit_type(A).counts() == {0: 1}
    with pytest.raises(NotAHomomorphism):
        make_gset(C2, 3, {1: (1, 2, 0)})


def test_make_gset_rejects_non_permutation():
    with pytest.raises(ParseError):
        make_gset(C2, 2, {1: (0, 0)})


def test_load_gset_one_based():
    A = load_gset(json.dumps({"group": "C2", "size": 2, "action": {"a^1": [2, 1]}}), {"C2": C2})
    assert A.action[1] == (1, 0)
    with pytest.raises(ParseError):
        load_gset("{", {"C2": C2})


def test_orbit_type_examples():
    A = disjoint_union(trivial(C2, 2), free_c2())
    assert A.size == 4 and orbit_type(A).counts() == {1: 2, 0: 1}
    assert orbit_type(empty(C2)).entries == ()
    assert orbit_type(regular(S3)).counts() == {0: 1}


def test_gset_iso_examples():
    A = free_c2()
    assert gset_iso(A, A).values == (0, 1)
    assert gset_iso(trivial(C2, 2), A) is None
    B = make_gset(C2, 2, {1: (1, 0)})
    assert gset_iso(A, B) is not None
    with pytest.raises(GroupMismatch):
        gset_iso(A, point(S3))


def test_disjoint_union_examples():
    A = free_c2()
    assert disjoint_union(A, empty(C2)).action == A.action
    assert orbit_type(disjoint_union(A, A)).counts() == {0: 2}
    U = disjoint_union(point(C2), A)
    assert U.size == 3 and orbit_type(U).counts() == {1: 1, 0: 1}


def test_product_examples():
    A = free_c2()
    assert gset_iso(product_gset(A, point(C2)), A) is not None
    assert orbit_type(product_gset(A, A)).counts() == {0: 2}
    assert orbit_type(product_gset(A, point(C2))).counts() == {0: 1}


def test_fixed_points_examples():
    A = free_c2()
    assert fixed_points(A, C2.trivial_subgroup()) == {0, 1}
    assert fixed_points(A, C2.whole()) == frozenset()
    C3 = next(c.representative for c in subgroup_classes(S3) if c.order == 3)
    assert fixed_points(coset_space(C3), C3) == {0, 1}
    with pytest.raises(NotASubgroup):
        fixed_points(A, S3.whole())


def test_restrict_examples():
    Q8 = preset("Q8")
    Z = next(c.representative for c in subgroup_classes(Q8) if c.order == 2)
    R = restrict(regular(Q8), Z)
    assert len(R.orbits) == 4 and all(len(o) == 2 for o in R.orbits)
    A = regular(S3)
    assert all(p == tuple(range(6)) for p in restrict(A, S3.trivial_subgroup()).action)
    assert restrict(A, S3.whole()).action == A.action


def test_hom_classes_examples():
    assert hom_classes(preset("trivial"), symmetric_group(3)) == [((0,), 1, 6)]
    assert len(hom_classes(C2, symmetric_group(2))) == 2
    assert sorted(c for _, _, c in hom_classes(C2, symmetric_group(3))) == [2, 6]


@pytest.mark.parametrize("name", SMALL)
@pytest.mark.parametrize("j", [1, 2, 3, 4])
def test_h1_counts_isoclasses_of_gsets(name, j):
    G = preset(name)
    if G.order > 6:
        pytest.skip("bounded by |H| <= 6")
    classes = hom_classes(G, symmetric_group(j))
    types = {orbit_type(A).entries for A in all_gsets(G, j)}
    assert len(classes) == len(types)


@pytest.mark.parametrize("name", SMALL)
def test_hom_classes_match_function_search(name):
    G = preset(name)
    Pi = symmetric_group(3)
    assert sorted((s, c) for _, s, c in hom_classes(G, Pi)) == hom_classes_by_search(G, Pi)


def _gsets_upto(G, n):
    return [A for j in range(n + 1) for A in all_gsets(G, j)]


@pytest.mark.parametrize("name", ["C2", "C3"])
def test_union_and_product_laws_up_to_iso(name):
    G = preset(name)
    sets = _gsets_upto(G, 2)
    for A in sets:
        for B in sets:
            assert iso_by_search(disjoint_union(A, B), disjoint_union(B, A)) is not None
            if A.size * B.size <= 4:
                assert iso_by_search(product_gset(A, B), product_gset(B, A)) is not None
            for C in sets:
                if A.size + B.size + C.size <= 4:
                    assert iso_by_search(disjoint_union(disjoint_union(A, B), C),
                                         disjoint_union(A, disjoint_union(B, C))) is not None
                if A.size * B.size * C.size <= 4:
                    assert iso_by_search(product_gset(product_gset(A, B), C),
                                         product_gset(A, product_gset(B, C))) is not None


@pytest.mark.parametrize("name", SMALL + ["Q8"])
def test_mark_consistency(name):
    G = preset(name)
    from eqcat.groups import subconjugate
    for c in subgroup_classes(G):
        O = coset_space(c.representative)
        assert len(fixed_points(O, c.representative)) == c.weyl.order
        for k in subgroup_classes(G):
            if not subconjugate(G, k.representative, c.representative):
                assert not fixed_points(O, k.representative)


def test_q8_obstruction_by_homs():
    Q8 = preset("Q8")
    minus = Q8.index("-1")
    assert all(a[minus] == 0 for a in homomorphisms(Q8, symmetric_group(2)))


@given(st.sampled_from(SMALL), st.integers(0, 4), st.data())
def test_iso_iff_same_orbit_type(name, j, data):
    G = preset(name)
    sets = all_gsets(G, j)
    A = data.draw(st.sampled_from(sets))
    B = data.draw(st.sampled_from(sets))
    iso = gset_iso(A, B)
    assert (iso is not None) == (orbit_type(A) == orbit_type(B))
    if iso is not None:
        assert iso.is_equivariant() and iso.is_bijective()
    assert orbit_type(A).total_size() == j
