import json

import pytest
from hypothesis import given, strategies as st

from eqcat.errors import NotAGroup, NotAHomomorphism, NotASubgroup, ParseError
from eqcat.groups import (PRESET_NAMES, all_subgroups, centralizer_of_hom, cyclic_group, direct_product,
                          homomorphisms, load_group, preset, subgroup_classes, symmetric_group)

from oracles import conjugacy_classes_of_subgroups, normalizer_order

SMALL = ["trivial", "C2", "C3", "C4", "S3", "Q8", "C2xC2"]


def test_load_trivial_and_c2():
    assert load_group('{"name": "T", "elements": ["e"], "table": [[0]]}').order == 1
    G = load_group({"name": "Z2", "elements": ["e", "a"], "table": [[0, 1], [1, 0]]})
    assert G.order == 2 and G.mul(1, 1) == 0


def test_non_associative_table_rejected():
    # a Latin square with identity 0 and inverses that is not associative
    table = [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]]
    with pytest.raises(NotAGroup) as exc:
        load_group({"name": "M", "elements": list("eabcd"), "table": table})
    assert exc.value.axiom == "associativity" and len(exc.value.witness) == 3


@pytest.mark.parametrize("bad", ["not json", "[]", '{"elements": ["e"]}',
                                 '{"elements": ["e", "a"], "table": [[0, 1]]}',
                                 '{"elements": ["e", "e"], "table": [[0, 1], [1, 0]]}'])
def test_parse_errors(bad):
    with pytest.raises(ParseError):
        load_group(bad)


def test_missing_identity_rejected():
    with pytest.raises(NotAGroup):
        load_group({"elements": ["e", "a"], "table": [[1, 0], [0, 1]]})


def test_group_json_round_trip():
    for name in PRESET_NAMES:
        G = preset(name)
        H = load_group(json.dumps(G.to_dict()))
        assert H.table == G.table and H.elements == G.elements


def test_c2_classes():
    cls = subgroup_classes(preset("C2"))
    assert [c.order for c in cls] == [1, 2]


def test_s3_classes_and_weyl():
    cls = subgroup_classes(preset("S3"))
    assert [c.order for c in cls] == [1, 2, 3, 6]
    assert [c.weyl.order for c in cls] == [6, 1, 2, 1]


def test_q8_classes():
    G = preset("Q8")
    cls = subgroup_classes(G)
    assert [c.order for c in cls] == [1, 2, 4, 4, 4, 8]
    assert {G.elements[x] for x in cls[1].representative.member_indices} == {"1", "-1"}


@pytest.mark.parametrize("name", SMALL)
def test_classes_match_subset_oracle(name):
    G = preset(name)
    oracle = conjugacy_classes_of_subgroups(G)
    cls = subgroup_classes(G)
    assert len(cls) == len(oracle)
    got = sorted(sorted(tuple(m.member_indices) for m in c.members) for c in cls)
    want = sorted(sorted(tuple(sorted(S)) for S in c) for c in oracle)
    assert got == want
    for c in cls:
        S = frozenset(c.representative.member_indices)
        assert c.normalizer.order == normalizer_order(G, S)
        assert c.weyl.order * c.order == c.normalizer.order
        assert G.order % c.normalizer.order == 0
        assert c.representative.member_indices == min(m.member_indices for m in c.members)


@pytest.mark.parametrize("name", SMALL + ["S4"])
def test_class_closure_under_conjugation(name):
    G = symmetric_group(4) if name == "S4" else preset(name)
    for c in subgroup_classes(G):
        ms = {m.member_indices for m in c.members}
        for g in G:
            for m in c.members:
                assert m.conjugate(g).member_indices in ms


def test_canonical_order_is_deterministic():
    G = symmetric_group(4)
    a = [c.representative.member_indices for c in subgroup_classes(G)]
    b = [c.representative.member_indices for c in subgroup_classes(G)]
    assert a == b
    assert [len(x) for x in a] == sorted(len(x) for x in a)
    assert len(a) == 11


def test_all_subgroups_of_s4():
    assert len(all_subgroups(symmetric_group(4))) == 30


def test_centralizer_examples():
    C2, S3, S2 = preset("C2"), symmetric_group(3), symmetric_group(2)
    assert centralizer_of_hom(S3, C2, (0, 0)).order == 6
    transp = next(i for i, p in enumerate(S3.perms) if p == (1, 0, 2))
    assert centralizer_of_hom(S3, C2, (0, transp)).order == 2
    assert centralizer_of_hom(S2, C2, (0, 1)).order == 2
    with pytest.raises(NotAHomomorphism):
        three = next(i for i, p in enumerate(S3.perms) if p == (1, 2, 0))
        centralizer_of_hom(S3, C2, (0, three))


def test_subgroup_of_rejects_non_subgroups():
    G = preset("S3")
    with pytest.raises(NotASubgroup):
        G.subgroup((0, 1, 2))


def test_homomorphism_counts():
    assert len(homomorphisms(preset("C2"), symmetric_group(3))) == 4
    assert len(homomorphisms(preset("Q8"), symmetric_group(2))) == 4
    assert len(homomorphisms(cyclic_group(4), cyclic_group(4))) == 4


@given(st.sampled_from(SMALL), st.data())
def test_group_axioms_hold(name, data):
    G = preset(name)
    a, b, c = (data.draw(st.integers(0, G.order - 1)) for _ in range(3))
    assert G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c))
    assert G.mul(a, G.inv(a)) == G.identity_index


@given(st.integers(1, 4), st.integers(1, 4))
def test_direct_product_order(n, m):
    G = direct_product(cyclic_group(n), cyclic_group(m))
    assert G.order == n * m
    assert len(subgroup_classes(G)) == len(conjugacy_classes_of_subgroups(G))
