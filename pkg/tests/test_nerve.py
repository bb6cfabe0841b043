import csv
from itertools import combinations
from math import gcd

import pytest
from hypothesis import given, strategies as st

from eqcat.errors import NotAGroupoid, SizeBudgetExceeded
from eqcat.fincat import chaotic, coproduct_category, discrete, from_dict, group_as_category, terminal
from eqcat.groups import preset, symmetric_group
from eqcat.gsets import regular, trivial
from eqcat.nerve import (AbelianGroup, action_groupoid, bgpi_fixed_check, check_simplicial_identities,
                         chain_counts, dump_chains, euler_check, fixedcat_check, homology,
                         invariant_factors, nerve_truncated, pi0_and_vertex)

C2, S3 = preset("C2"), preset("S3")


def test_nerve_levels():
    assert nerve_truncated(terminal(), 3).sizes() == [1, 1, 1, 1]
    for n in range(1, 4):
        assert nerve_truncated(chaotic(range(n)), 3).sizes() == [n ** (q + 1) for q in range(4)]
    assert nerve_truncated(group_as_category(C2), 3).sizes() == [1, 2, 4, 8]
    assert chain_counts(group_as_category(S3), 3) == [1, 6, 36, 216]
    with pytest.raises(SizeBudgetExceeded):
        nerve_truncated(group_as_category(S3), 5, budget=1000)


@pytest.mark.parametrize("C", [terminal(), chaotic(range(3)), group_as_category(S3),
                               action_groupoid(regular(C2)), discrete(range(2))])
def test_simplicial_identities(C):
    rep = check_simplicial_identities(nerve_truncated(C, 3))
    assert rep.ok and len(rep.checks) == 3


def test_pi0_examples():
    assert [v for _, v in pi0_and_vertex(chaotic(range(3)))] == [1]
    assert [v for _, v in pi0_and_vertex(group_as_category(S3))] == [6]
    both = coproduct_category(chaotic(range(3)), group_as_category(S3))
    assert sorted(v for _, v in pi0_and_vertex(both)) == [1, 6]
    arrow = from_dict({"objects": ["x", "y"],
                       "morphisms": [{"id": "1x", "src": "x", "tgt": "x"}, {"id": "1y", "src": "y", "tgt": "y"},
                                     {"id": "f", "src": "x", "tgt": "y"}],
                       "identities": {"x": "1x", "y": "1y"},
                       "compose": [["1x", "1x", "1x"], ["1y", "1y", "1y"], ["f", "1x", "f"], ["1y", "f", "f"]]})
    with pytest.raises(NotAGroupoid):
        pi0_and_vertex(arrow)


def test_homology_examples():
    H = homology(group_as_category(C2), 3)
    assert H[0] == AbelianGroup(1) and H[1] == AbelianGroup(0, (2,))
    assert str(H[1]) == "Z/2" and str(AbelianGroup(0)) == "0"
    for n in range(1, 4):
        H = homology(chaotic(range(n)), 3)
        assert H[0] == AbelianGroup(1)
        assert all(h == AbelianGroup(0) for h in H[1:])
    H = homology(discrete(range(3)), 3)
    assert H[0] == AbelianGroup(3)
    H = homology(group_as_category(preset("C2xC2")), 3)
    assert H[1] == AbelianGroup(0, (2, 2)) and H[2] == AbelianGroup(0, (2,))
    H = homology(group_as_category(preset("C3")), 3)
    assert H[1] == AbelianGroup(0, (3,)) and H[2] == AbelianGroup(0)
    H = homology(group_as_category(S3), 3)
    assert H[1] == AbelianGroup(0, (2,))


def test_homology_of_action_groupoid_matches_stabilizers():
    # translation groupoid of G/e is equivalent to a point
    H = homology(action_groupoid(regular(C2)), 3)
    assert H[0] == AbelianGroup(1) and H[1] == AbelianGroup(0)
    H = homology(action_groupoid(trivial(C2, 2)), 3)
    assert H[0] == AbelianGroup(2) and H[1] == AbelianGroup(0, (2, 2))


def _det(M):
    """Integer determinant by Bareiss elimination."""
    A = [row[:] for row in M]
    n, sign, prev = len(A), 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            sw = next((i for i in range(k + 1, n) if A[i][k]), None)
            if sw is None:
                return 0
            A[k], A[sw] = A[sw], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1] if n else 1


def _divisor_oracle(M):
    """Invariant factors from determinantal divisors ``d_k = gcd of k x k minors``."""
    m, n = len(M), len(M[0]) if M else 0
    ds = [1]
    for k in range(1, min(m, n) + 1):
        g = 0
        for rows in combinations(range(m), k):
            for cols in combinations(range(n), k):
                g = gcd(g, _det([[M[r][c] for c in cols] for r in rows]))
        if g == 0:
            break
        ds.append(g)
    return [ds[k] // ds[k - 1] for k in range(1, len(ds))]


@given(st.integers(1, 4).flatmap(lambda m: st.integers(1, 4).flatmap(
    lambda n: st.lists(st.lists(st.integers(-6, 6), min_size=n, max_size=n), min_size=m, max_size=m))))
def test_smith_normal_form_matches_divisors(M):
    f = invariant_factors(M)
    assert f == _divisor_oracle(M)
    assert all(b % a == 0 for a, b in zip(f, f[1:]))


def test_smith_normal_form_example():
    assert invariant_factors([[2, 4, 4], [-6, 6, 12], [10, -4, -16]]) == [2, 6, 12]
    assert invariant_factors([[0, 0], [0, 0]]) == []
    assert invariant_factors([]) == []


def test_euler_characteristic():
    for C in (discrete(range(4)), chaotic(range(1)), terminal()):
        simp, ranks, top_empty = euler_check(C, 3)
        assert top_empty and simp == ranks
    _, _, top_empty = euler_check(chaotic(range(2)), 3)
    assert not top_empty


def test_dump_chains(tmp_path):
    paths = dump_chains(group_as_category(C2), 3, str(tmp_path))
    assert [p.rsplit("/", 1)[1] for p in paths] == ["boundary_1.csv", "boundary_2.csv", "boundary_3.csv"]
    rows = list(csv.reader(open(paths[1])))
    # normalized chains of BZ/2: one nondegenerate simplex per level
    assert rows == [["2"]]
    rows = list(csv.reader(open(paths[0])))
    assert rows == [["0"]]


def test_bgpi_examples():
    r = bgpi_fixed_check(C2, symmetric_group(2), C2.trivial_subgroup())
    assert r.ok and r.get("vertex orders = centralizer orders").note == "vertex orders [2]"
    r = bgpi_fixed_check(C2, symmetric_group(2), C2.whole())
    assert r.ok and r.get("vertex orders = centralizer orders").note == "vertex orders [2, 2]"
    r = bgpi_fixed_check(C2, symmetric_group(3), C2.whole())
    assert r.ok and r.get("vertex orders = centralizer orders").note == "vertex orders [2, 6]"
    assert r.get("generic twisted_hom agrees with the model").status == "PASS"


@pytest.mark.parametrize("G", ["trivial", "C2", "C3", "C4", "C2xC2", "S3"])
@pytest.mark.parametrize("n", [2, 3])
def test_fixedcat(G, n):
    rep = fixedcat_check(preset(G), symmetric_group(n))
    assert rep.ok, rep.summary()
