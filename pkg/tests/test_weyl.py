from fractions import Fraction

import pytest

from whitcoeff.rootsys import build_root_system, eisenstein_weight, weyl_group_order
from whitcoeff.weyl import (
    CosetTable,
    InfeasibleEnumeration,
    WeylElement,
    act,
    coset_reps_exhaustive,
    coset_reps_levi_pruned,
    inversion_roots_of_inverse,
    inversion_set,
    longest_element,
    multiply,
)


def test_act_identity_and_simple_reflection():
    rs = build_root_system("A", 2)
    lam = eisenstein_weight(rs, 1)
    e = WeylElement.identity(rs)
    assert act(e, lam) == lam
    # s_1 Lambda_1 = Lambda_1 - alpha_1
    s1 = WeylElement(rs, (1,))
    img = act(s1, rs.fundamental_weight(1))
    alpha1_fund = rs.root_to_weight_coords(rs.simple_root(1))
    expected = tuple(a - b for a, b in zip(rs.fundamental_weight(1).coords, alpha1_fund))
    assert img.coords == expected


def test_longest_element_small():
    a1 = build_root_system("A", 1)
    w0 = longest_element(a1)
    assert w0.word == (1,)


@pytest.mark.parametrize("series,rank", [("A", 3), ("D", 5), ("E", 6)])
def test_longest_element_properties(series, rank):
    rs = build_root_system(series, rank)
    w0 = longest_element(rs)
    assert w0.length == len(rs.positive_roots)
    assert act(w0, rs.weyl_vector).coords == tuple(-c for c in rs.weyl_vector.coords)
    assert multiply(w0, w0).word == ()
    # w0 maps every positive root to a negative root
    assert all(all(c <= 0 for c in w0.act_root(beta)) for beta in rs.positive_roots)


def test_inversion_sets():
    rs = build_root_system("A", 2)
    assert inversion_set(WeylElement.identity(rs)) == set()
    for i in rs.nodes():
        assert inversion_set(WeylElement(rs, (i,))) == {rs.simple_root(i)}
    w0 = longest_element(rs)
    assert inversion_set(w0) == set(rs.positive_roots)


@pytest.mark.parametrize("series,rank", [("A", 3), ("D", 4)])
def test_prefix_inversion_formula_matches_direct_scan(series, rank):
    rs = build_root_system(series, rank)
    tab = coset_reps_exhaustive(rs, ())
    for word in tab.word_tuples():
        w = WeylElement(rs, word)
        direct = inversion_set(w.inverse())
        via_prefix = set(inversion_roots_of_inverse(rs, word))
        assert via_prefix == direct


def test_length_changes_by_one_under_simple_reflection():
    rs = build_root_system("A", 3)
    tab = coset_reps_exhaustive(rs, ())
    for word in list(tab.word_tuples())[:40]:
        w = WeylElement(rs, word)
        for i in rs.nodes():
            ws = multiply(w, WeylElement(rs, (i,)))
            assert abs(ws.length - w.length) == 1


def test_equality_by_action_not_word():
    rs = build_root_system("A", 2)
    # two reduced words for w0
    assert WeylElement(rs, (1, 2, 1)) == WeylElement(rs, (2, 1, 2))
    assert hash(WeylElement(rs, (1, 2, 1))) == hash(WeylElement(rs, (2, 1, 2)))


def test_exhaustive_counts():
    a2 = build_root_system("A", 2)
    assert len(coset_reps_exhaustive(a2, (1,))) == 3
    d5 = build_root_system("D", 5)
    assert len(coset_reps_exhaustive(d5, (4, 5))) == 480
    e6 = build_root_system("E", 6)
    assert len(coset_reps_exhaustive(e6, (1, 4))) == 12960


def test_exhaustive_reps_are_minimal_and_distinct():
    rs = build_root_system("A", 3)
    tab = coset_reps_exhaustive(rs, (1, 3))
    reps = list(tab.reps())
    assert len(reps) == 24 // 4
    for w in reps:
        for i in tab.subset:
            assert all(c >= 0 for c in w.act_root(rs.simple_root(i)))
    assert len({w for w in reps}) == len(reps)
    # pairwise distinct cosets: a^{-1} b must move the weight stabilized
    # exactly by W_{subset}
    from whitcoeff.rootsys import WeightVector

    seed = WeightVector(tuple(Fraction(0 if i in tab.subset else 1) for i in rs.nodes()))
    for a in reps:
        for b in reps:
            if a == b:
                continue
            u = multiply(a.inverse(), b)
            assert act(u, seed) != seed


def test_exhaustive_cap():
    e8 = build_root_system("E", 8)
    with pytest.raises(InfeasibleEnumeration) as exc:
        coset_reps_exhaustive(e8, (6, 8))
    assert "levi" in str(exc.value).lower() or "pruned" in str(exc.value).lower()


def test_levi_pruned_counts():
    e6 = build_root_system("E", 6)
    tab = coset_reps_levi_pruned(e6, (2, 3, 4, 5, 6), (1,))
    assert len(tab) == 21
    for n in (4, 5, 6):
        dn = build_root_system("D", n)
        tab = coset_reps_levi_pruned(dn, tuple(range(2, n + 1)), (n - 1, n))
        assert len(tab) == 2 * n - 3


def test_levi_pruned_requires_single_missing_node():
    d5 = build_root_system("D", 5)
    with pytest.raises(Exception):
        coset_reps_levi_pruned(d5, (3, 4, 5), (1,))


@pytest.mark.parametrize(
    "series,rank,node,subset",
    [("A", 2, 1, (1,)), ("A", 3, 2, (1, 3)), ("A", 4, 2, (1, 3)), ("D", 5, 1, (4, 5)), ("E", 6, 1, (1, 4))],
)
def test_pruned_equals_filtered_exhaustive(series, rank, node, subset):
    rs = build_root_system(series, rank)
    levi = tuple(i for i in rs.nodes() if i != node)
    pruned = {w for w in coset_reps_levi_pruned(rs, levi, subset).reps()}
    exhaustive = coset_reps_exhaustive(rs, subset)
    filtered = set()
    for w in exhaustive.reps():
        inv = w.inverse()
        if all(all(c >= 0 for c in inv.act_root(rs.simple_root(i))) for i in levi):
            filtered.add(w)
    assert pruned == filtered


def test_pruned_reps_satisfy_both_positivity_conditions():
    e8 = build_root_system("E", 8)
    tab = coset_reps_levi_pruned(e8, tuple(range(1, 8)), (6, 8))
    for w in tab.reps():
        for i in tab.subset:
            assert all(c >= 0 for c in w.act_root(e8.simple_root(i)))
        inv = w.inverse()
        for i in range(1, 8):
            assert all(c >= 0 for c in inv.act_root(e8.simple_root(i)))


def test_orbit_size_identity():
    # |W-orbit of Lambda_i| * |W_levi| = |W|
    from whitcoeff.rootsys import subgroup_weyl_order

    for series, rank, node in [("A", 4, 2), ("D", 5, 1), ("E", 6, 1)]:
        rs = build_root_system(series, rank)
        levi = tuple(i for i in rs.nodes() if i != node)
        orbit = coset_reps_levi_pruned(rs, levi, ())
        assert len(orbit) * subgroup_weyl_order(rs, levi) == weyl_group_order(series, rank)


def test_coset_table_json_roundtrip():
    d5 = build_root_system("D", 5)
    tab = coset_reps_levi_pruned(d5, (2, 3, 4, 5), (4, 5))
    data = tab.to_json()
    back = CosetTable.from_json(d5, data)
    assert back == tab


def test_table_order_is_canonical():
    e6 = build_root_system("E", 6)
    t1 = coset_reps_levi_pruned(e6, (2, 3, 4, 5, 6), (1,))
    t2 = coset_reps_levi_pruned(e6, (2, 3, 4, 5, 6), (1,))
    assert t1.words == t2.words
    assert list(t1.words) == sorted(t1.words, key=lambda wb: (len(wb), wb))
