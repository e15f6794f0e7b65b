from fractions import Fraction

import pytest

from whitcoeff.rootsys import (
    AffineWeight,
    RootSystemError,
    WeightVector,
    build_root_system,
    classify_subdiagram,
    eisenstein_weight,
    highest_root,
    pairing,
    subgroup_weyl_order,
    weyl_group_order,
)
from whitcoeff.weyl import reflect_root_coords


POSITIVE_ROOT_COUNTS = [
    ("A", 1, 1),
    ("A", 2, 3),
    ("A", 5, 15),
    ("D", 4, 12),
    ("D", 5, 20),
    ("D", 6, 30),
    ("E", 6, 36),
    ("E", 7, 63),
    ("E", 8, 120),
]


@pytest.mark.parametrize("series,rank,count", POSITIVE_ROOT_COUNTS)
def test_positive_root_counts(series, rank, count):
    rs = build_root_system(series, rank)
    assert len(rs.positive_roots) == count


@pytest.mark.parametrize("series,rank", [("B", 3), ("A", 0), ("D", 3), ("E", 5), ("E", 9), ("F", 4)])
def test_unsupported_types_rejected(series, rank):
    with pytest.raises(RootSystemError):
        build_root_system(series, rank)


def test_cartan_matrix_shape():
    rs = build_root_system("E", 8)
    C = rs.cartan_matrix
    assert all(C[i][i] == 2 for i in range(8))
    assert all(C[i][j] == C[j][i] and C[i][j] in (0, -1) for i in range(8) for j in range(8) if i != j)
    # Bourbaki E8: node 2 attaches to node 4
    assert C[1][3] == -1 and C[1][2] == 0


def test_positive_roots_are_nonnegative_combinations():
    rs = build_root_system("D", 5)
    assert all(all(c >= 0 for c in r) for r in rs.positive_roots)
    assert all(any(c > 0 for c in r) for r in rs.positive_roots)


@pytest.mark.parametrize("series,rank", [("A", 3), ("D", 4), ("E", 6)])
def test_reflection_permutes_positive_roots(series, rank):
    rs = build_root_system(series, rank)
    positives = set(rs.positive_roots)
    for i in rs.nodes():
        alpha = rs.simple_root(i)
        images = {reflect_root_coords(rs, beta, i) for beta in positives}
        expected = (positives - {alpha}) | {tuple(-c for c in alpha)}
        assert images == expected


@pytest.mark.parametrize("series,rank", [("A", 4), ("D", 5), ("E", 7)])
def test_sum_of_positive_roots_is_two_rho(series, rank):
    rs = build_root_system(series, rank)
    total = [0] * rank
    for r in rs.positive_roots:
        total = [a + b for a, b in zip(total, r)]
    # convert to fundamental coordinates and compare with 2*rho = (2,...,2)
    fund = rs.root_to_weight_coords(tuple(total))
    assert fund == tuple(Fraction(2) for _ in range(rank))


@pytest.mark.parametrize("series,rank", [("A", 2), ("D", 4), ("E", 6)])
def test_cartan_reconstructed_from_pairings(series, rank):
    rs = build_root_system(series, rank)
    for i in rs.nodes():
        for j in rs.nodes():
            assert pairing(rs, rs.simple_root(i), rs.simple_root(j)) == rs.cartan_matrix[i - 1][j - 1]


def test_pairing_examples():
    rs = build_root_system("A", 3)
    # <Lambda_i | alpha_j> = delta_ij
    for i in rs.nodes():
        for j in rs.nodes():
            assert pairing(rs, rs.fundamental_weight(i), rs.simple_root(j)) == (1 if i == j else 0)
    rs2 = build_root_system("A", 2)
    assert pairing(rs2, rs2.simple_root(1), rs2.simple_root(2)) == -1
    e8 = build_root_system("E", 8)
    assert pairing(e8, e8.weyl_vector, highest_root(e8)) == 29


def test_pairing_normalization_and_errors():
    rs = build_root_system("D", 4)
    for beta in rs.positive_roots:
        assert pairing(rs, beta, beta) == 2
    with pytest.raises(RootSystemError):
        pairing(rs, (1, 0, 0), rs.simple_root(1))


def test_rho_pairs_to_one_with_simple_coroots():
    for series, rank in [("A", 5), ("D", 6), ("E", 8)]:
        rs = build_root_system(series, rank)
        for i in rs.nodes():
            assert pairing(rs, rs.weyl_vector, rs.simple_root(i)) == 1


def test_weight_weight_pairing_symmetric():
    rs = build_root_system("D", 5)
    v = WeightVector(tuple(Fraction(k + 1, 3) for k in range(5)))
    w = WeightVector(tuple(Fraction(2 - k, 7) for k in range(5)))
    assert pairing(rs, v, w) == pairing(rs, w, v)


def test_eisenstein_weight_coordinates():
    rs = build_root_system("A", 2)
    lam = eisenstein_weight(rs, 1)
    assert lam.coord(1) == (2, -1)
    assert lam.coord(2) == (0, -1)
    e8 = build_root_system("E", 8)
    lam8 = eisenstein_weight(e8, 8)
    assert lam8.coord(8) == (2, -1)
    assert all(lam8.coord(i) == (0, -1) for i in e8.nodes() if i != 8)
    # <alpha_8 | lambda_8(s)> = 2s - 1: the pairing with a simple root reads
    # off the fundamental coordinate
    a, b = lam8.coord(8)
    assert (a, b) == (Fraction(2), Fraction(-1))
    with pytest.raises(RootSystemError):
        eisenstein_weight(rs, 5)


def test_affine_weight_at():
    rs = build_root_system("A", 2)
    lam = eisenstein_weight(rs, 1)
    w = lam.at(Fraction(3, 2))
    assert w.coords == (Fraction(2), Fraction(-1))


def test_classify_subdiagram():
    e8 = build_root_system("E", 8)
    comps = classify_subdiagram(e8, [1, 3, 4, 5, 6, 7, 8])  # Levi of node 2: A7
    assert comps == [("A", 7, (1, 3, 4, 5, 6, 7, 8))]
    comps = classify_subdiagram(e8, [2, 3, 4, 5, 6, 7, 8])  # Levi of node 1: D7
    assert [(s, r) for s, r, _ in comps] == [("D", 7)]
    comps = classify_subdiagram(e8, [1, 2, 3, 4, 5, 6, 7])  # Levi of node 8: E7
    assert [(s, r) for s, r, _ in comps] == [("E", 7)]
    comps = classify_subdiagram(e8, [4, 6, 8])
    assert [(s, r) for s, r, _ in comps] == [("A", 1)] * 3
    d6 = build_root_system("D", 6)
    comps = classify_subdiagram(d6, [1, 2, 3, 4, 5])
    assert [(s, r) for s, r, _ in comps] == [("A", 5)]


def test_weyl_orders():
    assert weyl_group_order("A", 2) == 6
    assert weyl_group_order("D", 5) == 1920
    assert weyl_group_order("E", 8) == 696729600
    e6 = build_root_system("E", 6)
    assert subgroup_weyl_order(e6, [2, 3, 4, 5, 6]) == 1920  # D5 Levi
    assert subgroup_weyl_order(e6, [1, 4]) == 4


def test_serialization_shape():
    rs = build_root_system("D", 4)
    data = rs.to_json()
    assert data["series"] == "D" and data["rank"] == 4
    assert len(data["positive_roots"]) == 12
    assert data["cartan_matrix"][1][3] == -1  # D4 center is node 2
