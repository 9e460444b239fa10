import pytest

from abideal.root_system import build
from abideal.qpoly import poly_eval_one
from abideal.weyl import (
    apply_word,
    element_of_word,
    finite_components,
    identity_matrix,
    inversion_roots,
    length_of_element,
    minimal_word_to_theta,
    reflect_simple,
    subgroup_order,
    subgroup_poincare,
    subgroup_positive_count,
    weyl_order,
    weyl_poincare,
)

ORDERS = {
    "A1": 2, "A4": 120, "A8": 362880,
    "B2": 8, "B5": 3840, "C6": 46080,
    "D4": 192, "D6": 23040,
    "E6": 51840, "E7": 2903040, "E8": 696729600,
    "F4": 1152, "G2": 12,
}


@pytest.mark.parametrize("label", sorted(ORDERS))
def test_weyl_order(label):
    rs = build(label)
    assert weyl_order(rs) == ORDERS[label]
    assert poly_eval_one(weyl_poincare(rs)) == ORDERS[label]


def test_rightmost_letter_acts_first():
    rs = build("B3")
    v = rs.rho
    word = (1, 3, 2)
    assert apply_word(rs, word, v) == reflect_simple(
        rs, 1, reflect_simple(rs, 3, reflect_simple(rs, 2, v)))


def test_reflection_touches_one_coordinate():
    rs = build("C4")
    v = (3, 5, 7, 11)
    for i in range(1, 5):
        w = reflect_simple(rs, i, v)
        assert all(w[k] == v[k] for k in range(4) if k != i - 1)
        # on a strictly dominant point the move is always proper
        moved = reflect_simple(rs, i, rs.rho)
        assert [k for k in range(4) if moved[k] != rs.rho[k]] == [i - 1]


def test_involution_and_length(small_label):
    rs = build(small_label)
    for i in range(1, rs.rank + 1):
        m = element_of_word(rs, (i, i))
        assert m == identity_matrix(rs.rank)
        assert length_of_element(rs, element_of_word(rs, (i,))) == 1
    assert length_of_element(rs, identity_matrix(rs.rank)) == 0


def test_longest_length_is_positive_count(small_label):
    rs = build(small_label)
    # the length function is bounded by the number of positive roots,
    # attained by the longest element; find it greedily
    m = identity_matrix(rs.rank)
    length = 0
    improved = True
    while improved:
        improved = False
        for i in range(1, rs.rank + 1):
            cand = element_of_word(rs, (i,))
            from abideal.weyl import mat_mul
            nxt = mat_mul(cand, m)
            if length_of_element(rs, nxt) > length:
                m, length = nxt, length + 1
                improved = True
                break
    assert length == rs.num_positive


def test_inversion_roots_of_reduced_word(small_label):
    rs = build(small_label)
    for phi in rs.long_positive_roots():
        word = minimal_word_to_theta(rs, phi)
        inv = inversion_roots(rs, word)
        assert len(inv) == len(set(inv)) == len(word)
        assert all(rs.is_positive_root(r) for r in inv)
        assert length_of_element(rs, element_of_word(rs, word)) == len(word)


def test_minimal_word_reaches_theta(each_label):
    rs = build(each_label)
    for phi in rs.long_positive_roots():
        word = minimal_word_to_theta(rs, phi)
        assert apply_word(rs, word, phi) == rs.theta
        assert len(word) == int(rs.length_to_theta(phi))


def test_component_classification():
    rs = build("E8")
    # dropping one endpoint of the long chain leaves the rank-7 system
    comps = finite_components(rs, (1, 2, 3, 4, 5, 6, 7, 8))
    assert [c.family for c in comps] == ["E8"]
    comps = finite_components(rs, (2, 3, 4, 5, 6, 7, 8))
    assert [c.family for c in comps] == ["E7"]
    comps = finite_components(rs, (1, 2, 3, 4, 5, 6, 8))
    assert [(c.family, c.size) for c in comps] == [("A", 7)]

    b5 = build("B5")
    comps = finite_components(b5, (1, 2, 4, 5))
    assert sorted((c.family, c.size) for c in comps) == [("A", 2), ("BC", 2)]


def test_subgroup_order_and_positive_count():
    rs = build("B3")
    assert subgroup_order(rs, (1, 2)) == 6       # simply laced pair
    assert subgroup_order(rs, (2, 3)) == 8       # doubled bond pair
    assert subgroup_order(rs, (1, 2, 3)) == weyl_order(rs)
    assert subgroup_positive_count(rs, (1, 2)) == 3
    assert subgroup_positive_count(rs, (2, 3)) == 4
    assert subgroup_order(rs, ()) == 1
    assert poly_eval_one(subgroup_poincare(rs, (2, 3))) == 8


def test_subgroup_poincare_matches_orbit_count(small_label):
    rs = build(small_label)
    nodes = tuple(range(1, rs.rank))
    assert poly_eval_one(subgroup_poincare(rs, nodes)) == subgroup_order(rs, nodes)
