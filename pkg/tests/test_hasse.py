from itertools import permutations

import pytest

from abideal.affine import element_of_affine_word, inverse_word
from abideal.checks import check_normalization
from abideal.hasse import (
    build_graph,
    expected_facet_ratios,
    facet_volume_ratios,
    graph_automorphisms,
    hasse_automorphism_name,
    identify_group,
    to_dot,
    upper_alcoves,
    verify_cover_structure,
)
from abideal.ideals import long_simple_nodes
from abideal.reference import reference_hasse_group
from abideal.root_system import build

from conftest import corrupted_gram_copy

A2_DOT = """graph hasse_A2 {
  node [shape=circle];
  0 [dim=0, rim="0"];
  1 [dim=1, rim="1"];
  2 [dim=2, rim="11"];
  3 [dim=2, rim="10"];
  0 -- 1 [label="0"];
  1 -- 2 [label="1"];
  1 -- 3 [label="2"];
}
"""

G2_DOT = """graph hasse_G2 {
  node [shape=circle];
  0 [dim=0];
  1 [dim=1];
  2 [dim=2];
  3 [dim=3];
  0 -- 1 [label="0"];
  1 -- 2 [label="2"];
  2 -- 3 [label="1"];
}
"""


def test_dot_golden_strings():
    assert to_dot(build_graph(build("A2"))) == A2_DOT
    assert to_dot(build_graph(build("G2"))) == G2_DOT


def test_node_count_and_cover_structure(small_label):
    graph = build_graph(build(small_label))
    assert graph.num_nodes == 2 ** graph.rs.rank
    verify_cover_structure(graph)


def test_edges_differ_by_one_generator(small_label):
    rs = build(small_label)
    graph = build_graph(rs)
    cat = graph.catalog
    for e in graph.edges:
        lo, hi = cat.entries[e.lower], cat.entries[e.upper]
        assert hi.ideal.dim == lo.ideal.dim + 1
        assert lo.ideal.root_set < hi.ideal.root_set
        step = element_of_affine_word(rs, inverse_word(lo.word)).compose(hi.element)
        assert step == element_of_affine_word(rs, (e.letter,))


def test_every_nonzero_node_has_a_lower_cover(small_label):
    graph = build_graph(build(small_label))
    downs = {e.upper for e in graph.edges}
    for k, a in enumerate(graph.catalog.ideals):
        if a.dim > 0:
            assert k in downs


def test_automorphism_names(each_label):
    rs = build(each_label)
    assert hasse_automorphism_name(rs) == reference_hasse_group(rs.simple_type)


def test_pentagon_symmetry_of_rank_four_lattice():
    # the 16-node lattice of the rank-4 linear type carries the symmetry
    # group of a pentagon
    perms = graph_automorphisms(build_graph(build("A4")))
    assert len(perms) == 10
    assert identify_group(perms) == "Dih_5"


def test_identify_small_groups():
    ident3 = tuple(range(3))
    rot5 = tuple(tuple((i + k) % 5 for i in range(5)) for k in range(5))
    assert identify_group(rot5) == "Z/5"
    sym3 = tuple(tuple(p) for p in permutations(range(3)))
    assert identify_group(sym3) == "Sym_3"
    assert identify_group((ident3,)) == "1"
    klein = ((0, 1, 2, 3), (1, 0, 3, 2), (2, 3, 0, 1), (3, 2, 1, 0))
    assert identify_group(klein) == "Z/2 x Z/2"
    square = []
    for k in range(4):
        square.append(tuple((i + k) % 4 for i in range(4)))
        square.append(tuple((k - i) % 4 for i in range(4)))
    assert identify_group(tuple(square)) == "Dih_4"


def test_upper_alcove_vertex_types(small_label):
    rs = build(small_label)
    ups = upper_alcoves(rs)
    assert {u.lower_vertex_type for u in ups} == set(long_simple_nodes(rs))


UPPER_MULTISETS = {"A2": [1, 2], "C2": [2, 2], "G2": [2]}


@pytest.mark.parametrize("label", sorted(UPPER_MULTISETS))
def test_upper_alcove_multisets_golden(label):
    ups = upper_alcoves(build(label))
    assert sorted(u.lower_vertex_type for u in ups) == UPPER_MULTISETS[label]


def test_facet_ratio_identity(each_label):
    rs = build(each_label)
    assert facet_volume_ratios(rs) == expected_facet_ratios(rs)


def test_facet_ratio_values():
    from fractions import Fraction as Q
    assert facet_volume_ratios(build("A2")) == (Q(1), Q(1), Q(1))
    assert facet_volume_ratios(build("G2")) == (Q(1), Q(3), Q(4))
    assert facet_volume_ratios(build("C2")) == (Q(1), Q(2), Q(1))


def test_corrupted_gram_fails_normalization(small_label):
    res = check_normalization(corrupted_gram_copy(small_label))
    assert not res.passed
    assert "casimir" in res.details or "theta_norm" in res.details
