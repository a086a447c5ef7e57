from __future__ import annotations

import pytest
from hypothesis import given

from edgerecon.certificates import are_isomorphic, certificate
from edgerecon.errors import GraphError, NotConnected, NotUnicyclic
from edgerecon.fixtures import (
    FIG1A_BLUE,
    FIG1A_GREEN,
    FIG1A_RED,
    c5,
    c5_with_pendants,
    fig1a,
    fig1b,
    fig3,
    g_u,
    g_u_swapped,
)
from edgerecon.graph import Graph, cycle_graph, delete_edge, disjoint_union, path_graph, relabel
from edgerecon.oracle import EnumerationSpec, enumerate_unlabeled, trunk_sequences
from edgerecon.unicyclic import (
    BranchProfile,
    Category,
    branch_multiset,
    classify_card,
    decompose,
    find_cycle,
    in_class_U,
    ucd,
    unique_branches,
)

from strategies import permutations, unicyclic_graphs


def test_find_cycle_order():
    cyc = find_cycle(g_u())
    assert sorted(cyc) == [0, 1, 2, 3, 4]
    assert all(g_u().has_edge(cyc[i], cyc[i - 1]) for i in range(5))
    with pytest.raises(NotConnected):
        find_cycle(disjoint_union([cycle_graph(3), Graph(1)]))
    with pytest.raises(NotUnicyclic):
        find_cycle(path_graph(4))


def test_fig1a_three_branches_at_one_vertex():
    d = decompose(fig1a())
    assert d.cycle_length == 4 and d.ucd == 3
    assert {b.root for b in d.branches} == {1}
    got = {b.edges for b in d.branches}
    assert got == {frozenset(FIG1A_RED), frozenset(FIG1A_GREEN), frozenset(FIG1A_BLUE)}
    assert len(d.trunks) == 1 and d.trunks[0].attachment == 1


def test_fig1a_unique_branches():
    # every branch shape is different, so all three count as unique
    uniq = {b.edges for b in unique_branches(decompose(fig1a()))}
    assert frozenset(FIG1A_GREEN) in uniq and frozenset(FIG1A_BLUE) in uniq
    assert frozenset(FIG1A_RED) in uniq


def test_fig1b_and_fig3_branch_counts():
    assert ucd(fig1b()) == 4
    assert decompose(fig1b()).ucd == 4
    assert ucd(fig3()) == 5
    assert ucd(c5()) == 0


def test_branch_objects():
    d = decompose(g_u())
    star = next(b for b in d.branches if b.root == 2)
    assert star.child == 8 and star.size == 3 and star.attachment_edge == (2, 8)
    assert star.vertices == frozenset({8, 9, 10})
    rt = star.rooted_tree()
    assert rt.root == 0 and rt.tree.n == 4
    assert d.cycle_edges == frozenset({(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)})
    assert [b.root for b in d.branches_at(3)] == [3]
    t = d.trunks[0].rooted_tree()
    assert t.root == 0


def test_multiset_and_uniques_of_g_u():
    d = decompose(g_u())
    counts = branch_multiset(d)
    assert sorted(counts.values()) == [1, 1, 1, 2]
    assert sorted(b.root for b in unique_branches(d)) == [1, 2, 3]


@pytest.mark.parametrize(
    "g, ok, diag",
    [
        (g_u(), True, None),
        (g_u_swapped(), True, None),
        (fig1b(), False, "cycle<5"),
        (fig3(), False, "cycle<5"),
        (c5(), False, "ucd<5"),
        (c5_with_pendants(), False, "unique-roots<3"),
        (path_graph(5), False, "not-unicyclic"),
        (disjoint_union([cycle_graph(5), Graph(1)]), False, "not-connected"),
    ],
)
def test_in_class_U(g, ok, diag):
    v = in_class_U(g)
    assert bool(v) is ok and v.diagnostic == diag


def test_no_class_U_graph_below_fifteen_vertices():
    for n in range(5, 15):
        assert not any(True for _ in enumerate_unlabeled(EnumerationSpec(n, "class-U")))
    assert any(True for _ in enumerate_unlabeled(EnumerationSpec(15, "class-U")))


def test_g_u_is_a_smallest_class_U_shape():
    smallest = list(enumerate_unlabeled(EnumerationSpec(15, "class-U")))
    assert any(are_isomorphic(g, g_u()) for g in smallest)
    assert all(in_class_U(g) for g in smallest)


def _edge_type(g: Graph, e) -> Category:
    d = decompose(g)
    if e in d.cycle_edges:
        return Category.TREE
    if e in {b.attachment_edge for b in d.branches}:
        return Category.UNICYCLIC_P_MINUS_1_PLUS_FOREST
    return Category.UNICYCLIC_P_PLUS_FOREST


@given(unicyclic_graphs(max_n=20))
def test_card_classification_matches_edge_type(g):
    p = ucd(g)
    for e in g.sorted_edges():
        cls = classify_card(delete_edge(g, e), p)
        assert cls.category == _edge_type(g, e)
        if cls.category != Category.TREE:
            assert cls.ucd == (p - 1 if cls.category == Category.UNICYCLIC_P_MINUS_1_PLUS_FOREST else p)
            assert len(cls.unicyclic_vertices) + len(cls.forest_vertices) == g.n


def test_classify_card_rejects_non_cards():
    with pytest.raises(GraphError):
        classify_card(cycle_graph(4), 0)
    with pytest.raises(GraphError):
        classify_card(disjoint_union([path_graph(2), path_graph(2), Graph(1)]), 0)


def test_classify_card_rejects_wrong_branch_count():
    card = delete_edge(g_u(), (0, 5))
    assert classify_card(card, 5).category == Category.UNICYCLIC_P_MINUS_1_PLUS_FOREST
    with pytest.raises(GraphError):
        classify_card(card, 7)


@given(unicyclic_graphs(max_n=16).flatmap(lambda g: permutations(g.n).map(lambda p: (g, p))))
def test_profile_is_label_invariant_and_rebuilds_graph(gp):
    g, perm = gp
    prof = BranchProfile.of_graph(g)
    assert prof == BranchProfile.of_graph(relabel(g, perm))
    assert prof.branch_count == ucd(g)
    assert prof.cycle_length == len(find_cycle(g))
    assert certificate(prof.to_graph()) == certificate(g)
    assert prof.unicyclic_certificate() == certificate(g)


def test_profile_positions():
    prof = BranchProfile.of_graph(g_u())
    assert prof.cycle_length == 5 and prof.branch_count == 5
    for cert, k in prof.multiset().items():
        assert len(prof.positions_of(cert)) == k


def test_trunk_sequences_are_distinct_graphs():
    for n in range(3, 9):
        certs = [certificate(BranchProfile.from_trunk_codes(t).to_graph()) for t in trunk_sequences(n)]
        assert len(certs) == len(set(certs))
