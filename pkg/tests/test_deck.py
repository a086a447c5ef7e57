from __future__ import annotations

import json
from collections import Counter

import pytest
from hypothesis import given

from edgerecon.certificates import CertKind, Certificate, certificate
from edgerecon.deck import (
    Card,
    Deck,
    build_deck,
    deck_equal,
    from_json,
    source_branch_count,
    to_json,
    unicyclic_cards,
)
from edgerecon.errors import FormatError, GraphError
from edgerecon.fixtures import c5, fig1b, fig3, g_u, g_u_swapped
from edgerecon.graph import Graph, connected_components, delete_edge, from_edges, path_graph, relabel, to_object
from edgerecon.unicyclic import BranchProfile, Category, decompose, ucd

from strategies import graphs, permutations, unicyclic_graphs


def test_c5_deck_has_five_equal_cards():
    d = build_deck(c5())
    assert d.n == 5 and d.m == 5
    assert len(set(d.cards)) == 1
    assert d.cards[0].certificate == certificate(path_graph(5))
    assert all(c.category == Category.TREE for c in d.cards)


def test_fig1b_deck_size():
    assert build_deck(fig1b()).m == 8


def test_fig3_card_categories():
    d = build_deck(fig3())
    assert d.m == 9
    cats = Counter(c.category for c in d.cards)
    assert cats == {
        Category.TREE: 3,
        Category.UNICYCLIC_P_MINUS_1_PLUS_FOREST: 5,
        Category.UNICYCLIC_P_PLUS_FOREST: 1,
    }
    lost = unicyclic_cards(d)
    assert len(lost) == 5 and all(p.branch_count == 4 for p in lost)


def test_cards_are_sorted_by_payload():
    d = build_deck(g_u())
    payloads = [c.certificate.payload for c in d.cards]
    assert payloads == sorted(payloads)


def test_card_metadata():
    d = build_deck(g_u())
    lost = [c for c in d.cards if c.category == Category.UNICYCLIC_P_MINUS_1_PLUS_FOREST]
    kept = [c for c in d.cards if c.category == Category.UNICYCLIC_P_PLUS_FOREST]
    assert len(lost) == 5 and len(kept) == 5
    for c in lost + kept:
        assert c.is_unicyclic_plus_tree and not c.is_tree
        assert c.cycle_length == 5
        assert c.forest.kind == CertKind.FOREST
        assert c.graph.n == 15
        assert sum(c.degree_histogram) == 15
    assert {c.ucd for c in lost} == {4} and {c.ucd for c in kept} == {5}
    trees = [c for c in d.cards if c.is_tree]
    assert len(trees) == 5 and all(c.profile is None and c.ucd is None for c in trees)


def test_card_equality_ignores_category():
    cert = certificate(path_graph(3))
    assert Card(cert) == Card(cert, Category.TREE)
    assert len({Card(cert), Card(cert, Category.TREE)}) == 1


@given(unicyclic_graphs(max_n=18).flatmap(lambda g: permutations(g.n).map(lambda p: (g, p))))
def test_deck_is_label_invariant(gp):
    g, perm = gp
    assert deck_equal(build_deck(g), build_deck(relabel(g, perm)))


@given(unicyclic_graphs(max_n=18))
def test_branch_count_read_from_deck(g):
    d = build_deck(g)
    assert d.branch_count == ucd(g)
    assert len(unicyclic_cards(d)) == ucd(g)
    # the lost-branch cards are exactly the profiles of G minus one attachment edge
    want = Counter(
        BranchProfile.of_graph(_unicyclic_part(delete_edge(g, b.attachment_edge)))
        for b in decompose(g).branches
    )
    assert Counter(unicyclic_cards(d)) == want


def _unicyclic_part(card: Graph) -> Graph:
    return next(c.graph for c in connected_components(card) if c.graph.m == c.graph.n)


def test_source_branch_count_is_none_for_other_shapes():
    k4 = from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    d = build_deck(k4)
    assert source_branch_count(d.cards) is None
    assert all(c.category is None for c in d.cards)
    assert build_deck(path_graph(4)).branch_count is None
    assert build_deck(c5()).branch_count == 0


def test_empty_deck_rejected():
    with pytest.raises(GraphError):
        build_deck(Graph(3))


def test_deck_count_mismatch():
    with pytest.raises(GraphError):
        Deck(3, 2, ())


@pytest.mark.parametrize("g", [g_u(), g_u_swapped(), fig3(), c5()])
def test_json_round_trip(g):
    d = build_deck(g)
    text = to_json(d)
    assert deck_equal(from_json(text), d)
    assert to_json(from_json(text)) == text
    dbg = to_json(d, debug=True)
    assert deck_equal(from_json(dbg), d)
    obj = json.loads(dbg)
    assert obj["n"] == g.n and obj["m"] == g.m and len(obj["cards"]) == g.m


def test_json_layout_is_one_card_per_line():
    text = to_json(build_deck(c5()))
    lines = text.splitlines()
    assert lines[0] == '{"n": 5, "m": 5, "cards": ['
    assert lines[-1] == "]}"
    assert len(lines) == 7 and text.endswith("\n")


def test_set_mode_collapses_and_is_not_loadable():
    text = to_json(build_deck(c5()), set_mode=True)
    obj = json.loads(text)
    assert obj["mode"] == "set" and len(obj["cards"]) == 1
    with pytest.raises(FormatError):
        from_json(text)


def _doc(**kw) -> str:
    base = {"n": 5, "m": 1, "cards": [{"cert": certificate(path_graph(5)).hex()}]}
    base.update(kw)
    return json.dumps(base)


@pytest.mark.parametrize(
    "text",
    [
        "",
        "{",
        "[]",
        json.dumps({"n": 5, "cards": []}),
        _doc(m=2),
        _doc(n="5"),
        _doc(cards=[{"cert": 5}]),
        _doc(cards=[{"cert": "zz"}]),
        _doc(cards=[{"cert": Certificate(CertKind.FOREST, b"((((()))))").hex()}]),  # P5 rooted at a leaf
        _doc(n=6),
        _doc(cards=[to_object(path_graph(4))]),
        _doc(cards=[{"edges": []}]),
    ],
)
def test_malformed_deck_documents(text):
    with pytest.raises(FormatError):
        from_json(text)


@given(graphs(max_n=7))
def test_any_small_graph_deck_round_trips(g):
    if g.m == 0:
        return
    d = build_deck(g)
    assert deck_equal(from_json(to_json(d)), d)
    assert deck_equal(from_json(to_json(d, debug=True)), d)
