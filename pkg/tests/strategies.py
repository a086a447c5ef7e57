"""Hypothesis strategies and small independent oracles shared by the tests."""

from __future__ import annotations

import random

from hypothesis import strategies as st

from edgerecon.graph import Graph, from_edges
from edgerecon.oracle import random_class_U, random_unicyclic


@st.composite
def graphs(draw, max_n: int = 8) -> Graph:
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return from_edges(n, chosen)


@st.composite
def trees(draw, max_n: int = 14) -> Graph:
    n = draw(st.integers(1, max_n))
    parents = [draw(st.integers(0, v - 1)) for v in range(1, n)]
    return from_edges(n, [(p, v) for v, p in enumerate(parents, start=1)])


@st.composite
def unicyclic_graphs(draw, max_n: int = 20) -> Graph:
    n = draw(st.integers(3, max_n))
    return random_unicyclic(n, random.Random(draw(st.integers(0, 2**32))))


@st.composite
def class_U_graphs(draw, min_n: int = 15, max_n: int = 20) -> Graph:
    return random_class_U(draw(st.integers(min_n, max_n)), draw(st.integers(0, 2**32)))


def permutations(n: int):
    return st.permutations(list(range(n)))


def isomorphism_classes(graphs_in, iso) -> list[list[Graph]]:
    """Partition by a pairwise isomorphism test; quadratic but certificate-free."""
    buckets: dict = {}
    for g in graphs_in:
        key = (g.n, g.m, tuple(sorted(g.degrees)))
        classes = buckets.setdefault(key, [])
        for cls in classes:
            if iso(cls[0], g):
                cls.append(g)
                break
        else:
            classes.append([g])
    return [cls for classes in buckets.values() for cls in classes]


def leaf_extensions(g: Graph) -> list[Graph]:
    return [from_edges(g.n + 1, g.sorted_edges() + [(v, g.n)]) for v in range(g.n)]
