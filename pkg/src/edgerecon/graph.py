"""Finite simple undirected graphs on the vertex set ``0..n-1``.

Also holds the two text forms used on disk: the edge list (``"n m"`` header,
then one ``"u v"`` line per edge) and the JSON object ``{"n", "edges"}``.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

from .errors import EdgeNotPresent, FormatError, GraphError, NotATree

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph. Edges are stored as sorted pairs ``(u, v)``, ``u < v``."""

    n: int
    edges: frozenset[Edge] = frozenset()

    def __post_init__(self) -> None:
        n = self.n
        if not isinstance(n, int) or n < 0:
            raise GraphError(f"vertex count must be a non-negative int, got {n!r}")
        norm = set()
        for e in self.edges:
            u, v = (int(x) for x in e)
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            norm.add((u, v) if u < v else (v, u))
        object.__setattr__(self, "edges", frozenset(norm))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adj(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(a)) for a in nbrs)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adj)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edges

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.sorted_edges()})"


@dataclass(frozen=True)
class RootedTree:
    tree: Graph
    root: int

    def __post_init__(self) -> None:
        if not 0 <= self.root < self.tree.n:
            raise GraphError(f"root {self.root} out of range")
        if not is_tree(self.tree):
            raise NotATree("rooted tree requires a connected acyclic graph")


class Component(NamedTuple):
    """A connected component relabeled to ``0..k-1``; ``vertices[i]`` is the original label of ``i``."""

    graph: Graph
    vertices: tuple[int, ...]


def from_edges(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    return Graph(n, frozenset(tuple(e) for e in edges))


def cycle_graph(n: int) -> Graph:
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves: int) -> Graph:
    return from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Image of ``g`` under the vertex map ``v -> perm[v]``."""
    if sorted(perm) != list(range(g.n)):
        raise GraphError("relabel needs a permutation of 0..n-1")
    return Graph(g.n, frozenset((perm[u], perm[v]) for u, v in g.edges))


def disjoint_union(graphs: Iterable[Graph]) -> Graph:
    edges = []
    offset = 0
    for h in graphs:
        edges.extend((u + offset, v + offset) for u, v in h.edges)
        offset += h.n
    return from_edges(offset, edges)


def delete_edge(g: Graph, e: Sequence[int]) -> Graph:
    u, v = e
    key = (u, v) if u < v else (v, u)
    if key not in g.edges:
        raise EdgeNotPresent(f"edge {key} not in graph")
    return Graph(g.n, g.edges - {key})


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> Component:
    """Subgraph induced on ``vertices`` (kept in the given order)."""
    index = {v: i for i, v in enumerate(vertices)}
    edges = [
        (index[u], index[v]) for u, v in g.edges if u in index and v in index
    ]
    return Component(from_edges(len(vertices), edges), tuple(vertices))


def component_vertex_sets(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        out.append(sorted(comp))
    return out


def connected_components(g: Graph) -> list[Component]:
    """Components in order of their smallest original vertex."""
    return [induced_subgraph(g, vs) for vs in component_vertex_sets(g)]


def is_connected(g: Graph) -> bool:
    return len(component_vertex_sets(g)) <= 1


def is_forest(g: Graph) -> bool:
    return g.m == g.n - len(component_vertex_sets(g))


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)


def two_core(g: Graph) -> list[int]:
    """Vertices surviving repeated deletion of vertices of degree <= 1."""
    deg = list(g.degrees)
    removed = [False] * g.n
    stack = [v for v in range(g.n) if deg[v] <= 1]
    for v in stack:
        removed[v] = True
    while stack:
        v = stack.pop()
        for w in g.adj[v]:
            if not removed[w]:
                deg[w] -= 1
                if deg[w] <= 1:
                    removed[w] = True
                    stack.append(w)
    return [v for v in range(g.n) if not removed[v]]


# -- text formats -----------------------------------------------------------


def to_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def _int_token(tok: str, lineno: int) -> int:
    if not tok.isdigit():
        raise FormatError(f"line {lineno}: expected a non-negative integer, got {tok!r}")
    return int(tok)


def parse_edge_list(text: str) -> Graph:
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise FormatError("empty edge list")
    head = lines[0].split()
    if len(head) != 2:
        raise FormatError("line 1: expected 'n m'")
    n, m = (_int_token(t, 1) for t in head)
    body = lines[1:]
    if len(body) != m:
        raise FormatError(f"header announces {m} edges, found {len(body)} lines")
    edges = set()
    for i, line in enumerate(body, start=2):
        toks = line.split()
        if len(toks) != 2:
            raise FormatError(f"line {i}: expected 'u v', got {line!r}")
        u, v = (_int_token(t, i) for t in toks)
        key = (min(u, v), max(u, v))
        if key in edges:
            raise FormatError(f"line {i}: duplicate edge {key}")
        edges.add(key)
    try:
        return Graph(n, frozenset(edges))
    except GraphError as exc:
        raise FormatError(str(exc)) from exc


def to_object(g: Graph) -> dict:
    return {"n": g.n, "edges": [[u, v] for u, v in g.sorted_edges()]}


def from_object(obj: object) -> Graph:
    if not isinstance(obj, dict) or "n" not in obj or "edges" not in obj:
        raise FormatError('graph object needs keys "n" and "edges"')
    n, edges = obj["n"], obj["edges"]
    if not isinstance(n, int) or isinstance(n, bool) or not isinstance(edges, list):
        raise FormatError("graph object has wrong field types")
    pairs = set()
    for e in edges:
        if (
            not isinstance(e, list)
            or len(e) != 2
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in e)
        ):
            raise FormatError(f"bad edge entry {e!r}")
        key = (min(e), max(e))
        if key in pairs:
            raise FormatError(f"duplicate edge {key}")
        pairs.add(key)
    try:
        return Graph(n, frozenset(pairs))
    except GraphError as exc:
        raise FormatError(str(exc)) from exc


def to_json(g: Graph, **extra: object) -> str:
    obj = to_object(g)
    obj.update(extra)
    return json.dumps(obj) + "\n"


def parse_json(text: str) -> Graph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from exc
    return from_object(obj)
