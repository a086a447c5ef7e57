"""Structure of connected unicyclic graphs: cycle, trunks, branches.

A branch is rooted at the cycle vertex it hangs from, so its rooted
certificate covers the attachment edge as well as the subtree below it.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .certificates import (
    CLOSE,
    OPEN,
    Certificate,
    CertKind,
    _cycle_order,
    _unicyclic_from_trunks,
    certificate,
    children,
    dihedral_min,
    rooted_tree_from_code,
    subtree_code,
)
from .errors import GraphError, NotConnected, NotUnicyclic
from .graph import (
    Graph,
    RootedTree,
    component_vertex_sets,
    connected_components,
    from_edges,
    induced_subgraph,
    two_core,
)


class Category(Enum):
    """The three shapes an edge-deleted subgraph of a unicyclic graph can take."""

    TREE = "tree"
    UNICYCLIC_P_PLUS_FOREST = "unicyclic-p+forest"
    UNICYCLIC_P_MINUS_1_PLUS_FOREST = "unicyclic-(p-1)+forest"


@dataclass(frozen=True)
class Trunk:
    attachment: int
    vertices: frozenset[int]
    edges: frozenset[tuple[int, int]]

    def rooted_tree(self) -> RootedTree:
        order = [self.attachment] + sorted(self.vertices - {self.attachment})
        comp = induced_subgraph(Graph(max(order) + 1, self.edges), order)
        return RootedTree(comp.graph, 0)


@dataclass(frozen=True)
class Branch:
    root: int
    child: int
    vertices: frozenset[int]  # non-root vertices
    edges: frozenset[tuple[int, int]]  # includes the attachment edge
    certificate: Certificate

    @property
    def attachment_edge(self) -> tuple[int, int]:
        return (min(self.root, self.child), max(self.root, self.child))

    @property
    def size(self) -> int:
        return len(self.edges)

    def rooted_tree(self) -> RootedTree:
        return rooted_tree_from_code(self.certificate.body)


@dataclass(frozen=True)
class CycleDecomposition:
    cycle: tuple[int, ...]
    trunks: tuple[Trunk, ...]
    branches: tuple[Branch, ...]

    @property
    def cycle_length(self) -> int:
        return len(self.cycle)

    @property
    def cycle_edges(self) -> frozenset[tuple[int, int]]:
        c = self.cycle
        return frozenset(
            (min(c[i], c[i - 1]), max(c[i], c[i - 1])) for i in range(len(c))
        )

    @property
    def ucd(self) -> int:
        return len(self.branches)

    def branches_at(self, v: int) -> list[Branch]:
        return [b for b in self.branches if b.root == v]

    def cycle_set(self) -> frozenset[int]:
        return frozenset(self.cycle)


def find_cycle(g: Graph) -> list[int]:
    """Vertices of the unique cycle in cyclic order, found by pruning leaves."""
    if len(component_vertex_sets(g)) != 1:
        raise NotConnected("graph is not connected")
    if g.m != g.n or g.n < 3:
        raise NotUnicyclic(f"connected unicyclic graphs have |E| = |V| >= 3; got n={g.n}, m={g.m}")
    core = set(two_core(g))
    return _cycle_order(g.adj, core)


def _subtree(adj, start: int, blocked: set[int]) -> tuple[set[int], set[tuple[int, int]]]:
    verts = {start}
    edges = set()
    stack = [start]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w in blocked:
                continue
            e = (min(v, w), max(v, w))
            edges.add(e)
            if w not in verts:
                verts.add(w)
                stack.append(w)
    return verts, edges


def decompose(g: Graph) -> CycleDecomposition:
    cycle = find_cycle(g)
    cyc = set(cycle)
    adj = g.adj
    trunks = []
    branches = []
    for v in cycle:
        kids = [w for w in adj[v] if w not in cyc]
        if not kids:
            continue
        t_verts, t_edges = {v}, set()
        for child in kids:
            verts, edges = _subtree(adj, child, cyc | {v})
            edges.add((min(v, child), max(v, child)))
            code = OPEN + subtree_code(adj, child, {v}) + CLOSE
            branches.append(
                Branch(v, child, frozenset(verts), frozenset(edges), Certificate(CertKind.ROOTED_TREE, code))
            )
            t_verts |= verts
            t_edges |= edges
        trunks.append(Trunk(v, frozenset(t_verts), frozenset(t_edges)))
    return CycleDecomposition(tuple(cycle), tuple(trunks), tuple(branches))


def ucd(g: Graph) -> int:
    """Number of branches: sum of ``deg(v) - 2`` over cycle vertices of degree >= 3."""
    return sum(g.degrees[v] - 2 for v in find_cycle(g) if g.degrees[v] >= 3)


@dataclass(frozen=True)
class CardClass:
    category: Category
    unicyclic: Graph | None = None
    forest: Graph | None = None
    ucd: int | None = None
    unicyclic_vertices: tuple[int, ...] = ()
    forest_vertices: tuple[int, ...] = ()


def classify_card(card: Graph, p: int) -> CardClass:
    """Sort an edge-deleted subgraph of a unicyclic graph with ``p`` branches into its shape.

    Uses the card alone plus the branch count ``p`` of the source: a connected
    card is a tree; otherwise the unicyclic component keeps ``p`` branches
    (an edge inside a branch was removed) or ``p - 1`` (an attachment edge was).
    """
    if card.m != card.n - 1:
        raise GraphError(f"card must have n - 1 edges; got n={card.n}, m={card.m}")
    comps = connected_components(card)
    if len(comps) == 1:
        return CardClass(Category.TREE)
    if len(comps) != 2:
        raise GraphError(f"card has {len(comps)} components; expected 1 or 2")
    cyc = [c for c in comps if c.graph.m == c.graph.n]
    rest = [c for c in comps if c.graph.m == c.graph.n - 1]
    if len(cyc) != 1 or len(rest) != 1:
        raise GraphError("card is not a unicyclic component plus a tree")
    u, f = cyc[0], rest[0]
    q = ucd(u.graph)
    if q == p:
        cat = Category.UNICYCLIC_P_PLUS_FOREST
    elif q == p - 1:
        cat = Category.UNICYCLIC_P_MINUS_1_PLUS_FOREST
    else:
        raise GraphError(f"unicyclic component has {q} branches, source has {p}")
    return CardClass(cat, u.graph, f.graph, q, u.vertices, f.vertices)


def branch_multiset(d: CycleDecomposition) -> Counter:
    return Counter(b.certificate for b in d.branches)


def unique_branches(d: CycleDecomposition) -> list[Branch]:
    """Branches whose rooted shape occurs exactly once among all branches."""
    counts = branch_multiset(d)
    return [b for b in d.branches if counts[b.certificate] == 1]


@dataclass(frozen=True)
class Verdict:
    ok: bool
    diagnostic: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def in_class_U(g: Graph) -> Verdict:
    """Cycle length >= 5, ucd >= 5 and unique branches at >= 3 distinct cycle vertices."""
    try:
        d = decompose(g)
    except (NotConnected, NotUnicyclic) as exc:
        return Verdict(False, exc.code)
    if d.cycle_length < 5:
        return Verdict(False, "cycle<5")
    if d.ucd < 5:
        return Verdict(False, "ucd<5")
    roots = {b.root for b in unique_branches(d)}
    if len(roots) < 3:
        return Verdict(False, "unique-roots<3")
    return Verdict(True)


# -- positional branch profiles ----------------------------------------------


@dataclass(frozen=True, order=True)
class BranchProfile:
    """Sorted branch certificates per cycle position, in canonical dihedral order."""

    positions: tuple[tuple[Certificate, ...], ...]

    @classmethod
    def canonical(cls, positions: Iterable[Iterable[Certificate]]) -> "BranchProfile":
        seq = [tuple(sorted(p)) for p in positions]
        return cls(dihedral_min(seq))

    @classmethod
    def of_graph(cls, g: Graph) -> "BranchProfile":
        d = decompose(g)
        return cls.canonical([b.certificate for b in d.branches_at(v)] for v in d.cycle)

    @classmethod
    def from_trunk_codes(cls, trunks: Sequence[bytes]) -> "BranchProfile":
        return cls.canonical(
            [Certificate(CertKind.ROOTED_TREE, OPEN + ch + CLOSE) for ch in children(t)]
            for t in trunks
        )

    @property
    def cycle_length(self) -> int:
        return len(self.positions)

    @property
    def branch_count(self) -> int:
        return sum(len(p) for p in self.positions)

    def multiset(self) -> Counter:
        return Counter(c for p in self.positions for c in p)

    def positions_of(self, cert: Certificate) -> list[int]:
        return [i for i, p in enumerate(self.positions) for c in p if c == cert]

    def to_graph(self) -> Graph:
        """A labeled unicyclic graph with this profile (cycle vertices first)."""
        trunks = [OPEN + b"".join(c.body[1:-1] for c in p) + CLOSE for p in self.positions]
        edges: list[tuple[int, int]] = []
        n = _unicyclic_from_trunks(trunks, 0, edges)
        return from_edges(n, edges)

    def unicyclic_certificate(self) -> Certificate:
        return certificate(self.to_graph())
