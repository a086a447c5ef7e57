"""Canonical certificates for unlabeled graphs.

A certificate is a class tag plus a byte string.  Two graphs of the same class
get equal certificates exactly when they are isomorphic (rooted-isomorphic for
the rooted-tree class).  The encodings are parenthesis strings:

* rooted tree: AHU code, ``"(" + sorted child codes + ")"``
* tree: the rooted code at the center, smaller of the two for bicentral trees
* connected unicyclic: ``"[" + trunk codes + "]"``, the trunk codes read around
  the cycle in the dihedrally smallest order
* forest / pseudoforest: sorted concatenation of the component codes

All of these are self-delimiting, so :func:`decode` can rebuild a
representative graph from any certificate.  Arbitrary small graphs get a
``generic`` certificate: the smallest adjacency bit string over an
individualization/refinement search.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .errors import (
    FormatError,
    GraphError,
    HasCycle,
    NotATree,
    NotConnected,
    NotUnicyclic,
    SizeGuardError,
)
from .graph import Graph, RootedTree, component_vertex_sets, from_edges, two_core

DEFAULT_GENERIC_MAX_N = 12

OPEN, CLOSE = b"(", b")"
LEAF = b"()"


class CertKind(str, Enum):
    ROOTED_TREE = "R"
    TREE = "T"
    FOREST = "F"
    UNICYCLIC = "U"
    PSEUDOFOREST = "P"
    GENERIC = "G"


@dataclass(frozen=True, order=True)
class Certificate:
    kind: CertKind
    body: bytes

    @property
    def payload(self) -> bytes:
        return self.kind.value.encode() + self.body

    def hex(self) -> str:
        return self.payload.hex()

    @classmethod
    def from_payload(cls, payload: bytes) -> "Certificate":
        if not payload:
            raise FormatError("empty certificate payload")
        try:
            kind = CertKind(chr(payload[0]))
        except ValueError as exc:
            raise FormatError(f"unknown certificate tag {payload[:1]!r}") from exc
        return cls(kind, bytes(payload[1:]))

    @classmethod
    def from_hex(cls, text: str) -> "Certificate":
        try:
            raw = bytes.fromhex(text)
        except (ValueError, TypeError) as exc:
            raise FormatError(f"certificate is not base16: {text!r}") from exc
        return cls.from_payload(raw)

    def __repr__(self) -> str:
        body = self.body.decode("ascii", "replace") if self.kind != CertKind.GENERIC else self.body.hex()
        return f"Certificate({self.kind.name}, {body})"


# -- parenthesis codes ------------------------------------------------------


def subtree_code(adj: Sequence[Sequence[int]], root: int, blocked: Iterable[int] = ()) -> bytes:
    """AHU code of the tree hanging from ``root``, never stepping onto ``blocked``."""
    blocked = set(blocked)
    blocked.discard(root)
    parent = {root: -1}
    order = [root]
    i = 0
    while i < len(order):
        v = order[i]
        i += 1
        for w in adj[v]:
            if w == parent[v] or w in blocked:
                continue
            if w in parent:
                raise HasCycle("subtree walk met a cycle")
            parent[w] = v
            order.append(w)
    kids: dict[int, list[bytes]] = {v: [] for v in order}
    code = b""
    for v in reversed(order):
        code = OPEN + b"".join(sorted(kids[v])) + CLOSE
        if parent[v] >= 0:
            kids[parent[v]].append(code)
    return code


def split_codes(body: bytes) -> list[bytes]:
    """Split a concatenation of balanced codes into its top-level pieces."""
    out = []
    depth = 0
    start = 0
    for i, ch in enumerate(body):
        if ch in b"([":
            depth += 1
        elif ch in b")]":
            depth -= 1
            if depth < 0:
                raise FormatError("unbalanced certificate body")
            if depth == 0:
                out.append(body[start : i + 1])
                start = i + 1
        else:
            raise FormatError(f"unexpected byte {ch!r} in certificate body")
    if depth != 0 or start != len(body):
        raise FormatError("unbalanced certificate body")
    return out


def children(code: bytes) -> list[bytes]:
    """Child codes of the root of a rooted-tree code."""
    if len(code) < 2 or code[:1] != OPEN or code[-1:] != CLOSE:
        raise FormatError("not a rooted-tree code")
    return split_codes(code[1:-1])


def code_size(code: bytes) -> int:
    """Vertex count of a rooted-tree code."""
    return code.count(OPEN)


def _tree_centers(adj: Sequence[Sequence[int]], verts: Sequence[int]) -> list[int]:
    if len(verts) <= 2:
        return list(verts)
    deg = {v: len(adj[v]) for v in verts}
    layer = [v for v in verts if deg[v] <= 1]
    remaining = len(verts)
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for w in adj[v]:
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        layer = nxt
    return sorted(layer)


def _free_tree_code(adj: Sequence[Sequence[int]], verts: Sequence[int]) -> bytes:
    return min(subtree_code(adj, c) for c in _tree_centers(adj, verts))


def _cycle_order(adj: Sequence[Sequence[int]], cycle: set[int]) -> list[int]:
    start = min(cycle)
    order = [start]
    prev, cur = -1, start
    while True:
        nxt = [w for w in adj[cur] if w in cycle and w != prev]
        if cur == start and prev == -1:
            step = min(nxt)
        else:
            if len(nxt) != 1:
                raise NotUnicyclic("cycle vertices do not form a simple cycle")
            step = nxt[0]
        if step == start:
            break
        order.append(step)
        prev, cur = cur, step
        if len(order) > len(cycle):
            raise NotUnicyclic("cycle vertices do not form a simple cycle")
    if len(order) != len(cycle):
        raise NotUnicyclic("cycle vertices do not form a simple cycle")
    return order


def dihedral_min(seq: Sequence) -> tuple:
    """Smallest of the 2c rotations/reflections of ``seq``."""
    seq = list(seq)
    c = len(seq)
    best = None
    for s in (seq, seq[::-1]):
        for r in range(c):
            cand = tuple(s[r:] + s[:r])
            if best is None or cand < best:
                best = cand
    return best if best is not None else ()


def _unicyclic_code(adj: Sequence[Sequence[int]], cycle_vertices: Iterable[int]) -> bytes:
    cyc = set(cycle_vertices)
    order = _cycle_order(adj, cyc)
    trunks = [subtree_code(adj, v, cyc) for v in order]
    return b"[" + b"".join(dihedral_min(trunks)) + b"]"


def _component_codes(g: Graph) -> list[bytes] | None:
    """Class codes of all components, or ``None`` if some component has two cycles."""
    adj = g.adj
    comps = component_vertex_sets(g)
    core: set[int] | None = None
    codes = []
    for verts in comps:
        m_c = sum(len(adj[v]) for v in verts) // 2
        if m_c == len(verts) - 1:
            codes.append(_free_tree_code(adj, verts))
        elif m_c == len(verts):
            if core is None:
                core = set(two_core(g))
            codes.append(_unicyclic_code(adj, [v for v in verts if v in core]))
        else:
            return None
    return codes


# -- class certificates -----------------------------------------------------


def certificate_rooted_tree(t: RootedTree) -> Certificate:
    return Certificate(CertKind.ROOTED_TREE, subtree_code(t.tree.adj, t.root))


def certificate_tree(t: Graph) -> Certificate:
    comps = component_vertex_sets(t)
    if t.m != t.n - len(comps):
        raise HasCycle("tree certificate requested for a graph with a cycle")
    if len(comps) != 1:
        raise NotATree("tree certificate requested for a disconnected graph")
    return Certificate(CertKind.TREE, _free_tree_code(t.adj, comps[0]))


def certificate_forest(f: Graph) -> Certificate:
    comps = component_vertex_sets(f)
    if f.m != f.n - len(comps):
        raise HasCycle("forest certificate requested for a graph with a cycle")
    return Certificate(
        CertKind.FOREST, b"".join(sorted(_free_tree_code(f.adj, vs) for vs in comps))
    )


def certificate_unicyclic(g: Graph) -> Certificate:
    comps = component_vertex_sets(g)
    if len(comps) != 1:
        raise NotConnected("unicyclic certificate needs a connected graph")
    if g.m != g.n or g.n < 3:
        raise NotUnicyclic("unicyclic certificate needs |E| = |V| >= 3")
    return Certificate(CertKind.UNICYCLIC, _unicyclic_code(g.adj, two_core(g)))


def certificate_pseudoforest(g: Graph) -> Certificate:
    codes = _component_codes(g)
    if codes is None:
        raise GraphError("some component has more than one cycle")
    return Certificate(CertKind.PSEUDOFOREST, b"".join(sorted(codes)))


def certificate(g: Graph, max_generic_n: int = DEFAULT_GENERIC_MAX_N) -> Certificate:
    """Whole-graph certificate; the class is chosen from isomorphism-invariant properties.

    acyclic -> forest, connected unicyclic -> unicyclic, every component with at
    most one cycle -> pseudoforest, otherwise the size-capped generic form.
    """
    codes = _component_codes(g)
    if codes is None:
        return certificate_generic_small(g, max_generic_n)
    if all(c[:1] == OPEN for c in codes):
        return Certificate(CertKind.FOREST, b"".join(sorted(codes)))
    if len(codes) == 1:
        return Certificate(CertKind.UNICYCLIC, codes[0])
    return Certificate(CertKind.PSEUDOFOREST, b"".join(sorted(codes)))


# -- generic small-graph certificate -----------------------------------------


def _refine(adj: Sequence[Sequence[int]], colors: list[int]) -> list[int]:
    n = len(colors)
    k = len(set(colors))
    while True:
        sig = [(colors[v], tuple(sorted(colors[w] for w in adj[v]))) for v in range(n)]
        rank = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [rank[s] for s in sig]
        if len(rank) == k:
            return new
        colors, k = new, len(rank)


def _adjacency_bits(g: Graph, order: Sequence[int]) -> bytes:
    n = g.n
    val = 0
    for i in range(n):
        row = order[i]
        for j in range(i + 1, n):
            val = (val << 1) | g.has_edge(row, order[j])
    nbits = n * (n - 1) // 2
    return val.to_bytes((nbits + 7) // 8, "big")


def certificate_generic_small(g: Graph, max_n: int = DEFAULT_GENERIC_MAX_N) -> Certificate:
    """Minimal adjacency encoding over all leaves of an individualization/refinement tree.

    Vertices with identical neighbourhoods are interchangeable, so only one of
    them is individualized per cell.
    """
    if g.n > max_n:
        raise SizeGuardError(f"generic certificate limited to n <= {max_n}, got {g.n}")
    n = g.n
    adj = g.adj
    nbrs = [set(a) for a in adj]
    best: list[bytes] = []

    def twins(u: int, v: int) -> bool:
        return nbrs[u] - {v} == nbrs[v] - {u}

    def search(colors: list[int]) -> None:
        colors = _refine(adj, colors)
        counts = Counter(colors)
        if len(counts) == n:
            order = [0] * n
            for v, c in enumerate(colors):
                order[c] = v
            code = _adjacency_bits(g, order)
            if not best or code < best[0]:
                best[:] = [code]
            return
        target = min(c for c, k in counts.items() if k > 1)
        tried: list[int] = []
        for v in range(n):
            if colors[v] != target or any(twins(u, v) for u in tried):
                continue
            tried.append(v)
            search([2 * c + (c == target and w != v) for w, c in enumerate(colors)])

    if n:
        search([0] * n)
    return Certificate(CertKind.GENERIC, bytes([n]) + (best[0] if best else b""))


# -- decoding ---------------------------------------------------------------


def _tree_from_code(code: bytes, first: int, edges: list[tuple[int, int]]) -> int:
    """Append the edges of ``code`` with preorder labels from ``first``; return the next free label."""
    stack: list[int] = []
    nxt = first
    for ch in code:
        if ch == 40:  # "("
            if stack:
                edges.append((stack[-1], nxt))
            stack.append(nxt)
            nxt += 1
        elif ch == 41:
            stack.pop()
        else:
            raise FormatError("bad byte in tree code")
    return nxt


def rooted_tree_from_code(code: bytes) -> RootedTree:
    edges: list[tuple[int, int]] = []
    n = _tree_from_code(code, 0, edges)
    return RootedTree(from_edges(n, edges), 0)


def _unicyclic_from_trunks(trunks: Sequence[bytes], first: int, edges: list) -> int:
    c = len(trunks)
    roots = list(range(first, first + c))
    edges.extend((roots[i], roots[(i + 1) % c]) for i in range(c))
    nxt = first + c
    for root, trunk in zip(roots, trunks):
        for child in children(trunk):
            edges.append((root, nxt))
            nxt = _tree_from_code(child, nxt, edges)
    return nxt


def unicyclic_trunks(code: bytes) -> list[bytes]:
    if code[:1] != b"[" or code[-1:] != b"]":
        raise FormatError("not a unicyclic code")
    trunks = split_codes(code[1:-1])
    if len(trunks) < 3 or any(t[:1] != OPEN for t in trunks):
        raise FormatError("unicyclic code needs >= 3 trunk codes")
    return trunks


def _graph_from_codes(codes: Sequence[bytes]) -> Graph:
    edges: list[tuple[int, int]] = []
    nxt = 0
    for code in codes:
        if code[:1] == b"[":
            nxt = _unicyclic_from_trunks(unicyclic_trunks(code), nxt, edges)
        else:
            nxt = _tree_from_code(code, nxt, edges)
    return from_edges(nxt, edges)


def _generic_decode(body: bytes) -> Graph:
    if not body:
        raise FormatError("empty generic certificate")
    n = body[0]
    nbits = n * (n - 1) // 2
    raw = body[1:]
    if len(raw) != (nbits + 7) // 8:
        raise FormatError("generic certificate has wrong length")
    val = int.from_bytes(raw, "big") if raw else 0
    edges = []
    pos = nbits - 1
    for i in range(n):
        for j in range(i + 1, n):
            if (val >> pos) & 1:
                edges.append((i, j))
            pos -= 1
    return from_edges(n, edges)


def decode(cert: Certificate) -> Graph:
    """A representative graph with canonical labels for ``cert``."""
    kind, body = cert.kind, cert.body
    if kind == CertKind.GENERIC:
        return _generic_decode(body)
    if kind == CertKind.ROOTED_TREE:
        return rooted_tree_from_code(body).tree
    codes = split_codes(body)
    if kind in (CertKind.TREE, CertKind.UNICYCLIC) and len(codes) != 1:
        raise FormatError(f"{kind.name} certificate must hold one component")
    return _graph_from_codes(codes)


# -- isomorphism ------------------------------------------------------------


def find_isomorphism(g: Graph, h: Graph) -> dict[int, int] | None:
    """Backtracking search for an edge-preserving bijection ``g -> h``.

    Independent of the certificates; used as the brute-force reference.
    """
    if g.n != h.n or g.m != h.m or sorted(g.degrees) != sorted(h.degrees):
        return None
    n = g.n
    # BFS order keeps each new vertex adjacent to already-placed ones
    order: list[int] = []
    seen = [False] * n
    for s in sorted(range(n), key=lambda v: -g.degrees[v]):
        if seen[s]:
            continue
        seen[s] = True
        queue = [s]
        while queue:
            v = queue.pop(0)
            order.append(v)
            for w in g.adj[v]:
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
    hadj = [set(a) for a in h.adj]
    mapping: dict[int, int] = {}
    used = [False] * n

    def extend(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        placed = [(mapping[w]) for w in g.adj[v] if w in mapping]
        if placed:
            cands = set(hadj[placed[0]])
            for x in placed[1:]:
                cands &= hadj[x]
            cands = sorted(cands)
        else:
            cands = range(n)
        for x in cands:
            if used[x] or h.degrees[x] != g.degrees[v]:
                continue
            # non-edges among placed vertices must stay non-edges
            if sum(1 for w in hadj[x] if used[w]) != len(placed):
                continue
            mapping[v] = x
            used[x] = True
            if extend(i + 1):
                return True
            del mapping[v]
            used[x] = False
        return False

    return dict(mapping) if extend(0) else None


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m or sorted(g.degrees) != sorted(h.degrees):
        return False
    try:
        return certificate(g) == certificate(h)
    except SizeGuardError:
        return find_isomorphism(g, h) is not None
