"""Ground truth by exhaustion: unlabeled enumeration and deck preimage search.

Connected unicyclic graphs are enumerated as bracelets of rooted trees (the
trunks around the cycle), keeping only sequences that are their own dihedral
minimum, so every isomorphism class appears once and no deduplication table is
needed.  Arbitrary graphs (small n only) are grown edge by edge and
deduplicated by certificate.
"""

from __future__ import annotations

import random
from collections import Counter, defaultdict
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .certificates import (
    CLOSE,
    OPEN,
    _unicyclic_from_trunks,
    certificate,
    children,
    subtree_code,
)
from .deck import Deck
from .errors import BudgetInfeasible, SizeGuardError
from .graph import Graph, delete_edge, from_edges, relabel
from .unicyclic import in_class_U

ALL_GRAPHS = "all-graphs"
UNICYCLIC = "connected-unicyclic"
CLASS_U = "class-U"
FAMILIES = (ALL_GRAPHS, UNICYCLIC, CLASS_U)
MAX_N = {ALL_GRAPHS: 8, UNICYCLIC: 16, CLASS_U: 16}
MIN_CLASS_U_N = 15


@dataclass(frozen=True)
class EnumerationSpec:
    n: int
    family: str = UNICYCLIC
    m: int | None = None
    max_n: int | None = None  # may only tighten the module guard

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; choose from {FAMILIES}")
        if self.n > self.guard:
            raise SizeGuardError(f"{self.family} enumeration is limited to n <= {self.guard}, got {self.n}")

    @property
    def guard(self) -> int:
        g = MAX_N[self.family]
        return g if self.max_n is None else min(g, self.max_n)


# -- rooted trees and bracelets ---------------------------------------------


@lru_cache(maxsize=None)
def rooted_trees(k: int) -> tuple[bytes, ...]:
    """AHU codes of all rooted trees on ``k`` vertices, sorted."""
    if k < 1:
        return ()
    if k == 1:
        return (OPEN + CLOSE,)
    pool = [(s, t) for s in range(1, k) for t in rooted_trees(s)]
    out = []

    def grow(start: int, remaining: int, acc: list[bytes]) -> None:
        if remaining == 0:
            out.append(OPEN + b"".join(sorted(acc)) + CLOSE)
            return
        for i in range(start, len(pool)):
            s, t = pool[i]
            if s > remaining:
                break
            acc.append(t)
            grow(i, remaining - s, acc)
            acc.pop()

    grow(0, k - 1, [])
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def _branch_codes(trunk: bytes) -> tuple[bytes, ...]:
    return tuple(OPEN + ch + CLOSE for ch in children(trunk))


def _is_dihedral_min(seq: Sequence[bytes]) -> bool:
    c = len(seq)
    first = seq[0]
    fwd = tuple(seq)
    rev = fwd[::-1]
    for r in range(c):
        if fwd[r] == first and fwd[r:] + fwd[:r] < fwd:
            return False
        if rev[r] == first and rev[r:] + rev[:r] < fwd:
            return False
    return True


def trunk_sequences(n: int, min_cycle: int = 3) -> Iterator[tuple[bytes, ...]]:
    """One trunk sequence per connected unicyclic graph on ``n`` vertices."""
    sizes = {s: rooted_trees(s) for s in range(1, n + 1)}
    for c in range(max(3, min_cycle), n + 1):
        seq: list[bytes] = []

        def rec(pos: int, remaining: int) -> Iterator[tuple[bytes, ...]]:
            if pos == c - 1:
                options: Iterable[int] = (remaining,)
            else:
                options = range(1, remaining - (c - pos - 1) + 1)
            for s in options:
                for t in sizes[s]:
                    if pos and t < seq[0]:
                        continue
                    seq.append(t)
                    if pos == c - 1:
                        if _is_dihedral_min(seq):
                            yield tuple(seq)
                    else:
                        yield from rec(pos + 1, remaining - s)
                    seq.pop()

        yield from rec(0, n)


def _trunks_in_class_U(trunks: Sequence[bytes]) -> bool:
    if len(trunks) < 5:
        return False
    placed = [(i, b) for i, t in enumerate(trunks) for b in _branch_codes(t)]
    if len(placed) < 5:
        return False
    counts = Counter(b for _, b in placed)
    return len({i for i, b in placed if counts[b] == 1}) >= 3


def _graph_from_trunks(trunks: Sequence[bytes]) -> Graph:
    edges: list[tuple[int, int]] = []
    n = _unicyclic_from_trunks(trunks, 0, edges)
    return from_edges(n, edges)


# -- all graphs --------------------------------------------------------------


@lru_cache(maxsize=None)
def _edge_level(n: int, k: int) -> tuple[Graph, ...]:
    """Non-isomorphic graphs on ``n`` vertices with ``k`` edges."""
    total = n * (n - 1) // 2
    if k < 0 or k > total:
        return ()
    if k == 0:
        return (Graph(n),)
    if 2 * k > total:
        every = set(combinations(range(n), 2))
        return tuple(Graph(n, frozenset(every - g.edges)) for g in _edge_level(n, total - k))
    seen: dict = {}
    for g in _edge_level(n, k - 1):
        for e in combinations(range(n), 2):
            if e in g.edges:
                continue
            h = Graph(n, g.edges | {e})
            seen.setdefault(certificate(h), h)
    return tuple(seen[key] for key in sorted(seen))


def enumerate_unlabeled(spec: EnumerationSpec) -> Iterator[Graph]:
    """One representative per isomorphism class of the selected family."""
    n = spec.n
    if spec.family == ALL_GRAPHS:
        total = n * (n - 1) // 2
        levels = range(total + 1) if spec.m is None else [spec.m]
        for k in levels:
            yield from _edge_level(n, k)
        return
    if spec.m is not None and spec.m != n:
        return
    for trunks in trunk_sequences(n, 5 if spec.family == CLASS_U else 3):
        if spec.family == CLASS_U and not _trunks_in_class_U(trunks):
            continue
        yield _graph_from_trunks(trunks)


# -- preimage search -----------------------------------------------------------


def card_degree_signature(g: Graph) -> tuple[tuple[int, ...], ...]:
    """Sorted degree histograms of all one-edge-deleted subgraphs of ``g``."""
    return _signature(g.n, g.sorted_edges())


def _signature(n: int, edges: Sequence[tuple[int, int]]) -> tuple[tuple[int, ...], ...]:
    deg = [0] * n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    hist = [0] * max(n, 1)
    for d in deg:
        hist[d] += 1
    out = []
    for u, v in edges:
        a, b = deg[u], deg[v]
        h = hist[:]
        h[a] -= 1
        h[b] -= 1
        h[a - 1] += 1
        h[b - 1] += 1
        out.append(tuple(h))
    out.sort()
    return tuple(out)


def deck_signature(d: Deck) -> tuple[tuple[int, ...], ...]:
    return tuple(sorted(c.degree_histogram for c in d.cards))


def _deck_matches(g: Graph, want: Counter) -> bool:
    want = Counter(want)
    for e in g.sorted_edges():
        cert = certificate(delete_edge(g, e))
        if want[cert] <= 0:
            return False
        want[cert] -= 1
    return True


def _family_edge_lists(spec: EnumerationSpec, m: int) -> Iterator[tuple[list, Graph | None, tuple]]:
    if spec.family == ALL_GRAPHS:
        for g in _edge_level(spec.n, m):
            yield g.sorted_edges(), g, ()
        return
    if m != spec.n:
        return
    for trunks in trunk_sequences(spec.n, 5 if spec.family == CLASS_U else 3):
        if spec.family == CLASS_U and not _trunks_in_class_U(trunks):
            continue
        edges: list[tuple[int, int]] = []
        _unicyclic_from_trunks(trunks, 0, edges)
        yield edges, None, trunks


def preimages_many(decks: Sequence[Deck], spec: EnumerationSpec) -> list[list[Graph]]:
    """:func:`deck_preimages` for many decks of the same order in one pass over the family.

    Candidates are screened by the degree histograms of their cards before the
    full card-by-card comparison.
    """
    for d in decks:
        if d.n != spec.n:
            raise ValueError(f"deck has n={d.n}, enumeration has n={spec.n}")
    out: list[list[Graph]] = [[] for _ in decks]
    by_m: dict[int, dict[tuple, list[int]]] = defaultdict(lambda: defaultdict(list))
    for i, d in enumerate(decks):
        by_m[d.m][deck_signature(d)].append(i)
    wants = [d.counter() for d in decks]
    for m, targets in by_m.items():
        for edges, g, trunks in _family_edge_lists(spec, m):
            hit = targets.get(_signature(spec.n, edges))
            if not hit:
                continue
            if g is None:
                g = from_edges(spec.n, edges)
            for i in hit:
                if _deck_matches(g, wants[i]):
                    out[i].append(g)
    return out


def deck_preimages(d: Deck, spec: EnumerationSpec) -> list[Graph]:
    """Every family member (one per isomorphism class) whose deck equals ``d``."""
    return preimages_many([d], spec)[0]


# -- random generators ----------------------------------------------------------


def _random_rooted_code(k: int, rng: random.Random) -> bytes:
    """Uniform over enumerated shapes for small ``k``, random recursive tree beyond."""
    if k <= 12:
        return rng.choice(rooted_trees(k))
    parent = [-1] + [rng.randrange(i) for i in range(1, k)]
    edges = [(parent[i], i) for i in range(1, k)]
    return subtree_code(from_edges(k, edges).adj, 0)


def _shuffled(g: Graph, rng: random.Random) -> Graph:
    perm = list(range(g.n))
    rng.shuffle(perm)
    return relabel(g, perm)


def random_unicyclic(n: int, rng: random.Random) -> Graph:
    """Connected unicyclic graph: random cycle length, then random recursive growth."""
    if n < 3:
        raise BudgetInfeasible("unicyclic graphs need n >= 3")
    c = rng.randint(3, n)
    edges = [(i, (i + 1) % c) for i in range(c)]
    edges += [(rng.randrange(v), v) for v in range(c, n)]
    return _shuffled(from_edges(n, edges), rng)


def random_class_U(n: int, seed: int, max_attempts: int = 100_000) -> Graph:
    """A class-U graph on ``n`` vertices, deterministic in ``seed``.

    Rejection sampling: cycle length in [5, min(8, n - 10)], 5 to 8 branches
    with a random composition of the remaining vertices, shapes drawn from the
    enumerated rooted trees, roots uniform on the cycle.
    """
    if n < MIN_CLASS_U_N:
        raise BudgetInfeasible(f"class-U graphs need at least {MIN_CLASS_U_N} vertices, got {n}")
    rng = random.Random(seed)
    for _ in range(max_attempts):
        c = rng.randint(5, min(8, n - 10))
        budget = n - c
        k = rng.randint(5, min(budget, 8))
        cuts = sorted(rng.sample(range(1, budget), k - 1))
        sizes = [b - a for a, b in zip([0] + cuts, cuts + [budget])]
        trunks: list[list[bytes]] = [[] for _ in range(c)]
        for s in sizes:
            trunks[rng.randrange(c)].append(_random_rooted_code(s, rng))
        codes = [OPEN + b"".join(sorted(t)) + CLOSE for t in trunks]
        if not _trunks_in_class_U(codes):
            continue
        g = _graph_from_trunks(codes)
        if in_class_U(g):
            return _shuffled(g, rng)
    raise BudgetInfeasible(f"no class-U graph found on {n} vertices after {max_attempts} attempts")
