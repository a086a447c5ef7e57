"""Rebuild a unicyclic graph from its edge deck.

The pipeline only ever looks at card certificates:

1. the cards that lost one whole branch (one per branch of the source) give
   the unique branch shapes by counting singleton classes;
2. two such cards that both kept three unique branches at distinct cycle
   vertices are aligned on those anchors;
3. their positionwise branch union is laid out by walking the short and the
   long arc between two anchors;
4. every candidate is rebuilt into a deck and compared with the input.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence

from .certificates import Certificate, certificate, children, _tree_from_code
from .deck import Deck, build_deck, deck_equal, unicyclic_cards
from .errors import (
    AmbiguousDeck,
    GraphError,
    HypothesesViolated,
    InconsistentMultisets,
    NoAlignment,
    NoSuchPair,
    NoUniqueBranch,
    NotReconstructable,
    ReconstructionError,
    SizeGuardError,
)
from .graph import Graph, delete_edge, from_edges
from .unicyclic import BranchProfile

MIN_CYCLE = 5
MIN_BRANCHES = 5


@dataclass(frozen=True)
class Alignment:
    """Dihedral map ``j -> rotation + (-j if reflected else j) mod c`` from u2's positions to u1's.

    ``anchors`` pairs each unique certificate with its position in u1.
    ``short_path``/``long_path`` are u1 positions from ``x1`` to ``x2``.
    """

    cycle_length: int
    rotation: int
    reflected: bool
    anchors: tuple[tuple[Certificate, int], ...]
    x1: int
    x2: int
    short_path: tuple[int, ...]
    long_path: tuple[int, ...]

    def image(self, j: int) -> int:
        return (self.rotation + (-j if self.reflected else j)) % self.cycle_length

    def preimage(self, i: int) -> int:
        c = self.cycle_length
        return (self.rotation - i) % c if self.reflected else (i - self.rotation) % c

    @property
    def anchor_certificate(self) -> Certificate:
        return next(cert for cert, pos in self.anchors if pos == self.x1)


def identify_unique_branches_from_deck(d: Deck) -> list[Certificate]:
    """Certificates of the branches that occur exactly once in the source.

    Each lost-branch card keeps every branch but one.  A unique shape is
    therefore a singleton class in all of these cards except the one that
    removed it, while a shape of multiplicity k >= 2 is a singleton in at most
    k of them (exactly when k = 2).  With at least five cards, "singleton in all
    but at most one card" separates the two: among any three cards a unique
    branch survives as a singleton in at least two.
    """
    profiles = unicyclic_cards(d)
    if not profiles:
        raise HypothesesViolated("no unicyclic cards")
    lengths = {p.cycle_length for p in profiles}
    if len(lengths) != 1:
        raise HypothesesViolated("cards disagree on the cycle length")
    c = lengths.pop()
    if c < MIN_CYCLE:
        raise HypothesesViolated(f"cycle length {c} < {MIN_CYCLE}")
    p = len(profiles)
    if p < MIN_BRANCHES:
        raise HypothesesViolated(f"ucd {p} < {MIN_BRANCHES}")
    if d.branch_count != p:
        raise HypothesesViolated("number of lost-branch cards differs from the branch count")
    singleton = Counter()
    for prof in profiles:
        singleton.update(x for x, k in prof.multiset().items() if k == 1)
    uniques = sorted(x for x, k in singleton.items() if k >= p - 1)
    if not uniques:
        raise NoUniqueBranch("no branch shape is unique")
    return uniques


def _holds_anchors(prof: BranchProfile, uniques: Sequence[Certificate]) -> bool:
    pos = [prof.positions_of(x) for x in uniques]
    return all(len(p) == 1 for p in pos) and len({p[0] for p in pos}) == len(uniques)


def overlapping_card_pairs(
    d: Deck, uniques: Sequence[Certificate]
) -> Iterator[tuple[BranchProfile, BranchProfile]]:
    """All pairs of lost-branch cards that both keep every anchor in ``uniques``.

    A pair of equal profiles is admissible only when the deck holds that card
    at least twice, i.e. two different branches of the same shape were lost.
    """
    if len(uniques) < 3:
        raise HypothesesViolated("need at least three unique branch certificates")
    profiles = unicyclic_cards(d)
    if len(profiles) < MIN_BRANCHES:
        raise HypothesesViolated(f"only {len(profiles)} lost-branch cards, need {MIN_BRANCHES}")
    counts = Counter(profiles)
    keep = sorted(prof for prof in counts if _holds_anchors(prof, uniques))
    found = False
    for i, a in enumerate(keep):
        if counts[a] >= 2:
            found = True
            yield a, a
        for b in keep[i + 1 :]:
            found = True
            yield a, b
    if not found:
        raise NoSuchPair("no two cards keep all anchor branches")


def select_overlapping_cards(
    d: Deck, uniques: Sequence[Certificate]
) -> tuple[BranchProfile, BranchProfile]:
    return next(overlapping_card_pairs(d, uniques))


def _anchor_paths(c: int, anchors: Sequence[tuple[Certificate, int]]):
    best = None
    for (ca, pa), (cb, pb) in combinations(anchors, 2):
        if pa == pb:
            continue
        fwd = (pb - pa) % c
        short, long_ = min(fwd, c - fwd), max(fwd, c - fwd)
        if short == long_:
            continue
        (c1, p1), (c2, p2) = sorted([(ca, pa), (cb, pb)])
        key = ((short, long_), (c1, c2))
        if best is None or key < best[0]:
            best = (key, p1, p2)
    if best is None:
        return None
    (short, long_), _ = best[0]
    p1, p2 = best[1], best[2]
    step = 1 if (p2 - p1) % c == short else -1
    s_path = tuple((p1 + k * step) % c for k in range(short + 1))
    l_path = tuple((p1 - k * step) % c for k in range(long_ + 1))
    return p1, p2, s_path, l_path


def align(u1: BranchProfile, u2: BranchProfile, uniques: Sequence[Certificate]) -> list[Alignment]:
    """Dihedral maps of u2 onto u1 that carry every anchor onto its twin."""
    c = u1.cycle_length
    if u2.cycle_length != c:
        raise NoAlignment("profiles have different cycle lengths")
    pos1, pos2 = {}, {}
    for x in uniques:
        a, b = u1.positions_of(x), u2.positions_of(x)
        if len(a) != 1 or len(b) != 1:
            raise NoAlignment(f"anchor {x} is not present exactly once in both cards")
        pos1[x], pos2[x] = a[0], b[0]
    anchors = tuple(sorted(pos1.items()))
    paths = _anchor_paths(c, anchors)
    if paths is None:
        raise NoAlignment("no anchor pair with arcs of different length")
    x1, x2, s_path, l_path = paths
    out = []
    for reflected in (False, True):
        for r in range(c):
            if all((r + (-pos2[x] if reflected else pos2[x])) % c == pos1[x] for x in uniques):
                out.append(Alignment(c, r, reflected, anchors, x1, x2, s_path, l_path))
    if not out:
        raise NoAlignment("no dihedral map matches the anchors")
    return out


def merged_positions(u1: BranchProfile, u2: BranchProfile, a: Alignment) -> list[Counter]:
    """Positionwise multiset maximum of the two cards, in u1's coordinates.

    Each card misses exactly one branch of the source, so neither may fall
    short of the union by more than one branch.
    """
    if u1.cycle_length != a.cycle_length or u2.cycle_length != a.cycle_length:
        raise InconsistentMultisets("alignment does not fit the profiles")
    merged = []
    short1 = short2 = 0
    for i in range(a.cycle_length):
        m1 = Counter(u1.positions[i])
        m2 = Counter(u2.positions[a.preimage(i)])
        union = m1 | m2
        short1 += sum((union - m1).values())
        short2 += sum((union - m2).values())
        merged.append(union)
    if short1 > 1 or short2 > 1:
        raise InconsistentMultisets(
            f"cards differ from their union by {short1} and {short2} branches"
        )
    return merged


def walk_graph(positions: Sequence[Counter], a: Alignment) -> Graph:
    """Lay out branches along the short arc from x1 to x2, then the long arc.

    Labels are handed out in walk order: x1 is 0, its branches (the anchor
    first) follow, then each new cycle vertex and its branches.
    """
    edges: list[tuple[int, int]] = []
    label: dict[int, int] = {}
    nxt = 0

    def place(pos: int) -> int:
        nonlocal nxt
        if pos in label:
            return label[pos]
        v = label[pos] = nxt
        nxt += 1
        certs = sorted(positions[pos].elements())
        if pos == a.x1:
            certs.remove(a.anchor_certificate)
            certs.insert(0, a.anchor_certificate)
        for cert in certs:
            (child,) = children(cert.body)
            edges.append((v, nxt))
            nxt = _tree_from_code(child, nxt, edges)
        return v

    for path in (a.short_path, a.long_path):
        prev = place(path[0])
        for pos in path[1:]:
            cur = place(pos)
            edges.append((prev, cur))
            prev = cur
    return from_edges(nxt, edges)


def merge(u1: BranchProfile, u2: BranchProfile, a: Alignment) -> Graph:
    return walk_graph(merged_positions(u1, u2, a), a)


def _completions(positions: list[Counter], full: Counter) -> list[list[Counter]]:
    """Position lists whose branch multiset equals ``full``.

    Two cards of the same shape that lost same-shaped branches at the same
    vertex leave one branch unplaced; it can sit at any position, and the
    deck comparison decides.
    """
    total = Counter()
    for p in positions:
        total += p
    if total - full:
        return []
    deficit = full - total
    if not deficit:
        return [positions]
    if sum(deficit.values()) != 1:
        return []
    (x,) = deficit
    out = []
    for i in range(len(positions)):
        cand = [Counter(p) for p in positions]
        cand[i][x] += 1
        out.append(cand)
    return out


def _deck_matches(g: Graph, d: Deck) -> bool:
    if g.n != d.n or g.m != d.m:
        return False
    want = d.counter()
    for e in g.sorted_edges():
        cert = certificate(delete_edge(g, e))
        if want[cert] == 0:
            return False
        want[cert] -= 1
    return True


def reconstruct(d: Deck) -> Graph:
    """The unique graph (up to isomorphism) whose deck is ``d``.

    Raises :class:`NotReconstructable` when no candidate reproduces the deck and
    :class:`AmbiguousDeck` when two non-isomorphic candidates do.
    """
    profiles = unicyclic_cards(d)
    if not profiles:
        raise NotReconstructable("no unicyclic cards")
    try:
        uniques = identify_unique_branches_from_deck(d)
    except ReconstructionError as exc:
        raise NotReconstructable(exc.reason) from exc
    full = Counter()
    for prof in profiles:
        full |= prof.multiset()

    survivors: dict[Certificate, Graph] = {}
    tried: set[Certificate] = set()
    for triple in combinations(uniques, 3):
        try:
            pairs = list(overlapping_card_pairs(d, triple))
        except ReconstructionError:
            continue
        for u1, u2 in pairs:
            try:
                alignments = align(u1, u2, triple)
            except NoAlignment:
                continue
            for a in alignments:
                try:
                    positions = merged_positions(u1, u2, a)
                except InconsistentMultisets:
                    continue
                for cand in _completions(positions, full):
                    g = walk_graph(cand, a)
                    key = certificate(g)
                    if key in tried:
                        continue
                    tried.add(key)
                    if _deck_matches(g, d):
                        survivors[key] = g
    if not survivors:
        raise NotReconstructable("no candidate reproduces the deck")
    if len(survivors) > 1:
        raise AmbiguousDeck(
            f"{len(survivors)} non-isomorphic graphs share this deck", survivors.values()
        )
    return next(iter(survivors.values()))


def verify(d: Deck, g: Graph) -> bool:
    """True iff ``g``'s deck is ``d``."""
    if g.n != d.n or g.m != d.m or g.m == 0:
        return False
    try:
        return deck_equal(build_deck(g), d)
    except (GraphError, SizeGuardError):
        # uncertifiable cards cannot match a deck of certified cards
        return False
