"""Edge decks: the multiset of one-edge-deleted subgraphs, as certificates.

Card metadata (shape, cycle length, branch profile) is read straight off the
certificate payload, so a deck loaded from disk carries everything the
reconstruction needs without any vertex labels.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .certificates import (
    CertKind,
    Certificate,
    certificate,
    decode,
    split_codes,
    unicyclic_trunks,
)
from .errors import FormatError, GraphError, SizeGuardError
from .graph import Graph, delete_edge, from_object, to_object
from .unicyclic import BranchProfile, Category


@dataclass(frozen=True, eq=False)
class Card:
    """One card. Equality and order look only at the certificate."""

    certificate: Certificate
    category: Category | None = None

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Card) and self.certificate == other.certificate

    def __lt__(self, other: "Card") -> bool:
        return self.certificate < other.certificate

    def __hash__(self) -> int:
        return hash(self.certificate)

    @cached_property
    def _parts(self) -> tuple[list[bytes], list[bytes]] | None:
        """(unicyclic codes, tree codes) for pseudoforest-shaped certificates."""
        kind = self.certificate.kind
        if kind not in (CertKind.FOREST, CertKind.PSEUDOFOREST, CertKind.TREE, CertKind.UNICYCLIC):
            return None
        codes = split_codes(self.certificate.body)
        return [c for c in codes if c[:1] == b"["], [c for c in codes if c[:1] == b"("]

    @property
    def is_tree(self) -> bool:
        parts = self._parts
        return parts is not None and not parts[0] and len(parts[1]) == 1

    @property
    def is_unicyclic_plus_tree(self) -> bool:
        parts = self._parts
        return parts is not None and len(parts[0]) == 1 and len(parts[1]) == 1

    @cached_property
    def profile(self) -> BranchProfile | None:
        if not self.is_unicyclic_plus_tree:
            return None
        return BranchProfile.from_trunk_codes(unicyclic_trunks(self._parts[0][0]))

    @property
    def cycle_length(self) -> int | None:
        p = self.profile
        return None if p is None else p.cycle_length

    @property
    def ucd(self) -> int | None:
        p = self.profile
        return None if p is None else p.branch_count

    @property
    def forest(self) -> Certificate | None:
        if not self.is_unicyclic_plus_tree:
            return None
        return Certificate(CertKind.FOREST, self._parts[1][0])

    @cached_property
    def graph(self) -> Graph:
        return decode(self.certificate)

    @cached_property
    def degree_histogram(self) -> tuple[int, ...]:
        g = self.graph
        hist = [0] * max(g.n, 1)
        for d in g.degrees:
            hist[d] += 1
        return tuple(hist)


@dataclass(frozen=True)
class Deck:
    n: int
    m: int
    cards: tuple[Card, ...]

    def __post_init__(self) -> None:
        if self.m != len(self.cards):
            raise GraphError(f"deck announces m={self.m} but holds {len(self.cards)} cards")

    @classmethod
    def from_certificates(cls, n: int, certs: Iterable[Certificate]) -> "Deck":
        raw = sorted(Card(c) for c in certs)
        p = source_branch_count(raw)
        cards = tuple(Card(c.certificate, _category(c, p)) for c in raw)
        return cls(n, len(cards), cards)

    def certificates(self) -> list[Certificate]:
        return [c.certificate for c in self.cards]

    def counter(self) -> Counter:
        return Counter(self.certificates())

    @property
    def branch_count(self) -> int | None:
        """ucd of the source graph, if the deck looks like it came from a unicyclic graph."""
        return source_branch_count(self.cards)


def source_branch_count(cards: Iterable[Card]) -> int | None:
    """Branch count of the source, read from the deck alone.

    Deleting an attachment edge leaves ``p - 1`` branches and deleting an edge
    inside a branch leaves ``p``; any source with a branch has attachment
    edges, so the smallest count seen on a non-tree card is ``p - 1``.
    Returns ``None`` unless every card is a tree or a unicyclic graph plus a tree.
    """
    counts = []
    for c in cards:
        if c.is_unicyclic_plus_tree:
            counts.append(c.ucd)
        elif not c.is_tree:
            return None
    if not counts:
        return 0
    return min(counts) + 1


def _category(card: Card, p: int | None) -> Category | None:
    if p is None:
        return None
    if card.is_tree:
        return Category.TREE
    if card.ucd == p - 1:
        return Category.UNICYCLIC_P_MINUS_1_PLUS_FOREST
    if card.ucd == p:
        return Category.UNICYCLIC_P_PLUS_FOREST
    return None


def build_deck(g: Graph) -> Deck:
    if g.m < 1:
        raise GraphError("the deck of an edgeless graph is empty")
    return Deck.from_certificates(g.n, (certificate(delete_edge(g, e)) for e in g.sorted_edges()))


def deck_equal(a: Deck, b: Deck) -> bool:
    return a.n == b.n and a.m == b.m and a.certificates() == b.certificates()


def unicyclic_cards(d: Deck) -> list[BranchProfile]:
    """Profiles of the cards that lost a whole branch, with multiplicity."""
    return [c.profile for c in d.cards if c.category == Category.UNICYCLIC_P_MINUS_1_PLUS_FOREST]


# -- deck documents ---------------------------------------------------------


def _card_object(card: Card, debug: bool) -> dict:
    if debug:
        return to_object(card.graph)
    return {"cert": card.certificate.hex()}


def to_json(d: Deck, debug: bool = False, set_mode: bool = False) -> str:
    cards = d.cards
    head = {"n": d.n, "m": d.m}
    if set_mode:
        cards = tuple(dict.fromkeys(cards))
        head["mode"] = "set"
    lines = [json.dumps(_card_object(c, debug)) for c in cards]
    prefix = json.dumps(head)[:-1] + ', "cards": ['
    if not lines:
        return prefix + "]}\n"
    return prefix + "\n" + ",\n".join(lines) + "\n]}\n"


def from_json(text: str) -> Deck:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from exc
    if not isinstance(obj, dict) or not {"n", "m", "cards"} <= obj.keys():
        raise FormatError('deck document needs keys "n", "m" and "cards"')
    if obj.get("mode", "multiset") != "multiset":
        raise FormatError("set-mode decks drop multiplicities and cannot be loaded")
    n, m, cards = obj["n"], obj["m"], obj["cards"]
    if not isinstance(n, int) or not isinstance(m, int) or not isinstance(cards, list):
        raise FormatError("deck document has wrong field types")
    if len(cards) != m:
        raise FormatError(f"deck announces m={m} but lists {len(cards)} cards")
    certs = []
    for entry in cards:
        if isinstance(entry, dict) and "cert" in entry:
            if not isinstance(entry["cert"], str):
                raise FormatError("certificate must be a base16 string")
            cert = Certificate.from_hex(entry["cert"])
            _check_decodable(cert, n)
        else:
            g = from_object(entry)
            if g.n != n:
                raise FormatError(f"card has {g.n} vertices, deck has n={n}")
            cert = certificate(g)
        certs.append(cert)
    return Deck.from_certificates(n, certs)


def _check_decodable(cert: Certificate, n: int) -> None:
    try:
        g = decode(cert)
        canonical = certificate(g)
    except (GraphError, SizeGuardError) as exc:
        raise FormatError(f"undecodable certificate: {exc}") from exc
    # equality of cards is byte equality, so only canonical payloads are accepted
    if canonical != cert:
        raise FormatError("certificate payload is not in canonical form")
    if g.n != n:
        raise FormatError(f"card has {g.n} vertices, deck has n={n}")
