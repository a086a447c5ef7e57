"""Edge decks, canonical certificates and deck-based reconstruction of unicyclic graphs."""

from .certificates import Certificate, CertKind, are_isomorphic, certificate, decode
from .deck import Card, Deck, build_deck, deck_equal
from .errors import AmbiguousDeck, NotReconstructable, ReconstructionError
from .graph import Graph, from_edges, parse_edge_list, to_edge_list
from .oracle import EnumerationSpec, deck_preimages, enumerate_unlabeled, random_class_U
from .reconstruct import reconstruct, verify
from .unicyclic import decompose, in_class_U, ucd

__all__ = [
    "AmbiguousDeck",
    "Card",
    "CertKind",
    "Certificate",
    "Deck",
    "EnumerationSpec",
    "Graph",
    "NotReconstructable",
    "ReconstructionError",
    "are_isomorphic",
    "build_deck",
    "certificate",
    "decode",
    "deck_equal",
    "deck_preimages",
    "decompose",
    "enumerate_unlabeled",
    "from_edges",
    "in_class_U",
    "parse_edge_list",
    "random_class_U",
    "reconstruct",
    "to_edge_list",
    "ucd",
    "verify",
]
