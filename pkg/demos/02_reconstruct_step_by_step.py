#!/usr/bin/env python3
"""Walk through the reconstruction pipeline on a deck, with no access to the source graph."""

# %%
from edgerecon.certificates import are_isomorphic
from edgerecon.deck import build_deck
from edgerecon.fixtures import g_u
from edgerecon.reconstruct import (
    align,
    identify_unique_branches_from_deck,
    merged_positions,
    reconstruct,
    select_overlapping_cards,
    walk_graph,
)

deck = build_deck(g_u())

# %% shapes that appear exactly once are singletons in all but one lost-branch card
uniques = identify_unique_branches_from_deck(deck)
print("unique shapes:", uniques)

# %% two cards that both keep every unique shape, and the rotation that lines them up
u1, u2 = select_overlapping_cards(deck, uniques)
a = align(u1, u2, uniques)[0]
print("rotation", a.rotation, "reflected", a.reflected)
print("short arc", a.short_path, "long arc", a.long_path)

# %% their union, laid out around the cycle
positions = merged_positions(u1, u2, a)
h = walk_graph(positions, a)
print("rebuilt:", h)
print("isomorphic to source:", are_isomorphic(h, g_u()))

# %% the full pipeline also checks every candidate against the deck
print("pipeline agrees:", are_isomorphic(reconstruct(deck), h))
