#!/usr/bin/env python3
"""Build the edge deck of a small class-U graph and sort its cards by shape."""

# %%
from collections import Counter

from edgerecon.deck import build_deck, unicyclic_cards
from edgerecon.fixtures import g_u
from edgerecon.unicyclic import decompose, in_class_U

g = g_u()
d = decompose(g)
print("cycle:", d.cycle, "branches:", d.ucd)
for b in d.branches:
    print(f"  root {b.root}: {b.size} edges, shape {b.certificate}")
print("class-U:", bool(in_class_U(g)))

# %% every edge deletion gives one card; the deck keeps multiplicities
deck = build_deck(g)
print(Counter(c.category.value for c in deck.cards))

# %% cards that lost a whole branch carry one branch fewer on the cycle
for prof in unicyclic_cards(deck):
    print([len(p) for p in prof.positions])
