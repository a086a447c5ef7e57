#!/usr/bin/env python3
"""Count deck preimages for every class-U graph on 15 vertices (a few seconds)."""

# %%
import time

from edgerecon.deck import build_deck
from edgerecon.oracle import CLASS_U, UNICYCLIC, EnumerationSpec, enumerate_unlabeled, preimages_many

t = time.perf_counter()
sources = list(enumerate_unlabeled(EnumerationSpec(15, CLASS_U)))
print(len(sources), "class-U graphs on 15 vertices")

# %% one pass over all 110381 unicyclic graphs of that order
found = preimages_many([build_deck(g) for g in sources], EnumerationSpec(15, UNICYCLIC))
print("preimage counts:", sorted({len(x) for x in found}))
print(f"{time.perf_counter() - t:.1f}s")
