#!/usr/bin/env python3
"""Sample class-U graphs of growing size and time the round trip through the deck."""

# %%
import time

from edgerecon.certificates import are_isomorphic
from edgerecon.deck import build_deck
from edgerecon.oracle import random_class_U
from edgerecon.reconstruct import reconstruct

for n in (15, 20, 40, 80):
    g = random_class_U(n, seed=n)
    t = time.perf_counter()
    h = reconstruct(build_deck(g))
    dt = time.perf_counter() - t
    print(f"n={n:3d}  ok={are_isomorphic(h, g)}  {dt * 1000:.1f} ms")
