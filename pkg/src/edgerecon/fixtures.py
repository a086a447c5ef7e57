"""Small named graphs used throughout the tests and demos.

Figure graphs are labeled 0-based: the drawing's vertex ``k`` is vertex ``k - 1``.
"""

from __future__ import annotations

from .graph import Graph, cycle_graph, from_edges


def fig1a() -> Graph:
    """4-cycle 0-1-2-3 with three branches at vertex 1.

    red: 1-4, 4-5, 4-6; green: 1-7; blue: 1-8, 8-9, 9-10.
    """
    return from_edges(
        11,
        [(0, 1), (1, 2), (2, 3), (3, 0),
         (1, 4), (4, 5), (4, 6),
         (1, 7),
         (1, 8), (8, 9), (9, 10)],
    )


FIG1A_RED = ((1, 4), (4, 5), (4, 6))
FIG1A_GREEN = ((1, 7),)
FIG1A_BLUE = ((1, 8), (8, 9), (9, 10))


def fig1b() -> Graph:
    """Triangle v1 v2 v3 with pendants 4@1, 5@2, 6@3 and the path 3-7-8 (ucd 4)."""
    return from_edges(
        8,
        [(0, 1), (1, 2), (2, 0), (0, 3), (1, 4), (2, 5), (2, 6), (6, 7)],
    )


def fig3() -> Graph:
    """Triangle v1 v2 v3; pendants 4@v1, 5@v2, 6@v2, 9@v3; path v1-8-7 (ucd 5)."""
    return from_edges(
        9,
        [(0, 1), (1, 2), (2, 0), (0, 3), (1, 4), (1, 5), (2, 8), (0, 7), (7, 6)],
    )


def g_u() -> Graph:
    """Smallest class-U shape: 5-cycle 0..4 with branches

    pendant @0 (5), 2-path @1 (6, 7), 3-edge star @2 (8; 9, 10),
    3-path @3 (11, 12, 13), pendant @4 (14).
    """
    return from_edges(
        15,
        [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
         (0, 5),
         (1, 6), (6, 7),
         (2, 8), (8, 9), (8, 10),
         (3, 11), (11, 12), (12, 13),
         (4, 14)],
    )


def g_u_swapped() -> Graph:
    """G_U with the star branch and the 3-path branch exchanged between vertices 2 and 3."""
    return from_edges(
        15,
        [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
         (0, 5),
         (1, 6), (6, 7),
         (3, 8), (8, 9), (8, 10),
         (2, 11), (11, 12), (12, 13),
         (4, 14)],
    )


def c5_with_pendants() -> Graph:
    """5-cycle with one pendant edge at every cycle vertex (ucd 5, no unique branch)."""
    return from_edges(10, [(i, (i + 1) % 5) for i in range(5)] + [(i, i + 5) for i in range(5)])


def c5() -> Graph:
    return cycle_graph(5)


def twin_leaves() -> Graph:
    """Class-U graph with two pendant edges at one cycle vertex.

    5-cycle 0..4; 3-path @0 (5, 6, 7); star @2 (8; 9, 10); at vertex 3 a
    2-path (11, 12) and the pendants 13 and 14.  The two cards that lose a
    pendant are identical, and their union is one pendant short.
    """
    return from_edges(
        15,
        [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
         (0, 5), (5, 6), (6, 7),
         (2, 8), (8, 9), (8, 10),
         (3, 11), (11, 12), (3, 13), (3, 14)],
    )
