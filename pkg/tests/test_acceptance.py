"""The seven acceptance checks, each with its runtime budget.

Every check prints one PASS/FAIL line; the lines are repeated in the pytest
terminal summary.
"""

from __future__ import annotations

import random
import subprocess
import sys
import time
from collections import Counter
from pathlib import Path

from edgerecon.certificates import are_isomorphic, certificate, find_isomorphism
from edgerecon.cli import main
from edgerecon.deck import build_deck, deck_equal
from edgerecon.fixtures import fig1a, fig1b, fig3
from edgerecon.graph import Graph, cycle_graph, delete_edge, relabel
from edgerecon.oracle import (
    ALL_GRAPHS,
    CLASS_U,
    UNICYCLIC,
    EnumerationSpec,
    enumerate_unlabeled,
    preimages_many,
    random_class_U,
    random_unicyclic,
)
from edgerecon.reconstruct import reconstruct
from edgerecon.unicyclic import Category, classify_card, decompose, ucd

from conftest import CRITERIA
from strategies import isomorphism_classes, leaf_extensions

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def _report(k: int, title: str, ok: bool, detail: str, elapsed: float, budget: float) -> None:
    in_time = elapsed < budget
    status = "PASS" if ok and in_time else "FAIL"
    line = f"{status} criterion {k} ({title}): {detail}; {elapsed:.2f}s of {budget:g}s budget"
    print(line)
    CRITERIA.append(line)
    assert ok, line
    assert in_time, line


def test_criterion_1_fixture_arithmetic():
    t = time.perf_counter()
    p = ucd(fig1b())
    d = decompose(fig1a())
    roots = Counter(b.root for b in d.branches)
    ok = p == 4 and d.ucd == 3 and len(roots) == 1 and max(roots.values()) == 3
    _report(1, "fixture arithmetic", ok, f"ucd(fig1b)={p}, fig1a branches per root={dict(roots)}",
            time.perf_counter() - t, 1.0)


def test_criterion_2_lost_branch_cards():
    t = time.perf_counter()
    d = build_deck(fig3())
    non_tree = [c for c in d.cards if not c.is_tree]
    four = [c for c in non_tree if c.ucd == 4]
    ok = d.m == 9 and len(four) == 5 and all(
        c.category == Category.UNICYCLIC_P_MINUS_1_PLUS_FOREST for c in four
    )
    _report(2, "lost-branch cards", ok, f"{d.m} cards, {len(four)} non-tree cards with 4 branches",
            time.perf_counter() - t, 1.0)


def _true_type(d, e) -> Category:
    if e in d.cycle_edges:
        return Category.TREE
    if e in {b.attachment_edge for b in d.branches}:
        return Category.UNICYCLIC_P_MINUS_1_PLUS_FOREST
    return Category.UNICYCLIC_P_PLUS_FOREST


def test_criterion_3_card_trichotomy():
    t = time.perf_counter()
    graphs = edges = failures = 0
    for seed in range(500):
        rng = random.Random(seed)
        g = random_unicyclic(rng.randint(3, 20), rng)
        d = decompose(g)
        graphs += 1
        for e in g.sorted_edges():
            edges += 1
            if classify_card(delete_edge(g, e), d.ucd).category != _true_type(d, e):
                failures += 1
    _report(3, "card trichotomy", failures == 0, f"{graphs} graphs, {edges} edges, {failures} failures",
            time.perf_counter() - t, 10.0)


def test_criterion_4_round_trip():
    t = time.perf_counter()
    iso = decks = 0
    rng = random.Random(2024)
    for _ in range(200):
        g = random_class_U(rng.randint(15, 20), rng.getrandbits(64))
        d = build_deck(g)
        h = reconstruct(d)
        iso += are_isomorphic(h, g)
        decks += deck_equal(build_deck(h), d)
    _report(4, "round trip", iso == 200 and decks == 200, f"isomorphic {iso}/200, deck equal {decks}/200",
            time.perf_counter() - t, 60.0)


def test_criterion_5_exhaustive_uniqueness():
    t = time.perf_counter()
    parts = []
    ok = True
    for n in (15, 16):
        sources = list(enumerate_unlabeled(EnumerationSpec(n, CLASS_U)))
        found = preimages_many([build_deck(g) for g in sources], EnumerationSpec(n, UNICYCLIC))
        unique = sum(
            len(hits) == 1 and certificate(hits[0]) == certificate(g) for g, hits in zip(sources, found)
        )
        ok &= bool(sources) and unique == len(sources)
        parts.append(f"class-U n={n}: {unique}/{len(sources)} unique")
    small_total = small_unique = 0
    for n in range(3, 9):
        sources = list(enumerate_unlabeled(EnumerationSpec(n, UNICYCLIC)))
        found = preimages_many([build_deck(g) for g in sources], EnumerationSpec(n, ALL_GRAPHS))
        small_total += len(sources)
        small_unique += sum(
            len(hits) == 1 and certificate(hits[0]) == certificate(g) for g, hits in zip(sources, found)
        )
    ok &= small_unique == small_total
    parts.append(f"unicyclic n<=8 among all graphs: {small_unique}/{small_total} unique")
    _report(5, "exhaustive uniqueness", ok, "; ".join(parts), time.perf_counter() - t, 900.0)


def _brute_classes(max_n: int, seed_graph: Graph, with_cycles: bool) -> dict[int, list[list[Graph]]]:
    """Classes grown one leaf at a time and split by backtracking isomorphism only."""
    start = seed_graph.n
    levels = {start: [[seed_graph]]}
    iso = lambda a, b: find_isomorphism(a, b) is not None  # noqa: E731
    for n in range(start + 1, max_n + 1):
        pool = [h for cls in levels[n - 1] for h in leaf_extensions(cls[0])]
        if with_cycles:
            pool.append(cycle_graph(n))
        levels[n] = isomorphism_classes(pool, iso)
    return levels


def test_criterion_6_certificate_soundness():
    t = time.perf_counter()
    rng = random.Random(6)
    classes = [cls for lv in _brute_classes(9, Graph(1), False).values() for cls in lv]
    classes += [cls for lv in _brute_classes(9, cycle_graph(3), True).values() for cls in lv]
    coincide = True
    by_cert: dict[bytes, int] = {}
    for i, cls in enumerate(classes):
        payloads = {certificate(g).payload for g in cls}
        coincide &= len(payloads) == 1
        for p in payloads:
            coincide &= by_cert.setdefault(p, i) == i
    probes = mismatched = 0
    for cls in classes:
        g = cls[0]
        want = certificate(g).payload
        perm = list(range(g.n))
        for _ in range(1000):
            rng.shuffle(perm)
            probes += 1
            mismatched += certificate(relabel(g, perm)).payload != want
    ok = coincide and mismatched == 0
    _report(6, "certificate soundness", ok,
            f"{len(classes)} classes, partitions coincide={coincide}, {probes} probes, {mismatched} mismatches",
            time.perf_counter() - t, 60.0)


def test_criterion_7_cli_bit_exactness(tmp_path, capsys):
    t = time.perf_counter()
    fixtures = sorted((FIXTURES / "class_u").glob("*.txt"))
    same = 0
    for src in fixtures:
        a, g, b = tmp_path / "a.json", tmp_path / "g.txt", tmp_path / "b.json"
        codes = (
            main(["deck", str(src), "-o", str(a)]),
            main(["reconstruct", str(a), "-o", str(g)]),
            main(["deck", str(g), "-o", str(b)]),
        )
        same += codes == (0, 0, 0) and a.read_bytes() == b.read_bytes()
    runs = [
        subprocess.run(
            [sys.executable, "-m", "edgerecon", "gen", "--n", "18", "--seed", "7"],
            capture_output=True, check=False,
        )
        for _ in range(2)
    ]
    gen_ok = all(r.returncode == 0 for r in runs) and runs[0].stdout == runs[1].stdout and runs[0].stdout
    capsys.readouterr()
    ok = bool(fixtures) and same == len(fixtures) and bool(gen_ok)
    _report(7, "CLI bit-exactness", ok,
            f"{same}/{len(fixtures)} fixtures byte-identical, gen reproducible={bool(gen_ok)}",
            time.perf_counter() - t, 60.0)
