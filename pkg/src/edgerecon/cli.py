"""Command-line front end.

Exit status: 0 on success, 1 when an algorithm fails or a check comes out
negative, 2 on unreadable or invalid input.  The path ``-`` means stdin or
stdout; files are written atomically.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from collections import Counter
from pathlib import Path

from . import deck as deckmod
from .errors import FormatError, ReconstructionError, SizeGuardError
from .graph import Graph, parse_edge_list, parse_json, to_edge_list, to_json
from .oracle import FAMILIES, UNICYCLIC, EnumerationSpec, deck_preimages, random_class_U
from .reconstruct import reconstruct, verify
from .unicyclic import decompose, in_class_U

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2
SEED_LIMIT = 2**64


class InputError(Exception):
    """Bad command-line input, mapped to exit status 2."""


# -- io --------------------------------------------------------------------


def read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def write_text(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    target = Path(path)
    fd, tmp = tempfile.mkstemp(dir=target.parent or ".", prefix=f".{target.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, target)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def read_graph(path: str, fmt: str) -> Graph:
    text = read_text(path)
    return parse_json(text) if fmt == "json" else parse_edge_list(text)


def format_graph(g: Graph, fmt: str, **meta: object) -> str:
    return to_json(g, **meta) if fmt == "json" else to_edge_list(g)


def emit_report(args: argparse.Namespace, report: dict) -> None:
    write_text(args.output, json.dumps(report, indent=2, sort_keys=True) + "\n")
    print(report["summary"], file=sys.stderr)


# -- subcommands ---------------------------------------------------------------


def cmd_deck(args: argparse.Namespace) -> int:
    g = read_graph(args.input, args.format)
    d = deckmod.build_deck(g)
    write_text(args.output, deckmod.to_json(d, debug=args.debug_cards, set_mode=args.set_mode))
    if args.verbose:
        print(f"deck: {d.m} cards, {len(set(d.cards))} distinct", file=sys.stderr)
    return EXIT_OK


def cmd_reconstruct(args: argparse.Namespace) -> int:
    d = deckmod.from_json(read_text(args.input))
    g = reconstruct(d)
    write_text(args.output, format_graph(g, args.format))
    if args.verbose:
        print(f"reconstructed: n={g.n} m={g.m}", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    d = deckmod.from_json(read_text(args.deck))
    g = read_graph(args.graph, args.format)
    ok = verify(d, g)
    emit_report(args, {"match": ok, "summary": "deck matches" if ok else "deck does not match"})
    return EXIT_OK if ok else EXIT_FAIL


def cmd_classify(args: argparse.Namespace) -> int:
    g = read_graph(args.input, args.format)
    verdict = in_class_U(g)
    report: dict = {"n": g.n, "m": g.m, "class_U": verdict.ok, "diagnostic": verdict.diagnostic}
    tag = "true" if verdict.ok else f"false ({verdict.diagnostic})"
    try:
        dec = decompose(g)
    except ValueError:
        report["summary"] = f"class-U: {tag}"
        emit_report(args, report)
        return EXIT_OK
    counts = Counter(b.certificate for b in dec.branches)
    report.update(
        cycle_length=dec.cycle_length,
        ucd=dec.ucd,
        branches=[{"cert": c.hex(), "count": k} for c, k in sorted(counts.items())],
        unique_branches=sorted(
            ({"cert": b.certificate.hex(), "root": b.root} for b in dec.branches if counts[b.certificate] == 1),
            key=lambda x: (x["cert"], x["root"]),
        ),
    )
    report["summary"] = f"ucd={dec.ucd}, cycle length={dec.cycle_length}, class-U: {tag}"
    emit_report(args, report)
    return EXIT_OK


def cmd_gen(args: argparse.Namespace) -> int:
    if args.n is None:
        raise InputError("gen needs --n")
    seed = 0 if args.seed is None else args.seed
    g = random_class_U(args.n, seed)
    write_text(args.output, format_graph(g, args.format, seed=seed))
    print(f"seed: {seed}", file=sys.stderr)
    return EXIT_OK


def cmd_oracle(args: argparse.Namespace) -> int:
    d = deckmod.from_json(read_text(args.input))
    spec = EnumerationSpec(d.n, args.family, max_n=args.max_n_guard)
    found = deck_preimages(d, spec)
    report = {
        "family": args.family,
        "n": d.n,
        "m": d.m,
        "preimages": len(found),
        "graphs": [{"n": h.n, "edges": [list(e) for e in h.sorted_edges()]} for h in found],
        "summary": f"preimages: {len(found)}",
    }
    emit_report(args, report)
    return EXIT_OK


# -- parser --------------------------------------------------------------------


def _seed(text: str) -> int:
    try:
        value = int(text, 0)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from exc
    if not 0 <= value < SEED_LIMIT:
        raise argparse.ArgumentTypeError("seed must fit in 64 bits")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("edge-list", "json"), default="edge-list",
                        help="graph file format")
    common.add_argument("-o", "--output", default="-", help="output path, '-' for stdout")
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="edgerecon", description="Edge decks and reconstruction of unicyclic graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("deck", parents=[common], help="write the edge deck of a graph")
    s.add_argument("input")
    s.add_argument("--debug-cards", action="store_true", help="embed card edge lists instead of certificates")
    s.add_argument("--set-mode", action="store_true", help="drop multiplicities (debug only, not loadable)")
    s.set_defaults(func=cmd_deck)

    s = sub.add_parser("reconstruct", parents=[common], help="rebuild a graph from its deck")
    s.add_argument("input")
    s.set_defaults(func=cmd_reconstruct)

    s = sub.add_parser("verify", parents=[common], help="check a graph against a deck")
    s.add_argument("deck")
    s.add_argument("graph")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("classify", parents=[common], help="report cycle, branches and class-U membership")
    s.add_argument("input")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("gen", parents=[common], help="sample a class-U graph")
    s.add_argument("--n", type=int)
    s.add_argument("--seed", type=_seed)
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("oracle", parents=[common], help="count deck preimages by exhaustive search")
    s.add_argument("input")
    s.add_argument("--family", choices=FAMILIES, default=UNICYCLIC)
    s.add_argument("--max-n-guard", type=int, help="lower the enumeration size guard")
    s.set_defaults(func=cmd_oracle)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        return args.func(args)
    except ReconstructionError as exc:
        print(f"error: {exc.code}: {exc.reason}", file=sys.stderr)
        return EXIT_FAIL
    except (InputError, FormatError, SizeGuardError, ValueError) as exc:
        code = getattr(exc, "code", "invalid-input")
        print(f"error: {code}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except Exception as exc:  # noqa: BLE001 - keep the exit-code contract
        print(f"error: internal: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL
