"""Command-line interface.

Polynomials are in ``k``: the chromatic polynomial counts colorings with the
2k+1 colors ``0, +-1, ..., +-k`` and the zero-free one with the 2k colors
``+-1, ..., +-k``.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .analysis import distinguish, negative_edges, sweep
from .catalog import FAMILIES, by_name, catalog_names
from .chromatic import chromatic_polynomial, zero_free_polynomial
from .formats import (
    GraphFormatError,
    format_edgelist,
    format_matrix,
    looks_like_edgelist,
    parse_edgelist,
    parse_matrix,
)
from .graph import SignedGraph
from .incidence import IncidenceError, decode_incidence, encode_incidence
from .oracle import DEFAULT_BUDGET, cross_validate
from .poly import format_coeffs, format_poly

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def load_graph(source: str) -> SignedGraph:
    """A catalog name (``P1``, ``K4.3``, ...) or a path to an edge-list or
    incidence-matrix file."""
    try:
        return by_name(source)
    except KeyError:
        pass
    path = Path(source)
    if not path.is_file():
        raise UsageError(f"{source!r} is neither a catalog graph ({', '.join(catalog_names())}) nor a file")
    text = path.read_text()
    try:
        if looks_like_edgelist(text):
            return parse_edgelist(text)
        return decode_incidence(parse_matrix(text))
    except (GraphFormatError, IncidenceError) as exc:
        raise UsageError(f"{source}: {exc}") from None


def _poly(g: SignedGraph, zero_free: bool):
    return zero_free_polynomial(g) if zero_free else chromatic_polynomial(g)


def cmd_chrom(args) -> int:
    p = _poly(load_graph(args.input), args.zero_free)
    print(format_coeffs(p) if args.format == "coeffs" else format_poly(p))
    return EXIT_OK


def cmd_eval(args) -> int:
    print(_poly(load_graph(args.input), args.zero_free)(args.k))
    return EXIT_OK


def cmd_distinguish(args) -> int:
    diffs = distinguish(args.family)
    for zero_free in (False, True):
        label = "zero-free" if zero_free else "chromatic"
        rows = [d for d in diffs if d.zero_free == zero_free]
        print(f"{label} differences: {len(rows)}")
        for d in rows:
            roots = "identical" if d.roots is None else (", ".join(map(str, d.roots)) or "none")
            print(f"  {d.first} - {d.second}: {format_poly(d.difference)}  [positive integer roots: {roots}]")
    ok = all(d.ok for d in diffs)
    print("PASS" if ok else "FAIL")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_sweep(args) -> int:
    census = sweep(args.family, zero_free=args.zero_free, exhaustive=args.exhaustive)
    label = "zero-free" if args.zero_free else "chromatic"
    print(f"{args.family}: {census.signatures} signatures, {census.switching_classes} switching classes "
          f"on fixed labels, {census.distinct} distinct {label} polynomials")
    for e in census.entries:
        neg = " ".join(f"{u}-{v}" for u, v in negative_edges(e.witness)) or "(none)"
        name = e.catalog_name or "?"
        print(f"  [{name}] orbit {e.orbit_size} ({e.switching_classes} classes); "
              f"witness #{e.witness_index} negative: {neg}")
        print(f"      {format_poly(e.polynomial)}")
    return EXIT_OK


def cmd_verify(args) -> int:
    report = cross_validate(load_graph(args.input), args.kmax, args.zero_free, args.budget)
    print(report.format())
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_convert(args) -> int:
    g = load_graph(args.input)
    try:
        if args.to == "incidence":
            sys.stdout.write(format_matrix(encode_incidence(g)))
        else:
            sys.stdout.write(format_edgelist(g))
    except IncidenceError as exc:
        raise UsageError(str(exc)) from None
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sigchrom",
        description="Chromatic polynomials of signed graphs. Polynomials are in k; "
        "the chromatic polynomial uses 2k+1 colors (0, +-1..+-k), the zero-free one 2k colors.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    graph_help = "catalog name (P1..P6, K3.1..K5.7) or edge-list / incidence-matrix file"
    zf_help = "zero-free polynomial (2k colors, no color 0)"

    p = sub.add_parser("chrom", help="print a chromatic polynomial")
    p.add_argument("input", help=graph_help)
    p.add_argument("--zero-free", action="store_true", help=zf_help)
    p.add_argument("--format", choices=("text", "coeffs"), default="text",
                   help="text, or comma-separated coefficients lowest degree first")
    p.set_defaults(func=cmd_chrom)

    p = sub.add_parser("eval", help="evaluate a polynomial at k")
    p.add_argument("input", help=graph_help)
    p.add_argument("k", type=int, help="k, not the number of colors: 2k+1 colors (2k with --zero-free)")
    p.add_argument("--zero-free", action="store_true", help=zf_help)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("distinguish", help="check that a family's polynomials differ at every positive integer")
    p.add_argument("family", choices=sorted(FAMILIES))
    p.set_defaults(func=cmd_distinguish)

    p = sub.add_parser("sweep", help="census of polynomials over all signatures")
    p.add_argument("family", choices=sorted(FAMILIES))
    p.add_argument("--zero-free", action="store_true", help=zf_help)
    p.add_argument("--exhaustive", action="store_true",
                   help="run the engine on every signature instead of once per switching class (slow for petersen)")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify", help="cross-check the engine against brute-force counting")
    p.add_argument("input", help=graph_help)
    p.add_argument("--kmax", type=int, default=2, help="largest k to check (default 2)")
    p.add_argument("--zero-free", action="store_true", help=zf_help)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                   help=f"maximum assignments enumerated per point (default {DEFAULT_BUDGET})")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("convert", help="print a graph as an incidence matrix or edge list")
    p.add_argument("input", help=graph_help)
    p.add_argument("--to", choices=("incidence", "edgelist"), required=True)
    p.set_defaults(func=cmd_convert)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"sigchrom: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
