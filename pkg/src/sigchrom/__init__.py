"""Exact chromatic and zero-free chromatic polynomials of signed graphs."""

from .chromatic import chromatic_polynomial, zero_free_polynomial
from .graph import (
    Edge,
    EdgeKind,
    SignedGraph,
    build_graph,
    half_edge,
    link,
    neg_loop,
    pos_loop,
    reduce,
    switch_graph,
)
from .poly import IntPolynomial, format_poly, parse_poly

__version__ = "0.1.0"

__all__ = [
    "IntPolynomial",
    "format_poly",
    "parse_poly",
    "Edge",
    "EdgeKind",
    "SignedGraph",
    "build_graph",
    "link",
    "neg_loop",
    "pos_loop",
    "half_edge",
    "reduce",
    "switch_graph",
    "chromatic_polynomial",
    "zero_free_polynomial",
]
