"""Chromatic and zero-free chromatic polynomials by deletion-contraction.

Both polynomials are returned in the variable ``k``: the chromatic polynomial
counts colorings from ``{0, +-1, ..., +-k}`` (``2k+1`` colors) and the
zero-free one counts colorings from ``{+-1, ..., +-k}`` (``2k`` colors).

Each step reduces the graph, splits it into components and multiplies the
component results.  A component without links has a closed form; otherwise
the first positive link (switching a negative one if there is none) is
deleted and contracted.
"""

from __future__ import annotations

from functools import lru_cache

from .graph import (
    Edge,
    EdgeKind,
    SignedGraph,
    contract_positive_link,
    delete_edge,
    reduce,
    split_components,
    switch_vertex,
)
from .poly import IntPolynomial

__all__ = [
    "chromatic_polynomial",
    "clear_cache",
    "zero_free_polynomial",
    "select_pivot_edge",
    "loops_only_closed_form",
]

_ONE = IntPolynomial((1,))
_TWO_K = IntPolynomial((0, 2))
_TWO_K_PLUS_ONE = IntPolynomial((1, 2))


def chromatic_polynomial(g: SignedGraph) -> IntPolynomial:
    """Number of proper colorings with colors ``0, +-1, ..., +-k``."""
    return _solve(g, zero_free=False)


def zero_free_polynomial(g: SignedGraph) -> IntPolynomial:
    """Number of proper colorings with colors ``+-1, ..., +-k``."""
    return _solve(g, zero_free=True)


def clear_cache() -> None:
    """Drop memoized component results."""
    _component.cache_clear()


def select_pivot_edge(g: SignedGraph) -> int:
    """Index of the first positive link, else of the first negative link."""
    for i, e in enumerate(g.edges):
        if e.kind == EdgeKind.POSITIVE_LINK:
            return i
    for i, e in enumerate(g.edges):
        if e.kind == EdgeKind.NEGATIVE_LINK:
            return i
    raise ValueError("graph has no links to pivot on")


def loops_only_closed_form(g: SignedGraph, zero_free: bool = False) -> IntPolynomial:
    """Polynomial of a reduced graph whose only edges are negative loops.

    A looped vertex loses color 0; without color 0 the loop is vacuous.
    """
    looped = set()
    for e in g.edges:
        if e.kind not in (EdgeKind.NEGATIVE_LOOP, EdgeKind.HALF_EDGE):
            raise ValueError(f"closed form needs a graph without links or positive loops, found {e}")
        looped.add(e.ends[0])
    if zero_free:
        return _TWO_K ** g.n
    return (_TWO_K ** len(looped)) * (_TWO_K_PLUS_ONE ** (g.n - len(looped)))


def _solve(g: SignedGraph, zero_free: bool) -> IntPolynomial:
    g = reduce(g)
    if g.improper:
        return IntPolynomial()
    if zero_free and g.has_kind(EdgeKind.NEGATIVE_LOOP):
        # x != -x only excludes 0, which zero-free colorings never use
        g = SignedGraph(g.n, tuple(e for e in g.edges if e.kind != EdgeKind.NEGATIVE_LOOP))
    result = _ONE
    for comp in split_components(g):
        result = result * _component(comp, zero_free)
        if result.is_zero():
            break
    return result


# Keyed on the exact labelled component; no isomorphism canonicalization.
@lru_cache(maxsize=1 << 18)
def _component(g: SignedGraph, zero_free: bool) -> IntPolynomial:
    if not g.links:
        return loops_only_closed_form(g, zero_free)
    i = select_pivot_edge(g)
    if g.edges[i].kind == EdgeKind.NEGATIVE_LINK:
        u, v = g.edges[i].ends
        g = switch_vertex(g, u)
        i = g.edges.index(Edge(EdgeKind.POSITIVE_LINK, (u, v)))
    return _solve(delete_edge(g, i), zero_free) - _solve(contract_positive_link(g, i), zero_free)
