"""The named signed graphs: six signed Petersen graphs and the switching
classes of signed K3, K4 and K5.

Petersen vertices 0-4 are the outer cycle and 5-9 the inner pentagram, each
in increasing angle (18, 90, 162, 234, 306 degrees); vertex ``i`` and
``i + 5`` are joined by a spoke.  Complete-graph vertices are numbered by
increasing angle in their drawing as well.
"""

from __future__ import annotations

import re
from itertools import combinations, product
from typing import Iterator

from .graph import EdgeKind, SignedGraph, build_graph, link

__all__ = [
    "underlying_petersen",
    "underlying_complete",
    "signed_petersen",
    "signed_complete",
    "all_signatures",
    "catalog_names",
    "by_name",
    "family_members",
]

OUTER_CYCLE = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]
INNER_STAR = [(5, 7), (7, 9), (9, 6), (6, 8), (8, 5)]
SPOKES = [(i, i + 5) for i in range(5)]

PETERSEN_NEGATIVE = {
    1: [],
    2: [(3, 4)],
    3: [(2, 3), (4, 0)],
    4: [(3, 4), (5, 7)],
    5: [(2, 3), (4, 0), (5, 7)],
    6: [(3, 4), (5, 7), (1, 6)],
}

# K3: 90, 210, 330 deg.  K4: 45, 135, 225, 315 deg (a, b, d, c in the
# lettered K4 drawing).  K5: 18, 90, 162, 234, 306 deg.
COMPLETE_NEGATIVE = {
    (3, 1): [],
    (3, 2): [(1, 2)],
    (4, 1): [],
    (4, 2): [(2, 3)],
    (4, 3): [(0, 1), (2, 3)],
    (5, 1): [],
    (5, 2): [(3, 4)],
    (5, 3): [(3, 4), (0, 2)],
    (5, 4): [(0, 1), (1, 2)],
    (5, 5): [(0, 1), (1, 2), (3, 4)],
    (5, 6): [(2, 3), (3, 4), (4, 0)],
    (5, 7): [(0, 1), (1, 2), (0, 2), (3, 4)],
}

FAMILIES = {"petersen": "P", "k3": "K3", "k4": "K4", "k5": "K5"}


def _signed(n: int, pairs, negative) -> SignedGraph:
    neg = {frozenset(p) for p in negative}
    return build_graph(n, [link(u, v, -1 if frozenset((u, v)) in neg else 1) for u, v in pairs])


def underlying_petersen() -> SignedGraph:
    return _signed(10, OUTER_CYCLE + INNER_STAR + SPOKES, [])


def underlying_complete(n: int) -> SignedGraph:
    if n < 1:
        raise ValueError("complete graph needs at least one vertex")
    return _signed(n, combinations(range(n), 2), [])


def signed_petersen(i: int) -> SignedGraph:
    if i not in PETERSEN_NEGATIVE:
        raise ValueError(f"signed Petersen graphs are numbered 1..6, got {i}")
    return _signed(10, OUTER_CYCLE + INNER_STAR + SPOKES, PETERSEN_NEGATIVE[i])


def signed_complete(order: int, variant: int) -> SignedGraph:
    if (order, variant) not in COMPLETE_NEGATIVE:
        raise ValueError(f"no signed K{order} number {variant} in the catalog")
    return _signed(order, combinations(range(order), 2), COMPLETE_NEGATIVE[(order, variant)])


def all_signatures(underlying: SignedGraph) -> Iterator[SignedGraph]:
    """Every sign assignment to the links, as a binary counter over the
    sorted edge sequence (the first edge is the least significant bit)."""
    if any(not e.is_link for e in underlying.edges):
        raise ValueError("signature enumeration needs a graph with links only")
    ends = [e.ends for e in underlying.edges]
    for bits in product((1, -1), repeat=len(ends)):
        signs = bits[::-1]
        yield build_graph(underlying.n, [link(u, v, s) for (u, v), s in zip(ends, signs)])


def catalog_names() -> list[str]:
    names = [f"P{i}" for i in sorted(PETERSEN_NEGATIVE)]
    names += [f"K{o}.{v}" for o, v in sorted(COMPLETE_NEGATIVE)]
    return names


_NAME = re.compile(r"^(?:P(\d+)|K(\d+)\.(\d+))$")


def by_name(name: str) -> SignedGraph:
    """Look up ``P1``..``P6`` or ``K3.1``..``K5.7``."""
    m = _NAME.match(name.strip())
    if not m:
        raise KeyError(f"unknown catalog graph {name!r}")
    try:
        if m.group(1):
            return signed_petersen(int(m.group(1)))
        return signed_complete(int(m.group(2)), int(m.group(3)))
    except ValueError as exc:
        raise KeyError(f"unknown catalog graph {name!r}") from exc


def family_members(family: str) -> list[str]:
    """Catalog names in a family: ``petersen``, ``k3``, ``k4`` or ``k5``."""
    prefix = FAMILIES[family.lower()]
    if prefix == "P":
        return [f"P{i}" for i in sorted(PETERSEN_NEGATIVE)]
    order = int(prefix[1:])
    return [f"K{order}.{v}" for o, v in sorted(COMPLETE_NEGATIVE) if o == order]


def family_underlying(family: str) -> SignedGraph:
    prefix = FAMILIES[family.lower()]
    if prefix == "P":
        return underlying_petersen()
    return underlying_complete(int(prefix[1:]))


def negative_edge_count(g: SignedGraph) -> int:
    return sum(1 for e in g.edges if e.kind == EdgeKind.NEGATIVE_LINK)
