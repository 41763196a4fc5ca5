"""Family-level computations: pairwise distinguishability and the census of
polynomials over all signatures of an underlying graph."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Optional

from .catalog import all_signatures, by_name, family_members, family_underlying
from .chromatic import chromatic_polynomial, zero_free_polynomial
from .graph import EdgeKind, SignedGraph, switching_canonical
from .poly import IntPolynomial, positive_integer_roots

__all__ = ["PairDifference", "distinguish", "CensusEntry", "Census", "sweep"]


def _engine(zero_free: bool) -> Callable[[SignedGraph], IntPolynomial]:
    return zero_free_polynomial if zero_free else chromatic_polynomial


@dataclass
class PairDifference:
    first: str
    second: str
    zero_free: bool
    difference: IntPolynomial
    roots: Optional[list[int]]  # None when the difference vanishes

    @property
    def ok(self) -> bool:
        return self.roots == []


def distinguish(family: str) -> list[PairDifference]:
    """Difference polynomials for every unordered pair in a catalog family,
    chromatic first, then zero-free."""
    names = family_members(family)
    out = []
    for zero_free in (False, True):
        polys = {name: _engine(zero_free)(by_name(name)) for name in names}
        for a, b in combinations(names, 2):
            diff = polys[a] - polys[b]
            roots = None if diff.is_zero() else positive_integer_roots(diff)
            out.append(PairDifference(a, b, zero_free, diff, roots))
    return out


@dataclass
class CensusEntry:
    polynomial: IntPolynomial
    witness: SignedGraph
    witness_index: int
    orbit_size: int = 0
    switching_classes: int = 0
    catalog_name: Optional[str] = None


@dataclass
class Census:
    family: str
    zero_free: bool
    signatures: int = 0
    switching_classes: int = 0
    entries: list[CensusEntry] = field(default_factory=list)

    @property
    def distinct(self) -> int:
        return len(self.entries)


def sweep(family: str, zero_free: bool = False, exhaustive: bool = False) -> Census:
    """Tally the polynomial of every signature of the family's underlying graph.

    By default the engine runs once per switching class on the fixed
    labelling (signatures are grouped by :func:`switching_canonical`) and
    the value is shared by the class; ``exhaustive`` runs the engine on every
    signature separately.  Entries are in order of first appearance.
    """
    engine = _engine(zero_free)
    census = Census(family, zero_free)
    by_class: dict[SignedGraph, IntPolynomial] = {}
    class_seen: set[SignedGraph] = set()
    entries: dict[IntPolynomial, CensusEntry] = {}
    for index, g in enumerate(all_signatures(family_underlying(family))):
        canon, _ = switching_canonical(g)
        new_class = canon not in class_seen
        class_seen.add(canon)
        if exhaustive:
            poly = engine(g)
        else:
            poly = by_class.get(canon)
            if poly is None:
                poly = by_class[canon] = engine(g)
        entry = entries.get(poly)
        if entry is None:
            entry = entries[poly] = CensusEntry(poly, g, index)
        entry.orbit_size += 1
        entry.switching_classes += new_class
        census.signatures += 1
    census.switching_classes = len(class_seen)
    named = {engine(by_name(n)): n for n in family_members(family)}
    for entry in entries.values():
        entry.catalog_name = named.get(entry.polynomial)
    census.entries = list(entries.values())
    return census


def negative_edges(g: SignedGraph) -> list[tuple[int, int]]:
    return [e.ends for e in g.edges if e.kind == EdgeKind.NEGATIVE_LINK]
