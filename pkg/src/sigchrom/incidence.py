"""Bidirected incidence matrices.

Rows are vertices, columns are edges.  A positive link has one ``+1`` and
one ``-1``, a negative link two entries of equal sign, and a half edge or
negative loop a single nonzero entry.  The standardized column has ``+1`` as
its first nonzero entry.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Edge, EdgeKind, SignedGraph, build_graph, reduce

__all__ = [
    "IncidenceMatrix",
    "IncidenceError",
    "encode_incidence",
    "decode_incidence",
    "standardize",
]


class IncidenceError(ValueError):
    pass


@dataclass(frozen=True)
class IncidenceMatrix:
    n_rows: int
    n_cols: int
    rows: tuple[tuple[int, ...], ...]

    @classmethod
    def from_rows(cls, rows, n_cols: int | None = None) -> IncidenceMatrix:
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        if n_cols is None:
            n_cols = len(rows[0]) if rows else 0
        for i, r in enumerate(rows):
            if len(r) != n_cols:
                raise IncidenceError(f"row {i} has {len(r)} entries, expected {n_cols}")
            for x in r:
                if x not in (-1, 0, 1):
                    raise IncidenceError(f"entry {x} in row {i} is not -1, 0 or 1")
        return cls(len(rows), n_cols, rows)

    @classmethod
    def from_columns(cls, n_rows: int, columns) -> IncidenceMatrix:
        columns = [tuple(c) for c in columns]
        rows = [tuple(c[i] for c in columns) for i in range(n_rows)]
        return cls.from_rows(rows, len(columns))

    def columns(self) -> list[tuple[int, ...]]:
        return [tuple(r[j] for r in self.rows) for j in range(self.n_cols)]


def _standard_column(col: tuple[int, ...]) -> tuple[int, ...]:
    for x in col:
        if x:
            return col if x > 0 else tuple(-y for y in col)
    return col


def standardize(m: IncidenceMatrix) -> IncidenceMatrix:
    """Negate every column whose first nonzero entry is ``-1``."""
    return IncidenceMatrix.from_columns(m.n_rows, [_standard_column(c) for c in m.columns()])


def encode_incidence(g: SignedGraph) -> IncidenceMatrix:
    """Standardized incidence matrix of ``reduce(g)``, one column per edge in
    sorted edge order."""
    g = reduce(g)
    if g.improper:
        raise IncidenceError("a graph with a positive loop has no incidence encoding")
    columns = []
    for e in g.edges:
        col = [0] * g.n
        if e.is_link:
            u, v = e.ends
            col[u] = 1
            col[v] = -1 if e.kind == EdgeKind.POSITIVE_LINK else 1
        else:
            col[e.ends[0]] = 1
        columns.append(col)
    return IncidenceMatrix.from_columns(g.n, columns)


def decode_incidence(m: IncidenceMatrix) -> SignedGraph:
    """Classify each column: a zero sum over two entries is a positive link,
    a sum of +-2 a negative link, a single entry a half edge, and an all-zero
    column (loose edge) is dropped."""
    edges = []
    for j, col in enumerate(m.columns()):
        support = [i for i, x in enumerate(col) if x]
        if len(support) > 2:
            raise IncidenceError(f"column {j} has {len(support)} nonzero entries")
        if len(support) == 2:
            u, v = support
            kind = EdgeKind.POSITIVE_LINK if col[u] + col[v] == 0 else EdgeKind.NEGATIVE_LINK
            edges.append(Edge(kind, (u, v)))
        elif len(support) == 1:
            edges.append(Edge(EdgeKind.HALF_EDGE, (support[0],)))
    return build_graph(m.n_rows, edges)
