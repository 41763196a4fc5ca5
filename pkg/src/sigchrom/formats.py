"""Text formats for graphs and incidence matrices.

Edge list (``#`` starts a comment)::

    vertices 3
    edge 0 1 +
    edge 1 2 -
    negloop 2
    posloop 0
    halfedge 1

Incidence matrix: one row per line, whitespace-separated entries in
``{-1, 0, 1}``.  A matrix without columns is written as ``rows <n>``.
"""

from __future__ import annotations

from .graph import Edge, EdgeKind, SignedGraph, build_graph, half_edge, link, neg_loop, pos_loop
from .incidence import IncidenceError, IncidenceMatrix

__all__ = [
    "GraphFormatError",
    "parse_edgelist",
    "format_edgelist",
    "parse_matrix",
    "format_matrix",
    "looks_like_edgelist",
]


class GraphFormatError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        super().__init__(f"line {line}: {message}" if line else message)
        self.line = line


def _content_lines(text: str):
    for number, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield number, line


def looks_like_edgelist(text: str) -> bool:
    for _, line in _content_lines(text):
        return line.split()[0] == "vertices"
    return False


def _int(token: str, line: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphFormatError(f"expected an integer, got {token!r}", line) from None


def parse_edgelist(text: str) -> SignedGraph:
    n = None
    edges: list[Edge] = []
    for number, line in _content_lines(text):
        words = line.split()
        head, args = words[0], words[1:]
        if head == "vertices":
            if n is not None:
                raise GraphFormatError("vertex count given twice", number)
            if len(args) != 1:
                raise GraphFormatError("usage: vertices <n>", number)
            n = _int(args[0], number)
            continue
        if n is None:
            raise GraphFormatError("'vertices <n>' must come first", number)
        try:
            if head == "edge":
                if len(args) != 3 or args[2] not in ("+", "-"):
                    raise GraphFormatError("usage: edge <u> <v> +|-", number)
                edges.append(link(_int(args[0], number), _int(args[1], number), 1 if args[2] == "+" else -1))
            elif head in ("negloop", "posloop", "halfedge"):
                if len(args) != 1:
                    raise GraphFormatError(f"usage: {head} <v>", number)
                make = {"negloop": neg_loop, "posloop": pos_loop, "halfedge": half_edge}[head]
                edges.append(make(_int(args[0], number)))
            else:
                raise GraphFormatError(f"unknown directive {head!r}", number)
            bad = [v for v in edges[-1].ends if not 0 <= v < n]
            if bad:
                raise GraphFormatError(f"endpoint {bad[0]} out of range for {n} vertices", number)
        except GraphFormatError:
            raise
        except ValueError as exc:
            raise GraphFormatError(str(exc), number) from None
    if n is None:
        raise GraphFormatError("missing 'vertices <n>' line")
    try:
        return build_graph(n, edges)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None


_DIRECTIVE = {
    EdgeKind.NEGATIVE_LOOP: "negloop",
    EdgeKind.POSITIVE_LOOP: "posloop",
    EdgeKind.HALF_EDGE: "halfedge",
}


def format_edgelist(g: SignedGraph) -> str:
    lines = [f"vertices {g.n}"]
    for e in g.edges:
        if e.is_link:
            sign = "+" if e.kind == EdgeKind.POSITIVE_LINK else "-"
            lines.append(f"edge {e.ends[0]} {e.ends[1]} {sign}")
        else:
            lines.append(f"{_DIRECTIVE[e.kind]} {e.ends[0]}")
    if g.improper and g.n:
        # the absorbed positive loop is not recorded by vertex any more
        lines.append("posloop 0")
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> IncidenceMatrix:
    rows = []
    declared = None
    for number, line in _content_lines(text):
        words = line.split()
        if words[0] == "rows":
            if len(words) != 2 or rows:
                raise GraphFormatError("usage: rows <n> (only for a matrix without columns)", number)
            declared = _int(words[1], number)
            continue
        rows.append([_int(w, number) for w in words])
    if declared is not None:
        if rows:
            raise GraphFormatError("'rows' header is only for a matrix without columns")
        return IncidenceMatrix(declared, 0, ((),) * declared)
    try:
        return IncidenceMatrix.from_rows(rows)
    except IncidenceError as exc:
        raise GraphFormatError(str(exc)) from None


def format_matrix(m: IncidenceMatrix) -> str:
    if m.n_cols == 0:
        return f"rows {m.n_rows}\n"
    return "".join(" ".join(f"{x:2d}" for x in row) + "\n" for row in m.rows)
