"""Signed multigraphs with links, loops and half edges.

A :class:`SignedGraph` is an immutable value: every operation returns a new
graph.  Vertices are the integers ``0..n-1``; edges are kept as a sorted
tuple so that equal graphs compare equal and hash alike.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from enum import IntEnum
from typing import Iterable, NamedTuple, Optional, Sequence

__all__ = [
    "EdgeKind",
    "Edge",
    "SignedGraph",
    "SignVector",
    "link",
    "neg_loop",
    "pos_loop",
    "half_edge",
    "build_graph",
    "switch_graph",
    "delete_edge",
    "contract_positive_link",
    "contract_negative_loop",
    "reduce",
    "split_components",
    "disjoint_union",
    "is_balanced",
    "switching_equivalent",
    "switching_canonical",
    "switch_vertex",
]

SignVector = tuple  # tuple of +1 / -1, one entry per vertex


class EdgeKind(IntEnum):
    POSITIVE_LINK = 0
    NEGATIVE_LINK = 1
    POSITIVE_LOOP = 2
    NEGATIVE_LOOP = 3
    HALF_EDGE = 4

    @property
    def is_link(self) -> bool:
        return self <= EdgeKind.NEGATIVE_LINK


class Edge(NamedTuple):
    """One edge.  Links carry ``(u, v)`` with ``u < v``; others carry ``(v,)``."""

    kind: EdgeKind
    ends: tuple[int, ...]

    @property
    def is_link(self) -> bool:
        return self.kind <= 1

    @property
    def sign(self) -> Optional[int]:
        if self.kind in (EdgeKind.POSITIVE_LINK, EdgeKind.POSITIVE_LOOP):
            return 1
        if self.kind in (EdgeKind.NEGATIVE_LINK, EdgeKind.NEGATIVE_LOOP):
            return -1
        return None

    def __str__(self) -> str:
        if self.is_link:
            u, v = self.ends
            return f"{u}{'+' if self.kind == EdgeKind.POSITIVE_LINK else '-'}{v}"
        name = {EdgeKind.POSITIVE_LOOP: "posloop", EdgeKind.NEGATIVE_LOOP: "negloop",
                EdgeKind.HALF_EDGE: "halfedge"}[self.kind]
        return f"{name}({self.ends[0]})"


_POS = EdgeKind.POSITIVE_LINK
_NEG = EdgeKind.NEGATIVE_LINK
_FLIP = {_POS: _NEG, _NEG: _POS}


def link(u: int, v: int, sign: int = 1) -> Edge:
    """A link between ``u`` and ``v``; ``sign`` is +1 or -1."""
    if sign not in (1, -1):
        raise ValueError(f"link sign must be +1 or -1, got {sign!r}")
    if u == v:
        raise ValueError(f"link with equal endpoints {u}-{v} must be declared a loop")
    kind = EdgeKind.POSITIVE_LINK if sign > 0 else EdgeKind.NEGATIVE_LINK
    return Edge(kind, (min(u, v), max(u, v)))


def neg_loop(v: int) -> Edge:
    return Edge(EdgeKind.NEGATIVE_LOOP, (v,))


def pos_loop(v: int) -> Edge:
    return Edge(EdgeKind.POSITIVE_LOOP, (v,))


def half_edge(v: int) -> Edge:
    return Edge(EdgeKind.HALF_EDGE, (v,))


@dataclass(frozen=True)
class SignedGraph:
    """Vertex count, sorted edge multiset, and a flag recording that a
    positive loop was absorbed by :func:`reduce` (no proper colorings)."""

    n: int
    edges: tuple[Edge, ...] = ()
    improper: bool = False
    _links: tuple = field(default=None, init=False, repr=False, compare=False, hash=False)

    @property
    def links(self) -> tuple[Edge, ...]:
        if self._links is None:
            object.__setattr__(self, "_links", tuple(e for e in self.edges if e.kind <= 1))
        return self._links

    def negative_links(self) -> list[Edge]:
        return [e for e in self.edges if e.kind == EdgeKind.NEGATIVE_LINK]

    def has_kind(self, kind: EdgeKind) -> bool:
        return any(e.kind == kind for e in self.edges)

    def __str__(self) -> str:
        body = ", ".join(str(e) for e in self.edges)
        flag = ", improper" if self.improper else ""
        return f"SignedGraph(n={self.n}; {body}{flag})"


def _validate_edge(e: Edge, n: int) -> Edge:
    e = Edge(EdgeKind(e[0]), tuple(e[1]))
    if e.is_link:
        if len(e.ends) != 2:
            raise ValueError(f"link needs two endpoints: {e.ends}")
        u, v = e.ends
        if u == v:
            raise ValueError(f"link with equal endpoints {u}-{v} must be declared a loop")
        if u > v:
            e = Edge(e.kind, (v, u))
    elif len(e.ends) != 1:
        raise ValueError(f"{e.kind.name.lower()} needs exactly one endpoint: {e.ends}")
    for x in e.ends:
        if not 0 <= x < n:
            raise ValueError(f"endpoint {x} out of range for {n} vertices")
    return e


def build_graph(n: int, edges: Iterable[Edge] = (), improper: bool = False) -> SignedGraph:
    """Validate and sort the edges.  Does not reduce."""
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    checked = sorted(_validate_edge(e, n) for e in edges)
    return SignedGraph(n, tuple(checked), improper)


def _make(n: int, edges: Iterable[Edge], improper: bool) -> SignedGraph:
    # internal constructor for edges already known to be valid
    return SignedGraph(n, tuple(sorted(edges)), improper)


def switch_graph(g: SignedGraph, s: Sequence[int]) -> SignedGraph:
    """Replace each link sign by ``s[u] * sign * s[v]``; loops are unchanged."""
    if len(s) != g.n or any(x not in (1, -1) for x in s):
        raise ValueError("switching vector must hold +1/-1 for every vertex")
    out = []
    for e in g.edges:
        if e.is_link:
            u, v = e.ends
            if s[u] * s[v] < 0:
                e = Edge(_FLIP[e.kind], e.ends)
        out.append(e)
    return _make(g.n, out, g.improper)


def switch_vertex(g: SignedGraph, v: int) -> SignedGraph:
    """Switch a single vertex (negate the signs of its incident links)."""
    out = []
    for e in g.edges:
        if e.kind <= _NEG and v in e.ends:
            e = Edge(_FLIP[e.kind], e.ends)
        out.append(e)
    return _make(g.n, out, g.improper)


def delete_edge(g: SignedGraph, index: int) -> SignedGraph:
    if not 0 <= index < len(g.edges):
        raise IndexError(f"edge index {index} out of range")
    return SignedGraph(g.n, g.edges[:index] + g.edges[index + 1:], g.improper)


def _relabel_without(x: int, gone: int) -> int:
    return x - 1 if x > gone else x


def contract_positive_link(g: SignedGraph, index: int) -> SignedGraph:
    """Identify the endpoints of a positive link; the smaller index survives.

    Parallel links become loops of the same sign at the merged vertex.
    """
    e = g.edges[index]
    if e.kind != EdgeKind.POSITIVE_LINK:
        raise ValueError(f"edge {e} is not a positive link")
    keep, gone = e.ends
    out = []
    for i, f in enumerate(g.edges):
        if i == index:
            continue
        ends = tuple(_relabel_without(keep if x == gone else x, gone) for x in f.ends)
        if f.is_link:
            a, b = ends
            if a == b:
                kind = EdgeKind.POSITIVE_LOOP if f.kind == EdgeKind.POSITIVE_LINK else EdgeKind.NEGATIVE_LOOP
                f = Edge(kind, (a,))
            else:
                f = Edge(f.kind, (min(a, b), max(a, b)))
        else:
            f = Edge(f.kind, ends)
        out.append(f)
    return _make(g.n - 1, out, g.improper)


def contract_negative_loop(g: SignedGraph, index: int) -> SignedGraph:
    """Remove the looped vertex; each link at it becomes a half edge at the
    other endpoint."""
    e = g.edges[index]
    if e.kind != EdgeKind.NEGATIVE_LOOP:
        raise ValueError(f"edge {e} is not a negative loop")
    (v,) = e.ends
    out = []
    for i, f in enumerate(g.edges):
        if i == index:
            continue
        if f.is_link:
            if v in f.ends:
                w = f.ends[0] if f.ends[1] == v else f.ends[1]
                out.append(Edge(EdgeKind.HALF_EDGE, (_relabel_without(w, v),)))
            else:
                out.append(Edge(f.kind, tuple(_relabel_without(x, v) for x in f.ends)))
        elif f.ends[0] == v:
            raise ValueError(f"vertex {v} carries a second loop or half edge {f}; reduce first")
        else:
            out.append(Edge(f.kind, (_relabel_without(f.ends[0], v),)))
    return _make(g.n - 1, out, g.improper)


def reduce(g: SignedGraph) -> SignedGraph:
    """Canonical form with the same chromatic polynomials.

    Identical parallel links collapse to one, half edges and negative loops
    at a vertex collapse to a single negative loop, and positive loops are
    dropped after setting ``improper``.  Opposite-sign parallel links are
    both kept.
    """
    improper = g.improper
    links = set()
    looped = set()
    for e in g.edges:
        if e.is_link:
            links.add(e)
        elif e.kind == EdgeKind.POSITIVE_LOOP:
            improper = True
        else:
            looped.add(e.ends[0])
    out = list(links)
    out.extend(Edge(EdgeKind.NEGATIVE_LOOP, (v,)) for v in looped)
    return _make(g.n, out, improper)


def is_reduced(g: SignedGraph) -> bool:
    return reduce(g) == g


def split_components(g: SignedGraph) -> list[SignedGraph]:
    """Connected components ordered by their smallest vertex, each relabelled
    densely in the original relative order.  An improper flag is copied to
    every component."""
    adj: list[list[int]] = [[] for _ in range(g.n)]
    for e in g.links:
        u, v = e.ends
        adj[u].append(v)
        adj[v].append(u)
    comp = [-1] * g.n
    members: list[list[int]] = []
    for root in range(g.n):
        if comp[root] >= 0:
            continue
        c = len(members)
        comp[root] = c
        stack, seen = [root], [root]
        while stack:
            for w in adj[stack.pop()]:
                if comp[w] < 0:
                    comp[w] = c
                    stack.append(w)
                    seen.append(w)
        members.append(sorted(seen))
    if len(members) <= 1:
        return [g] if g.n else []
    index = [0] * g.n
    for vs in members:
        for i, v in enumerate(vs):
            index[v] = i
    buckets: list[list[Edge]] = [[] for _ in members]
    for e in g.edges:
        buckets[comp[e.ends[0]]].append(Edge(e.kind, tuple(index[x] for x in e.ends)))
    # edges stay sorted: relabelling within a component is monotone
    return [SignedGraph(len(vs), tuple(b), g.improper) for vs, b in zip(members, buckets)]


def disjoint_union(a: SignedGraph, b: SignedGraph) -> SignedGraph:
    shifted = (Edge(e.kind, tuple(x + a.n for x in e.ends)) for e in b.edges)
    return _make(a.n + b.n, list(a.edges) + list(shifted), a.improper or b.improper)


def is_balanced(g: SignedGraph) -> tuple[bool, Optional[SignVector]]:
    """Balance test by sign propagation along a spanning forest.

    Returns ``(True, s)`` with ``switch_graph(g, s)`` free of negative links,
    or ``(False, None)``.  Half edges and negative loops are unbalanced.
    """
    if any(e.kind in (EdgeKind.HALF_EDGE, EdgeKind.NEGATIVE_LOOP) for e in g.edges):
        return False, None
    adj: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    for e in g.links:
        u, v = e.ends
        sign = 1 if e.kind == EdgeKind.POSITIVE_LINK else -1
        adj[u].append((v, sign))
        adj[v].append((u, sign))
    s = [0] * g.n
    for root in range(g.n):
        if s[root]:
            continue
        s[root] = 1
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w, sign in adj[v]:
                want = sign * s[v]
                if not s[w]:
                    s[w] = want
                    queue.append(w)
                elif s[w] != want:
                    return False, None
    return True, tuple(s)


def _underlying(g: SignedGraph):
    return (
        g.n,
        Counter(e.ends for e in g.links),
        Counter(e.ends for e in g.edges if e.kind in (EdgeKind.POSITIVE_LOOP, EdgeKind.NEGATIVE_LOOP)),
        Counter(e.ends for e in g.edges if e.kind == EdgeKind.HALF_EDGE),
    )


def switching_equivalent(g1: SignedGraph, g2: SignedGraph) -> bool:
    """Whether some switching of ``g1`` equals ``g2`` on the same labelling.

    Both graphs must share the underlying unsigned multigraph.  For each
    vertex pair the parallel links either keep or flip their sign multiset;
    the resulting constraints ``s_u * s_v = +-1`` are checked for balance.
    """
    if _underlying(g1) != _underlying(g2):
        raise ValueError("graphs do not share an underlying multigraph")
    loops1 = sorted(e for e in g1.edges if not e.is_link)
    loops2 = sorted(e for e in g2.edges if not e.is_link)
    if loops1 != loops2:
        return False

    def sign_groups(g):
        groups: dict[tuple[int, int], list[int]] = {}
        for e in g.links:
            groups.setdefault(e.ends, []).append(1 if e.kind == EdgeKind.POSITIVE_LINK else -1)
        return {k: sorted(v) for k, v in groups.items()}

    s1, s2 = sign_groups(g1), sign_groups(g2)
    constraints = []
    for ends, signs in s1.items():
        target = s2[ends]
        flipped = sorted(-x for x in signs)
        keep_ok, flip_ok = signs == target, flipped == target
        if keep_ok and flip_ok:
            continue
        if keep_ok:
            constraints.append(link(*ends, 1))
        elif flip_ok:
            constraints.append(link(*ends, -1))
        else:
            return False
    return is_balanced(build_graph(g1.n, constraints))[0]


def switching_canonical(g: SignedGraph) -> tuple[SignedGraph, SignVector]:
    """A fixed representative of the switching class of ``g`` on its labelling.

    Each vertex pair carries the majority sign of its parallel links.  A
    forest of such pairs, grown breadth-first from the smallest vertex in
    endpoint order, is switched to positive majority.  Pairs with as many
    positive as negative links look the same under any switching and impose
    nothing.  Two graphs on the same labelled
    underlying multigraph are switching equivalent iff their canonical forms
    are equal.
    """
    balance: dict[tuple[int, int], int] = {}
    for e in g.links:
        balance[e.ends] = balance.get(e.ends, 0) + (1 if e.kind == _POS else -1)
    adj: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    for (u, v), net in sorted(balance.items()):
        if net:
            sign = 1 if net > 0 else -1
            adj[u].append((v, sign))
            adj[v].append((u, sign))
    s = [0] * g.n
    for root in range(g.n):
        if s[root]:
            continue
        s[root] = 1
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w, sign in adj[v]:
                if not s[w]:
                    s[w] = sign * s[v]
                    queue.append(w)
    s = tuple(s)
    return switch_graph(g, s), s
