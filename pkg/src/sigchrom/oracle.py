"""Brute-force coloring counts and exact interpolation, independent of the
deletion-contraction engine.

The counter reads the raw edge list (it never calls ``reduce``) and checks
every coloring rule directly, so it can referee the engine.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .chromatic import chromatic_polynomial, zero_free_polynomial
from .graph import EdgeKind, SignedGraph
from .poly import IntPolynomial

__all__ = [
    "DEFAULT_BUDGET",
    "BudgetExceeded",
    "count_proper_colorings",
    "interpolate_polynomial",
    "cross_validate",
    "ValidationReport",
]

DEFAULT_BUDGET = 10**8


class BudgetExceeded(RuntimeError):
    """The assignment space is larger than the configured cap."""


def _palette(k: int, zero_free: bool) -> list[int]:
    colors = [] if zero_free else [0]
    for c in range(1, k + 1):
        colors += [c, -c]
    return colors


def count_proper_colorings(
    g: SignedGraph, k: int, zero_free: bool = False, budget: int = DEFAULT_BUDGET
) -> int:
    """Count colorings ``x`` with ``x_u != sign * x_v`` on every link and
    ``x_v != 0`` at every half edge or negative loop.

    Vertices are assigned in index order and a partial coloring is abandoned
    as soon as it breaks a constraint between assigned vertices, which does
    not change the count.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    colors = _palette(k, zero_free)
    space = len(colors) ** g.n
    if space > budget:
        raise BudgetExceeded(f"{len(colors)}^{g.n} = {space} assignments exceeds budget {budget}")
    if g.improper or any(e.kind == EdgeKind.POSITIVE_LOOP for e in g.edges):
        return 0

    no_zero = [False] * g.n
    back: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    for e in g.edges:
        if e.kind in (EdgeKind.HALF_EDGE, EdgeKind.NEGATIVE_LOOP):
            no_zero[e.ends[0]] = True
        elif e.is_link:
            u, v = e.ends
            sign = 1 if e.kind == EdgeKind.POSITIVE_LINK else -1
            back[max(u, v)].append((min(u, v), sign))

    allowed = [[c for c in colors if not (no_zero[v] and c == 0)] for v in range(g.n)]
    x = [0] * g.n
    n = g.n

    def extend(v: int) -> int:
        if v == n:
            return 1
        total = 0
        constraints = back[v]
        for c in allowed[v]:
            for u, sign in constraints:
                if c == sign * x[u]:
                    break
            else:
                if v == n - 1:
                    total += 1
                else:
                    x[v] = c
                    total += extend(v + 1)
        return total

    return extend(0)


def interpolate_polynomial(points: Sequence[tuple[int, int]]) -> IntPolynomial:
    """The polynomial of degree below ``len(points)`` through ``points``,
    by exact rational Lagrange interpolation.

    Raises ``ValueError`` on repeated abscissae or if a coefficient is not an
    integer (which means some count was wrong).
    """
    xs = [x for x, _ in points]
    if len(set(xs)) != len(xs):
        raise ValueError("duplicate abscissa in interpolation points")
    total = [Fraction(0)] * len(points)
    for i, (xi, yi) in enumerate(points):
        basis = [Fraction(1)]
        denom = 1
        for j, xj in enumerate(xs):
            if j == i:
                continue
            # basis *= (k - xj)
            basis = [Fraction(0)] + basis
            for d in range(len(basis) - 1):
                basis[d] -= xj * basis[d + 1]
            denom *= xi - xj
        for d, c in enumerate(basis):
            total[d] += c * yi / denom
    coeffs = []
    for d, c in enumerate(total):
        if c.denominator != 1:
            raise ValueError(f"non-integer coefficient {c} for k^{d}")
        coeffs.append(c.numerator)
    return IntPolynomial(coeffs)


@dataclass
class PointCheck:
    k: int
    engine: int
    oracle: Optional[int]

    @property
    def status(self) -> str:
        if self.oracle is None:
            return "refused"
        return "match" if self.oracle == self.engine else "MISMATCH"


@dataclass
class ValidationReport:
    graph: SignedGraph
    zero_free: bool
    polynomial: IntPolynomial
    points: list[PointCheck] = field(default_factory=list)
    interpolation: str = "skipped"
    interpolation_note: str = ""
    interpolated: Optional[IntPolynomial] = None

    @property
    def matched(self) -> int:
        return sum(p.status == "match" for p in self.points)

    @property
    def checked(self) -> int:
        return sum(p.oracle is not None for p in self.points)

    @property
    def passed(self) -> bool:
        return all(p.status != "MISMATCH" for p in self.points) and self.interpolation != "MISMATCH"

    def format(self) -> str:
        kind = "zero-free" if self.zero_free else "chromatic"
        lines = [f"{kind} polynomial: {self.polynomial}", f"{'k':>4}  {'engine':>16}  {'brute force':>16}  status"]
        for p in self.points:
            oracle = "-" if p.oracle is None else str(p.oracle)
            lines.append(f"{p.k:>4}  {p.engine:>16}  {oracle:>16}  {p.status}")
        lines.append(f"points: {self.matched}/{self.checked} match, {len(self.points) - self.checked} refused")
        note = f" ({self.interpolation_note})" if self.interpolation_note else ""
        lines.append(f"interpolation: {self.interpolation}{note}")
        lines.append("PASS" if self.passed else "FAIL")
        return "\n".join(lines)


def cross_validate(
    g: SignedGraph, k_max: int, zero_free: bool = False, budget: int = DEFAULT_BUDGET
) -> ValidationReport:
    """Compare engine values against brute force at ``k = 0..k_max``.

    When ``k_max >= n`` and all of ``k = 0..n`` fit the budget, the counts
    are also interpolated and compared with the engine polynomial.
    """
    poly = zero_free_polynomial(g) if zero_free else chromatic_polynomial(g)
    report = ValidationReport(g, zero_free, poly)
    counts: dict[int, int] = {}
    for k in range(k_max + 1):
        try:
            counts[k] = count_proper_colorings(g, k, zero_free, budget)
        except BudgetExceeded:
            report.points.append(PointCheck(k, poly(k), None))
            continue
        report.points.append(PointCheck(k, poly(k), counts[k]))

    need = range(g.n + 1)
    if k_max < g.n:
        report.interpolation_note = f"needs k_max >= {g.n}"
    elif any(k not in counts for k in need):
        report.interpolation = "refused"
        report.interpolation_note = "over budget"
    else:
        try:
            report.interpolated = interpolate_polynomial([(k, counts[k]) for k in need])
        except ValueError as exc:
            report.interpolation = "MISMATCH"
            report.interpolation_note = str(exc)
        else:
            report.interpolation = "match" if report.interpolated == poly else "MISMATCH"
    return report
