"""Dense univariate polynomials in ``k`` with exact integer coefficients.

Coefficients are stored lowest degree first and trailing zeros are stripped,
so the zero polynomial is the empty tuple.  Python integers are unbounded, so
nothing here can overflow.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Union

__all__ = [
    "IntPolynomial",
    "PolynomialParseError",
    "positive_integer_roots",
    "format_poly",
    "format_coeffs",
    "parse_poly",
]


def _normalize(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = [int(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class IntPolynomial:
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _normalize(self.coeffs))

    @classmethod
    def constant(cls, c: int) -> IntPolynomial:
        return cls((c,))

    @classmethod
    def monomial(cls, exp: int, c: int = 1) -> IntPolynomial:
        return cls((0,) * exp + (c,))

    @classmethod
    def from_terms(cls, terms: dict[int, int]) -> IntPolynomial:
        if not terms:
            return cls()
        c = [0] * (max(terms) + 1)
        for exp, val in terms.items():
            c[exp] += val
        return cls(c)

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def terms(self) -> dict[int, int]:
        return {i: c for i, c in enumerate(self.coeffs) if c}

    def __getitem__(self, exp: int) -> int:
        return self.coeffs[exp] if 0 <= exp < len(self.coeffs) else 0

    # ring operations

    def __add__(self, other: Union[IntPolynomial, int]) -> IntPolynomial:
        b = _coerce(other)
        if b is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, b.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, x in enumerate(b):
            out[i] += x
        return IntPolynomial(out)

    __radd__ = __add__

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(tuple(-x for x in self.coeffs))

    def __sub__(self, other: Union[IntPolynomial, int]) -> IntPolynomial:
        b = _coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return self + (-b)

    def __rsub__(self, other: int) -> IntPolynomial:
        return (-self) + other

    def __mul__(self, other: Union[IntPolynomial, int]) -> IntPolynomial:
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(out)

    __rmul__ = __mul__

    def scale(self, c: int) -> IntPolynomial:
        return IntPolynomial(tuple(c * x for x in self.coeffs))

    def __pow__(self, e: int) -> IntPolynomial:
        if e < 0:
            raise ValueError("negative exponent")
        result = IntPolynomial((1,))
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __call__(self, k: int) -> int:
        """Evaluate at an integer by Horner's rule."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * k + c
        return acc

    evaluate = __call__

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"IntPolynomial({format_poly(self)!r})"


def _coerce(x) -> IntPolynomial:
    if isinstance(x, IntPolynomial):
        return x
    if isinstance(x, int):
        return IntPolynomial((x,))
    return NotImplemented


def positive_integer_roots(a: IntPolynomial) -> list[int]:
    """All positive integers r with ``a(r) == 0``, in increasing order.

    Every root is bounded by the Cauchy bound ``1 + max|c_i| / |lead|``, so
    scanning ``[1, ceil(bound)]`` with exact evaluation is complete.
    """
    if a.is_zero():
        raise ValueError("every integer is a root of the zero polynomial")
    lead = abs(a.lead)
    bound = 1 + -(-max(abs(c) for c in a.coeffs[:-1] or (0,)) // lead)
    return [r for r in range(1, bound + 1) if a(r) == 0]


def format_poly(a: IntPolynomial, var: str = "k") -> str:
    """Render as e.g. ``8*k^3 - 2*k``; the zero polynomial renders as ``0``."""
    if a.is_zero():
        return "0"
    parts: list[str] = []
    for exp in range(a.degree, -1, -1):
        c = a.coeffs[exp]
        if not c:
            continue
        mag = abs(c)
        if exp == 0:
            body = str(mag)
        else:
            mono = var if exp == 1 else f"{var}^{exp}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts)


def format_coeffs(a: IntPolynomial) -> str:
    """Comma-separated coefficients, lowest degree first (``0`` for zero)."""
    return ",".join(str(c) for c in a.coeffs) or "0"


class PolynomialParseError(ValueError):
    """Malformed polynomial text; ``position`` is the 1-based character column."""

    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position} in {text!r}")
        self.text = text
        self.position = position


_COEFF_LIST = re.compile(r"\s*[+-]?\d+\s*(,\s*[+-]?\d+\s*)*,?\s*$")


def parse_poly(text: str, var: str = "k") -> IntPolynomial:
    """Parse the ``<int>*k^<exp>`` grammar or a low-to-high coefficient list.

    Coefficients and the ``*`` are optional (``k^2``, ``-k``, ``3k``), as is
    whitespace.  A bare comma-separated list of integers is read as
    coefficients, lowest degree first.
    """
    if "," in text and _COEFF_LIST.match(text):
        return IntPolynomial(int(tok) for tok in text.split(",") if tok.strip())
    return _TermParser(text, var).parse()


class _TermParser:
    def __init__(self, text: str, var: str):
        self.text = text
        self.var = var
        self.i = 0

    def fail(self, message: str):
        raise PolynomialParseError(message, self.text, self.i + 1)

    def skip_ws(self):
        while self.i < len(self.text) and self.text[self.i].isspace():
            self.i += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.i] if self.i < len(self.text) else ""

    def number(self) -> int:
        self.skip_ws()
        start = self.i
        while self.i < len(self.text) and self.text[self.i].isdigit():
            self.i += 1
        if start == self.i:
            self.fail("expected integer")
        return int(self.text[start:self.i])

    def parse(self) -> IntPolynomial:
        terms: dict[int, int] = {}
        if not self.peek():
            self.fail("empty polynomial")
        first = True
        while self.peek():
            sign = 1
            ch = self.peek()
            if ch in "+-":
                sign = -1 if ch == "-" else 1
                self.i += 1
            elif not first:
                self.fail("expected '+' or '-'")
            exp, coeff = self.term()
            terms[exp] = terms.get(exp, 0) + sign * coeff
            first = False
        return IntPolynomial.from_terms(terms)

    def term(self) -> tuple[int, int]:
        ch = self.peek()
        coeff = 1
        has_coeff = False
        if ch.isdigit():
            coeff = self.number()
            has_coeff = True
            ch = self.peek()
            if ch == "*":
                self.i += 1
                if self.peek() != self.var:
                    self.fail(f"expected '{self.var}'")
                ch = self.var
        if ch == self.var:
            self.i += 1
            if self.peek() == "^":
                self.i += 1
                return self.number(), coeff
            return 1, coeff
        if not has_coeff:
            self.fail("expected term")
        return 0, coeff
