import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sigchrom.poly import (
    IntPolynomial,
    PolynomialParseError,
    format_coeffs,
    format_poly,
    parse_poly,
    positive_integer_roots,
)

K = IntPolynomial((0, 1))

polys = st.lists(st.integers(-10**30, 10**30), max_size=13).map(IntPolynomial)


def test_normalization_strips_leading_zeros():
    assert IntPolynomial((1, 2, 0, 0)).coeffs == (1, 2)
    assert IntPolynomial((0, 0)).coeffs == ()
    assert IntPolynomial().degree == -1


def test_add_constant_cancels():
    assert K**2 + 1 + (-1) == K**2


def test_sub_cancels_leading_terms():
    assert 8 * K**3 - (8 * K**3 - 2 * K) == 2 * K


def test_mul_distributes():
    assert (2 * K + 1) * (2 * K) == IntPolynomial((0, 2, 4))


def test_pow():
    assert (2 * K + 1) ** 2 == IntPolynomial((1, 4, 4))
    assert (2 * K) ** 3 == 8 * K**3
    assert (2 * K + 1) ** 0 == IntPolynomial((1,))
    big = (2 * K + 1) ** 10
    assert big.degree == 10 and big.lead == 1024


def test_eval():
    assert (8 * K**3 - 2 * K)(1) == 6
    assert IntPolynomial()(7) == 0


def test_eval_p1_at_one():
    p1 = parse_poly("1024*k^10 - 2560*k^9 + 3840*k^8 - 4480*k^7 + 3712*k^6 - 1792*k^5 + 160*k^4 + 480*k^3 - 336*k^2 + 72*k")
    assert p1(1) == sum(p1.coeffs) == 120


@pytest.mark.parametrize(
    "poly, roots",
    [
        (K**2 - 4, [2]),
        (K**2 + 1, []),
        ((K - 1) * (K - 3) * (K + 5), [1, 3]),
        (IntPolynomial((7,)), []),
        (K, []),
    ],
)
def test_positive_integer_roots(poly, roots):
    assert positive_integer_roots(poly) == roots


def test_roots_of_zero_polynomial_rejected():
    with pytest.raises(ValueError, match="every integer"):
        positive_integer_roots(IntPolynomial())


def test_format():
    assert format_poly(8 * K**3 - 2 * K) == "8*k^3 - 2*k"
    assert format_poly(IntPolynomial()) == "0"
    assert format_poly(-(K**2) + K - 3) == "-k^2 + k - 3"
    assert format_coeffs(8 * K**3 - 2 * K) == "0,-2,0,8"


def test_parse_terms():
    p = parse_poly("1024*k^10 - 2560*k^9")
    assert p.terms() == {10: 1024, 9: -2560}
    assert parse_poly(" -k^2+ 3 k -  7") == -(K**2) + 3 * K - 7
    assert parse_poly("0") == IntPolynomial()


def test_parse_coefficient_list():
    assert parse_poly("0,-2,0,8") == 8 * K**3 - 2 * K


@pytest.mark.parametrize("text, position", [("k^^2", 3), ("3*", 3), ("k k", 3), ("", 1), ("2k^", 4)])
def test_parse_errors_carry_position(text, position):
    with pytest.raises(PolynomialParseError) as err:
        parse_poly(text)
    assert err.value.position == position


@settings(max_examples=200)
@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == IntPolynomial()


@given(polys, st.integers(-50, 50))
def test_eval_of_square(a, k):
    assert (a * a)(k) == a(k) ** 2


@given(polys)
def test_text_round_trips(a):
    assert parse_poly(format_poly(a)) == a
    assert parse_poly(format_coeffs(a)) == a


@settings(max_examples=200)
@given(st.lists(st.integers(-6, 6), min_size=1, max_size=4), st.integers(-3, 3).filter(bool))
def test_roots_sound_and_complete(root_list, lead):
    p = IntPolynomial((lead,))
    for r in root_list:
        p = p * IntPolynomial((-r, 1))
    expected = sorted({r for r in root_list if r > 0})
    assert positive_integer_roots(p) == expected
    # against a plain scan well past the Cauchy bound
    assert [r for r in range(1, 200) if p(r) == 0] == expected
