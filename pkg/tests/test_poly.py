"""Ring axioms, exact division, determinants, and the canonical text format."""

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from schurbox.poly import (
    LaurentPoly,
    Monomial,
    NotDivisibleError,
    OrderTooLargeError,
    PolyMatrix,
    determinant,
    exact_div,
    inversion_count,
    parse_poly,
)

P = LaurentPoly
x1, x2, x3, q = P.variable("x1"), P.variable("x2"), P.variable("x3"), P.variable("q")

variables = st.sampled_from(["q", "t1", "x1", "x2", "x3"])
monomials = st.dictionaries(variables, st.integers(-3, 3), max_size=3).map(Monomial)
polys = st.dictionaries(monomials, st.integers(-9, 9), max_size=8).map(LaurentPoly)
small_polys = st.dictionaries(monomials, st.integers(-4, 4), max_size=4).map(LaurentPoly)


# -- construction and canonical form ------------------------------------------


def test_zero_coefficients_not_stored():
    assert len(P([(Monomial({"q": 1}), 2), (Monomial({"q": 1}), -2)])) == 0
    assert P.constant(0) == P.zero()


def test_zero_exponents_not_stored():
    assert Monomial({"x1": 0, "x2": 3}) == Monomial({"x2": 3})
    assert Monomial.variable("q", 0) == Monomial.one()


def test_unknown_variable_rejected():
    with pytest.raises(ValueError):
        Monomial.variable("y1")
    with pytest.raises(ValueError):
        Monomial.variable("x0")


# -- arithmetic examples -------------------------------------------------------


def test_difference_of_squares():
    assert (1 + x1) * (1 - x1) == 1 - x1**2


def test_additive_identity():
    p = 3 * x1 * q - 2
    assert p + P.zero() == p


def test_laurent_exponent_cancellation():
    assert P.variable("x1") * P.variable("x2", -1) * x2 == x1


@given(polys, polys)
def test_addition_commutes(a, b):
    assert a + b == b + a


@given(polys, polys)
def test_multiplication_commutes(a, b):
    assert a * b == b * a


@given(small_polys, small_polys, small_polys)
def test_associativity_and_distributivity(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


# -- substitution --------------------------------------------------------------


def test_substitute_monomial_targets():
    assert (x1 * x2).substitute({"x1": Monomial.variable("q", 3), "x2": "q"}) == q**4


def test_substitute_laurent_passthrough():
    assert (x1 + P.variable("x1", -1)).substitute({"x1": "q"}) == q + P.variable("q", -1)


def test_substitute_direct():
    m = 2
    assert (1 - x1 ** (m + 1)).substitute({"x1": "q"}) == 1 - q**3


def test_substitute_zero_and_one():
    p = 1 + x1 + x1 * x2
    assert p.substitute({"x1": 0}) == P.one()
    assert p.substitute({"x1": 1}) == 2 + x2
    with pytest.raises(ZeroDivisionError):
        P.variable("x1", -1).substitute({"x1": 0})


assignments = st.dictionaries(
    variables,
    st.tuples(variables, st.integers(-2, 2)).map(lambda t: Monomial.variable(*t)),
    max_size=3,
)


@given(small_polys, small_polys, assignments)
def test_substitute_is_ring_homomorphism(a, b, sub):
    assert (a * b).substitute(sub) == a.substitute(sub) * b.substitute(sub)
    assert (a + b).substitute(sub) == a.substitute(sub) + b.substitute(sub)


def test_coefficient_of():
    p = x1**2 * x2 - 3 * x1**2 + x2
    assert p.coefficient_of("x1", 2) == x2 - 3
    assert p.coefficient_of("x1", 0) == x2


# -- exact division ------------------------------------------------------------


def test_exact_div_geometric_factor():
    assert exact_div(1 - q**2, 1 - q) == 1 + q


def test_exact_div_rechecked_by_multiplication():
    num = x1**3 * x2 - x1 * x2**3
    den = x1 - x2
    quo = exact_div(num, den)
    assert quo == x1**2 * x2 + x1 * x2**2
    assert quo * den == num


def test_exact_div_not_divisible():
    with pytest.raises(NotDivisibleError):
        exact_div(1 + q - q**3, 1 - q)


def test_exact_div_by_zero():
    with pytest.raises(ZeroDivisionError):
        exact_div(x1, P.zero())


def test_exact_div_laurent_quotient():
    # quotients may carry negative exponents
    assert exact_div(P.one(), x1) == P.variable("x1", -1)
    assert exact_div(x1**2, x1**3) == P.variable("x1", -1)


@given(polys, polys)
def test_exact_div_round_trip(a, b):
    if b.is_zero():
        return
    assert exact_div(a * b, b) == a


# -- determinants ---------------------------------------------------------------


def test_determinant_order_one():
    a = 1 - q + x1
    assert determinant(PolyMatrix.from_rows([[a]])) == a


def test_determinant_vandermonde_2x2():
    assert determinant(PolyMatrix.from_rows([[1, x1], [1, x2]])) == x2 - x1


def test_determinant_row_swap_negates():
    rows = [[x1, 1 - q, x2], [x3, x1 * x2, 1], [2, x2, q]]
    swapped = [rows[1], rows[0], rows[2]]
    assert determinant(PolyMatrix.from_rows(swapped)) == -determinant(
        PolyMatrix.from_rows(rows)
    )


def test_determinant_order_bound():
    big = [[P.one()] * 9 for _ in range(9)]
    with pytest.raises(OrderTooLargeError):
        determinant(PolyMatrix.from_rows(big))
    small = [[x1, 1, q], [0, x2, 1], [1, 0, x3]]
    with pytest.raises(OrderTooLargeError):
        determinant(PolyMatrix.from_rows(small), max_order=2)
    assert determinant(PolyMatrix.from_rows(small), max_order=3) == determinant(
        PolyMatrix.from_rows(small)
    )


def test_matrix_must_be_square():
    with pytest.raises(ValueError):
        PolyMatrix.from_rows([[x1, x2]])


matrix_rows = st.lists(st.lists(small_polys, min_size=3, max_size=3), min_size=3, max_size=3)


@given(matrix_rows, st.integers(0, 2), st.integers(0, 2))
@settings(max_examples=40)
def test_determinant_alternates_and_is_row_linear(rows, r1, r2):
    base = determinant(PolyMatrix.from_rows(rows))
    if r1 != r2:
        swapped = list(rows)
        swapped[r1], swapped[r2] = swapped[r2], swapped[r1]
        assert determinant(PolyMatrix.from_rows(swapped)) == -base
    # linearity in row r1: replace the row by a sum
    extra = [x1 - q, P.constant(2), x2 * x3]
    summed = list(rows)
    summed[r1] = [a + b for a, b in zip(rows[r1], extra)]
    other = list(rows)
    other[r1] = extra
    assert determinant(PolyMatrix.from_rows(summed)) == base + determinant(
        PolyMatrix.from_rows(other)
    )


def test_inversion_count():
    assert inversion_count((1, 2, 3)) == 0
    assert inversion_count((3, 2, 1)) == 3
    assert inversion_count((2, 1, 3)) == 1


# -- canonical text format ------------------------------------------------------


@pytest.mark.parametrize(
    "poly, text",
    [
        (P.zero(), "0"),
        (P.one(), "1"),
        (P.constant(-7), "-7"),
        (1 - q**2, "1 - q^2"),
        (1 + q + q**3 + q**4, "1 + q + q^3 + q^4"),
        (P.variable("q", -1) + q, "q^-1 + q"),
        (2 * x1 * q - 3 * P.variable("t2", -1), "-3*t2^-1 + 2*q*x1"),
    ],
)
def test_canonical_text(poly, text):
    assert poly.to_text() == text
    assert parse_poly(text) == poly


def test_parse_rejects_junk():
    with pytest.raises(ValueError):
        parse_poly("1 + y2")
    with pytest.raises(ValueError):
        parse_poly("")
    with pytest.raises(ValueError):
        parse_poly("q^")


@given(polys)
def test_text_round_trip(p):
    assert parse_poly(p.to_text()) == p
