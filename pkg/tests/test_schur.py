"""Schur backends, the box-sum theorem, Weyl denominators, and q-products."""

import pytest

from schurbox.combinat import Partition, generating_function, partitions_in_box, symmetric_plane_partitions
from schurbox.poly import LaurentPoly, Monomial
from schurbox.schur import (
    BoxParams,
    box_det_ratio,
    dn_checks,
    gordon_product,
    macmahon_product,
    principal_specialization,
    schur_box_sum,
    schur_via_bialternant,
    schur_via_tableaux,
    weyl_denominator,
)

P = LaurentPoly
x1, x2, q = P.variable("x1"), P.variable("x2"), P.variable("q")


# -- the two Schur backends ------------------------------------------------------


def test_schur_single_box_shape():
    assert schur_via_tableaux(Partition((1,)), 2) == x1 + x2
    assert schur_via_bialternant(Partition((1,)), 2) == x1 + x2


def test_schur_hook_shape():
    expected = x1**2 * x2 + x1 * x2**2
    assert schur_via_tableaux(Partition((2, 1)), 2) == expected
    assert schur_via_bialternant(Partition((2, 1)), 2) == expected


def test_schur_too_tall_is_zero():
    assert schur_via_tableaux(Partition((1, 1, 1)), 2) == P.zero()
    assert schur_via_bialternant(Partition((1, 1, 1)), 2) == P.zero()


def test_schur_empty_shape():
    assert schur_via_bialternant(Partition(), 3) == P.one()
    assert schur_via_tableaux(Partition(), 3) == P.one()


@pytest.mark.parametrize("m,n", [(2, 2), (3, 2), (2, 3), (3, 3)])
def test_backends_agree_on_box(m, n):
    for lam in partitions_in_box(m, n):
        assert schur_via_tableaux(lam, n) == schur_via_bialternant(lam, n), lam


@pytest.mark.parametrize("n", [2, 3, 4])
def test_schur_polynomials_are_symmetric(n):
    for lam in partitions_in_box(2, n):
        s = schur_via_tableaux(lam, n)
        for i in range(1, n):
            swap = {f"x{i}": f"x{i + 1}", f"x{i + 1}": f"x{i}"}
            assert s.substitute(swap) == s, (lam, i)


# -- box sums and the determinant ratio -------------------------------------------


def test_box_sum_examples():
    assert schur_box_sum(BoxParams(1, 1)) == 1 + x1
    assert schur_box_sum(BoxParams(1, 2)) == 1 + x1 + x2 + x1 * x2
    assert schur_box_sum(BoxParams(2, 1)) == 1 + x1 + x1**2
    assert schur_box_sum(BoxParams(0, 3)) == P.one()
    assert schur_box_sum(BoxParams(3, 0)) == P.one()


def test_box_sum_backends_agree():
    box = BoxParams(2, 3)
    assert schur_box_sum(box, "tableaux") == schur_box_sum(box, "bialternant")
    with pytest.raises(ValueError):
        schur_box_sum(box, "nonsense")


def test_det_ratio_single_variable():
    for m in range(1, 5):
        expected = sum((x1**k for k in range(m + 1)), P.zero())
        assert box_det_ratio(BoxParams(m, 1)) == expected


def test_det_ratio_two_variables():
    assert box_det_ratio(BoxParams(1, 2)) == (1 + x1) * (1 + x2)


@pytest.mark.parametrize("m", [1, 2, 3])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_theorem_small_grid(m, n):
    box = BoxParams(m, n)
    assert schur_box_sum(box) == box_det_ratio(box)


# -- Weyl denominator ---------------------------------------------------------------


def test_weyl_order_one():
    assert weyl_denominator(1, "determinant") == 1 - x1
    assert weyl_denominator(1, "product") == 1 - x1


def test_weyl_order_two_expansion():
    expected = (1 - x1) * (1 - x2) * (x1 - x2) * (x1 * x2 - 1)
    assert weyl_denominator(2, "determinant") == expected


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_weyl_forms_agree(n):
    assert weyl_denominator(n, "determinant") == weyl_denominator(n, "product")


def test_weyl_rejects_bad_input():
    with pytest.raises(ValueError):
        weyl_denominator(0)
    with pytest.raises(ValueError):
        weyl_denominator(2, "plucked")


# -- D_n root structure ----------------------------------------------------------------


def test_dn_vanishes_at_one():
    d2 = weyl_denominator(2, "determinant")
    assert d2.substitute({"x1": 1}) == P.zero()


def test_dn_leading_coefficient_order_two():
    d2 = weyl_denominator(2, "determinant")
    assert d2.coefficient_of("x1", 3) == -x2 * (1 - x2)


def test_dn_checks_order_three():
    report = dn_checks(3)
    assert len(report.root_checks) == 5
    assert report.all_pass


def test_dn_checks_requires_two():
    with pytest.raises(ValueError):
        dn_checks(1)


# -- q-products --------------------------------------------------------------------------


def test_macmahon_smallest():
    assert macmahon_product(BoxParams(1, 1)) == 1 + q


def test_macmahon_matches_enumeration_gf():
    assert macmahon_product(BoxParams(1, 2)) == P.parse("1 + q + q^3 + q^4")


def test_macmahon_golden_two_by_two():
    with open("tests/data/macmahon_2_2.txt") as fh:
        golden = fh.read().strip()
    product = macmahon_product(BoxParams(2, 2))
    assert product.to_text() == golden
    assert product == generating_function(symmetric_plane_partitions(2, 2))


def test_macmahon_count_at_q_one():
    counted = macmahon_product(BoxParams(3, 3)).substitute({"q": 1}).constant_value()
    assert counted == 112


def test_products_degenerate_boxes():
    assert macmahon_product(BoxParams(0, 3)) == P.one()
    assert macmahon_product(BoxParams(3, 0)) == P.one()
    assert gordon_product(BoxParams(0, 2)) == P.one()


def test_gordon_single_variable():
    for m in range(1, 5):
        expected = sum((q**k for k in range(m + 1)), P.zero())
        assert gordon_product(BoxParams(m, 1)) == expected


def test_gordon_two_variables():
    assert gordon_product(BoxParams(1, 2)) == P.parse("1 + q + q^2 + q^3")


def test_product_coefficients_nonnegative_with_unit_constant():
    for m in range(1, 4):
        for n in range(1, 4):
            for prod in (macmahon_product(BoxParams(m, n)), gordon_product(BoxParams(m, n))):
                assert prod.coefficient(Monomial.one()) == 1
                assert all(c > 0 for _, c in prod.terms())


# -- principal specialization --------------------------------------------------------------


def test_specialization_examples():
    assert principal_specialization(x1 + x2, (3, 1)) == q**3 + q
    assert principal_specialization(P.one(), (5, 2)) == P.one()
    specialized = principal_specialization(schur_box_sum(BoxParams(1, 2)), (3, 1))
    assert specialized == P.parse("1 + q + q^3 + q^4")


@pytest.mark.parametrize("m", [1, 2, 3])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_macmahon_chain(m, n):
    gf = generating_function(symmetric_plane_partitions(n, m))
    specialized = principal_specialization(
        schur_box_sum(BoxParams(m, n)), [2 * (n - i) + 1 for i in range(1, n + 1)]
    )
    assert gf == specialized == macmahon_product(BoxParams(m, n))


@pytest.mark.parametrize("m", [1, 2, 3])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_gordon_chain(m, n):
    specialized = principal_specialization(schur_box_sum(BoxParams(m, n)), list(range(n, 0, -1)))
    assert specialized == gordon_product(BoxParams(m, n))
