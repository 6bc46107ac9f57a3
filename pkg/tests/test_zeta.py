import cmath

import numpy as np
import pytest

from twistklein.group import conjugacy_classes
from twistklein.twist import twist_curve
from twistklein.zeta import (
    Z7_MINUS, Z7_PLUS, Z_2, Z_MINUS, Z_PLUS, InconsistentCountsError, LPolynomial, class_number,
    counts_from_l, eigenvalue_containment, expected_l, expected_l_for, factored_string, factorize,
    l_from_counts, printed_l_for, satisfies_functional_equation, z3, zeta_product,
)

PRODUCTS = {
    1: [1, -1, 2],
    2: [1, 0, 3, 0, 4],
    3: [1, 0, 0, 5, 0, 0, 8],
    4: [1, 0, 0, 0, -1, 0, 0, 0, 16],
    7: [1] + [0] * 6 + [13] + [0] * 6 + [128],
}


def numeric_product(m):
    """prod over complex m-th roots of unity, expanded with numpy."""
    poly = np.array([1.0 + 0j])
    for j in range(m):
        z = cmath.exp(2j * cmath.pi * j / m)
        poly = np.convolve(poly, [1, -z, 2 * z * z])
    return [round(c.real) for c in poly]


@pytest.mark.parametrize("m", sorted(PRODUCTS))
def test_products(m):
    assert zeta_product(m).to_list() == PRODUCTS[m]
    assert numeric_product(m) == PRODUCTS[m]


@pytest.mark.parametrize("m", [5, 6, 8, 12])
def test_products_against_numeric(m):
    assert zeta_product(m).to_list() == numeric_product(m)


def test_product_rejects_zero():
    with pytest.raises(ValueError):
        zeta_product(0)


def test_order7_splits():
    assert Z_PLUS * Z7_PLUS * Z7_MINUS == zeta_product(7)


def test_z3_is_quartic_factor():
    q = z3()
    assert q.to_list() == [1, 1, -1, 2, 4]
    assert Z_PLUS * q == zeta_product(3)
    assert Z_PLUS * Z_MINUS == zeta_product(2)
    assert Z_PLUS * Z_MINUS * Z_2 == zeta_product(4)


def test_l_from_counts_examples():
    assert l_from_counts(0, 14, 24) == Z_PLUS ** 3
    assert l_from_counts(7, 7, 10) == Z7_PLUS
    assert l_from_counts(0, 0, 3) == Z7_MINUS
    assert l_from_counts(4, 14, 4) == Z_PLUS * Z_MINUS ** 2
    assert l_from_counts(2, 2, 14) == Z_PLUS * Z_2


def test_l_from_counts_rejects_inconsistent():
    with pytest.raises(InconsistentCountsError):
        l_from_counts(0, 1, 0)


@pytest.mark.parametrize("counts", [(0, 14, 24), (7, 7, 10), (0, 0, 3), (3, 5, 24), (2, 2, 14), (4, 14, 4), (5, 9, 11)])
def test_counts_round_trip(counts):
    L = l_from_counts(*counts)
    assert counts_from_l(L) == counts
    assert satisfies_functional_equation(L)


def test_functional_equation_negative():
    assert not satisfies_functional_equation(LPolynomial.of(1, 1, 1, 1, 1, 1, 1))
    assert not satisfies_functional_equation(Z_PLUS)


def test_every_curve_matches_its_class():
    for c in conjugacy_classes():
        for P in c.members:
            assert l_from_counts(*twist_curve(P).counts()) == expected_l(c)


def test_order4_table_entry_differs_from_counts():
    # the tabulated (z+)^2 z- would need N2 = 14
    printed = printed_l_for(4, 1)
    assert printed == Z_PLUS ** 2 * Z_MINUS
    assert counts_from_l(printed) == (2, 14, 14)
    assert counts_from_l(expected_l_for(4, 1)) == (2, 2, 14)
    for order, trace in ((1, 1), (7, 0), (7, 1), (3, 0), (2, 1)):
        assert printed_l_for(order, trace) == expected_l_for(order, trace)


def test_no_order_five():
    with pytest.raises(ValueError):
        expected_l_for(5, 0)


def test_class_numbers():
    h = {c.id: class_number(expected_l(c)) for c in conjugacy_classes()}
    assert h == {"1": 8, "7a": 71, "7b": 1, "3": 14, "4": 4, "2": 32}


def test_factorization():
    assert factored_string(Z_PLUS * Z_MINUS ** 2) == "z+ * (z-)^2"
    assert factored_string(Z_PLUS ** 3) == "(z+)^3"
    assert factorize(Z_PLUS * z3()) == {"z+": 1, "z3": 1}
    assert factorize(LPolynomial.of(1, 2, 3)) is None


def test_eigenvalue_containment():
    assert eigenvalue_containment(Z_PLUS * Z_MINUS ** 2, 2)
    assert eigenvalue_containment(Z_PLUS ** 3, 1)
    assert not eigenvalue_containment(Z7_PLUS, 3)
    assert eigenvalue_containment(Z7_MINUS, 7)
    for c in conjugacy_classes():
        assert eigenvalue_containment(expected_l(c), c.order)


def test_polynomial_arithmetic():
    p = LPolynomial.of(1, 2, 0, 0)
    assert p.coeffs == (1, 2) and p.degree == 1
    assert str(Z_PLUS) == "1 - t + 2t^2"
    assert str(LPolynomial(())) == "0"
    assert (Z_PLUS - Z_PLUS).coeffs == ()
    assert 2 * Z_PLUS == Z_PLUS + Z_PLUS
    assert Z_PLUS(1) == 2 and Z_PLUS[5] == 0
    with pytest.raises(ArithmeticError):
        Z_PLUS.exact_div(Z_MINUS)
    with pytest.raises(ZeroDivisionError):
        Z_PLUS.divmod(LPolynomial(()))
