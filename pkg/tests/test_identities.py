import pytest

from twistklein.algebra import F2, ZZ, MultiPoly, mp_reduce_mod2, parse_poly
from twistklein.identities import (
    INTEGER_MODELS, dickson_by_cramer, dickson_invariants, elliptic_identity,
    elliptic_identity_variant_probe, integer_model, reduce_and_compare, verify_invariance,
)
from twistklein.twist import named


def test_dickson_matches_cramer():
    assert dickson_invariants() == dickson_by_cramer()


def test_dickson_degrees_and_alpha():
    d = dickson_invariants()
    assert [f.degree() for f in (d.I4, d.I6, d.I7)] == [4, 6, 7]
    assert d.I4 == named("alpha").equation
    X, Y, Z = MultiPoly.gens(F2, 3)
    # I7 is the product of the seven nonzero linear forms
    prod = MultiPoly.constant(F2, 1, 3)
    for a in (0, 1):
        for b in (0, 1):
            for c in (0, 1):
                if a or b or c:
                    prod = prod * (a * X + b * Y + c * Z)
    assert d.I7 == prod


@pytest.mark.parametrize("which", ["I4", "I6", "I7"])
def test_invariance(which):
    assert verify_invariance(getattr(dickson_invariants(), which))


def test_invariance_negative():
    d = dickson_invariants()
    assert verify_invariance(d.I4 * d.I6)
    assert not verify_invariance(named("K").equation)


def test_t_product_is_additive():
    # prod_v (T + v) evaluated at T = a + b splits as the sum of the values
    d = dickson_invariants()
    F = lambda t: t ** 8 + d.I4 * t ** 4 + d.I6 * t ** 2 + d.I7 * t
    X, Y, Z = MultiPoly.gens(F2, 3)
    assert F(X + Y) == F(X) + F(Y)
    assert F(X).is_zero() and F(Y + Z).is_zero()


@pytest.mark.parametrize("name", list(INTEGER_MODELS))
def test_reduce_and_compare(name):
    assert reduce_and_compare(name)


def test_o4_and_a4_agree_mod2():
    assert mp_reduce_mod2(integer_model("O4")) == mp_reduce_mod2(integer_model("A4"))
    assert integer_model("O4") != integer_model("A4")


def test_unknown_model():
    with pytest.raises(KeyError):
        integer_model("C4")


def test_elliptic_identities_hold():
    res = elliptic_identity()
    assert [r.name for r in res] == ["weierstrass", "x_times_s1"]
    assert all(res) and all(r.diff == "" for r in res)


def test_weierstrass_numerically():
    # at (1, 1, 1): x = 4, y = 9, z = 1, K = 3, X^3Y^2 + ... = 3
    x, y, z = 4, 9, 1
    assert y * y * z - 5 * x * y * z + x ** 3 + x * x * z + 7 * x * z * z == 3 * 3


def test_variant_probe():
    p = elliptic_identity_variant_probe()
    assert (p.lhs_degree, p.rhs_degree, p.cleared_power) == (9, 8, 3)
    assert p.divisible_by_K and p.divisible_by_K_Kbar
    assert p.cofactor_is_s2_squared
    s2 = parse_poly("X*Y+Y*Z+Z*X", ZZ)
    assert parse_poly(p.cofactor_of_K_Kbar, ZZ) == s2 * s2
    assert not p.holds_as_printed
    assert p.samples[(1, 1, 1)]["ratio"] == pytest.approx(1 / 3)
    assert p.samples[(1, 2, 3)]["ratio"] == pytest.approx(121 / 216)
