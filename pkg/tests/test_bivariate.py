import random

import pytest

from rect4.fields import GF, QQ, extend, rational_function_field
from rect4.polynomials import (
    MultiPoly,
    bivariate_gcd,
    bivariate_irreducible,
    divides,
)

from conftest import random_poly, zt_vars

ZT = ("Z", "T")


def test_monomial_product_reducible():
    Z, T = zt_vars(QQ)
    res = bivariate_irreducible(Z * T, "Z", "T")
    assert res.is_reducible
    assert divides(res.witness, Z * T)


def test_cusp_plus_one_irreducible():
    # independent reasoning: as a quadratic in Z over Q(T), Z^2 + (T^3+1) is
    # irreducible because -(T^3+1) has odd degree, hence is no square.
    Z, T = zt_vars(QQ)
    res = bivariate_irreducible(Z * Z + T**3 + 1, "Z", "T")
    assert res.is_irreducible


def test_difference_of_squares_reducible():
    Z, T = zt_vars(QQ)
    res = bivariate_irreducible(Z * Z - T * T, "Z", "T")
    assert res.is_reducible
    assert res.witness.total_degree() == 1


def test_sum_of_squares_irreducible_over_q_but_not_gaussian():
    Z, T = zt_vars(QQ)
    res = bivariate_irreducible(Z * Z + T * T, "Z", "T")
    assert res.is_irreducible
    K = extend(QQ, [1, 0, 1], "i")
    ZK = MultiPoly.variable(K, ZT, "Z")
    TK = MultiPoly.variable(K, ZT, "T")
    resK = bivariate_irreducible(ZK * ZK + TK * TK, "Z", "T")
    assert resK.is_reducible
    assert divides(resK.witness, ZK * ZK + TK * TK)


def test_number_field_irreducible_case():
    K = extend(QQ, [1, 0, 1], "i")
    Z = MultiPoly.variable(K, ZT, "Z")
    T = MultiPoly.variable(K, ZT, "T")
    i = MultiPoly.constant(K, ZT, K.generator())
    f = Z * Z + T**3 + i
    res = bivariate_irreducible(f, "Z", "T")
    assert res.is_irreducible


def test_degree_bound_gives_unknown():
    Z, T = zt_vars(QQ)
    f = Z**9 + T**8 + Z * T + 1
    res = bivariate_irreducible(f, "Z", "T", bound=8)
    assert res.is_unknown


@pytest.mark.parametrize("field", [QQ, GF(5)], ids=str)
def test_products_never_reported_irreducible(field):
    # exhaustive-recombination soundness on random products of total degree
    # at most 6
    rng = random.Random(12)
    trials = 0
    while trials < 500:
        g = random_poly(field, ZT, rng, max_deg=2, n_terms=3)
        h = random_poly(field, ZT, rng, max_deg=1, n_terms=3)
        if g.is_constant() or h.is_constant():
            continue
        if g.total_degree() + h.total_degree() > 6:
            continue
        trials += 1
        res = bivariate_irreducible(g * h, "Z", "T")
        assert not res.is_irreducible, f"{g} * {h}"


def test_f2s_content_split_detected():
    F2s = rational_function_field(2)
    Z = MultiPoly.variable(F2s, ZT, "Z")
    T = MultiPoly.variable(F2s, ZT, "T")
    res = bivariate_irreducible(Z * T + Z, "Z", "T")
    assert res.is_reducible


def test_f2s_general_case_is_unknown():
    F2s = rational_function_field(2)
    Z = MultiPoly.variable(F2s, ZT, "Z")
    T = MultiPoly.variable(F2s, ZT, "T")
    s = MultiPoly.constant(F2s, ZT, F2s.parameter())
    res = bivariate_irreducible(Z * Z + s * T * T + T, "Z", "T")
    assert res.is_unknown


def test_bivariate_gcd():
    Z, T = zt_vars(QQ)
    f = (Z + T) * (Z * T + 1)
    g = (Z + T) * (Z - T + 2)
    d = bivariate_gcd(f, g, "T", "Z")
    assert divides(d, f) and divides(d, g)
    assert d.total_degree() == 1
