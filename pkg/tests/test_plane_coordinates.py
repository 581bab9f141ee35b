import random

import pytest

from rect4.fields import GF, QQ, extend
from rect4.polynomials import MultiPoly
from rect4.plane_coordinates import (
    LINE,
    NOT_LINE,
    UNKNOWN_LINE,
    PlaneCoordinateError,
    complement,
    line_test,
    linear_fastpath,
    vartest,
)
from rect4.verifier import verify_plane_pair

from conftest import ZT, random_coordinate, random_poly, random_tame_steps, zt_vars


# -- linear fastpath ---------------------------------------------------------


def test_fastpath_affine_in_z():
    Z, T = zt_vars(QQ)
    status, cert = linear_fastpath(3 * Z + 5)
    assert status == "accept"
    assert cert.image_of_variable("T") == 3 * Z + 5


def test_fastpath_constant_t_coefficient():
    Z, T = zt_vars(QQ)
    f = Z * Z + 2 * T
    status, cert = linear_fastpath(f)
    assert status == "accept"
    assert cert.complement == Z
    assert cert.image_of_variable("T") == f


def test_fastpath_rejects_nonconstant_t_coefficient():
    Z, T = zt_vars(QQ)
    f = 1 + Z * T
    status, reason = linear_fastpath(f)
    assert status == "reject"
    assert not vartest(f).accepted
    # independent unit oracle: modulo (1 + ZT) the class of Z is invertible
    # (Z * (-T) = 1), so the residue ring has units outside the constants and
    # cannot be a polynomial line
    from rect4.polynomials import groebner_basis, normal_form

    basis = groebner_basis([f])
    assert normal_form(Z * (-T) - 1, basis).is_zero()


def test_fastpath_not_applicable_for_higher_t_degree():
    Z, T = zt_vars(QQ)
    assert linear_fastpath(Z + T * T) is None


# -- vartest: accepts --------------------------------------------------------


def test_vartest_composed_example():
    Z, T = zt_vars(QQ)
    f = Z + (T + Z * Z) ** 3
    r = vartest(f)
    assert r.accepted
    assert r.certificate.image_of_variable("T") == f
    assert verify_plane_pair(f, r.certificate.complement)
    # the classical complement works too
    assert verify_plane_pair(f, T + Z * Z)


def test_vartest_linear_and_simple():
    Z, T = zt_vars(QQ)
    for f in (T, Z, Z + T * T, 2 * T - 7 * Z + 1):
        r = vartest(f)
        assert r.accepted, str(f)
        assert r.certificate.image_of_variable("T") == f


# -- vartest: rejects --------------------------------------------------------


def test_vartest_rejects_cusp_like():
    Z, T = zt_vars(QQ)
    # K[Z,T]/(Z^2 - T^3) is the cusp coordinate ring, not a polynomial ring:
    # the normalization witness u = Z/T satisfies u^2 = T, u^3 = Z
    r = vartest(Z * Z - T**3)
    assert not r.accepted
    r2 = vartest(Z * Z + T**3 + 1)
    assert not r2.accepted


def test_vartest_rejects_products(rng):
    for field in (QQ, GF(5)):
        count = 0
        while count < 60:
            g = random_poly(field, ZT, rng, max_deg=2, n_terms=3)
            h = random_poly(field, ZT, rng, max_deg=2, n_terms=3)
            if g.is_constant() or h.is_constant():
                continue
            count += 1
            assert not vartest(g * h).accepted, f"{g} * {h}"


def test_vartest_rejects_constants_and_zero():
    Z, T = zt_vars(QQ)
    assert not vartest(MultiPoly.zero(QQ, ZT)).accepted
    assert not vartest(MultiPoly.constant(QQ, ZT, 5)).accepted


# -- round trips --------------------------------------------------------------


@pytest.mark.parametrize(
    "field,cap", [(QQ, 24), (GF(5), 24), (extend(QQ, [1, 0, 1], "i"), 10)], ids=str
)
def test_round_trip_random_tame(field, cap):
    rng = random.Random(416)
    for k in range(100):
        f = random_coordinate(field, rng, deg_cap=cap)
        r = vartest(f)
        assert r.accepted, f"{field}: {f} rejected: {r.reason}"
        assert r.certificate.image_of_variable("T") == f
        if cap <= 10 and k % 3:
            continue  # elimination bases over the extension dominate runtime
        assert verify_plane_pair(f, r.certificate.complement)


def test_invariance_under_units_translation_and_linear_maps(rng):
    Z, T = zt_vars(QQ)
    samples = [Z + T * T, Z * Z - T**3, Z + (T + Z * Z) ** 3, Z * T + 1]
    for f in samples:
        base = vartest(f).accepted
        for _ in range(5):
            u = QQ.from_int(rng.choice([1, -1, 2, 3]))
            c = QQ.from_int(rng.randint(-3, 3))
            steps = random_tame_steps(QQ, rng, max_len=1, max_shift_deg=1)
            lin = [s for s in steps if s.kind == "linear"]
            g = f.scale(u) + MultiPoly.constant(QQ, ZT, c)
            if lin:
                g = lin[0].apply(g)
            assert vartest(g).accepted == base, str(g)


def test_degree_monotonic_termination():
    # an accepted input of high degree exercises several reduction rounds
    Z, T = zt_vars(QQ)
    f = Z + (T + Z**2) ** 4
    r = vartest(f)
    assert r.accepted


# -- characteristic p behavior -------------------------------------------------


def test_insep_quadric_rejected_over_base_accepted_over_extension(f2s):
    Z, T = zt_vars(f2s)
    s = MultiPoly.constant(f2s, ZT, f2s.parameter())
    f = Z * Z + s * T * T + T
    r = vartest(f)
    assert not r.accepted
    assert r.accepted_over_extension
    cert = r.extension_certificate
    promoted = f.map_coefficients(cert.embedding, cert.field)
    assert cert.image_of_variable("T") == promoted
    assert verify_plane_pair(promoted, cert.complement)
    assert line_test(f) == UNKNOWN_LINE


def test_insep_quadric_accepts_over_adjoined_root(f2s):
    s0 = f2s.parameter()
    K1 = extend(f2s, [-s0, f2s.zero(), f2s.one()], "b")
    Z, T = zt_vars(K1)
    s = MultiPoly.constant(K1, ZT, K1.from_base(s0))
    f = Z * Z + s * T * T + T
    r = vartest(f)
    assert r.accepted
    assert r.certificate.extension is None
    assert line_test(f) == LINE


def test_line_test_char0():
    Z, T = zt_vars(QQ)
    assert line_test(Z + T * T) == LINE
    assert line_test(Z * Z + T**3 + 1) == NOT_LINE


def test_line_test_charp_unknown_on_plain_reject(gf5):
    Z, T = zt_vars(gf5)
    assert line_test(Z * T) == UNKNOWN_LINE


# -- complement ----------------------------------------------------------------


def test_complement_examples():
    Z, T = zt_vars(QQ)
    for f, expected in [(T, Z), (Z + T * T, T)]:
        r = vartest(f)
        g = complement(f, r.certificate)
        assert g == expected
        assert verify_plane_pair(f, g)


def test_complement_of_composed():
    Z, T = zt_vars(QQ)
    f = Z + (T + Z * Z) ** 3
    r = vartest(f)
    g = complement(f, r.certificate)
    assert verify_plane_pair(f, g)


def test_complement_rejects_stale_certificate():
    Z, T = zt_vars(QQ)
    r = vartest(Z + T * T)
    with pytest.raises(PlaneCoordinateError):
        complement(Z + T**3, r.certificate)
