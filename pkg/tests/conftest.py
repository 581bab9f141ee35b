import random

import pytest

from rect4.fields import GF, QQ, extend, rational_function_field
from rect4.polynomials import MultiPoly
from rect4.plane_coordinates import TameStep

ZT = ("Z", "T")
XZT = ("X", "Z", "T")


def zt_vars(field):
    return (
        MultiPoly.variable(field, ZT, "Z"),
        MultiPoly.variable(field, ZT, "T"),
    )


def xzt_vars(field):
    return tuple(MultiPoly.variable(field, XZT, v) for v in XZT)


def a_var(field):
    return MultiPoly.variable(field, ("X",), "X")


def _pool_element(field, rng, pool):
    c = field.from_int(rng.choice(pool))
    # over an extension or function field, mix in the generator now and then
    if hasattr(field, "generator") and rng.random() < 0.25:
        c = c + field.generator()
    elif hasattr(field, "parameter") and rng.random() < 0.25:
        c = c + field.parameter()
    return c


def random_tame_steps(field, rng, max_len=5, max_shift_deg=4, pool=(-2, -1, 0, 1, 2)):
    steps = []
    length = rng.randint(1, max_len)
    for _ in range(length):
        if rng.random() < 0.5:
            while True:
                m = [_pool_element(field, rng, pool) for _ in range(4)]
                det = m[0] * m[3] - m[1] * m[2]
                if not det.is_zero():
                    break
            v = (
                _pool_element(field, rng, pool),
                _pool_element(field, rng, pool),
            )
            steps.append(
                TameStep(
                    "linear",
                    field,
                    matrix=((m[0], m[1]), (m[2], m[3])),
                    translation=v,
                )
            )
        else:
            target = rng.choice(["Z", "T"])
            other = "T" if target == "Z" else "Z"
            deg = rng.randint(1, max_shift_deg)
            sh = MultiPoly.from_dense(
                field,
                ZT,
                other,
                [_pool_element(field, rng, pool) for _ in range(deg + 1)],
            )
            if sh.is_zero():
                continue
            steps.append(TameStep("elementary", field, target=target, shift=sh))
    return steps


def random_coordinate(field, rng, deg_cap=20, term_cap=250, **kw):
    """Image of T under a random tame automorphism, size-capped by resampling.

    Oversized intermediates abort the composition early; the returned values
    are still exactly the tame images that fit the caps."""
    while True:
        steps = random_tame_steps(field, rng, **kw)
        f = MultiPoly.variable(field, ZT, "T")
        for s in reversed(steps):
            f = s.apply(f)
            if f.total_degree() > deg_cap or len(f.terms) > term_cap:
                f = None
                break
        if f is None or f.is_constant():
            continue
        if f.total_degree() <= deg_cap and len(f.terms) <= term_cap:
            return f


def random_poly(field, vars, rng, max_deg=3, n_terms=4, pool=(-3, -2, -1, 1, 2, 3)):
    terms = {}
    for _ in range(n_terms):
        e = tuple(rng.randint(0, max_deg) for _ in vars)
        terms[e] = field.from_int(rng.choice(pool))
    p = MultiPoly.from_terms(field, vars, terms.items())
    return p


@pytest.fixture
def rng():
    return random.Random(20240901)


@pytest.fixture
def qq():
    return QQ


@pytest.fixture
def gf5():
    return GF(5)


@pytest.fixture
def f2s():
    return rational_function_field(2)


@pytest.fixture
def gaussian():
    return extend(QQ, [1, 0, 1], "i")
