import math

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from oracle import oracle_roots
from tusi.classify import discriminant
from tusi.closed_form import cardano_normal, cardano_reduced, quadratic_roots, real_cbrt
from tusi.errors import PreconditionError, RegimeError
from tusi.forms import NormalForm, QuadraticTusiForm, ReducedForm


@pytest.mark.parametrize(
    "q, root",
    [(-2.0, 1.0), (0.0, 0.0), (2.0, -1.0), (-10.0, 2.0)],
)
def test_cardano_normal_exact(q, root):
    assert cardano_normal(NormalForm(1, q)).root == pytest.approx(root, abs=1e-12)


def test_cardano_normal_q_minus_six():
    r = cardano_normal(NormalForm(1, -6)).root
    assert r == pytest.approx(1.6343652930, abs=1e-9)
    assert abs(r**3 + r - 6) <= 1e-12


def test_cardano_normal_s_identity():
    # q^2/4 - s^2 = -1/27, so 3 (q^2/4 - s^2)^(1/3) + 1 = 0
    for q in (-6.0, -0.5, 3.0, 1e3):
        t = cardano_normal(NormalForm(1, q))
        assert 3 * real_cbrt(q * q / 4 - t.s**2) + 1 == pytest.approx(0.0, abs=1e-12 * (1 + q * q))


def test_cardano_normal_rejects_negative_form():
    with pytest.raises(PreconditionError):
        cardano_normal(NormalForm(-1, 1.0))


@pytest.mark.parametrize(
    "p, q, root",
    [(1, -2, 1.0), (3, -4, 1.0), (-6, -9, 3.0), (0, -8, 2.0), (0, 27, -3.0)],
)
def test_cardano_reduced_spot_cases(p, q, root):
    assert cardano_reduced(ReducedForm(p, q)).root == pytest.approx(root, abs=1e-12)


def test_cardano_reduced_trace():
    t = cardano_reduced(ReducedForm(3, -4))
    assert t.s == pytest.approx(math.sqrt(5), abs=1e-14)
    u, v = t.cube_args
    assert u == pytest.approx(2 + math.sqrt(5)) and v == pytest.approx(2 - math.sqrt(5))


@pytest.mark.parametrize("p, q", [(-1 / 3, 0.0), (-3.0, 2.0), (-3.0, -2.0)])
def test_refuses_three_root_and_boundary(p, q):
    with pytest.raises(RegimeError):
        cardano_reduced(ReducedForm(p, q))


def test_real_cbrt():
    assert real_cbrt(-27.0) == -3.0
    assert real_cbrt(8.0) == 2.0
    assert real_cbrt(0.0) == 0.0
    assert real_cbrt(2.0) ** 3 == pytest.approx(2.0, rel=1e-15)


def test_quadratic_roots():
    assert quadratic_roots(QuadraticTusiForm(3, 2)) == [1.0, 2.0]
    assert quadratic_roots(QuadraticTusiForm(2, 1)) == [1.0]
    assert quadratic_roots(QuadraticTusiForm(1, 1)) == []


def test_tiny_p_falls_back_to_reduced_variable():
    for p in (1e-300, -1e-300):
        r = ReducedForm(p, -8.0)
        assert cardano_reduced(r).root == pytest.approx(2.0, abs=1e-15)


p_values = st.one_of(
    st.just(0.0), st.floats(min_value=1e-6, max_value=1e3), st.floats(min_value=-1e3, max_value=-1e-6)
)


@given(p_values, st.floats(min_value=-1e3, max_value=1e3))
def test_single_root_regime_matches_oracle(p, q):
    r = ReducedForm(p, q)
    if p < 0:
        d = discriminant(r)
        assume(d.delta_tusi > 1 + 1e-6 or d.delta_tusi < -1e-6)
    x = cardano_reduced(r).root
    assert abs(r(x)) <= 1e-10 * (1 + abs(p) + abs(q))
    assume(p == 0 or abs(p) > 1e-3)
    nearest = min(oracle_roots(r.coefficients).roots, key=lambda v: abs(v - x))
    assert x == pytest.approx(nearest, abs=1e-9)
