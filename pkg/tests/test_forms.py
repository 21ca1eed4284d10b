import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tusi.errors import InputError, PreconditionError
from tusi.forms import (
    AffineMap,
    GeneralCubic,
    GeneralizedTusiForm,
    NormalForm,
    QuadraticTusiForm,
    ReducedForm,
    TusiForm,
    TusiGeneralForm,
    general_to_tusi_general,
    normalize,
    phi,
    phi_n,
    reduce_general,
    reduced_to_tusi,
    tusi_to_reduced,
)

coef = st.floats(min_value=-100, max_value=100, allow_nan=False)
nonzero = coef.filter(lambda v: abs(v) > 1e-3)


def test_reduce_general_examples():
    r, m = reduce_general(GeneralCubic(1, 6, 9, 2))
    assert (r.p, r.q) == (-3.0, 0.0)
    assert m == AffineMap(1.0, -2.0)

    r, m = reduce_general(GeneralCubic(1, 3, 3, 2))
    assert (r.p, r.q) == (0.0, 1.0)
    assert m.shift == -1.0

    r, _ = reduce_general(GeneralCubic(2, 0, 2, -4))
    assert (r.p, r.q) == (1.0, -2.0)


def test_general_cubic_rejects_zero_leading_and_nonfinite():
    with pytest.raises(InputError):
        GeneralCubic(0, 1, 1, 1)
    with pytest.raises(InputError):
        GeneralCubic(1, math.nan, 0, 0)
    with pytest.raises(InputError):
        ReducedForm(math.inf, 0)


def test_normalize_examples():
    nf, m = normalize(ReducedForm(4, -16))
    assert nf == NormalForm(1, -2.0)
    assert m.scale == 2.0
    nf, m = normalize(ReducedForm(-9, 27))
    assert nf == NormalForm(-1, 1.0)
    with pytest.raises(PreconditionError):
        normalize(ReducedForm(0, 1))


def test_reduced_to_tusi_examples():
    t, m = reduced_to_tusi(ReducedForm(-3, 2))
    assert t.delta == pytest.approx(1.0, abs=1e-15)
    # exact roots -2 (simple) and 1 (double) map from -1/3 and 2/3
    assert m(-1 / 3) == pytest.approx(-2.0, abs=1e-15)
    assert m(2 / 3) == pytest.approx(1.0, abs=1e-15)

    t, _ = reduced_to_tusi(ReducedForm(-1 / 3, 0))
    assert t.delta == pytest.approx(0.5, abs=1e-15)
    with pytest.raises(PreconditionError):
        reduced_to_tusi(ReducedForm(1, 0))


def test_tusi_to_reduced_roundtrip_value():
    r, m = tusi_to_reduced(TusiForm(0.5))
    assert r.p == pytest.approx(-1 / 3)
    assert r.q == pytest.approx(0.0, abs=1e-17)
    assert m(0.0) == pytest.approx(1 / 3)


def test_tusi_general_reflection():
    g = TusiGeneralForm(-3, 1)
    assert g.reflected and (g.b, g.c) == (3, -1)
    assert g.reflection.scale == -1.0
    # x^3 + 3x^2 + 1 at x equals -(g at -x)
    for x in (-3.5, -1.0, 0.25, 2.0):
        assert x**3 + 3 * x**2 + 1 == pytest.approx(-g(-x))
    with pytest.raises(InputError):
        TusiGeneralForm(0, 1)


def test_general_to_tusi_general():
    g, m = general_to_tusi_general(GeneralCubic(2, -6, 0, 2))
    assert (g.b, g.c) == (3.0, 1.0)
    assert g.delta == pytest.approx(27 / 108)
    with pytest.raises(InputError):
        general_to_tusi_general(GeneralCubic(1, 1, 1, 1))
    with pytest.raises(InputError):
        general_to_tusi_general(GeneralCubic(1, 0, 0, 1))


def test_quadratic_and_generalized_forms():
    assert QuadraticTusiForm.from_delta(2.0).c == 0.5
    with pytest.raises(InputError):
        QuadraticTusiForm(-1, 0)
    g = GeneralizedTusiForm(3, 1.0)
    assert g.coefficients == (1.0, -1.0, 0.0, pytest.approx(4 / 27))
    with pytest.raises(InputError):
        GeneralizedTusiForm(1, 0.0)
    with pytest.raises(InputError):
        GeneralizedTusiForm(2.5, 0.0)


def test_phi_values():
    assert phi(2 / 3) == pytest.approx(4 / 27, abs=1e-16)
    assert phi_n(2, 0.5) == 0.25
    assert phi_n(4, 0.75) == pytest.approx(27 / 256, abs=1e-16)
    with pytest.raises(InputError):
        phi_n(1, 0.5)


def test_affine_map_algebra():
    a, b = AffineMap(2, 1), AffineMap(-3, 0.5)
    c = a.compose(b)
    for z in (-1.0, 0.0, 2.5):
        assert c(z) == pytest.approx(a(b(z)))
        assert a.invert(a(z)) == pytest.approx(z)
    assert a.inverse().compose(a).is_identity
    with pytest.raises(InputError):
        AffineMap(0, 1)


@given(nonzero, coef, coef, coef, st.floats(min_value=-5, max_value=5))
def test_reduction_preserves_roots(a3, a2, a1, a0, y):
    """f(m(y)) is the reduced form at y, scaled by a3."""
    c = GeneralCubic(a3, a2, a1, a0)
    r, m = reduce_general(c)
    scale = 1.0 + sum(abs(v) for v in c.coefficients) * (1 + abs(m(y))) ** 3
    assert c(m(y)) == pytest.approx(a3 * r(y), abs=1e-11 * scale)


@given(
    st.floats(min_value=-50, max_value=-1e-2),
    st.floats(min_value=-50, max_value=50),
    st.floats(min_value=-2, max_value=2),
)
def test_tusi_map_preserves_roots(p, q, a):
    """r(m(a)) = (-3p)^(3/2) * t(a): the two equations share roots."""
    r = ReducedForm(p, q)
    t, m = reduced_to_tusi(r)
    k = (-3 * p) ** 1.5
    assert r(m(a)) == pytest.approx(k * t(a), abs=1e-9 * (1 + abs(q) + k))


@given(
    st.floats(min_value=-50, max_value=50).filter(lambda v: abs(v) > 1e-3),
    st.floats(min_value=-50, max_value=50),
    st.floats(min_value=-3, max_value=3),
)
def test_normalize_preserves_roots(p, q, y):
    r = ReducedForm(p, q)
    nf, m = normalize(r)
    k = abs(p) ** 1.5
    assert r(m(y)) == pytest.approx(k * nf(y), abs=1e-9 * (1 + abs(q) + k))


@given(st.floats(min_value=-10, max_value=10))
def test_tusi_reduced_inverse_pair(delta):
    r, m = tusi_to_reduced(TusiForm(delta))
    t2, m2 = reduced_to_tusi(r)
    assert t2.delta == pytest.approx(delta, abs=1e-12)
    assert m.compose(m2)(0.7) == pytest.approx(0.7)
