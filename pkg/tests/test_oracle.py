import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracle import oracle_roots

# relative width of the band around Delta = 0 left out of the sign check
DELTA_BAND = 1e-6


def test_three_roots():
    res = oracle_roots([1, -1, 0, 2 / 27])
    want = [1 / 3 - 1 / math.sqrt(3), 1 / 3, 1 / 3 + 1 / math.sqrt(3)]
    assert res.roots == pytest.approx(want, abs=1e-11)
    assert res.multiplicities == (1, 1, 1)


def test_double_root():
    res = oracle_roots([1, 0, -3, 2])
    assert res.roots == pytest.approx([-2.0, 1.0], abs=1e-7)
    assert res.multiplicities == (1, 2)


def test_quadratic():
    res = oracle_roots([1, -1, 0])
    assert res.roots == pytest.approx([0.0, 1.0], abs=1e-12)
    assert res.search_bound == 2.0


def test_triple_root_and_no_roots():
    res = oracle_roots([1, -3, 3, -1])
    assert res.roots == pytest.approx([1.0], abs=1e-4) and res.multiplicities == (3,)
    assert oracle_roots([1, 0, 1]).count == 0


def test_higher_degree():
    # (x^2 - 1)(x - 2)^2 (x + 3)
    c = np.polymul(np.polymul([1, 0, -1], [1, -4, 4]), [1, 3])
    res = oracle_roots(c)
    assert res.roots == pytest.approx([-3, -1, 1, 2], abs=1e-6)
    assert res.multiplicities == (1, 1, 1, 2)


def test_deterministic():
    c = [2.5, -1.25, -7.0, 3.0]
    assert oracle_roots(c) == oracle_roots(c)


def test_rejects_bad_input():
    with pytest.raises(ValueError):
        oracle_roots([1] * 14)
    with pytest.raises(ValueError):
        oracle_roots([0, 1, 1])
    with pytest.raises(ValueError):
        oracle_roots([1, math.nan, 0])


@given(st.lists(st.floats(min_value=-1e3, max_value=1e3), min_size=3, max_size=6).filter(lambda c: abs(c[0]) > 1e-2))
def test_result_invariants(coeffs):
    res = oracle_roots(coeffs)
    thr = 1e-9 * (1 + max(abs(a) for a in coeffs))
    assert list(res.roots) == sorted(res.roots)
    assert sum(res.multiplicities) <= len(coeffs) - 1
    assert all(b - a > 10 * 1e-12 for a, b in zip(res.roots, res.roots[1:]))
    for x in res.roots:
        assert abs(np.polyval(coeffs, x)) <= max(thr, 1e-9 * np.polyval(np.abs(coeffs), abs(x)))


def test_count_matches_discriminant_sign():
    rng = np.random.default_rng(20261016)
    ps = rng.uniform(-1e3, 1e3, 10_000)
    qs = rng.uniform(-1e3, 1e3, 10_000)
    checked = 0
    for p, q in zip(ps, qs):
        big = q * q / 4 + abs(p) ** 3 / 27
        delta = -(q * q / 4 + p**3 / 27)
        if abs(delta) <= DELTA_BAND * big:
            continue
        checked += 1
        want = 3 if delta > 0 else 1
        assert oracle_roots([1.0, 0.0, p, q]).count == want, (p, q)
    assert checked > 9_900
