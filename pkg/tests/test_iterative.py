import math

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from oracle import oracle_roots
from tusi.classify import discriminant
from tusi.closed_form import cardano_normal, cardano_reduced
from tusi.errors import ConvergenceError, DerivativeVanishesError, InputError, PreconditionError, RegimeError
from tusi.forms import GeneralCubic, GeneralizedTusiForm, NormalForm, QuadraticTusiForm, ReducedForm, TusiForm, TusiGeneralForm
from tusi.iterative import (
    Bracket,
    ChordState,
    Method,
    SolveOptions,
    bisect,
    chord_quadratic,
    khayyam_chord_solve,
    lookup_table,
    newton_refine,
    newton_step,
    solve,
)


def bisection_bound(b: Bracket, tol: float) -> int:
    return math.ceil(math.log2((b.hi - b.lo) / tol))


class TestBisect:
    def test_tusi_middle_root(self):
        f = TusiForm(0.5)
        b = Bracket.around(f, 0.0, 2 / 3)
        x, it = bisect(f, b)
        assert x == pytest.approx(1 / 3, abs=1e-12)
        assert it <= bisection_bound(b, 1e-12)

    def test_normal_form_root(self):
        f = NormalForm(1, -2)
        x, _ = bisect(f, Bracket.around(f, 0.0, 2.0))
        assert x == pytest.approx(1.0, abs=1e-12)

    def test_exact_endpoint(self):
        f = NormalForm(1, -2)
        assert bisect(f, Bracket.around(f, 1.0, 3.0)) == (1.0, 0)

    def test_convergence_error_carries_bracket(self):
        f = NormalForm(1, -2)
        with pytest.raises(ConvergenceError) as info:
            bisect(f, Bracket.around(f, 0.0, 1.7), SolveOptions(max_iter=3))
        b = info.value.bracket
        assert b.lo < 1.0 < b.hi and b.hi - b.lo == pytest.approx(1.7 / 8)
        assert info.value.iterations == 3

    def test_bracket_validation(self):
        with pytest.raises(InputError):
            Bracket(1.0, 0.0, -1.0, 1.0)
        with pytest.raises(InputError):
            Bracket(0.0, 1.0, 1.0, 1.0)

    @given(st.floats(min_value=-0.99, max_value=0.99), st.floats(min_value=1e-14, max_value=1e-3))
    def test_iteration_bound_and_bracket_preservation(self, shift, tol):
        f = lambda x: (x - shift) ** 3 + (x - shift)  # noqa: E731
        b = Bracket.around(f, -1.0, 1.0)
        steps = []
        x, it = bisect(f, b, SolveOptions(tol=tol), on_step=steps.append)
        assert all(s.f_lo * s.f_hi <= 0 for s in steps)
        assert all(s2.width < s1.width for s1, s2 in zip(steps, steps[1:]))
        assert it <= bisection_bound(b, tol) + 1
        assert abs(x - shift) <= tol + 1e-15


class TestNewton:
    def test_step_examples(self):
        f = NormalForm(1, -2)
        assert newton_step(f, f.derivative, 2.0) == pytest.approx(18 / 13)
        assert newton_step(f, f.derivative, 1.0) == 1.0
        assert newton_step(lambda x: x * x - 2, lambda x: 2 * x, 1.0) == 1.5

    def test_step_vanishing_derivative(self):
        with pytest.raises(DerivativeVanishesError):
            newton_step(lambda x: x * x - 1, lambda x: 2 * x, 0.0)

    def test_refine_stays_in_bracket(self):
        # derivative vanishes at 0 and Newton from there would leave the bracket
        f = TusiForm(0.5)
        seen = []
        x, it = newton_refine(f, f.derivative, Bracket.around(f, -1 / 3, 0.0), on_step=seen.append)
        assert x == pytest.approx(1 / 3 - 1 / math.sqrt(3), abs=1e-12)
        assert all(-1 / 3 <= s.lo < s.hi <= 0.0 and s.f_lo * s.f_hi <= 0 for s in seen)

    @given(st.floats(min_value=0.01, max_value=0.99))
    def test_refine_matches_bisection(self, delta):
        f = TusiForm(delta)
        for lo, hi in ((-1 / 3, 0.0), (0.0, 2 / 3), (2 / 3, 1.0)):
            b = Bracket.around(f, lo, hi)
            assert newton_refine(f, f.derivative, b)[0] == pytest.approx(bisect(f, b)[0], abs=2e-12)


class TestChord:
    def test_quadratic_examples(self):
        assert chord_quadratic(0.5, 1.5, -2.0) == (5.0, -5.0, 0.5625)
        a2, a1, a0 = chord_quadratic(0.0, 3.0, -2.0)
        assert (a2, a1, a0) == (10.0, -2.0, 0.0)
        assert -a1 / a2 == pytest.approx(0.2)

    @pytest.mark.parametrize("args", [(1.0, 1.0, -2.0), (-1.0, 1.0, -2.0), (0.5, 1.0, 0.0)])
    def test_quadratic_preconditions(self, args):
        with pytest.raises(PreconditionError):
            chord_quadratic(*args)

    @pytest.mark.parametrize("q", [-0.5, -1.0, -2.0, -3.0, -6.0, -100.0, -1e-6, -1e6])
    @pytest.mark.parametrize("newton_chord", [False, True])
    def test_converges_to_cardano(self, q, newton_chord):
        f = NormalForm(1, q)
        states = []
        x, it = khayyam_chord_solve(f, SolveOptions(), newton_chord, on_step=states.append)
        assert x == pytest.approx(cardano_normal(f).root, abs=1e-10 * max(1.0, abs(x)))
        assert all(s.valid for s in states)
        assert it <= 200

    def test_q_minus_half(self):
        x, _ = khayyam_chord_solve(NormalForm(1, -0.5))
        assert x == pytest.approx(0.4238537990702, abs=1e-12)
        assert x == pytest.approx(oracle_roots([1, 0, 1, -0.5]).roots[0], abs=1e-10)
        assert x > 0.25  # above -q/2 although -q < 1

    def test_chord_point_strictly_inside(self):
        prev = []

        def check(s: ChordState):
            if prev:
                p = prev[-1]
                assert min(p.A, p.B) < s.C < max(p.A, p.B)
            prev.append(s)

        for q in (-0.5, -3.0, -6.0):
            prev.clear()
            khayyam_chord_solve(NormalForm(1, q), on_step=check)

    def test_precondition(self):
        with pytest.raises(PreconditionError):
            khayyam_chord_solve(NormalForm(1, 1.0))
        with pytest.raises(PreconditionError):
            khayyam_chord_solve(NormalForm(-1, -1.0))

    @given(st.floats(min_value=-1e3, max_value=-1e-3))
    def test_agrees_with_cardano_and_bisection(self, q):
        f = NormalForm(1, q)
        x, _ = khayyam_chord_solve(f)
        y = cardano_normal(f).root
        z, _ = bisect(f, Bracket.around(f, 0.0, -q))
        assert x == pytest.approx(y, abs=1e-9) and x == pytest.approx(z, abs=1e-9)


class TestSolve:
    def test_general_cubic(self):
        rep = solve(GeneralCubic(1, 6, 9, 2))
        want = [-2 - math.sqrt(3), -2.0, -2 + math.sqrt(3)]
        assert rep.values == pytest.approx(want, abs=1e-10)
        assert all(r.residual <= 1e-10 for r in rep.roots)
        assert [r.method for r in rep.roots] == ["newton"] * 3

    def test_tusi_three_quarter(self):
        rep = solve(TusiForm(0.75))
        assert len(rep.roots) == 3
        oracle = oracle_roots(TusiForm(0.75).coefficients).roots
        for r, o in zip(rep.roots, oracle):
            assert r.interval.contains(r.value) and r.interval.contains(o)
            assert r.value == pytest.approx(o, abs=1e-11)

    def test_reduced_single_root_is_cardano(self):
        rep = solve(ReducedForm(1, -2))
        assert rep.values == [1.0]
        assert rep.roots[0].method == "cardano"

    def test_boundary_roots_are_structural(self):
        rep = solve(ReducedForm(-3, 2))
        assert rep.values == [-2.0, 1.0]
        assert [r.multiplicity for r in rep.roots] == [1, 2]
        assert {r.method for r in rep.roots} == {"exact"}

    def test_triple_root(self):
        rep = solve(GeneralCubic(1, -3, 3, -1))
        assert rep.values == [1.0] and rep.roots[0].multiplicity == 3

    def test_generalized_uses_bisection(self):
        rep = solve(GeneralizedTusiForm(4, 0.5))
        assert len(rep.roots) == 2 and {r.method for r in rep.roots} == {"bisection"}

    def test_tusi_general_in_given_variable(self):
        rep = solve(TusiGeneralForm(-3, 1))  # x^3 + 3x^2 + 1
        (r,) = rep.roots
        assert r.value**3 + 3 * r.value**2 + 1 == pytest.approx(0.0, abs=1e-11)
        assert r.residual <= 1e-11

    def test_quadratic(self):
        rep = solve(QuadraticTusiForm(3, 2))
        assert rep.values == [1.0, 2.0]

    def test_method_refusals(self):
        with pytest.raises(RegimeError):
            solve(ReducedForm(-1 / 3, 0), SolveOptions(method=Method.CARDANO))
        with pytest.raises(RegimeError):
            solve(ReducedForm(-1, 5), SolveOptions(method=Method.CHORD))
        with pytest.raises(RegimeError):
            solve(TusiForm(1.0), SolveOptions(method=Method.CARDANO))
        with pytest.raises(RegimeError):
            solve(GeneralizedTusiForm(5, 0.5), SolveOptions(method="chord"))

    def test_chord_method_reflects_positive_q(self):
        rep = solve(ReducedForm(4, 16), SolveOptions(method="chord"))
        assert rep.values == pytest.approx([-2.0], abs=1e-11)
        assert rep.roots[0].method == "chord"

    def test_failures_do_not_abandon_other_roots(self):
        rep = solve(TusiForm(0.5), SolveOptions(method="bisection", max_iter=3))
        assert len(rep.roots) == 3
        # the middle root 1/3 happens to be hit on the first midpoint
        assert len(rep.failures) == 2
        assert all(r.interval.contains(r.value) for r in rep.roots)

    def test_options_validation(self):
        with pytest.raises(InputError):
            SolveOptions(tol=0)
        with pytest.raises(InputError):
            SolveOptions(max_iter=0)
        with pytest.raises(ValueError):
            SolveOptions(method="secant")

    @given(
        st.floats(min_value=-10, max_value=10).filter(lambda v: abs(v) > 1e-2),
        st.floats(min_value=-10, max_value=10),
        st.floats(min_value=-10, max_value=10),
        st.floats(min_value=-10, max_value=10),
        st.sampled_from(["auto", "bisection", "newton"]),
    )
    @settings(max_examples=100)
    def test_report_completeness(self, a3, a2, a1, a0, method):
        c = GeneralCubic(a3, a2, a1, a0)
        rep = solve(c, SolveOptions(method=method))
        assert len(rep.roots) == rep.classification.count
        assert rep.values == sorted(rep.values)
        for r in rep.roots:
            assert r.error is None
            assert r.interval.contains(r.value) or abs(r.value - r.interval.lo) <= 1e-9 * (1 + abs(r.value))

    @given(st.floats(min_value=-1e3, max_value=1e3), st.floats(min_value=-1e3, max_value=1e3))
    @settings(max_examples=300)
    def test_cardano_and_bisection_agree(self, p, q):
        r = ReducedForm(p, q)
        if p < 0:
            assume(p < -1e-6)
            d = discriminant(r)
            assume(d.delta_tusi > 1 + 1e-9 or d.delta_tusi < -1e-9)
        assume(not (p == 0 and q == 0))
        x = cardano_reduced(r).root
        y = solve(r, SolveOptions(method="bisection")).values[0]
        assert x == pytest.approx(y, abs=1e-9 * max(1.0, abs(x)))


class TestLookup:
    def test_half(self):
        table = lookup_table(2001)
        h = table.step
        got = table.query(0.5)
        want = [1 / 3 - 1 / math.sqrt(3), 1 / 3, 1 / 3 + 1 / math.sqrt(3)]
        for g, w in zip(got, want):
            assert abs(g - w) <= h

    def test_near_one(self):
        got = lookup_table(3001).query(1 - 1e-9)
        assert got[0] == pytest.approx(-1 / 3, abs=1e-3)
        assert got[1] == pytest.approx(2 / 3, abs=1e-3) and got[2] == pytest.approx(2 / 3, abs=1e-3)

    def test_zero(self):
        assert set(lookup_table(100).query(0.0)) == {0.0, 1.0}

    def test_breakpoints_present(self):
        t = lookup_table(10)
        assert 0.0 in t.alpha and 2 / 3 in t.alpha
        assert np.all(np.diff(t.phi[t.segment == 1]) > 0)
        assert np.all(np.diff(t.phi[t.segment == 0]) < 0)

    def test_out_of_range(self):
        with pytest.raises(PreconditionError):
            lookup_table(10).query(1.5)
        with pytest.raises(InputError):
            lookup_table(1)

    @given(st.floats(min_value=0.0, max_value=1.0), st.integers(min_value=50, max_value=3000))
    def test_within_one_cell(self, delta, resolution):
        table = lookup_table(resolution)
        roots = sorted(oracle_roots(TusiForm(delta).coefficients).roots) if 1e-6 < delta < 1 - 1e-6 else None
        assume(roots is not None and len(roots) == 3)
        for g, w in zip(table.query(delta), roots):
            assert abs(g - w) <= table.step + 1e-12
