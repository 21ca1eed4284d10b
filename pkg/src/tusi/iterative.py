"""Bracketed refinement and the end-to-end solver.

Three refiners work on sign-change brackets: plain bisection, Newton
safeguarded by the bracket, and the chord/circle iteration for the positive
normal form ``x^3 + x + q`` (``q < 0``) where each step intersects the chord
of the parabola ``y = x^2`` with the circle ``(x + q/2)^2 + y^2 = q^2/4``.

:func:`solve` strings the reductions, the classifiers and these refiners
together and maps every root back to the variable of the input equation.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence, Union

import numpy as np

from .classify import (
    Classification,
    Interval,
    Regime,
    classify_generalized,
    classify_quadratic,
    classify_reduced,
    classify_tusi,
    q_dominant,
)
from .closed_form import cardano_reduced
from .errors import (
    ConvergenceError,
    DerivativeVanishesError,
    InputError,
    PreconditionError,
    RegimeError,
)
from .forms import (
    IDENTITY,
    AffineMap,
    GeneralCubic,
    GeneralizedTusiForm,
    NormalForm,
    QuadraticTusiForm,
    ReducedForm,
    TusiForm,
    TusiGeneralForm,
    normalize,
    phi,
    reduce_general,
    reduced_to_tusi,
    tusi_to_reduced,
)

Func = Callable[[float], float]

DERIVATIVE_FLOOR = 1e-300


class Method(str, enum.Enum):
    AUTO = "auto"
    BISECTION = "bisection"
    NEWTON = "newton"
    CHORD = "chord"
    CARDANO = "cardano"


@dataclass(frozen=True)
class SolveOptions:
    tol: float = 1e-12
    max_iter: int = 200
    method: Method = Method.AUTO

    def __post_init__(self):
        if not (self.tol > 0.0 and math.isfinite(self.tol)):
            raise InputError(f"tol must be a positive finite number, got {self.tol!r}")
        if self.max_iter < 1:
            raise InputError(f"max_iter must be >= 1, got {self.max_iter!r}")
        object.__setattr__(self, "method", Method(self.method))


@dataclass(frozen=True)
class Bracket:
    """``[lo, hi]`` with cached ``f(lo) * f(hi) <= 0``."""

    lo: float
    hi: float
    f_lo: float
    f_hi: float

    def __post_init__(self):
        if not self.lo < self.hi:
            raise InputError(f"bracket needs lo < hi, got [{self.lo}, {self.hi}]")
        if self.f_lo * self.f_hi > 0.0:
            raise InputError(
                f"no sign change on [{self.lo}, {self.hi}]: f = {self.f_lo}, {self.f_hi}"
            )

    @classmethod
    def around(cls, f: Func, lo: float, hi: float) -> Bracket:
        return cls(lo, hi, f(lo), f(hi))

    @property
    def width(self) -> float:
        return self.hi - self.lo


def _no_float_between(lo: float, hi: float) -> bool:
    return math.nextafter(lo, math.inf) >= hi


def bisect(
    f: Func,
    b: Bracket,
    opts: SolveOptions | None = None,
    on_step: Callable[[Bracket], None] | None = None,
) -> tuple[float, int]:
    """Halve ``b`` until the midpoint is within ``opts.tol`` of the root.

    Takes at most ``ceil(log2(width / tol))`` evaluations.  Returns
    ``(root, iterations)``; an endpoint that is already a root is returned
    with zero iterations.
    """
    opts = opts or SolveOptions()
    if b.f_lo == 0.0:
        return b.lo, 0
    if b.f_hi == 0.0:
        return b.hi, 0
    lo, hi, flo, fhi = b.lo, b.hi, b.f_lo, b.f_hi
    it = 0
    while hi - lo > 2.0 * opts.tol and not _no_float_between(lo, hi):
        if it >= opts.max_iter:
            raise ConvergenceError(
                f"bisection did not reach tol={opts.tol} in {opts.max_iter} steps",
                Bracket(lo, hi, flo, fhi),
                it,
            )
        mid = lo + 0.5 * (hi - lo)
        it += 1
        fm = f(mid)
        if fm == 0.0:
            return mid, it
        if (fm < 0.0) == (flo < 0.0):
            lo, flo = mid, fm
        else:
            hi, fhi = mid, fm
        if on_step is not None:
            on_step(Bracket(lo, hi, flo, fhi))
    return lo + 0.5 * (hi - lo), it


def newton_step(f: Func, fprime: Func, x: float) -> float:
    d = fprime(x)
    if abs(d) < DERIVATIVE_FLOOR:
        raise DerivativeVanishesError(f"derivative vanishes at x={x!r}")
    return x - f(x) / d


def newton_refine(
    f: Func,
    fprime: Func,
    b: Bracket,
    opts: SolveOptions | None = None,
    on_step: Callable[[Bracket], None] | None = None,
) -> tuple[float, int]:
    """Newton iteration kept inside a shrinking sign-change bracket.

    A step that leaves the bracket, or lands where the derivative vanishes,
    is replaced by the bracket midpoint.  Convergence is declared only when
    a sign change is confirmed within ``tol`` of the returned point.
    """
    opts = opts or SolveOptions()
    tol = opts.tol
    if b.f_lo == 0.0:
        return b.lo, 0
    if b.f_hi == 0.0:
        return b.hi, 0
    lo, hi, flo, fhi = b.lo, b.hi, b.f_lo, b.f_hi

    def absorb(x, fx):
        nonlocal lo, hi, flo, fhi
        if (fx < 0.0) == (flo < 0.0):
            lo, flo = x, fx
        else:
            hi, fhi = x, fx

    x = lo + 0.5 * (hi - lo)
    for it in range(1, opts.max_iter + 1):
        fx = f(x)
        if fx == 0.0:
            return x, it
        absorb(x, fx)
        if on_step is not None:
            on_step(Bracket(lo, hi, flo, fhi))
        if hi - lo <= 2.0 * tol or _no_float_between(lo, hi):
            return lo + 0.5 * (hi - lo), it
        try:
            nxt = newton_step(f, fprime, x)
        except DerivativeVanishesError:
            nxt = math.nan
        if abs(nxt - x) <= tol:
            # Newton has settled: confirm a sign change within tol of x
            for probe in (x - tol, x + tol):
                if lo < probe < hi:
                    fp_ = f(probe)
                    if fp_ == 0.0:
                        return probe, it
                    absorb(probe, fp_)
            if hi - lo <= 2.0 * tol:
                return x, it
        if not lo < nxt < hi:
            nxt = lo + 0.5 * (hi - lo)
        x = nxt
    raise ConvergenceError(
        f"Newton did not reach tol={tol} in {opts.max_iter} steps",
        Bracket(lo, hi, flo, fhi),
        opts.max_iter,
    )


# -- chord/circle iteration --------------------------------------------------------


def chord_quadratic(A: float, B: float, q: float) -> tuple[float, float, float]:
    """Quadratic whose positive root is where the chord (A, A^2)-(B, B^2) meets the circle.

    Returns ``((A+B)^2 + 1, q - 2AB(A+B), A^2 B^2)``.
    """
    if A < 0.0 or B < 0.0:
        raise PreconditionError("chord endpoints must be nonnegative")
    if A == B:
        raise PreconditionError("chord endpoints must differ")
    if not q < 0.0:
        raise PreconditionError("chord iteration needs q < 0")
    s = A + B
    ab = A * B
    return (s * s + 1.0, q - 2.0 * ab * s, ab * ab)


def _quadratic_real_roots(a2: float, a1: float, a0: float) -> tuple[float, float]:
    disc = max(a1 * a1 - 4.0 * a2 * a0, 0.0)
    root = math.sqrt(disc)
    big = (-a1 - root) / (2.0 * a2) if a1 > 0.0 else (-a1 + root) / (2.0 * a2)
    small = a0 / (a2 * big) if big != 0.0 else 0.0
    return small, big


@dataclass(frozen=True)
class ChordState:
    """Parabola above the circle at ``A``, below at ``B``; ``C`` is the latest chord point."""

    A: float
    B: float
    q: float
    C: float = math.nan

    def side(self, x: float) -> float:
        # sign of x^4 + x^2 + q x, i.e. parabola height minus circle height for x > 0
        return x * ((x * x + 1.0) * x + self.q)

    @property
    def valid(self) -> bool:
        return self.A >= 0.0 and self.B >= 0.0 and self.side(self.A) >= 0.0 >= self.side(self.B)


def _chord_initial(q: float) -> tuple[float, float]:
    """Return ``(B, A)``: the root lies between them, below-circle end first."""
    m = -q
    if m < 2.0:
        b, a = m / 2.0, min(1.0, m)
    else:
        # r^3 < r^3 + r = -q bounds the root by the cube root of -q
        b, a = 1.0, min(m / 2.0, m ** (1.0 / 3.0))
    f = NormalForm(1, q)
    if not (f(b) < 0.0 < f(a)):
        b, a = 0.0, m
    return b, a


def khayyam_chord_solve(
    f: NormalForm,
    opts: SolveOptions | None = None,
    newton_chord: bool = False,
    on_step: Callable[[ChordState], None] | None = None,
) -> tuple[float, int]:
    """Root of ``x^3 + x + q`` (``q < 0``) by repeated chord/circle intersection.

    Each step takes the chord of ``y = x^2`` between ``B`` (parabola below
    the half-circle ``y = sqrt(-x^2 - q x)``) and ``A`` (parabola above),
    intersects it with the circle at ``C``, and moves whichever endpoint
    lies on the same side as ``C``.  With ``newton_chord`` the exact
    intersection is replaced by one Newton step on the chord quadratic from
    the midpoint.  A point that fails to land strictly inside the bracket
    is replaced by the midpoint.

    After each update the point ``tol`` further toward the other end is
    probed, which confirms the root within ``tol`` once the chord points
    have converged from one side.
    """
    opts = opts or SolveOptions()
    if f.sign != 1 or not f.q < 0.0:
        raise PreconditionError("chord iteration needs x^3 + x + q with q < 0")
    q, tol = f.q, opts.tol
    if q == -2.0:
        return 1.0, 0
    B, A = _chord_initial(q)
    state = ChordState(A, B, q)
    for it in range(1, opts.max_iter + 1):
        if A - B <= 2.0 * tol or _no_float_between(B, A):
            return B + 0.5 * (A - B), it - 1
        a2, a1, a0 = chord_quadratic(A, B, q)
        if newton_chord:
            mid = 0.5 * (A + B)
            dq = 2.0 * a2 * mid + a1
            C = mid - ((a2 * mid + a1) * mid + a0) / dq if dq != 0.0 else math.nan
            if not B < C < A:
                newton_chord_fallback = True
            else:
                newton_chord_fallback = False
        else:
            newton_chord_fallback = True
        if newton_chord_fallback:
            inside = [x for x in _quadratic_real_roots(a2, a1, a0) if B < x < A]
            if len(inside) == 2:
                inside.sort(key=lambda x: abs(f(x)))
            C = inside[0] if inside else B + 0.5 * (A - B)
        gC = state.side(C)
        if gC == 0.0:
            return C, it
        if gC > 0.0:
            A = C
            probe = C - tol
            if probe > B and state.side(probe) <= 0.0:
                B = probe
        else:
            B = C
            probe = C + tol
            if probe < A and state.side(probe) >= 0.0:
                A = probe
        state = ChordState(A, B, q, C)
        if on_step is not None:
            on_step(state)
    if A - B <= 2.0 * tol:
        return B + 0.5 * (A - B), opts.max_iter
    raise ConvergenceError(
        f"chord iteration did not reach tol={tol} in {opts.max_iter} steps",
        Bracket(B, A, f(B), f(A)),
        opts.max_iter,
    )


# -- orchestration ---------------------------------------------------------------


@dataclass(frozen=True)
class PipelineStep:
    """One form in the reduction chain; ``map`` sends its variable to the previous step's."""

    form: object
    map: AffineMap = IDENTITY

    def to_dict(self) -> dict:
        params = {k: v for k, v in vars(self.form).items()}
        return {"form": type(self.form).__name__, "params": params, "map": self.map.to_dict()}


@dataclass(frozen=True)
class RootEstimate:
    value: float
    residual: float
    multiplicity: int
    interval: Interval
    method: str
    iterations: int
    error: Optional[str] = None

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "residual": self.residual,
            "multiplicity": self.multiplicity,
            "interval": self.interval.to_dict(),
            "method": self.method,
            "iterations": self.iterations,
            "error": self.error,
        }


@dataclass(frozen=True)
class RootReport:
    roots: tuple[RootEstimate, ...]
    classification: Classification
    pipeline: tuple[PipelineStep, ...]
    warnings: tuple[str, ...] = ()

    @property
    def values(self) -> list[float]:
        return [r.value for r in self.roots]

    @property
    def failures(self) -> list[RootEstimate]:
        return [r for r in self.roots if r.error is not None]


@dataclass
class _Canonical:
    """A root located in the variable of the last pipeline step."""

    value: float
    interval: Interval
    multiplicity: int
    method: str
    iterations: int
    error: Optional[str] = None


@dataclass
class _Plan:
    steps: list[PipelineStep]
    roots: list[_Canonical] = field(default_factory=list)
    classification: Classification | None = None
    warnings: list[str] = field(default_factory=list)

    @property
    def total_map(self) -> AffineMap:
        m = IDENTITY
        for step in self.steps:
            m = m.compose(step.map)
        return m

    def extend(self, form, m: AffineMap) -> None:
        self.steps.append(PipelineStep(form, m))


def _root_radius(coeffs: Sequence[float]) -> float:
    """Fujiwara bound: every root satisfies ``|x| < 2 max |a_k / a_n|^(1/(n-k))``."""
    lead = coeffs[0]
    n = len(coeffs) - 1
    terms = [abs(a / lead) ** (1.0 / k) for k, a in enumerate(coeffs[1:], start=1)]
    # halve after the root: halving a subnormal constant first can underflow to 0
    terms[-1] = abs(coeffs[-1] / lead) ** (1.0 / n) * 0.5 ** (1.0 / n)
    return 2.0 * max(terms)


def _refine(f, fprime, iv: Interval, method: Method, opts: SolveOptions) -> _Canonical:
    # the classification brackets can be far wider than the root's magnitude
    b = Bracket.around(f, iv.lo, iv.hi)
    coeffs = getattr(f, "coefficients", None)
    if coeffs is not None:
        radius = _root_radius(coeffs)
        lo, hi = max(iv.lo, -radius), min(iv.hi, radius)
        if math.isfinite(radius) and lo < hi and f(lo) * f(hi) <= 0.0:
            b = Bracket.around(f, lo, hi)
    try:
        if method is Method.NEWTON:
            x, it = newton_refine(f, fprime, b, opts)
        else:
            x, it = bisect(f, b, opts)
    except ConvergenceError as exc:
        best = exc.bracket or b
        return _Canonical(0.5 * (best.lo + best.hi), iv, 1, method.value, exc.iterations, str(exc))
    return _Canonical(x, iv, 1, method.value, it)


def _bracketed_roots(form, cls: Classification, method: Method, opts: SolveOptions) -> list[_Canonical]:
    out = []
    for iv, mult in zip(cls.intervals, cls.multiplicities):
        if iv.is_exact:
            out.append(_Canonical(iv.lo, iv, mult, "exact", 0))
        else:
            root = _refine(form, form.derivative, iv, method, opts)
            root.multiplicity = mult
            out.append(root)
    return out


def _iter_method(method: Method, three_roots: bool) -> Method:
    if method in (Method.BISECTION, Method.NEWTON):
        return method
    return Method.NEWTON if three_roots else Method.BISECTION


def _solve_tusi(plan: _Plan, t: TusiForm, opts: SolveOptions, via_reduced: Optional[tuple[ReducedForm, AffineMap]]) -> None:
    """Roots in the Tusi variable; ``via_reduced`` is the reduced form the Tusi form came from."""
    cls = classify_tusi(t)
    plan.classification = cls
    method = opts.method
    if cls.boundary_snapped:
        plan.warnings.append("boundary_snapped: delta within the classification band of 0 or 1")
    if cls.regime in (Regime.DELTA_EQ_0, Regime.DELTA_EQ_1):
        if method is Method.CARDANO:
            raise RegimeError("double-root boundary: the closed form is refused, roots are exact")
        if method is Method.CHORD:
            raise RegimeError("chord iteration applies only to x^3 + x + q")
        plan.roots = _bracketed_roots(t, cls, method, opts)
        return
    if cls.regime is Regime.DELTA_IN_0_1:
        if method is Method.CARDANO:
            raise RegimeError(
                "three-real-root regime: Cardano's radicals would pass through complex "
                "numbers; use the iterative path"
            )
        if method is Method.CHORD:
            raise RegimeError("chord iteration applies only to x^3 + x + q")
        plan.roots = _bracketed_roots(t, cls, _iter_method(method, True), opts)
        return
    # single real root
    if method is Method.CHORD:
        raise RegimeError("chord iteration applies only to x^3 + x + q (p > 0)")
    if method in (Method.AUTO, Method.CARDANO):
        if via_reduced is not None:
            r, m = via_reduced
            x = cardano_reduced(r).root
            alpha = m.invert(x)
        else:
            r, m = tusi_to_reduced(t)
            alpha = m(cardano_reduced(r).root)
        plan.roots = [_Canonical(alpha, cls.intervals[0], 1, "cardano", 0)]
        return
    plan.roots = _bracketed_roots(t, cls, method, opts)


def _solve_reduced(plan: _Plan, r: ReducedForm, opts: SolveOptions) -> None:
    method = opts.method
    if r.p == 0.0:
        cls = classify_reduced(r)
        plan.classification = cls
        if method is Method.CHORD:
            raise RegimeError("chord iteration applies only to x^3 + x + q (p > 0)")
        if cls.regime is Regime.P_ZERO_TRIPLE:
            plan.roots = [_Canonical(0.0, cls.intervals[0], 3, "exact", 0)]
        elif method in (Method.AUTO, Method.CARDANO):
            plan.roots = [_Canonical(cardano_reduced(r).root, cls.intervals[0], 1, "cardano", 0)]
        else:
            plan.roots = _bracketed_roots(r, cls, method, opts)
        return

    if q_dominant(r):
        # no scaled form exists; work on the reduced form itself
        if method is Method.CHORD:
            raise InputError("chord iteration needs x^3 + x + q, which overflows for this p")
        cls = classify_reduced(r)
        plan.classification = cls
        if method in (Method.AUTO, Method.CARDANO):
            plan.roots = [_Canonical(cardano_reduced(r).root, cls.intervals[0], 1, "cardano", 0)]
        else:
            plan.roots = _bracketed_roots(r, cls, method, opts)
        return

    if r.p < 0.0:
        t, m = reduced_to_tusi(r)
        plan.extend(t, m)
        _solve_tusi(plan, t, opts, via_reduced=(r, m))
        return

    nf, m = normalize(r)
    if method in (Method.AUTO, Method.CARDANO):
        cls = classify_reduced(r)
        plan.classification = cls
        plan.roots = [_Canonical(cardano_reduced(r).root, cls.intervals[0], 1, "cardano", 0)]
        return
    plan.extend(nf, m)
    if method is Method.CHORD and nf.q > 0.0:
        nf = NormalForm(1, -nf.q)
        plan.extend(nf, AffineMap(-1.0, 0.0))
    cls = classify_reduced(nf.as_reduced())
    plan.classification = cls
    if cls.intervals[0].is_exact:
        plan.roots = [_Canonical(0.0, cls.intervals[0], 1, "exact", 0)]
    elif method is Method.CHORD:
        try:
            x, it = khayyam_chord_solve(nf, opts)
            plan.roots = [_Canonical(x, cls.intervals[0], 1, "chord", it)]
        except ConvergenceError as exc:
            best = exc.bracket
            plan.roots = [
                _Canonical(0.5 * (best.lo + best.hi), cls.intervals[0], 1, "chord", exc.iterations, str(exc))
            ]
    else:
        plan.roots = _bracketed_roots(nf, cls, method, opts)


def _solve_generalized(plan: _Plan, g: GeneralizedTusiForm, opts: SolveOptions) -> None:
    if opts.method in (Method.CARDANO, Method.CHORD):
        raise RegimeError(f"method {opts.method.value!r} does not apply to generalized Tusi forms")
    cls = classify_generalized(g)
    plan.classification = cls
    if cls.boundary_snapped:
        plan.warnings.append("boundary_snapped: delta within the classification band of 0 or 1")
    method = opts.method if opts.method is Method.NEWTON else Method.BISECTION
    plan.roots = _bracketed_roots(g, cls, method, opts)


EquationForm = Union[
    GeneralCubic,
    ReducedForm,
    NormalForm,
    TusiForm,
    TusiGeneralForm,
    GeneralizedTusiForm,
    QuadraticTusiForm,
]


def solve(form: EquationForm, opts: SolveOptions | None = None) -> RootReport:
    """All real roots of ``form``, ascending, in the variable of ``form``.

    ``auto`` picks Cardano for single-root cubics, Newton inside the
    isolation intervals for three-root cubics, and bisection inside the
    isolation intervals for generalized forms.  Boundary cases with a
    double root are returned exactly from the classification.
    """
    opts = opts or SolveOptions()
    plan = _Plan([PipelineStep(form)])

    if isinstance(form, GeneralCubic):
        r, m = reduce_general(form)
        plan.extend(r, m)
        _solve_reduced(plan, r, opts)
    elif isinstance(form, ReducedForm):
        _solve_reduced(plan, form, opts)
    elif isinstance(form, NormalForm):
        _solve_reduced(plan, form.as_reduced(), opts)
    elif isinstance(form, TusiForm):
        _solve_tusi(plan, form, opts, via_reduced=None)
    elif isinstance(form, TusiGeneralForm):
        t, m = form.to_tusi()
        plan.extend(t, form.reflection.compose(m))
        _solve_tusi(plan, t, opts, via_reduced=None)
    elif isinstance(form, GeneralizedTusiForm):
        _solve_generalized(plan, form, opts)
    elif isinstance(form, QuadraticTusiForm):
        cls = classify_quadratic(form)
        plan.classification = cls
        if opts.method is not Method.AUTO:
            plan.warnings.append(f"method {opts.method.value!r} ignored: quadratic roots are exact")
        plan.roots = [_Canonical(iv.lo, iv, m, "quadratic_formula", 0) for iv, m in zip(cls.intervals, cls.multiplicities)]
    else:
        raise InputError(f"cannot solve {type(form).__name__}")

    return _finish(form, plan)


def _finish(form, plan: _Plan) -> RootReport:
    total = plan.total_map
    given = form
    if isinstance(form, TusiGeneralForm) and form.reflected:
        # the stored coefficients are those of the reflected equation
        given = lambda x: form(-x)  # noqa: E731
    cls = plan.classification.mapped(total)
    roots = []
    for rc in plan.roots:
        x = total(rc.value)
        roots.append(
            RootEstimate(
                value=x,
                residual=abs(given(x)),
                multiplicity=rc.multiplicity,
                interval=rc.interval.mapped(total),
                method=rc.method,
                iterations=rc.iterations,
                error=rc.error,
            )
        )
    roots.sort(key=lambda r: r.value)
    return RootReport(tuple(roots), cls, tuple(plan.steps), tuple(plan.warnings))


# -- lookup table -----------------------------------------------------------------


@dataclass(frozen=True)
class LookupTable:
    """Samples of ``phi(a) = a^2 - a^3`` on [-1/3, 1] split into its monotone pieces.

    ``segment`` is 0 on [-1/3, 0] (decreasing), 1 on [0, 2/3] (increasing)
    and 2 on [2/3, 1] (decreasing); the breakpoints appear in both
    neighbouring segments.
    """

    alpha: np.ndarray
    phi: np.ndarray
    segment: np.ndarray

    @property
    def step(self) -> float:
        return float(np.max(np.diff(self.alpha[self.segment == 1])))

    def query(self, delta: float) -> tuple[float, float, float]:
        """Approximate the three roots of ``a^3 - a^2 + (4/27) delta`` for delta in [0, 1].

        Each value is a table node within one grid cell of the true root.
        """
        if not 0.0 <= delta <= 1.0:
            raise PreconditionError("table lookup covers delta in [0, 1] only")
        target = 4.0 * delta / 27.0
        out = []
        for seg in range(3):
            mask = self.segment == seg
            a = self.alpha[mask]
            v = self.phi[mask]
            if seg != 1:  # decreasing pieces: flip to ascending values
                a, v = a[::-1], v[::-1]
            k = int(np.searchsorted(v, target))
            k = min(max(k, 1), len(v) - 1)
            # pick the closer of the two nodes around the crossing
            j = k if abs(v[k] - target) <= abs(v[k - 1] - target) else k - 1
            out.append(float(a[j]))
        return tuple(sorted(out))


def lookup_table(resolution: int) -> LookupTable:
    """Table with ``resolution`` uniform nodes on [-1/3, 1] plus the breakpoints 0 and 2/3."""
    if resolution < 2:
        raise InputError("resolution must be at least 2")
    grid = np.linspace(-1.0 / 3.0, 1.0, resolution)
    grid = np.union1d(grid, [0.0, 2.0 / 3.0])
    parts = [grid[grid <= 0.0], grid[(grid >= 0.0) & (grid <= 2.0 / 3.0)], grid[grid >= 2.0 / 3.0]]
    alpha = np.concatenate(parts)
    segment = np.concatenate([np.full(len(p), i) for i, p in enumerate(parts)])
    values = np.array([phi(a) for a in alpha])
    return LookupTable(alpha, values, segment)
