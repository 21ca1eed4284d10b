"""Root counts, multiplicities and isolation intervals for the canonical forms.

Each classifier reports the case it matched as a :class:`Regime`
tag.  Intervals that are unbounded in the underlying case analysis are
replaced by finite brackets (see :func:`bound_tightening`), so everything
downstream works with finite numbers.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

from .errors import InputError, PreconditionError
from .forms import (
    AffineMap,
    GeneralCubic,
    GeneralizedTusiForm,
    NormalForm,
    QuadraticTusiForm,
    ReducedForm,
    TusiForm,
    TusiGeneralForm,
    normalize,
    reduce_general,
    reduced_to_tusi,
)

EPS_CLASS = 1e-12

# phi_n* switches from the exact integer ratio to a log-space formula above
# this degree; the integers stop being cheap long before floats overflow.
_PEAK_DIRECT_MAX_N = 30


class Kind(str, enum.Enum):
    OPEN = "open"  # (lo, hi)
    HALF_OPEN = "half_open"  # [lo, hi)
    EXACT_POINT = "exact_point"  # lo == hi is the root


class Regime(str, enum.Enum):
    # Tusi form a^3 - a^2 + (4/27) delta, and its scaled and reduced relatives
    DELTA_GT_1 = "delta_gt_1"
    DELTA_EQ_1 = "delta_eq_1"
    DELTA_IN_0_1 = "delta_in_0_1"
    DELTA_EQ_0 = "delta_eq_0"
    DELTA_LT_0 = "delta_lt_0"
    # reduced forms outside the Tusi route
    P_POSITIVE_SINGLE = "p_positive_single"
    P_ZERO_SINGLE = "p_zero_single"
    P_ZERO_TRIPLE = "p_zero_triple"
    # quadratic Tusi form
    QUAD_NONE = "delta_gt_1_no_real_roots"
    QUAD_DOUBLE = "delta_eq_1_double"
    QUAD_TWO = "delta_lt_1_two"
    # generalized Tusi form, phi_n(a) = delta phi_n*
    N_ODD_DELTA_LT_0 = "n_odd_delta_lt_0"
    N_EVEN_DELTA_LT_0 = "n_even_delta_lt_0"
    N_ANY_DELTA_EQ_0 = "delta_eq_0"
    N_ODD_DELTA_IN_0_1 = "n_odd_delta_in_0_1"
    N_EVEN_DELTA_IN_0_1 = "n_even_delta_in_0_1"
    N_ODD_DELTA_EQ_1 = "n_odd_delta_eq_1"
    N_EVEN_DELTA_EQ_1 = "n_even_delta_eq_1"
    N_ODD_DELTA_GT_1 = "n_odd_delta_gt_1"
    N_EVEN_DELTA_GT_1 = "n_even_delta_gt_1"


class Tail(str, enum.Enum):
    LEFT = "left"
    RIGHT = "right"


class Interval(NamedTuple):
    lo: float
    hi: float
    kind: Kind = Kind.OPEN

    @property
    def is_exact(self) -> bool:
        return self.kind is Kind.EXACT_POINT

    def contains(self, x: float) -> bool:
        if self.kind is Kind.EXACT_POINT:
            return x == self.lo
        if self.kind is Kind.HALF_OPEN:
            return self.lo <= x < self.hi
        return self.lo < x < self.hi

    def mapped(self, m: AffineMap) -> Interval:
        lo, hi = m.map_interval(self.lo, self.hi)
        if self.kind is Kind.HALF_OPEN and m.scale < 0:
            # [lo, hi) reflected becomes (lo', hi']; widen to keep the
            # [lo, hi) convention without losing the closed endpoint
            hi = math.nextafter(hi, math.inf)
        return Interval(lo, hi, self.kind)

    def to_dict(self) -> dict:
        return {"lo": self.lo, "hi": self.hi, "kind": self.kind.value}


def exact(x: float) -> Interval:
    return Interval(x, x, Kind.EXACT_POINT)


@dataclass(frozen=True)
class Classification:
    count: int
    intervals: tuple[Interval, ...]
    multiplicities: tuple[int, ...]
    regime: Regime
    boundary_snapped: bool = False

    def __post_init__(self):
        if self.count != len(self.intervals) or self.count != len(self.multiplicities):
            raise ValueError("count, intervals and multiplicities must agree")
        # pairwise disjoint, ascending
        for a, b in zip(self.intervals, self.intervals[1:]):
            if not (a.hi <= b.lo and (a.hi < b.lo or not (a.is_exact and b.is_exact))):
                raise ValueError(f"isolation intervals overlap: {a} and {b}")

    def mapped(self, m: AffineMap) -> Classification:
        return _build(
            [(iv.mapped(m), mult) for iv, mult in zip(self.intervals, self.multiplicities)],
            self.regime,
            self.boundary_snapped,
        )

    def to_dict(self) -> dict:
        return {
            "count": self.count,
            "regime": self.regime.value,
            "boundary_snapped": self.boundary_snapped,
            "intervals": [iv.to_dict() for iv in self.intervals],
            "multiplicities": list(self.multiplicities),
        }


def _build(items: Sequence[tuple[Interval, int]], regime: Regime, snapped: bool) -> Classification:
    items = sorted(items, key=lambda it: (it[0].lo, it[0].hi))
    return Classification(
        count=len(items),
        intervals=tuple(iv for iv, _ in items),
        multiplicities=tuple(m for _, m in items),
        regime=regime,
        boundary_snapped=snapped,
    )


def _snap(value: float, target: float) -> bool:
    return abs(value - target) <= EPS_CLASS * (1.0 + abs(value))


def _tusi_case(delta: float) -> tuple[str, bool]:
    """Return (case, snapped) with case one of 'gt1', 'eq1', 'in01', 'eq0', 'lt0'.

    Every value inside the band is flagged, an exact hit included.
    """
    if _snap(delta, 1.0):
        return "eq1", True
    if _snap(delta, 0.0):
        return "eq0", True
    if delta > 1.0:
        return "gt1", False
    if delta > 0.0:
        return "in01", False
    return "lt0", False


# -- maximizer and the factorization polynomials --------------------------------


def maximizer(n: int) -> tuple[float, float]:
    """``((n-1)/n, (n-1)^(n-1) / n^n)``: peak location and value of ``phi_n`` on [0, inf)."""
    if n < 2:
        raise InputError(f"maximizer needs n >= 2, got {n}")
    alpha_star = (n - 1) / n
    if n <= _PEAK_DIRECT_MAX_N:
        peak = (n - 1) ** (n - 1) / n**n  # exact integers, one rounding
    else:
        peak = math.exp((n - 1) * math.log1p(-1.0 / n) - math.log(n))
    return alpha_star, peak


def u_coefficients(n: int) -> list[float]:
    """Coefficients (highest first) of the cofactor in
    ``a^(n-1) - a^n - phi_n* = (a_n* - a) U_n(a)``."""
    if n < 2:
        raise InputError(f"n >= 2 required, got {n}")
    out = [1.0]
    for i in range(2, n + 1):
        out.append(-((n - 1) ** (i - 2)) / n ** (i - 1))
    return out


def v_coefficients(n: int) -> list[float]:
    """Coefficients (highest first) of ``V_n`` with ``U_n(a) = (a - a_n*) V_n(a)``.

    The k-th coefficient is ``(n-1)^(k-1) (n-1-k) / n^k``.  For n = 2 the
    polynomial is the constant 1.
    """
    if n < 2:
        raise InputError(f"n >= 2 required, got {n}")
    out = []
    for k in range(n - 1):
        out.append((n - 1 - k) * (n - 1) ** k / ((n - 1) * n**k))
    return out


# -- bound tightening -----------------------------------------------------------


def _verified(f, lo: float, hi: float, kind: Kind, grow_left: bool) -> Interval:
    """Return ``[lo, hi]`` once a sign change is confirmed, widening the unbounded side."""
    for _ in range(64):
        if f(lo) * f(hi) <= 0.0:
            return Interval(lo, hi, kind)
        width = hi - lo
        if grow_left:
            lo -= width
        else:
            hi += width
    raise ArithmeticError(f"could not bracket root near [{lo}, {hi}]")


def bound_tightening(form, tail: Tail | str) -> Interval:
    """Finite, sign-verified bracket for a root whose classification interval is unbounded.

    Supported inputs:

    * ``TusiForm`` with delta > 1 (``tail='left'``) or delta < 0 (``'right'``);
      uses ``|root| < 1 + |4 delta / 27|``.
    * ``TusiGeneralForm``: the Tusi bracket scaled by ``b``.
    * ``GeneralizedTusiForm`` for delta < 0 (either tail when n is even) and
      delta > 1 with n odd (``'left'``); uses ``|root| < 1 + |delta| phi_n*``.
    * ``NormalForm(+1, q)``: the single root lies in ``(0, -q)`` when q < 0
      and in ``(-q, 0)`` when q > 0; ``tail`` is ignored.
    * ``NormalForm(-1, q')`` with q' > 0: ``'left'`` gives ``[L, 0)`` for the
      negative root, ``L = min(-sqrt 2, -(2 q')^(1/3))``, and ``'right'``
      gives ``(0, 1)`` for the positive roots.  q' < 0 is handled by reflection.
    """
    tail = Tail(tail)
    if isinstance(form, TusiForm):
        c = abs(form.constant)
        if tail is Tail.LEFT:
            if not form.delta > 1.0:
                raise PreconditionError("left tail of a Tusi form needs delta > 1")
            return _verified(form, -(1.0 + c), -1.0 / 3.0, Kind.OPEN, True)
        if not form.delta < 0.0:
            raise PreconditionError("right tail of a Tusi form needs delta < 0")
        return _verified(form, 1.0, 1.0 + c, Kind.OPEN, False)

    if isinstance(form, TusiGeneralForm):
        t, m = form.to_tusi()
        return bound_tightening(t, tail).mapped(m)

    if isinstance(form, GeneralizedTusiForm):
        c = abs(form.constant)
        odd = form.n % 2 == 1
        if tail is Tail.RIGHT:
            if not form.delta < 0.0:
                raise PreconditionError("right tail of a generalized form needs delta < 0")
            return _verified(form, 1.0, 1.0 + c, Kind.OPEN, False)
        if odd and form.delta > 1.0:
            alpha_star = (form.n - 1) / form.n
            # phi_n(-a_n*) = (2n - 1) phi_n*, so the root passes -a_n* only beyond that
            hi = -alpha_star if form.delta > 2 * form.n - 1 else 0.0
            return _verified(form, -(1.0 + c), hi, Kind.OPEN, True)
        if not odd and form.delta < 0.0:
            return _verified(form, -(1.0 + c), 0.0, Kind.OPEN, True)
        raise PreconditionError("generalized form has no unbounded root in this regime")

    if isinstance(form, NormalForm):
        if form.sign == 1:
            if form.q < 0.0:
                return _verified(form, 0.0, -form.q, Kind.OPEN, False)
            if form.q > 0.0:
                return _verified(form, -form.q, 0.0, Kind.OPEN, True)
            return exact(0.0)
        if form.q < 0.0:
            flipped = bound_tightening(
                NormalForm(-1, -form.q), Tail.RIGHT if tail is Tail.LEFT else Tail.LEFT
            )
            return flipped.mapped(AffineMap(-1.0, 0.0))
        if tail is Tail.RIGHT:
            return Interval(0.0, 1.0, Kind.OPEN)
        lower = min(-math.sqrt(2.0), -((2.0 * form.q) ** (1.0 / 3.0)))
        return _verified(form, lower, 0.0, Kind.HALF_OPEN, True)

    raise InputError(f"bound_tightening does not handle {type(form).__name__}")


# -- classifiers ----------------------------------------------------------------


def classify_tusi(t: TusiForm) -> Classification:
    """Five-way case split of ``a^3 - a^2 + (4/27) delta = 0`` on delta."""
    case, snapped = _tusi_case(t.delta)
    third = 1.0 / 3.0
    two_thirds = 2.0 / 3.0
    if case == "gt1":
        items = [(bound_tightening(t, Tail.LEFT), 1)]
        regime = Regime.DELTA_GT_1
    elif case == "eq1":
        items = [(exact(-third), 1), (exact(two_thirds), 2)]
        regime = Regime.DELTA_EQ_1
    elif case == "in01":
        items = [
            (Interval(-third, 0.0), 1),
            (Interval(0.0, two_thirds), 1),
            (Interval(two_thirds, 1.0), 1),
        ]
        regime = Regime.DELTA_IN_0_1
    elif case == "eq0":
        items = [(exact(0.0), 2), (exact(1.0), 1)]
        regime = Regime.DELTA_EQ_0
    else:
        items = [(bound_tightening(t, Tail.RIGHT), 1)]
        regime = Regime.DELTA_LT_0
    return _build(items, regime, snapped)


def classify_tusi_general(g: TusiGeneralForm) -> Classification:
    """``x^3 - b x^2 + c``: the Tusi classification scaled by ``b``.

    Comparing ``c`` with ``4 b^3 / 27`` is the same as comparing
    ``delta = 27 c / (4 b^3)`` with 1, which is how the boundary band is applied.
    """
    t, m = g.to_tusi()
    return classify_tusi(t).mapped(m)


@dataclass(frozen=True)
class Discriminant:
    """``Delta = -(q^2/4 + p^3/27)`` and, when ``p < 0``, the Tusi ``delta``.

    For ``p < 0`` the two are tied by ``Delta = (4 |p|^3 / 27) delta (1 - delta)``,
    so ``0 < delta < 1`` exactly when ``Delta > 0``; this is checked on
    construction outside the boundary band.
    """

    delta_cap: float
    delta_tusi: float | None = None
    boundary_snapped: bool = field(default=False)

    def __post_init__(self):
        if self.delta_tusi is None:
            return
        case, _ = _tusi_case(self.delta_tusi)
        if case in ("eq0", "eq1"):
            return
        if (case == "in01") != (self.delta_cap > 0.0):
            raise ArithmeticError(
                f"discriminant {self.delta_cap!r} disagrees with delta {self.delta_tusi!r}"
            )

    @property
    def three_distinct_real(self) -> bool:
        if self.delta_tusi is not None:
            return _tusi_case(self.delta_tusi)[0] == "in01"
        return False

    @property
    def on_boundary(self) -> bool:
        if self.delta_tusi is not None:
            return _tusi_case(self.delta_tusi)[0] in ("eq0", "eq1")
        return self.delta_cap == 0.0

    def to_dict(self) -> dict:
        return {
            "Delta": self.delta_cap,
            "delta": self.delta_tusi,
            "boundary_snapped": self.boundary_snapped,
        }


def discriminant(r: ReducedForm) -> Discriminant:
    cap = -(r.q * r.q / 4.0 + r.p**3 / 27.0)
    if r.p < 0.0:
        t, _ = reduced_to_tusi(r)
        case, snapped = _tusi_case(t.delta)
        if case in ("eq0", "eq1"):
            cap = 0.0
        elif (case == "in01") != (cap > 0.0):
            # the direct difference cancelled; the product form keeps the sign
            m = -r.p
            cap = 4.0 * m * m * m / 27.0 * t.delta * (1.0 - t.delta)
            if cap == 0.0:
                # |p|^3 underflowed; keep the sign with the smallest subnormal
                cap = math.copysign(5e-324, 1.0 if case == "in01" else -1.0)
        return Discriminant(cap, t.delta, snapped)
    return Discriminant(cap, None, False)


def q_dominant(r: ReducedForm) -> bool:
    """True when ``q / |p|^(3/2)`` overflows, so no scaled form exists."""
    if r.p == 0.0:
        return False
    s = math.sqrt(abs(r.p))
    return not math.isfinite(r.q / s / s / s)


def _classify_q_dominant(r: ReducedForm) -> Classification:
    """``|q| / |p|^(3/2)`` overflows, so ``p x`` is negligible next to ``x^3 + q``.

    One real root, of sign opposite to q, inside the Fujiwara radius.
    """
    radius = 2.0 * max(math.sqrt(abs(r.p)), (abs(r.q) / 2.0) ** (1.0 / 3.0))
    if r.q > 0.0:
        iv = _verified(r, -radius, 0.0, Kind.OPEN, True)
    else:
        iv = _verified(r, 0.0, radius, Kind.OPEN, False)
    if r.p > 0.0:
        regime = Regime.P_POSITIVE_SINGLE
    else:
        regime = Regime.DELTA_GT_1 if r.q > 0.0 else Regime.DELTA_LT_0
    return _build([(iv, 1)], regime, False)


def classify_reduced(r: ReducedForm) -> Classification:
    if q_dominant(r):
        return _classify_q_dominant(r)
    if r.p > 0.0:
        nf, m = normalize(r)
        if nf.q == 0.0:
            return _build([(exact(0.0), 1)], Regime.P_POSITIVE_SINGLE, False)
        return _build([(bound_tightening(nf, Tail.RIGHT).mapped(m), 1)], Regime.P_POSITIVE_SINGLE, False)
    if r.p == 0.0:
        if r.q == 0.0:
            return _build([(exact(0.0), 3)], Regime.P_ZERO_TRIPLE, False)
        # x^3 = -q; |x| < 1 + |q| strictly
        bound = 1.0 + abs(r.q)
        iv = Interval(0.0, bound) if r.q < 0.0 else Interval(-bound, 0.0)
        return _build([(iv, 1)], Regime.P_ZERO_SINGLE, False)
    t, m = reduced_to_tusi(r)
    return classify_tusi(t).mapped(m)


def classify_cubic(c: GeneralCubic) -> Classification:
    """Classification of a general cubic with intervals in its own variable."""
    r, m = reduce_general(c)
    return classify_reduced(r).mapped(m)


def _quadratic_pair(b: float, c: float) -> tuple[float, float]:
    """Roots ``b/2 -/+ sqrt(b^2 - 4c)/2`` for ``c < b^2/4``, b > 0, without cancellation."""
    big = 0.5 * (b + math.sqrt(b * b - 4.0 * c))
    small = c / big if big != 0.0 else 0.0
    return small, big


def classify_quadratic(qt: QuadraticTusiForm) -> Classification:
    """``x^2 - b x + c`` with b > 0; roots are reported exactly."""
    delta = qt.delta
    if _snap(delta, 1.0):
        return _build([(exact(qt.b / 2.0), 2)], Regime.QUAD_DOUBLE, True)
    if delta > 1.0:
        return _build([], Regime.QUAD_NONE, False)
    lo, hi = _quadratic_pair(qt.b, qt.c)
    return _build([(exact(lo), 1), (exact(hi), 1)], Regime.QUAD_TWO, False)


def classify_generalized(g: GeneralizedTusiForm) -> Classification:
    """Nine-way case split of ``phi_n(a) = delta phi_n*`` on the parity of n and delta."""
    n, delta = g.n, g.delta
    odd = n % 2 == 1
    a_star, _ = maximizer(n)
    case, snapped = _tusi_case(delta)

    if case == "lt0":
        if odd:
            items = [(bound_tightening(g, Tail.RIGHT), 1)]
            regime = Regime.N_ODD_DELTA_LT_0
        else:
            items = [(bound_tightening(g, Tail.LEFT), 1), (bound_tightening(g, Tail.RIGHT), 1)]
            regime = Regime.N_EVEN_DELTA_LT_0
    elif case == "eq0":
        items = [(exact(0.0), n - 1), (exact(1.0), 1)]
        regime = Regime.N_ANY_DELTA_EQ_0
    elif case == "in01":
        items = [(Interval(0.0, a_star), 1), (Interval(a_star, 1.0), 1)]
        if odd:
            items.append((Interval(-a_star, 0.0), 1))
            regime = Regime.N_ODD_DELTA_IN_0_1
        else:
            regime = Regime.N_EVEN_DELTA_IN_0_1
    elif case == "eq1":
        items = [(exact(a_star), 2)]
        if odd:
            items.append((Interval(-a_star, 0.0, Kind.HALF_OPEN), 1))
            regime = Regime.N_ODD_DELTA_EQ_1
        else:
            regime = Regime.N_EVEN_DELTA_EQ_1
    else:
        if odd:
            items = [(bound_tightening(g, Tail.LEFT), 1)]
            regime = Regime.N_ODD_DELTA_GT_1
        else:
            items = []
            regime = Regime.N_EVEN_DELTA_GT_1
    return _build(items, regime, snapped)
