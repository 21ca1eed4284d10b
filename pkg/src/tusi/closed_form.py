"""Cardano's formula for the single-real-root regimes, in real arithmetic only.

The formula ``cbrt(-q/2 + s) + cbrt(-q/2 - s)`` with
``s = sqrt(q^2/4 + p^3/27)`` is real exactly when the cubic has one real
root.  With three distinct real roots ``s`` would be imaginary, so the
solvers here refuse that regime with :class:`RegimeError` and the
iterative path takes over.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .classify import Regime, classify_quadratic, discriminant
from .errors import InputError, PreconditionError, RegimeError
from .forms import NormalForm, QuadraticTusiForm, ReducedForm, normalize


def real_cbrt(v: float) -> float:
    """Real cube root, ``sign(v) * |v|^(1/3)``, polished by one Newton step."""
    if v == 0.0 or not math.isfinite(v):
        return v
    a = abs(v)
    y = a ** (1.0 / 3.0)
    y -= (y * y * y - a) / (3.0 * y * y)
    return math.copysign(y, v)


@dataclass(frozen=True)
class ClosedFormTrace:
    s: float
    cube_args: tuple[float, float]
    root: float

    def to_dict(self) -> dict:
        return {"s": self.s, "cube_args": list(self.cube_args), "root": self.root}


def _trace(q: float, r: float, sign: int) -> ClosedFormTrace:
    """Cardano on ``y^3 + sign * 3 r^(2/3) y + q`` where ``r^2 = |p|^3 / 27``.

    Requires one real root.  The cube arguments are ``-q/2 + s`` and
    ``-q/2 - s`` with ``s^2 = q^2/4 + sign * r^2``; the smaller one in
    magnitude comes from their product ``-sign * r^2`` to avoid cancellation.
    """
    h = -q / 2.0
    if sign == 1:
        s = math.hypot(h, r)
    else:
        # q^2/4 - r^2 >= 0 here; factor the difference of squares
        s = math.sqrt(abs(h) - r) * math.sqrt(abs(h) + r)
    product = -sign * r * r
    if h >= 0.0:
        u = h + s
        v = product / u if u != 0.0 else h - s
    else:
        v = h - s
        u = product / v
    return ClosedFormTrace(s, (u, v), real_cbrt(u) + real_cbrt(v))


def _unit_trace(sign: int, q: float) -> ClosedFormTrace:
    """Cardano on ``y^3 + sign*y + q`` where one real root is guaranteed."""
    return _trace(q, 1.0 / math.sqrt(27.0), sign)


def cardano_normal(f: NormalForm) -> ClosedFormTrace:
    """Unique real root of ``x^3 + x + q``."""
    if f.sign != 1:
        raise PreconditionError("cardano_normal needs the positive normal form x^3 + x + q")
    return _unit_trace(1, f.q)


def cardano_reduced(r: ReducedForm) -> ClosedFormTrace:
    """Unique real root of ``x^3 + p x + q`` in a single-root regime.

    ``p > 0`` and ``p < 0`` go through the normal form (scale ``sqrt|p|``)
    and the trace is scaled back, so ``s`` equals
    ``sqrt(q^2/4 + p^3/27)``.  ``p == 0`` is the plain cube root.
    """
    if r.p == 0.0:
        root = real_cbrt(-r.q)
        return ClosedFormTrace(abs(r.q) / 2.0, (-r.q / 2.0 + abs(r.q) / 2.0, -r.q / 2.0 - abs(r.q) / 2.0), root)
    sign = 1 if r.p > 0.0 else -1
    try:
        if r.p < 0.0:
            d = discriminant(r)
            if d.three_distinct_real or d.on_boundary:
                raise RegimeError(
                    "three-real-root regime (Delta >= 0): the radicals would need complex "
                    "arithmetic; use the iterative path"
                )
        nf, m = normalize(r)
    except InputError:
        # |p|^(3/2) is negligible next to |q|; stay in the reduced variable
        return _trace(r.q, math.sqrt(abs(r.p) / 27.0) * abs(r.p), sign)
    unit = _unit_trace(nf.sign, nf.q)
    k = m.scale
    k3 = k * k * k
    return ClosedFormTrace(
        unit.s * k3,
        (unit.cube_args[0] * k3, unit.cube_args[1] * k3),
        unit.root * k,
    )


def quadratic_roots(qt: QuadraticTusiForm) -> list[float]:
    """Distinct real roots of ``x^2 - b x + c``, ascending (a double root appears once)."""
    cls = classify_quadratic(qt)
    if cls.regime is Regime.QUAD_NONE:
        return []
    return [iv.lo for iv in cls.intervals]
