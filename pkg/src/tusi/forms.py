"""Canonical equation types and the exact affine reductions between them.

Every reduction returns the transformed equation together with an
:class:`AffineMap` ``x = scale * y + shift`` that sends a root ``y`` of the
transformed equation to a root ``x`` of the equation it came from.

Reduction chain for a real cubic::

    a3 x^3 + a2 x^2 + a1 x + a0          GeneralCubic
        -> x^3 + p x + q                  ReducedForm     (shift by -a2/(3 a3))
        -> x^3 +/- x + q'                 NormalForm      (p != 0, scale |p|^(1/2))
        -> a^3 - a^2 + (4/27) delta       TusiForm        (p < 0)
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import InputError, PreconditionError

SQRT3 = math.sqrt(3.0)
TUSI_MAX = 4.0 / 27.0


def _require_finite(**values: float) -> None:
    for name, v in values.items():
        if not math.isfinite(v):
            raise InputError(f"{name} must be finite, got {v!r}")


def horner(coeffs, x: float) -> float:
    """Evaluate a dense polynomial given highest-degree coefficient first."""
    acc = 0.0
    for c in coeffs:
        acc = acc * x + c
    return acc


@dataclass(frozen=True)
class AffineMap:
    """Substitution ``x = scale * y + shift`` between two equation variables.

    ``x`` belongs to the equation the reduction started from, ``y`` to the
    equation it produced.  Maps compose with :meth:`compose`: if
    ``outer`` came from the first reduction and ``inner`` from the second,
    ``outer.compose(inner)`` sends roots of the final form straight back to
    the original variable (the innermost reduction is applied first).
    """

    scale: float = 1.0
    shift: float = 0.0

    def __post_init__(self):
        _require_finite(scale=self.scale, shift=self.shift)
        if self.scale == 0.0:
            raise InputError("AffineMap scale must be nonzero")

    def __call__(self, y: float) -> float:
        return self.scale * y + self.shift

    def invert(self, x: float) -> float:
        return (x - self.shift) / self.scale

    def inverse(self) -> AffineMap:
        return AffineMap(1.0 / self.scale, -self.shift / self.scale)

    def compose(self, inner: AffineMap) -> AffineMap:
        """Return ``self o inner``, i.e. ``z -> self(inner(z))``."""
        return AffineMap(self.scale * inner.scale, self.scale * inner.shift + self.shift)

    def map_interval(self, lo: float, hi: float) -> tuple[float, float]:
        a, b = self(lo), self(hi)
        return (a, b) if a <= b else (b, a)

    @property
    def is_identity(self) -> bool:
        return self.scale == 1.0 and self.shift == 0.0

    def to_dict(self) -> dict:
        return {"scale": self.scale, "shift": self.shift}


IDENTITY = AffineMap()


@dataclass(frozen=True)
class GeneralCubic:
    """``a3 x^3 + a2 x^2 + a1 x + a0`` with ``a3 != 0``."""

    a3: float
    a2: float
    a1: float
    a0: float

    def __post_init__(self):
        _require_finite(a3=self.a3, a2=self.a2, a1=self.a1, a0=self.a0)
        if self.a3 == 0.0:
            raise InputError("leading coefficient a3 must be nonzero for a cubic")

    @property
    def coefficients(self) -> tuple[float, float, float, float]:
        return (self.a3, self.a2, self.a1, self.a0)

    def __call__(self, x: float) -> float:
        return horner(self.coefficients, x)

    def derivative(self, x: float) -> float:
        return (3.0 * self.a3 * x + 2.0 * self.a2) * x + self.a1


@dataclass(frozen=True)
class ReducedForm:
    """Depressed cubic ``x^3 + p x + q``."""

    p: float
    q: float

    def __post_init__(self):
        _require_finite(p=self.p, q=self.q)

    @property
    def coefficients(self) -> tuple[float, float, float, float]:
        return (1.0, 0.0, self.p, self.q)

    def __call__(self, x: float) -> float:
        return (x * x + self.p) * x + self.q

    def derivative(self, x: float) -> float:
        return 3.0 * x * x + self.p


@dataclass(frozen=True)
class NormalForm:
    """``x^3 + sign * x + q`` with ``sign`` in {+1, -1}."""

    sign: int
    q: float

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise InputError(f"NormalForm sign must be +1 or -1, got {self.sign!r}")
        _require_finite(q=self.q)

    @property
    def coefficients(self) -> tuple[float, float, float, float]:
        return (1.0, 0.0, float(self.sign), self.q)

    def __call__(self, x: float) -> float:
        return (x * x + self.sign) * x + self.q

    def derivative(self, x: float) -> float:
        return 3.0 * x * x + self.sign

    def as_reduced(self) -> ReducedForm:
        return ReducedForm(float(self.sign), self.q)


@dataclass(frozen=True)
class TusiForm:
    """``a^3 - a^2 + (4/27) delta``; any real ``delta``."""

    delta: float

    def __post_init__(self):
        _require_finite(delta=self.delta)

    @property
    def constant(self) -> float:
        return TUSI_MAX * self.delta

    @property
    def coefficients(self) -> tuple[float, float, float, float]:
        return (1.0, -1.0, 0.0, self.constant)

    def __call__(self, a: float) -> float:
        return (a - 1.0) * a * a + self.constant

    def derivative(self, a: float) -> float:
        return (3.0 * a - 2.0) * a


@dataclass(frozen=True)
class TusiGeneralForm:
    """``x^3 - b x^2 + c`` with ``b > 0``.

    A negative ``b`` is accepted and normalized by the reflection
    ``x -> -x``, which turns ``(b, c)`` into ``(-b, -c)``; ``reflected``
    records that this happened and :attr:`reflection` is the matching map.
    """

    b: float
    c: float
    reflected: bool = field(default=False, compare=False)

    def __post_init__(self):
        _require_finite(b=self.b, c=self.c)
        if self.b == 0.0:
            raise InputError("TusiGeneralForm needs a nonzero quadratic coefficient b")
        if self.b < 0.0:
            object.__setattr__(self, "b", -self.b)
            object.__setattr__(self, "c", -self.c)
            object.__setattr__(self, "reflected", not self.reflected)

    @property
    def reflection(self) -> AffineMap:
        """Map from this form's variable to the variable it was given in."""
        return AffineMap(-1.0 if self.reflected else 1.0, 0.0)

    @property
    def delta(self) -> float:
        return 27.0 * self.c / (4.0 * self.b**3)

    @property
    def coefficients(self) -> tuple[float, float, float, float]:
        return (1.0, -self.b, 0.0, self.c)

    def __call__(self, x: float) -> float:
        return (x - self.b) * x * x + self.c

    def derivative(self, x: float) -> float:
        return (3.0 * x - 2.0 * self.b) * x

    def to_tusi(self) -> tuple[TusiForm, AffineMap]:
        """Rescale ``x = b * a``; the map is relative to this (normalized) form."""
        return TusiForm(self.delta), AffineMap(self.b, 0.0)


@dataclass(frozen=True)
class QuadraticTusiForm:
    """``x^2 - b x + c`` with ``b > 0``; the unit form ``b = 1, c = delta/4``."""

    b: float
    c: float

    def __post_init__(self):
        _require_finite(b=self.b, c=self.c)
        if not self.b > 0.0:
            raise InputError(f"QuadraticTusiForm needs b > 0, got {self.b!r}")

    @classmethod
    def from_delta(cls, delta: float) -> QuadraticTusiForm:
        _require_finite(delta=delta)
        return cls(1.0, delta / 4.0)

    @property
    def delta(self) -> float:
        return 4.0 * self.c / (self.b * self.b)

    @property
    def coefficients(self) -> tuple[float, float, float]:
        return (1.0, -self.b, self.c)

    def __call__(self, x: float) -> float:
        return (x - self.b) * x + self.c

    def derivative(self, x: float) -> float:
        return 2.0 * x - self.b


@dataclass(frozen=True)
class GeneralizedTusiForm:
    """``a^n - a^(n-1) + delta * phi_n*``, i.e. ``phi_n(a) = delta * phi_n*``."""

    n: int
    delta: float

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, int):
            raise InputError(f"degree n must be an integer, got {self.n!r}")
        if self.n < 2:
            raise InputError(f"generalized Tusi form needs n >= 2, got {self.n}")
        _require_finite(delta=self.delta)

    @property
    def peak(self) -> float:
        from .classify import maximizer

        return maximizer(self.n)[1]

    @property
    def constant(self) -> float:
        return self.delta * self.peak

    @property
    def coefficients(self) -> tuple[float, ...]:
        return (1.0, -1.0) + (0.0,) * (self.n - 2) + (self.constant,)

    def __call__(self, a: float) -> float:
        return a ** (self.n - 1) * (a - 1.0) + self.constant

    def derivative(self, a: float) -> float:
        n = self.n
        return a ** (n - 2) * (n * a - (n - 1))


def phi_n(n: int, alpha: float) -> float:
    """``alpha^(n-1) - alpha^n``."""
    if n < 2:
        raise InputError(f"phi_n needs n >= 2, got {n}")
    return alpha ** (n - 1) - alpha**n


def phi(alpha: float) -> float:
    """``alpha^2 - alpha^3``; identical to ``phi_n(3, alpha)``."""
    return phi_n(3, alpha)


def reduce_general(c: GeneralCubic) -> tuple[ReducedForm, AffineMap]:
    """Monic normalization plus the shift ``x = y - a2/(3 a3)``.

    The result may have ``p == 0``; that case is solved by a plain cube root.
    """
    b = c.a2 / c.a3
    lin = c.a1 / c.a3
    d = c.a0 / c.a3
    t = -b / 3.0
    # p and q are the monic cubic's derivative and value at the shift
    p = (3.0 * t + 2.0 * b) * t + lin
    q = ((t + b) * t + lin) * t + d
    return ReducedForm(p, q), AffineMap(1.0, t)


def normalize(r: ReducedForm) -> tuple[NormalForm, AffineMap]:
    """Scale ``x = |p|^(1/2) y`` to reach ``y^3 + sign(p) y + q/|p|^(3/2)``."""
    if r.p == 0.0:
        raise PreconditionError("normalize needs p != 0; p == 0 is the cube-root case")
    s = math.sqrt(abs(r.p))
    # divide stepwise: |p|^(3/2) alone underflows for |p| below ~1e-205
    q = r.q / s / s / s
    if not math.isfinite(q):
        raise InputError(f"q / |p|^(3/2) overflows for p={r.p!r}, q={r.q!r}")
    return NormalForm(1 if r.p > 0 else -1, q), AffineMap(s, 0.0)


def reduced_to_tusi(r: ReducedForm) -> tuple[TusiForm, AffineMap]:
    """Rewrite ``x^3 + p x + q`` with ``p < 0`` as a Tusi form.

    ``delta = 1/2 + 3 sqrt(3) q / (4 sqrt(-p^3))`` and
    ``x = sqrt(-3p) a - sqrt(-p/3)``.
    """
    if not r.p < 0.0:
        raise PreconditionError(f"reduced_to_tusi needs p < 0, got p={r.p!r}")
    m = -r.p
    delta = 0.5 + 3.0 * SQRT3 / 4.0 * (r.q / m / math.sqrt(m))
    if not math.isfinite(delta):
        raise InputError(f"q / |p|^(3/2) overflows for p={r.p!r}, q={r.q!r}")
    return TusiForm(delta), AffineMap(math.sqrt(3.0 * m), -math.sqrt(m / 3.0))


def tusi_to_reduced(t: TusiForm) -> tuple[ReducedForm, AffineMap]:
    """``x^3 - x/3 + (4 delta - 2)/27`` with ``a = x + 1/3``."""
    return ReducedForm(-1.0 / 3.0, (4.0 * t.delta - 2.0) / 27.0), AffineMap(1.0, 1.0 / 3.0)


def general_to_tusi_general(c: GeneralCubic) -> tuple[TusiGeneralForm, AffineMap]:
    """Read ``x^3 - b x^2 + c`` off a cubic with no linear term.

    The returned map is ``x = +/- b * a``: it takes a root ``a`` of the unit
    Tusi form ``TusiForm(27 c / (4 b^3))`` to a root of ``c`` itself, with the
    sign absorbing the reflection used when the quadratic coefficient is
    positive.
    """
    if c.a1 != 0.0:
        raise InputError(
            "cubic has a linear term; reduce it with reduce_general instead"
        )
    if c.a2 == 0.0:
        raise InputError("cubic has no quadratic term; it is already a reduced form")
    g = TusiGeneralForm(-c.a2 / c.a3, c.a0 / c.a3)
    _, scale = g.to_tusi()
    return g, g.reflection.compose(scale)
