"""Khayyam's conics for the two normal forms, and SVG figures.

Multiplying ``x^3 + x + q`` by ``x`` and putting ``y = x^2`` gives the
circle ``(x + q/2)^2 + y^2 = q^2/4``; the same step on ``x^3 - x + q'``
gives the hyperbola ``(x - q'/2)^2 - y^2 = q'^2/4``.  Both pass through the
origin, and their other intersections with ``y = x^2`` sit over the real
roots.  Intersections are found by solving the cubic with this package's
solvers and lifting each root onto the parabola.

SVG conventions (all figures):
    width 600 px, equal scaling on both axes, y flipped inside one
    ``<g transform=...>`` so shapes use mathematical coordinates;
    parabola  #1f4e9c  stroke 2 px
    conic     #2e8b3d  stroke 2 px
    extra     #c0392b, #8e44ad, #d68910, #16a085 (cycled) stroke 2 px
    axes      #888888  stroke 1 px
    markers   #000000  radius 4 px, class "root"
Numbers are written with 6 significant digits.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Callable, NamedTuple, Sequence

from .classify import maximizer
from .errors import InputError
from .forms import NormalForm, TusiForm, phi_n
from .iterative import solve


class ConicKind(str, enum.Enum):
    CIRCLE = "circle"
    HYPERBOLA = "hyperbola"


class Point(NamedTuple):
    x: float
    y: float


@dataclass(frozen=True)
class ConicSystem:
    """Circle (``x^3 + x + q``, q < 0) or hyperbola (``x^3 - x + q'``, q' > 0).

    ``q_value`` is the constant after any ``x -> -x`` reflection, which is
    recorded in ``reflected``; the conic and its intersections live in the
    reflected variable.  ``radius_or_semi`` is ``|q|/2`` (the circle's
    radius, the hyperbola's semi-axis) and ``rhs`` is ``q^2/4``.
    """

    kind: ConicKind
    q_value: float
    reflected: bool = False

    @property
    def sign(self) -> int:
        return 1 if self.kind is ConicKind.CIRCLE else -1

    @property
    def center_x(self) -> float:
        return -self.q_value / 2.0 if self.kind is ConicKind.CIRCLE else self.q_value / 2.0

    @property
    def radius_or_semi(self) -> float:
        return abs(self.q_value) / 2.0

    @property
    def rhs(self) -> float:
        return self.q_value * self.q_value / 4.0

    @property
    def degenerate(self) -> bool:
        # q = 0: the circle shrinks to the origin, the hyperbola to the lines y = +-x
        return self.q_value == 0.0

    @property
    def normal_form(self) -> NormalForm:
        return NormalForm(self.sign, self.q_value)

    def equation(self, x: float, y: float) -> float:
        """Left side minus right side of the conic equation."""
        dx = x - self.center_x
        if self.kind is ConicKind.CIRCLE:
            return dx * dx + y * y - self.rhs
        return dx * dx - y * y - self.rhs

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "center_x": self.center_x,
            "radius_or_semi": self.radius_or_semi,
            "rhs": self.rhs,
            "q_value": self.q_value,
            "reflected": self.reflected,
            "degenerate": self.degenerate,
        }


def build_conic(f: NormalForm) -> ConicSystem:
    """Conic for ``f``, reflecting ``x -> -x`` when needed so that q < 0 (circle) or q' > 0 (hyperbola)."""
    if f.sign == 1:
        if f.q > 0.0:
            return ConicSystem(ConicKind.CIRCLE, -f.q, reflected=True)
        return ConicSystem(ConicKind.CIRCLE, f.q)
    if f.q < 0.0:
        return ConicSystem(ConicKind.HYPERBOLA, -f.q, reflected=True)
    return ConicSystem(ConicKind.HYPERBOLA, f.q)


def intersect_with_parabola(c: ConicSystem) -> list[Point]:
    """Nontrivial intersections with ``y = x^2``, ascending in x; a tangency appears once."""
    report = solve(c.normal_form)
    return [Point(r.value, r.value * r.value) for r in report.roots if r.value != 0.0]


# -- SVG ----------------------------------------------------------------------

PX_WIDTH = 600
PARABOLA_COLOR = "#1f4e9c"
CONIC_COLOR = "#2e8b3d"
EXTRA_COLORS = ("#c0392b", "#8e44ad", "#d68910", "#16a085")
AXIS_COLOR = "#888888"
MARKER_COLOR = "#000000"
SAMPLES = 400


@dataclass(frozen=True)
class Window:
    xmin: float
    xmax: float
    ymin: float
    ymax: float

    def __post_init__(self):
        if not (self.xmax > self.xmin and self.ymax > self.ymin):
            raise InputError("window needs positive width and height")

    @classmethod
    def of(cls, w) -> Window:
        return w if isinstance(w, Window) else cls(*w)


def _fmt(v: float) -> str:
    s = f"{v:.6g}"
    return "0" if s == "-0" else s


class _Canvas:
    def __init__(self, window: Window, title: str):
        self.w = window
        self.scale = PX_WIDTH / (window.xmax - window.xmin)
        self.height = self.scale * (window.ymax - window.ymin)
        self.title = title
        self.items: list[str] = []

    def _px(self, n: float) -> str:
        return _fmt(n / self.scale)

    def axes(self) -> None:
        w = self.w
        style = f'stroke="{AXIS_COLOR}" stroke-width="{self._px(1)}"'
        if w.ymin <= 0.0 <= w.ymax:
            self.items.append(f'<line class="axis" x1="{_fmt(w.xmin)}" y1="0" x2="{_fmt(w.xmax)}" y2="0" {style}/>')
        if w.xmin <= 0.0 <= w.xmax:
            self.items.append(f'<line class="axis" x1="0" y1="{_fmt(w.ymin)}" x2="0" y2="{_fmt(w.ymax)}" {style}/>')

    def curve(self, fn: Callable[[float], float], color: str, cls: str, lo=None, hi=None) -> None:
        lo = self.w.xmin if lo is None else lo
        hi = self.w.xmax if hi is None else hi
        pts = []
        for i in range(SAMPLES + 1):
            x = lo + (hi - lo) * i / SAMPLES
            y = fn(x)
            if math.isfinite(y):
                pts.append(f"{_fmt(x)},{_fmt(y)}")
        self.polyline(pts, color, cls)

    def polyline(self, pts: Sequence[str], color: str, cls: str) -> None:
        if len(pts) >= 2:
            self.items.append(
                f'<polyline class="{cls}" points="{" ".join(pts)}" fill="none" '
                f'stroke="{color}" stroke-width="{self._px(2)}"/>'
            )

    def hline(self, y: float, color: str, cls: str) -> None:
        self.items.append(
            f'<line class="{cls}" x1="{_fmt(self.w.xmin)}" y1="{_fmt(y)}" x2="{_fmt(self.w.xmax)}" '
            f'y2="{_fmt(y)}" stroke="{color}" stroke-width="{self._px(2)}"/>'
        )

    def circle(self, cx: float, cy: float, r: float, color: str, cls: str) -> None:
        self.items.append(
            f'<circle class="{cls}" cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="{_fmt(r)}" fill="none" '
            f'stroke="{color}" stroke-width="{self._px(2)}"/>'
        )

    def marker(self, x: float, y: float) -> None:
        self.items.append(
            f'<circle class="root" cx="{_fmt(x)}" cy="{_fmt(y)}" r="{self._px(4)}" fill="{MARKER_COLOR}"/>'
        )

    def render(self) -> str:
        w = self.w
        # x_px = s*(x - xmin), y_px = s*(ymax - y)
        transform = (
            f"matrix({_fmt(self.scale)} 0 0 {_fmt(-self.scale)} "
            f"{_fmt(-self.scale * w.xmin)} {_fmt(self.scale * w.ymax)})"
        )
        head = (
            '<?xml version="1.0" encoding="UTF-8"?>\n'
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            f'width="{PX_WIDTH}" height="{_fmt(self.height)}" '
            f'viewBox="0 0 {PX_WIDTH} {_fmt(self.height)}">\n'
            f"<title>{self.title}</title>\n"
            '<defs><clipPath id="view">'
            f'<rect x="{_fmt(w.xmin)}" y="{_fmt(w.ymin)}" width="{_fmt(w.xmax - w.xmin)}" '
            f'height="{_fmt(w.ymax - w.ymin)}"/></clipPath></defs>\n'
            f'<g transform="{transform}" clip-path="url(#view)">\n'
        )
        return head + "\n".join(self.items) + "\n</g>\n</svg>\n"


def _parabola(x: float) -> float:
    return x * x


def _draw_conic(canvas: _Canvas, c: ConicSystem, color: str) -> None:
    h = c.center_x
    if c.kind is ConicKind.CIRCLE:
        canvas.circle(h, 0.0, c.radius_or_semi, color, "conic circle")
        return
    # (x - h)^2 - y^2 = h^2: branches x <= 0 and x >= 2h (h > 0), each with y = +-sqrt(...)
    def upper(x):
        d = (x - h) ** 2 - c.rhs
        return math.sqrt(d) if d >= 0.0 else math.nan

    def lower(x):
        return -upper(x)

    w = canvas.w
    for lo, hi in ((w.xmin, min(0.0, w.xmax)), (max(2.0 * h, w.xmin), w.xmax)):
        if hi > lo:
            canvas.curve(upper, color, "conic hyperbola", lo, hi)
            canvas.curve(lower, color, "conic hyperbola", lo, hi)


def emit_svg(c: ConicSystem | Sequence[ConicSystem], window) -> str:
    """Parabola, conic(s), axes, and a marker at every nontrivial intersection."""
    conics = [c] if isinstance(c, ConicSystem) else list(c)
    if not conics:
        raise InputError("emit_svg needs at least one conic")
    win = Window.of(window)
    title = ", ".join(f"{k.kind.value} q={_fmt(k.q_value)}" for k in conics)
    canvas = _Canvas(win, f"y = x^2 and {title}")
    canvas.axes()
    canvas.curve(_parabola, PARABOLA_COLOR, "parabola")
    colors = [CONIC_COLOR] if len(conics) == 1 else list(EXTRA_COLORS)
    for i, k in enumerate(conics):
        _draw_conic(canvas, k, colors[i % len(colors)])
    for k in conics:
        for p in intersect_with_parabola(k):
            canvas.marker(p.x, p.y)
    return canvas.render()


def tusi_split_svg(delta: float | None = None, window=(-0.6, 1.2, -0.3, 0.6)) -> str:
    """The curves ``a^2 - a^3`` and ``a^3 + a`` with the level ``4/27``.

    With ``delta`` the level ``(4/27) delta`` is drawn too and the roots of
    the Tusi form are marked on it.
    """
    win = Window.of(window)
    canvas = _Canvas(win, "a^2 - a^3 and a^3 + a against the level 4/27")
    canvas.axes()
    canvas.curve(lambda a: a * a - a * a * a, PARABOLA_COLOR, "tusi-phi")
    canvas.curve(lambda a: a * a * a + a, CONIC_COLOR, "normal-positive")
    canvas.hline(4.0 / 27.0, EXTRA_COLORS[0], "level peak")
    if delta is not None:
        level = 4.0 * delta / 27.0
        canvas.hline(level, EXTRA_COLORS[1], "level delta")
        for x in solve(TusiForm(delta)).values:
            canvas.marker(x, level)
    return canvas.render()


def phi_family_svg(n_max: int = 5, window=(-0.6, 1.2, -0.4, 0.6)) -> str:
    """Graphs of ``a^(n-1) - a^n`` for n = 2..n_max, each maximum marked."""
    if n_max < 2:
        raise InputError("n_max must be at least 2")
    win = Window.of(window)
    canvas = _Canvas(win, f"a^(n-1) - a^n, n = 2..{n_max}")
    canvas.axes()
    for n in range(2, n_max + 1):
        color = EXTRA_COLORS[(n - 2) % len(EXTRA_COLORS)]
        canvas.curve(lambda a, n=n: phi_n(n, a), color, f"phi n{n}")
        canvas.marker(*maximizer(n))
    return canvas.render()
