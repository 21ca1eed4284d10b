"""``tusi`` command line.

Exit codes: 0 success, 2 bad arguments, 3 convergence failure, 4 regime
refusal (a method that does not apply to the input's root regime).
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Sequence

from . import __version__
from .classify import (
    classify_cubic,
    classify_generalized,
    classify_tusi,
    discriminant,
    maximizer,
)
from .errors import ConvergenceError, InputError, PreconditionError, RegimeError, TusiError
from .forms import (
    GeneralCubic,
    GeneralizedTusiForm,
    NormalForm,
    QuadraticTusiForm,
    TusiForm,
    normalize,
    reduce_general,
    reduced_to_tusi,
)
from .geometry import build_conic, emit_svg, intersect_with_parabola, phi_family_svg, tusi_split_svg
from .iterative import Method, PipelineStep, RootReport, SolveOptions, solve

EXIT_OK, EXIT_USAGE, EXIT_NUMERIC, EXIT_REGIME = 0, 2, 3, 4


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(message)


class _UsageError(Exception):
    pass


def parse_number(text: str) -> float:
    """Decimal or ``n/d`` literal, parsed exactly and then rounded once to float."""
    try:
        value = float(Fraction(text.strip()))
    except (ValueError, ZeroDivisionError, OverflowError) as exc:
        raise argparse.ArgumentTypeError(f"not a finite number: {text!r}") from exc
    if not math.isfinite(value):
        raise argparse.ArgumentTypeError(f"not a finite number: {text!r}")
    return value


def parse_coeffs(text: str) -> list[float]:
    parts = text.split(",")
    if len(parts) != 4:
        raise argparse.ArgumentTypeError("--coeffs needs four values a3,a2,a1,a0")
    return [parse_number(p) for p in parts]


def parse_window(text: str) -> tuple[float, ...]:
    parts = text.split(",")
    if len(parts) != 4:
        raise argparse.ArgumentTypeError("--window needs xmin,xmax,ymin,ymax")
    return tuple(parse_number(p) for p in parts)


# -- output ---------------------------------------------------------------------


def _json_text(obj: Any, indent: int = 0) -> str:
    """JSON with every float written at 17 significant digits (non-finite as null)."""
    pad, inner = "  " * indent, "  " * (indent + 1)
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, float):
        return format(obj, ".17g") if math.isfinite(obj) else "null"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{inner}{json.dumps(str(k))}: {_json_text(v, indent + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        items = [f"{inner}{_json_text(v, indent + 1)}" for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + pad + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _g6(v) -> str:
    if isinstance(v, bool) or v is None:
        return str(v).lower() if v is not None else "-"
    if isinstance(v, float):
        s = f"{v:.6g}"
        return "0" if s == "-0" else s
    return str(v)


def _params(d: dict) -> str:
    return ", ".join(f"{k}={_g6(v)}" for k, v in d.items())


def _human(env: dict) -> str:
    lines = [f"input: {_params(env['input'])}"]
    if env["pipeline"]:
        lines.append("pipeline:")
        for step in env["pipeline"]:
            m = step["map"]
            lines.append(
                f"  {step['form']}({_params(step['params'])})"
                f"  [previous = {_g6(m['scale'])}*this + {_g6(m['shift'])}]"
            )
    cls = env["classification"]
    if cls:
        lines.append(f"classification: {cls['regime']}, {cls['count']} real root(s)")
        for iv, mult in zip(cls["intervals"], cls["multiplicities"]):
            lines.append(f"  {_interval_text(iv)}  multiplicity {mult}")
        if cls.get("boundary_snapped"):
            lines.append("  boundary_snapped")
        for key in ("maximizer", "discriminant"):
            if key in cls:
                lines.append(f"  {key}: {_params(cls[key])}")
    if env["roots"]:
        lines.append("roots:")
        for r in env["roots"]:
            text = (
                f"  {_g6(r['value'])}  residual {_g6(r['residual'])}  multiplicity {r['multiplicity']}"
                f"  method {r['method']}  iterations {r['iterations']}"
            )
            if r.get("error"):
                text += f"  error: {r['error']}"
            lines.append(text)
    lines.append("warnings: " + ("; ".join(env["warnings"]) if env["warnings"] else "none"))
    return "\n".join(lines)


def _interval_text(iv: dict) -> str:
    lo, hi, kind = _g6(iv["lo"]), _g6(iv["hi"]), iv["kind"]
    if kind == "exact_point":
        return f"{{{lo}}}"
    if kind == "half_open":
        return f"[{lo}, {hi})"
    return f"({lo}, {hi})"


def envelope(inp: dict, pipeline=(), classification=None, roots=(), warnings=()) -> dict:
    return {
        "input": inp,
        "pipeline": [s.to_dict() if isinstance(s, PipelineStep) else s for s in pipeline],
        "classification": classification,
        "roots": [r.to_dict() for r in roots],
        "warnings": list(warnings),
    }


def _report_envelope(inp: dict, report: RootReport, extra_cls: dict | None = None) -> dict:
    cls = report.classification.to_dict()
    if extra_cls:
        cls.update(extra_cls)
    return envelope(inp, report.pipeline, cls, report.roots, report.warnings)


def _emit(args, env: dict) -> None:
    print(_json_text(env) if getattr(args, "json", False) else _human(env))


def _opts(args) -> SolveOptions:
    return SolveOptions(tol=args.tol, max_iter=args.max_iter, method=Method(args.method))


def _coeff_input(c: list[float]) -> dict:
    return dict(zip(("a3", "a2", "a1", "a0"), c))


def _status(report: RootReport) -> int:
    for r in report.failures:
        print(f"tusi: convergence failure near {_g6(r.value)}: {r.error}", file=sys.stderr)
    return EXIT_NUMERIC if report.failures else EXIT_OK


# -- subcommands --------------------------------------------------------------


def cmd_classify(args) -> int:
    cubic = GeneralCubic(*args.coeffs)
    cls = classify_cubic(cubic)
    r, m = reduce_general(cubic)
    warnings = ["boundary_snapped"] if cls.boundary_snapped else []
    _emit(args, envelope(_coeff_input(args.coeffs), [PipelineStep(cubic), PipelineStep(r, m)], cls.to_dict(), (), warnings))
    return EXIT_OK


def cmd_solve(args) -> int:
    report = solve(GeneralCubic(*args.coeffs), _opts(args))
    _emit(args, _report_envelope(_coeff_input(args.coeffs), report))
    return _status(report)


def cmd_reduce(args) -> int:
    cubic = GeneralCubic(*args.coeffs)
    r, m = reduce_general(cubic)
    steps = [PipelineStep(cubic), PipelineStep(r, m)]
    if r.p < 0.0:
        t, tm = reduced_to_tusi(r)
        steps.append(PipelineStep(t, tm))
    elif r.p > 0.0:
        nf, nm = normalize(r)
        steps.append(PipelineStep(nf, nm))
    d = discriminant(r)
    cls = classify_cubic(cubic).to_dict()
    cls["discriminant"] = d.to_dict()
    warnings = ["boundary_snapped"] if d.boundary_snapped else []
    _emit(args, envelope(_coeff_input(args.coeffs), steps, cls, (), warnings))
    return EXIT_OK


def cmd_tusi(args) -> int:
    t = TusiForm(args.delta)
    inp = {"delta": args.delta}
    if args.solve:
        report = solve(t, _opts(args))
        _emit(args, _report_envelope(inp, report))
        return _status(report)
    cls = classify_tusi(t)
    warnings = ["boundary_snapped"] if cls.boundary_snapped else []
    _emit(args, envelope(inp, [PipelineStep(t)], cls.to_dict(), (), warnings))
    return EXIT_OK


def cmd_general(args) -> int:
    g = GeneralizedTusiForm(args.n, args.delta)
    alpha_star, peak = maximizer(args.n)
    extra = {"maximizer": {"alpha_star": alpha_star, "peak": peak}}
    inp = {"n": args.n, "delta": args.delta}
    if args.solve:
        report = solve(g, _opts(args))
        _emit(args, _report_envelope(inp, report, extra))
        return _status(report)
    cls = classify_generalized(g)
    warnings = ["boundary_snapped"] if cls.boundary_snapped else []
    _emit(args, envelope(inp, [PipelineStep(g)], {**cls.to_dict(), **extra}, (), warnings))
    return EXIT_OK


def cmd_quadratic(args) -> int:
    qt = QuadraticTusiForm(args.b, args.c)
    report = solve(qt)
    _emit(args, _report_envelope({"b": args.b, "c": args.c}, report, {"delta": qt.delta}))
    return EXIT_OK


def _auto_window(conic) -> tuple[float, float, float, float]:
    pts = intersect_with_parabola(conic)
    xs = [0.0, conic.center_x - conic.radius_or_semi, conic.center_x + conic.radius_or_semi]
    xs += [p.x for p in pts]
    ys = [p.y for p in pts] + [conic.radius_or_semi, 1.0]
    xlo, xhi = min(xs) - 0.5, max(xs) + 0.5
    return (xlo, xhi, -max(conic.radius_or_semi, 0.5) - 0.25, max(ys) + 0.5)


def cmd_plot(args) -> int:
    fig = args.figure
    if fig == "circle":
        conic = build_conic(NormalForm(1, args.q if args.q is not None else -2.0))
        svg = emit_svg(conic, args.window or _auto_window(conic))
    elif fig == "hyperbola":
        conic = build_conic(NormalForm(-1, args.qprime if args.qprime is not None else 0.1))
        svg = emit_svg(conic, args.window or _auto_window(conic))
    elif fig == "tusi-split":
        svg = tusi_split_svg(args.delta, args.window) if args.window else tusi_split_svg(args.delta)
    else:
        n_max = args.n_max if args.n_max is not None else 5
        svg = phi_family_svg(n_max, args.window) if args.window else phi_family_svg(n_max)
    Path(args.out).write_text(svg, encoding="utf-8")
    print(f"wrote {args.out}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="tusi", description="Classify and solve real cubic equations.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    def solver_flags(p, with_method=True):
        if with_method:
            p.add_argument("--method", default="auto", choices=[m.value for m in Method])
        p.add_argument("--tol", type=parse_number, default=1e-12)
        p.add_argument("--max-iter", type=int, default=200)

    def json_flag(p):
        p.add_argument("--json", action="store_true", help="machine-readable output")

    coeffs_help = "a3,a2,a1,a0 (decimals or n/d rationals)"
    p = sub.add_parser("classify", help="count and isolate the real roots")
    p.add_argument("--coeffs", type=parse_coeffs, required=True, help=coeffs_help)
    json_flag(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("solve", help="compute the real roots")
    p.add_argument("--coeffs", type=parse_coeffs, required=True, help=coeffs_help)
    solver_flags(p)
    json_flag(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("reduce", help="show the reduced, normal or Tusi form and the maps")
    p.add_argument("--coeffs", type=parse_coeffs, required=True, help=coeffs_help)
    json_flag(p)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("tusi", help="a^3 - a^2 + (4/27) delta")
    p.add_argument("--delta", type=parse_number, required=True)
    p.add_argument("--solve", action="store_true")
    solver_flags(p)
    json_flag(p)
    p.set_defaults(func=cmd_tusi)

    p = sub.add_parser("general", help="a^(n-1) - a^n = delta * peak")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--delta", type=parse_number, required=True)
    p.add_argument("--solve", action="store_true")
    solver_flags(p)
    json_flag(p)
    p.set_defaults(func=cmd_general)

    p = sub.add_parser("quadratic", help="x^2 - b x + c")
    p.add_argument("--b", type=parse_number, required=True)
    p.add_argument("--c", type=parse_number, required=True)
    json_flag(p)
    p.set_defaults(func=cmd_quadratic)

    p = sub.add_parser("plot", help="write an SVG figure")
    p.add_argument("--figure", required=True, choices=["tusi-split", "circle", "hyperbola", "phi-family"])
    p.add_argument("--q", type=parse_number, help="constant of x^3 + x + q (circle)")
    p.add_argument("--qprime", type=parse_number, help="constant of x^3 - x + q' (hyperbola)")
    p.add_argument("--n-max", type=int, help="largest n for phi-family")
    p.add_argument("--delta", type=parse_number, help="mark the roots for this delta (tusi-split)")
    p.add_argument("--window", type=parse_window, help="xmin,xmax,ymin,ymax")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_plot)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"tusi: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except RegimeError as exc:
        print(f"tusi: regime refused: {exc}", file=sys.stderr)
        return EXIT_REGIME
    except ConvergenceError as exc:
        print(f"tusi: convergence failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (InputError, PreconditionError) as exc:
        print(f"tusi: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except TusiError as exc:
        print(f"tusi: error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except OSError as exc:
        print(f"tusi: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
