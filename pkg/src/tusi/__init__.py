"""Classify and solve real cubic equations through the Tusi form ``a^3 - a^2 + (4/27) delta``."""

__version__ = "0.1.0"

from .classify import (
    Classification,
    Discriminant,
    EPS_CLASS,
    Interval,
    Kind,
    Regime,
    Tail,
    bound_tightening,
    classify_cubic,
    classify_generalized,
    classify_quadratic,
    classify_reduced,
    classify_tusi,
    classify_tusi_general,
    discriminant,
    maximizer,
    u_coefficients,
    v_coefficients,
)
from .closed_form import ClosedFormTrace, cardano_normal, cardano_reduced, quadratic_roots, real_cbrt
from .errors import (
    ConvergenceError,
    DerivativeVanishesError,
    InputError,
    PreconditionError,
    RegimeError,
    TusiError,
)
from .forms import (
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
from .geometry import ConicSystem, build_conic, emit_svg, intersect_with_parabola
from .iterative import (
    Bracket,
    ChordState,
    Method,
    RootEstimate,
    RootReport,
    SolveOptions,
    bisect,
    chord_quadratic,
    khayyam_chord_solve,
    lookup_table,
    newton_refine,
    newton_step,
    solve,
)

__all__ = [
    "__version__",
    "AffineMap",
    "Bracket",
    "ChordState",
    "Classification",
    "ClosedFormTrace",
    "ConicSystem",
    "ConvergenceError",
    "DerivativeVanishesError",
    "Discriminant",
    "EPS_CLASS",
    "GeneralCubic",
    "GeneralizedTusiForm",
    "InputError",
    "Interval",
    "Kind",
    "Method",
    "NormalForm",
    "PreconditionError",
    "QuadraticTusiForm",
    "ReducedForm",
    "Regime",
    "RegimeError",
    "RootEstimate",
    "RootReport",
    "SolveOptions",
    "Tail",
    "TusiError",
    "TusiForm",
    "TusiGeneralForm",
    "bisect",
    "bound_tightening",
    "build_conic",
    "cardano_normal",
    "cardano_reduced",
    "chord_quadratic",
    "classify_cubic",
    "classify_generalized",
    "classify_quadratic",
    "classify_reduced",
    "classify_tusi",
    "classify_tusi_general",
    "discriminant",
    "emit_svg",
    "general_to_tusi_general",
    "intersect_with_parabola",
    "khayyam_chord_solve",
    "lookup_table",
    "maximizer",
    "newton_refine",
    "newton_step",
    "normalize",
    "phi",
    "phi_n",
    "quadratic_roots",
    "real_cbrt",
    "reduce_general",
    "reduced_to_tusi",
    "solve",
    "tusi_to_reduced",
    "u_coefficients",
    "v_coefficients",
]
