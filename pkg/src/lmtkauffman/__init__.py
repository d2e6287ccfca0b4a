"""Exact framed-link polynomial computation with built-in identity checks."""

from .braid import braid_closure, random_closure, random_knot_closure, random_word
from .diagram import (
    Crossing,
    Diagram,
    DiagramError,
    InternalInvariantError,
    InvalidDiagramError,
    OrientationMask,
    PDSyntaxError,
    SublinkMask,
    parse_pd,
    to_pd_text,
)
from .kauffman import (
    DELTA,
    EmptyDiagramError,
    SkeinTask,
    f_framed,
    f_oriented,
    lambda_poly,
    specialized_f,
)
from .laurent import (
    LaurentA,
    LaurentAZ,
    NotDivisibleError,
    PolySyntaxError,
    SpecializationError,
    format_poly,
    parse_poly,
)
from .lmt import check_reversal_writhe, lmt_rhs, verify_all, verify_sublink_formula
from .report import VerificationReport
from .transfer import (
    OrientedFramedValue,
    check_skein_identity,
    check_specialization_identity,
    g_tau,
    g_value,
    orientations,
)

__version__ = "0.1.0"

__all__ = [
    "Crossing",
    "DELTA",
    "Diagram",
    "DiagramError",
    "EmptyDiagramError",
    "InternalInvariantError",
    "InvalidDiagramError",
    "LaurentA",
    "LaurentAZ",
    "NotDivisibleError",
    "OrientationMask",
    "OrientedFramedValue",
    "PDSyntaxError",
    "PolySyntaxError",
    "SkeinTask",
    "SpecializationError",
    "SublinkMask",
    "VerificationReport",
    "braid_closure",
    "check_reversal_writhe",
    "check_skein_identity",
    "check_specialization_identity",
    "f_framed",
    "f_oriented",
    "format_poly",
    "g_tau",
    "g_value",
    "lambda_poly",
    "lmt_rhs",
    "orientations",
    "parse_pd",
    "parse_poly",
    "random_closure",
    "random_knot_closure",
    "random_word",
    "specialized_f",
    "to_pd_text",
    "verify_all",
    "verify_sublink_formula",
    "__version__",
]
