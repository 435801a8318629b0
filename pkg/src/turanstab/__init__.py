"""Exact Turan expressions for polynomial sequences and weak Hurwitz
stability certificates, all in rational arithmetic."""

from .polycore import Poly, Rational, gcd, rational, squarefree_part
from .sequences import SequenceSpec, generate, spec, verify_relation
from .stability import (
    SplitPoly,
    StabilityCertificate,
    cross_check_oracle,
    interlace_check,
    is_weakly_hurwitz,
    isolate_extreme_roots,
    nonvanishing_halfplane,
    rotate,
    sturm_real_count,
    all_roots_real,
)
from .expressions import (
    ExprRequest,
    build_expression,
    extended_laguerre,
    extended_turan,
    fisk_expression,
    turan,
    wronskian,
)

__version__ = "0.1.0"

__all__ = [
    "Poly",
    "Rational",
    "rational",
    "gcd",
    "squarefree_part",
    "SequenceSpec",
    "spec",
    "generate",
    "verify_relation",
    "SplitPoly",
    "StabilityCertificate",
    "rotate",
    "is_weakly_hurwitz",
    "cross_check_oracle",
    "interlace_check",
    "isolate_extreme_roots",
    "nonvanishing_halfplane",
    "sturm_real_count",
    "all_roots_real",
    "ExprRequest",
    "build_expression",
    "turan",
    "extended_turan",
    "extended_laguerre",
    "wronskian",
    "fisk_expression",
]
