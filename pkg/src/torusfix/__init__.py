"""Exact fixed-point counting and growth classification for endomorphisms
of two-dimensional complex tori."""

from .behavior import B1, B2, B3, BehaviorReport, classify, mahler_measure_interval
from .endomorphisms import (
    AnalyticRep,
    RationalRep,
    char_poly_rational,
    fix_count,
    fix_sequence,
)
from .errors import (
    InvalidEndomorphismError,
    InvalidStructureError,
    NonIntegralError,
    NotDivisionAlgebraError,
    TorusFixError,
    ZeroEndomorphismError,
    ZeroNormError,
)
from .algebras import (
    CMElement,
    CMFieldDesc,
    QuaternionAlgebraDesc,
    QuaternionElement,
    RealQuadElement,
    builtin_examples,
    cm_classify,
    cm_fix,
    find_small_eigenvalue_parameter,
    mcmullen_family,
    periodic_eigenvalue_table,
    quat_classify,
    quat_fix,
    quaternion_element,
    rm_classify,
    rm_fix,
    sl2_family,
)
from .polynomials import IntPolynomial, parse_poly, serialize_poly
from .unitcircle import CharPolyQuartic, EigenvalueClassification, count_roots_by_modulus

__all__ = [
    "B1",
    "B2",
    "B3",
    "AnalyticRep",
    "BehaviorReport",
    "CharPolyQuartic",
    "CMElement",
    "CMFieldDesc",
    "EigenvalueClassification",
    "IntPolynomial",
    "InvalidEndomorphismError",
    "InvalidStructureError",
    "NonIntegralError",
    "NotDivisionAlgebraError",
    "QuaternionAlgebraDesc",
    "QuaternionElement",
    "RationalRep",
    "RealQuadElement",
    "TorusFixError",
    "ZeroEndomorphismError",
    "ZeroNormError",
    "builtin_examples",
    "char_poly_rational",
    "classify",
    "cm_classify",
    "cm_fix",
    "count_roots_by_modulus",
    "find_small_eigenvalue_parameter",
    "fix_count",
    "fix_sequence",
    "mahler_measure_interval",
    "mcmullen_family",
    "parse_poly",
    "periodic_eigenvalue_table",
    "quat_classify",
    "quat_fix",
    "quaternion_element",
    "rm_classify",
    "rm_fix",
    "serialize_poly",
    "sl2_family",
]
