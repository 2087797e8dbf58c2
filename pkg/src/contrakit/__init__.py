"""Contractions of commutative algebras, Hopf algebras and Lie algebras along involutions."""

from .coeff import QQ, Field, field_make, prime_field, quadratic_ext, rationals
from .contraction import (
    ContractionPresentation,
    DoubleContraction,
    Verdict,
    chart_gluing,
    contract,
    double_contract,
    fiber_at_unit,
    fiber_at_zero,
    fiber_descent_check,
    flat_base_change_check,
    flatness_check,
    graded_fiber_check,
    localize_check,
    rees_comparison,
    surjection_check,
    tensor_compat_check,
    tensor_contraction,
    trivial_check,
    unit_fiber_iso,
)
from .errors import (
    ContrakitError,
    ExpressionError,
    FieldError,
    NotInvertibleError,
    ResourceLimitError,
    RingMismatchError,
    ValidationError,
)
from .hopf import (
    HopfData,
    cartan_motion_check,
    contract_hopf,
    contracted_axioms_check,
    sl2n_embedding_check,
    validate_hopf,
)
from .ideals import Ideal, colon, eliminate, groebner, ideal_equal, intersect, map_kernel, resource_limits, saturate
from .liecon import LieData, action_check, contract_derivation_action, contract_lie, lie_check, random_lie_data
from .poly import GREVLEX, LEX, Poly, PolyRing, parse_poly, ring_of
from .presentations import AlgebraMap, FPAlgebra, eigen_split, tensor, validate_involution

__version__ = "0.1.0"

__all__ = [
    "action_check",
    "AlgebraMap",
    "cartan_motion_check",
    "chart_gluing",
    "colon",
    "contract",
    "contract_derivation_action",
    "contract_hopf",
    "contract_lie",
    "contracted_axioms_check",
    "ContractionPresentation",
    "ContrakitError",
    "double_contract",
    "DoubleContraction",
    "eigen_split",
    "eliminate",
    "ExpressionError",
    "fiber_at_unit",
    "fiber_at_zero",
    "fiber_descent_check",
    "Field",
    "field_make",
    "FieldError",
    "flat_base_change_check",
    "flatness_check",
    "FPAlgebra",
    "graded_fiber_check",
    "GREVLEX",
    "groebner",
    "HopfData",
    "Ideal",
    "ideal_equal",
    "intersect",
    "LEX",
    "lie_check",
    "LieData",
    "localize_check",
    "map_kernel",
    "NotInvertibleError",
    "parse_poly",
    "Poly",
    "PolyRing",
    "prime_field",
    "QQ",
    "quadratic_ext",
    "random_lie_data",
    "rationals",
    "rees_comparison",
    "resource_limits",
    "ResourceLimitError",
    "ring_of",
    "RingMismatchError",
    "saturate",
    "sl2n_embedding_check",
    "surjection_check",
    "tensor",
    "tensor_compat_check",
    "tensor_contraction",
    "trivial_check",
    "unit_fiber_iso",
    "validate_hopf",
    "validate_involution",
    "ValidationError",
    "Verdict",
]
