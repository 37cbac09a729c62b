"""Exact computations in finite-dimensional lattice-ordered algebras.

The ambient space is R^n with coordinatewise order; the product is given
by a nonnegative structure tensor over exact rationals.  The package
covers axiom verification, order idempotents and band projections, the
ideal generated by the identity with its C(K) picture, characteristic
polynomials and spectra of multiplication operators, and inner
projections built from orthogonal families.
"""

from .algebra import (
    AlgebraSpec,
    AxiomReport,
    IdentityResult,
    check_submultiplicativity,
    find_identity,
    lp_sum,
)
from .center import (
    CKRepresentation,
    IdealBasis,
    InverseClosedReport,
    TruncationReport,
    ck_representation,
    identity_ideal,
    in_identity_ideal,
    inverse_closed_check,
    norm_e,
    principal_ideal,
    truncation_cauchy_check,
)
from .errors import (
    CapExceededError,
    DimensionMismatchError,
    FamilyError,
    InputError,
    LatticeAlgError,
    MathViolationError,
    NoIdentityError,
    NotBandProjectionError,
    NotOrderIdempotentError,
    UnknownBuiltinError,
    UnsupportedNormError,
)
from .fixtures import BUILTIN_NAMES, BuiltinMeta, builtin, builtin_dict, builtin_meta
from .inner import (
    ENUM_CAP_DEFAULT,
    BooleanLawsReport,
    GammaSet,
    ProjectionFamily,
    boolean_laws,
    enumerate_inner,
    find_families,
    inner_bp,
    is_inner,
    validate_family,
)
from .io import (
    algebra_from_dict,
    algebra_to_dict,
    element_from_wire,
    element_to_wire,
    load_algebra,
    operator_from_wire,
    operator_to_wire,
    save_algebra,
)
from .lattice import ApproxReal, LatticeElement, NormSpec, Scalar, as_scalar, format_scalar, unit, vec, zero
from .operators import (
    OperatorMatrix,
    check_mult_commutation,
    diagonal_mask_operator,
    invert_element,
    left_mult,
    mult_op,
    op_inf,
    op_sup,
    regular_norm,
    right_mult,
    rk_oracle,
)
from .projections import (
    CommutationReport,
    EquivalenceCheck,
    GridSpec,
    OIBoolean,
    ProjectionClassification,
    check_equivalences,
    classify,
    commutation_check,
    enumerate_order_idempotents,
    is_band_projection,
    is_left_bp,
    is_order_idempotent,
    is_right_bp,
    oi_boolean,
    search_band_projections,
)
from .report import build_report
from .spectra import (
    BPSpectrumReport,
    CenterSpectrumReport,
    NumericRoot,
    ShiftedIdempotentResult,
    SpectrumResult,
    check_bp_spectrum,
    positive_spectrum_center_check,
    shifted_idempotent_check,
    spectrum,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraSpec",
    "ApproxReal",
    "AxiomReport",
    "BooleanLawsReport",
    "BPSpectrumReport",
    "BUILTIN_NAMES",
    "BuiltinMeta",
    "CapExceededError",
    "CenterSpectrumReport",
    "CKRepresentation",
    "CommutationReport",
    "DimensionMismatchError",
    "ENUM_CAP_DEFAULT",
    "EquivalenceCheck",
    "FamilyError",
    "GammaSet",
    "GridSpec",
    "IdealBasis",
    "IdentityResult",
    "InputError",
    "InverseClosedReport",
    "LatticeAlgError",
    "LatticeElement",
    "MathViolationError",
    "NoIdentityError",
    "NormSpec",
    "NotBandProjectionError",
    "NotOrderIdempotentError",
    "NumericRoot",
    "OIBoolean",
    "OperatorMatrix",
    "ProjectionClassification",
    "ProjectionFamily",
    "Scalar",
    "ShiftedIdempotentResult",
    "SpectrumResult",
    "TruncationReport",
    "UnknownBuiltinError",
    "UnsupportedNormError",
    "algebra_from_dict",
    "algebra_to_dict",
    "as_scalar",
    "boolean_laws",
    "build_report",
    "builtin",
    "builtin_dict",
    "builtin_meta",
    "check_bp_spectrum",
    "check_equivalences",
    "check_mult_commutation",
    "check_submultiplicativity",
    "ck_representation",
    "classify",
    "commutation_check",
    "diagonal_mask_operator",
    "element_from_wire",
    "element_to_wire",
    "enumerate_inner",
    "enumerate_order_idempotents",
    "find_families",
    "find_identity",
    "format_scalar",
    "identity_ideal",
    "in_identity_ideal",
    "inner_bp",
    "invert_element",
    "inverse_closed_check",
    "is_band_projection",
    "is_inner",
    "is_left_bp",
    "is_order_idempotent",
    "is_right_bp",
    "left_mult",
    "load_algebra",
    "lp_sum",
    "mult_op",
    "norm_e",
    "oi_boolean",
    "op_inf",
    "op_sup",
    "operator_from_wire",
    "operator_to_wire",
    "positive_spectrum_center_check",
    "principal_ideal",
    "regular_norm",
    "right_mult",
    "rk_oracle",
    "save_algebra",
    "search_band_projections",
    "shifted_idempotent_check",
    "spectrum",
    "truncation_cauchy_check",
    "unit",
    "validate_family",
    "vec",
    "zero",
]
