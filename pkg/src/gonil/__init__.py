"""Exact-arithmetic toolkit for metric nilpotent Lie algebras.

Represents nilpotent Lie algebras with rational structure constants and a
nondegenerate symmetric bilinear form, certifies the geodesic-orbit property
by exact linear feasibility, and reduces algebras whose form degenerates on
the derived algebra through the two-dimensional double-extension quotient.
"""

from gonil.catalog import (
    EXAMPLE_NAMES,
    CatalogError,
    NamedExample,
    build_example,
    verify_paper_example,
)
from gonil.double_ext import (
    DegeneracyCase,
    DegeneracyTag,
    ExtensionData,
    ExtensionDataError,
    QuotientResult,
    ReductionError,
    ReductionWitness,
    classify_degeneracy,
    extend2,
    reduce,
    reduction_witness,
)
from gonil.go_engine import (
    GOAuditReport,
    GOCertificate,
    GOEngineError,
    LinearGOCertificate,
    NecessaryConditionReport,
    go_certificate_at,
    go_random_audit,
    linear_go_certificate,
    necessary_condition_check,
)
from gonil.io import FormatError, load_algebra, save_algebra
from gonil.isotropy import (
    OperatorSpace,
    derivation_space,
    is_adh_invariant,
    isotropy_algebra,
    skew_space,
)
from gonil.lie import (
    EngelError,
    JacobiError,
    LieAlgebra,
    NotNilpotentError,
    bracket_subspaces,
    center,
    centralizer,
    derived_series,
    engel_flag,
    is_ideal,
    jacobi_defect,
    lower_central_series,
    nilpotency_step,
)
from gonil.linalg import (
    DimensionMismatch,
    Matrix,
    SignatureTriple,
    Subspace,
    kernel,
    rref,
    solve_linear,
    symmetric_signature,
)
from gonil.metric import (
    MetricLieAlgebra,
    PreconditionError,
    SymForm,
    orth_complement,
    quotient_form,
    radical_of_restriction,
    restrict_form,
)
from gonil.normal_forms import (
    IwasawaFamily,
    NormalFormError,
    iwasawa_nilpotent_basis,
    maximal_abelian_family,
    membership_in_family,
)

__all__ = [
    "CatalogError",
    "DegeneracyCase",
    "DegeneracyTag",
    "DimensionMismatch",
    "EngelError",
    "EXAMPLE_NAMES",
    "ExtensionData",
    "ExtensionDataError",
    "FormatError",
    "GOAuditReport",
    "GOCertificate",
    "GOEngineError",
    "IwasawaFamily",
    "JacobiError",
    "LieAlgebra",
    "LinearGOCertificate",
    "Matrix",
    "MetricLieAlgebra",
    "NamedExample",
    "NecessaryConditionReport",
    "NormalFormError",
    "NotNilpotentError",
    "OperatorSpace",
    "PreconditionError",
    "QuotientResult",
    "ReductionError",
    "ReductionWitness",
    "SignatureTriple",
    "Subspace",
    "SymForm",
    "bracket_subspaces",
    "build_example",
    "center",
    "centralizer",
    "classify_degeneracy",
    "derivation_space",
    "derived_series",
    "engel_flag",
    "extend2",
    "go_certificate_at",
    "go_random_audit",
    "is_adh_invariant",
    "is_ideal",
    "isotropy_algebra",
    "iwasawa_nilpotent_basis",
    "jacobi_defect",
    "kernel",
    "linear_go_certificate",
    "load_algebra",
    "lower_central_series",
    "maximal_abelian_family",
    "membership_in_family",
    "necessary_condition_check",
    "nilpotency_step",
    "orth_complement",
    "quotient_form",
    "radical_of_restriction",
    "reduce",
    "reduction_witness",
    "restrict_form",
    "rref",
    "save_algebra",
    "skew_space",
    "solve_linear",
    "symmetric_signature",
    "verify_paper_example",
]

__version__ = "0.1.0"
