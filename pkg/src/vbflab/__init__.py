"""vbflab: analysis of vectorial Boolean functions F: F2^n -> F2^m.

Component balancedness, embedding (injectivity) detection via Fourier
identities, bent/semi-bent/partially-bent classification, restricted
derivatives of square maps, seeded embedding search, and a verification
suite of exhaustive and sampled statement checks.
"""

from .apn import (
    RestrictedDerivative,
    algebraic_degree,
    apn_via_restricted_derivatives,
    check_cubic_apn_corollary,
    differential_uniformity,
    is_apn,
    power_map_table,
    restricted_derivative,
    restriction_reports,
)
from .boolean_core import (
    AnfPolynomial,
    AnfSyntaxError,
    BooleanFunction,
    anf_from_truth_table,
    degree,
    parse_anf,
    render_anf,
    truth_table_from_anf,
    weight,
)
from .search import SearchConfig, SearchHit, lower_bound, search, upper_bound
from .spectral import (
    LinearStructureSpace,
    WalshSpectrum,
    classification_tags,
    derivative,
    fourier_coefficient,
    is_balanced,
    is_bent,
    is_partially_bent,
    is_semi_bent,
    linear_structures,
    nonlinearity,
    partially_bent_oracle,
    walsh_transform,
)
from .statements import (
    CHECKERS,
    FalsificationError,
    StatementVerdict,
    check_all_statements,
    check_statement,
)
from .vectorial import (
    Affinity,
    AnalysisReport,
    ComponentAnalysis,
    VectorialBooleanFunction,
    analyze,
    apply_affinities,
    balanced_set,
    collision_count,
    component,
    constant_set,
    coordinate,
    from_coordinates,
    image_is_affine_subspace,
    image_size,
    is_embedding,
    preimage_identity_check,
    report_to_dict,
    sum_sq_fourier,
    vbf_from_dict,
    vbf_to_dict,
)
from .verify import SuiteResult, VerifyConfig, run_suites

__version__ = "1.0.0"

__all__ = [
    "Affinity",
    "AnalysisReport",
    "AnfPolynomial",
    "AnfSyntaxError",
    "BooleanFunction",
    "CHECKERS",
    "ComponentAnalysis",
    "FalsificationError",
    "LinearStructureSpace",
    "RestrictedDerivative",
    "SearchConfig",
    "SearchHit",
    "StatementVerdict",
    "SuiteResult",
    "VectorialBooleanFunction",
    "VerifyConfig",
    "WalshSpectrum",
    "algebraic_degree",
    "analyze",
    "anf_from_truth_table",
    "apn_via_restricted_derivatives",
    "apply_affinities",
    "balanced_set",
    "check_all_statements",
    "check_cubic_apn_corollary",
    "check_statement",
    "classification_tags",
    "collision_count",
    "component",
    "constant_set",
    "coordinate",
    "degree",
    "derivative",
    "differential_uniformity",
    "fourier_coefficient",
    "from_coordinates",
    "image_is_affine_subspace",
    "image_size",
    "is_apn",
    "is_balanced",
    "is_bent",
    "is_embedding",
    "is_partially_bent",
    "is_semi_bent",
    "linear_structures",
    "lower_bound",
    "nonlinearity",
    "parse_anf",
    "partially_bent_oracle",
    "power_map_table",
    "preimage_identity_check",
    "render_anf",
    "report_to_dict",
    "restricted_derivative",
    "restriction_reports",
    "run_suites",
    "search",
    "sum_sq_fourier",
    "truth_table_from_anf",
    "upper_bound",
    "vbf_from_dict",
    "vbf_to_dict",
    "walsh_transform",
    "weight",
]
