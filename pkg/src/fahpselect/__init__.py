"""Group decision support engine for contractor and tender evaluation.

The technical stage scores alternatives with fuzzy pairwise comparisons
(triangular fuzzy numbers, geometric-mean weights, consistency control with
revision feedback); the financial stage awards the contract to the lowest
qualified bid. A workflow service and CLI wrap the pipeline end to end.
"""

from .casestudy import (
    CaseStudy,
    CaseStudyRun,
    ProjectConfig,
    case_study_matrices,
    load_bids,
    load_case_study,
    load_dossiers,
    load_hierarchy,
    load_judgments,
    load_project,
    run_case_study,
)
from .consistency import (
    DEFAULT_GAMMA,
    DR_ACCEPT,
    DR_REJECT_AND_MODIFY,
    IR_ACCEPTED,
    IR_REJECTED,
    MAX_GAMMA,
    RANDOM_INDEX,
    ConsistencyReport,
    GradeRef,
    RevisionHint,
    consistency_index,
    consistency_ratio,
    evaluate_consistency,
    lambda_max,
    random_index,
    revision_hints,
)
from .errors import (
    DegenerateWeights,
    DimensionMismatch,
    DuplicatePair,
    FahpError,
    IncompleteCoverage,
    IncompleteJudgments,
    InvalidHierarchy,
    InvalidThreshold,
    LabelMismatch,
    MissingBids,
    MissingBidSecurity,
    MissingPair,
    NonPositiveComponent,
    NoQualifiedBidders,
    UnknownContractor,
    UnknownDecisionMaker,
    UnknownElement,
    UnknownGrade,
    UnsupportedDimension,
    WrongState,
)
from .financial import (
    DEFAULT_SECURITY_THRESHOLD_MINOR,
    Bid,
    BidRow,
    FinancialResult,
    bid_security_required,
    compute_differences,
    evaluate_bids,
    select_winner,
)
from .hierarchy import (
    CRITERIA_CONTEXT,
    BidderDossier,
    ComparisonContext,
    DecisionHierarchy,
    PrescreenOutcome,
    alternatives_context,
    prescreen_mandatory,
    subcriteria_context,
)
from .matrices import (
    CrispMatrix,
    FuzzyComparisonMatrix,
    JudgmentEntry,
    JudgmentSubmission,
    MatrixValidation,
    Violation,
    aggregate_experts,
    defuzzify_matrix,
    matrix_from_submission,
    validate_matrix,
)
from .money import format_amount, parse_amount
from .scale import (
    SCALE,
    LinguisticGrade,
    grade,
    grade_by_saaty,
    grade_tfn,
    nearest_grade,
)
from .synthesis import (
    RankedAlternative,
    ScreeningOutcome,
    SynthesisResult,
    aggregated_local_weights,
    alternative_global_weight,
    final_weights,
    global_subcriterion_weights,
    rank,
    screen,
    synthesize,
)
from .tfn import TFN
from .weights import (
    FuzzyWeightVector,
    WeightVector,
    crisp_weights,
    fuzzy_weight_vector,
    local_weights,
    normalize,
    row_geometric_means,
)

__version__ = "0.1.0"

__all__ = [
    # fuzzy numbers and the linguistic scale
    "TFN",
    "SCALE",
    "LinguisticGrade",
    "grade",
    "grade_by_saaty",
    "grade_tfn",
    "nearest_grade",
    # judgment matrices
    "FuzzyComparisonMatrix",
    "CrispMatrix",
    "JudgmentEntry",
    "JudgmentSubmission",
    "MatrixValidation",
    "Violation",
    "matrix_from_submission",
    "validate_matrix",
    "aggregate_experts",
    "defuzzify_matrix",
    # weight derivation
    "FuzzyWeightVector",
    "WeightVector",
    "row_geometric_means",
    "fuzzy_weight_vector",
    "crisp_weights",
    "normalize",
    "local_weights",
    # consistency control
    "RANDOM_INDEX",
    "DEFAULT_GAMMA",
    "MAX_GAMMA",
    "IR_REJECTED",
    "IR_ACCEPTED",
    "DR_REJECT_AND_MODIFY",
    "DR_ACCEPT",
    "ConsistencyReport",
    "GradeRef",
    "RevisionHint",
    "random_index",
    "lambda_max",
    "consistency_index",
    "consistency_ratio",
    "evaluate_consistency",
    "revision_hints",
    # hierarchy and prescreen
    "CRITERIA_CONTEXT",
    "subcriteria_context",
    "alternatives_context",
    "ComparisonContext",
    "DecisionHierarchy",
    "BidderDossier",
    "PrescreenOutcome",
    "prescreen_mandatory",
    # synthesis, ranking, screening
    "SynthesisResult",
    "RankedAlternative",
    "ScreeningOutcome",
    "global_subcriterion_weights",
    "alternative_global_weight",
    "final_weights",
    "rank",
    "screen",
    "synthesize",
    "aggregated_local_weights",
    # money and the financial stage
    "parse_amount",
    "format_amount",
    "DEFAULT_SECURITY_THRESHOLD_MINOR",
    "Bid",
    "BidRow",
    "FinancialResult",
    "bid_security_required",
    "compute_differences",
    "select_winner",
    "evaluate_bids",
    # the shipped case study
    "CaseStudy",
    "CaseStudyRun",
    "ProjectConfig",
    "load_project",
    "load_hierarchy",
    "load_dossiers",
    "load_bids",
    "load_judgments",
    "load_case_study",
    "case_study_matrices",
    "run_case_study",
    # errors
    "FahpError",
    "NonPositiveComponent",
    "UnknownGrade",
    "MissingPair",
    "DuplicatePair",
    "UnknownElement",
    "DimensionMismatch",
    "LabelMismatch",
    "DegenerateWeights",
    "UnsupportedDimension",
    "InvalidThreshold",
    "InvalidHierarchy",
    "IncompleteCoverage",
    "IncompleteJudgments",
    "UnknownContractor",
    "MissingBids",
    "MissingBidSecurity",
    "NoQualifiedBidders",
    "UnknownDecisionMaker",
    "WrongState",
]
