"""Quantumness of pure-state quantum ensembles via coherence of the Gram matrix.

The Gram matrix of an ensemble {(p_i, |psi_i>)} is PSD with unit trace, so
it can be treated as a quantum state; how coherent that state is (under the
alpha-z relative Renyi divergence) quantifies how far the ensemble is from
a classical, mutually orthogonal one.
"""

from .coherence import (
    AlphaZ,
    CoherenceResult,
    IncoherentState,
    OptimizerConfig,
    Validity,
    coherence_closed_z1,
    coherence_limit_alpha1,
    coherence_optimized,
    divergence,
    oracle_grid,
)
from .curves import (
    CrossingResult,
    SweepSpec,
    find_crossings,
    records_to_csv,
    reference_curve,
    sweep_records,
)
from .ensembles import (
    CANONICAL_NAMES,
    Ensemble,
    GramMatrix,
    HadamardProduct,
    PureState,
    apply_unitary,
    average_state,
    canonical,
    cross_gram,
    gram,
    hadamard_product,
    parse_ensemble,
    serialize_ensemble,
    tensor,
)
from .errors import (
    DimensionMismatch,
    DimensionTooLarge,
    GramqError,
    InvalidParameter,
    InvariantViolation,
    LengthMismatch,
    NoConvergence,
    NotHermitian,
    NotUnitary,
    ParameterOutOfRange,
    ParseError,
    SupportViolation,
    UnknownName,
)
from .matfun import (
    DensityMatrix,
    SpectralDecomposition,
    Tolerances,
    eigh,
    f_alpha_z,
    mat_power_support,
    von_neumann_entropy,
)
from .quantifiers import (
    PovmCandidate,
    QuantumnessRecord,
    accessible_info,
    closed_form_reference,
    evaluate_quantumness,
    holevo_chi,
    povm_from_vectors,
    q_commutator,
    q_commutator_weighted,
    q_hol,
    q_l1,
    quantumness,
    quantumness_normalized,
    quantumness_record,
    reference_constants,
)

__version__ = "0.1.0"

__all__ = [
    "AlphaZ",
    "CANONICAL_NAMES",
    "CoherenceResult",
    "CrossingResult",
    "DensityMatrix",
    "DimensionMismatch",
    "DimensionTooLarge",
    "Ensemble",
    "GramMatrix",
    "GramqError",
    "HadamardProduct",
    "IncoherentState",
    "InvalidParameter",
    "InvariantViolation",
    "LengthMismatch",
    "NoConvergence",
    "NotHermitian",
    "NotUnitary",
    "OptimizerConfig",
    "ParameterOutOfRange",
    "ParseError",
    "PovmCandidate",
    "PureState",
    "QuantumnessRecord",
    "SpectralDecomposition",
    "SupportViolation",
    "SweepSpec",
    "Tolerances",
    "UnknownName",
    "Validity",
    "accessible_info",
    "apply_unitary",
    "average_state",
    "canonical",
    "closed_form_reference",
    "coherence_closed_z1",
    "coherence_limit_alpha1",
    "coherence_optimized",
    "cross_gram",
    "divergence",
    "eigh",
    "evaluate_quantumness",
    "f_alpha_z",
    "find_crossings",
    "gram",
    "hadamard_product",
    "holevo_chi",
    "mat_power_support",
    "oracle_grid",
    "parse_ensemble",
    "povm_from_vectors",
    "q_commutator",
    "q_commutator_weighted",
    "q_hol",
    "q_l1",
    "quantumness",
    "quantumness_normalized",
    "quantumness_record",
    "records_to_csv",
    "reference_constants",
    "reference_curve",
    "serialize_ensemble",
    "sweep_records",
    "tensor",
    "von_neumann_entropy",
]
