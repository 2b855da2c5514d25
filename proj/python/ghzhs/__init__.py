"""Three-qubit states in the Pauli (Hilbert-Schmidt) decomposition, the GHZ
three-arm interferometer, and machine-checkable locality verification."""

from ._core import (
    BlockDeviation,
    CoefficientTensor,
    DensityMatrix,
    FormatError,
    GhszReport,
    IoError,
    LocalityReport,
    LocalitySweepReport,
    LocalUnitary,
    OutcomeDistribution,
    PauliString,
    PhaseSettings,
    PureState,
    RotationMatrix,
    ValidationError,
    apply_local_unitary,
    beam_splitter_unitary,
    correlation,
    decompose,
    evolve_ghz,
    ghsz_contradiction_report,
    ghz_density,
    ghz_pure,
    locality_sweep,
    outcome_label,
    partial_trace,
    pauli_string_matrix,
    pure_to_density,
    random_density,
    reconstruct,
    reconstruct_density,
    rotate_frame,
    sample_outcomes,
    su2_to_so3,
    transform_under_local_unitary,
    verify_locality,
)

__all__ = [
    "BlockDeviation",
    "CoefficientTensor",
    "DensityMatrix",
    "FormatError",
    "GhszReport",
    "IoError",
    "LocalityReport",
    "LocalitySweepReport",
    "LocalUnitary",
    "OutcomeDistribution",
    "PauliString",
    "PhaseSettings",
    "PureState",
    "RotationMatrix",
    "ValidationError",
    "apply_local_unitary",
    "beam_splitter_unitary",
    "correlation",
    "decompose",
    "evolve_ghz",
    "ghsz_contradiction_report",
    "ghz_density",
    "ghz_pure",
    "locality_sweep",
    "outcome_label",
    "partial_trace",
    "pauli_string_matrix",
    "pure_to_density",
    "random_density",
    "reconstruct",
    "reconstruct_density",
    "rotate_frame",
    "sample_outcomes",
    "su2_to_so3",
    "transform_under_local_unitary",
    "verify_locality",
]
