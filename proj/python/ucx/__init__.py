"""Bounded-enumeration complexity estimates for n-qubit unitaries."""

from ._core import (
    REPORT_SCHEMA,
    UcxError,
    __version__,
    codewords,
    decompose,
    ensemble,
    enumerate_programs,
    estimate_complexity,
    estimate_state_complexity,
    fidelity,
    haar_state,
    haar_unitary,
    is_directly_computable,
    kraft_sum,
    pauli_labels,
    pauli_matrix,
    penalty_from_fidelity,
    relation,
    shannon_fano_lengths,
    theorem1_check,
)

__all__ = [
    "REPORT_SCHEMA",
    "UcxError",
    "__version__",
    "codewords",
    "decompose",
    "ensemble",
    "enumerate_programs",
    "estimate_complexity",
    "estimate_state_complexity",
    "fidelity",
    "haar_state",
    "haar_unitary",
    "is_directly_computable",
    "kraft_sum",
    "pauli_labels",
    "pauli_matrix",
    "penalty_from_fidelity",
    "relation",
    "shannon_fano_lengths",
    "theorem1_check",
]
