"""Splitting and element splitting of matroids representable over GF(p)."""

from .errors import *  # noqa: F401,F403
from .ff import (
    FieldElement,
    FieldMatrix,
    PrimeModulus,
    dependency_coefficients,
    fe_inv,
    mat_rank_of_columns,
    mat_rref,
)
from .io import MatrixDocument, RunReport, emit_matrix_file, emit_report, load_matrix, parse_matrix_file
from .matroid import (
    CircuitSet,
    Separation,
    VectorMatroid,
    bases,
    circuits,
    circuits_through,
    find_k_separation,
    independent_sets,
    is_connected,
    is_independent,
    is_n_connected,
    matroid_from_matrix,
)
from .splitting import (
    CircuitClass,
    SplitSpec,
    Tag,
    classify_circuit,
    element_split,
    is_trivial_splitting,
    np_circuits,
    predicted_bases,
    predicted_circuits,
    predicted_independents,
    predicted_rank,
    split,
)
from .structure import (
    Decomposition,
    TheoremReport,
    circuit_decompositions,
    find_ep_decomposition,
    is_eulerian,
    is_hamiltonian,
    verify_cor_4_3,
    verify_prop_4_1,
    verify_prop_4_2,
    verify_thm_3_1,
    verify_thm_3_2,
)

__version__ = "0.1.0"
