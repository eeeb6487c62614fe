"""Qubit-qutrit entanglement under uniform acceleration.

A small simulation library: build general qubit-qutrit states in the
Fano/Bloch form, push them through the three acceleration channels (qubit
accelerated, qutrit accelerated, both), quantify entanglement by negativity,
and cross-check every transcribed reference element table against the
isometry-derived channels.
"""

__version__ = "0.1.0"

from .linalg import (
    BipartiteState,
    hermitian_eigenvalues,
    partial_trace,
    partial_transpose,
    tensor,
)
from .fano import (
    FanoParams,
    GeneratorSet,
    StateReport,
    appendix_a_density,
    appendix_a_elements,
    density_to_fano,
    fano_to_density,
    generators,
    validate_state,
)
from .rindler import (
    accelerate_both,
    accelerate_qubit,
    accelerate_qutrit,
    apply_channel,
    choi_matrix,
    qubit_isometry,
    qutrit_isometry,
    rindler_param_from_physical,
)
from .entanglement import NegativityResult, is_ppt, negativity
from .families import (
    ExampleOne,
    OneParameter,
    TwoParameter,
    example_one,
    example_one_state,
    family_state,
    max_entangled_two_parameter,
    one_parameter,
    two_parameter,
)
from .crosscheck import (
    ANCHOR_TABLES,
    TABLE_IDS,
    DiscrepancyReport,
    SplitMix64,
    compare,
    evaluate_paper_table,
    random_fano_params,
    random_state,
    run_trials,
)

__all__ = [
    "BipartiteState",
    "hermitian_eigenvalues",
    "partial_trace",
    "partial_transpose",
    "tensor",
    "FanoParams",
    "GeneratorSet",
    "StateReport",
    "appendix_a_density",
    "appendix_a_elements",
    "density_to_fano",
    "fano_to_density",
    "generators",
    "validate_state",
    "accelerate_both",
    "accelerate_qubit",
    "accelerate_qutrit",
    "apply_channel",
    "choi_matrix",
    "qubit_isometry",
    "qutrit_isometry",
    "rindler_param_from_physical",
    "NegativityResult",
    "is_ppt",
    "negativity",
    "ExampleOne",
    "OneParameter",
    "TwoParameter",
    "example_one",
    "example_one_state",
    "family_state",
    "max_entangled_two_parameter",
    "one_parameter",
    "two_parameter",
    "ANCHOR_TABLES",
    "TABLE_IDS",
    "DiscrepancyReport",
    "SplitMix64",
    "compare",
    "evaluate_paper_table",
    "random_fano_params",
    "random_state",
    "run_trials",
]
