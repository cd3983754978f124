"""growthlab: exact growth statistics of tensor powers over diagram monoids.

The library computes, entirely in exact rational arithmetic, the composition
length of tensor powers of modules over the planar diagram monoids (planar
rook, Temperley-Lieb, Motzkin), the multiplicity of each simple constituent,
the asymptotic constants for lengths and summand counts, and the fusion
graphs driving them — and every closed form is cross-checked against a
brute-force oracle that works directly with diagrams.
"""

from .diagrams import (
    Diagram,
    Family,
    GreenData,
    class_idempotent,
    compose,
    enumerate_diagrams,
    flip,
    green_data,
    identity_diagram,
    make_diagram,
    rank,
    rank_labels,
)
from .errors import (
    DimensionError,
    InputError,
    InternalCheckError,
    SingularMatrixError,
    VerificationError,
)
from .fusion import (
    FusionGraph,
    fusion_matrix,
    power_multiplicities,
    realized_n0,
    scc_analysis,
    spectral_check,
    to_dot,
)
from .growth import (
    ExpSum,
    GroupClassData,
    ModuleSpec,
    MonoidClassData,
    an_constant,
    convergence_report,
    evaluate,
    general_length_series,
    idempotent_multiplicity,
    involution_sum,
    leading_term,
    length_series,
    linear_monoid_constant,
    m0_upper_bound,
    module_spec,
    multiplicity_series,
    n0_upper_bound,
)
from .linalg import Mat, inverse, kernel_and_rank, mat_mul, mat_pow
from .tables import (
    CHAR0_MO,
    CHAR0_TL,
    INFINITY,
    CharTable,
    DecompositionMatrix,
    PLParams,
    ancestorless,
    cell_inverse,
    cell_table,
    decomposition_matrix,
    group_injective,
    pl_digits,
    pl_support,
    projective_table,
    reflections,
    simple_table,
    trivial_label,
)

__version__ = "0.1.0"

__all__ = [
    "CHAR0_MO",
    "CHAR0_TL",
    "CharTable",
    "DecompositionMatrix",
    "Diagram",
    "DimensionError",
    "ExpSum",
    "Family",
    "FusionGraph",
    "GreenData",
    "GroupClassData",
    "INFINITY",
    "InputError",
    "InternalCheckError",
    "Mat",
    "ModuleSpec",
    "MonoidClassData",
    "PLParams",
    "SingularMatrixError",
    "VerificationError",
    "an_constant",
    "ancestorless",
    "cell_inverse",
    "cell_table",
    "class_idempotent",
    "compose",
    "convergence_report",
    "decomposition_matrix",
    "enumerate_diagrams",
    "evaluate",
    "flip",
    "fusion_matrix",
    "general_length_series",
    "green_data",
    "group_injective",
    "idempotent_multiplicity",
    "identity_diagram",
    "inverse",
    "involution_sum",
    "kernel_and_rank",
    "leading_term",
    "length_series",
    "linear_monoid_constant",
    "m0_upper_bound",
    "make_diagram",
    "mat_mul",
    "mat_pow",
    "module_spec",
    "multiplicity_series",
    "n0_upper_bound",
    "pl_digits",
    "pl_support",
    "power_multiplicities",
    "projective_table",
    "rank",
    "rank_labels",
    "realized_n0",
    "reflections",
    "scc_analysis",
    "simple_table",
    "spectral_check",
    "to_dot",
    "trivial_label",
]
