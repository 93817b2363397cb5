"""Long regularly-spaced and convex subsequences of integer sets.

Exact solvers for R_L(A) and C(A), extraction algorithms that produce long
2-regular and convex subsequences with provenance, and constructions of sets
that have none.
"""

from .core import (
    CONVEX,
    Colouring,
    ConvexityMarker,
    Covering,
    ExtractionResult,
    RegSeqError,
    RegularityWitness,
    SortedSeq,
    TraceStep,
    check_convex,
    check_regular,
    difference_set,
    dilate,
    regularity_witness,
    translate,
)
from .solvers import SolveResult, brute_convex, brute_r_l, exact_convex, exact_r_l
from .covering import build_covering, cover_regular, extract_from_covering, refine_regularity
from .extractors import (
    FiberDecomposition,
    TranslateSet,
    colouring_extract,
    dense_diff_extract,
    regular_to_convex,
    ruzsa_cover,
    sparse_diff_extract,
)
from .constructions import (
    CantorStructure,
    build_cantor,
    build_colouring,
    build_density_example,
    build_difference_example,
)

__version__ = "0.1.0"

__all__ = [
    "CONVEX",
    "Colouring",
    "ConvexityMarker",
    "Covering",
    "ExtractionResult",
    "RegSeqError",
    "RegularityWitness",
    "SortedSeq",
    "TraceStep",
    "check_convex",
    "check_regular",
    "difference_set",
    "dilate",
    "regularity_witness",
    "translate",
    "SolveResult",
    "brute_convex",
    "brute_r_l",
    "exact_convex",
    "exact_r_l",
    "build_covering",
    "cover_regular",
    "extract_from_covering",
    "refine_regularity",
    "FiberDecomposition",
    "TranslateSet",
    "colouring_extract",
    "dense_diff_extract",
    "regular_to_convex",
    "ruzsa_cover",
    "sparse_diff_extract",
    "CantorStructure",
    "build_cantor",
    "build_colouring",
    "build_density_example",
    "build_difference_example",
]
