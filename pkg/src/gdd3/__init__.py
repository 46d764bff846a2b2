"""Group divisible designs GDD(m, n; 3, lambda) with block size 3.

Feasibility classification, cycle/triangle decompositions of K_v, the star
constructions that assemble designs from them, and an independent verifier.
"""

__version__ = "0.1.0"

from .builder import (  # noqa: E402
    NotConstructible,
    PreconditionViolated,
    build,
    build_dual_star,
    build_even_odd,
    build_odd_odd,
    build_pull_one,
    build_pull_three,
    star,
)
from .decomp import (  # noqa: E402
    CycleDecomposition,
    InfeasibleParameters,
    NoFeasibleSplit,
    SearchExhausted,
    decompose_mixed,
    feasible_mixed,
    split_across_copies,
    walecki_cycles,
)
from .design import GddDesign, GroupedPointSet  # noqa: E402
from .feasibility import (  # noqa: E402
    Classification,
    Condition,
    DesignParams,
    Method,
    OpenTag,
    Verdict,
    check_necessary,
    classify,
    gamma_set,
    lambda_max,
    residue_constraint,
)
from .triples import steiner_triple_system, threefold_triple_system  # noqa: E402
from .verify import brute_force_gdd, verify_decomposition, verify_gdd  # noqa: E402

__all__ = [
    "Classification",
    "Condition",
    "CycleDecomposition",
    "DesignParams",
    "GddDesign",
    "GroupedPointSet",
    "InfeasibleParameters",
    "Method",
    "NoFeasibleSplit",
    "NotConstructible",
    "OpenTag",
    "PreconditionViolated",
    "SearchExhausted",
    "Verdict",
    "brute_force_gdd",
    "build",
    "build_dual_star",
    "build_even_odd",
    "build_odd_odd",
    "build_pull_one",
    "build_pull_three",
    "check_necessary",
    "classify",
    "decompose_mixed",
    "feasible_mixed",
    "gamma_set",
    "lambda_max",
    "residue_constraint",
    "split_across_copies",
    "star",
    "steiner_triple_system",
    "threefold_triple_system",
    "verify_decomposition",
    "verify_gdd",
    "walecki_cycles",
]
