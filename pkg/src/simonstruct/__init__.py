"""Classical simulation and verification toolkit for linear-structure search.

Simulates the measurement statistics of period-finding runs on Boolean
functions, recovers linear structures and periods from the sampled
vectors, and cross-checks every probabilistic route against exact
transform-based oracles.
"""

from .boolfn import (
    Anf,
    MultiTruthTable,
    PlantSpec,
    TruthTable,
    anf_of,
    derivative,
    format_anf,
    format_multi_truth_table,
    format_truth_table,
    parse_anf,
    parse_multi_truth_table,
    parse_truth_table,
    plant_periods,
    plant_r_type,
    plant_structure,
    tt_of,
)
from .gf2 import (
    BitMatrix,
    BitVector,
    SpanTracker,
    Subspace,
    in_span,
    null_space_basis,
    rank,
    span_equal,
    span_of,
)
from .oracle import (
    AutocorrSpectrum,
    RTypeHit,
    StructureSets,
    VerifyResult,
    anchored_confirm,
    autocorrelation,
    brute_periods,
    brute_structures,
    r_type_scan,
    sampled_verify,
    violation_points,
)
from .probmodel import (
    ProbTable,
    TrialsBound,
    p_full,
    p_full_exact,
    prob_table,
    pseudo_confirm_prob,
    q,
    q_direct,
    q_exact,
    rank_success_rate,
    required_trials,
    success_prob,
    success_prob_exact,
)
from .recover import (
    PeriodReport,
    RunConfig,
    StructureReport,
    find_periods,
    find_structure_iterative,
    find_structure_simple,
)
from .rng import DEFAULT_SEED, as_rng
from .sat3 import (
    Cnf3,
    ProductEquationSystem,
    cnf_satisfiable,
    equisat_check,
    format_dimacs,
    parse_dimacs,
    reduce_cnf,
    solve_brute,
    theorem4_verify,
)
from .simulate import (
    CollapseOutcome,
    YDistribution,
    collapse,
    quantum_solve,
    sample_y,
    simon_round,
    y_distribution,
)
from .symbolic import (
    ClassifierVerdict,
    SymbolicCondition,
    classify_top,
    derivative_anf,
    lemma1_check,
    solution_mask,
    theorem2_system,
)
from .walsh import mobius_transform, walsh_hadamard, xor_permute

__version__ = "0.1.0"
