"""Exact analysis of torus representations through their integer weight systems.

The package decides decomposability, enumerates isotropy strata and the
orbit-space boundary, verifies the reflection dimension identity for
involutive extensions, concludes cohomogeneity where the structure forces
it, and numerically audits the exceptional SO(2) x SO(n) family.
"""

from .family import (
    FamilySpec,
    OrbitProbe,
    ToleranceInstability,
    action_matrix,
    circle_rep_is_polar,
    cohomogeneity_numeric,
    family_report,
    lrs_quotient_dim,
    principal_isotropy_algebra_dim,
    verify_family,
)
from .involutions import (
    CohomogeneityVerdict,
    InvolutionSplit,
    InvolutiveExtension,
    PropertyViolation,
    VERDICT_CHM_4,
    VERDICT_EXCEPTIONAL,
    VERDICT_K_PLUS_2,
    block_involution,
    centralizer_dim,
    codim_bounds_check,
    conclude_cohomogeneity,
    conjugation_extension,
    fixed_space_dim,
    infinitesimal_action,
    involutive_extension,
    is_nice_involution,
    nontriviality_check,
    split_by_involution,
    validate,
    weight_class_pairing,
)
from .lattice import (
    IntMatrix,
    RationalMatrix,
    hnf,
    in_sublattice,
    rank,
    right_kernel_basis,
    snf,
)
from .splitting import (
    BlockDecomposition,
    DecomposabilityResult,
    SplitWitness,
    check_line_bound,
    find_split_witness,
    indecomposable_blocks,
    induced_lines,
    is_decomposable,
)
from .strata import (
    ReductionCandidacy,
    StratumRecord,
    boundary_empty,
    enumerate_strata,
    has_trivial_copolarity,
    minimal_reduction_candidate,
)
from .sweeps import SweepResult, enumerate_weight_systems, order_two_matrices, run_sweep
from .weights import IsotypicalComponent, WeightSystem, primitive, sign_canonical

__version__ = "0.1.0"
