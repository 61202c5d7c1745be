"""Exact su(3) irreducible-representation matrices.

Given nonnegative integers (p, q), this package constructs the eight basis
matrices {T+, T-, T3, U+, U-, U3, V+, V-} of the d-dimensional irrep,
d = (p+1)(q+1)(p+q+2)/2, with every entry an exact sum of rational
multiples of square roots, and verifies the su(3) algebra on them.
"""

from .radical import RadicalSum, Rational, sqrt_of_rational
from .matrices import RadMatrix, commutator
from .structure import (
    BlockLayout,
    StateLabel,
    TSpinList,
    block_layout,
    cap_start,
    dimension,
    state_labels,
    tspin_list,
    u3_leads,
    weight_multiplicities,
)
from .su2 import ladder_coefficient, spin_block
from .unknowns import ConsistencyError, Region, block_unknown_squares, region_of
from .generators import (
    ComplexMatrix,
    GellMannSet,
    GeneratorSet,
    admissible_blocks,
    build_generator_set,
    build_t_matrices,
    build_u3,
    build_uplus_vplus,
    to_gell_mann,
)
from .verify import (
    CheckReport,
    RelationCheck,
    SweepRow,
    SweepSummary,
    casimir_eigenvalue,
    check_casimir,
    check_commutators,
    check_structure,
    compare_with_oracle,
    oracle_solve,
    sweep,
    verify_irrep,
)

__all__ = [
    "BlockLayout",
    "CheckReport",
    "ComplexMatrix",
    "ConsistencyError",
    "GellMannSet",
    "GeneratorSet",
    "RadMatrix",
    "RadicalSum",
    "Rational",
    "Region",
    "RelationCheck",
    "StateLabel",
    "SweepRow",
    "SweepSummary",
    "TSpinList",
    "admissible_blocks",
    "block_layout",
    "block_unknown_squares",
    "build_generator_set",
    "build_t_matrices",
    "build_u3",
    "build_uplus_vplus",
    "cap_start",
    "casimir_eigenvalue",
    "check_casimir",
    "check_commutators",
    "check_structure",
    "commutator",
    "compare_with_oracle",
    "dimension",
    "ladder_coefficient",
    "oracle_solve",
    "region_of",
    "spin_block",
    "sqrt_of_rational",
    "state_labels",
    "sweep",
    "to_gell_mann",
    "tspin_list",
    "u3_leads",
    "verify_irrep",
    "weight_multiplicities",
]
