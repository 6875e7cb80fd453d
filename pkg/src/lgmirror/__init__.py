"""Exact state spaces and mirror maps for Landau-Ginzburg models.

The library builds A- and B-model state spaces of invertible polynomials
with finite monomial symmetry groups of the form H·K (diagonal part times
pure even permutations), computes dual polynomials, dual groups and the
non-abelian dual group, verifies the restricted mirror isomorphisms on the
untwisted-broad / narrow-diagonal corners, and reports full bigraded
dimension comparisons together with the parity-condition diagnosis.

All arithmetic is exact (rationals and phases mod 1); there are no
tolerances anywhere.
"""

from .errors import (
    CapExceededError,
    DimensionMismatchError,
    DuplicateVariableError,
    InternalError,
    LGError,
    NotAMemberError,
    NotAdmissibleAError,
    NotAdmissibleBError,
    NotDiagonalError,
    NotDiagonalSectorError,
    NotFermatError,
    NotHKProductError,
    NotInvertibleError,
    NotPurePermutationsError,
    NotSquareError,
    OddPermutationError,
    ParseError,
    SingularMatrixError,
    TheoremViolationError,
    WeightOutOfRangeError,
)
from .polynomial import (
    AtomicBlock,
    InvertiblePolynomial,
    classify_atoms,
    compute_weights,
    parse_polynomial,
    transpose,
)
from .symmetry import (
    FixedLocus,
    MonomialSymmetry,
    SymmetryGroup,
    closure,
    diagonal_group,
    exponential_grading,
    is_symmetry,
    mod1,
    parse_generator,
    sl_subgroup,
)
from .duality import (
    HKDecomposition,
    decompose_hk,
    dual_group,
    nonabelian_dual,
    parity_condition,
)
from .state_space import (
    GradedBasisVector,
    GradedSpace,
    HodgeDiamond,
    Sector,
    SectorMap,
    a_bidegree,
    a_state_space,
    b_bidegree,
    b_state_space,
    build_sector,
    hodge_diamond,
    invariant_basis,
    monomial_label,
    sector_map,
    vector_label,
)
from .mirror import (
    MirrorReport,
    RestrictedMirror,
    Verdict,
    full_comparison,
    narrow_diagonal_set,
    restricted_mirror,
    unprojected_mirror,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
