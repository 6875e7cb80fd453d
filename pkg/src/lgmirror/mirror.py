"""The mirror map between A- and B-model state spaces.

On the unprojected spaces the map exchanges monomial data and sector data:

    ⌊ ∧_{i∉I_g} x_i^{b_i} dx_i , g ⌉  ↦  ⌊ ∧_{j∈I_g} y_j^{a_j−1} dx_j , g' ⌉

for diagonal g with phases a_j/d_j, where I_g indexes the nonzero phases,
g' has phases (b_i+1)/d_i on the g-fixed coordinates and 0 elsewhere.  It
restricts to bigraded isomorphisms between the untwisted broad sector on
one side and the narrow diagonal class sums on the other, and those two
restrictions are verified here term by term.

The full bigraded comparison never forces a bijection outside those corners
(none is canonical there); it compares dimension histograms and attaches the
parity-condition diagnosis for the permutation part.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .duality import HKDecomposition, decompose_hk, dual_group, nonabelian_dual, parity_condition
from .errors import NotDiagonalError, NotDiagonalSectorError, TheoremViolationError
from .polynomial import InvertiblePolynomial
from .state_space import (
    Bidegree,
    GradedBasisVector,
    GradedSpace,
    a_state_space,
    b_state_space,
)
from .symmetry import MonomialSymmetry, SymmetryGroup


class Verdict(enum.Enum):
    BIGRADED_ISOMORPHIC = "BigradedIsomorphic"
    DIMENSIONS_MATCH_BIGRADING_FAILS = "DimensionsMatchBigradingFails"
    DIMENSION_MISMATCH = "DimensionMismatch"


def narrow_diagonal_set(h: SymmetryGroup) -> tuple[MonomialSymmetry, ...]:
    """Diagonal elements with every phase nonzero (trivial fixed locus)."""
    if not h.is_diagonal:
        raise NotDiagonalError("narrow diagonal set needs a diagonal group")
    return tuple(g for g in h if all(p != 0 for p in g.phases))


def unprojected_mirror(poly: InvertiblePolynomial,
                       exponents: tuple[int, ...],
                       g: MonomialSymmetry
                       ) -> tuple[tuple[int, ...], MonomialSymmetry]:
    """Image of one diagonal-sector term (monomial exponents, new sector).

    ``exponents`` lists the Milnor exponents over g's fixed coordinates in
    ascending coordinate order; the image exponents run over the moving
    coordinates the same way.  Applying the map twice returns the input.
    """
    if not g.is_diagonal:
        raise NotDiagonalSectorError("the unprojected map needs a diagonal sector")
    d = poly.fermat_exponents()
    fixed = [i for i in range(poly.n_vars) if g.phases[i] == 0]
    moving = [i for i in range(poly.n_vars) if g.phases[i] != 0]
    if len(exponents) != len(fixed):
        raise ValueError("one exponent per fixed coordinate required")
    phases = [Fraction(0)] * poly.n_vars
    for b, i in zip(exponents, fixed):
        if not 0 <= b <= d[i] - 2:
            raise ValueError(f"exponent {b} outside the Milnor range of x{i + 1}")
        phases[i] = Fraction(b + 1, d[i])
    image = []
    for j in moving:
        numerator = g.phases[j] * d[j]
        assert numerator.denominator == 1
        image.append(int(numerator) - 1)
    return tuple(image), MonomialSymmetry.diagonal(phases)


@dataclass(frozen=True)
class RestrictedMirror:
    """The two verified corner isomorphisms, as explicit pairings."""

    a0_to_narrow: tuple[tuple[GradedBasisVector, GradedBasisVector], ...]
    narrow_to_b0: tuple[tuple[GradedBasisVector, GradedBasisVector], ...]


def _corner_pairs(poly, a_space, b_space, h, h_dual):
    a_narrow = frozenset(narrow_diagonal_set(h))
    b_narrow = frozenset(narrow_diagonal_set(h_dual))
    a0 = [v for v in a_space.basis if v.leading[2].is_identity]
    anar = [v for v in a_space.basis if v.leading[2] in a_narrow]
    b0 = [v for v in b_space.basis if v.leading[2].is_identity]
    bnar = [v for v in b_space.basis if v.leading[2] in b_narrow]

    by_elements = {frozenset(v.sector_elements): v for v in bnar}
    pairs0 = []
    for v in a0:
        image = frozenset(unprojected_mirror(poly, exps, g)[1]
                          for _, exps, g in v.terms)
        w = by_elements.pop(image, None)
        if w is None:
            raise TheoremViolationError(
                f"untwisted vector maps to no narrow class sum: {v.terms}")
        if w.bidegree != v.bidegree:
            raise TheoremViolationError(
                f"bidegree not preserved: {v.bidegree} vs {w.bidegree}")
        pairs0.append((v, w))
    if by_elements:
        raise TheoremViolationError(
            f"{len(by_elements)} narrow class sums are not hit by the untwisted sector")

    by_monomials = {frozenset(exps for _, exps, _ in v.terms): v for v in b0}
    pairs_nar = []
    for v in anar:
        image = frozenset(unprojected_mirror(poly, exps, g)[0]
                          for _, exps, g in v.terms)
        w = by_monomials.pop(image, None)
        if w is None:
            raise TheoremViolationError(
                f"narrow class sum maps to no untwisted vector: {v.terms}")
        if w.bidegree != v.bidegree:
            raise TheoremViolationError(
                f"bidegree not preserved: {v.bidegree} vs {w.bidegree}")
        pairs_nar.append((v, w))
    if by_monomials:
        raise TheoremViolationError(
            f"{len(by_monomials)} untwisted vectors are not hit by the narrow sector")
    return RestrictedMirror(tuple(pairs0), tuple(pairs_nar))


def _build_both_sides(poly, group):
    parts = decompose_hk(group, poly)
    dual_poly = poly.transpose()
    g_star = nonabelian_dual(group, poly)
    a_space = a_state_space(poly, group)
    b_space = b_state_space(dual_poly, g_star)
    h_dual = dual_group(parts.h, poly)
    return parts, dual_poly, g_star, a_space, b_space, h_dual


def restricted_mirror(poly: InvertiblePolynomial,
                      group: SymmetryGroup) -> RestrictedMirror:
    """Build both models and verify the two corner isomorphisms.

    Raises TheoremViolationError if either fails to be a bidegree-preserving
    bijection; that would signal a bug, not a property of the input.
    """
    parts, _, _, a_space, b_space, h_dual = _build_both_sides(poly, group)
    return _corner_pairs(poly, a_space, b_space, parts.h, h_dual)


@dataclass(frozen=True)
class MirrorReport:
    """Full bigraded comparison of (W, G) against (Wᵀ, G*)."""

    poly: InvertiblePolynomial
    dual_poly: InvertiblePolynomial
    group: SymmetryGroup
    dual_group: SymmetryGroup
    hk: HKDecomposition
    a_space: GradedSpace
    b_space: GradedSpace
    restricted: RestrictedMirror
    pc_holds: bool
    pc_witness: SymmetryGroup | None
    verdict: Verdict
    mismatches: tuple[tuple[Bidegree, int, int], ...]


def full_comparison(poly: InvertiblePolynomial,
                    group: SymmetryGroup) -> MirrorReport:
    parts, dual_poly, g_star, a_space, b_space, h_dual = \
        _build_both_sides(poly, group)
    restricted = _corner_pairs(poly, a_space, b_space, parts.h, h_dual)
    pc_holds, pc_witness = parity_condition(parts.k, poly.n_vars)
    if a_space.dims == b_space.dims:
        verdict = Verdict.BIGRADED_ISOMORPHIC
    elif a_space.total_dim == b_space.total_dim:
        verdict = Verdict.DIMENSIONS_MATCH_BIGRADING_FAILS
    else:
        verdict = Verdict.DIMENSION_MISMATCH
    mismatches = []
    for bd in sorted(set(a_space.dims) | set(b_space.dims)):
        da = a_space.dims.get(bd, 0)
        db = b_space.dims.get(bd, 0)
        if da != db:
            mismatches.append((bd, da, db))
    return MirrorReport(poly, dual_poly, group, g_star, parts, a_space,
                        b_space, restricted, pc_holds, pc_witness, verdict,
                        tuple(mismatches))
