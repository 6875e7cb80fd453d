"""A- and B-model state spaces for Fermat polynomials.

Each group element g owns a sector: the Milnor ring of W restricted to
Fix(g), times the volume form on Fix(g).  For Fermat W the restriction is
again Fermat in one coordinate per fixed cycle, so the sector basis is the
set of exponent tuples 0 ≤ b_C ≤ d_C − 2 and everything stays combinatorial.

A group element γ acts on the sector of g by pullback, landing in the
sector of γ⁻¹gγ.  On the canonical cycle coordinates the pullback is a
permutation of coordinates with one scalar phase each; the volume form
additionally picks up the reordering sign (phase 1/2 per odd rearrangement).
Because every action is monomial, the invariant subspace has a basis of
orbit sums: an orbit of (sector, monomial) nodes contributes one basis
vector exactly when every closed loop of generator moves has total phase 0.

Bigradings:  A-side  (deg P + age g − age j_W,  N_g − deg P + age g − age j_W)
             B-side  (deg P + age g − age j_W,  deg P + age g⁻¹ − age j_W)
where deg P always includes the volume form: deg(Π y^{b_C}·ω) = Σ (b_C+1)·q_C.

Everything is immutable; sector construction is cached per (W, g).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .errors import (
    InternalError,
    NotAdmissibleAError,
    NotAdmissibleBError,
    NotFermatError,
)
from .polynomial import InvertiblePolynomial
from .symmetry import (
    HALF,
    ZERO,
    FixedLocus,
    MonomialSymmetry,
    SymmetryGroup,
    exponential_grading,
    is_symmetry,
    mod1,
)

A_SIDE = "A"
B_SIDE = "B"

Bidegree = tuple[Fraction, Fraction]


@dataclass(frozen=True)
class Sector:
    """Milnor ring basis of W|Fix(g) together with its volume form."""

    poly: InvertiblePolynomial
    element: MonomialSymmetry
    locus: FixedLocus
    degrees: tuple[int, ...]            # Fermat exponent d_C per fixed cycle
    cycle_weights: tuple[Fraction, ...]  # weight q_C of each cycle coordinate
    basis: tuple[tuple[int, ...], ...]   # exponent tuples, 0 ≤ b_C ≤ d_C − 2

    @property
    def dim(self) -> int:
        return self.locus.dim

    @property
    def is_narrow(self) -> bool:
        return self.locus.dim == 0

    def degree(self, exponents: tuple[int, ...]) -> Fraction:
        """Weighted degree of Π y^{b_C} · ω (the form contributes)."""
        return sum(((b + 1) * q for b, q in zip(exponents, self.cycle_weights)),
                   ZERO)


@lru_cache(maxsize=None)
def build_sector(poly: InvertiblePolynomial, g: MonomialSymmetry) -> Sector:
    """Sector of g for a pure Fermat polynomial."""
    d_all = poly.fermat_exponents()
    if not is_symmetry(g, poly):
        raise ValueError(f"{g.label()} is not a symmetry of {poly}")
    locus = g.fixed_locus()
    degrees = []
    for cycle in locus.cycles:
        d = d_all[cycle[0]]
        # weight-respecting permutations only join variables of equal exponent
        assert all(d_all[i] == d for i in cycle)
        degrees.append(d)
    weights = tuple(Fraction(1, d) for d in degrees)
    basis = tuple(product(*(range(d - 1) for d in degrees)))
    return Sector(poly, g, locus, tuple(degrees), weights, basis)


@dataclass(frozen=True)
class SectorMap:
    """Pullback action of one γ: sector of g → sector of γ⁻¹gγ.

    ``cycle_images[c]`` is the target cycle position receiving source cycle
    c's exponent; ``scalars[c]`` the phase with γ*(y_c) = e(scalar)·y'_image.
    ``form_phase`` is what the full volume form picks up, reordering sign
    included.
    """

    source: Sector
    target: Sector
    cycle_images: tuple[int, ...]
    scalars: tuple[Fraction, ...]
    form_phase: Fraction

    def apply(self, exponents: tuple[int, ...]) -> tuple[tuple[int, ...], Fraction]:
        image = [0] * len(exponents)
        phase = self.form_phase
        for c, b in enumerate(exponents):
            image[self.cycle_images[c]] = b
            if b:
                phase += b * self.scalars[c]
        return tuple(image), mod1(phase)


def sector_map(gamma: MonomialSymmetry, sector: Sector) -> SectorMap:
    """Express γ's pullback in canonical cycle coordinates."""
    target = build_sector(sector.poly, sector.element.conjugated_by(gamma))
    src = sector.locus
    tgt = target.locus
    if src.dim != tgt.dim:
        raise InternalError("conjugation changed the fixed locus dimension")
    n = gamma.n
    inv_perm = [0] * n
    for i, p in enumerate(gamma.perm):
        inv_perm[p] = i
    where = {}  # variable index -> (source cycle position, canonical phase)
    for cpos, (cycle, phases) in enumerate(zip(src.cycles, src.phase_vectors)):
        for i, phase in zip(cycle, phases):
            where[i] = (cpos, phase)

    cycle_images = [-1] * src.dim
    scalars = [ZERO] * src.dim
    for dpos, (dcycle, dphases) in enumerate(zip(tgt.cycles, tgt.phase_vectors)):
        i_star = inv_perm[dcycle[0]]
        if i_star not in where:
            raise InternalError("pullback image is not a fixed coordinate")
        cpos, phase_star = where[i_star]
        scalar = mod1(gamma.phases[i_star] - phase_star)
        # γ·v'_D must be e(scalar) times the canonical source vector
        for j, phase_j in zip(dcycle, dphases):
            i = inv_perm[j]
            if i not in where or where[i][0] != cpos:
                raise InternalError("pullback image spreads over several cycles")
            if mod1(gamma.phases[i] + phase_j) != mod1(scalar + where[i][1]):
                raise InternalError("pullback image is not a canonical vector multiple")
        cycle_images[cpos] = dpos
        scalars[cpos] = scalar
    if -1 in cycle_images:
        raise InternalError("pullback does not pair the fixed cycles bijectively")

    inversions = sum(1 for a in range(src.dim) for b in range(a + 1, src.dim)
                     if cycle_images[a] > cycle_images[b])
    form_phase = mod1(sum(scalars, ZERO) + HALF * (inversions % 2))
    return SectorMap(sector, target, tuple(cycle_images), tuple(scalars),
                     form_phase)


@dataclass(frozen=True)
class GradedBasisVector:
    """Orbit sum Σ e(phase)·⌊y^b·ω, g⌉ with one common bidegree.

    Terms are sorted; the leading (first) term has coefficient phase 0.
    """

    side: str
    terms: tuple[tuple[Fraction, tuple[int, ...], MonomialSymmetry], ...]
    bidegree: Bidegree

    @property
    def leading(self) -> tuple[Fraction, tuple[int, ...], MonomialSymmetry]:
        return self.terms[0]

    @property
    def sector_elements(self) -> tuple[MonomialSymmetry, ...]:
        return tuple(g for _, _, g in self.terms)


def jw_age(poly: InvertiblePolynomial) -> Fraction:
    return sum(poly.weights, ZERO)


def a_bidegree(poly: InvertiblePolynomial, g: MonomialSymmetry,
               degree: Fraction) -> Bidegree:
    """A-model bidegree of an element of degree ``degree`` in the g-sector."""
    shift = g.age() - jw_age(poly)
    ng = g.fixed_locus().dim
    return (degree + shift, ng - degree + shift)


def b_bidegree(poly: InvertiblePolynomial, g: MonomialSymmetry,
               degree: Fraction) -> Bidegree:
    """B-model bidegree of an element of degree ``degree`` in the g-sector."""
    jw = jw_age(poly)
    return (degree + g.age() - jw, degree + g.inverse().age() - jw)


class GradedSpace:
    """State space with canonical basis, bidegree histogram and census."""

    def __init__(self, side: str, poly: InvertiblePolynomial,
                 group: SymmetryGroup,
                 basis: tuple[GradedBasisVector, ...]):
        self.side = side
        self.poly = poly
        self.group = group
        self.basis = basis
        dims: dict[Bidegree, int] = {}
        for v in basis:
            dims[v.bidegree] = dims.get(v.bidegree, 0) + 1
        self.dims = dims
        self.total_dim = len(basis)

    def census(self) -> dict:
        """Counts by sector type of the leading term.

        Twisted broad counts are keyed by the leading element's label.
        """
        untwisted = 0
        narrow_diagonal = 0
        narrow_nondiagonal = 0
        twisted: dict[str, int] = {}
        for v in self.basis:
            g = v.leading[2]
            if g.is_identity:
                untwisted += 1
            elif g.fixed_locus().dim == 0:
                if g.is_diagonal:
                    narrow_diagonal += 1
                else:
                    narrow_nondiagonal += 1
            else:
                label = g.label()
                twisted[label] = twisted.get(label, 0) + 1
        return {
            "untwisted_broad": untwisted,
            "twisted_broad": twisted,
            "narrow_diagonal": narrow_diagonal,
            "narrow_nondiagonal": narrow_nondiagonal,
        }

    def sorted_dims(self) -> list[tuple[Bidegree, int]]:
        return sorted(self.dims.items())


def invariant_basis(poly: InvertiblePolynomial, group: SymmetryGroup,
                    side: str) -> tuple[GradedBasisVector, ...]:
    """Orbit-sum basis of the G-invariants of ⊕_g Q_{W_g}·ω_g.

    Breadth-first search over (sector, monomial) nodes under the pullback
    maps of the group generators, accumulating coefficient phases.  An orbit
    survives exactly when its phase assignment is consistent (every loop
    closes with total phase 0); it then contributes the orbit sum normalized
    so the least term carries phase 0.
    """
    elements = group.elements
    sectors = [build_sector(poly, g) for g in elements]
    index = {g: i for i, g in enumerate(elements)}
    moves = []
    for gamma in group.generators:
        row = []
        for i, g in enumerate(elements):
            sm = sector_map(gamma, sectors[i])
            row.append((index[sm.target.element], sm))
        moves.append(row)

    bidegree_of = a_bidegree if side == A_SIDE else b_bidegree
    done: set[tuple[int, tuple[int, ...]]] = set()
    vectors = []
    for i, sector in enumerate(sectors):
        for start in sector.basis:
            root = (i, start)
            if root in done:
                continue
            phases = {root: ZERO}
            stack = [root]
            consistent = True
            while stack:
                node = stack.pop()
                base = phases[node]
                for row in moves:
                    j, sm = row[node[0]]
                    image, delta = sm.apply(node[1])
                    target = (j, image)
                    total = mod1(base + delta)
                    known = phases.get(target)
                    if known is None:
                        phases[target] = total
                        stack.append(target)
                    elif known != total:
                        consistent = False
            done.update(phases)
            if not consistent:
                continue
            ordered = sorted(phases, key=lambda node: (elements[node[0]].key,
                                                       node[1]))
            lead_phase = phases[ordered[0]]
            terms = tuple((mod1(phases[node] - lead_phase), node[1],
                           elements[node[0]]) for node in ordered)
            lead = terms[0]
            bidegree = bidegree_of(poly, lead[2],
                                   sectors[index[lead[2]]].degree(lead[1]))
            vectors.append(GradedBasisVector(side, terms, bidegree))
    vectors.sort(key=lambda v: (v.leading[2].key, v.leading[1]))
    return tuple(vectors)


def a_state_space(poly: InvertiblePolynomial, group: SymmetryGroup) -> GradedSpace:
    """A-model state space; the group must contain j_W."""
    if not poly.is_fermat:
        raise NotFermatError(f"{poly} is not of pure Fermat type")
    if exponential_grading(poly) not in group:
        raise NotAdmissibleAError("group does not contain the grading element j_W")
    return GradedSpace(A_SIDE, poly, group, invariant_basis(poly, group, A_SIDE))


def b_state_space(poly: InvertiblePolynomial, group: SymmetryGroup) -> GradedSpace:
    """B-model state space; every group element must have determinant one."""
    if not poly.is_fermat:
        raise NotFermatError(f"{poly} is not of pure Fermat type")
    for g in group:
        if g.det_phase() != 0:
            raise NotAdmissibleBError(
                f"{g.label()} has determinant e(2πi·{g.det_phase()}) ≠ 1")
    return GradedSpace(B_SIDE, poly, group, invariant_basis(poly, group, B_SIDE))


class HodgeDiamond:
    """Bidegree histogram arranged as a diamond when the grading is integral."""

    def __init__(self, space: GradedSpace):
        self.dims = dict(space.dims)
        self.integral = all(p.denominator == 1 and q.denominator == 1
                            for p, q in self.dims)

    def grid(self) -> dict[tuple[int, int], int]:
        if not self.integral:
            raise ValueError("bidegrees are not all integral")
        return {(int(p), int(q)): d for (p, q), d in self.dims.items()}

    def rows(self) -> list[list[int]]:
        """One list per occupied total degree p+q, cells ordered by p."""
        grid = self.grid()
        totals = sorted({p + q for p, q in grid})
        out = []
        for s in totals:
            ps = [p for (p, q) in grid if p + q == s]
            row = [grid.get((p, s - p), 0) for p in range(min(ps), max(ps) + 1)]
            out.append(row)
        return out

    def render(self) -> str:
        """Centered text diamond, or a sparse table for fractional gradings."""
        if not self.integral:
            lines = [f"({p}, {q}): {d}" for (p, q), d in sorted(self.dims.items())]
            return "\n".join(lines)
        rows = [" ".join(str(d) for d in row) for row in self.rows()]
        width = max((len(r) for r in rows), default=0)
        return "\n".join(r.center(width).rstrip() for r in rows)


def hodge_diamond(space: GradedSpace) -> HodgeDiamond:
    return HodgeDiamond(space)


# --- rendering helpers -------------------------------------------------------

def _coordinate_label(poly: InvertiblePolynomial, cycle, phases) -> str:
    if len(cycle) == 1:
        return poly.var_names[cycle[0]]
    parts = []
    for i, phase in sorted(zip(cycle, phases)):
        name = poly.var_names[i]
        if phase == 0:
            parts.append(name)
        elif phase == HALF:
            parts.append(f"-{name}")
        else:
            parts.append(f"e({phase})*{name}")
    return "(" + " + ".join(parts).replace("+ -", "- ") + ")"


def monomial_label(sector: Sector, exponents: tuple[int, ...]) -> str:
    """Render Π y^{b_C} over the sector's cycle coordinates (form omitted)."""
    factors = []
    for (cycle, phases, b) in zip(sector.locus.cycles, sector.locus.phase_vectors,
                                  exponents):
        if b == 0:
            continue
        base = _coordinate_label(sector.poly, cycle, phases)
        factors.append(base if b == 1 else f"{base}^{b}")
    return "*".join(factors) if factors else "1"


def vector_label(vector: GradedBasisVector, poly: InvertiblePolynomial) -> str:
    """Orbit sum with the leading term first, e.g. ``[x4^2, (1 2 3)]``."""
    chunks = []
    for k, (phase, exps, g) in enumerate(vector.terms):
        body = f"[{monomial_label(build_sector(poly, g), exps)}, {g.label()}]"
        if k == 0:
            chunks.append(body)
        elif phase == HALF:
            chunks.append(f"- {body}")
        elif phase == 0:
            chunks.append(f"+ {body}")
        else:
            chunks.append(f"+ e({phase})*{body}")
    return " ".join(chunks)
