"""Monomial symmetries of invertible polynomials, exactly.

Every symmetry in scope is a monomial matrix: a diagonal matrix of roots of
unity times a permutation matrix.  Phases are kept additively as rationals
mod 1, so the element with phases a and permutation σ is the matrix with
entry e^{2πi a_i} in row i, column σ(i).  The action convention, fixed once
for the whole library, is

    (g·x)_i = e^{2πi a_i} · x_{σ(i)}

so that diagonal elements read off as plain phase vectors and composition
``g * h`` is the matrix product: (g*h)·x = g·(h·x), concretely
perm i ↦ τ(σ(i)) and phase_i = a_i + b_{σ(i)} for g = (σ, a), h = (τ, b).

Groups are finite, immutable after construction, and closed by breadth-first
search with a safety cap.  Element order is canonical (lexicographic on
permutation images, then phases), which makes every downstream output
reproducible byte for byte.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import linalg
from .errors import (
    CapExceededError,
    DimensionMismatchError,
    NotAMemberError,
    ParseError,
)
from .polynomial import InvertiblePolynomial

ZERO = Fraction(0)
HALF = Fraction(1, 2)


def mod1(x) -> Fraction:
    """Reduce a rational into [0, 1)."""
    return Fraction(x) % 1


class MonomialSymmetry:
    """Immutable diagonal·permutation symmetry of rank ``n``.

    ``perm`` holds 0-based images (σ(i) = perm[i]); ``phases`` are rationals
    in [0, 1).  Instances are hashable and totally ordered by
    (perm, phases), the canonical element order used everywhere.
    """

    __slots__ = ("perm", "phases", "_hash")

    def __init__(self, perm, phases):
        perm = tuple(perm)
        phases = tuple(mod1(p) for p in phases)
        if sorted(perm) != list(range(len(perm))):
            raise ValueError(f"{perm} is not a permutation")
        if len(phases) != len(perm):
            raise DimensionMismatchError("one phase per coordinate required")
        self.perm = perm
        self.phases = phases
        self._hash = hash((perm, phases))

    @classmethod
    def identity(cls, n: int) -> "MonomialSymmetry":
        return cls(range(n), (ZERO,) * n)

    @classmethod
    def diagonal(cls, phases) -> "MonomialSymmetry":
        phases = tuple(phases)
        return cls(range(len(phases)), phases)

    @classmethod
    def from_cycles(cls, cycles, n: int) -> "MonomialSymmetry":
        """Pure permutation from 0-based cycles, e.g. [(0,1,2)] for (123)."""
        images = list(range(n))
        for cycle in cycles:
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                images[a] = b
        return cls(images, (ZERO,) * n)

    @property
    def n(self) -> int:
        return len(self.perm)

    def __mul__(self, other: "MonomialSymmetry") -> "MonomialSymmetry":
        if self.n != other.n:
            raise DimensionMismatchError("rank mismatch in composition")
        perm = tuple(other.perm[p] for p in self.perm)
        phases = tuple(self.phases[i] + other.phases[self.perm[i]]
                       for i in range(self.n))
        return MonomialSymmetry(perm, phases)

    def inverse(self) -> "MonomialSymmetry":
        inv = [0] * self.n
        phases = [ZERO] * self.n
        for i, p in enumerate(self.perm):
            inv[p] = i
            phases[p] = -self.phases[i]
        return MonomialSymmetry(inv, phases)

    def __pow__(self, k: int) -> "MonomialSymmetry":
        if k < 0:
            return self.inverse() ** (-k)
        result = MonomialSymmetry.identity(self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def order(self) -> int:
        k, g = 1, self
        while not g.is_identity:
            g = g * self
            k += 1
        return k

    def conjugated_by(self, gamma: "MonomialSymmetry") -> "MonomialSymmetry":
        """γ⁻¹·g·γ."""
        return gamma.inverse() * self * gamma

    @property
    def is_identity(self) -> bool:
        return all(p == i for i, p in enumerate(self.perm)) and \
            all(a == 0 for a in self.phases)

    @property
    def is_diagonal(self) -> bool:
        return all(p == i for i, p in enumerate(self.perm))

    @property
    def is_pure_permutation(self) -> bool:
        return all(a == 0 for a in self.phases)

    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """All permutation cycles, each starting at its least index."""
        seen = [False] * self.n
        out = []
        for i in range(self.n):
            if not seen[i]:
                cycle = [i]
                seen[i] = True
                j = self.perm[i]
                while j != i:
                    cycle.append(j)
                    seen[j] = True
                    j = self.perm[j]
                out.append(tuple(cycle))
        return tuple(out)

    @property
    def perm_parity(self) -> int:
        """0 for even permutations, 1 for odd."""
        return (self.n - len(self.cycles())) % 2

    def det_phase(self) -> Fraction:
        """Phase t with det(g) = e^{2πi t}; zero exactly on SL elements."""
        return mod1(sum(self.phases, ZERO) + HALF * self.perm_parity)

    def age(self) -> Fraction:
        """Sum of eigenvalue log-phases taken in [0, 1).

        A cycle of length ℓ with total phase s contributes the ℓ phases
        (s + k)/ℓ mod 1, k = 0..ℓ−1.
        """
        total = ZERO
        for cycle in self.cycles():
            s = sum((self.phases[i] for i in cycle), ZERO)
            ell = len(cycle)
            total += sum(mod1(Fraction(s + k, 1) / ell) for k in range(ell))
        return total

    def fixed_locus(self) -> "FixedLocus":
        cycles = []
        vectors = []
        for cycle in self.cycles():
            if mod1(sum((self.phases[i] for i in cycle), ZERO)) != 0:
                continue
            phase = ZERO
            vec = [ZERO] * len(cycle)
            for k, i in enumerate(cycle):
                vec[k] = phase
                phase = mod1(phase - self.phases[i])
            cycles.append(cycle)
            vectors.append(tuple(vec))
        return FixedLocus(self.n, tuple(cycles), tuple(vectors))

    def phase_matrix(self) -> list[list[Fraction | None]]:
        """Dense matrix form: entry (i, σ(i)) holds the phase, others None."""
        mat: list[list[Fraction | None]] = [[None] * self.n for _ in range(self.n)]
        for i in range(self.n):
            mat[i][self.perm[i]] = self.phases[i]
        return mat

    @property
    def key(self):
        return (self.perm, self.phases)

    def __eq__(self, other) -> bool:
        return isinstance(other, MonomialSymmetry) and \
            self.perm == other.perm and self.phases == other.phases

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "MonomialSymmetry") -> bool:
        return self.key < other.key

    def __le__(self, other: "MonomialSymmetry") -> bool:
        return self.key <= other.key

    def cycle_string(self) -> str:
        parts = ["(" + " ".join(str(i + 1) for i in c) + ")"
                 for c in self.cycles() if len(c) > 1]
        return "".join(parts) if parts else "()"

    def label(self) -> str:
        """Human-readable form matching the additive notation in use."""
        diag = "(" + ", ".join(str(a) for a in self.phases) + ")"
        if self.is_diagonal:
            return diag
        if self.is_pure_permutation:
            return self.cycle_string()
        return diag + self.cycle_string()

    def __repr__(self) -> str:
        return f"MonomialSymmetry({self.label()})"


@dataclass(frozen=True)
class FixedLocus:
    """Fix(g): one canonical eigenvector per zero-phase cycle.

    ``phase_vectors[k][j]`` is the phase of the canonical vector of cycle k
    at its j-th index (the entry at the least index is 1, i.e. phase 0).
    """

    n: int
    cycles: tuple[tuple[int, ...], ...]
    phase_vectors: tuple[tuple[Fraction, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.cycles)

    def canonical_vectors(self) -> tuple[tuple[Fraction | None, ...], ...]:
        """Full-length vectors; None marks a zero entry, else the phase."""
        out = []
        for cycle, vec in zip(self.cycles, self.phase_vectors):
            full: list[Fraction | None] = [None] * self.n
            for i, phase in zip(cycle, vec):
                full[i] = phase
            out.append(tuple(full))
        return tuple(out)


def _closure_set(generators, cap: int) -> set[MonomialSymmetry]:
    n = generators[0].n
    elems = {MonomialSymmetry.identity(n)}
    frontier = list(elems)
    while frontier:
        fresh = []
        for a in frontier:
            for g in generators:
                b = a * g
                if b not in elems:
                    if len(elems) >= cap:
                        raise CapExceededError(
                            f"group exceeds cap of {cap} elements")
                    elems.add(b)
                    fresh.append(b)
        frontier = fresh
    return elems


def _reduce_generators(elements) -> list[MonomialSymmetry]:
    """Greedy small generating set, scanning elements in canonical order."""
    n = elements[0].n
    gens: list[MonomialSymmetry] = []
    have: set[MonomialSymmetry] = {MonomialSymmetry.identity(n)}
    for g in elements:
        if g not in have:
            gens.append(g)
            have = _closure_set(gens, cap=len(elements) + 1)
            if len(have) == len(elements):
                break
    return gens


class SymmetryGroup:
    """A finite group of monomial symmetries in canonical element order.

    Immutable after construction; conjugacy classes and centralizers are
    cached on first use.  Constructing from an element list assumes the list
    is closed (all construction paths in this library guarantee it).
    """

    __slots__ = ("elements", "generators", "n", "_index", "_classes", "_cents")

    def __init__(self, elements, generators=None):
        elems = sorted(set(elements))
        if not elems:
            raise ValueError("a group needs at least the identity")
        n = elems[0].n
        if any(g.n != n for g in elems):
            raise DimensionMismatchError("mixed ranks in one group")
        if not MonomialSymmetry.identity(n) in elems:
            raise ValueError("identity missing from element list")
        self.elements = tuple(elems)
        self.n = n
        if generators is None:
            generators = _reduce_generators(self.elements)
        else:
            generators = [g for g in generators if not g.is_identity]
        self.generators = tuple(dict.fromkeys(generators))
        self._index: dict[MonomialSymmetry, int] | None = None
        self._classes = None
        self._cents: dict[MonomialSymmetry, SymmetryGroup] = {}

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, g) -> bool:
        return g in self._element_index()

    def __eq__(self, other) -> bool:
        return isinstance(other, SymmetryGroup) and self.elements == other.elements

    def __repr__(self) -> str:
        return f"SymmetryGroup(order={self.order}, n={self.n})"

    def _element_index(self) -> dict[MonomialSymmetry, int]:
        if self._index is None:
            self._index = {g: i for i, g in enumerate(self.elements)}
        return self._index

    def index(self, g: MonomialSymmetry) -> int:
        try:
            return self._element_index()[g]
        except KeyError:
            raise NotAMemberError(f"{g!r} is not in this group") from None

    @property
    def identity(self) -> MonomialSymmetry:
        return MonomialSymmetry.identity(self.n)

    @property
    def is_abelian(self) -> bool:
        gens = self.generators
        return all(a * b == b * a for i, a in enumerate(gens) for b in gens[i + 1:])

    @property
    def is_diagonal(self) -> bool:
        return all(g.is_diagonal for g in self.elements)

    def conjugacy_classes(self) -> tuple[tuple[MonomialSymmetry, ...], ...]:
        """Partition into conjugacy classes, each sorted, ordered by leader."""
        if self._classes is None:
            gen_invs = [(g, g.inverse()) for g in self.generators]
            assigned: set[MonomialSymmetry] = set()
            classes = []
            for g in self.elements:
                if g in assigned:
                    continue
                orbit = {g}
                frontier = [g]
                while frontier:
                    x = frontier.pop()
                    for gen, inv in gen_invs:
                        y = inv * x * gen
                        if y not in orbit:
                            orbit.add(y)
                            frontier.append(y)
                assigned |= orbit
                classes.append(tuple(sorted(orbit)))
            self._classes = tuple(classes)
        return self._classes

    def class_of(self, g: MonomialSymmetry) -> tuple[MonomialSymmetry, ...]:
        self.index(g)
        for cls in self.conjugacy_classes():
            if g in cls:
                return cls
        raise NotAMemberError(f"{g!r} is not in this group")

    def centralizer(self, g: MonomialSymmetry) -> "SymmetryGroup":
        self.index(g)
        if g not in self._cents:
            members = [x for x in self.elements if x * g == g * x]
            self._cents[g] = SymmetryGroup(members)
        return self._cents[g]

    def subgroups(self) -> tuple["SymmetryGroup", ...]:
        """Every subgroup, found by closing element extensions exhaustively.

        Meant for small groups (permutation parts, diagonal groups of small
        determinant); cost grows with the subgroup lattice.
        """
        elems = self.elements
        index = self._element_index()
        table = [[index[a * b] for b in elems] for a in elems]
        id_idx = index[self.identity]
        abelian = self.is_abelian
        base = frozenset({id_idx})
        seen = {base}
        queue = [base]
        found = []
        while queue:
            sub = queue.pop()
            found.append(sub)
            for x in range(len(elems)):
                if x in sub:
                    continue
                ext = self._extend(sub, x, table, abelian)
                if ext not in seen:
                    seen.add(ext)
                    queue.append(ext)
        groups = [SymmetryGroup([elems[i] for i in sub]) for sub in found]
        groups.sort(key=lambda h: (h.order, [g.key for g in h.elements]))
        return tuple(groups)

    @staticmethod
    def _extend(sub, x, table, abelian) -> frozenset:
        if abelian:
            cur = set(sub)
            y = x
            while y not in cur:
                cur.update(table[s][y] for s in sub)
                y = table[y][x]
            return frozenset(cur)
        cur = set(sub) | {x}
        while True:
            new = {table[a][b] for a in cur for b in cur} - cur
            if not new:
                return frozenset(cur)
            cur |= new


def closure(generators, cap: int = 10 ** 6) -> SymmetryGroup:
    """Breadth-first closure of the generators; errors past ``cap`` elements."""
    generators = list(generators)
    if not generators:
        raise ValueError("need at least one generator")
    n = generators[0].n
    if any(g.n != n for g in generators):
        raise DimensionMismatchError("mixed ranks among generators")
    elems = _closure_set(generators, cap)
    return SymmetryGroup(sorted(elems), generators=generators)


def is_symmetry(g: MonomialSymmetry, poly: InvertiblePolynomial) -> bool:
    """True iff g permutes the monomials of W with zero total phase on each
    and only mixes variables of equal weight."""
    if g.n != poly.n_vars:
        raise DimensionMismatchError(
            f"symmetry rank {g.n} does not match {poly.n_vars} variables")
    q = poly.weights
    if any(q[i] != q[g.perm[i]] for i in range(g.n)):
        return False
    rows = poly.monomial_index()
    for row in poly.exponents:
        total = ZERO
        image = [0] * g.n
        for j, e in enumerate(row):
            if e:
                total += e * g.phases[j]
                image[g.perm[j]] = e
        if mod1(total) != 0 or tuple(image) not in rows:
            return False
    return True


@lru_cache(maxsize=None)
def diagonal_group(poly: InvertiblePolynomial) -> SymmetryGroup:
    """All diagonal symmetries; generated by the columns of A_W⁻¹.

    The group has order |det A_W| (checked in tests against brute force).
    """
    inv = linalg.inverse(poly.exponents)
    n = poly.n_vars
    gens = [MonomialSymmetry.diagonal([inv[i][k] for i in range(n)])
            for k in range(n)]
    gens = [g for g in gens if not g.is_identity]
    if not gens:
        return SymmetryGroup([MonomialSymmetry.identity(n)])
    return closure(gens)


def exponential_grading(poly: InvertiblePolynomial) -> MonomialSymmetry:
    """j_W: the diagonal element whose phases are the weights."""
    return MonomialSymmetry.diagonal(poly.weights)


def sl_subgroup(group: SymmetryGroup) -> SymmetryGroup:
    """Elements of determinant one."""
    return SymmetryGroup([g for g in group if g.det_phase() == 0])


# --- generator grammar -----------------------------------------------------
#
#   gen    := 'j' | diag | cycles | diag '*' cycles
#   diag   := 'diag(' rational (',' rational)* ')'
#   cycles := ('(' posint (' ' posint)* ')')+

_DIAG_RE = re.compile(r"diag\(([^)]*)\)")
_CYCLE_RE = re.compile(r"\(\s*(\d+(?:\s+\d+)*)\s*\)")


def _parse_cycles(text: str, n: int) -> MonomialSymmetry:
    pos = 0
    cycles = []
    for m in _CYCLE_RE.finditer(text):
        if text[pos:m.start()].strip():
            raise ParseError(f"bad cycle syntax in {text!r}", pos)
        indices = [int(t) for t in m.group(1).split()]
        if len(set(indices)) != len(indices):
            raise ParseError(f"repeated index in cycle {m.group(0)}", m.start())
        if any(not 1 <= i <= n for i in indices):
            raise ParseError(f"cycle index out of range 1..{n}", m.start())
        cycles.append(tuple(i - 1 for i in indices))
        pos = m.end()
    if text[pos:].strip() or not cycles:
        raise ParseError(f"bad cycle syntax in {text!r}", pos)
    flat = [i for c in cycles for i in c]
    if len(set(flat)) != len(flat):
        raise ParseError(f"cycles overlap in {text!r}", 0)
    return MonomialSymmetry.from_cycles(cycles, n)


def parse_generator(text: str, poly: InvertiblePolynomial) -> MonomialSymmetry:
    """Parse one generator: 'j', 'diag(…)', cycles, or 'diag(…)*(cycles)'."""
    text = text.strip()
    n = poly.n_vars
    if text == "j":
        return exponential_grading(poly)
    diag = None
    m = _DIAG_RE.match(text)
    if m:
        entries = [e.strip() for e in m.group(1).split(",")]
        if len(entries) != n:
            raise ParseError(
                f"diag has {len(entries)} entries, polynomial has {n} variables", 0)
        try:
            phases = [Fraction(e) for e in entries]
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad rational in {text!r}: {exc}", 0) from None
        diag = MonomialSymmetry.diagonal(phases)
        rest = text[m.end():].strip()
        if not rest:
            return diag
        if not rest.startswith("*"):
            raise ParseError(f"expected '*' after diag in {text!r}", m.end())
        return diag * _parse_cycles(rest[1:].strip(), n)
    return _parse_cycles(text, n)
