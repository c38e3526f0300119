"""Mordell-Weil group and lattice of a scenario.

The trivial lattice T of a scenario is generated by the zero section, the
fibre class and all declared fibre components.  The Mordell-Weil group is
NS(X)/T, computed from the Smith normal form of the generator matrix; its
torsion equals sat(T)/T.  The Mordell-Weil lattice is the dual of the
orthogonal complement of T inside NS(X) with the sign-flipped form, which
is positive definite whenever the scenario is consistent.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import matrices as mx
from .errors import FormError, InvalidModelError
from .fibers import (
    KIND_TRIVIALIZING,
    KIND_TRIVIALIZING_CORE,
    FiberShape,
    classify_shape,
    dual_graph,
    fiber_multiplicities,
    mw_rank_formula,
)
from .lattice import (
    AbelianGroupInvariants,
    IntegerLattice,
    cokernel_invariants,
    dual_gram,
    ldl,
    orthogonal_complement,
    short_vectors,
    vector_norms,
)
from .scenarios import Scenario


def trivial_lattice_generators(scenario: Scenario) -> mx.IntMatrix:
    """Generator rows: zero section, fibre class, every declared component."""
    rows = [scenario.zero_section.coeffs, scenario.fiber.coeffs]
    for fib in scenario.fibers:
        rows.extend(c.coeffs for c in fib.components)
    return tuple(rows)


def trivial_lattice(scenario: Scenario, negate: bool = False) -> IntegerLattice:
    """The trivial lattice T as a sublattice of NS(X)."""
    gens = trivial_lattice_generators(scenario)
    basis = mx.row_lattice_basis(gens)
    form = (
        scenario.model.neg_intersection_matrix()
        if negate
        else scenario.model.intersection_matrix()
    )
    return IntegerLattice(basis, form)


def mw_group(scenario: Scenario) -> AbelianGroupInvariants:
    """Invariants of NS(X)/T; the free part is the Mordell-Weil rank."""
    gens = trivial_lattice_generators(scenario)
    return cokernel_invariants(gens, scenario.model.rank)


def mw_torsion(scenario: Scenario) -> AbelianGroupInvariants:
    """Torsion subgroup, the finite group sat(T)/T."""
    group = mw_group(scenario)
    return AbelianGroupInvariants(0, group.torsion)


def mw_rank_by_formula(scenario: Scenario) -> int:
    """Rank from the component-count formula, independent of the SNF route."""
    counts = [len(fib) for fib in scenario.fibers]
    return mw_rank_formula(scenario.model.rho, counts)


@dataclass(frozen=True)
class MWLReport:
    """Everything the lattice side of a scenario computation produces."""

    scenario: str
    group: AbelianGroupInvariants
    trivial_rank: int
    trivial_discriminant: Fraction
    rank: int
    gram: tuple[tuple[Fraction, ...], ...]
    discriminant: Fraction
    root_count: int
    identified_as: str | None


def mwl(scenario: Scenario, root_bound: int = 2) -> MWLReport:
    """Mordell-Weil lattice report for a scenario.

    ``gram`` is the Gram matrix of the dual basis, i.e. of the
    Mordell-Weil lattice itself with its height pairing.
    """
    group = mw_group(scenario)
    t_neg = trivial_lattice(scenario, negate=True)
    t_gram = t_neg.gram()
    t_disc = abs(mx.det(t_gram)) if t_gram else Fraction(1)
    complement = orthogonal_complement(t_neg)
    c_gram = complement.gram()
    if complement.rank:
        ldl(c_gram)  # raises FormError unless positive definite
    dual, c_disc = dual_gram(c_gram) if complement.rank else ((), Fraction(1))
    discriminant = Fraction(1) / c_disc if c_disc else Fraction(0)
    if complement.rank:
        vectors = short_vectors(dual, root_bound)
        norms = vector_norms(dual, vectors)
        root_count = sum(1 for nv in norms if nv == 2)
        identified = identify_dn_plus(dual).label
    else:
        root_count = 0
        identified = None
    if group.free_rank != complement.rank:
        raise FormError(
            "complement rank %d does not match Mordell-Weil rank %d"
            % (complement.rank, group.free_rank)
        )
    return MWLReport(
        scenario=scenario.name,
        group=group,
        trivial_rank=t_neg.rank,
        trivial_discriminant=Fraction(t_disc),
        rank=complement.rank,
        gram=dual,
        discriminant=Fraction(discriminant),
        root_count=root_count,
        identified_as=identified,
    )


@dataclass(frozen=True)
class LatticeIdentification:
    """Outcome of matching a Gram matrix against a known lattice family.

    ``label`` is None when no match was found; ``reason`` then names the
    first invariant that ruled the family out.
    """

    label: str | None
    reason: str

    @property
    def matched(self) -> bool:
        return self.label is not None


def identify_dn_plus(gram) -> LatticeIdentification:
    """Recognize the unimodular lattices D_n^+ (and E_8 for n = 8).

    Requires an integral positive definite unimodular Gram matrix whose
    norm-2 vectors span a sublattice of index 2 with 2n(n-1) roots; for
    n = 8 the 240 roots span everything and the lattice is E_8.
    """

    def miss(reason: str) -> LatticeIdentification:
        return LatticeIdentification(None, reason)

    gram = mx.mat(gram)
    n = len(gram)
    if n == 0:
        return miss("rank is 0")
    try:
        igram = mx.int_matrix(gram)
    except ValueError:
        return miss("Gram matrix is not integral")
    d = abs(mx.det(igram))
    if d != 1:
        return miss("determinant is %s, expected 1" % d)
    try:
        ldl(igram)
    except FormError:
        return miss("Gram matrix is not positive definite")
    vectors = short_vectors(igram, 2)
    norms = vector_norms(igram, vectors)
    # Z^n carries the same root data as D_n^+ but contains unit vectors;
    # the two coincide only at n = 4, where D_4^+ is Z^4.
    if n != 4 and any(nv == 1 for nv in norms):
        return miss("lattice contains norm-1 vectors")
    roots = [v for v, nv in zip(vectors, norms) if nv == 2]
    count = len(roots)
    if count == 0:
        return miss("lattice has no norm-2 vectors")
    factors = mx.invariant_factors(roots)
    full_rank = len(factors) == n
    if not full_rank:
        return miss("norm-2 vectors span rank %d < %d" % (len(factors), n))
    if n == 8 and count == 240 and all(f == 1 for f in factors):
        return LatticeIdentification("D_8^+ = E_8", "240 roots spanning everything")
    if count != 2 * n * (n - 1):
        return miss("root count %d, expected %d" % (count, 2 * n * (n - 1)))
    torsion = [f for f in factors if f > 1]
    if torsion != [2]:
        return miss("root sublattice index invariants %s, expected [2]" % (torsion,))
    return LatticeIdentification("D_%d^+" % n, "%d roots of index-2 span" % count)


@dataclass(frozen=True)
class EquivalenceReport:
    """Agreement between the group-side and fibre-side triviality tests.

    ``has_trivializing_core`` records the weaker shape condition (the
    distinguished tree with its free end removed appearing as an induced
    subgraph); the headline ``agree`` compares MW triviality with the
    full-tree condition only.
    """

    scenario: str
    group: AbelianGroupInvariants
    shapes: tuple[FiberShape, ...]
    mw_trivial: bool
    has_trivializing_fiber: bool
    has_trivializing_core: bool

    @property
    def agree(self) -> bool:
        return self.mw_trivial == self.has_trivializing_fiber

    def certificate(self) -> dict | None:
        """Evidence for a disagreement, or None when the two sides agree."""
        if self.agree:
            return None
        return {
            "scenario": self.scenario,
            "group": str(self.group),
            "shapes": [str(s) for s in self.shapes],
            "mw_trivial": self.mw_trivial,
            "has_trivializing_fiber": self.has_trivializing_fiber,
        }

    def detail(self) -> str:
        return "MW %s; shapes [%s]" % (
            self.group,
            ", ".join(str(s) for s in self.shapes),
        )


def equivalence_check(scenario: Scenario) -> EquivalenceReport:
    """Compare MW triviality (Smith form route) with fibre-shape recognition."""
    model = scenario.model
    if not model.is_maximal:
        raise InvalidModelError(
            "equivalence is only meaningful on maximal models (n = 4g+4)"
        )
    group = mw_group(scenario)
    shapes = []
    for fib in scenario.fibers:
        graph = dual_graph(fib.components, fib.labels)
        mults = fiber_multiplicities(fib.components, scenario.fiber)
        shapes.append(classify_shape(graph, mults))
    has_triv = any(
        s.kind == KIND_TRIVIALIZING and s.genus == model.g for s in shapes
    )
    # A full match contains the core by construction, so it counts too.
    has_core = has_triv or any(
        s.kind == KIND_TRIVIALIZING_CORE and s.genus == model.g for s in shapes
    )
    return EquivalenceReport(
        scenario=scenario.name,
        group=group,
        shapes=tuple(shapes),
        mw_trivial=group.is_trivial,
        has_trivializing_fiber=has_triv,
        has_trivializing_core=has_core,
    )
