"""Normal collections: the minimal equality sets that bound the core.

Turning ``x(S) >= v(S)`` into an equality removes every unbounded direction
that raises the total payoff of S.  Three constructions are provided for
downset lattices (the irredundant one, its nested hull, and the level-based
one), a validator that asks the polyhedral oracle whether a candidate really
bounds the core, and a lift that moves collections computed on the closure
back into a sparser system.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CollectionNotNested, NoFeasibleLift, SetNotFeasible
from .lattice import PlayerPoset, level_partition
from .polyhedra import dd_generators
from .rays import OrderedPairRay, build_recession_cone
from .setsystem import Coalition, SetSystem

KINDS = ("irredundant", "weber", "grabisch_xie", "custom")


@dataclass(frozen=True)
class NormalCollection:
    """An ordered list of coalitions whose inequalities become equalities.

    The grand coalition is never a member (its efficiency equality is always
    present anyway).  Collections of kind ``weber`` or ``grabisch_xie`` must
    be nested, i.e. totally ordered by inclusion.
    """

    sets: tuple[Coalition, ...]
    kind: str = "custom"

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown collection kind {self.kind!r}")
        for c in self.sets:
            if c.mask == (1 << c.n) - 1:
                raise ValueError("the grand coalition cannot be a normal set")
        if self.kind in ("weber", "grabisch_xie") and not self.is_nested():
            raise CollectionNotNested(f"a {self.kind} collection must be a chain")

    def is_nested(self) -> bool:
        for a, b in zip(self.sets, self.sets[1:]):
            if not a < b:
                return False
        return True

    def __iter__(self):
        return iter(self.sets)

    def __len__(self) -> int:
        return len(self.sets)

    def to_document(self) -> dict:
        return {"kind": self.kind, "sets": [list(c.members) for c in self.sets]}


def algo1_irredundant(poset: PlayerPoset) -> NormalCollection:
    """Smallest equality sets, one per poset level except the top.

    Each round drops the elements that are both minimal and maximal in what
    remains (they head no unbounded direction), then freezes the payoff of
    the downset generated by the current minimal elements.  An antichain
    yields the empty collection: that core is already bounded.
    """
    n = poset.n
    remaining = poset.universe.full_mask
    sets: list[Coalition] = []
    while True:
        isolated = poset.minimal_of(remaining) & poset.maximal_of(remaining)
        remaining &= ~isolated
        if not remaining:
            break
        m0 = poset.minimal_of(remaining)
        sets.append(Coalition(poset.downset_of(m0), n))
        remaining &= ~m0
    return NormalCollection(tuple(sets), kind="irredundant")


def weber_collection(irredundant: NormalCollection) -> NormalCollection:
    """Cumulative unions of the irredundant sets: the smallest nested collection."""
    if irredundant.kind != "irredundant":
        raise ValueError("the nested hull is built from an irredundant collection")
    sets = []
    acc = None
    for c in irredundant:
        acc = c if acc is None else acc | c
        sets.append(acc)
    return NormalCollection(tuple(sets), kind="weber")


def grabisch_xie_collection(poset: PlayerPoset) -> NormalCollection:
    """Cumulative unions of the poset levels, all but the last: the largest nested collection."""
    levels = level_partition(poset).levels
    sets = []
    acc = None
    for level in levels[:-1]:
        acc = level if acc is None else acc | level
        sets.append(acc)
    return NormalCollection(tuple(sets), kind="grabisch_xie")


def kills(ray: OrderedPairRay, coalition: Coalition) -> bool:
    """Does freezing this coalition's payoff remove the transfer direction?

    True exactly when the receiving player is inside and the paying player
    outside, so the frozen total would have to rise along the ray.
    """
    return ray.plus in coalition and ray.minus not in coalition


def validate_normal(system: SetSystem, candidate: NormalCollection) -> bool:
    """Ask the oracle whether the equalities really bound the core."""
    for c in candidate:
        if c.mask not in system:
            raise SetNotFeasible(f"candidate normal set {c} is not feasible")
    gens = dd_generators(build_recession_cone(system, zero_sets=candidate.sets))
    return not gens.extremal_rays and not gens.lineality


@dataclass(frozen=True)
class LiftOutcome:
    """Result of lifting a collection into a sparser system.

    ``replacements`` records, per replaced set, the chosen feasible superset
    (None when no superset preserves its kills) and the equally small
    alternatives that canonical order skipped.  ``extra_sets`` lists repair
    sets appended because the replacements alone left the core unbounded
    (the collection then exceeds the optimal size).
    """

    collection: NormalCollection
    replacements: tuple[tuple[Coalition, Coalition | None, tuple[Coalition, ...]], ...]
    extra_sets: tuple[Coalition, ...]

    @property
    def changed(self) -> bool:
        return bool(self.replacements) or bool(self.extra_sets)


def lift_collection_detailed(
    system: SetSystem,
    candidate: NormalCollection,
    rays: list[OrderedPairRay],
) -> LiftOutcome:
    """Replace infeasible normal sets by minimal feasible supersets.

    A replacement must keep killing every ray its original killed; ties are
    broken by canonical coalition order and reported as alternatives.  If the
    replaced collection fails oracle validation, the smallest payoff-changing
    feasible set per surviving direction is appended until the core is
    bounded.
    """
    n = system.n
    full = system.universe.full_mask
    feasible = [c for c in system.sets if c.mask not in (0, full)]
    chosen: list[Coalition] = []
    replacements = []
    for original in candidate:
        if original.mask in system:
            if original.mask not in {c.mask for c in chosen}:
                chosen.append(original)
            continue
        killed = [r for r in rays if kills(r, original)]
        options = [
            c
            for c in feasible
            if original <= c and all(kills(r, c) for r in killed)
        ]
        if not options:
            # no faithful replacement; the repair loop below must cover for it
            replacements.append((original, None, ()))
            continue
        best = min(options, key=Coalition.key)
        ties = tuple(c for c in options if len(c) == len(best) and c.mask != best.mask)
        replacements.append((original, best, ties))
        if best.mask not in {c.mask for c in chosen}:
            chosen.append(best)

    extra: list[Coalition] = []
    while True:
        gens = dd_generators(build_recession_cone(system, zero_sets=chosen))
        surviving = list(gens.lineality) + list(gens.extremal_rays)
        if not surviving:
            break
        direction = surviving[0]
        chosen_masks = {x.mask for x in chosen}
        killers = [
            c
            for c in feasible
            if c.mask not in chosen_masks
            and sum(direction[p - 1] for p in c.members) != 0
        ]
        if not killers:
            raise NoFeasibleLift(
                f"no feasible coalition can remove the unbounded direction {direction}"
            )
        pick = min(killers, key=Coalition.key)
        chosen.append(pick)
        extra.append(pick)

    if not replacements and not extra:
        return LiftOutcome(candidate, (), ())
    return LiftOutcome(
        NormalCollection(tuple(chosen), kind="custom"),
        tuple(replacements),
        tuple(extra),
    )


def lift_collection(
    system: SetSystem,
    candidate: NormalCollection,
    rays: list[OrderedPairRay],
) -> NormalCollection:
    return lift_collection_detailed(system, candidate, rays).collection
