"""Games, restricted cores, marginal vectors and restricted Weber sets."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    ChainNotRegularSteps,
    CollectionNotNested,
    DocumentError,
    NoRestrictedChain,
    NotClosed,
    SetNotFeasible,
)
from .normal import NormalCollection
from .polyhedra import HPolyhedron, VRepresentation, dd_generators, hull_membership
from .setsystem import (
    ChainOfSets,
    Coalition,
    SetSystem,
    classify,
    load_set_system,
    maximal_chains,
)
from .vectors import Vector, format_rational, parse_rational


class Game:
    """An exact-rational worth function on the feasible coalitions.

    Every feasible coalition must carry a value, the empty coalition's value
    is zero, and nothing outside the system may carry one.  Instances are
    immutable after construction.
    """

    def __init__(self, system: SetSystem, values):
        table: dict[int, Fraction] = {}
        for key, worth in values.items():
            mask = key.mask if isinstance(key, Coalition) else int(key)
            if mask not in system:
                raise SetNotFeasible(
                    f"value given for {Coalition(mask, system.n)}, which is not feasible"
                )
            if mask in table:
                raise DocumentError(f"duplicate value for {Coalition(mask, system.n)}")
            if isinstance(worth, float):
                raise DocumentError(f"refusing float worth {worth!r}; supply an exact rational")
            table[mask] = Fraction(worth)
        if table.get(0, Fraction(0)) != 0:
            raise DocumentError("the empty coalition must be worth 0")
        table[0] = Fraction(0)
        for c in system:
            if c.mask not in table:
                raise DocumentError(f"no value for feasible coalition {c}")
        self.system = system
        self._values = table

    def value(self, coalition) -> Fraction:
        mask = coalition.mask if isinstance(coalition, Coalition) else int(coalition)
        try:
            return self._values[mask]
        except KeyError:
            raise SetNotFeasible(
                f"{Coalition(mask, self.system.n)} is not a feasible coalition"
            ) from None

    @classmethod
    def from_document(cls, document) -> "Game":
        """Parse ``{"system": ..., "values": {"1,2": "3/2", ...}}``."""
        if isinstance(document, (str, bytes)):
            try:
                document = json.loads(document)
            except json.JSONDecodeError as exc:
                raise DocumentError(f"invalid JSON: {exc}") from None
        if not isinstance(document, dict) or "system" not in document or "values" not in document:
            raise DocumentError('game documents need the keys "system" and "values"')
        system = load_set_system(document["system"])
        values = {}
        for key, raw in document["values"].items():
            if not isinstance(key, str) or key.strip() == "":
                raise DocumentError(f"bad coalition key {key!r} (the empty set is implicit)")
            try:
                players = [int(part) for part in key.split(",")]
            except ValueError:
                raise DocumentError(f"bad coalition key {key!r}") from None
            coalition = Coalition.from_players(players, system.n)
            values[coalition.mask] = parse_rational(raw)
        return cls(system, values)

    def to_document(self) -> dict:
        values = {}
        for c in self.system:
            if c.mask:
                values[",".join(str(p) for p in c.members)] = format_rational(self._values[c.mask])
        return {"system": self.system.to_document(), "values": values}


@dataclass(frozen=True)
class MarginalVector:
    """Per-player increments of the game along one maximal chain."""

    chain: ChainOfSets
    payoff: Vector


@dataclass(frozen=True)
class InclusionVerdict:
    holds: bool
    witness: Vector | None


def build_restricted_core(game: Game, collection: NormalCollection) -> HPolyhedron:
    """H-form of the core with the collection's inequalities tightened.

    Rows follow canonical coalition order; the collection's sets and the
    grand coalition appear as equalities, every other nonempty feasible set
    as an inequality.  An empty collection yields the plain core.
    """
    system = game.system
    n = system.n
    full = system.universe.full_mask
    frozen = {c.mask for c in collection}
    for c in collection:
        if c.mask not in system:
            raise SetNotFeasible(f"normal set {c} is not feasible")

    def row(mask: int) -> Vector:
        return tuple(Fraction(mask >> i & 1) for i in range(n))

    inequalities = tuple(
        (row(c.mask), game.value(c))
        for c in system
        if c.mask not in frozen and c.mask not in (0, full)
    )
    equalities = tuple(
        (row(m), game.value(m)) for m in sorted(frozen, key=lambda m: (m.bit_count(), m))
    ) + ((row(full), game.value(full)),)
    return HPolyhedron(n, inequalities, equalities)


def marginal_vector(game: Game, chain: ChainOfSets) -> MarginalVector:
    """Payoffs v(S_i) - v(S_{i-1}) for the player arriving at step i."""
    if len(chain) != game.system.n + 1:
        raise ChainNotRegularSteps(
            "marginal vectors need a chain adding exactly one player per step"
        )
    payoff = [Fraction(0)] * game.system.n
    for a, b in zip(chain.sets, chain.sets[1:]):
        added = b.mask & ~a.mask
        if added.bit_count() != 1:
            raise ChainNotRegularSteps(f"chain step {a} -> {b} adds more than one player")
        payoff[added.bit_length() - 1] = game.value(b) - game.value(a)
    return MarginalVector(chain, tuple(payoff))


def restricted_chains(system: SetSystem, collection: NormalCollection) -> list[ChainOfSets]:
    'maximal chains passing through every set of the collection'
    wanted = {c.mask for c in collection}
    out = []
    for chain in maximal_chains(system):
        present = {c.mask for c in chain}
        if wanted <= present:
            out.append(chain)
    return out


def restricted_weber(game: Game, collection: NormalCollection) -> VRepresentation:
    """Convex hull of the marginal vectors of the restricted maximal chains.

    Defined when the collection is nested and the system is regular (which a
    closed system of height n always is); a chain jumping several players at
    once has no marginal vector, so such systems are refused outright.
    """
    ordered = sorted(collection.sets, key=Coalition.key)
    for a, b in zip(ordered, ordered[1:]):
        if not a < b:
            raise CollectionNotNested(
                f"normal sets {a} and {b} are not nested, the Weber set needs a chain"
            )
    system = game.system
    if not classify(system).is_regular:
        raise ChainNotRegularSteps(
            "the system has a maximal chain adding several players at one step; "
            "marginal vectors are undefined there"
        )
    chains = restricted_chains(system, collection)
    if not chains:
        raise NoRestrictedChain("no maximal chain passes through every normal set")
    vertices = sorted({marginal_vector(game, c).payoff for c in chains})
    return VRepresentation(
        dim=system.n,
        vertices=tuple(vertices),
        extremal_rays=(),
        lineality=(),
    )


def is_convex(game: Game) -> bool:
    """Supermodularity check ``v(A∪B) + v(A∩B) >= v(A) + v(B)`` over all pairs."""
    system = game.system
    if not classify(system).is_union_intersection_closed:
        raise NotClosed("convexity is only defined on union/intersection-closed systems")
    masks = system.masks()
    for i, a in enumerate(masks):
        for b in masks[i + 1:]:
            if game.value(a | b) + game.value(a & b) < game.value(a) + game.value(b):
                return False
    return True


def verify_inclusion(game: Game, collection: NormalCollection) -> InclusionVerdict:
    """Is the restricted core included in the restricted Weber set?

    An unbounded restricted core can never fit in a polytope, so its first
    unbounded direction is returned as the witness; otherwise every core
    vertex is tested exactly against the hull of the marginal vectors.
    """
    weber = restricted_weber(game, collection)
    core = dd_generators(build_restricted_core(game, collection))
    if core.empty:
        return InclusionVerdict(holds=True, witness=None)
    for direction in tuple(core.lineality) + tuple(core.extremal_rays):
        return InclusionVerdict(holds=False, witness=direction)
    for vertex in core.vertices:
        if not hull_membership(vertex, weber):
            return InclusionVerdict(holds=False, witness=vertex)
    return InclusionVerdict(holds=True, witness=None)
