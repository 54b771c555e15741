"""A restricted core that escapes its restricted Weber set.

On distributive systems the restricted core always sits inside the convex
hull of the restricted marginal vectors.  On merely regular systems it can
escape: here the Weber set collapses to the single point (1,0,0,1,1), while
the restricted core has a second vertex (1,1,0,0,1).
"""

from boundedcore import (
    Game,
    NormalCollection,
    build_restricted_core,
    dd_generators,
    marginal_vector,
    maximal_chains,
    restricted_chains,
    restricted_weber,
    verify_inclusion,
)

game = Game.from_document({
    "system": {
        "n": 5,
        "sets": [[], [1], [2], [1, 4], [2, 4], [1, 2, 4], [2, 3, 4],
                 [1, 2, 3, 4], [2, 3, 4, 5], [1, 2, 3, 4, 5]],
    },
    "values": {
        "1": "0", "2": "0", "1,4": "1", "2,4": "1", "1,2,4": "2",
        "2,3,4": "1", "1,2,3,4": "2", "2,3,4,5": "2", "1,2,3,4,5": "3",
    },
})
system = game.system
print("maximal-chain orders:", [c.order() for c in maximal_chains(system)])

collection = NormalCollection(
    (system.coalition([2, 4]), system.coalition([2, 3, 4])), kind="weber"
)
chains = restricted_chains(system, collection)
print("\nchains through the frozen sets:", [c.order() for c in chains])
for chain in chains:
    print("  marginal vector:", [int(c) for c in marginal_vector(game, chain).payoff])

weber = restricted_weber(game, collection)
print("restricted Weber set:", [[int(c) for c in v] for v in weber.vertices])

core = dd_generators(build_restricted_core(game, collection))
print("restricted core vertices:", [[int(c) for c in v] for v in core.vertices])

verdict = verify_inclusion(game, collection)
print("\ncore inside Weber set?", verdict.holds)
print("witness outside the hull:", [int(c) for c in verdict.witness])
