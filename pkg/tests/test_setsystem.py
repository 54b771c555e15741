import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from boundedcore import (
    ChainOfSets,
    Coalition,
    DuplicateSet,
    MissingEmptySet,
    MissingGrandCoalition,
    PlayerOutOfRange,
    UniverseTooLarge,
    classify,
    closure,
    load_set_system,
    maximal_chains,
)
from boundedcore.errors import DocumentError

from helpers import LINE_CONE_5SET, REGULAR_LIFT_8SET, WEBER_GAP_10SET, system


def masks(sys_):
    return sorted(c.mask for c in sys_)


class TestLoading:
    def test_five_set_document(self):
        f = load_set_system(LINE_CONE_5SET)
        assert len(f) == 5
        assert [list(c.members) for c in f] == [[], [1, 2], [2, 3], [3, 4], [1, 2, 3, 4]]

    def test_minimal_system(self):
        f = load_set_system({"n": 1, "sets": [[], [1]]})
        assert len(f) == 2

    def test_missing_grand_coalition(self):
        with pytest.raises(MissingGrandCoalition):
            load_set_system({"n": 3, "sets": [[], [1]]})

    def test_missing_empty_set(self):
        with pytest.raises(MissingEmptySet):
            load_set_system({"n": 2, "sets": [[1], [1, 2]]})

    def test_duplicate(self):
        with pytest.raises(DuplicateSet):
            load_set_system({"n": 2, "sets": [[], [1], [1], [1, 2]]})

    def test_player_out_of_range(self):
        with pytest.raises(PlayerOutOfRange):
            load_set_system({"n": 2, "sets": [[], [3], [1, 2]]})

    def test_universe_too_large(self):
        with pytest.raises(UniverseTooLarge):
            load_set_system({"n": 17, "sets": [[], list(range(1, 18))]})

    def test_json_text_accepted(self):
        f = load_set_system('{"n": 2, "sets": [[], [1], [1, 2]]}')
        assert len(f) == 3

    def test_garbage_rejected(self):
        with pytest.raises(DocumentError):
            load_set_system({"sets": [[]]})

    def test_canonical_order(self):
        f = load_set_system({"n": 3, "sets": [[1, 2, 3], [2], [], [1, 3], [1]]})
        assert [list(c.members) for c in f] == [[], [1], [2], [1, 3], [1, 2, 3]]


class TestClassify:
    def test_line_cone_system_is_unstructured(self):
        rep = classify(load_set_system(LINE_CONE_5SET))
        assert not rep.is_regular
        assert not rep.is_weakly_union_closed
        assert not rep.is_union_intersection_closed
        assert rep.height == 2
        assert rep.closure_height == 4

    def test_regular_lift_system(self):
        rep = classify(load_set_system(REGULAR_LIFT_8SET))
        assert rep.is_regular
        assert not rep.is_union_intersection_closed

    def test_power_set(self):
        f = system(3, *[s for s in [[], [1], [2], [3], [1, 2], [1, 3], [2, 3], [1, 2, 3]]])
        rep = classify(f)
        assert rep.is_regular and rep.is_weakly_union_closed
        assert rep.is_union_intersection_closed
        assert rep.height == 3 == rep.closure_height


class TestClosure:
    def test_line_cone_closure(self):
        f = closure(load_set_system(LINE_CONE_5SET))
        assert [list(c.members) for c in f] == [
            [], [2], [3], [1, 2], [2, 3], [3, 4], [1, 2, 3], [2, 3, 4], [1, 2, 3, 4],
        ]

    def test_fixed_point(self):
        f = closure(load_set_system(LINE_CONE_5SET))
        assert masks(closure(f)) == masks(f)

    def test_regular_lift_closure_is_twelve_sets(self):
        f = closure(load_set_system(REGULAR_LIFT_8SET))
        assert [list(c.members) for c in f] == [
            [], [1], [2], [3], [1, 2], [1, 3], [2, 3], [3, 4],
            [1, 2, 3], [1, 3, 4], [2, 3, 4], [1, 2, 3, 4],
        ]


class TestMaximalChains:
    def test_two_element_system(self):
        f = system(3, [], [1, 2, 3])
        chains = maximal_chains(f)
        assert len(chains) == 1
        assert [c.mask for c in chains[0]] == [0, 0b111]

    def test_power_set_has_factorial_many(self):
        # independent oracle: each chain of the power set is a permutation
        import itertools

        f = system(3, *[list(s) for r in range(4) for s in itertools.combinations([1, 2, 3], r)])
        chains = maximal_chains(f)
        assert len(chains) == 6
        assert {c.order() for c in chains} == set(itertools.permutations([1, 2, 3]))

    def test_weber_gap_system_orders(self):
        chains = maximal_chains(load_set_system(WEBER_GAP_10SET))
        assert {c.order() for c in chains} == {
            (1, 4, 2, 3, 5),
            (2, 4, 1, 3, 5),
            (2, 4, 3, 5, 1),
            (2, 4, 3, 1, 5),
        }
        # deterministic lexicographic listing
        assert [c.order() for c in chains] == [
            (1, 4, 2, 3, 5), (2, 4, 1, 3, 5), (2, 4, 3, 1, 5), (2, 4, 3, 5, 1),
        ]

    def test_chains_are_maximal(self):
        f = load_set_system(WEBER_GAP_10SET)
        for chain in maximal_chains(f):
            steps = list(chain)
            for a, b in zip(steps, steps[1:]):
                between = [
                    c for c in f if a.mask != c.mask != b.mask and a < c < b
                ]
                assert not between, f"{a} -> {b} skips {between}"


class TestChainValidation:
    def test_rejects_wrong_endpoints(self):
        with pytest.raises(DocumentError):
            ChainOfSets((Coalition(1, 2), Coalition(3, 2)))

    def test_rejects_non_monotone(self):
        with pytest.raises(DocumentError):
            ChainOfSets((Coalition(0, 2), Coalition(2, 2), Coalition(1, 2), Coalition(3, 2)))


@st.composite
def small_systems(draw):
    n = draw(st.integers(min_value=1, max_value=5))
    full = (1 << n) - 1
    extra = draw(st.sets(st.integers(min_value=0, max_value=full), max_size=12))
    from boundedcore import SetSystem

    return SetSystem.from_masks(n, extra | {0, full})


@settings(max_examples=120, deadline=None)
@given(small_systems())
def test_closure_properties(f):
    g = closure(f)
    assert set(masks(f)) <= set(masks(g))
    assert len(g) <= 1 << f.n
    pool = masks(g)
    for a in pool:
        for b in pool:
            assert (a | b) in g and (a & b) in g
    assert masks(closure(g)) == pool


@settings(max_examples=80, deadline=None)
@given(small_systems())
def test_regularity_matches_chain_lengths(f):
    chains = maximal_chains(f)
    assert classify(f).is_regular == all(len(c) == f.n + 1 for c in chains)
