"""Blocking pairs, stability checks, and the exhaustive enumerator."""

from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from roommates import (
    BlockingReason,
    BudgetExceeded,
    Matching,
    Profile,
    build_profile,
    enumerate_stable_matchings,
    exists_stable_matching,
    find_blocking_pairs,
    fixture,
    is_perfect,
    is_stable,
)

from oracles import (
    all_matchings,
    blocking_pairs_by_definition,
    brute_perfect_stable_matchings,
    brute_stable_matchings,
    random_complete_profile,
    random_matching,
    random_profile,
)


def pair_sets(matchings):
    return {frozenset(m.pairs) for m in matchings}


# ---------------------------------------------------------------------------
# find_blocking_pairs
# ---------------------------------------------------------------------------

def test_stable_fixture_matching_has_no_blocking_pairs():
    profile = fixture("example1")
    assert find_blocking_pairs(profile, Matching([(0, 1), (2, 3)])) == []


def test_swapped_fixture_matching_is_blocked():
    profile = fixture("example1")
    found = find_blocking_pairs(profile, Matching([(0, 2), (1, 3)]))
    assert (1, 2) in [bp.pair for bp in found]
    for bp in found:
        if bp.pair == (1, 2):
            assert bp.reason_x is BlockingReason.PREFERS_OVER_PARTNER
            assert bp.reason_y is BlockingReason.PREFERS_OVER_PARTNER


def test_empty_matching_blocks_on_every_edge():
    profile = fixture("example1")
    found = find_blocking_pairs(profile, Matching([]))
    assert [bp.pair for bp in found] == [
        (0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3),
    ]
    assert all(
        bp.reason_x is BlockingReason.UNMATCHED
        and bp.reason_y is BlockingReason.UNMATCHED
        for bp in found
    )


def test_blocking_pairs_come_out_sorted():
    profile = fixture("p3")
    found = find_blocking_pairs(profile, Matching([]))
    assert [bp.pair for bp in found] == sorted(bp.pair for bp in found)


def test_matching_outside_the_profile_is_rejected():
    profile = fixture("example1")
    with pytest.raises(ValueError):
        find_blocking_pairs(profile, Matching([(0, 9)]))


def test_unacceptable_pair_is_rejected():
    # p2's agents 2 and 3 (1-based) do not rank each other.
    with pytest.raises(ValueError):
        find_blocking_pairs(fixture("p2"), Matching([(1, 2)]))


@settings(max_examples=80, deadline=None)
@given(seed=st.integers(0, 10**6), n=st.integers(2, 7))
def test_blocking_pairs_match_the_definition(seed, n):
    rng = random.Random(seed)
    profile = random_profile(rng, n)
    matching = random_matching(rng, profile)
    found = find_blocking_pairs(profile, matching)
    assert {bp.pair for bp in found} == blocking_pairs_by_definition(profile, matching)


# ---------------------------------------------------------------------------
# is_stable / is_perfect
# ---------------------------------------------------------------------------

def test_partial_matching_of_incomplete_fixture_is_stable():
    assert is_stable(fixture("p1"), Matching([(0, 4), (3, 5)]))


def test_cycle_fixture_has_no_stable_matching_at_all():
    profile = fixture("p3")
    for pairs in all_matchings(profile):
        assert not is_stable(profile, Matching(pairs))


def test_empty_profile_empty_matching_is_stable():
    assert is_stable(Profile({}), Matching([]))


def test_perfect_means_everyone_matched():
    profile = fixture("example1")
    assert is_perfect(profile, Matching([(0, 1), (2, 3)]))
    assert not is_perfect(profile, Matching([(0, 1)]))
    assert not is_perfect(fixture("p1"), Matching([(0, 4), (3, 5)]))
    assert not is_perfect(profile, Matching([]))


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------

def test_enumerates_both_matchings_of_the_tied_example():
    found = enumerate_stable_matchings(fixture("example1"))
    assert pair_sets(found) == {
        frozenset({(0, 1), (2, 3)}),
        frozenset({(0, 3), (1, 2)}),
    }


def test_modified_example_has_none():
    assert enumerate_stable_matchings(fixture("example1_modified")) == []


def test_cycle_fixture_enumerates_empty():
    assert enumerate_stable_matchings(fixture("p3")) == []


def test_incomplete_fixture_agrees_with_the_brute_oracle():
    profile = fixture("p1")
    found = enumerate_stable_matchings(profile)
    assert pair_sets(found) == brute_stable_matchings(profile)
    assert all(not is_perfect(profile, m) for m in found)


def test_star_fixture_has_exactly_two_stable_matchings():
    found = enumerate_stable_matchings(fixture("p2"))
    assert pair_sets(found) == {
        frozenset({(0, 1), (2, 3)}),
        frozenset({(0, 2), (1, 3)}),
    }


def test_enumeration_is_sorted_and_duplicate_free():
    found = enumerate_stable_matchings(fixture("example1"))
    listed = [m.pairs for m in found]
    assert listed == sorted(listed)
    assert len(set(listed)) == len(listed)


def test_exists_returns_a_real_witness():
    ok, witness = exists_stable_matching(fixture("example1"))
    assert ok and witness is not None
    assert is_stable(fixture("example1"), witness)

    ok, witness = exists_stable_matching(fixture("p3"))
    assert (ok, witness) == (False, None)


def test_single_pair_profile_is_satisfiable():
    profile = build_profile({0: [[0], [1]], 1: [[1], [0]]})
    ok, witness = exists_stable_matching(profile)
    assert ok and witness.pairs == ((0, 1),)


def test_budget_is_enforced():
    profile = random_complete_profile(random.Random(0), 10)
    with pytest.raises(BudgetExceeded):
        enumerate_stable_matchings(profile, budget=3)


@settings(max_examples=60, deadline=None)
@given(seed=st.integers(0, 10**6), n=st.integers(2, 7))
def test_enumeration_agrees_with_the_brute_oracle(seed, n):
    profile = random_profile(random.Random(seed), n)
    found = enumerate_stable_matchings(profile)
    assert pair_sets(found) == brute_stable_matchings(profile)


def test_enumeration_agrees_with_the_perfect_only_oracle_when_complete():
    rng = random.Random(23)
    for _ in range(25):
        profile = random_complete_profile(rng, rng.choice([2, 4, 6]), p_tie=0.3)
        found = enumerate_stable_matchings(profile)
        assert pair_sets(found) == brute_perfect_stable_matchings(profile)
        assert all(is_perfect(profile, m) for m in found)


def test_stable_matchings_of_complete_even_profiles_are_perfect():
    for name in ("example1", "example1_modified", "fig2a", "fig2b"):
        profile = fixture(name)
        for m in enumerate_stable_matchings(profile):
            assert is_perfect(profile, m)


def test_adding_a_mutually_devoted_pair_preserves_stability():
    # Append two agents who top-rank each other (below self) and sit at
    # the bottom of everyone else's list; any stable matching extends.
    rng = random.Random(7)
    for _ in range(20):
        n = rng.choice([2, 4, 6])
        profile = random_complete_profile(rng, n, p_tie=0.2)
        stable = enumerate_stable_matchings(profile)
        if not stable:
            continue
        raw = {
            i: [list(g) for g in profile.order(i).groups] + [[n, n + 1]]
            for i in profile.agents
        }
        raw[n] = [[n], [n + 1], list(range(n))]
        raw[n + 1] = [[n + 1], [n], list(range(n))]
        bigger = build_profile(raw)
        for m in stable:
            extended = Matching(list(m.pairs) + [(n, n + 1)])
            assert is_stable(bigger, extended)
