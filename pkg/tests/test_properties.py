"""Property-based invariant tests over hypothesis-chosen random seeds.

Every case body lives in ``_support``; here each one is driven through a
large sample of seeds.  ``derandomize=True`` keeps runs reproducible.
"""
from random import Random

from hypothesis import given, settings
from hypothesis import strategies as st

from _support import (
    case_action_composition,
    case_braid_relations,
    case_burau_determinant,
    case_half_twist_square,
    case_homomorphism_laws,
    case_inverse_roundtrip,
    case_naturality,
)

seeds = st.integers(min_value=0, max_value=2**48 - 1)
bulk = settings(max_examples=1000, derandomize=True, deadline=None, database=None)
sampled = settings(max_examples=200, derandomize=True, deadline=None, database=None)


@bulk
@given(seeds)
def test_braid_relations_hold_in_curve_action(seed):
    case_braid_relations(Random(seed))


@bulk
@given(seeds)
def test_action_composes_functorially(seed):
    case_action_composition(Random(seed))


@bulk
@given(seeds)
def test_inverses_round_trip(seed):
    case_inverse_roundtrip(Random(seed))


@bulk
@given(seeds)
def test_homomorphism_laws(seed):
    case_homomorphism_laws(Random(seed))


@bulk
@given(seeds)
def test_burau_determinant_tracks_exponent_sum(seed):
    case_burau_determinant(Random(seed))


@sampled
@given(seeds)
def test_twist_words_are_natural_under_conjugation(seed):
    case_naturality(Random(seed))


@sampled
@given(seeds)
def test_half_twist_squares_to_neighbourhood_twist(seed):
    case_half_twist_square(Random(seed))
