"""Curve coordinates and the braid action.

The constant-size update rules are validated two ways: frozen fixtures
computed with the slow first-principles tracing engine, and direct
cross-validation against that engine over exhaustive short words plus a
seeded sample of longer ones.
"""
import random

import pytest

from twistlab.braids import BraidWord
from twistlab.lamination import (
    LoopCoordinates,
    apply_braid,
    apply_generator,
    cap_counts,
    curves_equal,
    from_json,
    norm,
    round_curve,
    to_json,
)
from twistlab.tracer import oracle_apply


# -- construction -----------------------------------------------------------


def test_constructor_validation():
    with pytest.raises(ValueError):
        LoopCoordinates(1, (), ())
    with pytest.raises(ValueError):
        LoopCoordinates(4, (0,), (0, 0))  # wrong vector length
    with pytest.raises(ValueError):
        LoopCoordinates(4, (0, 0), (0, 0))  # zero vector, no boundary
    with pytest.raises(ValueError):
        LoopCoordinates(4, (0, 0), (1, 0), boundary=-1)
    assert LoopCoordinates(2, (), (), boundary=2).boundary == 2


def test_round_curve_fixtures():
    assert round_curve(4, 1, 2) == LoopCoordinates(4, (0, 0), (1, 0))
    assert round_curve(4, 2, 3) == LoopCoordinates(4, (0, 0), (-1, 1))
    assert round_curve(4, 2, 4) == LoopCoordinates(4, (0, 0), (-1, 0))
    assert round_curve(4, 1, 4) == LoopCoordinates(4, (0, 0), (0, 0), boundary=1)
    assert round_curve(3, 1, 2) == LoopCoordinates(3, (0,), (1,))
    with pytest.raises(ValueError):
        round_curve(4, 2, 2)
    with pytest.raises(ValueError):
        round_curve(4, 0, 2)
    with pytest.raises(ValueError):
        round_curve(4, 3, 5)


def test_norm_and_equality():
    assert norm(round_curve(4, 2, 3)) == 2
    assert norm(round_curve(4, 1, 4)) == 1
    assert norm(LoopCoordinates(4, (-1, 0), (-1, 2))) == 4
    assert curves_equal(round_curve(4, 1, 2), round_curve(4, 1, 2))
    assert not curves_equal(round_curve(4, 1, 2), round_curve(4, 2, 3))


def test_json_round_trip():
    c = LoopCoordinates(4, (-1, 0), (-1, 2))
    assert to_json(c) == {"punctures": 4, "a": [-1, 0], "b": [-1, 2]}
    assert from_json(to_json(c)) == c
    d = round_curve(3, 1, 3)
    assert to_json(d) == {"punctures": 3, "a": [0], "b": [0], "boundary": 1}
    assert from_json(to_json(d)) == d
    assert from_json('{"punctures": 3, "a": [0], "b": [1]}') == round_curve(3, 1, 2)
    with pytest.raises(ValueError):
        from_json({"punctures": 3, "a": [0]})


def test_cap_counts_fixtures():
    assert cap_counts((0, 0), (-1, 1)) == (0, 0)  # round(2,3) on 4 punctures
    assert cap_counts((0, 0), (1, 0)) == (1, 0)  # round(1,2): a cap in the first box
    assert cap_counts((1,), (0,)) == (1, 1)  # a curve dipping below puncture 2
    assert cap_counts((), ()) == (0, 0)


# -- the action -------------------------------------------------------------


def test_apply_braid_basics():
    c = round_curve(3, 1, 2)
    assert apply_braid(c, BraidWord.identity(3)) == c
    with pytest.raises(ValueError):
        apply_braid(c, BraidWord(4, (1,)))
    # a twist of the enclosed punctures fixes the enclosing curve
    assert apply_braid(c, BraidWord(3, (1, 1))) == c


def test_single_generator_fixtures():
    """Images frozen from the tracing engine."""
    assert apply_generator(round_curve(3, 2, 3), 1) == LoopCoordinates(3, (1,), (0,))
    assert apply_generator(round_curve(3, 2, 3), -1) == LoopCoordinates(3, (-1,), (0,))
    assert apply_generator(round_curve(3, 1, 2), 2) == LoopCoordinates(3, (-1,), (0,))


def test_word_fixtures():
    """Longer images frozen from the tracing engine."""
    assert apply_braid(round_curve(3, 1, 2), BraidWord(3, (2, 1))) == round_curve(3, 2, 3)
    assert apply_braid(round_curve(4, 2, 3), BraidWord(4, (1, 2, -1))) == round_curve(4, 1, 2)
    assert apply_braid(round_curve(4, 1, 2), BraidWord(4, (2, 2))) == LoopCoordinates(
        4, (-1, 0), (-1, 2)
    )
    assert apply_braid(
        round_curve(4, 1, 2), BraidWord(4, (1, 2, 3, 1, 2, 1))
    ) == round_curve(4, 3, 4)


def test_boundary_component_is_invariant():
    c = round_curve(4, 1, 4)
    for letters in ((1,), (2, 2), (1, 2, -1, 3), (3, -2, 1, -1)):
        assert apply_braid(c, BraidWord(4, letters)) == c


def test_generator_inverse_round_trip():
    c = LoopCoordinates(4, (-1, 0), (-1, 2))
    for i in (1, 2, 3):
        assert apply_generator(apply_generator(c, i), -i) == c
        assert apply_generator(apply_generator(c, -i), i) == c


# -- cross-validation against the tracing engine ----------------------------


def _oracle(coords: LoopCoordinates, letters) -> LoopCoordinates:
    a, b, boundary = oracle_apply(
        coords.a, coords.b, coords.boundary, coords.punctures, tuple(letters)
    )
    return LoopCoordinates(coords.punctures, a, b, boundary)


def _all_round(n):
    return [round_curve(n, i, j) for i in range(1, n) for j in range(i + 1, n + 1)]


@pytest.mark.parametrize("n", [3, 4])
def test_exhaustive_short_words_match_tracer(n):
    gens = [g for i in range(1, n) for g in (i, -i)]
    words = [(x,) for x in gens] + [(x, y) for x in gens for y in gens]
    for word in words:
        braid = BraidWord(n, word)
        for c in _all_round(n):
            assert apply_braid(c, braid) == _oracle(c, word), (word, c)


def test_seeded_long_words_match_tracer():
    rng = random.Random(417)
    for _ in range(60):
        n = rng.randint(3, 5)
        word = tuple(
            rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(rng.randint(3, 6))
        )
        braid = BraidWord(n, word)
        i = rng.randint(1, n - 1)
        j = rng.randint(i + 1, n)
        c = round_curve(n, i, j)
        assert apply_braid(c, braid) == _oracle(c, word), (word, (i, j))
