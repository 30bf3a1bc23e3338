"""Curve/arc specs and the compilation of twists and point pushes."""
import pytest

from twistlab.braids import BraidWord, compose, equals, inverse, is_pure, power
from twistlab.free_group import FreeWord, multiply, parse_free_word
from twistlab.lamination import apply_braid, round_curve
from twistlab.twist_compiler import (
    ArcSpec,
    CurveSpec,
    bh_twist_image,
    dehn_twist,
    full_twist_word,
    half_twist,
    push_loop,
    realize,
    spec_from_json,
)


# -- specs ------------------------------------------------------------------


def test_spec_validation():
    with pytest.raises(ValueError):
        CurveSpec(3, (2, 2))
    with pytest.raises(ValueError):
        CurveSpec(3, (0, 2))
    with pytest.raises(ValueError):
        CurveSpec(3, (1, 2), (3,))
    with pytest.raises(ValueError):
        ArcSpec(4, (1, 3))  # arcs join adjacent punctures
    assert CurveSpec(5, (2, 4)).enclosed == 3
    assert ArcSpec(4, (2, 3), (1, -3)).prep_word() == BraidWord(4, (1, -3))


def test_spec_json_round_trip():
    c = CurveSpec(5, (2, 4), (1, -2))
    assert c.to_json() == {"kind": "curve", "punctures": 5, "base": [2, 4], "prep": [1, -2]}
    assert spec_from_json(c.to_json()) == c
    a = ArcSpec(5, (2, 3), (4,))
    assert spec_from_json(a.to_json()) == a
    with pytest.raises(ValueError):
        spec_from_json({"kind": "ribbon", "punctures": 5, "base": [1, 2], "prep": []})


def test_realize():
    assert realize(CurveSpec(4, (2, 3))) == round_curve(4, 2, 3)
    moved = CurveSpec(3, (1, 2), (2,))
    assert realize(moved) == apply_braid(round_curve(3, 1, 2), BraidWord(3, (2,)))
    # arcs realize as the boundary of a small neighbourhood
    assert realize(ArcSpec(4, (2, 3))) == round_curve(4, 2, 3)


# -- twists -----------------------------------------------------------------


def test_full_twist_word_fixtures():
    assert full_twist_word(3, 1, 2).letters == (1, 1)
    assert full_twist_word(4, 2, 4).letters == (2, 3, 2, 3, 2, 3)
    assert full_twist_word(4, 2, 2).letters == ()
    with pytest.raises(ValueError):
        full_twist_word(4, 0, 2)


def test_dehn_twist_words():
    assert dehn_twist(CurveSpec(3, (1, 2))).letters == (1, 1)
    assert dehn_twist(CurveSpec(3, (1, 2), (2,))).letters == (-2, 1, 1, 2)
    assert half_twist(ArcSpec(3, (1, 2), (2,))).letters == (-2, 1, 2)


def test_twists_fix_their_own_curve():
    specs = [
        CurveSpec(5, (2, 4)),
        CurveSpec(5, (2, 5), (-1,)),
        CurveSpec(6, (3, 6), (2, -4, 1)),
    ]
    for c in specs:
        image = apply_braid(realize(c), dehn_twist(c))
        assert image == realize(c)
    arc = ArcSpec(6, (2, 3), (3, 4))
    assert apply_braid(realize(arc), half_twist(arc)) == realize(arc)


def test_twist_fixes_disjoint_curves():
    t = dehn_twist(CurveSpec(5, (1, 2)))
    for other in (CurveSpec(5, (3, 5)), CurveSpec(5, (4, 5))):
        assert apply_braid(realize(other), t) == realize(other)


def test_half_twist_square_is_neighbourhood_twist():
    for arc in (ArcSpec(5, (2, 3)), ArcSpec(6, (3, 4), (4, -2, 5))):
        squared = compose(half_twist(arc), half_twist(arc))
        ring = CurveSpec(arc.punctures, arc.base, arc.prep)
        assert squared == dehn_twist(ring)  # exact letters after free reduction


def test_bh_twist_image():
    c = CurveSpec(5, (2, 4))
    assert bh_twist_image(c) == power(dehn_twist(c), 2)
    with pytest.raises(ValueError):
        bh_twist_image(CurveSpec(5, (2, 3)))  # even enclosure
    with pytest.raises(ValueError):
        bh_twist_image(CurveSpec(5, (2, 5)))  # four punctures


# -- point pushes -----------------------------------------------------------


def test_push_generator_fixtures():
    assert push_loop(2, FreeWord.gen(2, 1)).letters == (-2, -2)
    assert push_loop(2, FreeWord.gen(2, 2)).letters == (-2, -1, -1, 2)
    assert push_loop(2, FreeWord.gen(2, 1), "leftmost").letters == (1, 1)
    assert push_loop(2, FreeWord.gen(2, 2), "leftmost").letters == (1, 2, 2, -1)
    with pytest.raises(ValueError):
        push_loop(3, FreeWord.gen(2, 1))
    with pytest.raises(ValueError):
        push_loop(2, FreeWord.gen(2, 1), "middle")


def test_push_is_an_anti_homomorphism():
    words = [
        ("x1", "x2"),
        ("x1 x2^-1", "x2 x1"),
        ("x3 x1", "x2^-1 x3"),
    ]
    for left, right in words:
        u = parse_free_word(left, 3)
        v = parse_free_word(right, 3)
        assert equals(
            push_loop(3, multiply(u, v)),
            compose(push_loop(3, v), push_loop(3, u)),
        )


def test_push_words_are_pure():
    for text in ("x1", "x2 x1", "x1^-1 x3 x2"):
        assert is_pure(push_loop(3, parse_free_word(text, 3)))


def test_push_around_one_puncture_is_a_twist_pair():
    # pushing around the last loop equals the inverse twist of the two
    # rightmost strands; around the whole boundary it is a twist ratio
    assert equals(
        push_loop(2, FreeWord.gen(2, 1)),
        inverse(dehn_twist(CurveSpec(3, (2, 3)))),
    )
    boundary_loop = parse_free_word("x2 x1", 2)
    expected = compose(
        inverse(dehn_twist(CurveSpec(3, (1, 3)))), dehn_twist(CurveSpec(3, (1, 2)))
    )
    assert equals(push_loop(2, boundary_loop), expected)
