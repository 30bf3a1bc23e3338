"""Exact Laurent arithmetic and the Burau matrices."""
from fractions import Fraction

import pytest

from twistlab.braids import BraidWord, compose, exponent_sum, fundamental_word, power
from twistlab.burau import (
    LaurentPoly,
    P_ONE,
    P_T,
    P_ZERO,
    burau_reduced,
    burau_reduced_at,
    burau_unreduced,
    burau_unreduced_at,
    det,
    evaluate_at,
    format_matrix,
    identity_matrix,
    is_torelli_shadow,
    matrix_mul,
    matrix_to_json,
)


# -- Laurent polynomials ----------------------------------------------------


def test_poly_normalization():
    assert LaurentPoly(((2, 0), (1, 3))).terms == ((1, 3),)
    assert LaurentPoly.constant(0) == P_ZERO
    assert LaurentPoly.t_power(5, 0) == P_ZERO
    with pytest.raises(ValueError):
        LaurentPoly(((1, 2), (1, 3)))


def test_poly_arithmetic():
    t = P_T
    one = P_ONE
    assert (one - t) + t == one
    assert (one + t) * (one - t) == LaurentPoly(((0, 1), (2, -1)))
    assert -(one - t) == t - one
    assert LaurentPoly.t_power(-1) * t == one
    assert (t * t).terms == ((2, 1),)


def test_poly_evaluate_and_str():
    p = P_ONE - P_T
    assert p.evaluate(-1) == 2
    assert p.evaluate(Fraction(1, 2)) == Fraction(1, 2)
    assert str(p) == "1 - t"
    assert str(P_ZERO) == "0"
    assert str(LaurentPoly.t_power(-1)) == "t^-1"
    assert str(LaurentPoly.t_power(2, -3)) == "-3*t^2"
    with pytest.raises(ValueError):
        p.evaluate(0)


def test_matrix_helpers():
    eye = identity_matrix(2)
    m = ((P_T, P_ONE), (P_ZERO, P_ONE))
    assert matrix_mul(eye, m) == m
    assert evaluate_at(m, 2) == ((Fraction(2), Fraction(1)), (Fraction(0), Fraction(1)))
    assert det(m) == P_T
    assert det(identity_matrix(3)) == P_ONE


# -- the representations ----------------------------------------------------


def test_unreduced_generator_fixtures():
    m = burau_unreduced(BraidWord(2, (1,)))
    assert m == ((P_ONE - P_T, P_T), (P_ONE, P_ZERO))
    minv = burau_unreduced(BraidWord(2, (-1,)))
    assert matrix_mul(m, minv) == identity_matrix(2)
    assert burau_unreduced(BraidWord.identity(3)) == identity_matrix(3)


def test_unreduced_is_functorial():
    a = BraidWord(3, (1, -2))
    b = BraidWord(3, (2, 2, 1))
    assert burau_unreduced(compose(a, b)) == matrix_mul(
        burau_unreduced(a), burau_unreduced(b)
    )


def test_burau_respects_the_braid_relation():
    assert burau_unreduced(BraidWord(3, (1, 2, 1))) == burau_unreduced(
        BraidWord(3, (2, 1, 2))
    )
    assert burau_reduced(BraidWord(4, (1, 3))) == burau_reduced(BraidWord(4, (3, 1)))


def test_reduced_fixtures():
    # B_2: sigma_1 acts by -t on the quotient line
    assert burau_reduced(BraidWord(2, (1,))) == ((LaurentPoly.t_power(1, -1),),)
    assert burau_reduced(BraidWord(2, (1, 1))) == ((LaurentPoly.t_power(2),),)
    assert burau_reduced(BraidWord.identity(4)) == identity_matrix(3)


def test_reduced_determinant_formula():
    for word in (
        BraidWord(3, (1, 2, 1)),
        BraidWord(4, (1, -3, 2, 2)),
        fundamental_word(4),
    ):
        e = exponent_sum(word)
        assert det(burau_reduced(word)) == LaurentPoly.t_power(
            e, 1 if e % 2 == 0 else -1
        )


def test_numeric_paths_agree_with_symbolic():
    word = BraidWord(4, (1, -3, 2, 2, -1))
    for t0 in (-1, 2, Fraction(1, 3)):
        assert burau_unreduced_at(word, t0) == evaluate_at(burau_unreduced(word), t0)
        assert burau_reduced_at(word, t0) == evaluate_at(burau_reduced(word), t0)
    with pytest.raises(ValueError):
        burau_unreduced_at(word, 0)


def test_torelli_shadow():
    # the full twist on two strands is a homology shadow of the identity
    assert is_torelli_shadow(BraidWord(2, (1, 1)))
    # non-pure words are rejected outright
    assert not is_torelli_shadow(BraidWord(2, (1,)))
    # pure but acting nontrivially at t = -1
    assert not is_torelli_shadow(BraidWord(3, (1, 1)))
    assert not is_torelli_shadow(power(fundamental_word(3), 2))


def test_serialization_helpers():
    m = burau_reduced(BraidWord(2, (1,)))
    assert matrix_to_json(m) == [[[[1, -1]]]]
    assert format_matrix(m) == "[ -t ]"
    assert "t" in format_matrix(burau_reduced(BraidWord(3, (1, 2))))
