import pytest
from hypothesis import given

from braidcalc.core import (
    ArtinWord,
    Component,
    Framing,
    Letter,
    MixedWord,
    SurgeryPresentation,
    WordError,
    closure_cycles,
    exponent_sums,
    free_reduce,
    invert,
    lambda_word,
    permutation_of,
    word,
)

from .strategies import mixed_words


def test_letter_out_of_range():
    with pytest.raises(WordError):
        MixedWord(2, 2, (Letter("s", 2),))
    with pytest.raises(WordError):
        MixedWord(2, 2, (Letter("a", 3),))
    with pytest.raises(WordError):
        MixedWord(1, 2, (Letter("S", 1),))
    with pytest.raises(WordError):
        MixedWord(1, 2, (Letter("x", 1),))


def test_context_mismatch_on_product():
    with pytest.raises(WordError):
        word(1, 2, ["a1"]) * word(1, 3, ["a1"])


def test_power_and_inverse():
    w = word(2, 2, ["a1", "s1-"])
    assert str(w**2) == "a1 s1^-1 a1 s1^-1"
    assert str(w**-1) == "s1 a1^-1"
    assert (w**0).letters == ()


def test_lambda_word_conventions():
    assert str(lambda_word(1, 3, 4)) == "s1 s2 s3"
    assert str(lambda_word(3, 1, 4)) == "s3 s2 s1"
    assert str(lambda_word(2, 2, 4)) == "s2"
    assert lambda_word(0, 3, 4).letters == ()
    assert lambda_word(3, 0, 4).letters == ()


def test_free_reduce_both_word_types():
    assert free_reduce(word(1, 2, ["a1", "s1", "s1-", "a1-", "a1"])).letters == (Letter("a", 1),)
    assert free_reduce(ArtinWord(3, (1, 2, -2, -1))).letters == ()


def test_permutation_ignores_loops():
    assert permutation_of(word(2, 2, ["a1", "a2-"])) == (1, 2, 3, 4)
    assert permutation_of(word(2, 2, ["S1"])) == (2, 1, 3, 4)
    assert permutation_of(word(1, 3, ["s1", "s2"])) == (1, 4, 2, 3)


def test_exponent_sums():
    e = exponent_sums(word(2, 2, ["a1", "a1", "a2-", "s1", "S1-"]))
    assert (e.fixed, e.moving) == (-1, 1)
    assert e.loop(1) == 2 and e.loop(2) == -1


def test_framing_normalises():
    assert Framing(2, -3) == Framing(-2, 3)
    with pytest.raises(WordError):
        Framing(2, 4)
    with pytest.raises(WordError):
        Framing(1, 0)


def test_presentation_validation():
    trefoil = word(2, 0, ["S1", "S1", "S1"])
    assert closure_cycles(trefoil) == [(1, 2)]
    SurgeryPresentation(2, trefoil, (Component((1, 2), Framing(1, 1)),))
    with pytest.raises(WordError):
        SurgeryPresentation(2, trefoil, (Component((1,), Framing(1, 1)), Component((2,), Framing(1, 1))))
    with pytest.raises(WordError):
        SurgeryPresentation(2, word(2, 0, ["S1", "S1"]), (Component((1,), Framing(1, 1)),))


@given(mixed_words())
def test_inverse_reduces_to_identity(w):
    assert free_reduce(w * invert(w)).letters == ()


@given(mixed_words())
def test_invert_is_involution(w):
    assert invert(invert(w)) == w
