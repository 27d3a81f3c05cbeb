import pytest
from hypothesis import given, settings

from braidcalc.combing import BudgetExceeded, comb, combed_loop_conjugate, rho, step_budget
from braidcalc.core import MixedWord, word
from braidcalc.relations import combing_relations
from braidcalc.word_problem import equal

from .strategies import mixed_words


def test_first_combing_relation():
    res = comb(word(2, 1, ["S1", "a1"]))
    assert str(res.algebraic) == "a2"
    assert str(res.coset) == "S1"


@pytest.mark.parametrize("m", [2, 3])
def test_combing_relations_are_identities(m):
    for label, lhs, rhs in combing_relations(m):
        assert equal(lhs, rhs), label


@pytest.mark.parametrize("m", [2, 3, 4])
def test_comb_agrees_with_relation_table(m):
    for label, lhs, rhs in combing_relations(m):
        res = comb(lhs)
        assert res.algebraic.letters == rhs.letters[:-1], label


@settings(max_examples=80, deadline=None)
@given(mixed_words(max_m=4, max_n=4, max_len=20))
def test_comb_is_sound(w):
    res = comb(w)
    assert res.algebraic.is_sigma_free()
    assert res.coset.letters == tuple(x for x in w if x.family == "S")
    assert equal(w, res.algebraic * res.coset)


def test_budget(monkeypatch):
    w = word(3, 1, ["S1", "S2", "a1", "a2", "a3"])
    with pytest.raises(BudgetExceeded):
        comb(w, budget=2)
    monkeypatch.setenv("BRAIDCALC_STEP_BUDGET", "1")
    assert step_budget() == 1
    with pytest.raises(BudgetExceeded):
        comb(w)
    monkeypatch.delenv("BRAIDCALC_STEP_BUDGET")
    assert comb(w).coset.letters == w.fixed_part().letters


def test_rho_without_fixed_braid_is_the_loop():
    assert str(rho(1, MixedWord(2, 0))) == "a1"


def test_combed_loop_conjugation_trefoil():
    fixed = word(2, 0, ["S1", "S1", "S1"])
    beta = word(2, 2, ["s1", "a2"])
    out = combed_loop_conjugate(beta, 1, 1, fixed)
    r = rho(1, fixed, 2)
    assert equal(out, word(2, 2, ["a1-"]) * beta * r)
    # rho is the combing of a_1 through Sigma_1^3
    assert equal(r * fixed.widen(2), fixed.widen(2) * word(2, 2, ["a1"]))
