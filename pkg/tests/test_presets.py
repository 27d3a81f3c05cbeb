import pytest

from braidcalc.band_moves import crossing_word_c, substitute_beta, torus_word_d
from braidcalc.core import (
    Letter,
    MixedWord,
    WordError,
    closure_cycles,
    exponent_sums,
    free_reduce,
    permutation_of,
    word,
)
from braidcalc.presets import (
    _Ctx,
    lens_space,
    seifert_manifold,
    torus_knot_fixed_word,
    torus_knot_surgery,
    trefoil_homology_sphere,
)
from braidcalc.word_problem import equal


def loops(m, n):
    for i in range(1, m + 1):
        for s in (1, -1):
            yield MixedWord(m, n, (Letter("a", i, s),))


def test_lens_presentation():
    ps = lens_space(2, 3)
    assert ps.presentation.m == 1 and ps.presentation.fixed_word.letters == ()
    assert ps.component.framing.p == 2 and ps.component.framing.q == 3
    with pytest.raises(WordError):
        lens_space(2, 4)


def test_lens_unit_framing_at_zero():
    assert str(lens_space(1, 1).display_d(0)) == "a1"


@pytest.mark.parametrize("pq", [(1, 1), (2, 3), (3, 2)])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_lens_c_and_substitution_match_general(pq, n):
    ps = lens_space(*pq)
    comp = ps.component
    for s in (1, -1):
        assert equal(ps.display_c(n, s), crossing_word_c(1, comp.framing.q, n, s))
    for b in loops(1, n):
        assert equal(ps.display_substitute(b), substitute_beta(b, comp))


def test_lens_display_d_is_pure():
    # the displayed closing run returns every strand home, so it cannot be a (2,3) cable
    d = lens_space(2, 3).display_d(1)
    assert not equal(d, torus_word_d(lens_space(2, 3).presentation, 0, 1))


def test_lens_loop_conjugation_has_no_combing():
    ps = lens_space(2, 3)
    beta = word(1, 2, ["s1"])
    assert str(ps.loop_conjugate(beta, 1, 1)) == "a1^-1 s1 a1"


def test_trefoil_presentation():
    ps = trefoil_homology_sphere(3)
    pres = ps.presentation
    assert str(pres.fixed_word) == "S1 S1 S1"
    assert closure_cycles(pres.fixed_word) == [(1, 2)]
    assert (ps.component.framing.p, ps.component.framing.q) == (1, 3)
    assert trefoil_homology_sphere(-2).component.framing.p == -1


@pytest.mark.parametrize("q", [1, 2])
@pytest.mark.parametrize("n", [0, 1, 2])
def test_trefoil_d_and_c_match_general(q, n):
    ps = trefoil_homology_sphere(q)
    assert equal(ps.display_d(n), torus_word_d(ps.presentation, 0, n))
    if n:
        for s in (1, -1):
            assert equal(ps.display_c(n, s), crossing_word_c(2, q, n, s, m=2))


def test_trefoil_comb_first_factor():
    w = trefoil_homology_sphere(1).display_comb(1)
    assert str(w).startswith("s1 a2 s1^-1")


def test_trefoil_displayed_comb_loop_total():
    # combing two parallel cables through three crossings produces 3q loops in
    # total; the displayed product carries 7q
    for q in (1, 2):
        ps = trefoil_homology_sphere(q)
        e = exponent_sums(ps.display_comb(1))
        assert (e.loop(1), e.loop(2)) == (3 * q, 4 * q)
        ours = exponent_sums(ps.band_move(MixedWord(2, 1), 1).comb_word)
        assert ours.loop(1) + ours.loop(2) == 3 * q


def test_seifert_presentation():
    ps = seifert_manifold([(2, 1), (3, 2), (-1, 3)])
    pres = ps.presentation
    assert pres.m == 4
    assert closure_cycles(pres.fixed_word) == [(1,), (2,), (3,), (4,)]
    assert pres.components[-1].framing.p == 0
    # central strand links every other strand once
    e = exponent_sums(pres.fixed_word)
    assert e.fixed == 2 * 3


@pytest.mark.parametrize("n", [1, 2, 3])
def test_seifert_zero_framed_move_matches_general(n):
    ps = seifert_manifold([(2, 1), (3, 2)])
    assert ps.display_d(n).letters == ()
    for s in (1, -1):
        assert equal(ps.display_c(n, s), crossing_word_c(1, 1, n, s, m=3))
    for b in loops(3, n):
        assert equal(ps.display_substitute(b), substitute_beta(b, ps.component))
    out = ps.band_move(MixedWord(3, n), 1)
    assert out.d.letters == () and str(out.c) == f"s{n}"


@pytest.mark.parametrize("j", [1, 2])
def test_seifert_fractional_move_substitutions(j):
    ps = seifert_manifold([(2, 3), (3, 2)], band_strand=j)
    for n in (1, 2):
        for b in loops(3, n):
            assert equal(ps.display_substitute(b), substitute_beta(b, ps.component))


def test_torus_knot_presentation():
    assert str(torus_knot_fixed_word(3, 2)) == "S1 S2 S1 S2"
    ps = torus_knot_surgery(2, 3, 2, 3)
    assert ps.component.strands == (1, 2)
    assert ps.band_move(MixedWord(2, 1), 1).new_n == 7
    with pytest.raises(WordError):
        torus_knot_surgery(2, 4, 1, 1)


@pytest.mark.parametrize("args", [(2, 3, 2, 3), (3, 2, 1, 2), (3, 4, 1, 1)])
def test_torus_knot_substitutions_match_general(args):
    ps = torus_knot_surgery(*args)
    m = args[0]
    for n in (1, 2):
        for b in loops(m, n):
            assert equal(ps.display_substitute(b), substitute_beta(b, ps.component))


def test_degenerate_torus_knot_is_lens_space():
    t = torus_knot_surgery(1, 5, 2, 3)
    lens = lens_space(2, 3)
    beta = word(1, 2, ["a1", "s1"])
    a, b = t.band_move(beta, 1), lens.band_move(beta, 1)
    assert equal(a.word(), b.word())


@pytest.mark.parametrize("frs,j", [([(2, 3), (3, 2)], 1), ([(2, 3), (3, 2)], 2), ([(2, 1), (5, 3)], 2)])
def test_seifert_displayed_d_needs_shorter_closing_run(frs, j):
    ps = seifert_manifold(frs, band_strand=j)
    p, q = frs[j - 1]
    for n in (1, 2, 3):
        general = torus_word_d(ps.presentation, ps.band_component, n)
        assert not equal(ps.display_d(n), general)
        c = _Ctx(3, n + q)
        fixed = free_reduce((c.dn(n + q - 1, 1) * c.a(j) * c.idn(n, 1)) ** p)
        assert equal(fixed, general)


def test_torus_knot_displayed_d_differs_from_general():
    ps = torus_knot_surgery(2, 3, 2, 3)
    for n in (1, 2):
        assert not equal(ps.display_d(n), torus_word_d(ps.presentation, 0, n))


@pytest.mark.parametrize("q", [1, 2])
def test_trefoil_displayed_substitution_differs_from_general(q):
    ps = trefoil_homology_sphere(q)
    for n in (1, 2):
        for b in loops(2, n):
            shown, general = ps.display_substitute(b), substitute_beta(b, ps.component)
            assert not equal(shown, general)
            pure = permutation_of(shown) == permutation_of(general)
            # the inverse row for a_2 carries an out-of-range run and is not even pure
            assert pure == (b.letters[0] != Letter("a", 2, -1))
