import json
from pathlib import Path

import pytest
from hypothesis import given

from braidcalc.cli import main
from braidcalc.core import WordError
from braidcalc.dsl import (
    ParseError,
    dumps_presentation,
    load_presentation,
    loads_presentation,
    parse_letters,
    parse_word,
    print_word,
    save_presentation,
)
from braidcalc.presets import lens_space, seifert_manifold, torus_knot_surgery, trefoil_homology_sphere
from braidcalc.word_problem import equal

from .strategies import mixed_words

FIXTURES = Path(__file__).parent / "fixtures"
PAIRS = json.loads((FIXTURES / "equal_pairs.json").read_text())


def run(capsys, *argv):
    code = main(list(argv))
    cap = capsys.readouterr()
    return code, cap.out, cap.err


def fields(text):
    return dict(line.split(": ", 1) for line in text.splitlines() if ": " in line)


@given(mixed_words())
def test_print_parse_round_trip(w):
    assert parse_word(print_word(w), w.m, w.n) == w


def test_parse_accepts_extra_whitespace():
    assert print_word(parse_word("  a1   s2^-1\tS1 ", 2, 3)) == "a1 s2^-1 S1"
    assert parse_letters("") == ()


@pytest.mark.parametrize(
    "text,pos",
    [("a1 x2", 3), ("a1s2", 2), ("a1^-2", 2), ("S", 0), ("a1 s2^", 5)],
)
def test_parse_error_position(text, pos):
    with pytest.raises(ParseError) as info:
        parse_letters(text)
    assert info.value.position == pos


def test_parse_range_checked_against_context():
    with pytest.raises(WordError):
        parse_word("s3", 1, 3)


CORPUS = {
    "lens 1/1": lens_space(1, 1),
    "lens 2/3": lens_space(2, 3),
    "lens -3/2": lens_space(-3, 2),
    "trefoil 1": trefoil_homology_sphere(1),
    "trefoil -2": trefoil_homology_sphere(-2),
    "seifert 2": seifert_manifold([(2, 1), (3, 2)]),
    "seifert 3": seifert_manifold([(2, 3), (-3, 2), (5, 1)]),
    "torus 2,3": torus_knot_surgery(2, 3, 1, 2),
    "torus 3,4": torus_knot_surgery(3, 4, -5, 3),
}


def preset_presentations():
    for name, ps in CORPUS.items():
        yield name, ps.presentation


@pytest.mark.parametrize("name,pres", list(preset_presentations()))
def test_presentation_json_round_trip(name, pres, tmp_path):
    text = dumps_presentation(pres)
    back = loads_presentation(text)
    assert back == pres
    assert dumps_presentation(back) == text
    save_presentation(pres, tmp_path / "p.json")
    assert load_presentation(tmp_path / "p.json") == pres


def test_bad_presentation_document():
    with pytest.raises(WordError):
        loads_presentation('{"m": 1}')
    with pytest.raises(WordError):
        loads_presentation("not json")


@pytest.mark.parametrize("case", PAIRS, ids=lambda c: c["left"][:20])
def test_equal_exit_codes_match_library(case, capsys):
    m, n = case["m"], case["n"]
    lib = equal(parse_word(case["left"], m, n), parse_word(case["right"], m, n))
    assert lib == case["equal"]
    code, out, _ = run(capsys, "equal", case["left"], case["right"], "--m", str(m), "--n", str(n))
    assert code == (0 if lib else 1)
    assert out.strip() == ("equal" if lib else "not equal")


def test_fixture_corpus_shape():
    assert len(PAIRS) == 50
    assert sum(c["equal"] for c in PAIRS) == 25


def test_cli_invalid_word_exit_2(capsys):
    code, out, err = run(capsys, "equal", "a1 q", "a1", "--m", "1", "--n", "1")
    assert code == 2 and out == "" and "position" in err


def test_cli_comb(capsys):
    code, out, _ = run(capsys, "comb", "S1 a1", "--m", "2", "--n", "1")
    assert code == 0
    assert fields(out) == {"algebraic": "a2", "coset": "S1"}


def test_cli_comb_budget_exit_3(capsys, monkeypatch):
    monkeypatch.setenv("BRAIDCALC_STEP_BUDGET", "1")
    code, _, err = run(capsys, "comb", "S1 a1 a2 a1", "--m", "2", "--n", "1")
    assert code == 3 and "budget" in err


def test_cli_normalize(capsys):
    code, out, _ = run(capsys, "normalize", "a1 a1^-1", "--m", "1", "--n", "1")
    f = fields(out)
    assert code == 0 and f["strands"] == "2" and f["factors"] == "0"


def test_cli_preset_lens(capsys):
    code, out, _ = run(capsys, "preset", "lens", "--p", "2", "--q", "3")
    doc = json.loads(out)
    assert code == 0
    assert doc["m"] == 1 and doc["fixed_word"] == ""
    assert doc["components"] == [{"strands": [1], "framing": {"p": 2, "q": 3}}]


def test_cli_preset_then_bandmove(capsys, tmp_path):
    path = tmp_path / "lens.json"
    code, out, _ = run(capsys, "preset", "lens", "--p", "1", "--q", "1", "--out", str(path))
    assert code == 0 and out == ""
    code, out, _ = run(capsys, "bandmove", "--pres", str(path), "--n", "1")
    f = fields(out)
    assert code == 0
    assert (f["d"], f["c"], f["new_n"]) == ("s1 a1 s1^-1", "s1", "2")
    # the band needs a moving strand to attach to
    code, _, err = run(capsys, "bandmove", "--pres", str(path), "--n", "0")
    assert code == 2 and err


def test_cli_preset_seifert_bad_framings(capsys):
    code, _, err = run(capsys, "preset", "seifert", "--framings", "2/0")
    assert code == 2 and err


def test_cli_missing_context_is_usage_error(capsys):
    with pytest.raises(SystemExit) as info:
        main(["equal", "a1", "a1"])
    assert info.value.code == 2


def test_cli_missing_presentation_file(capsys, tmp_path):
    code, _, err = run(capsys, "bandmove", "--pres", str(tmp_path / "nope.json"), "--n", "1")
    assert code == 2 and err
