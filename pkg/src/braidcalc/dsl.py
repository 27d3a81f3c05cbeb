"""Text form of mixed words and JSON form of surgery presentations.

Grammar::

    token := ("a" | "s" | "S") integer ["^-1"]
    word  := token*            (whitespace separated; empty = identity)
"""

from __future__ import annotations

import json
import re
from pathlib import Path

from .core import (
    FIXED,
    Component,
    Framing,
    Letter,
    MixedWord,
    SurgeryPresentation,
    WordError,
)

_TOKEN = re.compile(r"([aSs])(\d+)(\^-1)?")


class ParseError(WordError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


def parse_letters(text: str) -> tuple[Letter, ...]:
    """Lex a word without binding it to a context."""
    letters = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        end = m.end() if m else pos
        if not m or (end < len(text) and not text[end].isspace()):
            raise ParseError(f"unexpected character {text[end]!r}", end)
        fam, idx, inv = m.groups()
        letters.append(Letter(fam, int(idx), -1 if inv else 1))
        pos = end
    return tuple(letters)


def parse_word(text: str, m: int, n: int) -> MixedWord:
    return MixedWord(m, n, parse_letters(text))


def print_word(w) -> str:
    letters = w.letters if isinstance(w, MixedWord) else w
    return " ".join(str(Letter(*x)) for x in letters)


# ------------------------------------------------------------------- JSON


def presentation_to_dict(pres: SurgeryPresentation) -> dict:
    return {
        "m": pres.m,
        "fixed_word": print_word(pres.fixed_word),
        "components": [
            {"strands": list(c.strands), "framing": {"p": c.framing.p, "q": c.framing.q}}
            for c in pres.components
        ],
    }


def presentation_from_dict(doc: dict) -> SurgeryPresentation:
    try:
        m = int(doc["m"])
        fixed = parse_word(doc.get("fixed_word", ""), m, 0)
        comps = tuple(
            Component(
                tuple(int(s) for s in c["strands"]),
                Framing(int(c["framing"]["p"]), int(c["framing"]["q"])),
            )
            for c in doc["components"]
        )
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, WordError):
            raise
        raise WordError(f"malformed presentation document: {exc}") from None
    if any(x.family != FIXED for x in fixed):
        raise WordError("fixed_word may contain only S letters")
    return SurgeryPresentation(m, fixed, comps)


def dumps_presentation(pres: SurgeryPresentation) -> str:
    return json.dumps(presentation_to_dict(pres), indent=2, sort_keys=True) + "\n"


def loads_presentation(text: str) -> SurgeryPresentation:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise WordError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise WordError("presentation document must be a JSON object")
    return presentation_from_dict(doc)


def save_presentation(pres: SurgeryPresentation, path) -> None:
    Path(path).write_text(dumps_presentation(pres), encoding="utf-8")


def load_presentation(path) -> SurgeryPresentation:
    return loads_presentation(Path(path).read_text(encoding="utf-8"))
