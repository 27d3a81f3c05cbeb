"""Regenerate tests/fixtures/equal_pairs.json.

Equal pairs come from relator insertion and conjugation by inverse pairs;
unequal pairs either change an exponent-sum invariant or are known
non-relations (mirrored relations, non-commuting generators).
"""

import json
import random
from pathlib import Path

from braidcalc.core import Letter, MixedWord, invert
from braidcalc.dsl import print_word
from braidcalc.relations import relators

OUT = Path(__file__).resolve().parents[1] / "tests" / "fixtures" / "equal_pairs.json"


def random_word(rng, m, n, length, fixed=False):
    fams = [("a", m)] + ([("s", n - 1)] if n > 1 else []) + ([("S", m - 1)] if fixed and m > 1 else [])
    out = []
    for _ in range(length):
        fam, top = rng.choice(fams)
        out.append(Letter(fam, rng.randint(1, top), rng.choice((1, -1))))
    return MixedWord(m, n, tuple(out))


def main():
    rng = random.Random(20240611)
    pairs = []
    while len(pairs) < 25:
        m, n = rng.randint(1, 3), rng.randint(2, 4)
        w = random_word(rng, m, n, rng.randint(0, 8), fixed=rng.random() < 0.3)
        v = w
        for _ in range(rng.randint(1, 3)):
            r = rng.choice(relators(m, n))
            r = r if rng.random() < 0.5 else invert(r)
            k = rng.randint(0, len(v))
            v = MixedWord(m, n, v.letters[:k] + r.letters + v.letters[k:])
        pairs.append(dict(m=m, n=n, left=print_word(w), right=print_word(v), equal=True,
                          why="relator insertion"))
    known = [
        (1, 2, "a1 s1", "s1 a1", "loop and first crossing do not commute"),
        (2, 2, "a1 s1 a2 s1^-1", "s1 a2 s1^-1 a1", "mirrored loop relation"),
        (3, 2, "a2 s1 a3 s1^-1", "s1 a3 s1^-1 a2", "mirrored loop relation"),
        (2, 3, "a1 a2", "a2 a1", "loops do not commute"),
        (1, 3, "s1 s2", "s2 s1", "adjacent crossings do not commute"),
        (2, 2, "a1 s1 a1 s1^-1", "s1 a1 s1^-1 a1", "loop and its conjugate do not commute"),
        (1, 2, "s1 s1", "", "full twist is not trivial"),
        (2, 2, "S1 a1", "a1 S1", "combing moves the loop index"),
    ]
    for m, n, left, right, why in known:
        pairs.append(dict(m=m, n=n, left=left, right=right, equal=False, why=why))
    while len(pairs) < 50:
        m, n = rng.randint(1, 3), rng.randint(2, 4)
        w = random_word(rng, m, n, rng.randint(1, 8))
        k = rng.randrange(len(w))
        x = w.letters[k]
        v = MixedWord(m, n, w.letters[:k] + (x.inverse(),) + w.letters[k + 1:])
        pairs.append(dict(m=m, n=n, left=print_word(w), right=print_word(v), equal=False,
                          why="one letter inverted (exponent sum changes)"))
    OUT.write_text(json.dumps(pairs, indent=1) + "\n")
    print(f"wrote {len(pairs)} pairs to {OUT}")


if __name__ == "__main__":
    main()
