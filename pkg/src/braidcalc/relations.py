"""Defining relations of the mixed braid group and companion identities.

Every generator yields ``(label, lhs, rhs)`` triples of words that must be
equal.  They drive the self-checks and make handy relator sources for random
testing.
"""

from __future__ import annotations

from typing import Iterator

from .core import FIXED, LOOP, MOVING, Letter, MixedWord, invert, lambda_word

Triple = tuple[str, MixedWord, MixedWord]


def _w(m: int, n: int, *letters) -> MixedWord:
    return MixedWord(m, n, tuple(Letter(*x) for x in letters))


def presentation_relations(m: int, n: int) -> Iterator[Triple]:
    """All instances of the five relation families for B_{m,n}."""
    s = lambda j, e=1: (MOVING, j, e)  # noqa: E731
    a = lambda i, e=1: (LOOP, i, e)  # noqa: E731
    for k in range(1, n):
        for j in range(1, n):
            if abs(k - j) > 1:
                yield f"far s{k} s{j}", _w(m, n, s(k), s(j)), _w(m, n, s(j), s(k))
    for k in range(1, n - 1):
        yield (
            f"braid s{k}",
            _w(m, n, s(k), s(k + 1), s(k)),
            _w(m, n, s(k + 1), s(k), s(k + 1)),
        )
    for i in range(1, m + 1):
        for k in range(2, n):
            yield f"a{i} s{k}", _w(m, n, a(i), s(k)), _w(m, n, s(k), a(i))
    if n >= 2:
        for i in range(1, m + 1):
            yield (
                f"a{i} s1 twist",
                _w(m, n, a(i), s(1), a(i), s(1)),
                _w(m, n, s(1), a(i), s(1), a(i)),
            )
        for i in range(1, m + 1):
            for r in range(1, i):
                t = _w(m, n, s(1), a(r), s(1, -1))
                yield f"a{i} t{r}", _w(m, n, a(i)) * t, t * _w(m, n, a(i))


def relators(m: int, n: int) -> list[MixedWord]:
    """lhs . rhs^-1 for every presentation relation."""
    return [lhs * invert(rhs) for _, lhs, rhs in presentation_relations(m, n)]


def combing_relations(m: int, n: int = 1) -> Iterator[Triple]:
    """Sigma_k^{+-1} pushed past a_i^{+-1}: the six families, all indices."""
    S = lambda k, e=1: (FIXED, k, e)  # noqa: E731
    a = lambda i, e=1: (LOOP, i, e)  # noqa: E731
    for k in range(1, m):
        for e in (1, -1):
            yield f"S{k} a{k}^{e}", _w(m, n, S(k), a(k, e)), _w(m, n, a(k + 1, e), S(k))
            yield (
                f"S{k} a{k + 1}^{e}",
                _w(m, n, S(k), a(k + 1, e)),
                _w(m, n, a(k + 1, -1), a(k, e), a(k + 1), S(k)),
            )
            yield (
                f"S{k}^-1 a{k}^{e}",
                _w(m, n, S(k, -1), a(k, e)),
                _w(m, n, a(k), a(k + 1, e), a(k, -1), S(k, -1)),
            )
            yield (
                f"S{k}^-1 a{k + 1}^{e}",
                _w(m, n, S(k, -1), a(k + 1, e)),
                _w(m, n, a(k, e), S(k, -1)),
            )
            for i in range(1, m + 1):
                if i not in (k, k + 1):
                    for f in (1, -1):
                        yield (
                            f"S{k}^{f} a{i}^{e}",
                            _w(m, n, S(k, f), a(i, e)),
                            _w(m, n, a(i, e), S(k, f)),
                        )


def cable_loop_forms(q: int, j: int, sign: int, m: int | None = None) -> tuple[MixedWord, MixedWord]:
    """The two product expressions of a (positive or negative) cable looping."""
    m = j if m is None else m
    lam = lambda k, r: lambda_word(k, r, q, m)  # noqa: E731
    a = MixedWord(m, q, (Letter(LOOP, j, sign),))
    left = MixedWord(m, q)
    right = MixedWord(m, q)
    for i in range(q):
        if sign > 0:
            left = left * lam(i, 1) * a * invert(lam(i, 1))
            right = right * invert(lam(1, q - 1 - i)) * a * lam(1, q - 1 - i)
        else:
            left = left * invert(lam(1, i)) * a * lam(1, i)
            right = right * lam(q - 1 - i, 1) * a * invert(lam(q - 1 - i, 1))
    return left, right


def two_cable_chain(m: int = 2) -> list[MixedWord]:
    """Displayed steps of the two-strand cable combing computation, as lhs.rhs^-1.

    Entry 0 compares the two combing results directly; the remaining entries
    are the successive rewritten equations, ending with a defining relation.
    """
    from .dsl import parse_word

    def eq(lhs: str, rhs: str) -> MixedWord:
        return parse_word(lhs, m, 2) * invert(parse_word(rhs, m, 2))

    return [
        eq(
            "a2^-1 s1^-1 a2^-1 s1 a1 s1 a1 s1^-1 a2 s1 a2 s1^-1",
            "a2^-1 a1 a2 s1 a2^-1 a1 a2 s1^-1",
        ),
        eq("s1^-1 a2^-1 s1 a1 s1 a1 s1^-1 a2 s1", "a1 a2 s1 a2^-1 a1"),
        eq("s1^-1 a2^-1 s1 a1 a2 s1 a1 s1^-1 s1", "a1 a2 s1 a2^-1 a1"),
        eq("s1^-1 a2^-1 s1 a1 s1^-1 s1 a2 s1", "a1 a2 s1 a2^-1"),
        eq("s1^-1 s1 a1 s1^-1 a2^-1 s1 a2 s1", "a1 a2 s1 a2^-1"),
        eq("s1^-1 a2^-1 s1 a2 s1", "a2 s1 a2^-1"),
        eq("s1 a2 s1 a2", "a2 s1 a2 s1"),
    ]


def two_cable_pair(m: int = 2) -> tuple[MixedWord, MixedWord]:
    """Cable-first and uncable-first combings of a 2-cable, as first stated.

    These are written with sigma_1^-1 ... sigma_1 conjugators; the chain in
    :func:`two_cable_chain` uses sigma_1 ... sigma_1^-1 instead.
    """
    from .dsl import parse_word

    return (
        parse_word("a2^-1 s1^-1 a2^-1 s1 a1 s1^-1 a1 s1 a2 s1^-1 a2 s1", m, 2),
        parse_word("a2^-1 a1 a2 s1^-1 a2^-1 a1 a2 s1", m, 2),
    )
