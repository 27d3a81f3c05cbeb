"""Alphabet and word containers for mixed braids.

A mixed braid on ``m`` fixed and ``n`` moving strands is written over three
letter families:

* ``S`` -- fixed crossings Sigma_k, 1 <= k <= m-1
* ``s`` -- moving crossings sigma_j, 1 <= j <= n-1
* ``a`` -- loop generators a_i, 1 <= i <= m

Indices are 1-based.  Words are immutable; every operation returns a new word.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import gcd
from typing import Iterable, NamedTuple, Sequence

FIXED = "S"
MOVING = "s"
LOOP = "a"
FAMILIES = (FIXED, MOVING, LOOP)


class WordError(ValueError):
    """Raised for malformed letters, words and presentations."""


class Letter(NamedTuple):
    family: str
    index: int
    sign: int = 1

    def inverse(self) -> "Letter":
        return Letter(self.family, self.index, -self.sign)

    def __str__(self) -> str:
        return f"{self.family}{self.index}" + ("^-1" if self.sign < 0 else "")


def _check_letter(letter: Letter, m: int, n: int) -> None:
    family, index, sign = letter
    if sign not in (1, -1):
        raise WordError(f"bad sign in {letter!r}")
    if family == FIXED:
        bound = m - 1
    elif family == MOVING:
        bound = n - 1
    elif family == LOOP:
        bound = m
    else:
        raise WordError(f"unknown letter family {family!r}")
    if not 1 <= index <= bound:
        raise WordError(f"{letter} out of range for context (m={m}, n={n})")


@dataclass(frozen=True)
class MixedWord:
    """A word in Sigma/sigma/a letters bound to a context ``(m, n)``."""

    m: int
    n: int
    letters: tuple[Letter, ...] = ()

    def __post_init__(self) -> None:
        if self.m < 0 or self.n < 0:
            raise WordError("strand counts must be non-negative")
        letters = tuple(Letter(*x) for x in self.letters)
        object.__setattr__(self, "letters", letters)
        for x in letters:
            _check_letter(x, self.m, self.n)

    @classmethod
    def identity(cls, m: int, n: int) -> "MixedWord":
        return cls(m, n, ())

    @classmethod
    def of(cls, m: int, n: int, *letters: tuple) -> "MixedWord":
        return cls(m, n, tuple(Letter(*x) for x in letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __mul__(self, other: "MixedWord") -> "MixedWord":
        if not isinstance(other, MixedWord):
            return NotImplemented
        if (self.m, self.n) != (other.m, other.n):
            raise WordError(
                f"context mismatch: ({self.m},{self.n}) vs ({other.m},{other.n})"
            )
        return MixedWord(self.m, self.n, self.letters + other.letters)

    def __pow__(self, power: int) -> "MixedWord":
        base = self if power >= 0 else invert(self)
        return MixedWord(self.m, self.n, base.letters * abs(power))

    def __str__(self) -> str:
        return " ".join(str(x) for x in self.letters)

    def widen(self, n: int) -> "MixedWord":
        """Same letters in a context with ``n`` >= self.n moving strands."""
        if n < self.n:
            raise WordError("cannot narrow a word's context")
        return MixedWord(self.m, n, self.letters)

    def is_sigma_free(self) -> bool:
        return all(x.family != FIXED for x in self.letters)

    def fixed_part(self) -> "MixedWord":
        return MixedWord(self.m, self.n, tuple(x for x in self.letters if x.family == FIXED))


@dataclass(frozen=True)
class ArtinWord:
    """A word in the Artin generators of the braid group on ``strand_count`` strands.

    Letters are signed integers: ``t`` is the generator swapping positions t, t+1,
    ``-t`` its inverse.
    """

    strand_count: int
    letters: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        letters = tuple(int(x) for x in self.letters)
        object.__setattr__(self, "letters", letters)
        for x in letters:
            if not 1 <= abs(x) <= self.strand_count - 1:
                raise WordError(f"generator {x} out of range for {self.strand_count} strands")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: "ArtinWord") -> "ArtinWord":
        if not isinstance(other, ArtinWord):
            return NotImplemented
        if self.strand_count != other.strand_count:
            raise WordError("strand count mismatch")
        return ArtinWord(self.strand_count, self.letters + other.letters)

    def __pow__(self, power: int) -> "ArtinWord":
        base = self if power >= 0 else invert(self)
        return ArtinWord(self.strand_count, base.letters * abs(power))

    def __str__(self) -> str:
        return " ".join(f"s{abs(x)}" + ("^-1" if x < 0 else "") for x in self.letters)


@dataclass(frozen=True)
class Framing:
    """Reduced rational surgery coefficient p/q with q > 0."""

    p: int
    q: int

    def __post_init__(self) -> None:
        p, q = int(self.p), int(self.q)
        if q == 0:
            raise WordError("framing denominator must be nonzero")
        if q < 0:
            p, q = -p, -q
        g = gcd(abs(p), q)
        if g != 1:
            raise WordError(f"framing {self.p}/{self.q} is not reduced")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    def __str__(self) -> str:
        return f"{self.p}/{self.q}"


@dataclass(frozen=True)
class Component:
    strands: tuple[int, ...]
    framing: Framing

    @property
    def k(self) -> int:
        return len(self.strands)


@dataclass(frozen=True)
class SurgeryPresentation:
    """A closed fixed braid with a rational framing on each closure component."""

    m: int
    fixed_word: MixedWord
    components: tuple[Component, ...]

    def __post_init__(self) -> None:
        comps = tuple(
            c if isinstance(c, Component) else Component(tuple(c[0]), c[1])
            for c in self.components
        )
        object.__setattr__(self, "components", comps)
        fw = self.fixed_word
        if fw.m != self.m or fw.n != 0:
            fw = MixedWord(self.m, 0, fw.letters)
            object.__setattr__(self, "fixed_word", fw)
        if any(x.family != FIXED for x in fw):
            raise WordError("fixed_word may contain only fixed crossings")
        orbits = closure_cycles(fw)
        seen: list[int] = []
        for c in comps:
            if list(c.strands) != sorted(set(c.strands)):
                raise WordError(f"component strands {c.strands} must be strictly increasing")
            if tuple(c.strands) not in orbits:
                raise WordError(
                    f"component {c.strands} is not a closure component of the fixed braid"
                )
            seen.extend(c.strands)
        if sorted(seen) != list(range(1, self.m + 1)):
            raise WordError("components must partition the fixed strands")

    def component(self, idx: int) -> Component:
        try:
            return self.components[idx]
        except IndexError:
            raise WordError(f"no component {idx}") from None


# ---------------------------------------------------------------- operations


def lambda_word(k: int, r: int, n: int, m: int = 1) -> MixedWord:
    """sigma_k ... sigma_r, ascending or descending; empty if k or r is 0."""
    if k < 0 or r < 0:
        raise WordError("lambda indices must be non-negative")
    if k == 0 or r == 0:
        return MixedWord(m, n)
    step = 1 if r >= k else -1
    return MixedWord(m, n, tuple(Letter(MOVING, j, 1) for j in range(k, r + step, step)))


def free_reduce(w):
    """Cancel adjacent inverse pairs; works on MixedWord and ArtinWord."""
    out: list = []
    if isinstance(w, ArtinWord):
        for x in w.letters:
            if out and out[-1] == -x:
                out.pop()
            else:
                out.append(x)
        return ArtinWord(w.strand_count, tuple(out))
    for x in w.letters:
        if out and out[-1] == x.inverse():
            out.pop()
        else:
            out.append(x)
    return MixedWord(w.m, w.n, tuple(out))


def invert(w):
    if isinstance(w, ArtinWord):
        return ArtinWord(w.strand_count, tuple(-x for x in reversed(w.letters)))
    return MixedWord(w.m, w.n, tuple(x.inverse() for x in reversed(w.letters)))


def _ambient_positions(w) -> tuple[int, Iterable[int]]:
    if isinstance(w, ArtinWord):
        return w.strand_count, (abs(x) for x in w.letters)
    m = w.m

    def gen():
        for x in w.letters:
            if x.family == FIXED:
                yield x.index
            elif x.family == MOVING:
                yield m + x.index
            # loops are pure: they contribute nothing to the permutation

    return m + w.n, gen()


def permutation_of(w) -> tuple[int, ...]:
    """Strand permutation as a 1-based tuple: strand starting at i ends at perm[i-1]."""
    size, gens = _ambient_positions(w)
    # pos[p] = strand currently at position p
    pos = list(range(size + 1))
    for t in gens:
        pos[t], pos[t + 1] = pos[t + 1], pos[t]
    perm = [0] * size
    for p in range(1, size + 1):
        perm[pos[p] - 1] = p
    return tuple(perm)


def closure_cycles(w: MixedWord) -> list[tuple[int, ...]]:
    """Orbits of the fixed strands under the closure permutation, each sorted."""
    perm = permutation_of(MixedWord(w.m, 0, tuple(x for x in w if x.family == FIXED)))
    seen: set[int] = set()
    cycles = []
    for i in range(1, w.m + 1):
        if i in seen:
            continue
        orbit = []
        j = i
        while j not in seen:
            seen.add(j)
            orbit.append(j)
            j = perm[j - 1]
        cycles.append(tuple(sorted(orbit)))
    return cycles


@dataclass(frozen=True)
class ExponentSums:
    fixed: int
    moving: int
    loops: tuple[tuple[int, int], ...]

    def loop(self, i: int) -> int:
        return dict(self.loops).get(i, 0)


def exponent_sums(w: MixedWord) -> ExponentSums:
    fixed = sum(x.sign for x in w if x.family == FIXED)
    moving = sum(x.sign for x in w if x.family == MOVING)
    loops: Counter = Counter()
    for x in w:
        if x.family == LOOP:
            loops[x.index] += x.sign
    return ExponentSums(fixed, moving, tuple(sorted((i, c) for i, c in loops.items() if c)))


def word(m: int, n: int, spec: Sequence) -> MixedWord:
    """Compact builder: ``word(2, 3, ["a1", "s2-", "S1"])``."""
    letters = []
    for tok in spec:
        sign = -1 if tok.endswith("-") else 1
        tok = tok.rstrip("-")
        letters.append(Letter(tok[0], int(tok[1:]), sign))
    return MixedWord(m, n, tuple(letters))
