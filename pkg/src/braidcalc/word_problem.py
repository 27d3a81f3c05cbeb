"""Word problem for mixed braids.

Mixed words are embedded in the Artin braid group on m+n strands and compared
through the left-greedy (Garside) normal form.  Permutation braids are stored
as 0-based tuples ``p`` with ``p[i]`` the final position of the strand that
starts at position ``i``.

Crossing convention: the positive generator ``s_t`` carries the strand moving
from position t+1 to t *over* the other one.  The loop a_i is the first moving
strand passing over fixed strands m..i+1, encircling fixed strand i, and
returning the same way.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .core import (
    FIXED,
    LOOP,
    MOVING,
    ArtinWord,
    Letter,
    MixedWord,
    WordError,
    exponent_sums,
    free_reduce,
    invert,
    lambda_word,
    permutation_of,
)

Perm = tuple[int, ...]


class NotMixedBraid(WordError):
    """The ambient braid does not keep the fixed strands in the first m positions."""


# ------------------------------------------------------------ permutations


def _identity(n: int) -> Perm:
    return tuple(range(n))


def _delta(n: int) -> Perm:
    return tuple(range(n - 1, -1, -1))


def _swap(t: int, i: int) -> int:
    # s_t acting on 0-based positions (t is 1-based)
    if i == t - 1:
        return t
    if i == t:
        return t - 1
    return i


def _gen(n: int, t: int) -> Perm:
    return tuple(_swap(t, i) for i in range(n))


def _tau(p: Perm) -> Perm:
    n = len(p)
    return tuple(n - 1 - p[n - 1 - i] for i in range(n))


def _starting_set(p: Perm) -> set[int]:
    return {t for t in range(1, len(p)) if p[t - 1] > p[t]}


def _finishing_set(p: Perm) -> set[int]:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return {t for t in range(1, len(p)) if inv[t - 1] > inv[t]}


def _left_weight(a: Perm, b: Perm) -> tuple[Perm, Perm]:
    while True:
        extra = _starting_set(b) - _finishing_set(a)
        if not extra:
            return a, b
        t = min(extra)
        a = tuple(_swap(t, x) for x in a)
        b = tuple(b[_swap(t, i)] for i in range(len(b)))


@dataclass(frozen=True)
class CanonicalForm:
    """Delta^delta_power times a left-weighted sequence of permutation braids."""

    strand_count: int
    delta_power: int
    factors: tuple[Perm, ...]

    @property
    def is_identity(self) -> bool:
        return self.delta_power == 0 and not self.factors

    def __str__(self) -> str:
        body = " . ".join("[" + ",".join(str(x + 1) for x in f) + "]" for f in self.factors)
        return f"Delta^{self.delta_power}" + (f" . {body}" if body else "")


def _factor_word(p: Perm) -> list[int]:
    # bubble-sort positive word for a permutation braid
    n = len(p)
    cur = list(range(n))  # cur[pos] = strand at pos
    target = [0] * n
    for strand, pos in enumerate(p):
        target[pos] = strand
    out = []
    order = {s: i for i, s in enumerate(target)}
    changed = True
    while changed:
        changed = False
        for t in range(1, n):
            if order[cur[t - 1]] > order[cur[t]]:
                cur[t - 1], cur[t] = cur[t], cur[t - 1]
                out.append(t)
                changed = True
    return out


def form_to_word(form: CanonicalForm) -> ArtinWord:
    n = form.strand_count
    delta = _factor_word(_delta(n))
    letters: list[int] = []
    if form.delta_power >= 0:
        letters += delta * form.delta_power
    else:
        letters += [-x for x in reversed(delta)] * (-form.delta_power)
    for f in form.factors:
        letters += _factor_word(f)
    return ArtinWord(n, tuple(letters))


@lru_cache(maxsize=4096)
def normal_form(w: ArtinWord) -> CanonicalForm:
    """Left-greedy normal form of an ambient braid word."""
    n = w.strand_count
    if n <= 1:
        return CanonicalForm(n, 0, ())
    delta = _delta(n)
    ident = _identity(n)
    power = 0
    factors: list[Perm] = []
    for x in w.letters:
        if x > 0:
            new = _gen(n, x)
        else:
            power -= 1
            factors = [_tau(f) for f in factors]
            new = tuple(_swap(-x, n - 1 - i) for i in range(n))
        factors.append(new)
        for i in range(len(factors) - 2, -1, -1):
            a, b = _left_weight(factors[i], factors[i + 1])
            if (a, b) == (factors[i], factors[i + 1]):
                break
            factors[i], factors[i + 1] = a, b
        while factors and factors[-1] == ident:
            factors.pop()
        while factors and factors[0] == delta:
            factors.pop(0)
            power += 1
            # Delta^d . Delta . F == Delta^(d+1) . F: nothing else changes
    return CanonicalForm(n, power, tuple(factors))


# --------------------------------------------------------------- embedding


def loop_image(m: int, i: int) -> tuple[int, ...]:
    """Ambient letters of a_i in the m+n strand group."""
    down = list(range(m, i, -1))
    return tuple(down + [i, i] + [-x for x in reversed(down)])


def embed_letter(letter: Letter, m: int) -> tuple[int, ...]:
    family, index, sign = letter
    if family == FIXED:
        return (sign * index,)
    if family == MOVING:
        return (sign * (m + index),)
    img = loop_image(m, index)
    return img if sign > 0 else tuple(-x for x in reversed(img))


def embed(w: MixedWord) -> ArtinWord:
    letters: list[int] = []
    for x in w:
        letters.extend(embed_letter(x, w.m))
    return ArtinWord(w.m + w.n, tuple(letters))


def mixed_normal_form(w: MixedWord) -> CanonicalForm:
    return normal_form(free_reduce(embed(w)))


def _tallies(w: MixedWord):
    s = exponent_sums(w)
    return s.fixed, s.moving, sum(c for _, c in s.loops)


def quick_reject(u: MixedWord, v: MixedWord) -> bool:
    """True when cheap invariants already prove ``u != v``."""
    if permutation_of(u) != permutation_of(v):
        return True
    if _tallies(u) != _tallies(v):
        return True
    # per-strand loop tallies are only invariants when the fixed strands stay put
    if u.is_sigma_free() and v.is_sigma_free():
        if exponent_sums(u).loops != exponent_sums(v).loops:
            return True
    return False


def equal(u: MixedWord, v: MixedWord) -> bool:
    if (u.m, u.n) != (v.m, v.n):
        raise WordError(f"context mismatch: ({u.m},{u.n}) vs ({v.m},{v.n})")
    if quick_reject(u, v):
        return False
    return mixed_normal_form(u) == mixed_normal_form(v)


def artin_equal(u: ArtinWord, v: ArtinWord) -> bool:
    if u.strand_count != v.strand_count:
        raise WordError("strand count mismatch")
    if permutation_of(u) != permutation_of(v):
        return False
    return normal_form(free_reduce(u)) == normal_form(free_reduce(v))


# ------------------------------------------------- ambient -> mixed alphabet


def parting_word(layout: tuple[bool, ...]) -> list[int]:
    """Standard parting of a layout (True = fixed strand) as ambient letters.

    Moving strands are pulled to the right over the fixed strands, the
    rightmost moving strand first.
    """
    cur = list(layout)
    out: list[int] = []
    end = len(cur)  # parted moving strands occupy positions >= end
    for p in range(len(cur) - 1, -1, -1):
        if cur[p]:
            continue
        q = p
        while q + 1 < end:
            out.append(-(q + 1))
            cur[q], cur[q + 1] = cur[q + 1], cur[q]
            q += 1
        end = q
    return out


def _loop_candidates(m: int, n: int, i: int, j: int):
    for e in (1, -1):
        yield (
            lambda_word(j - 1, 1, n, m)
            * MixedWord(m, n, (Letter(LOOP, i, e),))
            * invert(lambda_word(j - 1, 1, n, m))
        )
        yield (
            invert(lambda_word(1, j - 1, n, m))
            * MixedWord(m, n, (Letter(LOOP, i, e),))
            * lambda_word(1, j - 1, n, m)
        )


@lru_cache(maxsize=None)
def _piece(layout: tuple[bool, ...], x: int, m: int) -> tuple[Letter, ...]:
    n = len(layout) - m
    t = abs(x)
    sign = 1 if x > 0 else -1
    after = list(layout)
    after[t - 1], after[t] = after[t], after[t - 1]
    after = tuple(after)
    left, right = layout[t - 1], layout[t]
    if left and right:
        k = sum(layout[:t])
        return (Letter(FIXED, k, sign),)
    if not left and not right:
        j = t - sum(layout[:t])
        return (Letter(MOVING, j, sign),)
    piece = ArtinWord(
        m + n,
        tuple(-y for y in reversed(parting_word(layout))) + (x,) + tuple(parting_word(after)),
    )
    target = normal_form(free_reduce(piece))
    if target.is_identity:
        return ()
    # fixed strand rank and moving strand rank involved in the crossing
    fpos = t - 1 if left else t
    mpos = t if left else t - 1
    i = sum(layout[: fpos + 1])
    j = (mpos + 1) - sum(layout[: mpos + 1])
    for cand in _loop_candidates(m, n, i, j):
        if mixed_normal_form(cand) == target:
            return cand.letters
    raise RuntimeError(f"no loop expression for crossing {x} in layout {layout}")


def artin_to_mixed(w: ArtinWord, m: int, n: int) -> MixedWord:
    """Rewrite an ambient braid on m+n strands in the mixed alphabet."""
    if w.strand_count != m + n:
        raise WordError("strand count does not match m + n")
    perm = permutation_of(w)
    if sorted(perm[:m]) != list(range(1, m + 1)):
        raise NotMixedBraid("not a mixed braid: fixed strands do not return to 1..m")
    layout = tuple([True] * m + [False] * n)
    letters: list[Letter] = []
    for x in w.letters:
        letters.extend(_piece(layout, x, m))
        t = abs(x)
        lay = list(layout)
        lay[t - 1], lay[t] = lay[t], lay[t - 1]
        layout = tuple(lay)
    return free_reduce(MixedWord(m, n, tuple(letters)))
