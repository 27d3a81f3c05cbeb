"""Ingredients of the combed algebraic Q-braid band move, and the L/M moves.

All words are emitted in the context ``(m, n + k*q)`` with the new strands at
moving positions n+1 .. n+k*q.  Runs of moving crossings are written with an
explicit direction: ``asc(a, b)`` is sigma_a ... sigma_b and is empty when
a > b, ``desc(a, b)`` is sigma_a ... sigma_b descending and is empty when
a < b.  A run touching index 0 is empty.
"""

from __future__ import annotations

from dataclasses import dataclass

from .combing import comb
from .core import (
    LOOP,
    MOVING,
    Component,
    Letter,
    MixedWord,
    SurgeryPresentation,
    WordError,
    free_reduce,
    invert,
)
from .geometry import block_crossing, geometric_cable_braid
from .word_problem import artin_to_mixed, equal


def asc(a: int, b: int, m: int, n: int) -> MixedWord:
    if a <= 0 or b <= 0 or a > b:
        return MixedWord(m, n)
    return MixedWord(m, n, tuple(Letter(MOVING, j, 1) for j in range(a, b + 1)))


def desc(a: int, b: int, m: int, n: int) -> MixedWord:
    if a <= 0 or b <= 0 or a < b:
        return MixedWord(m, n)
    return MixedWord(m, n, tuple(Letter(MOVING, j, 1) for j in range(a, b - 1, -1)))


def _loop(m: int, n: int, i: int, sign: int = 1) -> MixedWord:
    return MixedWord(m, n, (Letter(LOOP, i, sign),))


def _component(pres: SurgeryPresentation, comp) -> Component:
    if isinstance(comp, Component):
        if comp not in pres.components:
            raise WordError("component not in presentation")
        return comp
    return pres.component(comp)


# ------------------------------------------------------------ torus word d


def torus_word_d(
    pres: SurgeryPresentation, comp, n: int, final_sign: int = 1
) -> MixedWord:
    """The parted (p, q)-torus braid of the last cable around s_k.

    ``final_sign`` is the exponent of the closing run; +1 is the value
    confirmed by the geometric oracle (-1 does not close the conjugation).
    """
    c = _component(pres, comp)
    k, p, q = c.k, c.framing.p, c.framing.q
    m, N = pres.m, n + k * q
    inner = asc(n + 1, n + (k - 1) * q, m, N)
    base = (
        desc(n + k * q - 1, n + (k - 1) * q + 1, m, N)
        * invert(inner)
        * desc(n, 1, m, N)
        * _loop(m, N, c.strands[-1])
        * invert(desc(n, 1, m, N))
        * (inner if final_sign > 0 else invert(inner))
    )
    return free_reduce(base**p)


def crossing_word_c(k: int, q: int, n: int, sign: int, m: int = 1) -> MixedWord:
    """lambda_{n, n+kq-2} sigma_{n+kq-1}^sign lambda_{n, n+kq-2}^-1"""
    if k < 1 or q < 1:
        raise WordError("k and q must be positive")
    N = n + k * q
    top = N - 1
    if top < 1:
        raise WordError("the twist crossing needs at least one moving strand before the band")
    conj = asc(n, top - 1, m, N)
    return free_reduce(conj * MixedWord(m, N, (Letter(MOVING, top, sign),)) * invert(conj))


# ------------------------------------------------------- loop substitution


def _sj_prefix(n: int, k: int, q: int, j: int, m: int) -> MixedWord:
    N = n + k * q
    return (
        invert(desc(n - 1, 1, m, N))
        * asc(n, n + k * q - 1, m, N)
        * desc(n + k * q - 1, n + (j - 1) * q, m, N)
        * invert(asc(n, n + (j - 1) * q - 1, m, N))
        * desc(n - 1, 1, m, N)
    )


def loop_image(i: int, sign: int, comp: Component, m: int, n: int) -> MixedWord:
    """Image of a_i^sign under the band-move substitution (context n + k*q)."""
    s = comp.strands
    k, q = comp.k, comp.framing.q
    N = n + k * q
    if not 1 <= i <= m:
        raise WordError(f"loop index {i} out of range")
    a = _loop(m, N, i, sign)
    if i > s[-1]:
        return a
    if i < s[0]:
        conj = (
            invert(desc(n - 1, 1, m, N))
            * asc(n, N - 1, m, N)
            * desc(N - 1, 1, m, N)
        )
        return free_reduce(conj * a * invert(conj))
    if i in s:
        j = s.index(i) + 1
        suffix = (
            invert(desc(n - 1, 1, m, N))
            * asc(n, n + j * q - 1, m, N)
            * invert(desc(N - 1, n + j * q, m, N))
            * invert(asc(n, N - 1, m, N))
            * desc(n - 1, 1, m, N)
        )
        image = _sj_prefix(n, k, q, j, m) * _loop(m, N, i) * suffix
        return free_reduce(image if sign > 0 else invert(image))
    # s_{r-1} < i < s_r
    r = next(idx for idx, x in enumerate(s, start=1) if x > i)
    conj = _sj_prefix(n, k, q, r, m)
    return free_reduce(conj * a * invert(conj))


def printed_inverse_image(i: int, comp: Component, m: int, n: int) -> MixedWord:
    """The literal a_{s_j}^{-1} row of the substitution table, for comparison only.

    It is not the inverse of :func:`loop_image`; substitution uses the inverse.
    """
    s = comp.strands
    k, q = comp.k, comp.framing.q
    N = n + k * q
    j = s.index(i) + 1
    left = (
        invert(desc(n - 1, 1, m, N))
        * asc(n, N - 1, m, N)
        * desc(N - 1, n + j * q, m, N)
        * invert(asc(n + (j - 1) * q, n + j * q - 1, m, N))
        * invert(asc(n, n + (j - 1) * q - 1, m, N))
        * desc(n - 1, 1, m, N)
    )
    right = (
        invert(desc(n - 1, 1, m, N))
        * asc(n, n + (j - 1) * q - 1, m, N)
        * invert(desc(n + j * q - 1, n + (j - 1) * q, m, N))
        * invert(desc(N - 1, n + j * q, m, N))
        * invert(desc(N - 1, n, m, N))
        * desc(n - 1, 1, m, N)
    )
    return free_reduce(left * _loop(m, N, i, -1) * right)


def substitute_beta(beta: MixedWord, comp: Component, q: int | None = None, n: int | None = None) -> MixedWord:
    """beta with every loop letter replaced by its band-move image.

    Moving crossings are kept; the result lives in context (m, n + k*q).
    The map is applied letter by letter and a_i^-1 goes to the inverse of the
    image of a_i, so it is a homomorphism.
    """
    if not beta.is_sigma_free():
        raise WordError("beta must be Sigma-free")
    n = beta.n if n is None else n
    if q is not None and q != comp.framing.q:
        comp = Component(comp.strands, type(comp.framing)(comp.framing.p, q))
    m = beta.m
    N = n + comp.k * comp.framing.q
    letters: list[Letter] = []
    for x in beta:
        if x.family == LOOP:
            letters.extend(loop_image(x.index, x.sign, comp, m, n).letters)
        else:
            letters.append(x)
    return free_reduce(MixedWord(m, N, tuple(letters)))


# ------------------------------------------------------------------ cabling


def cable_loop(q: int, j: int, sign: int, m: int | None = None) -> MixedWord:
    """Loop between a q-strand cable (moving positions 1..q) and fixed strand j."""
    if q < 1:
        raise WordError("cable size must be positive")
    m = j if m is None else m
    out = MixedWord(m, q)
    for i in range(q):
        if sign > 0:
            lam = desc(i, 1, m, q)
            out = out * lam * _loop(m, q, j) * invert(lam)
        else:
            lam = asc(1, i, m, q)
            out = out * invert(lam) * _loop(m, q, j, -1) * lam
    return free_reduce(out)


def shift_right(w: MixedWord, n: int) -> MixedWord:
    """Move a word past n new moving strands on its left, which it passes over.

    sigma_j -> sigma_{j+n} and a_i -> lambda_{n,1} a_i lambda_{n,1}^-1.
    """
    N = w.n + n
    lam = desc(n, 1, w.m, N)
    letters: list[Letter] = []
    for x in w:
        if x.family == LOOP:
            letters.extend((lam * MixedWord(w.m, N, (x,)) * invert(lam)).letters)
        elif x.family == MOVING:
            letters.append(Letter(MOVING, x.index + n, x.sign))
        else:
            letters.append(x)
    return free_reduce(MixedWord(w.m, N, tuple(letters)))


def cable_word(w: MixedWord, q: int, n: int = 0) -> MixedWord:
    """Replace each moving strand of a Sigma-free word by a q-strand cable.

    The cabled word is then moved right of ``n`` extra moving strands.
    Context of the result: (m, n + q*w.n).
    """
    if not w.is_sigma_free():
        raise WordError("only Sigma-free words can be cabled")
    m = w.m
    Q = q * w.n
    letters: list[Letter] = []
    for x in w:
        if x.family == LOOP:
            letters.extend(cable_loop(q, x.index, x.sign, m).letters)
        else:
            base = (x.index - 1) * q
            for t in block_crossing(base, q, q, x.sign):
                letters.append(Letter(MOVING, abs(t), 1 if t > 0 else -1))
    return shift_right(free_reduce(MixedWord(m, Q, tuple(letters))), n)


def comb_cables(pres: SurgeryPresentation, comp, q: int | None = None, n: int = 0) -> MixedWord:
    """Combing of the parted q-strand cables of ``comp`` through the fixed braid.

    Computed for single companions and then cabled, which is legitimate
    because cabling commutes with standard parting and with combing.
    """
    c = _component(pres, comp)
    q = c.framing.q if q is None else q
    single = geometric_cable_braid(pres, c, 1)
    mixed = artin_to_mixed(single, pres.m, c.k)
    res = comb(mixed)
    if not equal(MixedWord(pres.m, 0, res.coset.letters), pres.fixed_word):
        raise AssertionError("combing did not recover the fixed braid as coset")
    return cable_word(res.algebraic, q, n)


def comb_cables_direct(pres: SurgeryPresentation, comp, q: int | None = None, n: int = 0) -> MixedWord:
    """Same word computed without cabling shortcuts: the full q-cable braid is parted and combed."""
    c = _component(pres, comp)
    q = c.framing.q if q is None else q
    full = geometric_cable_braid(pres, c, q, n)
    return comb(artin_to_mixed(full, pres.m, n + c.k * q)).algebraic


# ---------------------------------------------------------------- band move


@dataclass(frozen=True)
class BandMoveOutput:
    d: MixedWord
    c: MixedWord
    beta_prime: MixedWord
    comb_word: MixedWord
    new_n: int

    def word(self) -> MixedWord:
        return free_reduce(self.d * self.c * self.beta_prime * self.comb_word)


def band_move(beta: MixedWord, pres: SurgeryPresentation, comp, sign: int) -> BandMoveOutput:
    """beta ~ d c_sign beta' comb_B(c_1, ..., c_k)."""
    c = _component(pres, comp)
    if beta.m != pres.m:
        raise WordError("beta and presentation disagree on m")
    if not beta.is_sigma_free():
        raise WordError("beta must be Sigma-free")
    n = beta.n
    k, q = c.k, c.framing.q
    return BandMoveOutput(
        d=torus_word_d(pres, c, n),
        c=crossing_word_c(k, q, n, sign, pres.m),
        beta_prime=substitute_beta(beta, c),
        comb_word=comb_cables(pres, c, q, n),
        new_n=n + k * q,
    )


# ------------------------------------------------------------ L and M moves


def shift_from(w: MixedWord, i: int) -> MixedWord:
    """sigma_j -> sigma_{j+1} for j >= i; context grows by one strand."""
    letters = tuple(
        Letter(MOVING, x.index + 1, x.sign) if x.family == MOVING and x.index >= i else x
        for x in w
    )
    return MixedWord(w.m, w.n + 1, letters)


def l_move(alpha1: MixedWord, alpha2: MixedWord, i: int, sign: int, kind: str) -> MixedWord:
    """Algebraic L_o / L_u move at position i on alpha1 . alpha2.

    Runs are read with their written direction and are empty when reversed;
    the index 0 (for i = 1) is dropped.
    """
    if (alpha1.m, alpha1.n) != (alpha2.m, alpha2.n):
        raise WordError("context mismatch")
    m, n = alpha1.m, alpha1.n
    if n < 1:
        raise WordError("L-moves need at least one moving strand")
    if not 1 <= i <= n + 1:
        raise WordError(f"L-move position {i} out of range 1..{n + 1}")
    if kind not in ("over", "under"):
        raise WordError("kind must be 'over' or 'under'")
    N = n + 1
    e = -1 if kind == "over" else 1

    def run(a: int, b: int, s: int, up: bool) -> MixedWord:
        idx = range(a, b + 1) if up else range(a, b - 1, -1)
        return MixedWord(m, N, tuple(Letter(MOVING, j, s) for j in idx if j >= 1))

    w = (
        run(i, n, e, True)
        * shift_from(alpha1, i)
        * run(i - 1, n - 1, e, True)
        * MixedWord(m, N, (Letter(MOVING, n, sign),))
        * run(n - 1, i, -e, False)
        * shift_from(alpha2, i)
        * run(n, i, -e, False)
    )
    return free_reduce(w)


def m_move(beta1: MixedWord, beta2: MixedWord, sign: int) -> MixedWord:
    """beta1 sigma_n^sign beta2, in context (m, n+1)."""
    if (beta1.m, beta1.n) != (beta2.m, beta2.n):
        raise WordError("context mismatch")
    n = beta1.n
    if n < 1:
        raise WordError("M-moves need at least one moving strand")
    N = n + 1
    return free_reduce(
        beta1.widen(N) * MixedWord(beta1.m, N, (Letter(MOVING, n, sign),)) * beta2.widen(N)
    )


def m_conjugate(beta: MixedWord, j: int, sign: int) -> MixedWord:
    """sigma_j^-sign beta sigma_j^sign"""
    if not 1 <= j <= beta.n - 1:
        raise WordError(f"sigma_{j} not available with {beta.n} moving strands")
    s = MixedWord(beta.m, beta.n, (Letter(MOVING, j, sign),))
    return free_reduce(invert(s) * beta * s)


def t_loop(k: int, n: int, m: int) -> MixedWord:
    """t_{k,n} = sigma_n ... sigma_1 a_k sigma_1^-1 ... sigma_n^-1, context (m, n+1)."""
    if not 1 <= k <= m:
        raise WordError("loop index out of range")
    lam = desc(n, 1, m, n + 1)
    return lam * _loop(m, n + 1, k) * invert(lam)
