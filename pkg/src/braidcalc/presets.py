"""Ready-made surgery presentations with their closed-form move data.

Each constructor returns a :class:`PresetMoveSet`.  The ``display_*`` members
reproduce the closed formulas as they are usually written for that manifold
(each lambda read as a run in the direction it has for generic indices); the
move methods go through the general machinery in :mod:`band_moves`.  The two
are kept apart on purpose so that they can be compared.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Callable, Optional

from . import band_moves
from .combing import combed_loop_conjugate
from .core import (
    FIXED,
    LOOP,
    MOVING,
    Component,
    Framing,
    Letter,
    MixedWord,
    SurgeryPresentation,
    WordError,
    closure_cycles,
    free_reduce,
    invert,
)

Display = Callable[..., MixedWord]


@dataclass(frozen=True)
class PresetMoveSet:
    name: str
    presentation: SurgeryPresentation
    band_component: int = 0
    display_d: Optional[Display] = field(default=None, repr=False)
    display_c: Optional[Display] = field(default=None, repr=False)
    display_loop: Optional[Display] = field(default=None, repr=False)
    display_comb: Optional[Display] = field(default=None, repr=False)

    @property
    def component(self) -> Component:
        return self.presentation.component(self.band_component)

    # moves (1)-(4)
    def m_move(self, beta: MixedWord, sign: int) -> MixedWord:
        return band_moves.m_move(beta, MixedWord(beta.m, beta.n), sign)

    def m_conjugate(self, beta: MixedWord, j: int, sign: int) -> MixedWord:
        return band_moves.m_conjugate(beta, j, sign)

    def loop_conjugate(self, beta: MixedWord, i: int, sign: int) -> MixedWord:
        return combed_loop_conjugate(beta, i, sign, self.presentation.fixed_word)

    def band_move(self, beta: MixedWord, sign: int, component: int | None = None):
        comp = self.band_component if component is None else component
        return band_moves.band_move(beta, self.presentation, comp, sign)

    def display_substitute(self, beta: MixedWord) -> MixedWord:
        """beta' built from the displayed loop table, letter by letter."""
        if self.display_loop is None:
            raise WordError(f"{self.name} has no displayed substitution table")
        N = beta.n + self.component.k * self.component.framing.q
        letters: list[Letter] = []
        for x in beta:
            if x.family == LOOP:
                letters.extend(self.display_loop(x.index, x.sign, beta.n).letters)
            elif x.family == MOVING:
                letters.append(x)
            else:
                raise WordError("beta must be Sigma-free")
        return free_reduce(MixedWord(beta.m, N, tuple(letters)))


class _Ctx:
    """Word builders bound to one context (m, N)."""

    def __init__(self, m: int, N: int):
        self.m, self.N = m, N

    # lambda runs with the direction they have in the generic case; a run
    # pointing the other way, or touching index 0, is empty
    def up(self, a: int, b: int) -> MixedWord:
        return band_moves.asc(a, b, self.m, self.N)

    def dn(self, a: int, b: int) -> MixedWord:
        return band_moves.desc(a, b, self.m, self.N)

    def iup(self, a: int, b: int) -> MixedWord:
        return invert(self.up(a, b))

    def idn(self, a: int, b: int) -> MixedWord:
        return invert(self.dn(a, b))

    def a(self, i: int, sign: int = 1) -> MixedWord:
        return MixedWord(self.m, self.N, (Letter(LOOP, i, sign),))

    def s(self, j: int, sign: int = 1) -> MixedWord:
        return MixedWord(self.m, self.N, (Letter(MOVING, j, sign),))

    def one(self) -> MixedWord:
        return MixedWord(self.m, self.N)


def _prod(ctx: _Ctx, factors) -> MixedWord:
    out = ctx.one()
    for f in factors:
        out = out * f
    return out


# ------------------------------------------------------------------ lens


def lens_space(p: int, q: int) -> PresetMoveSet:
    """L(p, q): surgery on the unknot (one fixed strand) with coefficient p/q."""
    fr = Framing(p, q)
    pres = SurgeryPresentation(1, MixedWord(1, 0), (Component((1,), fr),))
    p, q = fr.p, fr.q

    def d(n: int) -> MixedWord:
        c = _Ctx(1, n + q)
        return free_reduce((c.dn(n + q - 1, 1) * c.a(1) * c.iup(1, n + q - 1)) ** p)

    def cw(n: int, sign: int) -> MixedWord:
        c = _Ctx(1, n + q)
        return free_reduce(c.up(n, n + q - 1) * c.s(n + q - 1, sign) * c.iup(n, n + q - 1))

    def loop(i: int, sign: int, n: int) -> MixedWord:
        c = _Ctx(1, n + q)
        if sign > 0:
            return c.idn(n - 1, 1) * c.up(n, n + q - 1) * c.dn(n + q - 1, 1) * c.a(1)
        return c.a(1, -1) * c.idn(n + q - 1, 1) * c.iup(n, n + q - 1) * c.dn(n - 1, 1)

    return PresetMoveSet(
        f"L({p},{q})", pres, 0, d, cw, loop, lambda n: MixedWord(1, n + q)
    )


# -------------------------------------------------------- trefoil 1/q


def trefoil_homology_sphere(q: int) -> PresetMoveSet:
    """Surgery on the right-handed trefoil (Sigma_1^3) with coefficient 1/q."""
    if q == 0:
        raise WordError("q must be nonzero")
    fr = Framing(1, q)
    fixed = MixedWord(2, 0, (Letter(FIXED, 1, 1),) * 3)
    pres = SurgeryPresentation(2, fixed, (Component((1, 2), fr),))
    p, q = fr.p, fr.q

    def d(n: int) -> MixedWord:
        c = _Ctx(2, n + 2 * q)
        one = (
            c.dn(n + 2 * q - 1, n + q + 1) * c.iup(n + 1, n + q) * c.dn(n, 1)
            * c.a(2)
            * c.idn(n, 1) * c.up(n + 1, n + q)
        )
        return free_reduce(one**p)

    def cw(n: int, sign: int) -> MixedWord:
        c = _Ctx(2, n + 2 * q)
        return free_reduce(
            c.up(n, n + 2 * q - 1) * c.s(n + 2 * q - 1, sign) * c.iup(n, n + 2 * q - 1)
        )

    def loop(i: int, sign: int, n: int) -> MixedWord:
        c = _Ctx(2, n + 2 * q)
        Q = 2 * q
        if (i, sign) == (1, 1):
            return (
                c.idn(n - 1, 1) * c.up(n, n + Q - 1) * c.dn(n + Q - 1, n + q)
                * c.iup(n, n + q - 1) * c.dn(n - 1, 1) * c.a(1)
            )
        if (i, sign) == (1, -1):
            return c.a(1, -1) * (
                c.idn(n - 1, 1) * c.up(n, n + q - 1) * c.idn(n + Q - 1, n + q)
                * c.iup(n, n + Q - 1) * c.dn(n - 1, 1)
            )
        if (i, sign) == (2, 1):
            return (
                c.idn(n - 1, 1) * c.up(n, n + Q - 1) * c.dn(n + Q - 1, 1)
                * c.a(2)
                * c.idn(n - 1, 1) * c.up(n, n + q - 1) * c.idn(n + Q - 1, n + q)
                * c.iup(n, n + Q - 1) * c.dn(n - 1, 1)
            )
        return (
            c.idn(n - 1, 1) * c.up(n, n + Q - 1) * c.dn(n + Q - 1, n + q)
            * c.iup(n, n + q) * c.dn(n - 1, 1)
            * c.a(2, -1)
            * c.idn(n + Q - 1, 1) * c.iup(n, n + Q - 1) * c.dn(n - 1, 1)
        )

    def comb(n: int) -> MixedWord:
        c = _Ctx(2, n + 2 * q)

        def conj(r: int, i: int, sign: int = 1) -> MixedWord:
            return c.dn(r, 1) * c.a(i, sign) * c.idn(r, 1)

        w = _prod(c, (conj(n + i, 2) for i in range(q)))
        w = w * _prod(c, (conj(n + 2 * q - 1 - i, 2, -1) for i in range(q)))
        w = w * _prod(c, (conj(n + q + i, 1) for i in range(q)))
        w = w * c.dn(n + q, 1) * c.a(2) * c.idn(n, 1) * c.up(n + 1, n + q)
        w = w * _prod(
            c,
            (
                c.dn(n + q + i, 1) * c.a(2) * c.idn(n, 1) * c.up(n + 1, n + q)
                * c.idn(n + q + i, n + q + 1)
                for i in range(1, q)
            ),
        )
        w = w * _prod(c, (conj(n + q - 1 - i, 2) for i in range(q)))
        for idx in (1, 2, 1, 2):
            w = w * _prod(c, (conj(n + i, idx) for i in range(q)))
        w = w * _prod(c, (c.dn(n + q + i, n + 1 + i) for i in range(q)))
        return free_reduce(w)

    return PresetMoveSet(f"trefoil(1/{q * p})", pres, 0, d, cw, loop, comb)


# ------------------------------------------------------------- Seifert


def seifert_fixed_word(m: int) -> MixedWord:
    """Key-chain link as a closed pure braid: strand m encircles each of 1..m-1 once."""
    letters: list[Letter] = []
    for j in range(1, m):
        down = [Letter(FIXED, t, 1) for t in range(m - 1, j, -1)]
        letters += down + [Letter(FIXED, j, 1)] * 2 + [x.inverse() for x in reversed(down)]
    return MixedWord(m, 0, tuple(letters))


def seifert_manifold(framings, band_strand: int | None = None) -> PresetMoveSet:
    """Seifert manifold M((p_1,q_1), ..., (p_{m-1},q_{m-1})).

    Strands 1..m-1 carry the given coefficients; strand m is the 0-framed
    central unknot.  ``band_strand`` selects where the band move happens
    (default: the central strand).
    """
    frs = [f if isinstance(f, Framing) else Framing(*f) for f in framings]
    if not frs:
        raise WordError("at least one exceptional fibre is needed")
    m = len(frs) + 1
    comps = tuple(Component((j,), fr) for j, fr in enumerate(frs, start=1))
    comps += (Component((m,), Framing(0, 1)),)
    pres = SurgeryPresentation(m, seifert_fixed_word(m), comps)
    j = m if band_strand is None else band_strand
    if not 1 <= j <= m:
        raise WordError("band strand out of range")
    p, q = comps[j - 1].framing.p, comps[j - 1].framing.q

    def d(n: int) -> MixedWord:
        c = _Ctx(m, n + q)
        if j == m:
            return c.one()
        return free_reduce((c.dn(n + q - 1, 1) * c.a(j) * c.idn(n - 1, 1)) ** p)

    def cw(n: int, sign: int) -> MixedWord:
        c = _Ctx(m, n + q)
        if j == m:
            return c.s(n, sign)
        # displayed with a fixed exponent -1; the sign is taken from the move
        return free_reduce(c.up(n, n + q - 1) * c.s(n + q - 1, sign) * c.iup(n, n + q - 1))

    def loop(i: int, sign: int, n: int) -> MixedWord:
        c = _Ctx(m, n + q)
        if j == m:
            if i < m:
                return (
                    c.idn(n - 1, 1) * c.s(n, 1) * c.s(n, 1) * c.dn(n - 1, 1)
                    * c.a(i, sign)
                    * c.idn(n, 1) * c.s(n, -1) * c.dn(n - 1, 1)
                )
            if sign > 0:
                return c.idn(n - 1, 1) * c.s(n, 1) * c.s(n, 1) * c.dn(n - 1, 1) * c.a(m)
            return c.a(m, -1) * c.idn(n - 1, 1) * c.s(n, -1) * c.s(n, -1) * c.dn(n - 1, 1)
        if i > j:
            return c.a(i, sign)
        left = c.idn(n - 1, 1) * c.up(n, n + q - 1) * c.dn(n + q - 1, 1)
        if i < j:
            return left * c.a(i, sign) * c.idn(n + q - 1, 1) * c.iup(n, n + q - 1) * c.dn(n - 1, 1)
        if sign > 0:
            return left * c.a(j)
        return c.a(j, -1) * c.idn(n + q - 1, 1) * c.iup(n, n + q - 1) * c.dn(n - 1, 1)

    name = "M(" + ", ".join(f"({f.p},{f.q})" for f in frs) + ")"
    return PresetMoveSet(name, pres, j - 1, d, cw, loop, None)


# ------------------------------------------------------------ torus knot


def torus_knot_fixed_word(mt: int, r: int) -> MixedWord:
    """(sigma_1 ... sigma_{mt-1})^r on mt fixed strands."""
    row = tuple(Letter(FIXED, t, 1) for t in range(1, mt))
    return MixedWord(mt, 0, row * r)


def torus_knot_surgery(mt: int, r: int, p: int, q: int) -> PresetMoveSet:
    """p/q surgery along the (mt, r)-torus knot presented on mt strands."""
    if mt < 1 or r < 0 or gcd(mt, r) != 1:
        raise WordError(f"({mt},{r}) is not a torus knot")
    fr = Framing(p, q)
    fixed = torus_knot_fixed_word(mt, r)
    cycles = closure_cycles(fixed)
    if len(cycles) != 1:
        raise WordError("torus braid does not close to a knot")
    pres = SurgeryPresentation(mt, fixed, (Component(cycles[0], fr),))
    p, q = fr.p, fr.q
    Q = mt * q

    def d(n: int) -> MixedWord:
        c = _Ctx(mt, n + Q)
        one = (
            c.dn(n + Q - 1, n + (mt - 1) * q + 1) * c.iup(n, n + (mt - 1) * q)
            * c.dn(n - 1, 1) * c.a(mt) * c.idn(n - 1, 1)
            * c.up(n, n + (mt - 1) * q)
        )
        return free_reduce(one**p)

    def cw(n: int, sign: int) -> MixedWord:
        c = _Ctx(mt, n + Q)
        return free_reduce(c.up(n, n + Q - 2) * c.s(n + Q - 1, sign) * c.iup(n, n + Q - 2))

    def loop(j: int, sign: int, n: int) -> MixedWord:
        c = _Ctx(mt, n + Q)
        if sign > 0:
            return (
                c.idn(n - 1, 1) * c.up(n, n + Q - 1) * c.dn(n + Q - 1, n + (j - 1) * q)
                * c.iup(n, n + (j - 1) * q - 1) * c.dn(n - 1, 1)
                * c.a(j)
                * c.idn(n - 1, 1) * c.up(n, n + j * q - 1) * c.idn(n + Q - 1, n + j * q)
                * c.iup(n, n + Q - 1) * c.dn(n - 1, 1)
            )
        return (
            c.idn(n - 1, 1) * c.up(n, n + Q - 1) * c.dn(n + Q - 1, n + j * q)
            * c.iup(n, n + j * q - 1) * c.dn(n - 1, 1)
            * c.a(j, -1)
            * c.idn(n - 1, 1) * c.up(n, n + (j - 1) * q - 1)
            * c.idn(n + Q - 1, n + (j - 1) * q) * c.iup(n, n + Q - 1) * c.dn(n - 1, 1)
        )

    return PresetMoveSet(f"T({mt},{r}) {p}/{q}", pres, 0, d, cw, loop, None)


PRESETS = {
    "lens": lens_space,
    "trefoil": trefoil_homology_sphere,
    "seifert": seifert_manifold,
    "torus-knot": torus_knot_surgery,
}
