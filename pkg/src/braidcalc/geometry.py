"""Geometric constructions of ambient braids.

Two independent routes live here:

* :func:`sample_braid` reads a braid word off explicit strand curves
  ``t -> (x(t), z(t))``: crossings are order swaps in x, and the strand with
  larger z passes over.  The torus-cable oracle is built this way.
* :func:`geometric_cable_braid` builds the cabled-and-parted fixed braid
  combinatorially from block crossings.

Both use the crossing convention of :mod:`braidcalc.word_problem`: ``s_t`` is
positive when the strand moving left (t+1 -> t) is the upper one.
"""

from __future__ import annotations

import math
from typing import Callable, Sequence

from .core import ArtinWord, Component, SurgeryPresentation, WordError

Curve = Callable[[float], tuple[float, float]]

SAMPLES = 6000
RADIUS = 0.3


def sample_braid(curves: Sequence[Curve], samples: int = SAMPLES) -> ArtinWord:
    """Read an Artin word off strand curves parametrised over t in [0, 1]."""
    n = len(curves)

    def order_at(t: float) -> list[int]:
        return sorted(range(n), key=lambda s: curves[s](t)[0])

    letters: list[int] = []
    cur = order_at(0.0)
    for step in range(1, samples + 1):
        t0, t1 = (step - 1) / samples, step / samples
        xs = {s: curves[s](t1)[0] for s in range(n)}
        tm = 0.5 * (t0 + t1)
        # bubble the old order into the new one; each adjacent swap is a crossing
        changed = True
        while changed:
            changed = False
            for p in range(n - 1):
                a, b = cur[p], cur[p + 1]
                if xs[a] > xs[b]:
                    za, zb = curves[a](tm)[1], curves[b](tm)[1]
                    if abs(za - zb) < 1e-9:
                        raise WordError("strand curves collide")
                    # b moves left from p+2 to p+1 (1-based)
                    letters.append((p + 1) if zb > za else -(p + 1))
                    cur[p], cur[p + 1] = b, a
                    changed = True
    return ArtinWord(n, tuple(letters))


def _lerp(a: float, b: float, s: float) -> float:
    return (1 - s) * a + s * b


def _torus_angles(q: int, p: int, side: str) -> tuple[list[float], list[float]]:
    # start angles increase with j on a quarter arc right of the core; strand j
    # ends where strand j+p started, having turned through a positive angle
    if side == "back":
        start = [-math.pi / 2 + math.pi / 2 * (j + 1) / (q + 1) for j in range(q)]
    elif side == "front":
        start = [math.pi / 2 * (j + 1) / (q + 1) for j in range(q)]
    else:
        raise WordError(f"unknown arc side {side!r}")
    end = [start[(j + p) % q] + 2 * math.pi * ((j + p) // q) for j in range(q)]
    return start, end


def torus_cable_oracle(
    m: int, n: int, k: int, core: int, p: int, q: int, side: str = "back"
) -> ArtinWord:
    """q parallel strands winding p times around fixed strand ``core``, parted.

    Layout (left to right): fixed strands 1..m, n untouched moving strands,
    then k cables of q strands each.  Only the last cable winds.  It travels
    left in front of the fixed and moving strands and behind the other cables
    (those were pulled over everything by the standard parting), then settles
    on a quarter arc around the core and turns through p/q of a full turn.

    ``side`` selects the arc: "back" (behind the core, the default) or "front".
    The two results differ by a half twist of the winding cable conjugated in,
    which is an isotopy of the closed cable but not of the braid word.
    """
    if q < 1 or not 1 <= core <= m:
        raise WordError("invalid torus cable parameters")
    curves: list[Curve] = []
    for i in range(1, m + 1):
        curves.append(lambda t, x=float(i): (x, 0.0))
    for j in range(1, n + 1):
        curves.append(lambda t, x=float(m + j): (x, 0.0))
    for c in range(1, (k - 1) * q + 1):
        curves.append(lambda t, x=float(m + n + c): (x, 2.0))

    start, end = _torus_angles(q, p, side)
    row0 = m + n + (k - 1) * q
    cx = float(core)
    lift = 1.0

    def slot(j: int) -> int:
        # arc index -> row slot (1 = leftmost); x = cos(angle) orders the arc
        return j + 1 if side == "back" else q - j

    def approach(row_x: float, th: float, s: float) -> tuple[float, float]:
        # rise, travel left at height `lift`, settle onto the arc
        ax, az = cx + RADIUS * math.cos(th), RADIUS * math.sin(th)
        if s <= 1 / 3:
            return row_x, _lerp(0.0, lift, 3 * s)
        if s <= 2 / 3:
            return _lerp(row_x, ax, 3 * s - 1), lift
        return ax, _lerp(lift, az, 3 * s - 2)

    def winding(j: int) -> Curve:
        in_x = float(row0 + slot(j))
        out_x = float(row0 + slot((j + p) % q))

        def curve(t: float) -> tuple[float, float]:
            if t <= 1 / 3:
                return approach(in_x, start[j], 3 * t)
            if t <= 2 / 3:
                th = _lerp(start[j], end[j], 3 * t - 1)
                return cx + RADIUS * math.cos(th), RADIUS * math.sin(th)
            return approach(out_x, end[j], 3 - 3 * t)

        return curve

    for j in sorted(range(q), key=slot):
        curves.append(winding(j))
    return sample_braid(curves)


# ------------------------------------------------------------- block braids


def pull_right_over(layout: list, movers: set) -> list[int]:
    """Pull the strands in ``movers`` to the right end, over everything else.

    Rightmost mover first; movers keep their relative order.  ``layout`` is
    updated in place and the ambient letters are returned.
    """
    out: list[int] = []
    end = len(layout)
    for p in range(len(layout) - 1, -1, -1):
        if layout[p] not in movers:
            continue
        while p + 1 < end:
            out.append(-(p + 1))
            layout[p], layout[p + 1] = layout[p + 1], layout[p]
            p += 1
        end = p
    return out


def block_crossing(base: int, left: int, right: int, sign: int) -> list[int]:
    """A block of ``left`` strands crossing a block of ``right`` strands.

    Blocks start at 1-based position ``base + 1``.  The positive version moves
    the right block leftward over the left block; the negative one moves it
    leftward under, as the inverse of the positive crossing of swapped blocks.
    """
    if sign < 0:
        return [-x for x in reversed(block_crossing(base, right, left, 1))]
    pos: list[int] = []
    for r in range(1, right + 1):
        start = base + left + r  # current position of the r-th right strand
        pos.extend(range(start - 1, base + r - 1, -1))
    return pos


def geometric_cable_braid(
    pres: SurgeryPresentation, comp: Component | int, q: int, n: int = 0
) -> ArtinWord:
    """Fixed braid with q companions riding right of every strand of ``comp``.

    Strand layout at top and bottom: fixed strands 1..m, then ``n`` untouched
    moving strands, then the k*q companions.  Companions are brought next to
    their surgery strands and returned by standard parting (pulled over).
    """
    if isinstance(comp, int):
        comp = pres.component(comp)
    m = pres.m
    owners = set(comp.strands)
    if q < 1:
        raise WordError("cable size must be positive")

    # labels: ("F", i) fixed strand i, ("M", j) moving, ("C", i, r) companion r of fixed i
    def interleaved(order: list[int]) -> list:
        lay: list = []
        for i in order:
            lay.append(("F", i))
            if i in owners:
                lay.extend(("C", i, r) for r in range(1, q + 1))
        lay.extend(("M", j) for j in range(1, n + 1))
        return lay

    companions = {("C", i, r) for i in owners for r in range(1, q + 1)}

    order = list(range(1, m + 1))  # fixed strand at each fixed slot
    top = interleaved(order)
    unpart = pull_right_over(top, companions)
    letters = [-x for x in reversed(unpart)]

    for x in pres.fixed_word:
        t = x.index
        sizes = [1 + (q if i in owners else 0) for i in order]
        base = sum(sizes[: t - 1])
        letters.extend(block_crossing(base, sizes[t - 1], sizes[t], x.sign))
        order[t - 1], order[t] = order[t], order[t - 1]

    bottom = interleaved(order)
    letters.extend(pull_right_over(bottom, companions))
    return ArtinWord(m + n + len(companions), tuple(letters))


def loop_substitution_oracle(
    m: int, n: int, comp: Component, q: int, i: int, sign: int = 1
) -> ArtinWord:
    """Ambient braid of the loop a_i^sign after cables have been laid along ``comp``.

    The cables ride right of their surgery strands and the first moving strand
    loops around fixed strand i together with its cable, if it has one.  The
    cables are then parted to the right over everything, giving a word on
    m + n + k*q strands with the cables at moving positions n+1 .. n+k*q.
    """
    owners = set(comp.strands)
    if not 1 <= i <= m:
        raise WordError("loop index out of range")
    lay: list = []
    for f in range(1, m + 1):
        lay.append(("F", f))
        if f in owners:
            lay.extend(("C", f, r) for r in range(1, q + 1))
    lay.extend(("M", j) for j in range(1, n + 1))
    companions = {x for x in lay if x[0] == "C"}
    parted = list(lay)
    part = pull_right_over(parted, companions)

    start = lay.index(("F", i))  # 0-based position of the encircled block
    size = 1 + (q if i in owners else 0)
    mover = lay.index(("M", 1)) if n else None
    if mover is None:
        raise WordError("a loop needs a moving strand")
    # bring strand M1 left over everything to just right of the block
    travel = list(range(mover, start + size, -1))
    # over the block to its left, then the block comes back over it
    twist = block_crossing(start, size, 1, 1) + block_crossing(start, 1, size, 1)
    loop = travel + twist + [-x for x in reversed(travel)]
    if sign < 0:
        loop = [-x for x in reversed(loop)]
    unpart = [-x for x in reversed(part)]
    return ArtinWord(len(lay), tuple(unpart + loop + part))
