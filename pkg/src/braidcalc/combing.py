"""Combing: push fixed crossings to the bottom of a parted mixed braid."""

from __future__ import annotations

import os
from dataclasses import dataclass

from .core import FIXED, LOOP, Letter, MixedWord, free_reduce, invert

DEFAULT_STEP_BUDGET = 1_000_000


class BudgetExceeded(RuntimeError):
    """Combing needed more letter rewrites than the configured budget."""


@dataclass(frozen=True)
class CombResult:
    algebraic: MixedWord
    coset: MixedWord


def step_budget() -> int:
    raw = os.environ.get("BRAIDCALC_STEP_BUDGET")
    return int(raw) if raw else DEFAULT_STEP_BUDGET


def _push(sigma: Letter, x: Letter) -> tuple[Letter, ...]:
    """Image of x when the fixed crossing ``sigma`` is moved past it to the right."""
    if x.family != LOOP:
        return (x,)
    k, i, e = sigma.index, x.index, x.sign
    if sigma.sign > 0:
        if i == k:
            return (Letter(LOOP, k + 1, e),)
        if i == k + 1:
            return (Letter(LOOP, k + 1, -1), Letter(LOOP, k, e), Letter(LOOP, k + 1, 1))
    else:
        if i == k:
            return (Letter(LOOP, k, 1), Letter(LOOP, k + 1, e), Letter(LOOP, k, -1))
        if i == k + 1:
            return (Letter(LOOP, k, e),)
    return (x,)


def comb(w: MixedWord, budget: int | None = None) -> CombResult:
    """Split ``w`` into a Sigma-free algebraic part followed by its Sigma letters.

    Each fixed crossing is carried to the right end through the Sigma-free
    letters below it; the rightmost crossing goes first, which gives the same
    freely reduced result as moving the leftmost one first.
    """
    budget = step_budget() if budget is None else budget
    steps = 0
    tail: list[Letter] = []  # Sigma-free suffix, already combed
    coset: list[Letter] = []
    for x in reversed(w.letters):
        if x.family != FIXED:
            if tail and tail[0] == x.inverse():
                tail.pop(0)
            else:
                tail.insert(0, x)
            continue
        coset.insert(0, x)
        pushed: list[Letter] = []
        for y in tail:
            steps += 1
            if steps > budget:
                raise BudgetExceeded(f"combing exceeded step budget {budget}")
            for z in _push(x, y):
                if pushed and pushed[-1] == z.inverse():
                    pushed.pop()
                else:
                    pushed.append(z)
        tail = pushed
    return CombResult(MixedWord(w.m, w.n, tuple(tail)), MixedWord(w.m, w.n, tuple(coset)))


def rho(i: int, fixed: MixedWord, n: int = 1) -> MixedWord:
    """Combing of the loop a_i through the fixed braid."""
    w = MixedWord(fixed.m, n, fixed.letters + (Letter(LOOP, i, 1),))
    return comb(w).algebraic


def combed_loop_conjugate(beta: MixedWord, i: int, sign: int, fixed: MixedWord) -> MixedWord:
    """a_i^{-sign} . beta . rho_i^{sign}"""
    if not beta.is_sigma_free():
        raise ValueError("beta must be Sigma-free")
    r = rho(i, fixed, beta.n)
    a = MixedWord(beta.m, beta.n, (Letter(LOOP, i, -sign),))
    return free_reduce(a * beta * (r if sign > 0 else invert(r)))
