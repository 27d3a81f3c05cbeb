"""Command line front end: ``braidcalc <command> ...``.

Exit codes: 0 success (and "equal"), 1 "not equal", 2 parse or validation
error, 3 combing step budget exceeded.  Diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import band_moves, presets
from .combing import BudgetExceeded, comb
from .core import WordError
from .dsl import dumps_presentation, load_presentation, parse_word, print_word
from .render import ascii_diagram, diagram_stats, render_figure
from .word_problem import equal, mixed_normal_form

EXIT_EQUAL, EXIT_UNEQUAL, EXIT_INVALID, EXIT_BUDGET = 0, 1, 2, 3


def _context(p: argparse.ArgumentParser) -> None:
    p.add_argument("--m", type=int, required=True, help="number of fixed strands")
    p.add_argument("--n", type=int, required=True, help="number of moving strands")


def _framing(text: str) -> tuple[int, int]:
    f = Fraction(text)
    return f.numerator, f.denominator


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="braidcalc", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("normalize", help="ambient normal form of a word")
    p.add_argument("word")
    _context(p)

    p = sub.add_parser("equal", help="decide equality of two words")
    p.add_argument("left")
    p.add_argument("right")
    _context(p)

    p = sub.add_parser("comb", help="split a word into algebraic part and coset")
    p.add_argument("word")
    _context(p)

    p = sub.add_parser("bandmove", help="combed algebraic band move")
    p.add_argument("--pres", required=True, help="presentation JSON file")
    p.add_argument("--component", type=int, default=0)
    p.add_argument("--sign", choices=["+", "-"], default="+")
    p.add_argument("--beta", default="")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("preset", help="write a preset presentation document")
    kinds = p.add_subparsers(dest="kind", required=True)
    k = kinds.add_parser("lens")
    k.add_argument("--p", type=int, required=True)
    k.add_argument("--q", type=int, required=True)
    k = kinds.add_parser("trefoil")
    k.add_argument("--q", type=int, required=True)
    k = kinds.add_parser("seifert")
    k.add_argument("--framings", required=True, help="comma separated, e.g. 2/1,3/2")
    k = kinds.add_parser("torus")
    k.add_argument("--mt", type=int, required=True)
    k.add_argument("--r", type=int, required=True)
    k.add_argument("--p", type=int, required=True)
    k.add_argument("--q", type=int, required=True)
    for k in kinds.choices.values():
        k.add_argument("--out", help="write here instead of stdout")

    p = sub.add_parser("render", help="ASCII strand diagram, optionally a figure")
    p.add_argument("word")
    _context(p)
    p.add_argument("--svg", help="write an SVG figure to this path")
    p.add_argument("--png", help="write a PNG figure to this path")
    return ap


def _run(args) -> int:
    out = sys.stdout
    if args.command == "normalize":
        w = parse_word(args.word, args.m, args.n)
        nf = mixed_normal_form(w)
        out.write(f"strands: {nf.strand_count}\n")
        out.write(f"delta_power: {nf.delta_power}\n")
        out.write(f"factors: {len(nf.factors)}\n")
        out.write(f"normal_form: {nf}\n")
        return 0

    if args.command == "equal":
        u = parse_word(args.left, args.m, args.n)
        v = parse_word(args.right, args.m, args.n)
        same = equal(u, v)
        out.write("equal\n" if same else "not equal\n")
        return EXIT_EQUAL if same else EXIT_UNEQUAL

    if args.command == "comb":
        res = comb(parse_word(args.word, args.m, args.n))
        out.write(f"algebraic: {print_word(res.algebraic)}\n")
        out.write(f"coset: {print_word(res.coset)}\n")
        return 0

    if args.command == "bandmove":
        pres = load_presentation(args.pres)
        beta = parse_word(args.beta, pres.m, args.n)
        res = band_moves.band_move(beta, pres, args.component, 1 if args.sign == "+" else -1)
        out.write(f"d: {print_word(res.d)}\n")
        out.write(f"c: {print_word(res.c)}\n")
        out.write(f"beta_prime: {print_word(res.beta_prime)}\n")
        out.write(f"comb: {print_word(res.comb_word)}\n")
        out.write(f"new_n: {res.new_n}\n")
        return 0

    if args.command == "preset":
        if args.kind == "lens":
            ps = presets.lens_space(args.p, args.q)
        elif args.kind == "trefoil":
            ps = presets.trefoil_homology_sphere(args.q)
        elif args.kind == "seifert":
            try:
                frs = [_framing(f) for f in args.framings.split(",") if f.strip()]
            except (ValueError, ZeroDivisionError):
                raise WordError(f"bad framing list {args.framings!r}") from None
            ps = presets.seifert_manifold(frs)
        else:
            ps = presets.torus_knot_surgery(args.mt, args.r, args.p, args.q)
        text = dumps_presentation(ps.presentation)
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            out.write(text)
        return 0

    if args.command == "render":
        w = parse_word(args.word, args.m, args.n)
        diagram = ascii_diagram(w)
        strands, crossings = diagram_stats(diagram)
        out.write(f"strands: {strands}\n")
        out.write(f"crossings: {crossings}\n")
        for path in (args.svg, args.png):
            if path:
                render_figure(w, path, title=print_word(w) or "identity")
                out.write(f"figure: {path}\n")
        out.write("---\n")
        out.write(diagram)
        return 0
    raise AssertionError(args.command)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _run(args)
    except BudgetExceeded as exc:
        print(f"braidcalc: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (WordError, OSError) as exc:
        print(f"braidcalc: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
