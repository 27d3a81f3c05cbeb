"""ASCII and matplotlib drawings of mixed braids.

Both drawings show the ambient braid (loops expanded), time running down.
Fixed strands are drawn as ``#`` (thick lines), moving strands as ``|``.
In the ASCII form a crossing row reads ``\\+/`` for a positive crossing and
``\\-/`` for a negative one.
"""

from __future__ import annotations

from pathlib import Path

from .core import ArtinWord, MixedWord
from .word_problem import embed

COL = 3  # characters per strand in ASCII
STEP = 1.0
GAP = 0.18  # half-length of the break in the under strand


def _ambient(w) -> tuple[ArtinWord, int]:
    if isinstance(w, MixedWord):
        return embed(w), w.m
    return w, 0


def ascii_diagram(w) -> str:
    amb, m = _ambient(w)
    N = amb.strand_count
    # kind[p] = "#" or "|" for the strand currently at position p
    kind = ["#" if p < m else "|" for p in range(N)]
    header = "".join(("F" if k == "#" else "m").ljust(COL) for k in kind).rstrip()
    rows = [header]
    for x in amb.letters:
        t = abs(x)
        cells = [k.ljust(COL) for k in kind]
        cells[t - 1] = "\\" + ("+" if x > 0 else "-") + " "
        cells[t] = "/".ljust(COL)
        rows.append("".join(cells).rstrip())
        kind[t - 1], kind[t] = kind[t], kind[t - 1]
    rows.append("".join(k.ljust(COL) for k in kind).rstrip())
    return "\n".join(rows) + "\n"


def diagram_stats(text: str) -> tuple[int, int]:
    """(strand count, crossing count) read back from an ASCII diagram."""
    lines = text.splitlines()
    strands = len(lines[0].split()) if lines else 0
    crossings = sum(1 for line in lines[1:-1] if "\\+" in line or "\\-" in line)
    return strands, crossings


def _segments(amb: ArtinWord, m: int):
    """Yield (x0, y0, x1, y1, fixed, under) pieces of every strand."""
    N = amb.strand_count
    fixed = [p < m for p in range(N)]
    for row, x in enumerate(amb.letters):
        t = abs(x) - 1
        y0, y1 = -row * STEP, -(row + 1) * STEP
        for p in range(N):
            if p not in (t, t + 1):
                yield p, y0, p, y1, fixed[p], False
        # positive: strand t+1 -> t is over
        over_from = t + 1 if x > 0 else t
        for src, dst in ((t, t + 1), (t + 1, t)):
            yield src, y0, dst, y1, fixed[src], src != over_from
        fixed[t], fixed[t + 1] = fixed[t + 1], fixed[t]


def render_figure(w, path, title: str | None = None) -> Path:
    """Draw ``w`` with matplotlib; the format follows the file suffix."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    amb, m = _ambient(w)
    N = amb.strand_count
    rows = max(len(amb), 1)
    path = Path(path)
    with matplotlib.rc_context({"svg.hashsalt": "braidcalc", "svg.fonttype": "none"}):
        fig, ax = plt.subplots(figsize=(0.6 * N + 1, 0.35 * rows + 1))
        for x0, y0, x1, y1, is_fixed, under in _segments(amb, m):
            style = dict(color="0.15" if is_fixed else "tab:blue", lw=4 if is_fixed else 2)
            if under:
                # split the under strand around the crossing point
                xm, ym = (x0 + x1) / 2, (y0 + y1) / 2
                for xa, ya in ((x0, y0), (x1, y1)):
                    f = 0.5 - GAP
                    ax.plot([xa, xa + (xm - xa) * 2 * f], [ya, ya + (ym - ya) * 2 * f], **style)
            else:
                ax.plot([x0, x1], [y0, y1], solid_capstyle="butt", **style)
        if not amb.letters:
            for p in range(N):
                ax.plot([p, p], [0, -STEP], color="0.15" if p < m else "tab:blue", lw=4 if p < m else 2)
        ax.set_xlim(-0.5, N - 0.5)
        ax.set_ylim(-rows * STEP - 0.2, 0.2)
        ax.set_axis_off()
        if title:
            ax.set_title(title)
        metadata = {"Date": None} if path.suffix == ".svg" else None
        fig.savefig(path, metadata=metadata)
        plt.close(fig)
    return path
