from hypothesis import strategies as st

from braidcalc.core import Letter, MixedWord


@st.composite
def mixed_words(draw, max_m=3, max_n=4, max_len=12, fixed=True, m=None, n=None):
    m = draw(st.integers(1, max_m)) if m is None else m
    n = draw(st.integers(1, max_n)) if n is None else n
    fams = [("a", m)]
    if n > 1:
        fams.append(("s", n - 1))
    if fixed and m > 1:
        fams.append(("S", m - 1))
    letter = st.tuples(st.sampled_from(fams), st.sampled_from((1, -1))).flatmap(
        lambda fs: st.integers(1, fs[0][1]).map(lambda i: Letter(fs[0][0], i, fs[1]))
    )
    return MixedWord(m, n, tuple(draw(st.lists(letter, max_size=max_len))))
