"""Foata's fundamental bijection on words over the positive integers.

The word is rebuilt letter by letter.  Before the next letter a is
appended, the word built so far is cut into factors: if its last letter
is <= a, each factor ends at a letter <= a (and all earlier letters of
the factor are > a); otherwise each factor ends at a letter > a.  Every
factor is then rotated so its last letter moves to the front, and a is
appended.  The resulting map is a bijection that carries the major index
to the inversion number: maj(v) = inv(foata(v)) for every word v.
"""

from __future__ import annotations

from collections.abc import Sequence

from .words import Word, as_word, ones_twos_compositions, require_binary

Trace = list[tuple[Word, tuple[Word, ...] | None]]


def _factor_ends(w: Sequence[int], a: int) -> list[int]:
    # the comparison letter is w's last, so the final factor always closes
    if w[-1] <= a:
        return [i for i, b in enumerate(w) if b <= a]
    return [i for i, b in enumerate(w) if b > a]


def foata_trace(v: Sequence[int]) -> Trace:
    """Every stage of the construction.

    Stage i is (w_i, factors), where the factors are the ones used to
    build w_{i+1}; the final stage, the image itself, carries None.
    """
    v = as_word(v)
    stages: Trace = []
    w: list[int] = []
    for a in v:
        if not w:
            w = [a]
            continue
        ends = _factor_ends(w, a)
        factors: list[Word] = []
        nw: list[int] = []
        start = 0
        for e in ends:
            factors.append(tuple(w[start : e + 1]))
            nw.append(w[e])
            nw.extend(w[start:e])
            start = e + 1
        stages.append((tuple(w), tuple(factors)))
        nw.append(a)
        w = nw
    if v:
        stages.append((tuple(w), None))
    return stages


def foata(v: Sequence[int]) -> Word:
    """Image of v under the bijection; a rearrangement of v with
    inv(foata(v)) = maj(v)."""
    v = as_word(v)
    w: list[int] = []
    for a in v:
        if not w:
            w = [a]
            continue
        nw: list[int] = []
        start = 0
        for e in _factor_ends(w, a):
            nw.append(w[e])
            nw.extend(w[start:e])
            start = e + 1
        nw.append(a)
        w = nw
    return tuple(w)


def foata_inverse(w: Sequence[int]) -> Word:
    """Inverse map: peel the final letter and undo the factor rotations.

    After a rotation each factor starts with its old closing letter, so
    comparing the first remaining letter against the peeled letter
    recovers which cutting rule applied, and the factor starts with it.
    """
    w = as_word(w)
    out: list[int] = []
    cur = list(w)
    while cur:
        a = cur.pop()
        out.append(a)
        if not cur:
            break
        if cur[0] <= a:
            starts = [i for i, b in enumerate(cur) if b <= a]
        else:
            starts = [i for i, b in enumerate(cur) if b > a]
        nxt: list[int] = []
        for k, st in enumerate(starts):
            end = starts[k + 1] if k + 1 < len(starts) else len(cur)
            nxt.extend(cur[st + 1 : end])
            nxt.append(cur[st])
        cur = nxt
    out.reverse()
    return tuple(out)


def foata_inverse_binary(w: Sequence[int]) -> Word:
    """Binary-only inverse via the peeling identity
    1^m 2 u 1 2^n  ->  inverse(u) 2 1^(m+1) 2^n.

    Kept separate from foata_inverse as an independent cross-check path.
    """
    require_binary(w)
    w = tuple(w)
    suffix: list[int] = []
    while True:
        m = 0
        while m < len(w) and w[m] == 1:
            m += 1
        if m == len(w):  # 1^a 2^b is a fixed point
            break
        n = 0
        while n < len(w) and w[len(w) - 1 - n] == 2:
            n += 1
        if m + n == len(w):
            break
        # w = 1^m 2 u 1 2^n
        tail = [2] + [1] * (m + 1) + [2] * n
        tail.extend(suffix)
        suffix = tail
        w = w[m + 1 : len(w) - n - 1]
    return w + tuple(suffix)


def foata_binary(v: Sequence[int]) -> Word:
    """Closed form of the bijection on binary words.

    With v = 1^m0 2^n0 ... 1^md 2^nd the image is
    1^(md-1) 2 ... 1^(m1-1) 2 1^m0 2^(n0-1) 1 ... 2^(n(d-1)-1) 1 2^nd.
    """
    require_binary(v)
    om, ta = ones_twos_compositions(v)
    d = len(om) - 1
    if d == 0:
        return tuple(v)
    out: list[int] = []
    for i in range(d, 0, -1):
        out.extend([1] * (om[i] - 1))
        out.append(2)
    out.extend([1] * om[0])
    for j in range(0, d):
        out.extend([2] * (ta[j] - 1))
        out.append(1)
    out.extend([2] * ta[d])
    return tuple(out)


def render_trace(v: Sequence[int], dot: str = "·") -> str:
    """Stage table with factors separated by dots, one stage per line."""
    from .words import format_word

    v = as_word(v)
    lines = []
    for i, (stage, factors) in enumerate(foata_trace(v), start=1):
        word_s = format_word(stage)
        if factors is not None:
            lines.append(f"w{i} = {word_s} = {dot.join(format_word(f) for f in factors)}")
        else:
            lines.append(f"w{i} = {word_s}")
    return "\n".join(lines)
