"""Structured bijections between word and partition families: the
half-split of square ballot words, the composition encodings of ballot
words, the rank-reduction map on partitions with equal first parts, and
the symmetric-chain map on binary words conjugate to it."""

from __future__ import annotations

from collections.abc import Iterator, Sequence

from .foata import foata, foata_inverse
from .partitions import (
    Partition,
    as_partition,
    boundary_word,
    conjugate,
    delta,
    max_rank,
    max_rank_index,
    partition_of_boundary,
    ranks,
)
from .words import (
    Word,
    as_word,
    excess_profile,
    is_ballot,
    match_pairs,
    require_binary,
    reverse_complement,
)


# ---------------------------------------------------------------------------
# the half split on square ballot words


def ballot_split(w: Sequence[int]) -> tuple[Word, Word]:
    """Cut a ballot rearrangement of 1^n 2^n in half and reverse-complement
    the right half.  Both outputs are ballot words with a common number of
    twos d, and inv(w) = inv(x) + inv(y) + d^2."""
    w = as_word(w)
    require_binary(w)
    if len(w) % 2:
        raise ValueError("even length required")
    n = len(w) // 2
    if w.count(1) != n or not is_ballot(w):
        raise ValueError("ballot rearrangement of 1^n 2^n required")
    return w[:n], reverse_complement(w[n:])


def ballot_unsplit(x: Sequence[int], y: Sequence[int]) -> Word:
    """Inverse of ballot_split."""
    return as_word(x) + reverse_complement(y)


# ---------------------------------------------------------------------------
# composition encodings of ballot words


def is_ones_composition(comp: Sequence[int]) -> bool:
    """Membership in the one's-composition family: first entry >= 0, the
    rest positive, and every suffix sum of length i at least 2i."""
    if not comp or comp[0] < 0 or any(c < 1 for c in comp[1:]):
        return False
    d = len(comp) - 1
    acc = 0
    for i in range(1, d + 1):
        acc += comp[d - i + 1]
        if acc < 2 * i:
            return False
    return True


def is_twos_composition(comp: Sequence[int]) -> bool:
    """Membership in the two's-composition family: last entry >= 0, the
    rest positive, and every suffix sum of length i at least 2i - 1."""
    if not comp or comp[-1] < 0 or any(c < 1 for c in comp[:-1]):
        return False
    d = len(comp) - 1
    acc = 0
    for i in range(1, d + 1):
        acc += comp[d - i + 1]
        if acc < 2 * i - 1:
            return False
    return True


def _compositions(total: int, mins: Sequence[int]) -> Iterator[tuple[int, ...]]:
    if not mins:
        if total == 0:
            yield ()
        return
    rest_min = sum(mins[1:])
    for v in range(mins[0], total - rest_min + 1):
        for tail in _compositions(total - v, mins[1:]):
            yield (v,) + tail


def ones_compositions(n: int, d: int) -> Iterator[tuple[int, ...]]:
    """All one's compositions with d+1 entries summing to n."""
    mins = [0] + [1] * d
    return (c for c in _compositions(n, mins) if is_ones_composition(c))


def twos_compositions(n: int, d: int) -> Iterator[tuple[int, ...]]:
    """All two's compositions with d+1 entries summing to n."""
    mins = [1] * d + [0]
    return (c for c in _compositions(n, mins) if is_twos_composition(c))


def ones_composition_word(comp: Sequence[int]) -> Word:
    """Encode (w_0..w_d) as the ballot word 1^(wd-1) 2 1^(w(d-1)-1) 2 ... 1^w0."""
    comp = tuple(comp)
    if not is_ones_composition(comp):
        raise ValueError(f"not a valid one's composition: {comp}")
    d = len(comp) - 1
    out: list[int] = []
    for i in range(d, 0, -1):
        out.extend([1] * (comp[i] - 1))
        out.append(2)
    out.extend([1] * comp[0])
    return tuple(out)


def twos_composition_word(comp: Sequence[int]) -> Word:
    """Encode (t_0..t_d) as the ballot word 1^td 2 1^(t(d-1)-1) 2 ... 2 1^(t0-1)."""
    comp = tuple(comp)
    if not is_twos_composition(comp):
        raise ValueError(f"not a valid two's composition: {comp}")
    d = len(comp) - 1
    out: list[int] = [1] * comp[d]
    for i in range(d - 1, -1, -1):
        out.append(2)
        out.extend([1] * (comp[i] - 1))
    return tuple(out)


# ---------------------------------------------------------------------------
# rank reduction on partitions (one loop pass, then the full map)


def csv_step(p: Sequence[int]) -> Partition:
    """One rank-reduction pass: with i the largest index attaining the
    maximum rank, remove a part of size i from the conjugate, add a part
    of size i-1, and lengthen the first part by one.  Preserves the size;
    while the maximum rank r is nonnegative it drops to at most r-1, with
    equality when r > 0."""
    p = as_partition(p)
    r = max_rank(p)
    if r is None or r < 0:
        raise ValueError("rank reduction needs a nonnegative maximum rank")
    i = max_rank_index(p)
    cols = list(conjugate(p))
    if i not in cols:
        raise ValueError(f"no column of height {i} to remove from {p}")
    cols.remove(i)
    parts = list(conjugate(tuple(cols)))
    if i > 1:
        parts.append(i - 1)
        parts.sort(reverse=True)
    if parts:
        parts[0] += 1
    else:
        parts = [1]
    return tuple(parts)


def csv_map(p: Sequence[int]) -> Partition:
    """Iterate csv_step until every rank is negative.

    Defined on partitions whose first two parts agree (plus anything that
    already has all ranks negative, which passes through unchanged); the
    result has the same size and all ranks negative.
    """
    p = as_partition(p)
    r = max_rank(p)
    if r is None or r < 0:
        return p
    if delta(p) != 0:
        raise ValueError("first two parts must agree (or all ranks be negative)")
    while True:
        p = csv_step(p)
        r = max_rank(p)
        if r is None or r < 0:
            return p


def csv_trace(p: Sequence[int]) -> list[dict]:
    """Stage-by-stage record of csv_map: partition, rank vector, maximum
    rank and its index, the boundary word, its preimage under the
    fundamental bijection, and the preimage's excess vector."""
    p = as_partition(p)
    if max_rank(p) is not None and max_rank(p) >= 0 and delta(p) != 0:
        raise ValueError("first two parts must agree (or all ranks be negative)")
    stages = []
    while True:
        w = boundary_word(p)
        v = foata_inverse(w)
        evec = excess_profile(v)[0] if v else ()
        r = max_rank(p)
        stages.append(
            {
                "partition": p,
                "rho": ranks(p),
                "r": r,
                "i": max_rank_index(p),
                "word": w,
                "preimage": v,
                "excesses": evec,
            }
        )
        if r is None or r < 0:
            return stages
        p = csv_step(p)


# ---------------------------------------------------------------------------
# the symmetric-chain map and the induced bijection on words


def flip_rightmost_unpaired_two(w: Sequence[int]) -> Word:
    """Change the rightmost unpaired two into a one; the pairing is
    unchanged."""
    w = as_word(w)
    _, _, un2 = match_pairs(w)
    if not un2:
        raise ValueError("no unpaired two")
    pos = un2[-1]
    return w[: pos - 1] + (1,) + w[pos:]


def flip_leftmost_unpaired_one(w: Sequence[int]) -> Word:
    """Inverse of flip_rightmost_unpaired_two."""
    w = as_word(w)
    _, un1, _ = match_pairs(w)
    if not un1:
        raise ValueError("no unpaired one")
    pos = un1[0]
    return w[: pos - 1] + (2,) + w[pos:]


def chains(n: int) -> list[list[Word]]:
    """Symmetric chain decomposition of all length-n binary words: each
    chain starts at a word whose unpaired letters are all twos and flips
    them one at a time."""
    out = []
    for start in _all_binary(n):
        pairs, un1, un2 = match_pairs(start)
        if un1:
            continue
        chain = [start]
        w = start
        for _ in range(len(un2)):
            w = flip_rightmost_unpaired_two(w)
            chain.append(w)
        out.append(chain)
    return out


def _all_binary(n: int) -> Iterator[Word]:
    import itertools

    return itertools.product((1, 2), repeat=n)


def gk_map(v: Sequence[int]) -> Word:
    """Bijection from words ending in 121 (plus the empty word) onto
    ballot words ending in 21 (plus the empty word): flip away the t
    unpaired twos of the prefix and absorb them into the final two-run,
    sending x121 to flips(x) 1 2^(t+1) 1."""
    v = as_word(v)
    require_binary(v)
    if v == ():
        return ()
    if v[-3:] != (1, 2, 1):
        raise ValueError("word must end in 121")
    x = v[:-3]
    t = len(match_pairs(x)[2])
    for _ in range(t):
        x = flip_rightmost_unpaired_two(x)
    return x + (1,) + (2,) * (t + 1) + (1,)


def gk_inverse(w: Sequence[int]) -> Word:
    """Inverse of gk_map: write a ballot word ending in 21 as y 1 2^(t+1) 1,
    restore t unpaired twos in y, and append 121."""
    w = as_word(w)
    require_binary(w)
    if w == ():
        return ()
    if not is_ballot(w):
        raise ValueError("ballot word required")
    if w[-2:] != (2, 1):
        raise ValueError("word must end in 21")
    i = len(w) - 2
    while i >= 0 and w[i] == 2:
        i -= 1
    # ballot words ending in 21 always carry a one before the final two-run
    if i < 0 or w[i] != 1:
        raise ValueError("word is not of the form y 1 2^(t+1) 1")
    t = (len(w) - 2 - i) - 1
    y = w[:i]
    for _ in range(t):
        y = flip_leftmost_unpaired_one(y)
    return y + (1, 2, 1)


def csv_via_words(p: Sequence[int]) -> Partition:
    """The conjugate route: boundary word, inverse fundamental bijection,
    gk_map, fundamental bijection, back to a partition.  Agrees with
    csv_map on its whole domain."""
    w = boundary_word(as_partition(p))
    return partition_of_boundary(foata(gk_map(foata_inverse(w))))
