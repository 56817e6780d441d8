"""Integer partitions: conjugation, Durfee squares, successive ranks, and
the dictionary between partitions and binary words (lattice paths and
southeast boundary words)."""

from __future__ import annotations

import itertools
from collections.abc import Iterator, Sequence

from .words import Word, permutations_of, require_binary

Partition = tuple[int, ...]


def as_partition(parts: Sequence[int]) -> Partition:
    p = tuple(parts)
    for a, b in zip(p, p[1:]):
        if a < b:
            raise ValueError(f"parts must be weakly decreasing: {p}")
    if p and p[-1] < 1:
        raise ValueError(f"parts must be positive: {p}")
    return p


def parse_partition(text: str) -> Partition:
    """Parse "(8,8,6,5,2,1)"; "()" and "" denote the empty partition."""
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        text = text[1:-1]
    if not text:
        return ()
    return as_partition(int(p) for p in text.split(","))


def format_partition(p: Sequence[int]) -> str:
    return "(" + ",".join(str(a) for a in p) + ")"


def size(p: Sequence[int]) -> int:
    return sum(p)


def conjugate(p: Sequence[int]) -> Partition:
    if not p:
        return ()
    return tuple(sum(1 for part in p if part >= j) for j in range(1, p[0] + 1))


def durfee(p: Sequence[int]) -> int:
    """Side of the largest square inside the Ferrers diagram."""
    d = 0
    for i, part in enumerate(p, start=1):
        if part >= i:
            d = i
        else:
            break
    return d


def delta(p: Sequence[int]) -> int:
    """Difference of the first two parts (missing parts count as zero)."""
    if not p:
        return 0
    return p[0] - (p[1] if len(p) > 1 else 0)


def ranks(p: Sequence[int]) -> tuple[int, ...]:
    """Successive ranks r_i = (i-th part) - (i-th conjugate part), i <= durfee."""
    c = conjugate(p)
    return tuple(p[i] - c[i] for i in range(durfee(p)))


def max_rank(p: Sequence[int]) -> int | None:
    """Largest successive rank, or None when there are none (empty partition)."""
    r = ranks(p)
    return max(r) if r else None


def max_rank_index(p: Sequence[int]) -> int | None:
    """Largest 1-based index attaining the maximum rank, or None."""
    r = ranks(p)
    if not r:
        return None
    m = max(r)
    return max(i for i, val in enumerate(r, start=1) if val == m)


def all_ranks(p: Sequence[int], pred) -> bool:
    """True iff every successive rank satisfies pred (vacuously true)."""
    return all(pred(r) for r in ranks(p))


def durfee_decomposition(p: Sequence[int]) -> tuple[int, Partition, Partition]:
    """Split off the Durfee square: (side, arm to its right, leg below).

    Sizes satisfy |p| = side^2 + |arm| + |leg|.
    """
    d = durfee(p)
    right = tuple(x - d for x in p[:d] if x > d)
    below = tuple(p[d:])
    return d, right, below


def fits_in_box(p: Sequence[int], rows: int, cols: int) -> bool:
    return len(p) <= rows and (not p or p[0] <= cols)


def ferrers(p: Sequence[int], dot: str = ".") -> str:
    """Dot-row rendering of the Ferrers diagram."""
    return "\n".join(" ".join(dot for _ in range(part)) for part in p)


# ---------------------------------------------------------------------------
# the word <-> partition dictionary


def partition_of_word(w: Sequence[int], ones: int | None = None, twos: int | None = None) -> Partition:
    """Partition traced inside the (#ones x #twos) box by the lattice path
    of a binary word (1 = north step, 2 = east step).

    The i-th part (ones numbered right to left) counts the twos before
    that one, so the size of the partition equals inv(w).
    """
    require_binary(w)
    m = sum(1 for a in w if a == 1)
    n = len(w) - m
    if ones is not None and ones != m:
        raise ValueError(f"word has {m} ones, box expects {ones}")
    if twos is not None and twos != n:
        raise ValueError(f"word has {n} twos, box expects {twos}")
    parts: list[int] = []
    seen2 = 0
    for a in w:
        if a == 2:
            seen2 += 1
        else:
            parts.append(seen2)
    parts.reverse()
    return tuple(x for x in parts if x)


def boundary_word(p: Sequence[int]) -> Word:
    """North/east steps along the southeast boundary of the diagram
    (1 = north, 2 = east), read from the bottom-left corner.

    Nonempty partitions give words starting with 2 and ending with 1;
    the empty partition gives the empty word.
    """
    if not p:
        return ()
    out: list[int] = []
    prev = 0
    for part in reversed(tuple(p)):
        out.extend([2] * (part - prev))
        out.append(1)
        prev = part
    return tuple(out)


def partition_of_boundary(w: Sequence[int]) -> Partition:
    """Inverse of boundary_word (the tight-box lattice path reading)."""
    w = tuple(w)
    if not w:
        return ()
    require_binary(w)
    if w[0] != 2 or w[-1] != 1:
        raise ValueError(f"not a boundary word (must start 2 and end 1): {w}")
    return partition_of_word(w)


def is_boundary_word(w: Sequence[int]) -> bool:
    w = tuple(w)
    return w == () or (all(a in (1, 2) for a in w) and w[0] == 2 and w[-1] == 1)


# ---------------------------------------------------------------------------
# partition streams
#
# All streams are ordered by size, then lexicographically on part tuples.


def partitions_of(n: int, max_part: int | None = None, max_len: int | None = None) -> Iterator[Partition]:
    """Partitions of n, optionally bounded in largest part and part count."""
    if n < 0:
        return
    cap = n if max_part is None else min(max_part, n)
    room = n if max_len is None else max_len

    # first part ascending gives lexicographic order on tuples
    def rec(left: int, biggest: int, slots: int) -> Iterator[Partition]:
        if left == 0:
            yield ()
            return
        if slots == 0:
            return
        for k in range(1, min(left, biggest) + 1):
            for rest in rec(left - k, k, slots - 1):
                yield (k,) + rest

    yield from rec(n, cap, room)


def partitions_up_to(max_size: int, **caps) -> Iterator[Partition]:
    for n in range(max_size + 1):
        yield from partitions_of(n, **caps)


def partitions_in_box(rows: int, cols: int) -> Iterator[Partition]:
    for n in range(rows * cols + 1):
        yield from partitions_of(n, max_part=cols, max_len=rows)


def partitions_by_boundary_length(max_len: int) -> Iterator[Partition]:
    """All partitions whose boundary word has at most max_len letters,
    i.e. part count plus largest part <= max_len.  Starts with the empty
    partition; deterministic order."""
    yield ()
    for n in range(2, max_len + 1):
        for mid in itertools.product((1, 2), repeat=n - 2):
            yield partition_of_word((2,) + mid + (1,))


def rank_negative_in_box(rows: int, cols: int) -> Iterator[Partition]:
    """Partitions in the box with every successive rank negative."""
    return (p for p in partitions_in_box(rows, cols) if all_ranks(p, lambda r: r < 0))


def rank_at_least(t: int, max_size: int) -> Iterator[Partition]:
    return (p for p in partitions_up_to(max_size) if all_ranks(p, lambda r: r >= t))


def rank_at_most(t: int, max_size: int) -> Iterator[Partition]:
    return (p for p in partitions_up_to(max_size) if all_ranks(p, lambda r: r <= t))


def rank_in_interval(lo: int, hi: int, max_size: int) -> Iterator[Partition]:
    return (p for p in partitions_up_to(max_size) if all_ranks(p, lambda r: lo <= r <= hi))


def no_part_equal(t: int, max_size: int) -> Iterator[Partition]:
    return (p for p in partitions_up_to(max_size) if t not in p)


def no_part_congruent(modulus: int, residue: int, max_size: int) -> Iterator[Partition]:
    """Partitions with no part congruent to 0, residue, or -residue mod modulus."""
    banned = {0, residue % modulus, (-residue) % modulus}
    return (
        p
        for p in partitions_up_to(max_size)
        if all(part % modulus not in banned for part in p)
    )


def first_difference_class(t: int, max_size: int) -> Iterator[Partition]:
    """Partitions whose first two parts differ by exactly t."""
    return (p for p in partitions_up_to(max_size) if delta(p) == t)


def max_rank_class(n: int, k: int) -> Iterator[Word]:
    """Rearrangements of 1^n 2^n whose lattice-path partition has maximum
    successive rank k.  (A word family, not a partition family.)"""
    for w in permutations_of((1,) * n + (2,) * n):
        if max_rank(partition_of_word(w)) == k:
            yield w
