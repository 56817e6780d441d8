"""Words over the positive integers and their classical statistics.

A word is any finite sequence of integers >= 1, handled as a plain tuple.
All functions are pure and positions are 1-based throughout (the major
index is a sum of positions, so the convention matters).
"""

from __future__ import annotations

import itertools
from collections import Counter
from collections.abc import Iterable, Iterator, Sequence

Word = tuple[int, ...]


def as_word(letters: Iterable[int]) -> Word:
    w = tuple(letters)
    for a in w:
        if a < 1:
            raise ValueError(f"letters must be positive integers, got {a}")
    return w


def parse_word(text: str) -> Word:
    """Parse a digit string ("2121312") or comma-separated form ("10,2,3")."""
    text = text.strip()
    if not text:
        return ()
    if "," in text:
        return as_word(int(p) for p in text.split(","))
    return as_word(int(c) for c in text)


def format_word(w: Sequence[int]) -> str:
    """Digit string when every letter is a single digit, else comma-separated."""
    if all(a <= 9 for a in w):
        return "".join(str(a) for a in w)
    return ",".join(str(a) for a in w)


def require_binary(w: Sequence[int]) -> None:
    for a in w:
        if a not in (1, 2):
            raise ValueError(f"word must use only letters 1 and 2: {format_word(w)}")


# ---------------------------------------------------------------------------
# statistics


def descent_set(w: Sequence[int]) -> frozenset[int]:
    """Positions i (1-based, i < len(w)) where w drops: w_i > w_{i+1}."""
    return frozenset(i for i in range(1, len(w)) if w[i - 1] > w[i])


def des(w: Sequence[int]) -> int:
    return len(descent_set(w))


def maj(w: Sequence[int]) -> int:
    return sum(descent_set(w))


def inv(w: Sequence[int]) -> int:
    """Number of pairs i < j with w_i > w_j."""
    n = len(w)
    total = 0
    for i in range(n):
        a = w[i]
        for j in range(i + 1, n):
            if a > w[j]:
                total += 1
    return total


def exc(w: Sequence[int]) -> int:
    """Positions where the word exceeds its weakly increasing rearrangement.

    Strict comparison only; ties at repeated letters never count.
    """
    return sum(1 for a, b in zip(w, sorted(w)) if a > b)


def reverse_complement(w: Sequence[int]) -> Word:
    """Read a binary word backwards while exchanging ones and twos.

    An involution; it preserves inv and des, and sends maj to
    len(w)*des(w) - maj(w).
    """
    require_binary(w)
    return tuple(3 - a for a in reversed(w))


def is_ballot(w: Sequence[int]) -> bool:
    """True iff in every prefix each letter i occurs at least as often as i+1."""
    counts: Counter[int] = Counter()
    for a in w:
        counts[a] += 1
        if a > 1 and counts[a] > counts[a - 1]:
            return False
    return True


def ones_twos_compositions(v: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Exponent vectors of the factorization 1^m0 2^n0 1^m1 2^n1 ... 1^md 2^nd.

    d equals des(v); m0 and nd may vanish, the interior exponents are
    positive.  The empty word yields ((0,), (0,)).
    """
    require_binary(v)
    blocks = [[0, 0]]
    in_twos = False
    for a in v:
        if a == 1:
            if in_twos:
                blocks.append([1, 0])
                in_twos = False
            else:
                blocks[-1][0] += 1
        else:
            in_twos = True
            blocks[-1][1] += 1
    return tuple(m for m, _ in blocks), tuple(n for _, n in blocks)


def word_from_compositions(ones_comp: Sequence[int], twos_comp: Sequence[int]) -> Word:
    """Rebuild 1^m0 2^n0 ... 1^md 2^nd; inverse of ones_twos_compositions."""
    if len(ones_comp) != len(twos_comp):
        raise ValueError("composition lengths differ")
    out: list[int] = []
    for m, n in zip(ones_comp, twos_comp):
        if m < 0 or n < 0:
            raise ValueError("negative exponent")
        out.extend([1] * m)
        out.extend([2] * n)
    return tuple(out)


def match_pairs(w: Sequence[int]) -> tuple[tuple[tuple[int, int], ...], tuple[int, ...], tuple[int, ...]]:
    """Pair ones (openers) with later twos (closers), stack style.

    Returns (pairs, unpaired_one_positions, unpaired_two_positions), all
    1-based.  Every unpaired two precedes every unpaired one.
    """
    require_binary(w)
    stack: list[int] = []
    pairs: list[tuple[int, int]] = []
    un2: list[int] = []
    for pos, a in enumerate(w, start=1):
        if a == 1:
            stack.append(pos)
        elif stack:
            pairs.append((stack.pop(), pos))
        else:
            un2.append(pos)
    if un2 and stack and un2[-1] > stack[0]:
        raise AssertionError("pairing invariant violated")
    return tuple(pairs), tuple(stack), tuple(un2)


def excess_profile(w: Sequence[int]) -> tuple[tuple[int, ...], int, int]:
    """Prefix excesses of twos over ones, block by block.

    Returns (e_0..e_d, max excess, matched pair count) where e_i is the
    two-excess of the prefix 1^m0 2^n0 ... 1^mi 2^ni.  For rearrangements
    of 1^n 2^n the max equals n minus the pair count.
    """
    om, ta = ones_twos_compositions(w)
    ones_run = twos_run = 0
    evec: list[int] = []
    for m, n in zip(om, ta):
        ones_run += m
        twos_run += n
        evec.append(twos_run - ones_run)
    pairs, _, _ = match_pairs(w)
    return tuple(evec), max(evec), len(pairs)


def run_decomposition(w: Sequence[int]) -> tuple[tuple[int, int, bool, bool], ...]:
    """Maximal constant factors as (value, length, is_prefix, is_suffix)."""
    runs: list[tuple[int, int, bool, bool]] = []
    i, n = 0, len(w)
    while i < n:
        j = i
        while j < n and w[j] == w[i]:
            j += 1
        runs.append((w[i], j - i, i == 0, j == n))
        i = j
    return tuple(runs)


# ---------------------------------------------------------------------------
# patterns


def contains_pattern(w: Sequence[int], pattern: Sequence[int]) -> bool:
    """True iff some subsequence of w is order-isomorphic to the pattern.

    The pattern must be a permutation of 1..k; equal letters in w never
    realize a strict inequality of the pattern.
    """
    k = len(pattern)
    if sorted(pattern) != list(range(1, k + 1)):
        raise ValueError("pattern must be a permutation of 1..k")
    if k == 0:
        return True
    idx = range(k)
    for combo in itertools.combinations(w, k):
        if all(
            (combo[a] < combo[b]) == (pattern[a] < pattern[b])
            and (combo[a] > combo[b]) == (pattern[a] > pattern[b])
            for a in idx
            for b in range(a + 1, k)
        ):
            return True
    return False


def avoids_all(w: Sequence[int], patterns: Iterable[Sequence[int]]) -> bool:
    return not any(contains_pattern(w, p) for p in patterns)


# ---------------------------------------------------------------------------
# word families
#
# Fixed-length families stream in lexicographic order with 1 < 2 < ...;
# variable-length families stream shortest first, then lexicographically.


def permutations_of(w: Sequence[int]) -> Iterator[Word]:
    """All distinct rearrangements of the multiset w, lexicographically."""
    counts = Counter(w)
    letters = sorted(counts)
    n = len(w)
    prefix: list[int] = []

    def rec() -> Iterator[Word]:
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for a in letters:
            if counts[a]:
                counts[a] -= 1
                prefix.append(a)
                yield from rec()
                prefix.pop()
                counts[a] += 1

    return rec()


def binary_words(length: int) -> Iterator[Word]:
    return itertools.product((1, 2), repeat=length)


def words_up_to(max_letter: int, max_len: int) -> Iterator[Word]:
    """All words over 1..max_letter of length <= max_len, shortest first."""
    alphabet = tuple(range(1, max_letter + 1))
    for n in range(max_len + 1):
        yield from itertools.product(alphabet, repeat=n)


def ballot_words(ones: int, twos: int) -> Iterator[Word]:
    """Ballot rearrangements of 1^ones 2^twos, lexicographically.

    Empty when twos > ones.  ballot_words(n, n) are counted by the
    Catalan numbers.
    """
    if ones < 0 or twos < 0:
        raise ValueError("counts must be nonnegative")
    prefix: list[int] = []

    def rec(r1: int, r2: int, c1: int, c2: int) -> Iterator[Word]:
        if not r1 and not r2:
            yield tuple(prefix)
            return
        if r1:
            prefix.append(1)
            yield from rec(r1 - 1, r2, c1 + 1, c2)
            prefix.pop()
        if r2 and c2 < c1:
            prefix.append(2)
            yield from rec(r1, r2 - 1, c1, c2 + 1)
            prefix.pop()

    return rec(ones, twos, 0, 0)


def fibonacci_words(n: int, ones: int | None = None) -> Iterator[Word]:
    """Length-n binary words with no two adjacent ones.

    With ones=k, restrict to words containing exactly k ones.  Counted by
    the Fibonacci numbers (F_{n+1} with F_0 = F_1 = 1).
    """
    prefix: list[int] = []

    def rec(left: int, prev: int) -> Iterator[Word]:
        if left == 0:
            if ones is None or prefix.count(1) == ones:
                yield tuple(prefix)
            return
        if prev != 1:
            prefix.append(1)
            yield from rec(left - 1, 1)
            prefix.pop()
        prefix.append(2)
        yield from rec(left - 1, 2)
        prefix.pop()

    return rec(n, 0)


def fibonacci_dual_words(n: int, ones: int | None = None) -> Iterator[Word]:
    """Length-n binary words with no two adjacent twos."""
    prefix: list[int] = []

    def rec(left: int, prev: int) -> Iterator[Word]:
        if left == 0:
            if ones is None or prefix.count(1) == ones:
                yield tuple(prefix)
            return
        prefix.append(1)
        yield from rec(left - 1, 1)
        prefix.pop()
        if prev != 2:
            prefix.append(2)
            yield from rec(left - 1, 2)
            prefix.pop()

    return rec(n, 0)


def letter_sum_words(total: int) -> Iterator[Word]:
    """Binary words whose letters sum to the given total, lexicographically.

    Counted by F_total with F_0 = F_1 = 1.
    """
    if total < 0:
        raise ValueError("total must be nonnegative")

    def rec(left: int) -> Iterator[Word]:
        if left == 0:
            yield ()
            return
        for w in rec(left - 1):
            yield (1,) + w
        if left >= 2:
            for w in rec(left - 2):
                yield (2,) + w

    return rec(total)


def excess_class(n: int, k: int) -> Iterator[Word]:
    """Rearrangements of 1^n 2^n whose maximum prefix two-excess equals k."""
    for w in permutations_of((1,) * n + (2,) * n):
        if excess_profile(w)[1] == k:
            yield w


def suffix_words(suffix: Sequence[int], max_len: int) -> Iterator[Word]:
    """The empty word plus every binary word ending in the given suffix,
    up to max_len letters (the family is infinite, so the cap is required)."""
    if max_len is None:
        raise ValueError("length cap required for an infinite family")
    v = as_word(suffix)
    require_binary(v)
    yield ()
    for n in range(len(v), max_len + 1):
        for u in itertools.product((1, 2), repeat=n - len(v)):
            yield u + v


def ballot_suffix_words(suffix: Sequence[int], max_len: int) -> Iterator[Word]:
    return (w for w in suffix_words(suffix, max_len) if is_ballot(w))


def symmetric_group(n: int) -> Iterator[Word]:
    return itertools.permutations(range(1, n + 1))


def pattern_class(n: int, patterns: Iterable[Sequence[int]]) -> Iterator[Word]:
    """Permutations of 1..n avoiding every listed pattern, lexicographically."""
    pats = [as_word(p) for p in patterns]
    for perm in itertools.permutations(range(1, n + 1)):
        if avoids_all(perm, pats):
            yield perm
