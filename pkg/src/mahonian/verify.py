"""Registry of executable checks, one per named identity or bijection
theorem, each exhaustively verified at caller-chosen desk-scale bounds.

Every check produces a PairReport; a failing report always carries a
concrete witness that reproduces the failure in isolation.  Reports are
deterministic functions of (check, bounds).
"""

from __future__ import annotations

import itertools
import math
import os
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from . import bijections as B
from .foata import foata, foata_binary, foata_inverse, foata_inverse_binary, foata_trace
from . import genfun as G
from . import partitions as P
from . import words as W
from .laurent import ONE, ZERO, Laurent, Q, monomial

# ---------------------------------------------------------------------------
# reports


@dataclass
class PairReport:
    check: str
    params: dict
    verdict: str  # "pass" | "fail"
    witness: str | None = None
    left: str | None = None
    right: str | None = None
    millis: float = 0.0
    established: bool = True

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def to_json(self) -> dict:
        out = {
            "check": self.check,
            "params": dict(self.params),
            "verdict": self.verdict,
            "millis": round(self.millis, 3),
        }
        if self.witness is not None:
            out["witness"] = self.witness
        if not self.established:
            out["note"] = "empirical: adapted statement, supported by enumeration only"
        return out


@dataclass(frozen=True)
class CheckDef:
    name: str
    doc: str
    fn: object
    quick: dict
    full: dict
    established: bool = True


CHECKS: dict[str, CheckDef] = {}


def _register(name, doc, quick, full, established=True):
    def deco(fn):
        CHECKS[name] = CheckDef(name, doc, fn, quick, full, established)
        return fn

    return deco


def _clip(text: str, limit: int = 160) -> str:
    return text if len(text) <= limit else text[: limit - 3] + "..."


def _poly_result(left: Laurent, right: Laurent, label: str = ""):
    if left == right:
        return True, None, _clip(str(left)), _clip(str(right))
    for e in sorted(set(left.terms) | set(right.terms)):
        lc, rc = left.terms.get(e, 0), right.terms.get(e, 0)
        if lc != rc:
            mono = str(Laurent({e: 1}))
            prefix = f"{label}: " if label else ""
            witness = f"{prefix}coefficient of {mono} is {lc} on the left, {rc} on the right"
            return False, witness, _clip(str(left)), _clip(str(right))
    raise AssertionError("unreachable")


def _set_result(left: set, right: set, fmt=str, label: str = ""):
    if left == right:
        summary = f"{len(left)} elements"
        return True, None, summary, summary
    extra = sorted(fmt(x) for x in left - right)
    missing = sorted(fmt(x) for x in right - left)
    prefix = f"{label}: " if label else ""
    if extra:
        witness = f"{prefix}{extra[0]} is in the left set only"
    else:
        witness = f"{prefix}{missing[0]} is in the right set only"
    return False, witness, f"{len(left)} elements", f"{len(right)} elements"


def check_mahonian_pair(S, T, label: str = ""):
    """Compare the maj distribution over S with the inv distribution over T.

    Both streams must be finite.  Returns (ok, witness, left, right).
    """
    left = G.distribution(S, {"q": W.maj})
    right = G.distribution(T, {"q": W.inv})
    return _poly_result(left, right, label)


# ---------------------------------------------------------------------------
# the fundamental bijection


@_register(
    "foata-worked-example",
    "seven-stage construction of the image of 2121312, with factorizations",
    quick={},
    full={},
)
def _chk_worked_example():
    expected = [
        ("2", ("2",)),
        ("21", ("2", "1")),
        ("212", ("2", "12")),
        ("2211", ("2", "2", "1", "1")),
        ("22113", ("2", "2", "113")),
        ("223111", ("2", "2", "31", "1", "1")),
        ("2213112", None),
    ]
    v = W.parse_word("2121312")
    trace = foata_trace(v)
    got = [
        (
            W.format_word(st),
            None if fs is None else tuple(W.format_word(f) for f in fs),
        )
        for st, fs in trace
    ]
    if got != expected:
        return False, f"trace was {got}", None, None
    if foata_inverse(W.parse_word("2213112")) != v:
        return False, "inverse of 2213112 is not 2121312", None, None
    return True, None, "2213112", "2213112"


@_register(
    "maj-inv-foata",
    "maj v = inv(image of v) on all small binary and ternary words",
    quick={"binary_len": 10, "ternary_len": 6},
    full={"binary_len": 14, "ternary_len": 9},
)
def _chk_maj_inv(binary_len, ternary_len):
    count = 0
    for alphabet, cap in (((1, 2), binary_len), ((1, 2, 3), ternary_len)):
        for n in range(cap + 1):
            for v in itertools.product(alphabet, repeat=n):
                w = foata(v)
                if W.maj(v) != W.inv(w):
                    return False, f"v={W.format_word(v)}", None, None
                if sorted(w) != sorted(v):
                    return False, f"letters not preserved at v={W.format_word(v)}", None, None
                count += 1
    return True, None, f"{count} words", f"{count} words"


@_register(
    "foata-roundtrip",
    "inverse(image(v)) = v on all small ternary words",
    quick={"ternary_len": 6},
    full={"ternary_len": 9},
)
def _chk_roundtrip(ternary_len):
    count = 0
    for n in range(ternary_len + 1):
        for v in itertools.product((1, 2, 3), repeat=n):
            if foata_inverse(foata(v)) != v:
                return False, f"v={W.format_word(v)}", None, None
            count += 1
    return True, None, f"{count} words", f"{count} words"


@_register(
    "foata-binary-forms",
    "closed form, rewriting rules, and the binary peeling inverse all agree "
    "with the staged construction on binary words",
    quick={"max_len": 10},
    full={"max_len": 14},
)
def _chk_binary_forms(max_len):
    for n in range(max_len + 1):
        for v in itertools.product((1, 2), repeat=n):
            w = foata(v)
            if foata_binary(v) != w:
                return False, f"closed form differs at v={W.format_word(v)}", None, None
            if foata_inverse_binary(w) != foata_inverse(w):
                return False, f"binary inverse differs at w={W.format_word(w)}", None, None
    for n in range(max(0, max_len - 2) + 1):
        for v in itertools.product((1, 2), repeat=n):
            w = foata(v)
            if foata(v + (2,)) != w + (2,):
                return False, f"rule w2 fails at {W.format_word(v)}", None, None
            if foata(v + (1, 1)) != (1,) + foata(v + (1,)):
                return False, f"rule w11 fails at {W.format_word(v)}", None, None
            if foata(v + (2, 1)) != (2,) + w + (1,):
                return False, f"rule w21 fails at {W.format_word(v)}", None, None
    return True, None, "all forms agree", "all forms agree"


@_register(
    "macmahon",
    "maj and inv are equidistributed over every rearrangement class of "
    "small multisets on {1,2,3} and over the symmetric groups",
    quick={"max_size": 6, "max_perm_n": 5},
    full={"max_size": 8, "max_perm_n": 7},
)
def _chk_macmahon(max_size, max_perm_n):
    for total in range(max_size + 1):
        for c1 in range(total + 1):
            for c2 in range(total - c1 + 1):
                c3 = total - c1 - c2
                base = (1,) * c1 + (2,) * c2 + (3,) * c3
                ok, witness, left, right = check_mahonian_pair(
                    W.permutations_of(base), W.permutations_of(base), W.format_word(base)
                )
                if not ok:
                    return ok, witness, left, right
    for n in range(max_perm_n + 1):
        ok, witness, left, right = check_mahonian_pair(
            W.symmetric_group(n), W.symmetric_group(n), f"permutations of 1..{n}"
        )
        if not ok:
            return ok, witness, left, right
    return True, None, "equal on every class", "equal on every class"


@_register(
    "reverse-complement",
    "reverse-complement is an involution preserving inv and des and "
    "sending maj to n*des - maj",
    quick={"max_len": 9},
    full={"max_len": 12},
)
def _chk_prime(max_len):
    for n in range(max_len + 1):
        for y in itertools.product((1, 2), repeat=n):
            yp = W.reverse_complement(y)
            if W.reverse_complement(yp) != y:
                return False, f"not an involution at {W.format_word(y)}", None, None
            if W.inv(yp) != W.inv(y) or W.des(yp) != W.des(y):
                return False, f"inv/des not preserved at {W.format_word(y)}", None, None
            if W.maj(yp) != n * W.des(y) - W.maj(y):
                return False, f"maj law fails at {W.format_word(y)}", None, None
    return True, None, "three identities hold", "three identities hold"


# ---------------------------------------------------------------------------
# the word/partition dictionary


@_register(
    "lattice-path",
    "the path partition has size inv(w), conjugates with reverse-complement, "
    "and round-trips with the boundary word",
    quick={"max_total": 9},
    full={"max_total": 12},
)
def _chk_lattice(max_total):
    for n in range(max_total + 1):
        for w in itertools.product((1, 2), repeat=n):
            lam = P.partition_of_word(w)
            if P.size(lam) != W.inv(w):
                return False, f"size differs at w={W.format_word(w)}", None, None
            if P.partition_of_word(W.reverse_complement(w)) != P.conjugate(lam):
                return False, f"conjugate law fails at w={W.format_word(w)}", None, None
            ones = [i for i, a in enumerate(w) if a == 1][::-1]
            twos = [i for i, a in enumerate(w) if a == 2]
            deepest = 0
            for i in range(min(len(ones), len(twos))):
                if twos[i] < ones[i]:
                    deepest = i + 1
            if P.durfee(lam) != deepest:
                return False, f"durfee law fails at w={W.format_word(w)}", None, None
    for lam in P.partitions_in_box(5, 5):
        if P.partition_of_boundary(P.boundary_word(lam)) != lam:
            return False, f"boundary round-trip fails at {P.format_partition(lam)}", None, None
    return True, None, "dictionary consistent", "dictionary consistent"


@_register(
    "maj-des-durfee",
    "maj v is the size and des v the Durfee side of the path partition of "
    "the image of v",
    quick={"max_len": 9},
    full={"max_len": 12},
)
def _chk_maj_des_durfee(max_len):
    for n in range(max_len + 1):
        for v in itertools.product((1, 2), repeat=n):
            lam = P.partition_of_word(foata(v))
            if W.maj(v) != P.size(lam) or W.des(v) != P.durfee(lam):
                return False, f"v={W.format_word(v)}", None, None
    return True, None, "both identities hold", "both identities hold"


@_register(
    "excess-pairing",
    "max prefix two-excess equals n minus the pair count on rearrangements "
    "of 1^n 2^n, and the ballot words are exactly those with excess <= 0",
    quick={"max_n": 4},
    full={"max_n": 6},
)
def _chk_excess_pairing(max_n):
    for n in range(max_n + 1):
        for w in W.permutations_of((1,) * n + (2,) * n):
            _, e, p = W.excess_profile(w)
            if e != n - p:
                return False, f"w={W.format_word(w)}: e={e}, pairs={p}", None, None
            if W.is_ballot(w) != (e <= 0):
                return False, f"ballot test fails at w={W.format_word(w)}", None, None
    return True, None, "identity holds", "identity holds"


@_register(
    "excess-rank-lemma",
    "prefix excesses of v match the successive ranks of the image's path "
    "partition, shifted by one",
    quick={"max_len": 9},
    full={"max_len": 12},
)
def _chk_excess_rank(max_len):
    for n in range(max_len + 1):
        for v in itertools.product((1, 2), repeat=n):
            lam = P.partition_of_word(foata(v))
            rho = P.ranks(lam)
            d = P.durfee(lam)
            evec, e, _ = W.excess_profile(v)
            if W.des(v) != d:
                return False, f"descents differ at v={W.format_word(v)}", None, None
            for i in range(d):
                if evec[i] != rho[d - i - 1] + 1:
                    return False, f"coordinate {i} fails at v={W.format_word(v)}", None, None
            if d >= 1:
                r = max(rho)
                if e < r + 1:
                    return False, f"inequality fails at v={W.format_word(v)}", None, None
                if evec[d] < e and e != r + 1:
                    return False, f"equality case fails at v={W.format_word(v)}", None, None
    return True, None, "lemma holds", "lemma holds"


# ---------------------------------------------------------------------------
# ballot words and the Catalan layer


@_register(
    "ballot-rank-image",
    "the image of the square ballot words is exactly the words whose path "
    "partition has all ranks negative",
    quick={"max_n": 4},
    full={"max_n": 6},
)
def _chk_ballot_image(max_n):
    for n in range(max_n + 1):
        img = {foata(v) for v in W.ballot_words(n, n)}
        rhs = {
            w
            for w in W.permutations_of((1,) * n + (2,) * n)
            if P.all_ranks(P.partition_of_word(w), lambda r: r < 0)
        }
        ok, witness, left, right = _set_result(img, rhs, W.format_word, f"n={n}")
        if not ok:
            return ok, witness, left, right
        ok, witness, left, right = check_mahonian_pair(
            W.ballot_words(n, n), img, f"n={n} pair with image"
        )
        if not ok:
            return ok, witness, left, right
    return True, None, "sets equal", "sets equal"


@_register(
    "ballot-preimage-conditions",
    "the image of v is a square ballot word iff the run exponents satisfy "
    "the dominance inequalities",
    quick={"max_n": 4},
    full={"max_n": 6},
)
def _chk_ballot_preimage(max_n):
    def condition(v, n):
        om, ta = W.ones_twos_compositions(v)
        if sum(om) != n or sum(ta) != n:
            return False
        d = len(om) - 1
        am = an = 0
        for i in range(1, d + 1):
            am += om[d - i + 1]
            an += ta[d - i + 1]
            if am < 2 * i or an < 2 * i - 1:
                return False
        return True

    for n in range(max_n + 1):
        for v in W.permutations_of((1,) * n + (2,) * n):
            if W.is_ballot(foata(v)) != condition(v, n):
                return False, f"v={W.format_word(v)}", None, None
    return True, None, "equivalence holds", "equivalence holds"


@_register(
    "ballot-rect-image",
    "rectangular version of the ballot image theorem (at least as many "
    "ones as twos)",
    quick={"max_total": 8},
    full={"max_total": 12},
)
def _chk_rect_image(max_total):
    for total in range(max_total + 1):
        for l in range(total // 2 + 1):
            k = total - l
            if k < l:
                continue
            img = {foata(v) for v in W.ballot_words(k, l)}
            rhs = {
                w
                for w in W.permutations_of((1,) * k + (2,) * l)
                if P.all_ranks(P.partition_of_word(w), lambda r: r < 0)
            }
            ok, witness, left, right = _set_result(img, rhs, W.format_word, f"k={k},l={l}")
            if not ok:
                return ok, witness, left, right
    return True, None, "sets equal", "sets equal"


@_register(
    "ballot-rect-preimage",
    "rectangular version of the ballot preimage conditions, with the "
    "excess k-l entering the two's inequality",
    quick={"max_total": 8},
    full={"max_total": 12},
)
def _chk_rect_preimage(max_total):
    def condition(v, k, l):
        om, ta = W.ones_twos_compositions(v)
        if sum(om) != k or sum(ta) != l:
            return False
        d = len(om) - 1
        am = an = 0
        for i in range(1, d + 1):
            am += om[d - i + 1]
            an += ta[d - i + 1]
            if am < 2 * i or an + (k - l) < 2 * i - 1:
                return False
        return True

    for total in range(max_total + 1):
        for l in range(total // 2 + 1):
            k = total - l
            if k < l:
                continue
            for v in W.permutations_of((1,) * k + (2,) * l):
                if W.is_ballot(foata(v)) != condition(v, k, l):
                    return False, f"k={k}, l={l}, v={W.format_word(v)}", None, None
    return True, None, "equivalence holds", "equivalence holds"


@_register(
    "rank-catalan-qt",
    "size and Durfee side over all-ranks-negative partitions in the square "
    "box generate the q,t-Catalan polynomial",
    quick={"max_n": 4},
    full={"max_n": 6},
)
def _chk_rank_catalan(max_n):
    for n in range(max_n + 1):
        lhs = G.distribution(
            P.rank_negative_in_box(n, n), {"q": P.size, "t": P.durfee}
        )
        ok, witness, left, right = _poly_result(lhs, G.catalan_qt(n), f"n={n}")
        if not ok:
            return ok, witness, left, right
        lhs_q = lhs.substitute({"t": ONE})
        rhs_q = G.q_binomial(2 * n, n).divide_exact(G.q_int(n + 1))
        ok, witness, left, right = _poly_result(lhs_q, rhs_q, f"n={n}, t=1")
        if not ok:
            return ok, witness, left, right
    return True, None, "polynomials equal", "polynomials equal"


@_register(
    "catalan-q1",
    "the t = 1 Catalan polynomial is the Gaussian binomial over [n+1]",
    quick={"max_n": 4},
    full={"max_n": 7},
)
def _chk_catalan_q1(max_n):
    for n in range(max_n + 1):
        lhs = G.catalan_qt(n).substitute({"t": ONE})
        rhs = G.q_binomial(2 * n, n).divide_exact(G.q_int(n + 1))
        ok, witness, left, right = _poly_result(lhs, rhs, f"n={n}")
        if not ok:
            return ok, witness, left, right
    return True, None, "equal", "equal"


@_register(
    "catalan-square-q",
    "the inv Catalan polynomial is the square-weighted sum of triangle "
    "polynomials",
    quick={"max_n": 4},
    full={"max_n": 7},
)
def _chk_catalan_square(max_n):
    for n in range(max_n + 1):
        rhs = ZERO
        for d in range(n // 2 + 1):
            rhs = rhs + monomial(1, q=d * d) * G.catalan_nd_q(n, d) ** 2
        ok, witness, left, right = _poly_result(G.catalan_q(n), rhs, f"n={n}")
        if not ok:
            return ok, witness, left, right
    return True, None, "equal", "equal"


@_register(
    "catalan-four-term",
    "the four-term q,t recursion with arguments inverted and twisted",
    quick={"max_n": 3},
    full={"max_n": 5},
)
def _chk_catalan_four_term(max_n):
    for n in range(1, max_n + 1):
        sub = {"q": Q**-1, "t": monomial(1, q=2 * n, t=1)}
        total = ZERO
        for d in range(n // 2 + 1):
            cm = G.catalan_nd_qt(n - 1, d - 1)
            dm = G.catalan_delta_qt(n, d)
            cs = cm.substitute(sub)
            ds = dm.substitute(sub)
            total = total + monomial(1, q=n, t=1) * cm * cs + cm * ds + dm * cs + dm * ds
        ok, witness, left, right = _poly_result(total, G.catalan_qt(n), f"n={n}")
        if not ok:
            return ok, witness, left, right
    return True, None, "identity holds", "identity holds"


@_register(
    "catalan-triangle-counts",
    "ballot-word counts match the classical triangle of differences of "
    "binomials, and their squares sum to the Catalan numbers",
    quick={"max_n": 7},
    full={"max_n": 10},
)
def _chk_triangle(max_n):
    for n in range(max_n + 1):
        total = 0
        for d in range(n // 2 + 1):
            cnt = sum(1 for _ in W.ballot_words(n - d, d))
            oracle = math.comb(n, d) - (math.comb(n, d - 1) if d else 0)
            if cnt != oracle:
                return False, f"C({n},{d}) is {cnt}, oracle {oracle}", None, None
            total += cnt * cnt
        catalan = math.comb(2 * n, n) // (n + 1)
        if total != catalan:
            return False, f"n={n}: sum of squares {total} != {catalan}", None, None
    return True, None, "counts match", "counts match"


@_register(
    "composition-maps",
    "the one's/two's composition encodings are bijections onto the ballot "
    "triangle, and their product composed with the inverse fundamental "
    "bijection is the half split",
    quick={"max_n_comp": 5, "max_n_beta": 4},
    full={"max_n_comp": 8, "max_n_beta": 6},
)
def _chk_compositions(max_n_comp, max_n_beta):
    for n in range(max_n_comp + 1):
        for d in range(n // 2 + 1):
            target = set(W.ballot_words(n - d, d))
            os = list(B.ones_compositions(n, d))
            ts = list(B.twos_compositions(n, d))
            o_img = {B.ones_composition_word(c) for c in os}
            t_img = {B.twos_composition_word(c) for c in ts}
            if len(o_img) != len(os) or o_img != target:
                return False, f"one's encoding not bijective at n={n}, d={d}", None, None
            if len(t_img) != len(ts) or t_img != target:
                return False, f"two's encoding not bijective at n={n}, d={d}", None, None
    for n in range(max_n_beta + 1):
        pairs_by_d: dict[int, set] = {}
        seen = set()
        for v in W.permutations_of((1,) * n + (2,) * n):
            if not W.is_ballot(foata(v)):
                continue
            om, ta = W.ones_twos_compositions(v)
            d = len(om) - 1 if W.des(v) else 0
            if not (B.is_ones_composition(om) and B.is_twos_composition(ta)):
                return False, f"composition of v={W.format_word(v)} out of family", None, None
            key = (om, ta)
            if key in seen:
                return False, f"product map not injective at v={W.format_word(v)}", None, None
            seen.add(key)
            pairs_by_d.setdefault(W.des(v), set()).add(key)
        for d, got in pairs_by_d.items():
            want = {
                (o, t)
                for o in B.ones_compositions(n, d)
                for t in B.twos_compositions(n, d)
            }
            ok, witness, left, right = _set_result(got, want, str, f"n={n}, d={d}")
            if not ok:
                return ok, witness, left, right
        for w in W.ballot_words(n, n):
            v = foata_inverse(w)
            om, ta = W.ones_twos_compositions(v)
            composed = (B.ones_composition_word(om), B.twos_composition_word(ta))
            if composed != B.ballot_split(w):
                return False, f"composition differs from split at w={W.format_word(w)}", None, None
    return True, None, "all three statements hold", "all three statements hold"


@_register(
    "ballot-split",
    "the half split is injective into pairs of ballot words and adds d^2 "
    "inversions",
    quick={"max_n": 4},
    full={"max_n": 6},
)
def _chk_split(max_n):
    for n in range(max_n + 1):
        images = set()
        for w in W.ballot_words(n, n):
            x, y = B.ballot_split(w)
            d = sum(1 for a in x if a == 2)
            if not (W.is_ballot(x) and W.is_ballot(y)):
                return False, f"split of {W.format_word(w)} not ballot", None, None
            if sum(1 for a in y if a == 2) != d:
                return False, f"two-counts differ at {W.format_word(w)}", None, None
            if W.inv(w) != W.inv(x) + W.inv(y) + d * d:
                return False, f"inversion law fails at {W.format_word(w)}", None, None
            if (x, y) in images:
                return False, f"split not injective at {W.format_word(w)}", None, None
            images.add((x, y))
    return True, None, "split well behaved", "split well behaved"


@_register(
    "excess-maxrank-pair",
    "words with excess k and words whose path partition has maximum rank "
    "k-1 form a Mahonian pair",
    quick={"max_n": 4},
    full={"max_n": 6},
)
def _chk_excess_maxrank(max_n):
    for n in range(max_n + 1):
        for k in range(1, n + 1):
            ok, witness, left, right = check_mahonian_pair(
                W.excess_class(n, k), P.max_rank_class(n, k - 1), f"n={n}, k={k}"
            )
            if not ok:
                return ok, witness, left, right
    return True, None, "pairs equal", "pairs equal"


# ---------------------------------------------------------------------------
# Fibonacci families


@_register(
    "fibonacci-counts",
    "the three Fibonacci word families have Fibonacci cardinalities",
    quick={"max_n": 9},
    full={"max_n": 14},
)
def _chk_fib_counts(max_n):
    for n in range(max_n + 1):
        a = sum(1 for _ in W.fibonacci_words(n))
        b = sum(1 for _ in W.fibonacci_dual_words(n))
        c = sum(1 for _ in W.letter_sum_words(n))
        if a != G.fibonacci(n + 1):
            return False, f"no-11 count at n={n} is {a}", None, None
        if b != G.fibonacci(n + 1):
            return False, f"no-22 count at n={n} is {b}", None, None
        if c != G.fibonacci(n):
            return False, f"letter-sum count at n={n} is {c}", None, None
    return True, None, "counts match", "counts match"


@_register(
    "fib-poly-three-way",
    "recursion, enumeration, and the closed form agree for the maj/des "
    "polynomial of no-adjacent-ones words, also after t = 1",
    quick={"max_n": 7},
    full={"max_n": 12},
)
def _chk_fib_three_way(max_n):
    for n in range(max_n + 1):
        rec = G.fib_poly(n)
        enum = G.fib_poly_enumerated(n)
        closed = G.fib_poly_closed(n)
        if not (rec == enum == closed):
            return False, f"forms differ at n={n}", _clip(str(rec)), _clip(str(enum))
        t1 = rec.substitute({"t": ONE})
        rhs = ZERO
        for k in range(n // 2 + 2):
            rhs = rhs + monomial(1, q=k * (k - 1)) * G.q_binomial(n - k + 1, k)
        ok, witness, left, right = _poly_result(t1, rhs, f"n={n}, t=1")
        if not ok:
            return ok, witness, left, right
    return True, None, "all forms agree", "all forms agree"


@_register(
    "fib-image",
    "the image of no-adjacent-ones words with k ones is cut out by bounds "
    "on the first and last parts of the path partition",
    quick={"max_n": 8},
    full={"max_n": 12},
)
def _chk_fib_image(max_n):
    for n in range(max_n + 1):
        for k in range(n + 1):
            img = {foata(v) for v in W.fibonacci_words(n, ones=k)}
            rhs = set()
            for w in W.permutations_of((1,) * k + (2,) * (n - k)):
                lam = P.partition_of_word(w)
                if lam and lam[0] > n - k:
                    continue
                if k >= 2 and (len(lam) != k or lam[k - 1] < k - 1):
                    continue
                rhs.add(w)
            ok, witness, left, right = _set_result(img, rhs, W.format_word, f"n={n}, k={k}")
            if not ok:
                return ok, witness, left, right
    return True, None, "sets equal", "sets equal"


def _no_adjacent(w, letter):
    return all(a != letter or b != letter for a, b in zip(w, w[1:]))


@_register(
    "fib-preimage-runs",
    "preimages of no-adjacent-ones words are cut out by run-length "
    "conditions",
    quick={"max_n": 8},
    full={"max_n": 12},
)
def _chk_fib_preimage(max_n):
    def run_conditions(v):
        for value, length, is_pre, is_suf in W.run_decomposition(v):
            if value == 1:
                if is_pre:
                    if length > 1:
                        return False
                elif length > 2:
                    return False
            elif not is_pre and not is_suf and length < 2:
                return False
        return True

    for n in range(max_n + 1):
        for v in itertools.product((1, 2), repeat=n):
            if _no_adjacent(foata(v), 1) != run_conditions(v):
                return False, f"v={W.format_word(v)}", None, None
    return True, None, "equivalence holds", "equivalence holds"


@_register(
    "fib-dual-mirror",
    "mirrored statements for no-adjacent-twos words: image characterized "
    "by a square-topped path partition and at most one trailing two, "
    "preimage by run conditions, polynomial by a Laurent twist",
    quick={"max_n": 8},
    full={"max_n": 12},
    established=False,
)
def _chk_fib_dual(max_n):
    def image_member(w):
        lam = P.partition_of_word(w)
        trailing = 0
        for a in reversed(w):
            if a != 2:
                break
            trailing += 1
        return trailing <= 1 and (not lam or lam[0] == P.durfee(lam))

    def run_conditions(v):
        runs = W.run_decomposition(v)
        last_one = max((i for i, r in enumerate(runs) if r[0] == 1), default=None)
        for i, (value, length, is_pre, is_suf) in enumerate(runs):
            if value == 2:
                if is_pre or is_suf:
                    if length > 1:
                        return False
                elif length > 2:
                    return False
            elif not is_pre and i != last_one and length < 2:
                return False
        return True

    for n in range(max_n + 1):
        for k in range(n + 1):
            img = {foata(v) for v in W.fibonacci_dual_words(n, ones=k)}
            rhs = {
                w
                for w in W.permutations_of((1,) * k + (2,) * (n - k))
                if image_member(w)
            }
            ok, witness, left, right = _set_result(img, rhs, W.format_word, f"n={n}, k={k}")
            if not ok:
                return ok, witness, left, right
        for v in itertools.product((1, 2), repeat=n):
            if _no_adjacent(foata(v), 2) != run_conditions(v):
                return False, f"run conditions fail at v={W.format_word(v)}", None, None
        lhs = G.distribution(W.fibonacci_dual_words(n), {"q": W.maj, "t": W.des})
        rhs_poly = G.fib_poly(n).substitute({"q": Q**-1, "t": monomial(1, q=n, t=1)})
        ok, witness, left, right = _poly_result(lhs, rhs_poly, f"n={n}")
        if not ok:
            return ok, witness, left, right
    return True, None, "mirrors hold", "mirrors hold"


@_register(
    "letter-sum-mahonian",
    "words with fixed letter sum are preserved by the fundamental "
    "bijection, so they pair with themselves",
    quick={"max_total": 9},
    full={"max_total": 14},
)
def _chk_letter_sum(max_total):
    for n in range(max_total + 1):
        family = list(W.letter_sum_words(n))
        if {foata(v) for v in family} != set(family):
            return False, f"family not preserved at n={n}", None, None
        ok, witness, left, right = check_mahonian_pair(family, family, f"n={n}")
        if not ok:
            return ok, witness, left, right
    return True, None, "pairs equal", "pairs equal"


@_register(
    "carlitz-series",
    "low coefficients of the t = 1 polynomials stabilize to the "
    "Rogers-Ramanujan-type series sum of q^(k^2-k)/(q)_k",
    quick={"max_coeff": 6},
    full={"max_coeff": 15},
)
def _chk_carlitz(max_coeff):
    series = G.carlitz_series(max_coeff)
    for n in (2 * max_coeff, 2 * max_coeff + 1):
        f = G.fib_poly(n).substitute({"t": ONE}).truncate("q", max_coeff)
        ok, witness, left, right = _poly_result(f, series, f"n={n}")
        if not ok:
            return ok, witness, left, right
    return True, None, "coefficients stable", "coefficients stable"


# ---------------------------------------------------------------------------
# infinite families, rank sieves, and the chain conjugacy


@_register(
    "infinite-pair-images",
    "preimages of the boundary words of all partitions, of the "
    "all-ranks-negative ones, and of the equal-first-parts ones are the "
    "21-suffix, ballot 21-suffix, and 121-suffix families",
    quick={"max_len": 9},
    full={"max_len": 14},
)
def _chk_infinite_images(max_len):
    for n in range(max_len + 1):
        for v in itertools.product((1, 2), repeat=n):
            w = foata(v)
            lam = P.partition_of_boundary(w) if P.is_boundary_word(w) else None
            in_w21 = v == () or v[-2:] == (2, 1)
            if in_w21 != (lam is not None):
                return False, f"21-suffix case fails at v={W.format_word(v)}", None, None
            in_b21 = in_w21 and W.is_ballot(v)
            rhs_b = lam is not None and (P.max_rank(lam) is None or P.max_rank(lam) <= -1)
            if in_b21 != rhs_b:
                return False, f"ballot case fails at v={W.format_word(v)}", None, None
            in_w121 = v == () or v[-3:] == (1, 2, 1)
            rhs_d = lam is not None and P.delta(lam) == 0
            if in_w121 != rhs_d:
                return False, f"121-suffix case fails at v={W.format_word(v)}", None, None
    return True, None, "three preimages match", "three preimages match"


@_register(
    "infinite-pair-wslat",
    "the triple statistic maj/des/excess on each suffix family matches "
    "size/Durfee/(max rank + 1) on the partition side, as Laurent series "
    "in z truncated by boundary length",
    quick={"max_len": 9},
    full={"max_len": 14},
)
def _chk_wslat(max_len):
    def word_side(stream):
        return G.distribution(
            stream,
            {"q": W.maj, "t": W.des, "z": lambda v: W.excess_profile(v)[1] if v else 0},
        )

    def part_side(pred):
        acc = ZERO
        for lam in P.partitions_by_boundary_length(max_len):
            if not pred(lam):
                continue
            if lam == ():
                acc = acc + ONE
            else:
                acc = acc + monomial(1, q=P.size(lam), t=P.durfee(lam), z=P.max_rank(lam) + 1)
        return acc

    cases = [
        ("all partitions", W.suffix_words((2, 1), max_len), lambda lam: True),
        (
            "all ranks negative",
            W.ballot_suffix_words((2, 1), max_len),
            lambda lam: lam == () or P.max_rank(lam) <= -1,
        ),
        ("equal first parts", W.suffix_words((1, 2, 1), max_len), lambda lam: P.delta(lam) == 0),
    ]
    for label, stream, pred in cases:
        ok, witness, left, right = _poly_result(word_side(stream), part_side(pred), label)
        if not ok:
            return ok, witness, left, right
    return True, None, "all three identities hold", "all three identities hold"


@_register(
    "suffix-family-genfun",
    "maj over the ballot 21-suffix words and over the 121-suffix words "
    "both expand the no-ones partition product",
    quick={"max_len": 10},
    full={"max_len": 15},
)
def _chk_suffix_genfun(max_len):
    degree = max_len - 1
    product = G.truncated_product(range(2, degree + 1), degree)
    b21 = G.distribution(W.ballot_suffix_words((2, 1), max_len), {"q": W.maj}).truncate(
        "q", degree
    )
    w121 = G.distribution(W.suffix_words((1, 2, 1), max_len), {"q": W.maj}).truncate(
        "q", degree
    )
    ok, witness, left, right = _poly_result(b21, product, "ballot 21-suffix side")
    if not ok:
        return ok, witness, left, right
    return _poly_result(w121, product, "121-suffix side")


@_register(
    "rank-positive-sieve",
    "partitions with all ranks positive are equinumerous with partitions "
    "with no part one, matching the product expansion; conjugation swaps "
    "the rank sign",
    quick={"degree": 12},
    full={"degree": 20},
)
def _chk_rank_positive(degree):
    product = G.truncated_product(range(2, degree + 1), degree)
    for n in range(degree + 1):
        a = sum(1 for p in P.partitions_of(n) if P.all_ranks(p, lambda r: r >= 1))
        b = sum(1 for p in P.partitions_of(n) if 1 not in p)
        c = product.coefficient(q=n)
        if not (a == b == c):
            return False, f"n={n}: counts {a}, {b}, {c}", None, None
        pos = {p for p in P.partitions_of(n) if P.all_ranks(p, lambda r: r >= 1)}
        neg = {p for p in P.partitions_of(n) if P.all_ranks(p, lambda r: r <= -1)}
        if {P.conjugate(p) for p in pos} != neg:
            return False, f"conjugation mismatch at n={n}", None, None
    return True, None, "sieve holds", "sieve holds"


@_register(
    "rank-interval-sieve",
    "partitions with ranks in [-r+2, M-r-2] are equinumerous with "
    "partitions with no part divisible by or congruent to +-r mod M; "
    "specializing M = n+2, r = 1 recovers the no-part-one sieve",
    quick={"degree": 12, "cases": ((5, 1), (5, 2))},
    full={"degree": 20, "cases": ((5, 1), (5, 2), (7, 1), (7, 2), (7, 3))},
)
def _chk_rank_interval(degree, cases):
    for modulus, r in cases:
        banned = {0, r % modulus, (-r) % modulus}
        allowed = [i for i in range(1, degree + 1) if i % modulus not in banned]
        product = G.truncated_product(allowed, degree)
        for n in range(degree + 1):
            a = sum(
                1
                for p in P.partitions_of(n)
                if P.all_ranks(p, lambda x: -r + 2 <= x <= modulus - r - 2)
            )
            b = product.coefficient(q=n)
            if a != b:
                return False, f"M={modulus}, r={r}, n={n}: {a} vs {b}", None, None
    for n in range(degree + 1):
        a = sum(
            1 for p in P.partitions_of(n) if P.all_ranks(p, lambda x: 1 <= x <= n - 1)
        )
        b = sum(1 for p in P.partitions_of(n) if 1 not in p)
        if a != b:
            return False, f"reduction case fails at n={n}", None, None
    return True, None, "sieve holds", "sieve holds"


@_register(
    "csv-worked-example",
    "the five-stage rank-reduction chain of (8,8,6,5,2,1), including rank "
    "vectors, boundary words, preimages, and excess vectors",
    quick={},
    full={},
)
def _chk_csv_example():
    expected = [
        ((8, 8, 6, 5, 2, 1), (2, 3, 2, 1), 3, 2, "21212221212211", "22122112221121", (2, 3, 4, 3, 2)),
        ((8, 7, 6, 5, 2, 1, 1), (1, 2, 2, 1), 2, 3, "211212221212121", "221221122111221", (2, 3, 3, 2, 1)),
        ((8, 6, 5, 5, 2, 2, 1, 1), (0, 0, 1, 1), 1, 4, "2112112221121221", "2212111221112221", (2, 2, 1, 1, 0)),
        ((8, 5, 4, 4, 3, 2, 2, 1, 1), (-1, -2, -1, 0), 0, 4, "21121121211212221", "21121112211122221", (1, 0, -1, 0, -1)),
        ((8, 4, 3, 3, 3, 3, 2, 2, 1, 1), (-2, -4, -3), -2, 1, "211211211112122221", "111211122111222221", (-2, -3, -1, -2)),
    ]
    trace = B.csv_trace((8, 8, 6, 5, 2, 1))
    if len(trace) != len(expected):
        return False, f"chain has {len(trace)} stages", None, None
    for k, (lam, rho, r, i, word, pre, eps) in enumerate(expected):
        st = trace[k]
        got = (
            st["partition"],
            st["rho"],
            st["r"],
            st["i"],
            W.format_word(st["word"]),
            W.format_word(st["preimage"]),
            st["excesses"],
        )
        if got != (lam, rho, r, i, word, pre, eps):
            return False, f"stage {k + 1} is {got}", None, None
        if P.size(st["partition"]) != 30:
            return False, f"size not preserved at stage {k + 1}", None, None
    return True, None, "chain matches", "chain matches"


@_register(
    "csv-bijection",
    "the rank reduction maps equal-first-parts partitions of each size "
    "bijectively onto the all-ranks-negative ones, using max rank + 1 "
    "steps that each drop the maximum rank",
    quick={"max_size": 12},
    full={"max_size": 22, "count_size": 25},
    # count_size only bounds the counting comparison
)
def _chk_csv_bijection(max_size, count_size=None):
    count_size = count_size or max_size
    for n in range(count_size + 1):
        d0 = sum(1 for p in P.partitions_of(n) if P.delta(p) == 0)
        rn = sum(
            1
            for p in P.partitions_of(n)
            if P.max_rank(p) is None or P.max_rank(p) <= -1
        )
        if d0 != rn:
            return False, f"counts differ at n={n}: {d0} vs {rn}", None, None
    for n in range(max_size + 1):
        image = set()
        for p in P.partitions_of(n):
            if P.delta(p) != 0:
                continue
            r0 = P.max_rank(p)
            steps = 0
            q = p
            while P.max_rank(q) is not None and P.max_rank(q) >= 0:
                r_before = P.max_rank(q)
                q = B.csv_step(q)
                steps += 1
                if P.size(q) != n:
                    return False, f"size changes at {P.format_partition(p)}", None, None
                r_after = P.max_rank(q)
                if r_after is not None and r_after > r_before - 1:
                    return False, f"rank fails to drop at {P.format_partition(p)}", None, None
                if r_before > 0 and (r_after is None or r_after != r_before - 1):
                    return False, f"rank drop not tight at {P.format_partition(p)}", None, None
            if r0 is not None and r0 >= 0 and steps != r0 + 1:
                return False, f"{P.format_partition(p)} took {steps} steps, rank {r0}", None, None
            if q != B.csv_map(p):
                return False, f"map disagrees with loop at {P.format_partition(p)}", None, None
            if q in image:
                return False, f"not injective at {P.format_partition(p)}", None, None
            image.add(q)
        target = {
            p
            for p in P.partitions_of(n)
            if P.max_rank(p) is None or P.max_rank(p) <= -1
        }
        ok, witness, left, right = _set_result(image, target, P.format_partition, f"n={n}")
        if not ok:
            return ok, witness, left, right
    return True, None, "bijection verified", "bijection verified"


@_register(
    "csv-gk-conjugacy",
    "the rank reduction equals the chain map conjugated by the fundamental "
    "bijection through boundary words",
    quick={"max_size": 12},
    full={"max_size": 22},
)
def _chk_conjugacy(max_size):
    for n in range(max_size + 1):
        for p in P.partitions_of(n):
            if P.delta(p) != 0:
                continue
            v = foata_inverse(P.boundary_word(p))
            if not (v == () or v[-3:] == (1, 2, 1)):
                return False, f"preimage of {P.format_partition(p)} not in domain", None, None
            if B.csv_map(p) != B.csv_via_words(p):
                return False, f"maps differ at {P.format_partition(p)}", None, None
    return True, None, "conjugacy holds", "conjugacy holds"


@_register(
    "gk-bijection",
    "the chain map is a bijection between 121-suffix words and ballot "
    "21-suffix words, and the single flips preserve the pairing",
    quick={"max_len": 10},
    full={"max_len": 14},
)
def _chk_gk(max_len):
    for v in W.suffix_words((1, 2, 1), max_len):
        w = B.gk_map(v)
        if w != () and not (W.is_ballot(w) and w[-2:] == (2, 1)):
            return False, f"image of {W.format_word(v)} out of codomain", None, None
        if B.gk_inverse(w) != v:
            return False, f"round trip fails at v={W.format_word(v)}", None, None
    for w in W.ballot_suffix_words((2, 1), max_len):
        if B.gk_map(B.gk_inverse(w)) != w:
            return False, f"round trip fails at w={W.format_word(w)}", None, None
    for n in range(min(max_len, 10) + 1):
        for x in itertools.product((1, 2), repeat=n):
            pairs, _, un2 = W.match_pairs(x)
            if un2 and W.match_pairs(B.flip_rightmost_unpaired_two(x))[0] != pairs:
                return False, f"flip changes pairing at {W.format_word(x)}", None, None
    return True, None, "bijection verified", "bijection verified"


@_register(
    "chain-decomposition",
    "the flip chains partition all binary words of each length into "
    "symmetric chains",
    quick={"max_n": 6},
    full={"max_n": 8},
)
def _chk_chains(max_n):
    for n in range(max_n + 1):
        seen: dict = {}
        for chain in B.chains(n):
            start, end = chain[0], chain[-1]
            s2 = sum(1 for a in start if a == 2)
            e2 = sum(1 for a in end if a == 2)
            if s2 + e2 != n:
                return False, f"chain at {W.format_word(start)} not symmetric", None, None
            for k, w in enumerate(chain):
                if w in seen:
                    return False, f"{W.format_word(w)} on two chains", None, None
                seen[w] = True
                if sum(1 for a in w if a == 2) != s2 - k:
                    return False, f"chain at {W.format_word(start)} skips a level", None, None
        if len(seen) != 2**n:
            return False, f"chains cover {len(seen)} of {2 ** n} words at n={n}", None, None
    return True, None, "decomposition verified", "decomposition verified"


# ---------------------------------------------------------------------------
# Lucas analogues and pattern classes


@_register(
    "lucanomial-positive",
    "Lucas-sequence binomials are polynomials with nonnegative "
    "coefficients and specialize to fibonomials and Gaussian binomials",
    quick={"max_n": 6},
    full={"max_n": 8},
)
def _chk_lucanomial(max_n):
    fib = [0, 1]
    for _ in range(2 * max_n):
        fib.append(fib[-1] + fib[-2])
    for n in range(max_n + 1):
        for k in range(n + 1):
            poly = G.lucanomial(n, k)
            if any(c < 0 for c in poly.terms.values()):
                return False, f"negative coefficient in ({n},{k})", None, None
            ones = poly.substitute({"s": ONE, "t": ONE})
            num = den = 1
            for i in range(1, k + 1):
                num *= fib[n - i + 1]
                den *= fib[i]
            if ones != Laurent.const(num // den):
                return False, f"fibonomial specialization fails at ({n},{k})", None, None
    for n, k in ((4, 2), (5, 2)):
        got = G.lucanomial(n, k).substitute({"s": ONE + Q, "t": -Q})
        ok, witness, left, right = _poly_result(got, G.q_binomial(n, k), f"({n},{k})")
        if not ok:
            return ok, witness, left, right
    return True, None, "positivity and specializations hold", "positivity and specializations hold"


@_register(
    "st-catalan",
    "the Lucas Catalan analogue divides exactly, has nonnegative "
    "coefficients, and satisfies the two-binomial identity",
    quick={"max_n": 5},
    full={"max_n": 8},
)
def _chk_st_catalan(max_n):
    for n in range(1, max_n + 1):
        c = G.st_catalan(n)
        if any(coef < 0 for coef in c.terms.values()):
            return False, f"negative coefficient at n={n}", None, None
        rhs = G.lucanomial(2 * n - 1, n - 1) + monomial(1, t=1) * G.lucanomial(2 * n - 1, n - 2)
        ok, witness, left, right = _poly_result(c, rhs, f"n={n}")
        if not ok:
            return ok, witness, left, right
    return True, None, "identity holds", "identity holds"


_PATTERN_MAJ_SETS = (
    ((1, 3, 2), (2, 1, 3)),
    ((1, 3, 2), (3, 1, 2)),
    ((2, 1, 3), (2, 3, 1)),
    ((2, 3, 1), (3, 1, 2)),
)
_PATTERN_INV_SETS = (
    ((1, 3, 2), (2, 3, 1)),
    ((1, 3, 2), (3, 1, 2)),
    ((2, 1, 3), (2, 3, 1)),
    ((2, 1, 3), (3, 1, 2)),
)


@_register(
    "pattern-pairs",
    "every avoidance class from the maj list pairs with every class from "
    "the inv list",
    quick={"max_n": 5},
    full={"max_n": 7},
)
def _chk_pattern_pairs(max_n):
    def fmt(pats):
        return "{" + ",".join(W.format_word(p) for p in pats) + "}"

    for n in range(max_n + 1):
        majd = [
            (pats, G.distribution(W.pattern_class(n, pats), {"q": W.maj}))
            for pats in _PATTERN_MAJ_SETS
        ]
        invd = [
            (pats, G.distribution(W.pattern_class(n, pats), {"q": W.inv}))
            for pats in _PATTERN_INV_SETS
        ]
        for mp, a in majd:
            for ip, b in invd:
                ok, witness, left, right = _poly_result(
                    a, b, f"n={n}, maj over Av{fmt(mp)}, inv over Av{fmt(ip)}"
                )
                if not ok:
                    return ok, witness, left, right
    return True, None, "all sixteen pairs equal", "all sixteen pairs equal"


@_register(
    "distribution-transport",
    "maj over an arbitrary finite word set equals inv over its image "
    "(seeded random sets)",
    quick={"max_len": 10, "samples": 40},
    full={"max_len": 12, "samples": 200},
)
def _chk_transport(max_len, samples):
    rng = random.Random(271828)
    for trial in range(20):
        family = set()
        for _ in range(samples):
            n = rng.randint(0, max_len)
            family.add(tuple(rng.randint(1, 3) for _ in range(n)))
        image = {foata(v) for v in family}
        if len(image) != len(family):
            return False, f"image collapsed on trial {trial}", None, None
        ok, witness, left, right = check_mahonian_pair(family, image, f"trial {trial}")
        if not ok:
            return ok, witness, left, right
    return True, None, "transport holds", "transport holds"


# ---------------------------------------------------------------------------
# runners


def run_check(name: str, bounds: dict | None = None, profile: str = "quick") -> PairReport:
    """Run one registered check; unknown bound keys raise KeyError."""
    if name not in CHECKS:
        raise KeyError(name)
    defn = CHECKS[name]
    defaults = defn.quick if profile == "quick" else defn.full
    merged = dict(defaults)
    for key, value in (bounds or {}).items():
        if key not in defn.full and key not in defn.quick and key not in _OPTIONAL_BOUNDS.get(name, ()):
            raise KeyError(f"check {name} has no bound {key!r}")
        merged[key] = value
    start = time.perf_counter()
    ok, witness, left, right = defn.fn(**merged)
    elapsed = (time.perf_counter() - start) * 1000.0
    return PairReport(
        check=name,
        params=merged,
        verdict="pass" if ok else "fail",
        witness=witness,
        left=left,
        right=right,
        millis=elapsed,
        established=defn.established,
    )


_OPTIONAL_BOUNDS = {"csv-bijection": ("count_size",)}


def run_suite(profile: str = "quick", names: list[str] | None = None, threads: int | None = None) -> list[PairReport]:
    """Run the selected checks (all by default) at the profile's bounds.

    Checks are independent and internally pure, so they may run on a
    thread pool (MAHONIAN_THREADS); report order follows the registry
    regardless.
    """
    selected = list(CHECKS) if names is None else list(names)
    for name in selected:
        if name not in CHECKS:
            raise KeyError(name)
    if threads is None:
        threads = int(os.environ.get("MAHONIAN_THREADS", "1"))
    if threads > 1 and len(selected) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(lambda n: run_check(n, profile=profile), selected))
    return [run_check(name, profile=profile) for name in selected]
