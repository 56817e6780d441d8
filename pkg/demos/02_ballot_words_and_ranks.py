"""Ballot words, lattice-path partitions, and the q,t-Catalan layer.

Run with: python3 demos/02_ballot_words_and_ranks.py
"""

from mahonian import (
    ballot_words,
    catalan_qt,
    distribution,
    durfee,
    ferrers,
    foata,
    format_word,
    inv,
    maj,
    parse_word,
    partition_of_word,
    q_binomial,
    q_int,
    ranks,
)
from mahonian.laurent import ONE
from mahonian.partitions import rank_negative_in_box, size

# A binary word traces a lattice path: 1 = north, 2 = east.  The cells
# northwest of the path form a partition whose size is inv(w).
w = parse_word("112211212")
lam = partition_of_word(w)
print("word:", format_word(w))
print("partition:", lam, " size:", size(lam), "= inv:", inv(w))
print(ferrers(lam))
print("successive ranks:", ranks(lam))

# Ballot words (every prefix has at least as many ones as twos) are
# counted by the Catalan numbers.
print("\nballot words with 3 ones and 3 twos:")
for b in ballot_words(3, 3):
    print(" ", format_word(b), " maj:", maj(b))

# Their maj/des polynomial matches the sum of q^size t^durfee over
# partitions in the square box with every rank negative: that is what
# the fundamental bijection does to ballot words.
n = 4
lhs = catalan_qt(n)
rhs = distribution(rank_negative_in_box(n, n), {"q": size, "t": durfee})
print(f"\nq,t-Catalan polynomial, n={n}:")
print(" ", lhs)
print("rank-negative partitions in the box give:")
print(" ", rhs)
print("equal:", lhs == rhs)

# Setting t = 1 recovers the classical q-analogue.
print("\nc_n(q,1) =", lhs.substitute({"t": ONE}))
print("[2n n]/[n+1] =", q_binomial(2 * n, n).divide_exact(q_int(n + 1)))

# One ballot word through the bijection:
b = parse_word("112212")
print("\nimage of", format_word(b), "is", format_word(foata(b)))
print("its partition:", partition_of_word(foata(b)), "with ranks", ranks(partition_of_word(foata(b))))
