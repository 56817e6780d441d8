"""The rank-reduction map on partitions and the symmetric-chain map on
words, conjugate to each other under the fundamental bijection.

Run with: python3 demos/04_rank_reduction_and_chains.py
"""

from mahonian import (
    boundary_word,
    chains,
    csv_map,
    csv_trace,
    delta,
    ferrers,
    foata,
    foata_inverse,
    format_partition,
    format_word,
    gk_map,
    partition_of_boundary,
    partitions_of,
)
from mahonian.bijections import csv_via_words

# Start from a partition whose first two parts agree and repeatedly
# remove a column, add a row, and lengthen the top row until every
# successive rank is negative.
lam = (8, 8, 6, 5, 2, 1)
print("rank-reduction chain from", format_partition(lam))
for stage in csv_trace(lam):
    print()
    print(ferrers(stage["partition"]))
    print("rho =", list(stage["rho"]), " r =", stage["r"], " i =", stage["i"])
    print("boundary word:", format_word(stage["word"]))
    print("preimage:     ", format_word(stage["preimage"]))

# The same map, walked through words: take the boundary word, pull it
# back through the fundamental bijection, flip unpaired twos (the
# symmetric-chain step), and push forward again.
v = foata_inverse(boundary_word(lam))
print("\npreimage ends in 121:", format_word(v))
w = gk_map(v)
print("chain map image:", format_word(w))
print("as a partition:", format_partition(partition_of_boundary(foata(w))))
print("direct reduction:", format_partition(csv_map(lam)))
print("agree:", csv_map(lam) == csv_via_words(lam))

# Exhaustive agreement on every small partition with equal first parts:
count = 0
for n in range(15):
    for p in partitions_of(n):
        if delta(p) == 0:
            assert csv_map(p) == csv_via_words(p)
            count += 1
print(f"\nconjugacy checked on {count} partitions of size <= 14")

# The flips decompose all binary words of a given length into symmetric
# chains.
print("\nchains on length-4 words:")
for chain in chains(4):
    print("  " + " -> ".join(format_word(w) for w in chain))
