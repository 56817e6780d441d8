"""A tour of word statistics and the fundamental bijection.

Run with: python3 demos/01_words_and_statistics.py
"""

from mahonian import (
    descent_set,
    des,
    exc,
    foata,
    foata_inverse,
    inv,
    maj,
    parse_word,
    format_word,
    permutations_of,
    distribution,
)
from mahonian.foata import render_trace

# Statistics live on plain tuples of positive integers.
w = parse_word("2121312")
print("word:", format_word(w))
print("descent set:", sorted(descent_set(w)))
print("maj:", maj(w), " des:", des(w), " inv:", inv(w), " exc:", exc(w))

# The fundamental bijection rearranges w so that the major index becomes
# the inversion number.
image = foata(w)
print("\nimage:", format_word(image))
print("inv(image):", inv(image), "= maj(word):", maj(w))
print("round trip:", format_word(foata_inverse(image)))

# The construction goes letter by letter; factors are cut, rotated, and
# the next letter appended.
print("\nstage table:")
print(render_trace(w))

# maj and inv are equidistributed over every rearrangement class; the
# bijection witnesses it one word at a time.
base = parse_word("1122")
lhs = distribution(permutations_of(base), {"q": maj})
rhs = distribution(permutations_of(base), {"q": inv})
print("\nmaj distribution over rearrangements of 1122:", lhs)
print("inv distribution over the same class:        ", rhs)
print("equal:", lhs == rhs)
