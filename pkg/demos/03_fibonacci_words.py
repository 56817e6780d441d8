"""Word families counted by Fibonacci numbers and their polynomials.

Run with: python3 demos/03_fibonacci_words.py
"""

from mahonian import (
    fib_poly,
    fibonacci,
    fibonacci_words,
    format_word,
    letter_sum_words,
    distribution,
    maj,
    inv,
)
from mahonian.genfun import carlitz_series, fib_poly_closed, fib_poly_enumerated
from mahonian.laurent import ONE

# Three families: no adjacent ones, no adjacent twos, fixed letter sum.
n = 5
print(f"length-{n} words with no adjacent ones ({fibonacci(n + 1)} of them):")
print(" ", " ".join(format_word(w) for w in fibonacci_words(n)))
print(f"words with letter sum {n} ({fibonacci(n)} of them):")
print(" ", " ".join(format_word(w) for w in letter_sum_words(n)))

# The maj/des polynomial of the no-adjacent-ones family satisfies a
# Fibonacci-style recursion and has a closed form in Gaussian binomials;
# all three computations agree.
for m in range(7):
    assert fib_poly(m) == fib_poly_enumerated(m) == fib_poly_closed(m)
print("\nrecursion = enumeration = closed form, n <= 6")
print("f_5(q,t) =", fib_poly(5))

# Letter-sum words are preserved by the fundamental bijection, giving a
# family that is a Mahonian pair with itself.
family = list(letter_sum_words(6))
print("\nletter sum 6: maj distribution", distribution(family, {"q": maj}))
print("              inv distribution", distribution(family, {"q": inv}))

# As n grows the low coefficients of f_n(q,1) stabilize to a
# Rogers-Ramanujan-type series.
print("\nstable series through q^8: ", carlitz_series(8))
print("f_16(q,1) through q^8:      ", fib_poly(16).substitute({"t": ONE}).truncate("q", 8))
