"""Words and cyclic words: reduction, conjugacy normal forms, parsing.

Run with `python3 demos/01_words.py`.
"""

from freegroups import (
    Alphabet,
    CyclicWord,
    cyclic_reduce,
    letter_support,
    parse_cyclic,
    parse_word,
)

alphabet = Alphabet.of_rank(2)

# Case encodes inversion: "a" and "A" are a generator and its inverse.
# Parsing reduces on the fly, so inverse pairs vanish immediately.
w = parse_word("abBA", alphabet)
print("abBA reduces to:", w)  # "1" denotes the trivial word

w = parse_word("baab", alphabet)
print("baab stays:", w, "(length %d)" % len(w))

# Word arithmetic: * concatenates (and reduces), ~ inverts.
u = parse_word("ab", alphabet)
v = parse_word("Ba", alphabet)
print("ab * Ba =", u * v)
print("~(ab)  =", ~u)
print("u * ~u =", u * ~u)

# Conjugation is a common idiom: x w x^-1.
x = parse_word("b", alphabet)
print("b (ab) B =", x * u * ~x)

# Cyclic words are conjugacy classes.  cyclic_reduce splits g as
# x c x^-1 with c cyclically reduced; the class of c comes back in
# canonical (lexicographically least rotation) spelling.
g = parse_word("Babab", alphabet)
core, conj = cyclic_reduce(g)
print("Babab cyclically reduces to", core, "with conjugator", conj)
assert CyclicWord.from_word(~conj * g * conj) == core

# Canonical spelling makes equality of cyclic words plain equality.
print("aab vs aba vs baa:", parse_cyclic("aab", alphabet),
      parse_cyclic("aba", alphabet), parse_cyclic("baa", alphabet))
assert parse_cyclic("aab", alphabet) == parse_cyclic("baa", alphabet)

# Supports: which generators occur at all.
print("support of Babab:", sorted(letter_support(g)))

# Alphabets beyond rank 26 switch to indexed symbols.
wide = Alphabet.of_rank(30)
print("rank-30 alphabet uses symbols like:", wide.symbols[26])
