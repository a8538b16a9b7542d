"""Whitehead automorphisms and Nielsen transformations.

Whitehead's method: finitely many automorphisms suffice to shorten any
cyclic word tuple to its orbit minimum, and two tuples lie in the same
automorphism orbit iff their minima are connected by length-preserving
moves.  Nielsen transformations give the elementary-move factorization
of a basis.  Run with `python3 demos/03_automorphisms.py`.
"""

from freegroups import (
    Alphabet,
    NielsenTransformation,
    apply_nielsen,
    enumerate_whitehead,
    is_primitive,
    minimize_tuple,
    nielsen_decompose,
    parse_cyclic,
    parse_word,
    same_orbit,
)

alphabet = Alphabet.of_rank(2)

# The multiplier automorphisms of rank 2, 3: 12 and 90 of them.
print("whitehead multiplier count, rank 2:", len(enumerate_whitehead(2)))
print("whitehead multiplier count, rank 3:", len(enumerate_whitehead(3)))

# Minimizing a cyclic word by first-improvement descent.
w = parse_cyclic("ab", alphabet)
minimal, descent = minimize_tuple([w])
print("ab minimizes to", minimal[0], "in", len(descent), "step(s):",
      [t.describe(alphabet) for t in descent])

# The commutator is already minimal: nothing shortens abAB.
minimal, descent = minimize_tuple([parse_cyclic("abAB", alphabet)])
print("abAB minimizes to", minimal[0], "(no descent: %d steps)" % len(descent))

# Orbit membership.  ab and a are automorphic images of each other;
# aabb is not an image of abAB (different abelianizations).
print("ab ~ a:     ", same_orbit([parse_cyclic("ab", alphabet)],
                                 [parse_cyclic("a", alphabet)]))
print("abAB ~ aabb:", same_orbit([parse_cyclic("abAB", alphabet)],
                                 [parse_cyclic("aabb", alphabet)]))

# Primitivity = being part of some free basis = orbit minimum length 1.
for text in ("a", "aab", "abAB", "aa"):
    print("primitive(%s): %s" % (text, is_primitive(parse_word(text, alphabet))))

# Elementary Nielsen moves: inversions and right multiplications.
inv = NielsenTransformation.invert
rmul = NielsenTransformation.right_multiply
moves = [rmul(0, 1), inv(1)]
images = apply_nielsen(moves, alphabet)
print("standard basis after [rmul a b, inv b]:", [str(w) for w in images])

# And back: factor a basis into elementary moves.
target = [parse_word("ab", alphabet), parse_word("b", alphabet)]
moves = nielsen_decompose(target, alphabet)
print("decomposition of (ab, b):", [m.describe(alphabet) for m in moves])
assert apply_nielsen(moves, alphabet) == tuple(target)

target = [parse_word("aab", alphabet), parse_word("ab", alphabet)]
moves = nielsen_decompose(target, alphabet)
print("decomposition of (aab, ab): %d moves:" % len(moves),
      [m.describe(alphabet) for m in moves])
