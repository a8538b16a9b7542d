"""Subgroup graphs: folding, membership, bases, intersections, conjugacy.

Every finitely generated subgroup of a free group is represented by a
finite folded labeled digraph; almost every subgroup question below is a
path question about that graph.  Run with
`python3 demos/02_subgroup_graphs.py`.
"""

from freegroups import (
    Alphabet,
    build_subgroup,
    conjugate_subgroups,
    conjugator_into,
    contains,
    contains_conjugate,
    digraph_isomorphic,
    graph_to_dot,
    graph_to_text,
    intersect,
    parse_word,
    spanning_tree_basis,
    type_graph,
)

alphabet = Alphabet.of_rank(2)


def sub(*texts):
    return build_subgroup([parse_word(t, alphabet) for t in texts], alphabet)


# Generators with obvious redundancy: folding sorts it out.
h = sub("aa", "aaa")
print("graph of <aa, aaa>:")
print(graph_to_text(h.graph, alphabet), end="")
print("rank:", h.free_rank)  # collapses to <a>

# Membership is path tracing from the base vertex.
k = sub("baB")
print("baaB in <baB>:", contains(k, parse_word("baaB", alphabet)))
print("b    in <baB>:", contains(k, parse_word("b", alphabet)))

# A free basis read off a spanning tree.  Rebuilding from the basis
# reproduces the graph, so the basis is faithful.
m = sub("aa", "ab", "ba")
basis = spanning_tree_basis(m)
print("basis of <aa, ab, ba>:", [str(w) for w in basis])
rebuilt = build_subgroup(basis, alphabet)
assert digraph_isomorphic(m.graph, rebuilt.graph, (m.base, rebuilt.base))

# Intersections come from the product graph.
met = intersect(sub("aa"), sub("aaa"))
print("<aa> meet <aaa> has rank", met.free_rank,
      "and contains a^6:", contains(met, parse_word("aaaaaa", alphabet)))

# Conjugacy of subgroups = isomorphism of baseless type graphs.
print("<a> conj to <baB>: ", conjugate_subgroups(sub("a"), sub("baB")))
print("<a> conj to <b>:   ", conjugate_subgroups(sub("a"), sub("b")))

# For a single element, conjugator_into also produces the witness.
x = conjugator_into(sub("baB"), parse_word("a", alphabet))
print("conjugator taking a into <baB>:", x)
assert x is not None and contains(sub("baB"), x * parse_word("a", alphabet) * ~x)

# Type graphs drop the base and peel hanging trees.
print("type graph of <baB>:")
print(graph_to_text(type_graph(k), alphabet), end="")

# Graphviz output for visual inspection.
print("dot format preview:")
print("\n".join(graph_to_dot(k.graph, alphabet).splitlines()[:3]))
