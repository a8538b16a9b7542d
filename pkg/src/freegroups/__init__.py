"""Computational free-group theory: words, Stallings subgroup graphs,
Whitehead/Nielsen automorphisms, and distance-two deciders for the
ellipticity graph of free splittings."""

from freegroups.ellipticity import (
    DoesNotGenerateError,
    EllipticityAnswer,
    FreeSplitting,
    RankMismatchError,
    SplittingError,
    TrivialIntersectionError,
    UnverifiedSplittingError,
    factor_index,
    nielsen_bound,
    primitive_in_intersection,
    splittings_distance_two,
    verify_splitting,
    word_elliptic,
    words_distance_two,
)
from freegroups.stallings import (
    GraphFormatError,
    NotFoldedError,
    Subgroup,
    XDigraph,
    build_subgroup,
    conjugate_subgroups,
    conjugator_into,
    contains,
    contains_conjugate,
    core,
    digraph_isomorphic,
    find_cycle,
    fold,
    graph_from_text,
    graph_to_dot,
    graph_to_text,
    has_cycle,
    intersect,
    path_word,
    spanning_tree_basis,
    type_graph,
)
from freegroups.whitehead import (
    NielsenTransformation,
    NotABasisError,
    PairClass,
    WhiteheadAut,
    apply_nielsen,
    apply_whitehead,
    classify_pair,
    enumerate_relabelings,
    enumerate_whitehead,
    equal_length_orbit,
    is_primitive,
    minimize_tuple,
    moves_apply_word,
    moves_apply_word_inverse,
    nielsen_decompose,
    same_orbit,
    standard_basis,
    total_length,
)
from freegroups.words import (
    Alphabet,
    AlphabetMismatchError,
    CyclicWord,
    Letter,
    TrivialWordError,
    Word,
    WordFormatError,
    cyclic_reduce,
    format_letters,
    free_reduce,
    letter_support,
    parse_cyclic,
    parse_word,
    signed_support,
)

__all__ = [
    "Alphabet",
    "AlphabetMismatchError",
    "CyclicWord",
    "DoesNotGenerateError",
    "EllipticityAnswer",
    "FreeSplitting",
    "GraphFormatError",
    "Letter",
    "NielsenTransformation",
    "NotABasisError",
    "NotFoldedError",
    "PairClass",
    "RankMismatchError",
    "SplittingError",
    "Subgroup",
    "TrivialIntersectionError",
    "TrivialWordError",
    "UnverifiedSplittingError",
    "WhiteheadAut",
    "Word",
    "WordFormatError",
    "XDigraph",
    "apply_nielsen",
    "apply_whitehead",
    "build_subgroup",
    "classify_pair",
    "conjugate_subgroups",
    "conjugator_into",
    "contains",
    "contains_conjugate",
    "core",
    "cyclic_reduce",
    "digraph_isomorphic",
    "enumerate_relabelings",
    "enumerate_whitehead",
    "equal_length_orbit",
    "factor_index",
    "find_cycle",
    "fold",
    "format_letters",
    "free_reduce",
    "graph_from_text",
    "graph_to_dot",
    "graph_to_text",
    "has_cycle",
    "intersect",
    "is_primitive",
    "letter_support",
    "minimize_tuple",
    "moves_apply_word",
    "moves_apply_word_inverse",
    "nielsen_bound",
    "nielsen_decompose",
    "parse_cyclic",
    "parse_word",
    "path_word",
    "primitive_in_intersection",
    "same_orbit",
    "signed_support",
    "spanning_tree_basis",
    "splittings_distance_two",
    "standard_basis",
    "total_length",
    "type_graph",
    "verify_splitting",
    "word_elliptic",
    "words_distance_two",
]
