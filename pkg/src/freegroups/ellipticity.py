"""Distance-two decisions in the ellipticity graph of a free group.

The ellipticity graph is bipartite: one side holds (equivalence classes
of) two-factor free splittings F = A * B, the other nontrivial cyclic
words, with an edge when the word is elliptic -- conjugate into a factor.
Two splittings are at distance two exactly when some nontrivial element
is elliptic to both, which reduces to a cycle search in products of type
graphs.  Two words are at distance two exactly when a Whitehead-minimal
representative of the pair is good (frugal or disjoint), in which case
the separating splitting pulls back through the descent.

Also here: a primitive element in the intersection of two free factors
(the intersection of free factors is again a free factor, so any basis
element of it is primitive), and the Nielsen upper bound 2m on the
splitting distance, where m counts elementary moves relating the bases.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .stallings import (
    Subgroup,
    build_subgroup,
    contains_conjugate,
    find_cycle,
    has_cycle,
    intersect,
    product,
    spanning_tree_basis,
    type_graph,
)
from .whitehead import (
    PairClass,
    classify_pair,
    minimize_tuple,
    moves_apply_word,
    moves_apply_word_inverse,
    nielsen_decompose,
)
from .words import (
    Alphabet,
    AlphabetMismatchError,
    CyclicWord,
    Letter,
    TrivialWordError,
    Word,
    cyclic_reduce,
    letter_support,
)


class SplittingError(ValueError):
    """The given data does not describe a two-factor free splitting."""


class DoesNotGenerateError(SplittingError):
    """The combined basis words do not generate the whole group."""


class RankMismatchError(SplittingError):
    """Factor basis sizes are incompatible with the alphabet rank."""


class UnverifiedSplittingError(SplittingError):
    """The operation needs a splitting certified by verify_splitting."""


class TrivialIntersectionError(ValueError):
    """The chosen factors intersect trivially."""


@dataclass(frozen=True)
class FreeSplitting(object):
    """F = A * B presented by a basis of each factor.

    The `verified` flag is the certificate issued by verify_splitting;
    the deciders refuse splittings without it.
    """

    alphabet: Alphabet
    basis_a: tuple[Word, ...]
    basis_b: tuple[Word, ...]
    verified: bool = False

    @property
    def combined(self) -> tuple[Word, ...]:
        return self.basis_a + self.basis_b

    def basis(self, which: int) -> tuple[Word, ...]:
        return self.basis_a if which == 0 else self.basis_b

    def factor(self, which: int) -> Subgroup:
        return build_subgroup(list(self.basis(which)), self.alphabet)

    def __str__(self) -> str:
        return "split %s | %s" % (
            " ".join(str(w) for w in self.basis_a),
            " ".join(str(w) for w in self.basis_b),
        )


@dataclass(frozen=True)
class EllipticityAnswer(object):
    """A decision plus, on yes, the witnessing object: a common elliptic
    cyclic word (for a pair of splittings) or a common splitting (for a
    pair of words)."""

    decision: bool
    witness: "CyclicWord | FreeSplitting | None" = None

    def __bool__(self) -> bool:
        return self.decision

    def __str__(self) -> str:
        if not self.decision:
            return "no"
        return "yes witness=%s" % (self.witness,)


def factor_index(tag: "int | str") -> int:
    """Normalize a factor selector: A/a/0 is the first factor, B/b/1 the
    second."""
    if tag in (0, 1):
        return int(tag)
    if isinstance(tag, str) and tag.upper() in ("A", "B"):
        return 0 if tag.upper() == "A" else 1
    raise ValueError("factor selector must be A or B, got %r" % (tag,))


def verify_splitting(
    basis_a: Sequence[Word], basis_b: Sequence[Word], alphabet: Alphabet
) -> FreeSplitting:
    """Certify that the two word lists present a free splitting F = A * B.

    The combined words must form a basis of F (their graph folds to the
    rose on the alphabet) and the factor ranks must add up to the total;
    rank additivity then forces the free product.
    """
    a, b = tuple(basis_a), tuple(basis_b)
    if not a or not b:
        raise SplittingError("both factors must be proper: empty basis list")
    for w in a + b:
        if w.alphabet != alphabet:
            raise AlphabetMismatchError("basis word over a different alphabet")
        if w.is_trivial:
            raise SplittingError("basis words must be nontrivial")
    if len(a) + len(b) != alphabet.rank:
        raise RankMismatchError(
            "basis sizes %d + %d do not sum to the rank %d"
            % (len(a), len(b), alphabet.rank)
        )
    whole = build_subgroup(list(a + b), alphabet)
    rose = (
        whole.graph.vertex_count == 1
        and sorted(l for _, _, l in whole.graph.edges) == list(range(alphabet.rank))
    )
    if not rose:
        raise DoesNotGenerateError("combined basis words do not generate F")
    ra = build_subgroup(list(a), alphabet).free_rank
    rb = build_subgroup(list(b), alphabet).free_rank
    if ra != len(a) or rb != len(b):
        raise RankMismatchError(
            "factor ranks %d, %d do not match basis sizes %d, %d"
            % (ra, rb, len(a), len(b))
        )
    return FreeSplitting(alphabet, a, b, verified=True)


def _require_verified(s: FreeSplitting) -> None:
    if not s.verified:
        raise UnverifiedSplittingError("splitting was not certified")


def _require_same_alphabet(s1: FreeSplitting, s2: FreeSplitting) -> None:
    if s1.alphabet != s2.alphabet:
        raise AlphabetMismatchError("splittings over different alphabets")


# The fixed order of factor pairings; the first cyclic witness found wins.
_PAIR_ORDER = ((0, 0), (0, 1), (1, 0), (1, 1))


def splittings_distance_two(
    s1: FreeSplitting, s2: FreeSplitting
) -> EllipticityAnswer:
    """Is some nontrivial element elliptic to both splittings?

    An element lies in conjugates of factors H and K exactly when the
    product of their type graphs has a cycle; going once around the
    first cycle found yields the witness.
    """
    _require_verified(s1)
    _require_verified(s2)
    _require_same_alphabet(s1, s2)
    for i, j in _PAIR_ORDER:
        prod = product(type_graph(s1.factor(i)), type_graph(s2.factor(j)))
        if has_cycle(prod):
            found = find_cycle(prod)
            assert found is not None
            letters, _ = found
            return EllipticityAnswer(True, CyclicWord(s1.alphabet, letters))
    return EllipticityAnswer(False)


def word_elliptic(w: "Word | CyclicWord", s: FreeSplitting) -> bool:
    """Is some conjugate of w inside a factor of the splitting?"""
    _require_verified(s)
    linear = w.as_word() if isinstance(w, CyclicWord) else w
    if linear.alphabet != s.alphabet:
        raise AlphabetMismatchError("word over a different alphabet")
    if cyclic_reduce(linear)[0].is_trivial:
        raise TrivialWordError("ellipticity is defined for nontrivial words")
    return contains_conjugate(s.factor(0), linear) or contains_conjugate(
        s.factor(1), linear
    )


def words_distance_two(v: CyclicWord, w: CyclicWord) -> EllipticityAnswer:
    """Are the two cyclic words both elliptic to one proper free splitting?

    Minimize the pair under the diagonal Whitehead action; the answer is
    yes exactly when the minimal pair is good.  A good minimal pair is
    separated by a coordinate splitting -- on the support of the first
    word when the supports are disjoint, on the union of the supports
    when a generator is missed -- and the splitting pulls back through
    the inverted descent to one for the input pair.
    """
    if v.alphabet != w.alphabet:
        raise AlphabetMismatchError("pair over different alphabets")
    if v.is_trivial or w.is_trivial:
        raise TrivialWordError("distance is defined for nontrivial words")
    alphabet = v.alphabet
    (mv, mw), descent = minimize_tuple((v, w))
    cls = classify_pair(mv, mw)
    if not cls.is_good:
        return EllipticityAnswer(False)
    if cls in (PairClass.DISJOINT, PairClass.BOTH):
        x1 = set(letter_support(mv))  # the first support alone splits
    else:  # frugal only: both supports fit in one proper factor
        x1 = set(letter_support(mv) | letter_support(mw))
    x2 = set(range(alphabet.rank)) - x1
    basis_a = [Word(alphabet, (Letter(g, 1),)) for g in sorted(x1)]
    basis_b = [Word(alphabet, (Letter(g, 1),)) for g in sorted(x2)]
    for t in reversed(descent):
        back = t.inverse()
        basis_a = [back.apply_to_word(u) for u in basis_a]
        basis_b = [back.apply_to_word(u) for u in basis_b]
    s = verify_splitting(basis_a, basis_b, alphabet)
    assert word_elliptic(v, s) and word_elliptic(w, s)
    return EllipticityAnswer(True, s)


@lru_cache(maxsize=256)
def _rebase_moves(alphabet: Alphabet, combined: tuple[Word, ...]):
    # moves presenting the automorphism standard basis -> combined
    return tuple(nielsen_decompose(list(combined), alphabet))


def primitive_in_intersection(
    s1: FreeSplitting,
    factor1: "int | str",
    s2: FreeSplitting,
    factor2: "int | str",
) -> Word:
    """A primitive element of F inside H ∩ K, for the chosen factors H of
    s1 and K of s2.

    Rebase through the automorphism sending the standard letters to s1's
    combined basis, so that H becomes a coordinate sub-rose; then H ∩ K
    is computed by the graph product, and any basis element of it is
    primitive because an intersection of free factors is a free factor.
    """
    _require_verified(s1)
    _require_verified(s2)
    _require_same_alphabet(s1, s2)
    alphabet = s1.alphabet
    i1, i2 = factor_index(factor1), factor_index(factor2)
    moves = _rebase_moves(alphabet, s1.combined)
    k = len(s1.basis_a)
    gens = range(k) if i1 == 0 else range(k, alphabet.rank)
    sub_rose = build_subgroup(
        [Word(alphabet, (Letter(g, 1),)) for g in gens], alphabet
    )
    rebased_k = build_subgroup(
        [moves_apply_word_inverse(moves, u) for u in s2.basis(i2)], alphabet
    )
    inter = intersect(sub_rose, rebased_k)
    if inter.is_trivial:
        raise TrivialIntersectionError("the chosen factors intersect trivially")
    return moves_apply_word(moves, spanning_tree_basis(inter)[0])


def nielsen_bound(s1: FreeSplitting, s2: FreeSplitting) -> int:
    """An upper bound on the distance between the two splittings in the
    ellipticity graph: twice the number of elementary Nielsen moves
    relating s2's combined basis to s1's.

    Zero exactly when the bases agree as ordered tuples.
    """
    _require_verified(s1)
    _require_verified(s2)
    _require_same_alphabet(s1, s2)
    if s1.alphabet.rank < 2:
        raise ValueError("the bound needs at least two generators")
    moves = _rebase_moves(s1.alphabet, s1.combined)
    over_s1 = [moves_apply_word_inverse(moves, u) for u in s2.combined]
    return 2 * len(nielsen_decompose(over_s1, s1.alphabet))
