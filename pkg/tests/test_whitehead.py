import itertools
import random

import pytest

from freegroups.whitehead import (
    Action,
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
    CyclicWord,
    Letter,
    TrivialWordError,
    Word,
    free_reduce,
    letter_support,
    parse_cyclic,
    parse_word,
)

A2 = Alphabet.of_rank(2)
A3 = Alphabet.of_rank(3)

inv = NielsenTransformation.invert
rmul = NielsenTransformation.right_multiply


def cyc(text, alphabet=A2):
    return parse_cyclic(text, alphabet)


def all_cyclic_words(alphabet, max_len, include_trivial=False):
    # Every canonical cyclic word of length 1..max_len (deduplicated).
    letters = [Letter(g, s) for g in range(alphabet.rank) for s in (1, -1)]
    seen = set()
    out = []
    if include_trivial:
        out.append(CyclicWord(alphabet))
    layer = [()]
    for _ in range(max_len):
        nxt = []
        for seq in layer:
            for l in letters:
                if seq and seq[-1] == l.inverse():
                    continue
                nxt.append(seq + (l,))
        layer = nxt
        for seq in nxt:
            if seq[0] == seq[-1].inverse():
                continue
            w = CyclicWord(alphabet, seq)
            if w.letters not in seen:
                seen.add(w.letters)
                out.append(w)
    return out


def exhaustive_min_length(w, cap=None):
    # Oracle: breadth-first search over all Whitehead images for the
    # smallest cyclic length reachable from w.
    autos = enumerate_whitehead(w.alphabet.rank) + enumerate_relabelings(w.alphabet.rank)
    cap = len(w) if cap is None else cap
    seen = {w}
    queue = [w]
    best = len(w)
    while queue:
        current = queue.pop()
        for t in autos:
            image = t.apply_to_cyclic(current)
            if len(image) <= cap and image not in seen:
                seen.add(image)
                queue.append(image)
                best = min(best, len(image))
    return best


class TestEnumeration:
    def test_counts(self):
        assert len(enumerate_whitehead(1)) == 0
        assert len(enumerate_whitehead(2)) == 12
        assert len(enumerate_whitehead(3)) == 90
        assert len(enumerate_relabelings(1)) == 2
        assert len(enumerate_relabelings(2)) == 8
        assert len(enumerate_relabelings(3)) == 48

    def test_no_duplicates(self):
        for rank in (2, 3):
            autos = enumerate_whitehead(rank)
            assert len(set(autos)) == len(autos)

    def test_multiplier_identity_excluded(self):
        for t in enumerate_whitehead(2):
            assert any(a != Action.KEEP for a in t.actions)


class TestApplication:
    def test_multiplier_forms(self):
        # multiplier a acting on b in all four ways
        base = cyc("b")
        images = []
        for act in (Action.KEEP, Action.RIGHT, Action.LEFT, Action.CONJ):
            t = WhiteheadAut.multiplier(2, Letter(0, 1), (Action.KEEP, act))
            images.append(str(t.apply_to_cyclic(base)))
        assert images == ["b", "ab", "Ab", "b"]  # conjugate collapses cyclically

    def test_conj_on_linear_word(self):
        t = WhiteheadAut.multiplier(2, Letter(0, 1), (Action.KEEP, Action.CONJ))
        assert str(t.apply_to_word(parse_word("b", A2))) == "Aba"

    def test_multiplier_fixes_own_generator(self):
        t = WhiteheadAut.multiplier(2, Letter(0, -1), (Action.KEEP, Action.RIGHT))
        assert str(t.apply_to_word(parse_word("aA", A2))) == "1"
        assert str(t.apply_to_word(parse_word("a", A2))) == "a"

    def test_relabeling(self):
        t = WhiteheadAut.relabeling((Letter(1, 1), Letter(0, -1)))  # a->b, b->A
        assert str(t.apply_to_word(parse_word("ab", A2))) == "bA"

    def test_inverse_round_trip_everywhere(self):
        autos = enumerate_whitehead(2) + enumerate_relabelings(2)
        words = all_cyclic_words(A2, 3, include_trivial=True)
        for t in autos:
            back = t.inverse()
            for w in words:
                assert back.apply_to_cyclic(t.apply_to_cyclic(w)) == w

    def test_injective_on_short_words(self):
        # Automorphisms are injective; check on the ball of radius 3.
        ball = []
        letters = [Letter(g, s) for g in range(2) for s in (1, -1)]
        layer = [()]
        for _ in range(3):
            layer = [
                seq + (l,)
                for seq in layer
                for l in letters
                if not (seq and seq[-1] == l.inverse())
            ]
            ball.extend(Word(A2, seq) for seq in layer)
        for t in enumerate_whitehead(2)[:6]:
            images = [t.apply_to_word(w) for w in ball]
            assert len(set(images)) == len(ball)


class TestBadMultiplier:
    def test_dichotomy_rank2(self):
        # multiplier outside the support: the image is unchanged or longer
        for w in all_cyclic_words(A2, 4):
            support = letter_support(w)
            for t in enumerate_whitehead(2):
                if t.mult.gen in support:
                    continue
                image = t.apply_to_cyclic(w)
                assert image == w or len(image) > len(w)

    def test_support_shrinks_when_not_longer(self):
        for w in all_cyclic_words(A2, 4):
            support = letter_support(w)
            for t in enumerate_whitehead(2):
                if t.mult.gen in support:
                    continue
                image = t.apply_to_cyclic(w)
                if len(image) <= len(w):
                    assert letter_support(image) <= support


class TestMinimize:
    def test_primitive_descends_to_length_one(self):
        minimal, descent = minimize_tuple((cyc("ab"),))
        assert total_length(minimal) == 1
        assert descent

    def test_commutator_already_minimal(self):
        w = cyc("abAB")
        minimal, descent = minimize_tuple((w,))
        assert minimal == (w,)
        assert descent == []
        for t in enumerate_whitehead(2):
            assert len(t.apply_to_cyclic(w)) >= 4

    def test_descent_replay(self):
        rng = random.Random(61)
        for _ in range(30):
            letters = [
                Letter(rng.randrange(2), rng.choice((1, -1)))
                for _ in range(rng.randrange(1, 7))
            ]
            w = CyclicWord.from_word(free_reduce(letters, A2))
            minimal, descent = minimize_tuple((w,))
            replay = (w,)
            for t in descent:
                replay = tuple(t.apply_to_cyclic(x) for x in replay)
            assert replay == minimal

    def test_matches_exhaustive_oracle(self):
        for w in all_cyclic_words(A2, 4):
            minimal, _ = minimize_tuple((w,))
            assert total_length(minimal) == exhaustive_min_length(w)

    def test_pairs_share_one_automorphism(self):
        # the diagonal action: both entries move together
        minimal, descent = minimize_tuple((cyc("ab"), cyc("a")))
        assert total_length(minimal) == 2
        replay = (cyc("ab"), cyc("a"))
        for t in descent:
            replay = tuple(t.apply_to_cyclic(x) for x in replay)
        assert replay == minimal


class TestOrbits:
    def test_singleton_orbit(self):
        orbit = equal_length_orbit((cyc("a"),))
        texts = sorted(str(t[0]) for t in orbit)
        assert texts == ["A", "B", "a", "b"]

    def test_same_orbit_examples(self):
        assert same_orbit((cyc("ab"),), (cyc("a"),))
        assert same_orbit((cyc("abAB"),), (cyc("baBA"),))
        assert not same_orbit((cyc("abAB"),), (cyc("aabb"),))
        assert not same_orbit((cyc("a"),), (cyc("aa"),))

    def test_length_mismatch_raises(self):
        with pytest.raises(ValueError):
            same_orbit((cyc("a"),), (cyc("a"), cyc("b")))

    def test_orbit_closed_under_inverse_moves(self):
        orbit = equal_length_orbit((cyc("abAB"),))
        for t in enumerate_relabelings(2):
            for member in orbit:
                image = tuple(t.apply_to_cyclic(w) for w in member)
                assert image in orbit


class TestPrimitive:
    def test_examples(self):
        assert is_primitive(parse_word("a", A2))
        assert is_primitive(parse_word("ab", A2))
        assert is_primitive(parse_word("aab", A2))
        assert is_primitive(parse_word("abA", A2))  # conjugate of b
        assert not is_primitive(parse_word("aa", A2))
        assert not is_primitive(parse_word("abAB", A2))
        assert not is_primitive(parse_word("abab", A2))

    def test_trivial_raises(self):
        with pytest.raises(TrivialWordError):
            is_primitive(parse_word("1", A2))

    def test_matches_oracle_exhaustively(self):
        for w in all_cyclic_words(A2, 4):
            assert is_primitive(w.as_word()) == (exhaustive_min_length(w) == 1)

    def test_rank3(self):
        assert is_primitive(parse_word("abc", A3))
        assert not is_primitive(parse_word("aabb", A3))


class TestClassifyPair:
    def test_examples(self):
        assert classify_pair(cyc("a"), cyc("b")) == PairClass.DISJOINT
        assert classify_pair(cyc("a"), cyc("a")) == PairClass.FRUGAL
        assert classify_pair(cyc("ab"), cyc("a")) == PairClass.NEITHER
        assert classify_pair(cyc("a", A3), cyc("b", A3)) == PairClass.BOTH

    def test_good_flag(self):
        assert classify_pair(cyc("a"), cyc("b")).is_good
        assert not classify_pair(cyc("ab"), cyc("ba")).is_good


class TestGoodPairInvariants:
    def test_equal_length_images_of_good_minimal_pairs_stay_good(self):
        words = all_cyclic_words(A2, 3)
        autos = enumerate_whitehead(2) + enumerate_relabelings(2)
        for v, w in itertools.product(words, words):
            if len(v) + len(w) > 4:
                continue
            minimal, _ = minimize_tuple((v, w))
            if total_length(minimal) != len(v) + len(w):
                continue  # not minimal
            if not classify_pair(v, w).is_good:
                continue
            for t in autos:
                iv, iw = t.apply_to_cyclic(v), t.apply_to_cyclic(w)
                if len(iv) + len(iw) == len(v) + len(w):
                    assert classify_pair(iv, iw).is_good

    def test_goodness_constant_on_minimal_level(self):
        words = all_cyclic_words(A2, 3)
        for v, w in itertools.product(words, words):
            if len(v) + len(w) > 4:
                continue
            minimal, _ = minimize_tuple((v, w))
            level = equal_length_orbit(minimal)
            flags = {classify_pair(p[0], p[1]).is_good for p in level}
            assert len(flags) == 1


class TestNielsen:
    def test_apply_examples(self):
        words = apply_nielsen([rmul(0, 1)], A2)
        assert [str(w) for w in words] == ["ab", "b"]
        words = apply_nielsen([inv(0), rmul(1, 0)], A2)
        assert [str(w) for w in words] == ["A", "bA"]

    def test_decompose_examples(self):
        assert nielsen_decompose(
            [parse_word("ab", A2), parse_word("b", A2)], A2
        ) == [rmul(0, 1)]
        assert nielsen_decompose(standard_basis(A2), A2) == []
        with pytest.raises(NotABasisError):
            nielsen_decompose([parse_word("a", A2), parse_word("a", A2)], A2)
        with pytest.raises(NotABasisError):
            nielsen_decompose([parse_word("ab", A2), parse_word("ba", A2)], A2)
        with pytest.raises(NotABasisError):
            nielsen_decompose([parse_word("a", A2)], A2)

    def test_round_trip_random_builds(self):
        rng = random.Random(67)
        for alphabet in (A2, A3):
            n = alphabet.rank
            all_moves = [inv(i) for i in range(n)] + [
                rmul(i, j) for i in range(n) for j in range(n) if i != j
            ]
            for _ in range(40):
                k = rng.randrange(5)
                build = [rng.choice(all_moves) for _ in range(k)]
                target = apply_nielsen(build, alphabet)
                moves = nielsen_decompose(list(target), alphabet)
                assert apply_nielsen(moves, alphabet) == target
                assert len(moves) <= k

    def test_decomposition_of_longer_basis(self):
        target = [parse_word("aab", A2), parse_word("ab", A2)]
        moves = nielsen_decompose(target, A2)
        assert apply_nielsen(moves, A2) == tuple(target)
        # shortest elementary sequence; verified against a full search below
        assert len(moves) == iddfs_min_moves(tuple(target), A2)

    def test_greedy_fallback_round_trips(self):
        # starve the search so the greedy reducer does the work
        rng = random.Random(79)
        all_moves = [inv(0), inv(1), rmul(0, 1), rmul(1, 0)]
        for _ in range(20):
            build = [rng.choice(all_moves) for _ in range(rng.randrange(1, 8))]
            target = apply_nielsen(build, A2)
            moves = nielsen_decompose(list(target), A2, node_budget=1)
            assert apply_nielsen(moves, A2) == target

    def test_substitution_matches_tuple_action(self):
        rng = random.Random(71)
        n = 2
        all_moves = [inv(i) for i in range(n)] + [
            rmul(i, j) for i in range(n) for j in range(n) if i != j
        ]
        for _ in range(40):
            build = [rng.choice(all_moves) for _ in range(rng.randrange(5))]
            target = apply_nielsen(build, A2)
            for g in range(n):
                x = Word(A2, (Letter(g, 1),))
                assert moves_apply_word(build, x) == target[g]

    def test_inverse_substitution(self):
        rng = random.Random(73)
        all_moves = [inv(0), inv(1), rmul(0, 1), rmul(1, 0)]
        for _ in range(40):
            build = [rng.choice(all_moves) for _ in range(rng.randrange(5))]
            letters = [
                Letter(rng.randrange(2), rng.choice((1, -1)))
                for _ in range(rng.randrange(7))
            ]
            w = free_reduce(letters, A2)
            assert moves_apply_word_inverse(build, moves_apply_word(build, w)) == w
            assert moves_apply_word(build, moves_apply_word_inverse(build, w)) == w


def iddfs_min_moves(target, alphabet, cap=8):
    # Independent oracle: iterative deepening over elementary moves.
    n = alphabet.rank
    all_moves = [inv(i) for i in range(n)] + [
        rmul(i, j) for i in range(n) for j in range(n) if i != j
    ]
    start = standard_basis(alphabet)
    for depth in range(cap + 1):
        stack = [(start, 0)]
        while stack:
            words, used = stack.pop()
            if words == target:
                return used
            if used == depth:
                continue
            for m in all_moves:
                stack.append((m.apply(words), used + 1))
        # no sequence of length <= depth found; deepen
    raise AssertionError("no decomposition within %d moves" % cap)
