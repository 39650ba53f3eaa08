import pytest

from boolinv.counting import involutions
from boolinv.involution_words import (
    ResourceLimitError,
    all_reduced_words,
    apply_letter,
    descents,
    evaluate_word,
    format_word,
    is_reduced,
    parse_word,
    rank,
    rank_profile,
    reduced_word,
    support,
)
from boolinv.permutations import identity, parse_permutation
from oracles import inversion_count


def test_apply_letter_examples():
    assert apply_letter(identity(2), 1) == parse_permutation("21")
    assert apply_letter(identity(4), 1) == parse_permutation("2134")
    # conjugation case: (1,3) under letter 3 becomes (1,4)
    assert apply_letter(parse_permutation("3214"), 3) == parse_permutation("4231")
    with pytest.raises(ValueError, match="out of range"):
        apply_letter(identity(4), 4)


def test_evaluate_word_examples():
    assert evaluate_word((), 5) == identity(5)
    assert evaluate_word((1, 3, 2), 4) == parse_permutation("3412")
    assert evaluate_word((1, 2, 3, 2), 4) == parse_permutation("4321")


def test_apply_letter_is_involutive():
    for n in range(2, 7):
        for w in involutions(n):
            for i in range(1, n):
                assert apply_letter(apply_letter(w, i), i) == w


def test_apply_letter_changes_rank_by_one():
    for n in range(2, 7):
        for w in involutions(n):
            for i in range(1, n):
                assert abs(rank(apply_letter(w, i)) - rank(w)) == 1


def test_rank_profile_examples():
    assert rank_profile(identity(4)) == (0, 0, 0)
    assert rank_profile(parse_permutation("4321")) == (4, 6, 2)
    assert rank_profile(parse_permutation("321")) == (2, 3, 1)


def test_is_reduced_examples():
    assert is_reduced((1, 2, 3, 2), 4) is True
    assert is_reduced((1, 1), 4) is False
    assert is_reduced((1, 3, 2), 4) is True


def test_reduced_word_examples():
    assert reduced_word(identity(5)) == ()
    w = parse_permutation("4321")
    letters = reduced_word(w)
    assert len(letters) == 4 and evaluate_word(letters, 4) == w
    letters = reduced_word(parse_permutation("2143"))
    assert len(letters) == 2 and set(letters) == {1, 3}


def test_reduced_word_round_trips_and_has_rank_length():
    for n in range(9):
        for w in involutions(n):
            letters = reduced_word(w)
            assert len(letters) == rank(w)
            assert evaluate_word(letters, n) == w


def test_all_reduced_words_examples():
    words = all_reduced_words(parse_permutation("4321"))
    assert words and all(len(set(word)) < len(word) for word in words)
    words = all_reduced_words(parse_permutation("3412"))
    assert words and all(set(word) == {1, 2, 3} for word in words)
    assert all_reduced_words(parse_permutation("21")) == {(1,)}


def test_all_reduced_words_guard():
    with pytest.raises(ResourceLimitError):
        all_reduced_words(evaluate_word(tuple(range(1, 14)), 14))


def test_support_examples():
    assert support(identity(4)) == frozenset()
    assert support(parse_permutation("2143")) == {1, 3}
    assert support(parse_permutation("4321")) == {1, 2, 3}


def test_support_is_word_independent_and_matches_order():
    from boolinv.ideals import bruhat_leq

    for n in range(1, 6):
        for w in involutions(n):
            words = all_reduced_words(w)
            letter_sets = {frozenset(word) for word in words}
            assert letter_sets == {support(w)}
            below = frozenset(
                i
                for i in range(1, n)
                if bruhat_leq(apply_letter(identity(n), i), w)
            )
            assert below == support(w)


def test_orbit_covers_all_involutions():
    # closing the identity under all letters reaches every involution
    for n in range(1, 8):
        reached = {identity(n)}
        frontier = [identity(n)]
        while frontier:
            new = []
            for w in frontier:
                for i in range(1, n):
                    u = apply_letter(w, i)
                    if u not in reached:
                        reached.add(u)
                        new.append(u)
            frontier = new
        assert reached == set(involutions(n))


def test_two_cycle_count_recovered_from_any_reduced_word():
    # multiplication steps along a reduced word count the 2-cycles
    for n in range(1, 7):
        for w in involutions(n):
            for letters in all_reduced_words(w):
                current = identity(n)
                multiplications = 0
                for i in letters:
                    after = apply_letter(current, i)
                    word = list(current.word)
                    word[i - 1], word[i] = word[i], word[i - 1]
                    if after.word == tuple(word):
                        multiplications += 1
                    current = after
                profile = rank_profile(w)
                assert multiplications == profile.absolute_length
                assert profile.coxeter_length == profile.absolute_length + 2 * (
                    len(letters) - multiplications
                )


def _first_descent_position(letters, n):
    current = identity(n)
    r = 0
    for position, i in enumerate(letters, start=1):
        current = apply_letter(current, i)
        new_rank = rank(current)
        if new_rank < r:
            return position
        r = new_rank
    return None


def test_deletion_property():
    """
    Every non-reduced word admits a two-letter deletion with the same
    evaluation.  Exhaustive over S_5 words of length <= 8: it is enough to
    find the deletion at the first rank drop of a word, since any common
    suffix extends an equality of evaluations.
    """
    n = 5
    checked = 0

    def descend(prefix, prefix_evals):
        nonlocal checked
        current = prefix_evals[-1]
        if len(prefix) >= 1 and rank(current) < rank(prefix_evals[-2]):
            # first rank drop: some earlier letter must be deletable
            # together with the last one
            target = current
            found = False
            for cut in range(len(prefix) - 1):
                candidate = prefix_evals[cut]
                for i in prefix[cut + 1 : -1]:
                    candidate = apply_letter(candidate, i)
                if candidate == target:
                    found = True
                    break
            assert found, f"no deletion pair for {prefix}"
            checked += 1
            return
        if len(prefix) == 8:
            return
        for i in range(1, n):
            descend(prefix + (i,), prefix_evals + [apply_letter(current, i)])

    descend((), [identity(n)])
    assert checked > 0


def test_random_long_words_satisfy_deletion_property():
    import random

    rng = random.Random(20260810)
    n = 5
    for _ in range(300):
        length = rng.choice([7, 8])
        letters = tuple(rng.randrange(1, n) for _ in range(length))
        if is_reduced(letters, n):
            continue
        target = evaluate_word(letters, n)
        assert any(
            evaluate_word(letters[:a] + letters[a + 1 : b] + letters[b + 1 :], n)
            == target
            for a in range(length)
            for b in range(a + 1, length)
        )


def test_descents_empty_only_for_identity():
    for n in range(1, 6):
        for w in involutions(n):
            assert (descents(w) == []) == (w == identity(n))


def test_word_serialization():
    assert parse_word("1,2,3,2") == (1, 2, 3, 2)
    assert parse_word("") == ()
    assert format_word((1, 2, 3, 2)) == "1,2,3,2"
    assert parse_word(format_word((4, 1))) == (4, 1)


def test_rank_matches_inversion_arithmetic():
    for n in range(8):
        for w in involutions(n):
            profile = rank_profile(w)
            assert profile.coxeter_length == inversion_count(w.word)
            assert 2 * profile.rank == profile.coxeter_length + profile.absolute_length
