from itertools import permutations as itertools_permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from boolinv.counting import involutions
from boolinv.involution_words import rank_profile
from boolinv.permutations import (
    CycleDecomposition,
    Involution,
    ParseError,
    Permutation,
    compose,
    conjugate,
    cycle_decomposition,
    excedance_profile,
    format_permutation,
    from_json,
    identity,
    inverse,
    inversions,
    parse_permutation,
    to_json,
    transposition,
)
from oracles import inversion_count


def test_parse_worked_example():
    w = parse_permutation("5764132")
    assert w.word == (5, 7, 6, 4, 1, 3, 2)
    assert w(1) == 5 and w(7) == 2
    assert isinstance(w, Involution)


def test_parse_identity_and_comma_form():
    assert parse_permutation("1").word == (1,)
    big = parse_permutation("10,2,3,4,5,6,7,8,9,1")
    assert big.word == (10, 2, 3, 4, 5, 6, 7, 8, 9, 1)
    assert big == transposition(10, 1, 10)


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("121", "duplicate value 1"),
        ("3,3,1", "duplicate value 3"),
        ("1,4,2", "value 4 out of range"),
        ("0", "bad character '0'"),
        ("1,,2", "empty token at position 2"),
        ("1,x,2", "bad token 'x'"),
        ("", "empty"),
    ],
)
def test_parse_errors_name_the_offender(text, fragment):
    with pytest.raises(ParseError, match=fragment.replace("(", "\\(")):
        parse_permutation(text)


def test_format_round_trips():
    for text in ["1", "4321", "5764132", "10,2,3,4,5,6,7,8,9,1"]:
        w = parse_permutation(text)
        assert parse_permutation(format_permutation(w)) == w


@given(st.permutations(list(range(1, 9))))
def test_parse_format_roundtrip_random(word):
    w = Permutation(tuple(word))
    assert parse_permutation(format_permutation(w)).word == w.word
    assert from_json(to_json(w)).word == w.word


def test_involution_rejects_non_involution():
    with pytest.raises(ValueError, match="self-inverse"):
        Involution((2, 3, 1))


def test_inversions_examples():
    assert inversions(identity(5)) == (0, [])
    assert inversions(parse_permutation("321"))[0] == 3
    count, pairs = inversions(parse_permutation("3412"))
    assert count == inversion_count((3, 4, 1, 2)) == 4
    assert pairs == sorted(pairs)


def test_inversions_against_oracle():
    for word in itertools_permutations(range(1, 7)):
        assert inversions(Permutation(word))[0] == inversion_count(word)


def test_excedance_profile_examples():
    assert excedance_profile(identity(4)) == (frozenset(), frozenset(), frozenset({1, 2, 3, 4}))
    exc, defi, fix = excedance_profile(parse_permutation("4321"))
    assert (exc, defi, fix) == ({1, 2}, {3, 4}, frozenset())
    exc, defi, fix = excedance_profile(parse_permutation("5764132"))
    assert exc == {1, 2, 3} and defi == {5, 6, 7} and fix == {4}


def test_excedance_profile_partitions():
    for word in itertools_permutations(range(1, 7)):
        exc, defi, fix = excedance_profile(Permutation(word))
        assert exc | defi | fix == set(range(1, 7))
        assert sum(map(len, (exc, defi, fix))) == 6
    for n in range(10):
        for w in involutions(n):
            exc, defi, fix = excedance_profile(w)
            assert len(exc) + len(defi) + len(fix) == n


def test_cycle_decomposition_examples():
    assert cycle_decomposition(identity(3)) == CycleDecomposition(
        frozenset(), frozenset({1, 2, 3})
    )
    cycles, fixed = cycle_decomposition(parse_permutation("4321"))
    assert cycles == {frozenset({1, 4}), frozenset({2, 3})} and fixed == frozenset()
    cycles, fixed = cycle_decomposition(parse_permutation("5764132"))
    assert cycles == {frozenset({1, 5}), frozenset({2, 7}), frozenset({3, 6})}
    assert fixed == {4}


def test_cycle_count_equals_excedances():
    for w in involutions(7):
        assert len(cycle_decomposition(w).two_cycles) == len(
            excedance_profile(w).excedances
        )


def test_group_operations():
    w = parse_permutation("35142")
    assert compose(w, inverse(w)) == identity(5)
    assert compose(inverse(w), w) == identity(5)
    assert compose(parse_permutation("21"), parse_permutation("21")) == identity(2)
    assert conjugate(parse_permutation("1324"), (1, 2)) == parse_permutation("3214")
    with pytest.raises(ValueError, match="size mismatch"):
        compose(identity(3), identity(4))


def test_compose_associative():
    words = [(2, 1, 3), (3, 1, 2), (1, 3, 2)]
    u, v, w = (Permutation(x) for x in words)
    assert compose(compose(u, v), w) == compose(u, compose(v, w))


def test_length_rank_excedance_relation():
    # inversions = 2*rank - excedances on involutions
    for n in range(8):
        for w in involutions(n):
            profile = rank_profile(w)
            exc = len(excedance_profile(w).excedances)
            assert inversions(w)[0] == 2 * profile.rank - exc


def test_empty_permutation_is_legal():
    e = identity(0)
    assert e.n == 0 and e.word == ()
    assert inversions(e) == (0, [])
