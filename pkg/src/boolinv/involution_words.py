"""
Words acting on involutions: the right action of the adjacent-swap letters
on I(S_n), reduced involution words, and the rank/length calculus.

Letter i (1 <= i <= n-1) acts on an involution w by right multiplication
with the adjacent transposition s_i when s_i and w commute, and by
conjugation s_i w s_i otherwise.  Every involution arises from the identity
this way, and the minimal word length is the rank

    rank(w) = (inversions(w) + two_cycles(w)) / 2,

which grades the Bruhat order on involutions.

Words serialize as comma-separated letters, e.g. "1,2,3,2".
"""
from __future__ import annotations

from typing import Iterable, NamedTuple

from .permutations import Involution, ParseError, identity, inversions

Word = tuple[int, ...]

# all_reduced_words enumerates a tree with up to rank! leaves; cap the rank.
ALL_WORDS_MAX_RANK = 12


class ResourceLimitError(RuntimeError):
    """Raised when an exhaustive search would exceed its size guard."""


class RankProfile(NamedTuple):
    rank: int
    coxeter_length: int
    absolute_length: int


def apply_letter(w: Involution, i: int) -> Involution:
    """
    Act on w by letter i: w*s_i if s_i w s_i = w, otherwise s_i w s_i.
    The result is again an involution whose rank differs from w's by one.
    """
    n = w.n
    if not 1 <= i <= n - 1:
        raise ValueError(f"letter {i} out of range [1, {n - 1}]")
    word = list(w.word)
    a, b = word[i - 1], word[i]
    # s_i w s_i swaps the values i, i+1 and the positions i, i+1.
    conj = word[:]
    conj[i - 1], conj[i] = b, a
    for pos, v in enumerate(conj):
        if v == i:
            conj[pos] = i + 1
        elif v == i + 1:
            conj[pos] = i
    if conj == word:
        word[i - 1], word[i] = b, a
        return Involution(tuple(word))
    return Involution(tuple(conj))


def evaluate_word(letters: Iterable[int], n: int) -> Involution:
    """Fold apply_letter over the letters, starting from the identity of S_n."""
    w = identity(n)
    for i in letters:
        w = apply_letter(w, i)
    return w


def rank_profile(w: Involution) -> RankProfile:
    """
    Rank, Coxeter length (inversion count) and absolute length (number of
    2-cycles) of an involution.  The rank is their half-sum, always exact.
    """
    length = inversions(w)[0]
    two_cycles = sum(1 for i, v in enumerate(w.word, start=1) if v > i)
    if (length + two_cycles) % 2:
        raise AssertionError(f"odd length+absolute-length for {w.word}")
    return RankProfile((length + two_cycles) // 2, length, two_cycles)


def rank(w: Involution) -> int:
    return rank_profile(w).rank


def is_reduced(letters: Iterable[int], n: int) -> bool:
    """A word is reduced iff its length equals the rank of its evaluation."""
    letters = tuple(letters)
    return len(letters) == rank(evaluate_word(letters, n))


def descents(w: Involution) -> list[int]:
    """Letters whose action lowers the rank of w by one."""
    r = rank(w)
    return [i for i in range(1, w.n) if rank(apply_letter(w, i)) == r - 1]


def reduced_word(w: Involution) -> Word:
    """
    A canonical reduced word for w: repeatedly peel off the smallest
    rank-lowering letter.  The result evaluates back to w and has length
    rank(w).
    """
    letters = []
    current = w
    r = rank(current)
    while r > 0:
        for i in range(1, current.n):
            lowered = apply_letter(current, i)
            if rank(lowered) == r - 1:
                letters.append(i)
                current = lowered
                r -= 1
                break
        else:
            raise AssertionError(f"no descent found for {current.word}")
    letters.reverse()
    return tuple(letters)


def all_reduced_words(w: Involution) -> set[Word]:
    """
    Every reduced word for w, by depth-first search over rank-lowering
    letters.  Guarded: refuses ranks above ALL_WORDS_MAX_RANK.
    """
    r = rank(w)
    if r > ALL_WORDS_MAX_RANK:
        raise ResourceLimitError(f"rank {r} exceeds guard {ALL_WORDS_MAX_RANK}")
    results: set[Word] = set()

    def descend(current: Involution, suffix: tuple[int, ...]):
        if current == identity(current.n):
            results.add(tuple(reversed(suffix)))
            return
        for i in descents(current):
            descend(apply_letter(current, i), suffix + (i,))

    descend(w, ())
    return results


def support(w: Involution) -> frozenset[int]:
    """
    The letter set shared by every reduced word of w; equally the set of
    letters i whose single-letter involution lies below w in Bruhat order.
    """
    return frozenset(reduced_word(w))


def format_word(letters: Iterable[int]) -> str:
    return ",".join(str(i) for i in letters)


def parse_word(text: str) -> Word:
    text = text.strip()
    if text == "":
        return ()
    letters = []
    for pos, token in enumerate(text.split(","), start=1):
        token = token.strip()
        if token == "":
            raise ParseError(f"empty token at position {pos}")
        try:
            letters.append(int(token))
        except ValueError:
            raise ParseError(f"bad token {token!r} at position {pos}") from None
    return tuple(letters)
