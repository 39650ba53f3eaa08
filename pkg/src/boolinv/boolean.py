"""
Deciding whether an involution has a Boolean principal order ideal.

Four equivalent criteria are implemented:

  * patterns       — w avoids 4321, 45312 and 456123;
  * long_crossing  — w has no pair (i, j) with i < j < w(j) and w(i) > j+1;
  * word           — the canonical reduced involution word of w has no
                     repeated letter;
  * poset          — the ideal below w passes the Boolean-lattice test.

The default is the long-crossing scan, the cheapest sound-and-complete
test.  Verdicts always carry witnesses: a repeat-free word when Boolean,
and both a long-crossing pair and a forbidden-pattern occurrence when not.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from . import ideals
from .involution_words import Word, evaluate_word, reduced_word
from .patterns import FORBIDDEN_PATTERNS, Occurrence, SignedPattern, contains
from .permutations import Involution, Permutation, format_permutation

METHODS = ("patterns", "long_crossing", "word", "poset", "all")


class InvariantViolationError(RuntimeError):
    """Two supposedly equivalent criteria disagreed; this is a bug."""


class ComponentPartition(NamedTuple):
    """Connected components of an involution, as disjoint intervals [lo, hi]."""

    components: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class BooleanVerdict:
    is_boolean: bool
    long_crossing_pair: tuple[int, int] | None = None
    pattern: Permutation | SignedPattern | None = None
    occurrence: Occurrence | None = None
    word: Word | None = None

    def to_json(self) -> str:
        payload: dict = {"is_boolean": self.is_boolean}
        payload["long_crossing_pair"] = (
            list(self.long_crossing_pair) if self.long_crossing_pair else None
        )
        if self.pattern is None:
            payload["pattern"] = None
        elif isinstance(self.pattern, SignedPattern):
            payload["pattern"] = ",".join(str(v) for v in self.pattern.window)
        else:
            payload["pattern"] = format_permutation(self.pattern)
        payload["occurrence"] = (
            {"positions": list(self.occurrence.positions), "values": list(self.occurrence.values)}
            if self.occurrence
            else None
        )
        payload["word"] = list(self.word) if self.word is not None else None
        return json.dumps(payload, sort_keys=True)


def connected_components(w: Involution) -> ComponentPartition:
    """
    Partition [n] by the transitive closure of the crossing relation: i and
    j are directly related when i < j and w(i) > w(j).  For involutions the
    classes are always intervals, returned sorted.
    """
    n = w.n
    parent = list(range(n + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if w.word[i - 1] > w.word[j - 1]:
                parent[find(i)] = find(j)
    classes: dict[int, list[int]] = {}
    for i in range(1, n + 1):
        classes.setdefault(find(i), []).append(i)
    intervals = sorted((members[0], members[-1]) for members in classes.values())
    for members in classes.values():
        if members != list(range(members[0], members[-1] + 1)):
            raise AssertionError(f"non-interval component {members} in {w.word}")
    return ComponentPartition(tuple(intervals))


def restrict(w: Permutation, positions: Iterable[int]) -> Permutation:
    """
    Keep w on the given positions and fix everything else.  Fails unless the
    moved positions map among themselves.
    """
    keep = set(positions)
    word = [w.word[i - 1] if i in keep else i for i in range(1, w.n + 1)]
    if sorted(word) != list(range(1, w.n + 1)):
        raise ValueError(f"restriction to {sorted(keep)} is not a permutation")
    perm = Permutation(tuple(word))
    return Involution(perm.word) if perm.is_involution() else perm


def long_crossing_pairs(w: Involution) -> list[tuple[int, int]]:
    """All (i, j) with i < j < w(j) and w(i) > j + 1, lexicographic."""
    n = w.n
    return [
        (i, j)
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
        if j < w.word[j - 1] and w.word[i - 1] > j + 1
    ]


def has_long_crossing(w: Involution) -> bool:
    """Linear-time emptiness test: scan excedances against the prefix max."""
    prefix_max = 0
    for j, v in enumerate(w.word, start=1):
        if v > j and prefix_max > j + 1:
            return True
        if v > prefix_max:
            prefix_max = v
    return False


def _first_forbidden_occurrence(w: Involution) -> tuple[Permutation, Occurrence] | None:
    for p in FORBIDDEN_PATTERNS:
        occ = contains(w, p)
        if occ is not None:
            return p, occ
    return None


def is_boolean(w: Involution, method: str = "long_crossing") -> BooleanVerdict:
    """
    Decide Booleanness of w by the chosen criterion and attach witnesses.
    Method "all" runs every criterion and raises on any disagreement.
    """
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")
    if method == "all":
        answers = {m: is_boolean(w, m).is_boolean for m in METHODS[:-1]}
        if len(set(answers.values())) != 1:
            raise InvariantViolationError(f"criteria disagree on {w.word}: {answers}")
        verdict = answers["long_crossing"]
    elif method == "patterns":
        verdict = _first_forbidden_occurrence(w) is None
    elif method == "long_crossing":
        verdict = not has_long_crossing(w)
    elif method == "word":
        letters = reduced_word(w)
        verdict = len(set(letters)) == len(letters)
    else:  # poset
        verdict = ideals.is_boolean_lattice(ideals.ideal(w))

    if verdict:
        return BooleanVerdict(True, word=repeat_free_word(w))
    pattern, occ = _first_forbidden_occurrence(w)
    return BooleanVerdict(
        False,
        long_crossing_pair=long_crossing_pairs(w)[0],
        pattern=pattern,
        occurrence=occ,
    )


def repeat_free_word(w: Involution) -> Word:
    """
    Build a repeat-free involution word for a Boolean w, component by
    component.  Within a component spanning [lo, hi] whose 2-cycles open at
    lo = i_1 < i_2 < ... < i_k, the word takes every letter lo..hi-1 except
    i_2, ..., i_k in increasing order, then appends i_2, ..., i_k.
    """
    pairs = long_crossing_pairs(w)
    if pairs:
        raise ValueError(f"{w.word} is not Boolean; long-crossing pair {pairs[0]}")
    letters: list[int] = []
    for lo, hi in connected_components(w).components:
        if lo == hi:
            continue
        openers = sorted(i for i in range(lo, hi + 1) if w.word[i - 1] > i)
        skip = set(openers[1:])
        letters.extend(i for i in range(lo, hi) if i not in skip)
        letters.extend(openers[1:])
    word = tuple(letters)
    if evaluate_word(word, w.n) != w:
        raise AssertionError(f"construction failed for {w.word}")
    return word
