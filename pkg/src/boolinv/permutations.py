"""
Permutations and involutions of [n] = {1, ..., n} in one-line notation.

A permutation w is stored as the tuple (w(1), ..., w(n)); all indices and
values are 1-based, matching the usual combinatorial conventions.  The empty
permutation (n = 0) is legal and acts as the identity of S_0.

Text form: a digit string like "5764132" when n <= 9, otherwise
comma-separated values like "10,2,3,4,5,6,7,8,9,1".  `parse_permutation` and
`format_permutation` round-trip.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import NamedTuple, Sequence


class ParseError(ValueError):
    """Raised when a textual permutation/path/window cannot be parsed."""


@dataclass(frozen=True, eq=False)
class Permutation:
    """A bijection of [n], held as the one-line word (w(1), ..., w(n))."""

    word: tuple[int, ...]

    def __post_init__(self):
        word = tuple(self.word)
        object.__setattr__(self, "word", word)
        if sorted(word) != list(range(1, len(word) + 1)):
            raise ValueError(f"not a permutation of [{len(word)}]: {word}")

    @property
    def n(self) -> int:
        return len(self.word)

    def __call__(self, i: int) -> int:
        """Apply the permutation to i, 1-based."""
        if not 1 <= i <= self.n:
            raise ValueError(f"index {i} out of range [1, {self.n}]")
        return self.word[i - 1]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self.word == other.word

    def __hash__(self) -> int:
        return hash(self.word)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({format_permutation(self)!r})"

    def is_involution(self) -> bool:
        return all(self.word[v - 1] == i + 1 for i, v in enumerate(self.word))


@dataclass(frozen=True, eq=False, repr=False)
class Involution(Permutation):
    """A self-inverse permutation: every cycle is a 2-cycle or a fixed point."""

    def __post_init__(self):
        super().__post_init__()
        if not self.is_involution():
            raise ValueError(f"not self-inverse: {self.word}")


class CycleDecomposition(NamedTuple):
    """2-cycles and fixed points of an involution; together they cover [n]."""

    two_cycles: frozenset[frozenset[int]]
    fixed_points: frozenset[int]


class ExcedanceProfile(NamedTuple):
    """The partition of [n] into excedances, deficiencies and fixed points."""

    excedances: frozenset[int]
    deficiencies: frozenset[int]
    fixed: frozenset[int]


def identity(n: int) -> Involution:
    return Involution(tuple(range(1, n + 1)))


def transposition(n: int, i: int, j: int) -> Involution:
    """The transposition (i, j) in S_n, 1-based."""
    if not (1 <= i <= n and 1 <= j <= n and i != j):
        raise ValueError(f"bad transposition ({i},{j}) in S_{n}")
    word = list(range(1, n + 1))
    word[i - 1], word[j - 1] = j, i
    return Involution(tuple(word))


def parse_permutation(text: str) -> Permutation:
    """
    Parse one-line notation: either a digit string (n <= 9 only) or
    comma-separated integers.

    >>> parse_permutation("5764132").word
    (5, 7, 6, 4, 1, 3, 2)
    >>> parse_permutation("10,2,3,4,5,6,7,8,9,1")(1)
    10
    """
    text = text.strip()
    if text == "":
        raise ParseError("empty permutation text")
    if "," in text:
        values = _parse_int_tokens(text)
    else:
        values = []
        for ch in text:
            if ch not in "123456789":
                raise ParseError(f"bad character {ch!r} in digit string {text!r}")
            values.append(int(ch))
    return _as_permutation(values)


def _parse_int_tokens(text: str) -> list[int]:
    values = []
    for pos, token in enumerate(text.split(","), start=1):
        token = token.strip()
        if token == "":
            raise ParseError(f"empty token at position {pos}")
        try:
            values.append(int(token))
        except ValueError:
            raise ParseError(f"bad token {token!r} at position {pos}") from None
    return values


def _as_permutation(values: Sequence[int]) -> Permutation:
    n = len(values)
    seen = set()
    for v in values:
        if not 1 <= v <= n:
            raise ParseError(f"value {v} out of range [1, {n}]")
        if v in seen:
            raise ParseError(f"duplicate value {v}")
        seen.add(v)
    word = tuple(values)
    perm = Permutation(word)
    if perm.is_involution():
        return Involution(word)
    return perm


def format_permutation(w: Permutation) -> str:
    """One-line text form; digit string for n <= 9, else comma-separated."""
    if w.n <= 9:
        return "".join(str(v) for v in w.word)
    return ",".join(str(v) for v in w.word)


def to_json(w: Permutation) -> str:
    return json.dumps({"n": w.n, "word": list(w.word)}, sort_keys=True)


def from_json(text: str) -> Permutation:
    data = json.loads(text)
    return _as_permutation(list(data["word"]))


def inversions(w: Permutation) -> tuple[int, list[tuple[int, int]]]:
    """
    All pairs (i, j) with i < j and w(i) > w(j), in lexicographic order,
    together with their count.  The count equals the Coxeter length of w.

    >>> inversions(parse_permutation("321"))[0]
    3
    """
    pairs = [
        (i, j)
        for i in range(1, w.n + 1)
        for j in range(i + 1, w.n + 1)
        if w.word[i - 1] > w.word[j - 1]
    ]
    return len(pairs), pairs


def excedance_profile(w: Permutation) -> ExcedanceProfile:
    """Indices i with w(i) > i, w(i) < i and w(i) = i, respectively."""
    exc, defi, fix = set(), set(), set()
    for i, v in enumerate(w.word, start=1):
        (exc if v > i else defi if v < i else fix).add(i)
    return ExcedanceProfile(frozenset(exc), frozenset(defi), frozenset(fix))


def cycle_decomposition(w: Involution) -> CycleDecomposition:
    """Split an involution into its 2-cycles and fixed points."""
    if not isinstance(w, Involution):
        w = Involution(w.word)
    cycles = set()
    fixed = set()
    for i, v in enumerate(w.word, start=1):
        if v == i:
            fixed.add(i)
        else:
            cycles.add(frozenset((i, v)))
    return CycleDecomposition(frozenset(cycles), frozenset(fixed))


def compose(u: Permutation, v: Permutation) -> Permutation:
    """The product u*v acting as (u*v)(i) = u(v(i))."""
    if u.n != v.n:
        raise ValueError(f"size mismatch: {u.n} vs {v.n}")
    return _as_permutation([u.word[x - 1] for x in v.word])


def inverse(w: Permutation) -> Permutation:
    inv = [0] * w.n
    for i, v in enumerate(w.word, start=1):
        inv[v - 1] = i
    return _as_permutation(inv)


def conjugate(w: Permutation, t: tuple[int, int]) -> Permutation:
    """Conjugate w by the transposition t = (i, j): returns t*w*t."""
    s = transposition(w.n, *t)
    return compose(s, compose(w, s))
