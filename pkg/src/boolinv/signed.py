"""
Signed permutations: bijections of {-n..-1, 1..n} commuting with negation,
stored by the window (pi(1), ..., pi(n)).

A signed permutation embeds into the symmetric group on 2n points by
relabelling -n, ..., -1, 1, ..., n order-preservingly to 1, ..., 2n; the
image is centrally symmetric.  A signed involution is Boolean precisely
when its embedded image is, which reduces the type-B question to the
classical machinery; the equivalent signed-pattern criterion uses the
sixteen-window list from `patterns.SIGNED_FORBIDDEN_PATTERNS`.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

from .boolean import (
    BooleanVerdict,
    InvariantViolationError,
    has_long_crossing,
    long_crossing_pairs,
    repeat_free_word,
)
from .patterns import SIGNED_FORBIDDEN_PATTERNS, contains_signed
from .permutations import Involution, ParseError, Permutation

SIGNED_METHODS = ("embedding", "signed_patterns", "all")


@dataclass(frozen=True, eq=False)
class SignedPermutation:
    """A permutation pi of [+-n] with pi(-i) = -pi(i), held by its window."""

    window: tuple[int, ...]

    def __post_init__(self):
        window = tuple(self.window)
        object.__setattr__(self, "window", window)
        if sorted(abs(v) for v in window) != list(range(1, len(window) + 1)):
            raise ValueError(f"not a signed permutation window: {window}")

    @property
    def n(self) -> int:
        return len(self.window)

    def __call__(self, i: int) -> int:
        if i == 0 or abs(i) > self.n:
            raise ValueError(f"index {i} out of range for [+-{self.n}]")
        return self.window[i - 1] if i > 0 else -self.window[-i - 1]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SignedPermutation) and self.window == other.window

    def __hash__(self) -> int:
        return hash(("signed", self.window))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({format_signed(self)!r})"

    def is_involution(self) -> bool:
        return all(self(self(i)) == i for i in range(1, self.n + 1))


@dataclass(frozen=True, eq=False, repr=False)
class SignedInvolution(SignedPermutation):
    def __post_init__(self):
        super().__post_init__()
        if not self.is_involution():
            raise ValueError(f"not self-inverse: {self.window}")


@dataclass(frozen=True)
class EmbeddedPermutation:
    """Image of a signed permutation in S_2n; centrally symmetric."""

    perm: Permutation

    def __post_init__(self):
        m = self.perm.n
        if m % 2 or any(
            self.perm.word[m - i] != m + 1 - self.perm.word[i - 1]
            for i in range(1, m + 1)
        ):
            raise ValueError(f"not centrally symmetric: {self.perm.word}")

    @property
    def n(self) -> int:
        return self.perm.n // 2


def signed_identity(n: int) -> SignedInvolution:
    return SignedInvolution(tuple(range(1, n + 1)))


def parse_signed(text: str) -> SignedPermutation:
    """Comma-separated signed integers, e.g. "2,1,-3"."""
    values = []
    for pos, token in enumerate(text.strip().split(","), start=1):
        token = token.strip()
        if token == "":
            raise ParseError(f"empty token at position {pos}")
        try:
            values.append(int(token))
        except ValueError:
            raise ParseError(f"bad token {token!r} at position {pos}") from None
    n = len(values)
    seen = set()
    for v in values:
        if v == 0 or abs(v) > n:
            raise ParseError(f"value {v} out of range [+-{n}]")
        if abs(v) in seen:
            raise ParseError(f"duplicate absolute value {abs(v)}")
        seen.add(abs(v))
    window = tuple(values)
    candidate = SignedPermutation(window)
    return SignedInvolution(window) if candidate.is_involution() else candidate


def format_signed(w: SignedPermutation) -> str:
    return ",".join(str(v) for v in w.window)


def signed_to_json(w: SignedPermutation) -> str:
    return json.dumps({"n": w.n, "window": list(w.window)}, sort_keys=True)


def compose_signed(u: SignedPermutation, v: SignedPermutation) -> SignedPermutation:
    if u.n != v.n:
        raise ValueError(f"size mismatch: {u.n} vs {v.n}")
    window = tuple(u(v(i)) for i in range(1, u.n + 1))
    candidate = SignedPermutation(window)
    return SignedInvolution(window) if candidate.is_involution() else candidate


def signed_generator(n: int, i: int) -> SignedPermutation:
    """Generator i of the signed permutation group: i = 0 negates the first
    letter, i >= 1 swaps letters i and i+1 on both sides of zero."""
    if not 0 <= i <= n - 1:
        raise ValueError(f"generator {i} out of range [0, {n - 1}]")
    window = list(range(1, n + 1))
    if i == 0:
        window[0] = -1
    else:
        window[i - 1], window[i] = i + 1, i
    return SignedPermutation(tuple(window))


def embed(w: SignedPermutation) -> EmbeddedPermutation:
    """
    The permutation of [2n] induced by w under the relabelling
    -n, ..., -1, 1, ..., n -> 1, ..., 2n.
    """
    n = w.n

    def relabel(v: int) -> int:
        return v + n + 1 if v < 0 else v + n

    word = []
    for p in range(1, 2 * n + 1):
        i = p - n - 1 if p <= n else p - n
        word.append(relabel(w(i)))
    perm = Permutation(tuple(word))
    if perm.is_involution():
        perm = Involution(perm.word)
    return EmbeddedPermutation(perm)


def apply_letter_signed(w: SignedInvolution, i: int) -> SignedInvolution:
    """
    Act on a signed involution by generator letter i (0-based): multiply on
    the right when the generator commutes with w, otherwise conjugate.
    """
    if not w.is_involution():
        raise ValueError(f"not an involution: {w.window}")
    s = signed_generator(w.n, i)
    conj = compose_signed(s, compose_signed(w, s))
    if conj == w:
        result = compose_signed(w, s)
    else:
        result = conj
    return SignedInvolution(result.window)


def is_boolean_signed(w: SignedInvolution, method: str = "embedding") -> BooleanVerdict:
    """
    Booleanness of a signed involution.  "embedding" decides on the
    embedded 2n-point involution; "signed_patterns" checks the sixteen
    forbidden signed windows; "all" cross-checks both routes.

    The verdict's long-crossing pair and repeat-free word refer to the
    embedded image; the pattern witness is a signed pattern.
    """
    if method not in SIGNED_METHODS:
        raise ValueError(f"unknown method {method!r}; expected one of {SIGNED_METHODS}")
    if not w.is_involution():
        raise ValueError(f"not an involution: {w.window}")
    image = Involution(embed(w).perm.word)
    if method == "all":
        by_image = not has_long_crossing(image)
        by_patterns = all(
            contains_signed(w, p) is None for p in SIGNED_FORBIDDEN_PATTERNS
        )
        if by_image != by_patterns:
            raise InvariantViolationError(
                f"embedding says {by_image}, signed patterns say {by_patterns} "
                f"for {w.window}"
            )
        verdict = by_image
    elif method == "embedding":
        verdict = not has_long_crossing(image)
    else:
        verdict = all(contains_signed(w, p) is None for p in SIGNED_FORBIDDEN_PATTERNS)

    if verdict:
        return BooleanVerdict(True, word=repeat_free_word(image))
    for p in SIGNED_FORBIDDEN_PATTERNS:
        occ = contains_signed(w, p)
        if occ is not None:
            return BooleanVerdict(
                False,
                long_crossing_pair=long_crossing_pairs(image)[0],
                pattern=p,
                occurrence=occ,
            )
    raise AssertionError(f"non-Boolean {w.window} contains no forbidden signed pattern")
