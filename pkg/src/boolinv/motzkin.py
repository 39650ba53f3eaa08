"""
Motzkin paths, and the correspondence between involutions and paths that
restricts to a bijection on the Boolean involutions.

An involution maps to the path whose k-th step is flat, up or down
according as k is a fixed point, an excedance or a deficiency.  The image
of the Boolean involutions is exactly the "restricted" paths: height at
most 2 with every flat step at height at most 1.  Inverting pairs the m-th
up step with the m-th down step.

Path text form: a string over {U, F, D}, e.g. "UUDUDUDDF".
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .permutations import Involution, ParseError

STEP_RISE = {"U": 1, "F": 0, "D": -1}


class RestrictionProfile(NamedTuple):
    """Height extremes that decide membership in the restricted family."""

    max_height: int
    max_flat_level: int

    @property
    def restricted(self) -> bool:
        return self.max_height <= 2 and self.max_flat_level <= 1


@dataclass(frozen=True)
class MotzkinPath:
    """A lattice path staying weakly above the axis and ending on it."""

    steps: str

    def __post_init__(self):
        h = 0
        for k, step in enumerate(self.steps, start=1):
            if step not in STEP_RISE:
                raise ValueError(f"bad step {step!r} at position {k}")
            h += STEP_RISE[step]
            if h < 0:
                raise ValueError(f"path dips below the axis at step {k}")
        if h != 0:
            raise ValueError(f"path ends at height {h}, not 0")

    @property
    def n(self) -> int:
        return len(self.steps)

    def heights(self) -> tuple[int, ...]:
        """h_0 = 0, h_1, ..., h_n after each step."""
        out = [0]
        for step in self.steps:
            out.append(out[-1] + STEP_RISE[step])
        return tuple(out)


def parse_path(text: str) -> MotzkinPath:
    text = text.strip().upper()
    for k, ch in enumerate(text, start=1):
        if ch not in STEP_RISE:
            raise ParseError(f"bad step {ch!r} at position {k}")
    try:
        return MotzkinPath(text)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def format_path(path: MotzkinPath) -> str:
    return path.steps


def involution_to_path(w: Involution) -> MotzkinPath:
    """Record fixed points, excedances and deficiencies as F, U, D steps."""
    steps = []
    for i, v in enumerate(w.word, start=1):
        steps.append("F" if v == i else "U" if v > i else "D")
    return MotzkinPath("".join(steps))


def path_to_involution(path: MotzkinPath) -> Involution:
    """
    Invert the step encoding on a restricted path: flats become fixed
    points and the m-th up step pairs with the m-th down step.  The result
    is always a Boolean involution.
    """
    violation = first_restriction_violation(path)
    if violation is not None:
        index, reason = violation
        raise ValueError(f"path not restricted: {reason} at step {index}")
    ups = [k for k, s in enumerate(path.steps, start=1) if s == "U"]
    downs = [k for k, s in enumerate(path.steps, start=1) if s == "D"]
    word = list(range(1, path.n + 1))
    for u, d in zip(ups, downs):
        word[u - 1], word[d - 1] = d, u
    return Involution(tuple(word))


def restriction_profile(path: MotzkinPath) -> RestrictionProfile:
    heights = path.heights()
    max_flat = max(
        (heights[k] for k, s in enumerate(path.steps, start=1) if s == "F"),
        default=0,
    )
    return RestrictionProfile(max(heights), max_flat)


def is_restricted(path: MotzkinPath) -> bool:
    return restriction_profile(path).restricted


def first_restriction_violation(path: MotzkinPath) -> tuple[int, str] | None:
    """The first step breaking the restriction, with a description, or None."""
    h = 0
    for k, step in enumerate(path.steps, start=1):
        h += STEP_RISE[step]
        if h > 2:
            return k, "height above 2"
        if step == "F" and h > 1:
            return k, "flat step above level 1"
    return None


def axis_contacts(path: MotzkinPath) -> int:
    """Number of indices i in [n] with h_i = 0 (the origin does not count)."""
    return sum(1 for h in path.heights()[1:] if h == 0)


def rank_from_path(path: MotzkinPath) -> int:
    """Rank of the Boolean involution behind a restricted path: n minus the
    number of returns to the axis."""
    if not is_restricted(path):
        raise ValueError(f"path {path.steps!r} is not restricted")
    return path.n - axis_contacts(path)


def count_restricted(n: int) -> int:
    """
    Count restricted Motzkin paths of length n by dynamic programming over
    (position, height), heights capped at 2 and flats allowed below 2.
    """
    if n < 0:
        raise ValueError("negative length")
    state = [1, 0, 0]  # paths so far ending at height 0, 1, 2
    for _ in range(n):
        at0, at1, at2 = state
        state = [at0 + at1, at0 + at1 + at2, at1]
    return state[0]
