"""
Boolean involutions in the Bruhat order on involutions.

Decide whether the principal order ideal below an involution of a symmetric
or hyperoctahedral group is a Boolean lattice, build the ideals themselves,
translate Boolean involutions to restricted Motzkin paths, and count them
exactly by exhaustive search, by recurrence, and by generating function.
"""

from .boolean import (
    BooleanVerdict,
    connected_components,
    is_boolean,
    long_crossing_pairs,
    repeat_free_word,
    restrict,
)
from .counting import cross_validate, involutions, signed_involutions
from .ideals import bruhat_leq, dot_export, hasse_edges, ideal, is_boolean_lattice
from .involution_words import (
    all_reduced_words,
    apply_letter,
    evaluate_word,
    is_reduced,
    rank,
    rank_profile,
    reduced_word,
    support,
)
from .motzkin import (
    MotzkinPath,
    count_restricted,
    involution_to_path,
    is_restricted,
    path_to_involution,
)
from .patterns import (
    FORBIDDEN_PATTERNS,
    SIGNED_FORBIDDEN_PATTERNS,
    avoids_all,
    contains,
    contains_signed,
    is_induced,
    occurrences,
)
from .permutations import (
    Involution,
    Permutation,
    compose,
    conjugate,
    cycle_decomposition,
    excedance_profile,
    format_permutation,
    identity,
    inverse,
    inversions,
    parse_permutation,
)
from .signed import (
    SignedInvolution,
    SignedPermutation,
    apply_letter_signed,
    embed,
    format_signed,
    is_boolean_signed,
    parse_signed,
)

__version__ = "0.1.0"

__all__ = [
    "BooleanVerdict",
    "FORBIDDEN_PATTERNS",
    "Involution",
    "MotzkinPath",
    "Permutation",
    "SIGNED_FORBIDDEN_PATTERNS",
    "SignedInvolution",
    "SignedPermutation",
    "all_reduced_words",
    "apply_letter",
    "apply_letter_signed",
    "avoids_all",
    "bruhat_leq",
    "compose",
    "conjugate",
    "connected_components",
    "contains",
    "contains_signed",
    "count_restricted",
    "cross_validate",
    "cycle_decomposition",
    "dot_export",
    "embed",
    "evaluate_word",
    "excedance_profile",
    "format_permutation",
    "format_signed",
    "hasse_edges",
    "ideal",
    "identity",
    "inverse",
    "inversions",
    "involution_to_path",
    "involutions",
    "is_boolean",
    "is_boolean_lattice",
    "is_boolean_signed",
    "is_induced",
    "is_reduced",
    "is_restricted",
    "long_crossing_pairs",
    "occurrences",
    "parse_permutation",
    "parse_signed",
    "path_to_involution",
    "rank",
    "rank_profile",
    "reduced_word",
    "repeat_free_word",
    "restrict",
    "signed_involutions",
    "support",
]
