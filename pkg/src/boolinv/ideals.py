"""
Principal order ideals in the Bruhat order on involutions.

Bruhat comparison uses the classical dominance criterion on prefix rank
matrices, so no reflection set is ever materialized.  The ideal below an
involution w is generated from one reduced involution word of w: evaluating
every subword yields exactly the involutions below w.

Boolean-lattice certification maps each element to the set of atoms below
it; the ideal is a Boolean lattice iff that map is injective onto the full
power set of the atom set.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import IO

from .involution_words import (
    ResourceLimitError,
    apply_letter,
    rank,
    reduced_word,
)
from .permutations import Involution, Permutation, format_permutation, identity

IDEAL_MAX_RANK = 20


def prefix_rank_table(w: Permutation) -> tuple[tuple[int, ...], ...]:
    """R[i][j] = #{k <= i : w(k) >= j} for 0 <= i <= n, 1 <= j <= n."""
    n = w.n
    rows = [tuple([0] * (n + 1))]
    counts = [0] * (n + 1)
    for i in range(1, n + 1):
        v = w.word[i - 1]
        for j in range(1, v + 1):
            counts[j] += 1
        rows.append(tuple(counts))
    return tuple(rows)


def bruhat_leq(u: Permutation, w: Permutation) -> bool:
    """
    Dominance test for u <= w in the Bruhat order of S_n: every prefix of u
    must contain at most as many large values as the same prefix of w.
    """
    if u.n != w.n:
        raise ValueError(f"size mismatch: {u.n} vs {w.n}")
    ru, rw = prefix_rank_table(u), prefix_rank_table(w)
    return all(
        ru[i][j] <= rw[i][j] for i in range(1, u.n + 1) for j in range(1, u.n + 1)
    )


def _dominated(ru, rw, n: int) -> bool:
    for i in range(1, n + 1):
        rui, rwi = ru[i], rw[i]
        for j in range(1, n + 1):
            if rui[j] > rwi[j]:
                return False
    return True


@dataclass(frozen=True)
class IdealPoset:
    """
    The involutions below `root`, rank-sorted, with the full order relation.

    `leq[a][b]` holds iff elements[a] <= elements[b].  The identity is the
    unique minimum and `root` the unique maximum.
    """

    root: Involution
    elements: tuple[Involution, ...]
    ranks: tuple[int, ...]
    leq: tuple[tuple[bool, ...], ...] = field(repr=False)

    def __len__(self) -> int:
        return len(self.elements)

    def index(self, w: Involution) -> int:
        return self.elements.index(w)

    def rank_counts(self) -> list[int]:
        """Number of elements of each rank, from 0 up to rank(root)."""
        counts = [0] * (self.ranks[-1] + 1 if self.elements else 1)
        for r in self.ranks:
            counts[r] += 1
        return counts


def subword_closure(w: Involution) -> set[Involution]:
    """
    Evaluations of all subwords of one reduced word of w, computed by a
    left-to-right closure: after consuming each letter, keep both the old
    evaluations (letter skipped) and their images (letter taken).
    """
    reached: set[Involution] = {identity(w.n)}
    for letter in reduced_word(w):
        reached |= {apply_letter(u, letter) for u in reached}
    return reached


def ideal(w: Involution) -> IdealPoset:
    """The principal order ideal below w in the Bruhat order on involutions."""
    r = rank(w)
    if r > IDEAL_MAX_RANK:
        raise ResourceLimitError(f"rank {r} exceeds ideal guard {IDEAL_MAX_RANK}")
    elements = sorted(subword_closure(w), key=lambda u: (rank(u), u.word))
    ranks = tuple(rank(u) for u in elements)
    tables = [prefix_rank_table(u) for u in elements]
    n = w.n
    size = len(elements)
    leq_rows = []
    for a in range(size):
        row = [False] * size
        for b in range(size):
            if ranks[a] < ranks[b]:
                row[b] = _dominated(tables[a], tables[b], n)
            elif a == b:
                row[b] = True
        leq_rows.append(tuple(row))
    poset = IdealPoset(w, tuple(elements), ranks, tuple(leq_rows))
    if elements[0] != identity(n) or elements[-1] != w:
        raise AssertionError(f"ideal of {w.word} lost its extremes")
    return poset


def is_boolean_lattice(poset: IdealPoset) -> bool:
    """
    Whether the ideal is a Boolean lattice: sending each element to the set
    of atoms (rank-one elements) below it must be injective and cover every
    subset of the atoms.
    """
    atoms = [a for a, r in enumerate(poset.ranks) if r == 1]
    atom_sets = {
        frozenset(a for a in atoms if poset.leq[a][b]) for b in range(len(poset))
    }
    return len(atom_sets) == len(poset) and len(poset) == 2 ** len(atoms)


def hasse_edges(poset: IdealPoset) -> list[tuple[Involution, Involution]]:
    """
    Cover relations as (lower, upper) pairs.  The poset is graded by rank,
    so covers are exactly the comparable pairs one rank apart.
    """
    edges = []
    for a in range(len(poset)):
        for b in range(len(poset)):
            if poset.ranks[b] == poset.ranks[a] + 1 and poset.leq[a][b]:
                edges.append((poset.elements[a], poset.elements[b]))
    return edges


def dot_export(poset: IdealPoset, sink: IO[str] | None = None) -> str:
    """
    Render the Hasse diagram as Graphviz DOT, nodes labelled by one-line
    word and rank, clustered by rank.  Deterministic for a fixed input.
    """
    lines = ["digraph ideal {", "  rankdir=BT;", '  node [shape=box, fontname="monospace"];']
    by_rank: dict[int, list[str]] = {}
    for u, r in zip(poset.elements, poset.ranks):
        by_rank.setdefault(r, []).append(format_permutation(u))
    for r in sorted(by_rank):
        lines.append("  { rank=same;")
        for name in by_rank[r]:
            lines.append(f'    "{name}" [label="{name}\\nrank {r}"];')
        lines.append("  }")
    for lower, upper in hasse_edges(poset):
        lines.append(
            f'  "{format_permutation(lower)}" -> "{format_permutation(upper)}";'
        )
    lines.append("}")
    text = "\n".join(lines) + "\n"
    if sink is not None:
        sink.write(text)
    return text


def _poly_mul(p: list[int], q: list[int]) -> list[int]:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def product_decomposition_check(w: Involution) -> bool:
    """
    Verify that the ideal of w factors over the connected components of w:
    the sizes multiply and the rank generating functions multiply.
    """
    from .boolean import connected_components, restrict

    whole = ideal(w)
    gf = [1]
    size = 1
    for lo, hi in connected_components(w).components:
        part = ideal(Involution(restrict(w, range(lo, hi + 1)).word))
        size *= len(part)
        gf = _poly_mul(gf, part.rank_counts())
    while len(gf) > 1 and gf[-1] == 0:
        gf.pop()
    return size == len(whole) and gf == whole.rank_counts()
