"""
Counting Boolean involutions three independent ways: exhaustive search,
the linear recurrence, and coefficient extraction from the closed-form
generating functions.

Tables are plain dicts with exact integer values:

  * inversion/excedance counts:  {(n, inversions, excedances): count}
  * rank counts:                 {(n, rank): count}
  * totals:                      {n: count}

The recurrence route fills sizes n >= 4 from the three previous sizes;
rows below that, and the cells with few inversions or no excedances, come
from closed base formulas and small brute-forced seed rows.  All routes
must agree; `cross_validate` checks them against each other, against the
marginalization identities, and against the restricted Motzkin path count.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator

from .boolean import has_long_crossing
from .involution_words import ResourceLimitError
from .motzkin import count_restricted
from .permutations import Involution, inversions
from .series import inv_exc_series, rank_series, total_series
from .signed import SignedInvolution

MAX_STREAM_N = 14
MAX_SIGNED_STREAM_N = 7
MAX_BRUTE_N = 12
MAX_VALIDATE_N = 10

InvExcTable = dict[tuple[int, int, int], int]
RankTable = dict[tuple[int, int], int]
TotalTable = dict[int, int]


def involutions(n: int, shard: int = 0, num_shards: int = 1) -> Iterator[Involution]:
    """
    All involutions of S_n, lexicographic by one-line word, each exactly
    once.  With num_shards > 1 only every num_shards-th element (offset by
    shard) is yielded, so the shards partition the stream.
    """
    if n > MAX_STREAM_N:
        raise ResourceLimitError(f"n {n} exceeds stream guard {MAX_STREAM_N}")
    if not 0 <= shard < num_shards:
        raise ValueError(f"bad shard {shard}/{num_shards}")
    word = list(range(1, n + 1))

    def fill(free: tuple[int, ...]) -> Iterator[Involution]:
        if not free:
            yield Involution(tuple(word))
            return
        p = free[0]
        rest = free[1:]
        word[p - 1] = p
        yield from fill(rest)
        for k, q in enumerate(rest):
            word[p - 1], word[q - 1] = q, p
            yield from fill(rest[:k] + rest[k + 1 :])
            word[q - 1] = q
        word[p - 1] = p

    for index, w in enumerate(fill(tuple(range(1, n + 1)))):
        if index % num_shards == shard:
            yield w


def signed_involutions(
    n: int, shard: int = 0, num_shards: int = 1
) -> Iterator[SignedInvolution]:
    """
    All involutions among signed permutations of [+-n], in lexicographic
    window order, shardable like `involutions`.
    """
    if n > MAX_SIGNED_STREAM_N:
        raise ResourceLimitError(f"n {n} exceeds signed guard {MAX_SIGNED_STREAM_N}")
    if not 0 <= shard < num_shards:
        raise ValueError(f"bad shard {shard}/{num_shards}")
    window = [0] * n

    def fill(free: tuple[int, ...]) -> Iterator[SignedInvolution]:
        if not free:
            yield SignedInvolution(tuple(window))
            return
        p = free[0]
        rest = free[1:]
        candidates = sorted([-q for q in rest] + [-p, p] + list(rest))
        for v in candidates:
            window[p - 1] = v
            if abs(v) == p:
                yield from fill(rest)
            else:
                q = abs(v)
                window[q - 1] = p if v > 0 else -p
                yield from fill(tuple(r for r in rest if r != q))
                window[q - 1] = 0
        window[p - 1] = 0

    for index, w in enumerate(fill(tuple(range(1, n + 1)))):
        if index % num_shards == shard:
            yield w


def _brute_shard(args: tuple[int, int, int]) -> InvExcTable:
    n, shard, num_shards = args
    table: InvExcTable = {}
    for w in involutions(n, shard, num_shards):
        if has_long_crossing(w):
            continue
        length = inversions(w)[0]
        exc = sum(1 for i, v in enumerate(w.word, start=1) if v > i)
        key = (n, length, exc)
        table[key] = table.get(key, 0) + 1
    return table


def brute_inv_exc_counts(n_max: int, jobs: int = 1) -> InvExcTable:
    """
    Count Boolean involutions by (size, inversions, excedances) for every
    1 <= n <= n_max by filtering the involution stream.  With jobs > 1 the
    streams are sharded across processes and the partial tables summed.
    """
    if n_max > MAX_BRUTE_N:
        raise ResourceLimitError(f"n_max {n_max} exceeds brute guard {MAX_BRUTE_N}")
    pieces = [(n, shard, max(jobs, 1)) for n in range(1, n_max + 1) for shard in range(max(jobs, 1))]
    table: InvExcTable = {}
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            partials = list(pool.map(_brute_shard, pieces))
    else:
        partials = [_brute_shard(piece) for piece in pieces]
    for partial in partials:
        for key, value in partial.items():
            table[key] = table.get(key, 0) + value
    return table


def rank_counts_from_inv_exc(table: InvExcTable) -> RankTable:
    """Marginalize inversions and excedances to the rank (their half-sum)."""
    out: RankTable = {}
    for (n, length, exc), count in table.items():
        key = (n, (length + exc) // 2)
        out[key] = out.get(key, 0) + count
    return out


def totals_from_rank_counts(table: RankTable) -> TotalTable:
    out: TotalTable = {}
    for (n, _), count in table.items():
        out[n] = out.get(n, 0) + count
    return out


def brute_rank_counts(n_max: int, jobs: int = 1) -> RankTable:
    return rank_counts_from_inv_exc(brute_inv_exc_counts(n_max, jobs))


def brute_totals(n_max: int, jobs: int = 1) -> TotalTable:
    return totals_from_rank_counts(brute_rank_counts(n_max, jobs))


def _base_inv_exc(n: int, length: int, exc: int) -> int:
    """
    Closed forms covering sizes up to 3, inversion counts up to 2, and the
    no-excedance column; all other cells there vanish:
      (n, 0, 0) -> 1; (n, 1, 1) -> n-1; (n, 2, 2) -> (n^2-5n+6)/2; (3, 3, 1) -> 1.
    """
    if length == 0 and exc == 0:
        return 1
    if n >= 2 and length == 1 and exc == 1:
        return n - 1
    if n >= 4 and length == 2 and exc == 2:
        return (n * n - 5 * n + 6) // 2
    if (n, length, exc) == (3, 3, 1):
        return 1
    return 0


def recurrence_inv_exc_counts(n_max: int) -> InvExcTable:
    """
    Fill the inversion/excedance table by the six-term recurrence

      b(n,l,a) = b(n-1,l,a) + b(n-1,l-2,a) + b(n-2,l-1,a-1) - b(n-2,l-2,a)
                 + b(n-2,l-3,a-1) - b(n-3,l-3,a-1)

    valid for n >= 4, l >= 3, a >= 1, over the base cells of
    `_base_inv_exc`.  Out-of-range arguments count as zero; sizes 0 and 1
    contribute only the empty cell.
    """
    table: InvExcTable = {}

    def lookup(n: int, length: int, exc: int) -> int:
        if length < 0 or exc < 0:
            return 0
        if n <= 1:
            return 1 if length == 0 and exc == 0 else 0
        return table.get((n, length, exc), 0)

    for n in range(1, n_max + 1):
        for length in range(0, n * (n - 1) // 2 + 1):
            for exc in range(0, n // 2 + 1):
                if n <= 3 or length <= 2 or exc == 0:
                    value = _base_inv_exc(n, length, exc)
                else:
                    value = (
                        lookup(n - 1, length, exc)
                        + lookup(n - 1, length - 2, exc)
                        + lookup(n - 2, length - 1, exc - 1)
                        - lookup(n - 2, length - 2, exc)
                        + lookup(n - 2, length - 3, exc - 1)
                        - lookup(n - 3, length - 3, exc - 1)
                    )
                if value:
                    table[(n, length, exc)] = value
    return table


def recurrence_rank_counts(n_max: int) -> RankTable:
    """
    Fill the rank table by the four-term recurrence

      r(n,k) = r(n-1,k) + r(n-1,k-1) + r(n-2,k-2) - r(n-3,k-2)

    for n >= 4 and k >= 2, with r(n,0) = 1 and r(n,1) = n-1, and sizes up
    to 3 seeded by brute force.
    """
    table: RankTable = dict(brute_rank_counts(min(n_max, 3)))

    def lookup(n: int, k: int) -> int:
        if k < 0:
            return 0
        if n <= 1:
            return 1 if k == 0 else 0
        return table.get((n, k), 0)

    for n in range(4, n_max + 1):
        for k in range(0, n):
            if k == 0:
                value = 1
            elif k == 1:
                value = n - 1
            else:
                value = (
                    lookup(n - 1, k)
                    + lookup(n - 1, k - 1)
                    + lookup(n - 2, k - 2)
                    - lookup(n - 3, k - 2)
                )
            if value:
                table[(n, k)] = value
    return table


def recurrence_totals(n_max: int) -> TotalTable:
    """
    Totals by t(n) = 2t(n-1) + t(n-2) - t(n-3) for n >= 4, seeded by brute
    force below that.
    """
    table: TotalTable = dict(brute_totals(min(n_max, 3)))
    for n in range(4, n_max + 1):
        table[n] = 2 * table[n - 1] + table[n - 2] - table.get(n - 3, 1)
    return table


def series_inv_exc_counts(n_max: int) -> InvExcTable:
    """Inversion/excedance table read off the three-variable series."""
    coeffs = inv_exc_series(n_max).coefficients
    return {key: value for key, value in coeffs.items() if key[0] >= 1}


def series_rank_counts(n_max: int) -> RankTable:
    coeffs = rank_series(n_max).coefficients
    return {key: value for key, value in coeffs.items() if key[0] >= 1}


def series_totals(n_max: int) -> TotalTable:
    coeffs = total_series(n_max).coefficients
    return {key[0]: value for key, value in coeffs.items() if key[0] >= 1}


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class CrossValidationReport:
    n_max: int
    checks: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def summary(self) -> str:
        lines = [
            f"{'PASS' if check.passed else 'FAIL'} {check.name}"
            + (f": {check.detail}" if check.detail else "")
            for check in self.checks
        ]
        lines.append(f"cross-validation n <= {self.n_max}: "
                     + ("all checks passed" if self.passed else "FAILURES above"))
        return "\n".join(lines)


def _compare_tables(name: str, tables: dict[str, dict]) -> CheckResult:
    items = list(tables.items())
    reference_name, reference = items[0]
    for other_name, other in items[1:]:
        keys = sorted(set(reference) | set(other))
        for key in keys:
            a, b = reference.get(key, 0), other.get(key, 0)
            if a != b:
                return CheckResult(
                    name,
                    False,
                    f"{reference_name}[{key}]={a} but {other_name}[{key}]={b}",
                )
    return CheckResult(name, True)


def cross_validate(n_max: int, jobs: int = 1) -> CrossValidationReport:
    """
    Check that all counting routes agree up to n_max: the three tables for
    each statistic, the marginalization identities between them, and the
    restricted Motzkin path counts against the totals.
    """
    if n_max > MAX_VALIDATE_N:
        raise ResourceLimitError(f"n_max {n_max} exceeds guard {MAX_VALIDATE_N}")
    brute_f = brute_inv_exc_counts(n_max, jobs) if n_max >= 1 else {}
    brute_g = rank_counts_from_inv_exc(brute_f)
    brute_h = totals_from_rank_counts(brute_g)
    checks = [
        _compare_tables(
            "inversion/excedance counts: brute = recurrence = series",
            {
                "brute": brute_f,
                "recurrence": recurrence_inv_exc_counts(n_max),
                "series": series_inv_exc_counts(n_max),
            },
        ),
        _compare_tables(
            "rank counts: brute = recurrence = series",
            {
                "brute": brute_g,
                "recurrence": recurrence_rank_counts(n_max),
                "series": series_rank_counts(n_max),
            },
        ),
        _compare_tables(
            "totals: brute = recurrence = series",
            {
                "brute": brute_h,
                "recurrence": recurrence_totals(n_max),
                "series": series_totals(n_max),
            },
        ),
        _compare_tables(
            "restricted Motzkin paths = totals",
            {
                "paths": {n: count_restricted(n) for n in range(1, n_max + 1)},
                "totals": brute_h,
            },
        ),
    ]
    return CrossValidationReport(n_max, tuple(checks))


def table_to_tsv(table: dict, columns: tuple[str, ...]) -> str:
    """Rows sorted by key; keys may be ints or tuples, last column the count."""
    lines = ["\t".join(columns)]
    for key in sorted(table):
        fields = key if isinstance(key, tuple) else (key,)
        lines.append("\t".join(str(f) for f in (*fields, table[key])))
    return "\n".join(lines) + "\n"


def table_to_json(table: dict) -> str:
    import json

    return json.dumps(
        {
            ",".join(str(f) for f in (key if isinstance(key, tuple) else (key,))): value
            for key, value in sorted(table.items())
        },
        sort_keys=True,
    )
