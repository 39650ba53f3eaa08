import json

import pytest

from boolinv.counting import (
    CrossValidationReport,
    brute_inv_exc_counts,
    brute_rank_counts,
    brute_totals,
    cross_validate,
    involutions,
    rank_counts_from_inv_exc,
    recurrence_inv_exc_counts,
    recurrence_rank_counts,
    recurrence_totals,
    series_inv_exc_counts,
    series_rank_counts,
    series_totals,
    signed_involutions,
    table_to_json,
    table_to_tsv,
    totals_from_rank_counts,
)
from boolinv.involution_words import ResourceLimitError
from boolinv.series import inv_exc_series, rank_series, total_series

INVOLUTION_COUNTS = [1, 1, 2, 4, 10, 26, 76, 232, 764, 2620]
SIGNED_COUNTS = [2, 6, 20, 76, 312, 1384]


def test_involution_stream_counts_and_order():
    for n, expected in enumerate(INVOLUTION_COUNTS):
        elements = list(involutions(n))
        assert len(elements) == expected
        words = [w.word for w in elements]
        assert words == sorted(words)
        assert len(set(words)) == expected


def test_involution_stream_guard():
    with pytest.raises(ResourceLimitError):
        next(involutions(15))
    with pytest.raises(ValueError, match="bad shard"):
        next(involutions(4, 3, 2))


def test_involution_stream_sharding():
    full = [w.word for w in involutions(6)]
    for num_shards in (2, 3, 5):
        shards = [
            [w.word for w in involutions(6, shard, num_shards)]
            for shard in range(num_shards)
        ]
        merged = [w for shard in shards for w in shard]
        assert sorted(merged) == full
        assert sum(len(s) for s in shards) == len(full)


def test_signed_stream_counts():
    for n, expected in enumerate(SIGNED_COUNTS, start=1):
        windows = [w.window for w in signed_involutions(n)]
        assert len(windows) == len(set(windows)) == expected
        assert windows == sorted(windows)
    with pytest.raises(ResourceLimitError):
        next(signed_involutions(8))


def test_signed_stream_sharding():
    full = sorted(w.window for w in signed_involutions(4))
    shards = [
        [w.window for w in signed_involutions(4, shard, 3)] for shard in range(3)
    ]
    assert sorted(w for s in shards for w in s) == full


def test_brute_base_cell_formulas():
    table = brute_inv_exc_counts(8)
    for n in range(1, 9):
        assert table[(n, 0, 0)] == 1
        if n >= 2:
            assert table.get((n, 1, 1), 0) == n - 1
        if n >= 4:
            assert table.get((n, 2, 2), 0) == (n * n - 5 * n + 6) // 2
    assert table[(3, 3, 1)] == 1
    assert (4, 2, 2) in table and table[(4, 2, 2)] == 1


def test_brute_guard():
    with pytest.raises(ResourceLimitError):
        brute_inv_exc_counts(13)


def test_recurrence_examples():
    table = recurrence_inv_exc_counts(5)
    assert table[(4, 2, 2)] == 1  # the single double-swap 2143
    assert table[(5, 3, 1)] == 3  # the three width-two transpositions
    assert recurrence_totals(5) == {1: 1, 2: 2, 3: 4, 4: 9, 5: 20}
    ranks = recurrence_rank_counts(4)
    assert [ranks.get((4, k), 0) for k in range(4)] == [1, 3, 3, 2]


def test_three_way_agreement_small():
    n_max = 8
    brute = brute_inv_exc_counts(n_max)
    assert brute == recurrence_inv_exc_counts(n_max) == series_inv_exc_counts(n_max)
    brute_g = brute_rank_counts(n_max)
    assert brute_g == recurrence_rank_counts(n_max) == series_rank_counts(n_max)
    brute_h = brute_totals(n_max)
    assert brute_h == recurrence_totals(n_max) == series_totals(n_max)


def test_marginalization():
    table = brute_inv_exc_counts(7)
    ranks = rank_counts_from_inv_exc(table)
    assert ranks == brute_rank_counts(7)
    assert totals_from_rank_counts(ranks) == brute_totals(7)
    # (inversions + excedances) is always even on involutions
    assert all((length + exc) % 2 == 0 for (_, length, exc) in table)


def test_series_examples():
    h = total_series(4)
    assert [h.coefficient((k,)) for k in range(1, 5)] == [1, 2, 4, 9]
    F = inv_exc_series(4)
    assert F.coefficient((4, 2, 2)) == 1
    assert all(F.coefficient((n, 0, 0)) == 1 for n in range(1, 5))
    g = rank_series(4)
    assert [g.coefficient((4, k)) for k in range(4)] == [1, 3, 3, 2]


def test_series_bounds_checking():
    h = total_series(4)
    with pytest.raises(ValueError, match="outside truncation"):
        h.coefficient((5,))
    with pytest.raises(ValueError, match="expected 1 exponents"):
        h.coefficient((1, 2))


def test_series_json():
    payload = json.loads(total_series(3).to_json())
    assert payload["variables"] == ["x"]
    assert payload["coefficients"] == {"1": 1, "2": 2, "3": 4}


def test_parallel_brute_matches_serial():
    assert brute_inv_exc_counts(6, jobs=2) == brute_inv_exc_counts(6)


def test_cross_validate():
    report = cross_validate(5)
    assert isinstance(report, CrossValidationReport)
    assert report.passed and len(report.checks) == 4
    assert "all checks passed" in report.summary()
    vacuous = cross_validate(0)
    assert vacuous.passed
    with pytest.raises(ResourceLimitError):
        cross_validate(11)


def test_exports():
    totals = brute_totals(3)
    tsv = table_to_tsv(totals, ("n", "count"))
    assert tsv.splitlines() == ["n\tcount", "1\t1", "2\t2", "3\t4"]
    assert json.loads(table_to_json(totals)) == {"1": 1, "2": 2, "3": 4}
    table = brute_inv_exc_counts(3)
    lines = table_to_tsv(table, ("n", "inversions", "excedances", "count")).splitlines()
    assert lines[0] == "n\tinversions\texcedances\tcount"
    assert "3\t3\t1\t1" in lines
