import pytest

from boolinv.counting import (
    brute_inv_exc_counts,
    rank_counts_from_inv_exc,
    totals_from_rank_counts,
)


@pytest.fixture(scope="session")
def brute_table_12():
    """Boolean involution counts by (n, inversions, excedances) up to n=12,
    shared across the acceptance criteria."""
    return brute_inv_exc_counts(12)


@pytest.fixture(scope="session")
def brute_totals_12(brute_table_12):
    return totals_from_rank_counts(rank_counts_from_inv_exc(brute_table_12))
