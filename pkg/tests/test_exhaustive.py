import pytest

from cfasym.continuants import anticontinuant
from cfasym.errors import DomainError
from cfasym.exhaustive import (scan_small_anticontinuants,
                               scan_small_anticontinuants_reference)


def test_scanner_matches_reference():
    fast = sorted(scan_small_anticontinuants(6, 4, 6))
    slow = sorted(scan_small_anticontinuants_reference(6, 4, 6))
    assert fast == slow
    assert len(fast) > 0


@pytest.mark.parametrize("chunk", [1, 2, 4, 6])
def test_scanner_chunking_invariant(chunk):
    base = sorted(scan_small_anticontinuants(5, 3, 5))
    assert sorted(scan_small_anticontinuants(5, 3, 5, chunk_depth=chunk)) == base


def test_scanner_values_are_true_anticontinuants():
    for q, value in scan_small_anticontinuants(7, 3, 4):
        assert anticontinuant(q) == value
        assert 1 <= abs(value) <= 4


def test_scanner_finds_known_hits():
    hits = dict(scan_small_anticontinuants(4, 6, 5))
    assert hits[(5, 1)] == 4
    assert hits[(1, 5)] == -4
    assert hits[(2, 1, 2, 1)] == 4
    assert (3, 1, 1, 3) not in hits  # symmetric, value 0
    assert (2, 2) not in hits


def test_scanner_rejects_unsafe_bounds():
    with pytest.raises(DomainError):
        scan_small_anticontinuants(80, 200, 5).__next__()
    with pytest.raises(DomainError):
        next(scan_small_anticontinuants(0, 3, 5))
