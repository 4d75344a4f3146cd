import pytest

from obci import scan
from obci.core import BudgetError


GOLDEN_COUNTS = {1: 1, 2: 2, 3: 10}


@pytest.mark.parametrize("n,count", sorted(GOLDEN_COUNTS.items()))
def test_pure_scan_counts(n, count):
    assert len(scan.valid_tables_py(n)) == count


def test_exact_size_two_models():
    # two models, both over the trivial cone {0}: the 2-chain and the
    # involutive table
    assert scan.valid_tables_py(2) == [
        ((0, 1, 0, 0), 0b01),
        ((0, 1, 1, 0), 0b01),
    ]


@pytest.mark.skipif(scan.valid_tables_fast is None,
                    reason="compiled backend not built")
@pytest.mark.parametrize("n", [1, 2, 3])
def test_backends_agree_exactly(n):
    assert scan.valid_tables_fast(n) == scan.valid_tables_py(n)


@pytest.mark.skipif(scan.valid_tables_fast is None,
                    reason="compiled backend not built")
def test_compiled_scan_handles_size_four():
    # 2^3 * 4^12 = 134217728 candidates; recorded golden: 167 models
    assert len(scan.valid_tables_fast(4)) == 167


def test_scan_results_have_identity_unit_row_and_unit_in_cone():
    for flat, cone_mask in scan.valid_tables(3):
        assert flat[:3] == (0, 1, 2)
        assert cone_mask & 1


def test_budget_guard():
    assert scan.candidate_count(2) == 4 * 2
    scan.check_budget(4, 200_000_000)
    with pytest.raises(BudgetError):
        scan.check_budget(5, 200_000_000)


def test_rejects_empty_carrier():
    with pytest.raises(ValueError):
        scan.valid_tables_py(0)
    if scan.valid_tables_fast is not None:
        with pytest.raises(ValueError):
            scan.valid_tables_fast(0)
