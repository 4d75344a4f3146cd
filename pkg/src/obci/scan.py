"""Backend selection for the enumeration scan.

The compiled kernel is optional; the pure-Python twin is always present.
`valid_tables` is the active backend, `valid_tables_py` always the pure
one, and `valid_tables_fast` is None when the extension is unavailable.
"""

from __future__ import annotations

from .core import BudgetError
from . import _pyscan

try:
    from . import _fastscan
except ImportError:
    _fastscan = None

BACKEND = "python" if _fastscan is None else "cython"

valid_tables_py = _pyscan.valid_tables
valid_tables_fast = None if _fastscan is None else _fastscan.valid_tables
valid_tables = valid_tables_py if _fastscan is None else _fastscan.valid_tables


def candidate_count(n: int) -> int:
    """Size of the pruned scan space for carrier size n."""
    return (1 << (n - 1)) * n ** (n * (n - 1))


def check_budget(n: int, budget: int | None) -> None:
    if budget is not None and candidate_count(n) > budget:
        raise BudgetError(
            f"scan space for size {n} has {candidate_count(n)} candidates, "
            f"exceeding the budget of {budget}"
        )
